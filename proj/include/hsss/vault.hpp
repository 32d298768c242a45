#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hsss/bytes.hpp"
#include "hsss/hashcore.hpp"
#include "hsss/rng.hpp"

namespace hsss {

inline constexpr std::size_t kNonceLen = 12; // 96-bit GCM nonce
inline constexpr std::size_t kTagLen = 16;   // 128-bit tag
inline constexpr const char* kCipherId = "aes256gcm";

// One secret sealed under its derived key k_j. Ciphertext length equals
// plaintext length; the index is bound by file position, not associated data.
struct VaultEntry {
    std::size_t index = 0;
    std::array<std::uint8_t, kNonceLen> nonce{};
    Bytes ciphertext;
    std::array<std::uint8_t, kTagLen> tag{};

    bool operator==(const VaultEntry&) const = default;
};

struct VaultFile {
    std::uint64_t epoch = 0;
    std::vector<VaultEntry> entries; // ascending index

    bool operator==(const VaultFile&) const = default;
};

// AES-256-GCM under the first 32 bytes of the 64-byte key, fresh random
// nonce, empty associated data. The secret must be non-empty.
VaultEntry seal(std::size_t index, const Bytes& secret, const SecretKey& key, Rng& rng);

// Returns the plaintext iff the tag verifies; throws AuthenticationError
// otherwise and emits nothing.
Bytes open_entry(const VaultEntry& entry, const SecretKey& key);

std::string vault_to_string(const VaultFile& vault);
VaultFile vault_from_string(const std::string& text);

} // namespace hsss
