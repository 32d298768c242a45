#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hsss/bytes.hpp"

namespace hsss {

// The scheme is fixed to a 512-bit hash (SHA-512); shares, digests and
// derived keys all live in the same 512-bit domain.
inline constexpr std::size_t kDigestLen = 64;
inline constexpr std::size_t kShareLen = 64;
inline constexpr const char* kHashAlgId = "sha512";

struct Digest {
    std::array<std::uint8_t, kDigestLen> bytes{};

    auto operator<=>(const Digest&) const = default;
};

// A participant share: a fixed-length random bit-string. The empty share is
// the neutral dealer share and is legal anywhere a Share is accepted.
struct Share {
    Bytes bytes;

    bool empty() const { return bytes.empty(); }
    auto operator<=>(const Share&) const = default;
};

// Derived secret key k_j; same domain as Digest.
struct SecretKey {
    std::array<std::uint8_t, kDigestLen> bytes{};

    auto operator<=>(const SecretKey&) const = default;
};

// SHA-512 of an arbitrary byte string.
Digest hash(std::span<const std::uint8_t> data);
Digest hash(const Bytes& data);
Digest hash(const Digest& d);

// The ordering operator phi: distinct shares sorted ascending by unsigned
// lexicographic byte order; duplicates and empty shares dropped.
std::vector<Share> order_shares(std::vector<Share> shares);

// The concatenation operator gamma over an already ordered list.
Bytes concat_shares(const std::vector<Share>& ordered);

// xi = gamma(phi(basis)); invariant under permutation and duplication.
Bytes xi(const std::vector<Share>& basis);

// k = h(q || xi(basis)). Raw-byte concatenation: q is a fixed 64-byte
// string, so the encoding is prefix-free without framing.
SecretKey derive_key(const Digest& q, const std::vector<Share>& basis);

std::string digest_to_hex(const Digest& d);
Digest digest_from_hex(std::string_view hex);

// A 512-bit share is exactly 128 hex chars; the empty share encodes as "-".
std::string share_to_hex(const Share& s);
Share share_from_hex(std::string_view hex);

} // namespace hsss
