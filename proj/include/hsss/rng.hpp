#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "hsss/bytes.hpp"

namespace hsss {

// Entropy source. Dealer operations take an Rng& so tests and the CLI
// can run fully deterministic with a seed.
class Rng {
public:
    virtual ~Rng() = default;
    virtual void fill(std::span<std::uint8_t> out) = 0;

    Bytes bytes(std::size_t n)
    {
        Bytes b(n);
        fill(b);
        return b;
    }

    std::uint64_t next_u64();

    // Unbiased value in [0, bound); bound must be nonzero.
    std::uint64_t below(std::uint64_t bound);
};

// OS entropy via OpenSSL RAND_bytes.
class SystemRng final : public Rng {
public:
    void fill(std::span<std::uint8_t> out) override;
};

// Deterministic stream: block i = SHA-512(seed_be64 || counter_be64).
// Stable across platforms and runs.
class SeededRng final : public Rng {
public:
    explicit SeededRng(std::uint64_t seed) : seed_(seed) {}
    void fill(std::span<std::uint8_t> out) override;

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
    std::array<std::uint8_t, 64> block_{};
    std::size_t block_used_ = 64; // start exhausted
};

} // namespace hsss
