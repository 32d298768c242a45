#include "hsss/rng.hpp"

#include <openssl/rand.h>

#include "hsss/error.hpp"
#include "hsss/hashcore.hpp"

namespace hsss {

std::uint64_t Rng::next_u64()
{
    std::array<std::uint8_t, 8> b{};
    fill(b);
    std::uint64_t v = 0;
    for (std::uint8_t x : b)
        v = v << 8 | x;
    return v;
}

std::uint64_t Rng::below(std::uint64_t bound)
{
    // rejection sampling over the top of the range
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound + 1) % bound;
    for (;;) {
        std::uint64_t v = next_u64();
        if (v <= limit)
            return v % bound;
    }
}

void SystemRng::fill(std::span<std::uint8_t> out)
{
    if (out.empty())
        return;
    if (RAND_bytes(out.data(), static_cast<int>(out.size())) != 1)
        throw Error("system entropy source failed");
}

static void put_be64(std::uint8_t* p, std::uint64_t v)
{
    for (int i = 7; i >= 0; --i) {
        p[i] = static_cast<std::uint8_t>(v & 0xff);
        v >>= 8;
    }
}

void SeededRng::fill(std::span<std::uint8_t> out)
{
    std::size_t done = 0;
    while (done < out.size()) {
        if (block_used_ == block_.size()) {
            std::array<std::uint8_t, 16> input{};
            put_be64(input.data(), seed_);
            put_be64(input.data() + 8, counter_++);
            block_ = hash(std::span<const std::uint8_t>(input)).bytes;
            block_used_ = 0;
        }
        std::size_t n = std::min(out.size() - done, block_.size() - block_used_);
        std::copy_n(block_.begin() + static_cast<std::ptrdiff_t>(block_used_), n,
                    out.begin() + static_cast<std::ptrdiff_t>(done));
        block_used_ += n;
        done += n;
    }
}

} // namespace hsss
