#include "doctest.h"

#include <bit>
#include <vector>

#include "hsss/error.hpp"
#include "hsss/rng.hpp"
#include "hsss/shamir.hpp"

using namespace hsss;
using namespace hsss::shamir;

TEST_CASE("field arithmetic in GF(257)") {
    PrimeField f(257);
    CHECK(f.add(200, 100) == 43);
    CHECK(f.sub(3, 5) == 255);
    CHECK(f.mul(16, 17) == 15);
    CHECK(f.pow(3, 100) == 67); // 3^100 mod 257, frozen from an independent calculation
    CHECK(f.reduce(-1) == 256);
    CHECK(f.reduce(257) == 0);
    for (int a = 1; a < 257; ++a) {
        CHECK(f.mul(a, f.inv(a)) == 1);
    }
    CHECK_THROWS(f.inv(0));
}

TEST_CASE("random field elements are uniform in range") {
    PrimeField f(257);
    SeededRng rng(9);
    bool high_seen = false;
    for (int i = 0; i < 2000; ++i) {
        Int v = f.random_element(rng);
        REQUIRE(v >= 0);
        REQUIRE(v < 257);
        high_seen |= v > 200;
    }
    CHECK(high_seen); // rejection sampling must not truncate the range
}

TEST_CASE("reconstruct matches a hand-built polynomial over GF(257)") {
    // f(x) = 123 + 45x (mod 257): f(1)=168, f(2)=213, f(3)=1
    PrimeField f(257);
    std::vector<ShamirShare> shares{{1, 168}, {2, 213}, {3, 1}};
    CHECK(reconstruct({shares[0], shares[1]}, 2, f) == 123);
    CHECK(reconstruct({shares[0], shares[2]}, 2, f) == 123);
    CHECK(reconstruct({shares[1], shares[2]}, 2, f) == 123);
    // all three points still interpolate the same constant term
    CHECK(reconstruct(shares, 2, f) == 123);
}

TEST_CASE("degree-0 split hands the secret to everyone") {
    PrimeField f(257);
    SeededRng rng(3);
    auto shares = split(77, 1, 4, f, rng);
    REQUIRE(shares.size() == 4);
    for (const auto& s : shares) CHECK(s.y == 77);
    CHECK(reconstruct({shares[2]}, 1, f) == 77);
}

TEST_CASE("split then reconstruct round-trips in the default field") {
    const PrimeField f(default_prime());
    SeededRng rng(21);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 2 + rng.below(10);
        std::size_t t = 1 + rng.below(n);
        Int secret = f.random_element(rng);
        auto shares = split(secret, t, n, f, rng);
        REQUIRE(shares.size() == n);
        for (std::size_t i = 0; i < n; ++i) CHECK(shares[i].x == i + 1);
        std::vector<ShamirShare> subset(shares.begin(), shares.begin() + t);
        CHECK(reconstruct(subset, t, f) == secret);
    }
}

TEST_CASE("every t-subset reconstructs the same secret") {
    const PrimeField f(default_prime());
    SeededRng rng(33);
    for (std::size_t n = 2; n <= 6; ++n) {
        for (std::size_t t = 1; t <= n; ++t) {
            Int secret = f.random_element(rng);
            auto shares = split(secret, t, n, f, rng);
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                if (static_cast<std::size_t>(std::popcount(mask)) != t) continue;
                std::vector<ShamirShare> subset;
                for (std::size_t i = 0; i < n; ++i)
                    if (mask & (1u << i)) subset.push_back(shares[i]);
                REQUIRE(reconstruct(subset, t, f) == secret);
            }
        }
    }
}

TEST_CASE("fewer than t shares reconstruct a different value") {
    // With t-1 points the interpolation is underdetermined; check that the
    // naive attempt (treating t-1 points as a full set) misses the secret.
    PrimeField f(257);
    SeededRng rng(8);
    int misses = 0;
    for (int trial = 0; trial < 200; ++trial) {
        auto shares = split(100, 3, 5, f, rng);
        Int guess = reconstruct({shares[0], shares[1]}, 2, f);
        misses += guess != 100;
    }
    CHECK(misses > 150); // equality only by field-sized accident
}

TEST_CASE("split validates its arguments") {
    PrimeField f(257);
    SeededRng rng(4);
    CHECK_THROWS_AS(split(1, 0, 3, f, rng), ConfigError);
    CHECK_THROWS_AS(split(1, 4, 3, f, rng), ConfigError);
    CHECK_THROWS_AS(split(257, 2, 3, f, rng), ConfigError);
    CHECK_THROWS_AS(split(-1, 2, 3, f, rng), ConfigError);
    CHECK_THROWS_AS(split(1, 2, 300, f, rng), ConfigError); // x values would wrap
}

TEST_CASE("reconstruct validates its arguments") {
    PrimeField f(257);
    SeededRng rng(5);
    auto shares = split(42, 3, 5, f, rng);
    CHECK_THROWS_AS(reconstruct({shares[0], shares[1]}, 3, f), InsufficientSharesError);
    CHECK_THROWS_AS(reconstruct({shares[0], shares[0], shares[1]}, 3, f), ConfigError);
    CHECK_THROWS_AS(reconstruct(shares, 0, f), ConfigError);
}

TEST_CASE("default prime is 2^255 - 19") {
    Int expected = (Int(1) << 255) - 19;
    CHECK(default_prime() == expected);
    CHECK_NOTHROW(PrimeField{default_prime()});
}
