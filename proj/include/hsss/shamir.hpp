#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hsss/rng.hpp"

namespace hsss::shamir {

using Int = boost::multiprecision::cpp_int;

// Arithmetic in GF(p) for a public prime p. The default prime is the
// 255-bit 2^255 - 19; any odd prime works (tests use p = 257).
class PrimeField {
public:
    explicit PrimeField(Int p);

    const Int& prime() const { return p_; }

    Int add(const Int& a, const Int& b) const;
    Int sub(const Int& a, const Int& b) const;
    Int mul(const Int& a, const Int& b) const;
    Int pow(Int base, Int exp) const;
    Int inv(const Int& a) const; // Fermat: a^(p-2)
    Int reduce(const Int& a) const;

    Int random_element(Rng& rng) const; // uniform in [0, p)

private:
    Int p_;
};

const Int& default_prime(); // 2^255 - 19

struct ShamirShare {
    Int x; // nonzero, distinct per participant
    Int y;
};

// Degree t-1 polynomial with constant term = secret and random remaining
// coefficients, evaluated at x = 1..n.
std::vector<ShamirShare> split(const Int& secret, std::size_t t, std::size_t n,
                               const PrimeField& field, Rng& rng);

// Lagrange interpolation at x = 0 over the first t shares.
Int reconstruct(const std::vector<ShamirShare>& shares, std::size_t t, const PrimeField& field);

} // namespace hsss::shamir
