#include "hsss/shamir.hpp"

#include <set>

#include "hsss/error.hpp"

namespace hsss::shamir {

PrimeField::PrimeField(Int p) : p_(std::move(p))
{
    if (p_ < 2)
        throw ConfigError("field prime must be at least 2");
}

Int PrimeField::reduce(const Int& a) const
{
    Int r = a % p_;
    if (r < 0)
        r += p_;
    return r;
}

Int PrimeField::add(const Int& a, const Int& b) const
{
    return reduce(a + b);
}

Int PrimeField::sub(const Int& a, const Int& b) const
{
    return reduce(a - b);
}

Int PrimeField::mul(const Int& a, const Int& b) const
{
    return reduce(a * b);
}

Int PrimeField::pow(Int base, Int exp) const
{
    base = reduce(base);
    Int result = 1;
    while (exp > 0) {
        if (bit_test(exp, 0))
            result = mul(result, base);
        base = mul(base, base);
        exp >>= 1;
    }
    return result;
}

Int PrimeField::inv(const Int& a) const
{
    Int r = reduce(a);
    if (r == 0)
        throw Error("zero has no inverse");
    return pow(r, p_ - 2);
}

Int PrimeField::random_element(Rng& rng) const
{
    // rejection sampling over whole bytes
    std::size_t bits = msb(p_ - 1) + 1;
    std::size_t nbytes = (bits + 7) / 8;
    for (;;) {
        Bytes raw = rng.bytes(nbytes);
        Int v = 0;
        for (std::uint8_t b : raw)
            v = (v << 8) | b;
        if (v < p_)
            return v;
    }
}

const Int& default_prime()
{
    static const Int p = (Int(1) << 255) - 19;
    return p;
}

std::vector<ShamirShare> split(const Int& secret, std::size_t t, std::size_t n,
                               const PrimeField& field, Rng& rng)
{
    if (t < 1)
        throw ConfigError("threshold must be at least 1");
    if (t > n)
        throw ConfigError("threshold exceeds participant count");
    if (secret < 0 || secret >= field.prime())
        throw ConfigError("secret must lie in [0, p)");
    if (Int(n) >= field.prime())
        throw ConfigError("participant count must be below the field prime");

    // coefficients a_0 = secret, a_1..a_{t-1} random
    std::vector<Int> coeffs;
    coeffs.reserve(t);
    coeffs.push_back(secret);
    for (std::size_t i = 1; i < t; ++i)
        coeffs.push_back(field.random_element(rng));

    std::vector<ShamirShare> shares;
    shares.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) {
        Int x = i;
        // Horner evaluation
        Int y = 0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
            y = field.add(field.mul(y, x), *it);
        shares.push_back(ShamirShare{x, y});
    }
    return shares;
}

Int reconstruct(const std::vector<ShamirShare>& shares, std::size_t t, const PrimeField& field)
{
    if (t < 1)
        throw ConfigError("threshold must be at least 1");
    if (shares.size() < t)
        throw InsufficientSharesError(shares.size(), t);

    std::set<Int> seen;
    for (std::size_t i = 0; i < t; ++i)
        if (!seen.insert(field.reduce(shares[i].x)).second)
            throw ConfigError("duplicate x coordinate in shares");

    // Lagrange basis at x = 0: prod_{k != i} x_k / (x_k - x_i)
    Int secret = 0;
    for (std::size_t i = 0; i < t; ++i) {
        Int num = 1;
        Int den = 1;
        for (std::size_t k = 0; k < t; ++k) {
            if (k == i)
                continue;
            num = field.mul(num, shares[k].x);
            den = field.mul(den, field.sub(shares[k].x, shares[i].x));
        }
        Int term = field.mul(shares[i].y, field.mul(num, field.inv(den)));
        secret = field.add(secret, term);
    }
    return secret;
}

} // namespace hsss::shamir
