#pragma once

#include <cstdint>
#include <random>

#include "phasetrop/valued_poly.hpp"

namespace phasetrop {

// Seeded generators of small random instances.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : rng_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
    std::mt19937_64& engine() { return rng_; }

    // p/q with |p| <= max_num, 1 <= q <= max_den.
    Rational rational(int max_num, int max_den);
    // Nonzero Gaussian rational with small parts.
    Coeff coeff(bool allow_imag = true);
    // Exponent in [-range, range] with denominator at most max_den.
    Exponent exponent(int range, int max_den);
    // Nonzero Laurent polynomial in t with up to max_terms terms.
    HahnPoly hahn_poly(int max_terms, int range, int max_den);
    // Nonzero scalar, a fraction with probability p_fraction.
    HahnScalar scalar(int max_terms = 3, int range = 3, int max_den = 2, double p_fraction = 0.2);
    // Nonzero polynomial with up to max_terms terms of degree at most max_deg.
    ValuedPoly poly(std::size_t nvars, int max_deg, int max_terms, int range = 3, int max_den = 2);
    // Nonconstant polynomial with 2..max_terms terms whose coefficients are single monomials
    // c*t^e with c a small Gaussian integer.
    ValuedPoly sparse_poly(std::size_t nvars, int max_deg, int max_terms, int range = 2, int max_den = 1);
    // Nonzero homogeneous polynomial over Q(i) of the given degree.
    ComplexPoly homogeneous(std::size_t nvars, int deg, int max_terms);
    MonomialExp monomial(std::size_t nvars, int deg);

private:
    std::mt19937_64 rng_;
};

}  // namespace phasetrop
