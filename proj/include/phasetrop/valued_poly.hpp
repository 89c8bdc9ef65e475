#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "phasetrop/complex_poly.hpp"
#include "phasetrop/hahn.hpp"

namespace phasetrop {

using WeightVector = std::vector<Exponent>;

WeightVector diagonal_weight(std::size_t nvars, const Exponent& alpha);

// Polynomial over the Hahn field; terms keyed by exponent vector in graded-lex order.
class ValuedPoly {
public:
    using TermMap = std::map<MonomialExp, HahnScalar, GrlexGreater>;

    ValuedPoly() = default;
    explicit ValuedPoly(std::size_t nvars) : n_(nvars) {}
    ValuedPoly(std::size_t nvars, const HahnScalar& c);
    static ValuedPoly variable(std::size_t nvars, std::size_t var);
    static ValuedPoly monomial(const MonomialExp& m, const HahnScalar& c);
    // Coefficients from a complex polynomial.
    static ValuedPoly from_complex(const ComplexPoly& p);

    std::size_t nvars() const { return n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }
    int total_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.total(); }
    bool is_homogeneous() const;
    HahnScalar coefficient(const MonomialExp& m) const;
    Integer exponent_denominator() const;

    void add_term(const MonomialExp& m, const HahnScalar& c);

    ValuedPoly operator-() const;
    friend ValuedPoly operator+(const ValuedPoly& a, const ValuedPoly& b);
    friend ValuedPoly operator-(const ValuedPoly& a, const ValuedPoly& b) { return a + (-b); }
    friend ValuedPoly operator*(const ValuedPoly& a, const ValuedPoly& b);
    ValuedPoly scaled(const HahnScalar& c) const;
    ValuedPoly pow(unsigned k) const;
    friend bool operator==(const ValuedPoly& a, const ValuedPoly& b)
    {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const ValuedPoly& a, const ValuedPoly& b) { return !(a == b); }

    HahnScalar evaluate(const std::vector<HahnScalar>& point) const;
    ValuedPoly substitute(const std::vector<ValuedPoly>& images) const;
    ValuedPoly derivative(std::size_t var) const;
    ValuedPoly resized(std::size_t nvars) const;

    std::string str(const std::vector<std::string>& names) const;
    std::string str() const;

private:
    std::size_t n_ = 0;
    TermMap terms_;
};

// nu_gamma(c_u x^u) = nu(c_u) + u.gamma, maximized over the terms.
ExtExponent monomial_valuation(const ValuedPoly& f, const WeightVector& gamma);
ExtExponent monomial_valuation(const ValuedPoly& f, const Exponent& alpha);
ValuedPoly leading_part(const ValuedPoly& f, const WeightVector& gamma);

struct InitialPoly {
    Exponent value;
    ComplexPoly rep;
};

// IN at the diagonal weight (alpha,...,alpha): leading coefficients of the argmax terms.
InitialPoly initial_poly(const ValuedPoly& f, const Exponent& alpha);
InitialPoly initial_poly(const ValuedPoly& f, const WeightVector& gamma);

struct TropicalPiece {
    int slope;
    Exponent intercept;
    friend bool operator==(const TropicalPiece&, const TropicalPiece&) = default;
};

// alpha -> max(intercept + slope*alpha), one piece per slope.
class TropicalPoly {
public:
    explicit TropicalPoly(std::vector<TropicalPiece> pieces);
    const std::vector<TropicalPiece>& pieces() const { return pieces_; }
    Exponent eval(const Exponent& alpha) const;
    // Slopes attaining the max for some alpha.
    std::vector<int> realized_slopes() const;
    std::vector<Exponent> roots() const;

private:
    std::vector<TropicalPiece> pieces_;  // sorted by slope
};

TropicalPoly tropical_poly(const ValuedPoly& f);
std::vector<Exponent> tropical_roots(const ValuedPoly& f);
ValuedPoly tilde_reduce(const ValuedPoly& f);

// Appends the homogenizing variable x0 as the last variable.
ValuedPoly homogenize(const ValuedPoly& f);
// Sets the last variable to 1 and drops it.
ValuedPoly dehomogenize(const ValuedPoly& F);

// Linear change of variables x_i -> sum_j matrix[i][j] * y_{perm[j]}.
struct LinearMap {
    std::vector<std::vector<HahnScalar>> matrix;
    std::vector<std::size_t> perm;  // empty means identity

    std::size_t size() const { return matrix.size(); }
    std::size_t target(std::size_t j) const { return perm.empty() ? j : perm[j]; }
    ValuedPoly image(std::size_t i) const;
    void check() const;
};

ValuedPoly linear_substitute(const ValuedPoly& f, const LinearMap& phi);
// Image of an initial polynomial under the graded map induced by phi at level alpha.
ComplexPoly graded_substitute(const ComplexPoly& F, const Exponent& alpha, const LinearMap& phi);

// Inverse of a square matrix over the Hahn field; throws when singular.
std::vector<std::vector<HahnScalar>> invert(const std::vector<std::vector<HahnScalar>>& m);

}  // namespace phasetrop
