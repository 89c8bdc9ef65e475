#pragma once

#include <string>
#include <utility>
#include <vector>

#include "phasetrop/coeff.hpp"
#include "phasetrop/monomial.hpp"

namespace phasetrop {

// Polynomial over Q(i); terms sorted by GrlexGreater, no zero coefficients.
class ComplexPoly {
public:
    using Term = std::pair<MonomialExp, Coeff>;

    ComplexPoly() = default;
    explicit ComplexPoly(std::size_t nvars) : n_(nvars) {}
    ComplexPoly(std::size_t nvars, const Coeff& c);
    static ComplexPoly variable(std::size_t nvars, std::size_t var);
    static ComplexPoly monomial(const MonomialExp& m, const Coeff& c);
    static ComplexPoly from_terms(std::size_t nvars, std::vector<Term> terms);

    std::size_t nvars() const { return n_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
    int total_degree() const { return terms_.empty() ? -1 : terms_.front().first.total(); }
    bool is_homogeneous() const;
    Coeff coefficient(const MonomialExp& m) const;

    ComplexPoly operator-() const;
    friend ComplexPoly operator+(const ComplexPoly& a, const ComplexPoly& b);
    friend ComplexPoly operator-(const ComplexPoly& a, const ComplexPoly& b) { return a + (-b); }
    friend ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b);
    ComplexPoly scaled(const Coeff& c) const;
    ComplexPoly pow(unsigned k) const;
    friend bool operator==(const ComplexPoly& a, const ComplexPoly& b)
    {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const ComplexPoly& a, const ComplexPoly& b) { return !(a == b); }

    Coeff evaluate(const std::vector<Coeff>& point) const;
    // Replace X_i by images[i]; images share a common variable count.
    ComplexPoly substitute(const std::vector<ComplexPoly>& images) const;
    ComplexPoly derivative(std::size_t var) const;
    // Same terms in a ring with a different number of variables (appended or dropped trailing).
    ComplexPoly resized(std::size_t nvars) const;

    std::string str(const std::vector<std::string>& names) const;
    // Names X1..Xn.
    std::string str() const;

private:
    std::size_t n_ = 0;
    std::vector<Term> terms_;
};

std::vector<std::string> default_names(std::size_t nvars, const std::string& stem);

}  // namespace phasetrop
