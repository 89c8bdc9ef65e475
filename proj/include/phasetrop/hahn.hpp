#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "phasetrop/coeff.hpp"

namespace phasetrop {

// Homogeneous element c*t^degree of the graded ring.
struct GradedMonomial {
    Exponent degree;
    Coeff coeff;

    friend GradedMonomial operator*(const GradedMonomial& a, const GradedMonomial& b)
    {
        return {a.degree + b.degree, a.coeff * b.coeff};
    }
    friend bool operator==(const GradedMonomial& a, const GradedMonomial& b)
    {
        return a.degree == b.degree && a.coeff == b.coeff;
    }
};

// Finite sum of c*t^e, sorted by descending exponent, no zero coefficients.
class HahnPoly {
public:
    using Term = std::pair<Exponent, Coeff>;

    HahnPoly() = default;
    HahnPoly(const Coeff& c) : HahnPoly(c, 0) {}
    HahnPoly(long c) : HahnPoly(Coeff(c), 0) {}
    HahnPoly(const Coeff& c, const Exponent& e);
    static HahnPoly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    ExtExponent valuation() const;
    Exponent min_exponent() const;
    const Coeff& leading_coeff() const;
    // lcm of the exponent denominators
    Integer exponent_denominator() const;

    HahnPoly operator-() const;
    friend HahnPoly operator+(const HahnPoly& a, const HahnPoly& b);
    friend HahnPoly operator-(const HahnPoly& a, const HahnPoly& b) { return a + (-b); }
    friend HahnPoly operator*(const HahnPoly& a, const HahnPoly& b);
    HahnPoly scaled(const Coeff& c, const Exponent& shift) const;
    friend bool operator==(const HahnPoly& a, const HahnPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const HahnPoly& a, const HahnPoly& b) { return !(a == b); }

    std::complex<double> evaluate(double s) const;
    std::string str() const;

private:
    std::vector<Term> terms_;
};

// Element num/den of the field, kept in a canonical normal form:
// den is a polynomial in t^(1/N) with nonzero constant term and leading coefficient 1,
// coprime to num; a monomial denominator is folded into num.
class HahnScalar {
public:
    HahnScalar() : den_(1) {}
    HahnScalar(long c) : num_(c), den_(1) {}
    HahnScalar(const Coeff& c) : num_(c), den_(1) {}
    HahnScalar(HahnPoly p) : num_(std::move(p)), den_(1) {}
    HahnScalar(HahnPoly num, HahnPoly den);
    static HahnScalar monomial(const Coeff& c, const Exponent& e) { return HahnPoly(c, e); }
    static HahnScalar t_power(const Exponent& e) { return HahnPoly(Coeff(1), e); }

    const HahnPoly& num() const { return num_; }
    const HahnPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.size() == 1; }
    bool is_constant() const;
    Integer exponent_denominator() const;

    HahnScalar operator-() const;
    HahnScalar inverse() const;
    HahnScalar& operator+=(const HahnScalar& b) { return *this = *this + b; }
    HahnScalar& operator-=(const HahnScalar& b) { return *this = *this - b; }
    HahnScalar& operator*=(const HahnScalar& b) { return *this = *this * b; }
    friend HahnScalar operator+(const HahnScalar& a, const HahnScalar& b);
    friend HahnScalar operator-(const HahnScalar& a, const HahnScalar& b) { return a + (-b); }
    friend HahnScalar operator*(const HahnScalar& a, const HahnScalar& b);
    friend HahnScalar operator/(const HahnScalar& a, const HahnScalar& b);
    friend bool operator==(const HahnScalar& a, const HahnScalar& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const HahnScalar& a, const HahnScalar& b) { return !(a == b); }

    std::string str() const;

private:
    void normalize();
    HahnPoly num_;
    HahnPoly den_;
};

ExtExponent valuation(const HahnScalar& a);
GradedMonomial initial_form(const HahnScalar& a);
Coeff residue(const HahnScalar& a);
// Value at t = e^s.
std::complex<double> evaluate_numeric(const HahnScalar& a, double s);
// Keep only the leading monomial.
HahnScalar leading_monomial(const HahnScalar& a);

}  // namespace phasetrop
