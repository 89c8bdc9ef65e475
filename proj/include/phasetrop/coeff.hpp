#pragma once

#include <complex>
#include <string>

#include "phasetrop/rational.hpp"

namespace phasetrop {

// Gaussian rational re + im*i.
class Coeff {
public:
    Coeff() = default;
    Coeff(long v) : re_(v) {}
    Coeff(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {}
    static Coeff imag_unit() { return Coeff(0, 1); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    Coeff conj() const { return {re_, -im_}; }
    Rational norm2() const { return re_ * re_ + im_ * im_; }
    Coeff inverse() const;
    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

    Coeff operator-() const { return {-re_, -im_}; }
    Coeff& operator+=(const Coeff& b);
    Coeff& operator-=(const Coeff& b);
    Coeff& operator*=(const Coeff& b);
    Coeff& operator/=(const Coeff& b) { return *this *= b.inverse(); }

    friend Coeff operator+(Coeff a, const Coeff& b) { return a += b; }
    friend Coeff operator-(Coeff a, const Coeff& b) { return a -= b; }
    friend Coeff operator*(Coeff a, const Coeff& b) { return a *= b; }
    friend Coeff operator/(Coeff a, const Coeff& b) { return a /= b; }
    friend bool operator==(const Coeff& a, const Coeff& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator!=(const Coeff& a, const Coeff& b) { return !(a == b); }

    // Total order used only for canonical sorting.
    friend bool operator<(const Coeff& a, const Coeff& b)
    {
        return a.re_ != b.re_ ? a.re_ < b.re_ : a.im_ < b.im_;
    }

    // Printed so that it parses back as a single factor: "3", "-1/2", "2*i", "(1+2*i)".
    std::string str() const;
    // True when str() starts with a minus sign that can be lifted into a sum.
    bool prints_negative() const;

private:
    Rational re_{0};
    Rational im_{0};
};

}  // namespace phasetrop
