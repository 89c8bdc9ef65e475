#include "phasetrop/coeff.hpp"

namespace phasetrop {

std::string to_string(const Rational& q)
{
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text)
{
    Rational q;
    if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0)
        throw PreconditionError("not a rational number: '" + text + "'");
    q.canonicalize();
    return q;
}

Integer lcm(const Integer& a, const Integer& b)
{
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Integer gcd(const Integer& a, const Integer& b)
{
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

const Exponent& ExtExponent::value() const
{
    if (!v_) throw PreconditionError("value of -inf requested");
    return *v_;
}

bool operator==(const ExtExponent& a, const ExtExponent& b)
{
    if (a.is_neg_inf() || b.is_neg_inf()) return a.is_neg_inf() == b.is_neg_inf();
    return *a.v_ == *b.v_;
}

bool operator<(const ExtExponent& a, const ExtExponent& b)
{
    if (b.is_neg_inf()) return false;
    if (a.is_neg_inf()) return true;
    return *a.v_ < *b.v_;
}

ExtExponent operator+(const ExtExponent& a, const ExtExponent& b)
{
    if (a.is_neg_inf() || b.is_neg_inf()) return {};
    return ExtExponent(*a.v_ + *b.v_);
}

Coeff Coeff::inverse() const
{
    if (is_zero()) throw std::domain_error("division by zero coefficient");
    Rational n = norm2();
    return {re_ / n, -im_ / n};
}

Coeff& Coeff::operator+=(const Coeff& b)
{
    re_ += b.re_;
    im_ += b.im_;
    return *this;
}

Coeff& Coeff::operator-=(const Coeff& b)
{
    re_ -= b.re_;
    im_ -= b.im_;
    return *this;
}

Coeff& Coeff::operator*=(const Coeff& b)
{
    if (is_real() && b.is_real()) {
        re_ *= b.re_;
        return *this;
    }
    Rational r = re_ * b.re_ - im_ * b.im_;
    Rational i = re_ * b.im_ + im_ * b.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

static std::string imag_part(const Rational& q)
{
    if (q == 1) return "i";
    if (q == -1) return "-i";
    return to_string(q) + "*i";
}

std::string Coeff::str() const
{
    if (is_real()) return to_string(re_);
    if (sgn(re_) == 0) return imag_part(im_);
    std::string s = "(" + to_string(re_);
    s += sgn(im_) > 0 ? "+" + imag_part(im_) : imag_part(im_);
    return s + ")";
}

bool Coeff::prints_negative() const
{
    if (is_real()) return sgn(re_) < 0;
    return sgn(re_) == 0 && sgn(im_) < 0;
}

}  // namespace phasetrop
