#include "phasetrop/hahn.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace phasetrop {

namespace {

// Dense univariate polynomial over Q(i), index = degree.
using Dense = std::vector<Coeff>;

void trim(Dense& p)
{
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Returns quotient, leaves remainder in a.
Dense divmod(Dense& a, const Dense& b)
{
    if (a.size() < b.size()) return {};
    Dense q(a.size() - b.size() + 1);
    Coeff inv = b.back().inverse();
    for (std::size_t k = q.size(); k-- > 0;) {
        Coeff c = a[k + b.size() - 1] * inv;
        if (c.is_zero()) continue;
        q[k] = c;
        for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
    }
    trim(a);
    return q;
}

Dense dense_gcd(Dense a, Dense b)
{
    while (!b.empty()) {
        divmod(a, b);
        std::swap(a, b);
    }
    Coeff inv = a.back().inverse();
    for (auto& c : a) c *= inv;
    return a;
}

Dense to_dense(const HahnPoly& p, const Exponent& shift, const Integer& n)
{
    Dense d;
    for (const auto& [e, c] : p.terms()) {
        Rational k = (e - shift) * n;
        std::size_t idx = k.get_num().get_ui();
        if (d.size() <= idx) d.resize(idx + 1);
        d[idx] = c;
    }
    return d;
}

HahnPoly from_dense(const Dense& d, const Integer& n, const Exponent& shift)
{
    std::vector<HahnPoly::Term> terms;
    for (std::size_t k = d.size(); k-- > 0;) {
        if (d[k].is_zero()) continue;
        Rational e(Integer(static_cast<unsigned long>(k)), n);
        e.canonicalize();
        terms.emplace_back(e + shift, d[k]);
    }
    return HahnPoly::from_terms(std::move(terms));
}

std::string t_power(const Exponent& e)
{
    if (e == 1) return "t";
    if (e.get_den() == 1) return "t^" + e.get_num().get_str();
    return "t^(" + to_string(e) + ")";
}

std::string term_text(const Coeff& c, const Exponent& e)
{
    if (sgn(e) == 0) return c.str();
    if (c.is_one()) return t_power(e);
    return c.str() + "*" + t_power(e);
}

}  // namespace

HahnPoly::HahnPoly(const Coeff& c, const Exponent& e)
{
    if (c.is_zero()) return;
    terms_.emplace_back(e, c);
    terms_.back().first.canonicalize();
}

HahnPoly HahnPoly::from_terms(std::vector<Term> terms)
{
    for (auto& t : terms) t.first.canonicalize();
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first > b.first; });
    HahnPoly p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().first == t.first) {
            p.terms_.back().second += t.second;
            if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
        } else if (!t.second.is_zero()) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

ExtExponent HahnPoly::valuation() const
{
    if (terms_.empty()) return {};
    return terms_.front().first;
}

Exponent HahnPoly::min_exponent() const
{
    if (terms_.empty()) throw PreconditionError("min exponent of zero");
    return terms_.back().first;
}

const Coeff& HahnPoly::leading_coeff() const
{
    if (terms_.empty()) throw PreconditionError("leading coefficient of zero");
    return terms_.front().second;
}

Integer HahnPoly::exponent_denominator() const
{
    Integer n = 1;
    for (const auto& t : terms_) n = lcm(n, t.first.get_den());
    return n;
}

HahnPoly HahnPoly::operator-() const
{
    HahnPoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

HahnPoly operator+(const HahnPoly& a, const HahnPoly& b)
{
    HahnPoly r;
    auto i = a.terms_.begin(), j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
        if (j == b.terms_.end() || (i != a.terms_.end() && i->first > j->first)) {
            r.terms_.push_back(*i++);
        } else if (i == a.terms_.end() || j->first > i->first) {
            r.terms_.push_back(*j++);
        } else {
            Coeff c = i->second + j->second;
            if (!c.is_zero()) r.terms_.emplace_back(i->first, c);
            ++i;
            ++j;
        }
    }
    return r;
}

HahnPoly operator*(const HahnPoly& a, const HahnPoly& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    if (b.size() == 1) return a.scaled(b.terms_[0].second, b.terms_[0].first);
    if (a.size() == 1) return b.scaled(a.terms_[0].second, a.terms_[0].first);
    std::map<Exponent, Coeff, std::greater<>> acc;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) acc[ea + eb] += ca * cb;
    HahnPoly r;
    for (auto& [e, c] : acc)
        if (!c.is_zero()) r.terms_.emplace_back(e, c);
    return r;
}

HahnPoly HahnPoly::scaled(const Coeff& c, const Exponent& shift) const
{
    if (c.is_zero()) return {};
    HahnPoly r = *this;
    for (auto& t : r.terms_) {
        t.first += shift;
        t.second *= c;
    }
    return r;
}

std::complex<double> HahnPoly::evaluate(double s) const
{
    std::complex<long double> acc = 0;
    for (const auto& [e, c] : terms_) {
        long double mag = std::exp(static_cast<long double>(s) * static_cast<long double>(e.get_d()));
        acc += std::complex<long double>(c.re().get_d(), c.im().get_d()) * mag;
    }
    return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

std::string HahnPoly::str() const
{
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        bool neg = c.prints_negative();
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        out += term_text(neg ? -c : c, e);
        first = false;
    }
    return out;
}

HahnScalar::HahnScalar(HahnPoly num, HahnPoly den) : num_(std::move(num)), den_(std::move(den))
{
    normalize();
}

void HahnScalar::normalize()
{
    if (den_.is_zero()) throw std::domain_error("division by zero");
    if (num_.is_zero()) {
        den_ = HahnPoly(1);
        return;
    }
    if (den_.size() == 1) {
        const auto& [e, c] = den_.terms().front();
        num_ = num_.scaled(c.inverse(), -e);
        den_ = HahnPoly(1);
        return;
    }
    Integer n = lcm(num_.exponent_denominator(), den_.exponent_denominator());
    Exponent nmin = num_.min_exponent(), dmin = den_.min_exponent();
    Dense p = to_dense(num_, nmin, n);
    Dense q = to_dense(den_, dmin, n);
    Dense g = dense_gcd(p, q);
    if (g.size() > 1) {
        p = divmod(p, g);
        q = divmod(q, g);
    }
    Coeff inv = q.back().inverse();
    for (auto& c : p) c *= inv;
    for (auto& c : q) c *= inv;
    num_ = from_dense(p, n, nmin - dmin);
    den_ = from_dense(q, n, 0);
}

bool HahnScalar::is_constant() const
{
    return den_.size() == 1 && (num_.is_zero() || (num_.size() == 1 && sgn(num_.terms()[0].first) == 0));
}

Integer HahnScalar::exponent_denominator() const
{
    return lcm(num_.exponent_denominator(), den_.exponent_denominator());
}

HahnScalar HahnScalar::operator-() const
{
    HahnScalar r = *this;
    r.num_ = -r.num_;
    return r;
}

HahnScalar HahnScalar::inverse() const
{
    if (is_zero()) throw std::domain_error("division by zero");
    return HahnScalar(den_, num_);
}

HahnScalar operator+(const HahnScalar& a, const HahnScalar& b)
{
    if (a.is_polynomial() && b.is_polynomial()) return HahnScalar(a.num_ + b.num_);
    if (a.den_ == b.den_) return HahnScalar(a.num_ + b.num_, a.den_);
    return HahnScalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

HahnScalar operator*(const HahnScalar& a, const HahnScalar& b)
{
    if (a.is_polynomial() && b.is_polynomial()) return HahnScalar(a.num_ * b.num_);
    return HahnScalar(a.num_ * b.num_, a.den_ * b.den_);
}

HahnScalar operator/(const HahnScalar& a, const HahnScalar& b)
{
    if (b.is_zero()) throw std::domain_error("division by zero");
    return HahnScalar(a.num_ * b.den_, a.den_ * b.num_);
}

std::string HahnScalar::str() const
{
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

ExtExponent valuation(const HahnScalar& a)
{
    if (a.is_zero()) return {};
    return ExtExponent(a.num().valuation().value() - a.den().valuation().value());
}

GradedMonomial initial_form(const HahnScalar& a)
{
    if (a.is_zero()) throw PreconditionError("initial form of zero");
    return {valuation(a).value(), a.num().leading_coeff() / a.den().leading_coeff()};
}

Coeff residue(const HahnScalar& a)
{
    ExtExponent v = valuation(a);
    if (v.is_neg_inf() || sgn(v.value()) != 0) throw PreconditionError("residue requires valuation 0, got " + v.str());
    return initial_form(a).coeff;
}

std::complex<double> evaluate_numeric(const HahnScalar& a, double s)
{
    std::complex<double> d = a.den().evaluate(s);
    if (std::abs(d) == 0.0 || !std::isfinite(std::abs(d)))
        throw std::domain_error("denominator is not a finite nonzero number at s = " + std::to_string(s));
    return a.num().evaluate(s) / d;
}

HahnScalar leading_monomial(const HahnScalar& a)
{
    GradedMonomial m = initial_form(a);
    return HahnScalar::monomial(m.coeff, m.degree);
}

}  // namespace phasetrop
