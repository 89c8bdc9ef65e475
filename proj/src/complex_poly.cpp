#include "phasetrop/complex_poly.hpp"

#include <algorithm>
#include <map>

namespace phasetrop {

ComplexPoly::ComplexPoly(std::size_t nvars, const Coeff& c) : n_(nvars)
{
    if (!c.is_zero()) terms_.emplace_back(MonomialExp(nvars), c);
}

ComplexPoly ComplexPoly::variable(std::size_t nvars, std::size_t var)
{
    return monomial(MonomialExp::unit(nvars, var), Coeff(1));
}

ComplexPoly ComplexPoly::monomial(const MonomialExp& m, const Coeff& c)
{
    ComplexPoly p(m.nvars());
    if (!c.is_zero()) p.terms_.emplace_back(m, c);
    return p;
}

ComplexPoly ComplexPoly::from_terms(std::size_t nvars, std::vector<Term> terms)
{
    std::map<MonomialExp, Coeff, GrlexGreater> acc;
    for (auto& [m, c] : terms) {
        if (m.nvars() != nvars) throw PreconditionError("monomial has wrong number of variables");
        acc[m] += c;
    }
    ComplexPoly p(nvars);
    for (auto& [m, c] : acc)
        if (!c.is_zero()) p.terms_.emplace_back(m, std::move(c));
    return p;
}

bool ComplexPoly::is_homogeneous() const
{
    for (const auto& t : terms_)
        if (t.first.total() != terms_.front().first.total()) return false;
    return true;
}

Coeff ComplexPoly::coefficient(const MonomialExp& m) const
{
    for (const auto& [u, c] : terms_)
        if (u == m) return c;
    return Coeff(0);
}

ComplexPoly ComplexPoly::operator-() const
{
    ComplexPoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

ComplexPoly operator+(const ComplexPoly& a, const ComplexPoly& b)
{
    if (a.n_ != b.n_) throw PreconditionError("polynomials over different rings");
    GrlexGreater gt;
    ComplexPoly r(a.n_);
    auto i = a.terms_.begin(), j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
        if (j == b.terms_.end() || (i != a.terms_.end() && gt(i->first, j->first))) {
            r.terms_.push_back(*i++);
        } else if (i == a.terms_.end() || gt(j->first, i->first)) {
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

ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b)
{
    if (a.n_ != b.n_) throw PreconditionError("polynomials over different rings");
    std::map<MonomialExp, Coeff, GrlexGreater> acc;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) acc[ma * mb] += ca * cb;
    ComplexPoly r(a.n_);
    for (auto& [m, c] : acc)
        if (!c.is_zero()) r.terms_.emplace_back(m, std::move(c));
    return r;
}

ComplexPoly ComplexPoly::scaled(const Coeff& c) const
{
    if (c.is_zero()) return ComplexPoly(n_);
    ComplexPoly r = *this;
    for (auto& t : r.terms_) t.second *= c;
    return r;
}

ComplexPoly ComplexPoly::pow(unsigned k) const
{
    ComplexPoly r(n_, Coeff(1));
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
}

Coeff ComplexPoly::evaluate(const std::vector<Coeff>& point) const
{
    if (point.size() != n_) throw PreconditionError("evaluation point has wrong dimension");
    Coeff sum(0);
    for (const auto& [m, c] : terms_) {
        Coeff v = c;
        for (std::size_t i = 0; i < n_; ++i)
            for (int k = 0; k < m[i]; ++k) v *= point[i];
        sum += v;
    }
    return sum;
}

ComplexPoly ComplexPoly::substitute(const std::vector<ComplexPoly>& images) const
{
    if (images.size() != n_) throw PreconditionError("substitution has wrong number of images");
    std::size_t m = images.empty() ? 0 : images.front().nvars();
    ComplexPoly sum(m);
    for (const auto& [u, c] : terms_) {
        ComplexPoly v(m, c);
        for (std::size_t i = 0; i < n_; ++i)
            if (u[i]) v = v * images[i].pow(u[i]);
        sum = sum + v;
    }
    return sum;
}

ComplexPoly ComplexPoly::derivative(std::size_t var) const
{
    std::vector<Term> out;
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        MonomialExp d = m;
        d[var] -= 1;
        out.emplace_back(d, c * Coeff(m[var]));
    }
    return from_terms(n_, std::move(out));
}

ComplexPoly ComplexPoly::resized(std::size_t nvars) const
{
    std::vector<Term> out;
    for (const auto& [m, c] : terms_) {
        for (std::size_t i = nvars; i < n_; ++i)
            if (m[i]) throw PreconditionError("cannot drop a variable that occurs");
        out.emplace_back(m.resized(nvars), c);
    }
    return from_terms(nvars, std::move(out));
}

static std::string monomial_text(const MonomialExp& m, const std::vector<std::string>& names)
{
    std::string s;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += names[i];
        if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s;
}

std::string ComplexPoly::str(const std::vector<std::string>& names) const
{
    if (names.size() < n_) throw PreconditionError("not enough variable names");
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        bool neg = c.prints_negative();
        Coeff a = neg ? -c : c;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (m.is_one())
            out += a.str();
        else if (a.is_one())
            out += monomial_text(m, names);
        else
            out += a.str() + "*" + monomial_text(m, names);
        first = false;
    }
    return out;
}

std::string ComplexPoly::str() const { return str(default_names(n_, "X")); }

std::vector<std::string> default_names(std::size_t nvars, const std::string& stem)
{
    std::vector<std::string> names;
    for (std::size_t i = 0; i < nvars; ++i) names.push_back(stem + std::to_string(i + 1));
    return names;
}

}  // namespace phasetrop
