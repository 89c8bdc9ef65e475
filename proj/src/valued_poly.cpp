#include "phasetrop/valued_poly.hpp"

#include <algorithm>
#include <set>

namespace phasetrop {

WeightVector diagonal_weight(std::size_t nvars, const Exponent& alpha) { return WeightVector(nvars, alpha); }

ValuedPoly::ValuedPoly(std::size_t nvars, const HahnScalar& c) : n_(nvars)
{
    if (!c.is_zero()) terms_.emplace(MonomialExp(nvars), c);
}

ValuedPoly ValuedPoly::variable(std::size_t nvars, std::size_t var)
{
    return monomial(MonomialExp::unit(nvars, var), HahnScalar(1));
}

ValuedPoly ValuedPoly::monomial(const MonomialExp& m, const HahnScalar& c)
{
    ValuedPoly p(m.nvars());
    p.add_term(m, c);
    return p;
}

ValuedPoly ValuedPoly::from_complex(const ComplexPoly& p)
{
    ValuedPoly f(p.nvars());
    for (const auto& [m, c] : p.terms()) f.add_term(m, HahnScalar(c));
    return f;
}

bool ValuedPoly::is_homogeneous() const
{
    for (const auto& t : terms_)
        if (t.first.total() != total_degree()) return false;
    return true;
}

HahnScalar ValuedPoly::coefficient(const MonomialExp& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? HahnScalar(0) : it->second;
}

Integer ValuedPoly::exponent_denominator() const
{
    Integer n = 1;
    for (const auto& [m, c] : terms_) n = lcm(n, c.exponent_denominator());
    return n;
}

void ValuedPoly::add_term(const MonomialExp& m, const HahnScalar& c)
{
    if (m.nvars() != n_) throw PreconditionError("monomial has wrong number of variables");
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

ValuedPoly ValuedPoly::operator-() const
{
    ValuedPoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

ValuedPoly operator+(const ValuedPoly& a, const ValuedPoly& b)
{
    if (a.n_ != b.n_) throw PreconditionError("polynomials over different rings");
    ValuedPoly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

ValuedPoly operator*(const ValuedPoly& a, const ValuedPoly& b)
{
    if (a.n_ != b.n_) throw PreconditionError("polynomials over different rings");
    ValuedPoly r(a.n_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

ValuedPoly ValuedPoly::scaled(const HahnScalar& c) const
{
    ValuedPoly r(n_);
    if (c.is_zero()) return r;
    for (const auto& [m, a] : terms_) r.terms_.emplace(m, a * c);
    return r;
}

ValuedPoly ValuedPoly::pow(unsigned k) const
{
    ValuedPoly r(n_, HahnScalar(1));
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
}

HahnScalar ValuedPoly::evaluate(const std::vector<HahnScalar>& point) const
{
    if (point.size() != n_) throw PreconditionError("evaluation point has wrong dimension");
    HahnScalar sum(0);
    for (const auto& [m, c] : terms_) {
        HahnScalar v = c;
        for (std::size_t i = 0; i < n_; ++i)
            for (int k = 0; k < m[i]; ++k) v *= point[i];
        sum += v;
    }
    return sum;
}

ValuedPoly ValuedPoly::substitute(const std::vector<ValuedPoly>& images) const
{
    if (images.size() != n_) throw PreconditionError("substitution has wrong number of images");
    std::size_t m = images.empty() ? 0 : images.front().nvars();
    ValuedPoly sum(m);
    for (const auto& [u, c] : terms_) {
        ValuedPoly v(m, c);
        for (std::size_t i = 0; i < n_; ++i)
            if (u[i]) v = v * images[i].pow(u[i]);
        sum = sum + v;
    }
    return sum;
}

ValuedPoly ValuedPoly::derivative(std::size_t var) const
{
    ValuedPoly r(n_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        MonomialExp d = m;
        d[var] -= 1;
        r.add_term(d, c * HahnScalar(m[var]));
    }
    return r;
}

ValuedPoly ValuedPoly::resized(std::size_t nvars) const
{
    ValuedPoly r(nvars);
    for (const auto& [m, c] : terms_) {
        for (std::size_t i = nvars; i < n_; ++i)
            if (m[i]) throw PreconditionError("cannot drop a variable that occurs");
        r.add_term(m.resized(nvars), c);
    }
    return r;
}

namespace {

std::string monomial_text(const MonomialExp& m, const std::vector<std::string>& names)
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

// Text of a coefficient as a product factor, with a liftable sign.
std::string factor_text(const HahnScalar& c, bool& negative)
{
    negative = false;
    if (c.is_polynomial() && c.num().size() == 1) {
        const auto& [e, a] = c.num().terms().front();
        negative = a.prints_negative();
        return HahnScalar::monomial(negative ? -a : a, e).str();
    }
    return "(" + c.str() + ")";
}

}  // namespace

std::string ValuedPoly::str(const std::vector<std::string>& names) const
{
    if (names.size() < n_) throw PreconditionError("not enough variable names");
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        bool neg = false;
        std::string fac = factor_text(c, neg);
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (m.is_one())
            out += fac;
        else if (fac == "1")
            out += monomial_text(m, names);
        else
            out += fac + "*" + monomial_text(m, names);
        first = false;
    }
    return out;
}

std::string ValuedPoly::str() const { return str(default_names(n_, "x")); }

ExtExponent monomial_valuation(const ValuedPoly& f, const WeightVector& gamma)
{
    if (gamma.size() != f.nvars()) throw PreconditionError("weight vector has wrong length");
    ExtExponent best;
    for (const auto& [m, c] : f.terms()) {
        Exponent v = valuation(c).value();
        for (std::size_t i = 0; i < gamma.size(); ++i) v += gamma[i] * m[i];
        best = max(best, ExtExponent(v));
    }
    return best;
}

ExtExponent monomial_valuation(const ValuedPoly& f, const Exponent& alpha)
{
    return monomial_valuation(f, diagonal_weight(f.nvars(), alpha));
}

namespace {

Exponent term_value(const MonomialExp& m, const HahnScalar& c, const WeightVector& gamma)
{
    Exponent v = valuation(c).value();
    for (std::size_t i = 0; i < gamma.size(); ++i) v += gamma[i] * m[i];
    return v;
}

}  // namespace

ValuedPoly leading_part(const ValuedPoly& f, const WeightVector& gamma)
{
    if (f.is_zero()) throw PreconditionError("leading part of zero");
    Exponent top = monomial_valuation(f, gamma).value();
    ValuedPoly r(f.nvars());
    for (const auto& [m, c] : f.terms())
        if (term_value(m, c, gamma) == top) r.add_term(m, c);
    return r;
}

InitialPoly initial_poly(const ValuedPoly& f, const WeightVector& gamma)
{
    if (f.is_zero()) throw PreconditionError("initial polynomial of zero");
    Exponent top = monomial_valuation(f, gamma).value();
    std::vector<ComplexPoly::Term> terms;
    for (const auto& [m, c] : f.terms())
        if (term_value(m, c, gamma) == top) terms.emplace_back(m, initial_form(c).coeff);
    return {top, ComplexPoly::from_terms(f.nvars(), std::move(terms))};
}

InitialPoly initial_poly(const ValuedPoly& f, const Exponent& alpha)
{
    return initial_poly(f, diagonal_weight(f.nvars(), alpha));
}

TropicalPoly::TropicalPoly(std::vector<TropicalPiece> pieces)
{
    std::sort(pieces.begin(), pieces.end(), [](const TropicalPiece& a, const TropicalPiece& b) {
        return a.slope != b.slope ? a.slope < b.slope : a.intercept > b.intercept;
    });
    for (auto& p : pieces)
        if (pieces_.empty() || pieces_.back().slope != p.slope) pieces_.push_back(std::move(p));
}

Exponent TropicalPoly::eval(const Exponent& alpha) const
{
    if (pieces_.empty()) throw PreconditionError("tropical polynomial of zero");
    Exponent best = pieces_.front().intercept + pieces_.front().slope * alpha;
    for (const auto& p : pieces_) best = std::max<Exponent>(best, p.intercept + p.slope * alpha);
    return best;
}

namespace {

// Closed set of alpha where piece k attains the max; nullopt bounds are infinite.
struct Window {
    std::optional<Exponent> lo, hi;
    bool empty() const { return lo && hi && *lo > *hi; }
    bool has_interior() const { return !lo || !hi || *lo < *hi; }
};

Window window(const std::vector<TropicalPiece>& ps, std::size_t k)
{
    Window w;
    for (std::size_t j = 0; j < ps.size(); ++j) {
        if (j == k) continue;
        Exponent bound = (ps[j].intercept - ps[k].intercept) / (ps[k].slope - ps[j].slope);
        if (ps[j].slope < ps[k].slope) {
            if (!w.lo || bound > *w.lo) w.lo = bound;
        } else {
            if (!w.hi || bound < *w.hi) w.hi = bound;
        }
    }
    return w;
}

}  // namespace

std::vector<int> TropicalPoly::realized_slopes() const
{
    std::vector<int> out;
    for (std::size_t k = 0; k < pieces_.size(); ++k)
        if (!window(pieces_, k).empty()) out.push_back(pieces_[k].slope);
    return out;
}

std::vector<Exponent> TropicalPoly::roots() const
{
    std::vector<Exponent> out;
    for (std::size_t k = 0; k < pieces_.size(); ++k) {
        Window w = window(pieces_, k);
        if (!w.empty() && w.has_interior() && w.hi) out.push_back(*w.hi);
    }
    return out;
}

TropicalPoly tropical_poly(const ValuedPoly& f)
{
    if (f.is_zero()) throw PreconditionError("tropical polynomial of zero");
    std::vector<TropicalPiece> pieces;
    for (const auto& [m, c] : f.terms()) pieces.push_back({m.total(), valuation(c).value()});
    return TropicalPoly(std::move(pieces));
}

std::vector<Exponent> tropical_roots(const ValuedPoly& f) { return tropical_poly(f).roots(); }

ValuedPoly tilde_reduce(const ValuedPoly& f)
{
    TropicalPoly trop = tropical_poly(f);
    std::vector<int> slopes = trop.realized_slopes();
    std::set<int> keep(slopes.begin(), slopes.end());
    ValuedPoly r(f.nvars());
    for (const auto& [m, c] : f.terms()) {
        if (!keep.count(m.total())) continue;
        for (const auto& p : trop.pieces())
            if (p.slope == m.total() && p.intercept == valuation(c).value()) r.add_term(m, c);
    }
    return r;
}

ValuedPoly homogenize(const ValuedPoly& f)
{
    std::size_t n = f.nvars();
    ValuedPoly r(n + 1);
    int d = f.total_degree();
    for (const auto& [m, c] : f.terms()) {
        MonomialExp h = m.resized(n + 1);
        h[n] = d - m.total();
        r.add_term(h, c);
    }
    return r;
}

ValuedPoly dehomogenize(const ValuedPoly& F)
{
    if (F.nvars() == 0) throw PreconditionError("nothing to dehomogenize");
    std::size_t n = F.nvars() - 1;
    ValuedPoly r(n);
    for (const auto& [m, c] : F.terms()) r.add_term(m.resized(n), c);
    return r;
}

ValuedPoly LinearMap::image(std::size_t i) const
{
    std::size_t n = size();
    ValuedPoly r(n);
    for (std::size_t j = 0; j < n; ++j) r.add_term(MonomialExp::unit(n, target(j)), matrix[i][j]);
    return r;
}

void LinearMap::check() const
{
    std::size_t n = size();
    for (const auto& row : matrix)
        if (row.size() != n) throw PreconditionError("linear map matrix is not square");
    if (!perm.empty()) {
        std::vector<std::size_t> p = perm;
        std::sort(p.begin(), p.end());
        for (std::size_t j = 0; j < p.size(); ++j)
            if (p[j] != j || perm.size() != n) throw PreconditionError("invalid permutation");
    }
}

std::vector<std::vector<HahnScalar>> invert(const std::vector<std::vector<HahnScalar>>& m)
{
    std::size_t n = m.size();
    std::vector<std::vector<HahnScalar>> a = m, inv(n, std::vector<HahnScalar>(n, HahnScalar(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = HahnScalar(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) throw PreconditionError("matrix is singular");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        HahnScalar p = a[col][col].inverse();
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] *= p;
            inv[col][j] *= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col].is_zero()) continue;
            HahnScalar f = a[i][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

ValuedPoly linear_substitute(const ValuedPoly& f, const LinearMap& phi)
{
    phi.check();
    if (phi.size() != f.nvars()) throw PreconditionError("linear map has wrong size");
    invert(phi.matrix);
    std::vector<ValuedPoly> images;
    for (std::size_t i = 0; i < phi.size(); ++i) images.push_back(phi.image(i));
    return f.substitute(images);
}

namespace {

bool preserves_level(const std::vector<HahnScalar>& row)
{
    ExtExponent best;
    for (const auto& a : row) best = max(best, valuation(a));
    return !best.is_neg_inf() && sgn(best.value()) == 0;
}

}  // namespace

ComplexPoly graded_substitute(const ComplexPoly& F, const Exponent& alpha, const LinearMap& phi)
{
    (void)alpha;  // diagonal weights: the residue images do not depend on the level
    phi.check();
    std::size_t n = phi.size();
    if (F.nvars() != n) throw PreconditionError("linear map has wrong size");
    for (std::size_t i = 0; i < n; ++i)
        if (!preserves_level(phi.matrix[i]))
            throw PreconditionError("substitution changes the valuation of x" + std::to_string(i + 1));
    auto inv = invert(phi.matrix);
    for (std::size_t i = 0; i < n; ++i)
        if (!preserves_level(inv[i]))
            throw PreconditionError("inverse substitution changes the valuation of y" + std::to_string(i + 1));
    std::vector<ComplexPoly> images;
    for (std::size_t i = 0; i < n; ++i) {
        ComplexPoly img(n);
        for (std::size_t j = 0; j < n; ++j) {
            const HahnScalar& a = phi.matrix[i][j];
            if (a.is_zero() || sgn(valuation(a).value()) != 0) continue;
            img = img + ComplexPoly::monomial(MonomialExp::unit(n, phi.target(j)), residue(a));
        }
        images.push_back(std::move(img));
    }
    return F.substitute(images);
}

}  // namespace phasetrop
