#include "phasetrop/initial_ideals.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "phasetrop/groebner.hpp"

namespace phasetrop {

ValuedIdeal::ValuedIdeal(std::size_t nvars, std::vector<ValuedPoly> gens) : n_(nvars), gens_(std::move(gens))
{
    if (gens_.empty()) throw PreconditionError("an ideal needs at least one generator");
    for (const auto& g : gens_) {
        if (g.nvars() != n_) throw PreconditionError("generator over the wrong ring");
        if (g.is_zero()) throw PreconditionError("zero generator");
    }
}

ComplexIdealRep::ComplexIdealRep(std::size_t nvars, std::vector<ComplexPoly> gens) : n_(nvars), gens_(std::move(gens))
{
    for (const auto& g : gens_)
        if (g.nvars() != n_) throw PreconditionError("generator over the wrong ring");
    basis_ = groebner_basis(gens_, MonomialOrder::grlex(n_));
}

bool ComplexIdealRep::contains(const ComplexPoly& f) const
{
    return normal_form(f, basis_, MonomialOrder::grlex(n_)).is_zero();
}

bool ComplexIdealRep::contains(const ComplexIdealRep& other) const
{
    for (const auto& g : other.basis_)
        if (!contains(g)) return false;
    return true;
}

bool ComplexIdealRep::is_unit() const { return basis_.size() == 1 && basis_.front().is_constant(); }

bool ComplexIdealRep::is_homogeneous() const
{
    for (const auto& g : basis_)
        if (!g.is_homogeneous()) return false;
    return true;
}

int ComplexIdealRep::krull_dimension() const
{
    if (is_unit()) return -1;
    std::vector<MonomialExp> leads;
    for (const auto& g : basis_) leads.push_back(g.terms().front().first);
    int best = 0;
    for (unsigned mask = 0; mask < (1u << n_); ++mask) {
        int size = __builtin_popcount(mask);
        if (size <= best) continue;
        bool independent = true;
        for (const auto& m : leads) {
            bool inside = true;
            for (std::size_t i = 0; i < n_ && inside; ++i)
                if (m[i] && !(mask & (1u << i))) inside = false;
            if (inside) {
                independent = false;
                break;
            }
        }
        if (independent) best = size;
    }
    return best;
}

Dimension ComplexIdealRep::punctured_dimension() const
{
    int d = krull_dimension();
    if (d < 0) return std::nullopt;
    if (d > 0) return d;
    // Finite set: empty after removing the origin iff every X_i is in the radical.
    for (std::size_t i = 0; i < n_; ++i) {
        std::vector<ComplexPoly> gens;
        for (const auto& g : basis_) gens.push_back(g.resized(n_ + 1));
        gens.push_back(ComplexPoly(n_ + 1, Coeff(1)) -
                       ComplexPoly::variable(n_ + 1, n_) * ComplexPoly::variable(n_ + 1, i));
        auto gb = groebner_basis(gens, MonomialOrder::grlex(n_ + 1));
        if (!(gb.size() == 1 && gb.front().is_constant())) return 0;
    }
    return std::nullopt;
}

ComplexIdealRep ComplexIdealRep::operator+(const ComplexIdealRep& other) const
{
    std::vector<ComplexPoly> g = basis_;
    g.insert(g.end(), other.basis_.begin(), other.basis_.end());
    return ComplexIdealRep(n_, std::move(g));
}

ComplexIdealRep ComplexIdealRep::operator*(const ComplexIdealRep& other) const
{
    std::vector<ComplexPoly> g;
    for (const auto& a : basis_)
        for (const auto& b : other.basis_) g.push_back(a * b);
    return ComplexIdealRep(n_, std::move(g));
}

std::vector<std::string> ComplexIdealRep::basis_strings(const std::vector<std::string>& names) const
{
    std::vector<std::string> out;
    for (const auto& g : basis_) out.push_back(g.str(names));
    return out;
}

bool ideal_equal(const ComplexIdealRep& a, const ComplexIdealRep& b)
{
    if (a.nvars() != b.nvars()) throw PreconditionError("ideals over different rings");
    return a == b;
}

bool is_homogeneous(const ComplexIdealRep& a) { return a.is_homogeneous(); }

namespace {

long long to_ll(const Integer& z)
{
    if (!z.fits_slong_p()) throw std::overflow_error("weight does not fit a machine integer");
    return z.get_si();
}

// f over m variables placed at ring indices offset.., with the parameter s = t^(1/denom) and its
// homogenizing partner h as the last two ring variables. Denominators are cleared and exponents
// shifted to be nonnegative, which changes f by a nonzero scalar of the field.
ComplexPoly encode(const ValuedPoly& f, std::size_t ring, std::size_t offset, const Integer& denom)
{
    std::vector<HahnPoly> dens;
    for (const auto& [m, c] : f.terms())
        if (!c.is_polynomial() && std::find(dens.begin(), dens.end(), c.den()) == dens.end())
            dens.push_back(c.den());
    std::vector<std::pair<MonomialExp, HahnPoly>> cleared;
    std::optional<Exponent> lo;
    for (const auto& [m, c] : f.terms()) {
        HahnPoly p = c.num();
        for (const auto& d : dens)
            if (d != c.den()) p = p * d;
        if (!lo || p.min_exponent() < *lo) lo = p.min_exponent();
        cleared.emplace_back(m, std::move(p));
    }
    std::vector<ComplexPoly::Term> terms;
    int top = 0;
    for (const auto& [m, p] : cleared) {
        for (const auto& [e, a] : p.terms()) {
            Rational k = (e - *lo) * denom;
            if (k.get_den() != 1 || !k.get_num().fits_sint_p())
                throw std::logic_error("exponent does not fit the parameter lattice");
            MonomialExp u(ring);
            for (std::size_t i = 0; i < m.nvars(); ++i) u[offset + i] = m[i];
            u[ring - 2] = static_cast<int>(k.get_num().get_si());
            top = std::max(top, u[ring - 2]);
            terms.emplace_back(u, a);
        }
    }
    for (auto& t : terms) t.first[ring - 1] = top - t.first[ring - 2];
    return ComplexPoly::from_terms(ring, std::move(terms));
}

ValuedPoly decode(const ComplexPoly& p, std::size_t m, std::size_t offset, const Integer& denom)
{
    std::size_t ring = p.nvars();
    std::map<MonomialExp, std::vector<HahnPoly::Term>, GrlexGreater> acc;
    for (const auto& [u, c] : p.terms()) {
        MonomialExp x(m);
        for (std::size_t i = 0; i < m; ++i) x[i] = u[offset + i];
        Rational e(u[ring - 2]);
        e /= Rational(denom);
        acc[x].emplace_back(e, c);
    }
    ValuedPoly f(m);
    for (auto& [x, ts] : acc) f.add_term(x, HahnScalar(HahnPoly::from_terms(std::move(ts))));
    return f;
}

// Rows grading by the x-degree (x-variables at [from, to)) and by the degree in s, h.
std::vector<std::vector<long long>> bigrading(std::size_t ring, std::size_t from, std::size_t to)
{
    std::vector<std::vector<long long>> rows(2, std::vector<long long>(ring, 0));
    for (std::size_t i = from; i < to; ++i) rows[0][i] = 1;
    rows[1][ring - 2] = rows[1][ring - 1] = 1;
    return rows;
}

void append_lex(std::vector<std::vector<long long>>& rows, std::size_t ring)
{
    for (std::size_t i = 0; i < ring; ++i) {
        rows.emplace_back(ring, 0);
        rows.back()[i] = 1;
    }
}

// Order on x1..xn, x0, s, h: bidegree, then the weight, then lex.
MonomialOrder weight_order(std::size_t n, const Exponent& alpha, const Integer& denom)
{
    std::size_t ring = n + 3;
    auto rows = bigrading(ring, 0, n + 1);
    long long xw = to_ll(alpha.get_num() * denom);
    long long sw = to_ll(alpha.get_den());
    rows.emplace_back(ring, 0);
    for (std::size_t i = 0; i < n; ++i) rows.back()[i] = xw;
    rows.back()[n + 1] = sw;
    append_lex(rows, ring);
    return MonomialOrder(std::move(rows));
}

long long weight_of(const MonomialExp& u, std::size_t n, long long xw, long long sw)
{
    long long w = sw * u[n + 1];
    for (std::size_t i = 0; i < n; ++i) w += xw * u[i];
    return w;
}

// Order on x1..xn, x0, s, h: bidegree, then fewer x0 first, then lex.
MonomialOrder saturation_order(std::size_t n)
{
    std::size_t ring = n + 3;
    auto rows = bigrading(ring, 0, n + 1);
    rows.emplace_back(ring, 0);
    rows.back()[n] = -1;
    append_lex(rows, ring);
    return MonomialOrder(std::move(rows));
}

Integer common_denominator(const std::vector<ValuedPoly>& gens)
{
    Integer d = 1;
    for (const auto& g : gens) d = lcm(d, g.exponent_denominator());
    return d;
}

}  // namespace

std::vector<ValuedPoly> weight_groebner(const ValuedIdeal& homogeneous, const Exponent& alpha)
{
    if (homogeneous.nvars() == 0) throw PreconditionError("no homogenizing variable");
    for (const auto& g : homogeneous.gens())
        if (!g.is_homogeneous()) throw PreconditionError("weight_groebner needs homogeneous generators");
    std::size_t n = homogeneous.nvars() - 1;
    Integer denom = common_denominator(homogeneous.gens());
    std::vector<ComplexPoly> enc;
    for (const auto& g : homogeneous.gens()) enc.push_back(encode(g, n + 3, 0, denom));
    MonomialOrder order = weight_order(n, alpha, denom);
    std::vector<ValuedPoly> out;
    for (const auto& g : groebner_basis(enc, order)) {
        MonomialExp lead = leading_monomial(g, order);
        ValuedPoly f = decode(g, n + 1, 0, denom);
        HahnScalar lc = f.coefficient(lead.resized(n + 1));
        out.push_back(f.scaled(lc.inverse()));
    }
    return out;
}

InitialIdealSolver::InitialIdealSolver(const ValuedIdeal& ideal) : n_(ideal.nvars())
{
    if (n_ + 3 > kMaxVars) throw PreconditionError("too many variables");
    denom_ = common_denominator(ideal.gens());
    std::vector<ComplexPoly> enc;
    for (const auto& g : ideal.gens()) enc.push_back(encode(homogenize(g), n_ + 3, 0, denom_));
    for (const auto& g : groebner_basis(enc, saturation_order(n_))) {
        int k = g.terms().front().first[n_];
        for (const auto& t : g.terms()) k = std::min(k, t.first[n_]);
        std::vector<ComplexPoly::Term> terms;
        for (auto [u, c] : g.terms()) {
            u[n_] -= k;
            terms.emplace_back(u, c);
        }
        saturated_.push_back(ComplexPoly::from_terms(n_ + 3, std::move(terms)));
    }
}

InitialIdealSolver::Sample InitialIdealSolver::sample(const Exponent& alpha) const
{
    MonomialOrder order = weight_order(n_, alpha, denom_);
    long long xw = to_ll(alpha.get_num() * denom_);
    long long sw = to_ll(alpha.get_den());
    std::vector<ComplexPoly> gb = groebner_basis(saturated_, order);

    std::vector<ComplexPoly> initial;
    std::set<Exponent> cands;
    for (const auto& g : gb) {
        long long top = weight_of(g.terms().front().first, n_, xw, sw);
        for (const auto& t : g.terms()) top = std::max(top, weight_of(t.first, n_, xw, sw));
        std::vector<ComplexPoly::Term> terms;
        std::map<MonomialExp, int, GrlexGreater> sdeg;  // highest s-degree per x-monomial
        for (const auto& [u, c] : g.terms()) {
            MonomialExp x = u.resized(n_);
            if (weight_of(u, n_, xw, sw) == top) terms.emplace_back(x, c);
            auto [it, fresh] = sdeg.emplace(x, u[n_ + 1]);
            if (!fresh) it->second = std::max(it->second, u[n_ + 1]);
        }
        initial.push_back(ComplexPoly::from_terms(n_, std::move(terms)));
        for (auto a = sdeg.begin(); a != sdeg.end(); ++a)
            for (auto b = std::next(a); b != sdeg.end(); ++b) {
                int du = a->first.total(), dv = b->first.total();
                if (du == dv) continue;
                Rational v(a->second - b->second);
                v /= Rational(denom_);
                v /= Rational(dv - du);
                cands.insert(v);
            }
    }
    return {ComplexIdealRep(n_, std::move(initial)), {cands.begin(), cands.end()}};
}

ComplexIdealRep initial_ideal(const ValuedIdeal& ideal, const Exponent& alpha)
{
    return InitialIdealSolver(ideal).initial_ideal(alpha);
}

FiberReport describe(const ComplexIdealRep& ideal)
{
    return {ideal, ideal.is_homogeneous(), ideal.punctured_dimension()};
}

FiberReport fiber_report(const ValuedIdeal& ideal, const Exponent& alpha)
{
    return describe(initial_ideal(ideal, alpha));
}

namespace {

std::vector<Exponent> sample_points(const std::set<Exponent>& cands)
{
    if (cands.empty()) return {Exponent(0)};
    std::vector<Exponent> pts{*cands.begin() - 1};
    for (auto it = cands.begin(); std::next(it) != cands.end(); ++it) pts.push_back((*it + *std::next(it)) / 2);
    pts.push_back(*cands.rbegin() + 1);
    return pts;
}

}  // namespace

CriticalLevelReport critical_levels(const ValuedIdeal& ideal, const CriticalLevelOptions& options)
{
    InitialIdealSolver solver(ideal);
    std::map<Exponent, InitialIdealSolver::Sample> cache;
    auto at = [&](const Exponent& a) -> const InitialIdealSolver::Sample& {
        auto it = cache.find(a);
        if (it == cache.end()) it = cache.emplace(a, solver.sample(a)).first;
        return it->second;
    };

    std::set<Exponent> cands;
    CriticalLevelReport report;
    bool stable = false;
    for (int round = 0; round < options.max_rounds && !stable; ++round) {
        report.rounds = round + 1;
        stable = true;
        for (const auto& p : sample_points(cands))
            for (const auto& c : at(p).candidates)
                if (cands.insert(c).second) stable = false;
    }

    auto assemble = [&]() {
        std::vector<Exponent> levels(cands.begin(), cands.end());
        std::vector<Exponent> samples = sample_points(cands);
        std::vector<ComplexIdealRep> between;
        for (const auto& p : samples) between.push_back(at(p).ideal);
        // Drop candidates whose ideal agrees with both sides.
        std::vector<Exponent> kept;
        std::vector<ComplexIdealRep> kept_between{between.front()};
        std::vector<Exponent> kept_samples{samples.front()};
        for (std::size_t i = 0; i < levels.size(); ++i) {
            const ComplexIdealRep& mid = at(levels[i]).ideal;
            if (mid == kept_between.back() && mid == between[i + 1]) continue;
            kept.push_back(levels[i]);
            kept_between.push_back(between[i + 1]);
            kept_samples.push_back(samples[i + 1]);
        }
        CriticalLevelReport r;
        r.rounds = report.rounds;
        r.levels = kept;
        for (std::size_t i = 0; i < kept_between.size(); ++i) {
            IntervalEntry e{i == 0 ? std::nullopt : std::optional<Exponent>(kept[i - 1]),
                            i == kept.size() ? std::nullopt : std::optional<Exponent>(kept[i]), kept_samples[i],
                            describe(kept_between[i])};
            if (!e.fiber.homogeneous) r.flags_ok = false;
            r.intervals.push_back(std::move(e));
        }
        for (std::size_t i = 0; i < kept.size(); ++i) {
            LevelEntry e{kept[i], describe(at(kept[i]).ideal)};
            bool separating = e.fiber.ideal != kept_between[i] || e.fiber.ideal != kept_between[i + 1];
            if (e.fiber.homogeneous && !separating) r.flags_ok = false;
            r.at_level.push_back(std::move(e));
        }
        return r;
    };

    if (!stable) throw NonConvergence("critical level refinement did not reach a fixpoint", assemble());
    return assemble();
}

ValuedIdeal intersect(const ValuedIdeal& a, const ValuedIdeal& b)
{
    if (a.nvars() != b.nvars()) throw PreconditionError("ideals over different rings");
    std::size_t n = a.nvars();
    std::size_t ring = n + 4;  // y, x1..xn, x0, s, h
    if (ring > kMaxVars) throw PreconditionError("too many variables");
    Integer denom = lcm(common_denominator(a.gens()), common_denominator(b.gens()));
    ComplexPoly y = ComplexPoly::variable(ring, 0);
    ComplexPoly one_minus_y = ComplexPoly(ring, Coeff(1)) - y;
    std::vector<ComplexPoly> gens;
    for (const auto& f : a.gens()) gens.push_back(y * encode(homogenize(f), ring, 1, denom));
    for (const auto& g : b.gens()) gens.push_back(one_minus_y * encode(homogenize(g), ring, 1, denom));
    // Elimination of y inside each bidegree.
    auto rows = bigrading(ring, 1, n + 2);
    rows.emplace_back(ring, 0);
    rows.back()[0] = 1;
    append_lex(rows, ring);
    std::vector<ValuedPoly> out;
    for (const auto& g : groebner_basis(gens, MonomialOrder(std::move(rows)))) {
        bool has_y = false;
        for (const auto& t : g.terms())
            if (t.first[0]) has_y = true;
        if (!has_y) out.push_back(dehomogenize(decode(g, n + 1, 1, denom)));
    }
    return ValuedIdeal(n, std::move(out));
}

}  // namespace phasetrop
