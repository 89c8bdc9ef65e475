#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "phasetrop/initial_ideals.hpp"
#include "phasetrop/parse.hpp"
#include "phasetrop/random.hpp"
#include "phasetrop/sl2.hpp"
#include "phasetrop/surface_layers.hpp"

namespace testing {

using namespace phasetrop;

inline HahnScalar S(const std::string& text) { return parse_scalar(text); }
inline Exponent Q(const std::string& text) { return parse_rational(text); }

inline const std::vector<std::string>& xyz()
{
    static const std::vector<std::string> v{"x", "y", "z"};
    return v;
}
inline const std::vector<std::string>& x1234()
{
    static const std::vector<std::string> v{"x1", "x2", "x3", "x4"};
    return v;
}
inline ValuedPoly P(const std::string& text, const std::vector<std::string>& vars) { return parse_poly(text, vars); }
inline ComplexPoly C(const std::string& text, const std::vector<std::string>& vars)
{
    ValuedPoly f = parse_poly(text, vars);
    ComplexPoly c(f.nvars());
    for (const auto& [m, a] : f.terms()) c = c + ComplexPoly::monomial(m, a.num().leading_coeff());
    return c;
}
inline ComplexIdealRep ideal_of(std::size_t n, const std::vector<std::string>& gens)
{
    std::vector<ComplexPoly> g;
    for (const auto& s : gens) g.push_back(C(s, default_names(n, "x")));
    return ComplexIdealRep(n, g);
}

// Bends of alpha -> max_u (nu(c_u) + alpha |u|), located by scanning a rational grid and
// intersecting the two lines that win on either side of each slope change.
inline std::vector<Exponent> grid_bends(const ValuedPoly& f, const Exponent& lo, const Exponent& hi, int steps)
{
    auto best = [&](const Exponent& a) {
        std::pair<Exponent, int> top{0, -1};
        bool first = true;
        for (const auto& [m, c] : f.terms()) {
            Exponent v = valuation(c).value() + a * m.total();
            if (first || v > top.first || (v == top.first && m.total() > top.second)) top = {v, m.total()};
            first = false;
        }
        return top;
    };
    auto intercept = [&](int slope) {
        std::optional<Exponent> b;
        for (const auto& [m, c] : f.terms())
            if (m.total() == slope && (!b || valuation(c).value() > *b)) b = valuation(c).value();
        return *b;
    };
    std::vector<Exponent> out;
    Exponent step = (hi - lo) / steps;
    int prev = best(lo).second;
    for (int k = 1; k <= steps; ++k) {
        Exponent a = lo + step * k;
        int cur = best(a).second;
        if (cur != prev) {
            Exponent x = (intercept(prev) - intercept(cur)) / (cur - prev);
            out.push_back(x);
        }
        prev = cur;
    }
    return out;
}

// Rationals in [lo, hi] with denominator at most max_den.
inline std::vector<Exponent> farey_grid(const Exponent& lo, const Exponent& hi, int max_den)
{
    std::set<Exponent> pts;
    for (int q = 1; q <= max_den; ++q) {
        Integer first = Integer(mpz_class(lo.get_num() * q) / lo.get_den()) - 1;
        for (Integer p = first;; ++p) {
            Exponent x(p, q);
            x.canonicalize();
            if (x > hi) break;
            if (x >= lo) pts.insert(x);
        }
    }
    return {pts.begin(), pts.end()};
}

// Candidate levels read off the generators: balance points of terms of different degree.
inline std::vector<Exponent> generator_candidates(const ValuedIdeal& I)
{
    std::set<Exponent> out;
    for (const auto& f : I.gens())
        for (const auto& [u, cu] : f.terms())
            for (const auto& [v, cv] : f.terms())
                if (u.total() < v.total())
                    out.insert((valuation(cu).value() - valuation(cv).value()) / (v.total() - u.total()));
    return {out.begin(), out.end()};
}

struct OracleReport {
    std::vector<Exponent> levels;
    std::vector<ComplexIdealRep> level_ideals;
    std::vector<ComplexIdealRep> interval_ideals;  // one more than levels
    bool resolved = true;  // every change of ideal happens at a grid point
};

// Brute-force critical levels: sample the initial ideal on a dense rational grid.
inline OracleReport sampling_oracle(const ValuedIdeal& I, int max_den = 12)
{
    auto cands = generator_candidates(I);
    Exponent lo = cands.empty() ? Exponent(-1) : cands.front() - 1;
    Exponent hi = cands.empty() ? Exponent(1) : cands.back() + 1;
    InitialIdealSolver solver(I);
    // Widen until the ends agree with far samples.
    for (int widen = 0; widen < 6; ++widen) {
        if (solver.initial_ideal(lo) == solver.initial_ideal(lo - 50) &&
            solver.initial_ideal(hi) == solver.initial_ideal(hi + 50))
            break;
        lo -= 4;
        hi += 4;
    }
    std::vector<Exponent> grid = farey_grid(lo, hi, max_den);
    std::vector<ComplexIdealRep> ideals;
    for (const auto& a : grid) ideals.push_back(solver.initial_ideal(a));

    // Runs of equal ideals: singletons are levels, longer runs are intervals, and they must alternate.
    struct Run {
        std::size_t first, last;
    };
    std::vector<Run> runs;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        if (!runs.empty() && ideals[k] == ideals[runs.back().last])
            runs.back().last = k;
        else
            runs.push_back({k, k});
    }
    OracleReport r;
    for (std::size_t j = 0; j < runs.size(); ++j) {
        bool level = runs[j].first == runs[j].last && j != 0 && j + 1 != runs.size();
        bool expect_level = j % 2 == 1;
        if (level != expect_level) r.resolved = false;
        if (level) {
            r.levels.push_back(grid[runs[j].first]);
            r.level_ideals.push_back(ideals[runs[j].first]);
        } else {
            r.interval_ideals.push_back(ideals[runs[j].first]);
        }
    }
    return r;
}

inline bool agrees_with_oracle(const CriticalLevelReport& r, const OracleReport& o)
{
    if (!o.resolved || r.levels != o.levels || r.intervals.size() != o.interval_ideals.size()) return false;
    for (std::size_t j = 0; j < r.levels.size(); ++j)
        if (!ideal_equal(r.at_level[j].fiber.ideal, o.level_ideals[j])) return false;
    for (std::size_t j = 0; j < r.intervals.size(); ++j)
        if (!ideal_equal(r.intervals[j].fiber.ideal, o.interval_ideals[j])) return false;
    return true;
}

// Random ideal with 1..max_gens generators with monomial coefficients.
inline ValuedIdeal random_ideal(RandomSource& rnd, std::size_t n, int max_deg, int max_gens)
{
    std::vector<ValuedPoly> gens;
    int m = rnd.integer(1, max_gens);
    for (int j = 0; j < m; ++j) gens.push_back(rnd.sparse_poly(n, max_deg, 3));
    return ValuedIdeal(n, std::move(gens));
}

struct LiftInstance {
    ValuedPoly f;
    Exponent alpha;
    Coeff theta;
};

// Univariate f = (x - root) * cofactor + perturbation where root has initial form theta*t^alpha,
// the perturbation sits strictly below the top level and theta stays a simple residual root.
inline LiftInstance random_lift_instance(RandomSource& rnd)
{
    const std::vector<std::string> x{"x"};
    for (;;) {
        Exponent alpha = rnd.exponent(2, 2);
        Coeff theta(Rational(rnd.integer(1, 3)) * (rnd.coin() ? 1 : -1), rnd.coin(0.3) ? Rational(1) : Rational(0));
        HahnScalar root = HahnScalar::monomial(theta, alpha);
        if (rnd.coin(0.7)) root += HahnScalar::monomial(rnd.coeff(), alpha - Exponent(rnd.integer(1, 4)) / 2);
        ValuedPoly f = (ValuedPoly::variable(1, 0) - ValuedPoly(1, root)) * rnd.poly(1, 2, 3, 2, 2);
        Exponent top = monomial_valuation(f, alpha).value();
        ValuedPoly e = rnd.poly(1, 2, 2, 2, 2);
        Exponent shift = top - 1 - monomial_valuation(e, alpha).value();
        f = f + e.scaled(HahnScalar::t_power(shift));
        InitialPoly in = initial_poly(f, alpha);
        if (!in.rep.evaluate({theta}).is_zero() || in.rep.derivative(0).evaluate({theta}).is_zero()) continue;
        return {f, alpha, theta};
    }
}

// Element of the valuation ring: valuation exactly 0 when unit, otherwise at most 0 (or zero).
inline HahnScalar random_integral(RandomSource& rnd, bool unit)
{
    if (!unit && rnd.coin(0.3)) return HahnScalar();
    HahnScalar a = rnd.scalar(2, 2, 2, 0.2);
    Exponent target = unit ? Exponent(0) : Exponent(-rnd.integer(0, 2)) / rnd.integer(1, 2);
    return a * HahnScalar::t_power(target - valuation(a).value());
}

// Upper triangular map with unit diagonal in the valuation ring, optionally permuted.
inline LinearMap random_triangular(RandomSource& rnd, std::size_t n)
{
    LinearMap phi;
    phi.matrix.assign(n, std::vector<HahnScalar>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) phi.matrix[i][j] = random_integral(rnd, i == j);
    if (rnd.coin()) {
        phi.perm.resize(n);
        for (std::size_t j = 0; j < n; ++j) phi.perm[j] = j;
        std::shuffle(phi.perm.begin(), phi.perm.end(), rnd.engine());
    }
    return phi;
}

inline std::vector<HahnScalar> map_point(const LinearMap& phi, const std::vector<HahnScalar>& z)
{
    // x_i = sum_j a_ij y_perm(j): the image of a point y.
    std::vector<HahnScalar> out(phi.size());
    for (std::size_t i = 0; i < phi.size(); ++i)
        for (std::size_t j = 0; j < phi.size(); ++j) out[i] += phi.matrix[i][j] * z[phi.target(j)];
    return out;
}

// c t^e with c in {1, -1, i, -i} and e in [-1, 1] with denominator at most 2.
inline HahnScalar random_unit_monomial(RandomSource& rnd)
{
    static const Coeff units[] = {Coeff(1), Coeff(-1), Coeff::imag_unit(), -Coeff::imag_unit()};
    return HahnScalar::monomial(units[rnd.integer(0, 3)], rnd.exponent(1, 2));
}

// One or two unit monomials with distinct exponents.
inline HahnScalar random_small_hahn(RandomSource& rnd)
{
    HahnScalar h = random_unit_monomial(rnd);
    if (rnd.coin(0.4)) {
        HahnScalar h2 = h + random_unit_monomial(rnd);
        if (h2.num().size() == 2) h = h2;
    }
    return h;
}

// [[1, h], [0, 1]] [[1, 0], [g, 1]] with small random h, g.
inline HahnMat2 random_elementary_product(RandomSource& rnd)
{
    HahnScalar one(1), zero(0);
    return HahnMat2({one, random_small_hahn(rnd), zero, one}) * HahnMat2({one, zero, random_small_hahn(rnd), one});
}

inline std::vector<Exponent> positive(const std::vector<Exponent>& v)
{
    std::vector<Exponent> out;
    for (const auto& x : v)
        if (sgn(x) > 0) out.push_back(x);
    return out;
}

// Random det-free surface of degree at most 3 whose decomposition is generic, has a nonempty
// level-0 layer and at least one positive level. Discarded draws are counted in rejected.
inline ValuedPoly random_surface(RandomSource& rnd, int& rejected)
{
    for (;;) {
        ValuedPoly f = rnd.sparse_poly(4, 3, 4);
        try {
            f = det_free_reduce(f);
        } catch (const PreconditionError&) {
            ++rejected;
            continue;
        }
        LayerDecomposition d = layer_decomposition(f);
        if (d.generic && !d.empty_base && d.levels.size() > 1) return f;
        ++rejected;
    }
}

}  // namespace testing
