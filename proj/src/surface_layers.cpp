#include "phasetrop/surface_layers.hpp"

#include <algorithm>
#include <set>

namespace phasetrop {

ValuedPoly det_poly()
{
    return ValuedPoly::from_complex(det_residue());
}

ComplexPoly det_residue()
{
    return ComplexPoly::monomial({1, 0, 0, 1}, Coeff(1)) - ComplexPoly::monomial({0, 1, 1, 0}, Coeff(1));
}

std::optional<ComplexPoly> divide_exact(const ComplexPoly& f, const ComplexPoly& d)
{
    if (d.is_zero()) throw std::domain_error("division by zero");
    const auto& [dm, dc] = d.terms().front();
    Coeff inv = dc.inverse();
    ComplexPoly rest = f, quot(f.nvars());
    while (!rest.is_zero()) {
        const auto& [m, c] = rest.terms().front();
        if (!dm.divides(m)) return std::nullopt;
        ComplexPoly q = ComplexPoly::monomial(m / dm, c * inv);
        quot = quot + q;
        rest = rest - q * d;
    }
    return quot;
}

namespace {

void check_surface(const ValuedPoly& f)
{
    if (f.nvars() != 4) throw PreconditionError("surface polynomials need exactly 4 variables");
    if (f.is_zero()) throw PreconditionError("surface polynomial must be nonzero");
}

// Positive roots, the midpoints between them, one point past the last and one before the first.
std::vector<Exponent> positive_test_levels(const ValuedPoly& f)
{
    std::vector<Exponent> roots;
    for (const auto& r : tropical_roots(f))
        if (sgn(r) > 0) roots.push_back(r);
    if (roots.empty()) return {Exponent(1)};
    std::vector<Exponent> out{roots.front() / 2};
    for (std::size_t k = 0; k < roots.size(); ++k) {
        out.push_back(roots[k]);
        out.push_back(k + 1 < roots.size() ? Exponent((roots[k] + roots[k + 1]) / 2) : Exponent(roots[k] + 1));
    }
    return out;
}

}  // namespace

ValuedPoly det_free_reduce(const ValuedPoly& f)
{
    check_surface(f);
    const ComplexPoly det = det_residue();
    const ValuedPoly det_minus_one = det_poly() - ValuedPoly(4, HahnScalar(1));
    ValuedPoly cur = f;
    int cap = 4 * std::max(1, f.total_degree()) + 16;
    for (int iter = 0;; ++iter) {
        if (cur.is_zero()) throw PreconditionError("polynomial lies in <det - 1>");
        bool changed = false;
        for (const auto& alpha : positive_test_levels(cur)) {
            InitialPoly in = initial_poly(cur, alpha);
            auto quot = divide_exact(in.rep, det);
            if (!quot) continue;
            if (iter >= cap) throw PreconditionError("reduction modulo det - 1 does not terminate; the polynomial may lie in <det - 1>");
            ValuedPoly g(4);
            for (const auto& [u, lambda] : quot->terms())
                g.add_term(u, HahnScalar::monomial(lambda, in.value - 2 * alpha - alpha * u.total()));
            cur = cur - g * det_minus_one;
            changed = true;
            break;
        }
        if (!changed) return cur;
    }
}

ValuedPoly hat_simplify(const ValuedPoly& f)
{
    if (f.is_zero()) throw PreconditionError("hat simplification of zero");
    ValuedPoly r(f.nvars());
    ValuedPoly reduced = tilde_reduce(f);
    for (const auto& [m, c] : reduced.terms()) r.add_term(m, leading_monomial(c));
    return r;
}

std::vector<Exponent> LayerDecomposition::level_values() const
{
    std::vector<Exponent> out;
    for (const auto& l : levels) out.push_back(l.level);
    return out;
}

LayerDecomposition layer_decomposition(const ValuedPoly& f)
{
    check_surface(f);
    const ComplexPoly det = det_residue();
    const ComplexPoly det_minus_one = det - ComplexPoly(4, Coeff(1));
    TropicalPoly trop = tropical_poly(f);

    LayerDecomposition out;
    out.poly = f;
    std::vector<Exponent> levels{0};
    for (const auto& r : trop.roots())
        if (sgn(r) > 0) levels.push_back(r);

    for (const auto& beta : levels) {
        ComplexPoly in = initial_poly(f, beta).rep;
        ComplexIdealRep ideal(4, {sgn(beta) == 0 ? det_minus_one : det, in});
        int lo = in.terms().back().first.total(), hi = in.total_degree();
        out.levels.push_back({beta, describe(ideal), lo, hi});
    }
    for (std::size_t k = 0; k < levels.size(); ++k) {
        std::optional<Exponent> to;
        Exponent sample = levels[k] + 1;
        if (k + 1 < levels.size()) {
            to = levels[k + 1];
            sample = (levels[k] + levels[k + 1]) / 2;
        }
        ComplexPoly in = initial_poly(f, sample).rep;
        ComplexIdealRep ideal(4, {det, in});
        out.intervals.push_back({levels[k], to, sample, describe(ideal), in.total_degree()});
        out.degrees.push_back(in.total_degree());
    }

    if (out.levels.front().fiber.ideal.is_unit()) {
        out.empty_base = true;
        out.tags.push_back("empty");
    }
    for (const auto& l : out.levels) {
        if (sgn(l.level) == 0 && out.empty_base) continue;
        if (l.fiber.dimension != 2) {
            out.generic = false;
            out.tags.push_back("non-generic at level " + to_string(l.level));
        }
    }
    for (const auto& iv : out.intervals) {
        if (iv.fiber.ideal.is_unit()) {
            out.tags.push_back("empty on the interval after " + to_string(iv.from));
            continue;
        }
        if (iv.fiber.dimension != 2 || !iv.fiber.homogeneous) {
            out.generic = false;
            out.tags.push_back("non-generic on the interval after " + to_string(iv.from));
        }
    }
    return out;
}

Realization realize_from_layers(const std::vector<ComplexPoly>& blocks, const std::vector<Exponent>& roots)
{
    if (blocks.empty()) throw PreconditionError("no blocks given");
    if (roots.size() + 1 != blocks.size())
        throw PreconditionError("need exactly one root fewer than blocks, got " + std::to_string(blocks.size()) +
                                " blocks and " + std::to_string(roots.size()) + " roots");
    std::size_t n = blocks.front().nvars();
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        const auto& b = blocks[k];
        if (b.nvars() != n) throw PreconditionError("blocks live in different rings");
        if (b.is_zero()) throw PreconditionError("block " + std::to_string(k) + " is zero");
        if (!b.is_homogeneous()) throw PreconditionError("block " + std::to_string(k) + " is not homogeneous");
        if (k && b.total_degree() <= blocks[k - 1].total_degree())
            throw PreconditionError("block degrees must increase strictly");
    }
    for (std::size_t k = 0; k < roots.size(); ++k) {
        if (sgn(roots[k]) <= 0) throw PreconditionError("roots must be positive");
        if (k && roots[k] <= roots[k - 1]) throw PreconditionError("roots must increase strictly");
    }
    Realization out{ValuedPoly(n), {Exponent(0)}};
    for (std::size_t k = 1; k < blocks.size(); ++k)
        out.exponents.push_back(out.exponents.back() -
                                roots[k - 1] * (blocks[k].total_degree() - blocks[k - 1].total_degree()));
    for (std::size_t k = 0; k < blocks.size(); ++k)
        out.poly = out.poly + ValuedPoly::from_complex(blocks[k]).scaled(HahnScalar::t_power(out.exponents[k]));
    return out;
}

}  // namespace phasetrop
