#include "phasetrop/phase_space.hpp"

namespace phasetrop {

ExtExponent sup_norm(const std::vector<HahnScalar>& z)
{
    ExtExponent best;
    for (const auto& a : z) best = max(best, valuation(a));
    return best;
}

PhasePoint vector_initial_form(const std::vector<HahnScalar>& z)
{
    ExtExponent top = sup_norm(z);
    if (top.is_neg_inf()) throw PreconditionError("initial form of the zero vector");
    PhasePoint p{top.value(), {}};
    for (const auto& a : z) {
        if (!a.is_zero() && valuation(a) == top)
            p.phase.push_back(initial_form(a).coeff);
        else
            p.phase.emplace_back(0);
    }
    return p;
}

PhasePoint graded_scalar_action(const GradedMonomial& m, const PhasePoint& p)
{
    if (m.coeff.is_zero()) throw PreconditionError("graded action by zero");
    PhasePoint r{p.level + m.degree, p.phase};
    for (auto& c : r.phase) c *= m.coeff;
    return r;
}

}  // namespace phasetrop
