#include "phasetrop/lifting.hpp"

#include <stdexcept>

namespace phasetrop {

LiftResult lift_hypersurface_root(const ValuedPoly& f, const Exponent& alpha, const Coeff& theta, int precision)
{
    if (f.nvars() != 1) throw PreconditionError("lifting needs a polynomial in one variable");
    if (f.is_zero()) throw PreconditionError("lifting needs a nonzero polynomial");
    if (theta.is_zero()) throw PreconditionError("theta must be nonzero");
    if (precision < 1) throw PreconditionError("precision must be at least 1");

    InitialPoly in = initial_poly(f, alpha);
    if (!in.rep.evaluate({theta}).is_zero())
        throw PreconditionError("theta is not a root of the initial polynomial " + in.rep.str());
    if (in.rep.derivative(0).evaluate({theta}).is_zero())
        throw PreconditionError("ramified: theta is a multiple root of " + in.rep.str());

    const ValuedPoly df = f.derivative(0);
    const Exponent target = in.value - precision;
    // Each step drops the residual by at least one lattice step.
    Integer n = lcm(f.exponent_denominator(), alpha.get_den());
    long max_steps = Integer(Integer(precision) * n).get_si() + 8;

    LiftResult out{HahnScalar::monomial(theta, alpha), {}, 0};
    HahnScalar r = f.evaluate({out.root});
    while (!r.is_zero() && valuation(r).value() > target) {
        if (out.steps >= max_steps) throw std::runtime_error("lifting did not reach the requested precision");
        HahnScalar d = df.evaluate({out.root});
        HahnScalar step = -(leading_monomial(r) / leading_monomial(d));
        out.root += step;
        HahnScalar next = f.evaluate({out.root});
        if (!next.is_zero() && valuation(next) >= valuation(r))
            throw std::logic_error("Newton step did not lower the residual");
        r = std::move(next);
        ++out.steps;
    }
    out.residual = valuation(r);
    return out;
}

bool verify_point(const std::vector<ValuedPoly>& fs, const std::vector<HahnScalar>& z, const ExtExponent& bound)
{
    for (const auto& f : fs)
        if (valuation(f.evaluate(z)) > bound) return false;
    return true;
}

}  // namespace phasetrop
