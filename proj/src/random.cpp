#include "phasetrop/random.hpp"

#include <algorithm>

namespace phasetrop {

Rational RandomSource::rational(int max_num, int max_den)
{
    Rational q(integer(-max_num, max_num), integer(1, max_den));
    q.canonicalize();
    return q;
}

Coeff RandomSource::coeff(bool allow_imag)
{
    for (;;) {
        Coeff c(rational(5, 3), allow_imag && coin(0.3) ? rational(3, 2) : Rational(0));
        if (!c.is_zero()) return c;
    }
}

Exponent RandomSource::exponent(int range, int max_den)
{
    int den = integer(1, max_den);
    Rational e(integer(-range * den, range * den), den);
    e.canonicalize();
    return e;
}

HahnPoly RandomSource::hahn_poly(int max_terms, int range, int max_den)
{
    for (;;) {
        std::vector<HahnPoly::Term> terms;
        int k = integer(1, max_terms);
        for (int j = 0; j < k; ++j) terms.emplace_back(exponent(range, max_den), coeff());
        HahnPoly p = HahnPoly::from_terms(std::move(terms));
        if (!p.is_zero()) return p;
    }
}

HahnScalar RandomSource::scalar(int max_terms, int range, int max_den, double p_fraction)
{
    HahnPoly num = hahn_poly(max_terms, range, max_den);
    if (!coin(p_fraction)) return HahnScalar(num);
    return HahnScalar(num, hahn_poly(2, range, max_den));
}

MonomialExp RandomSource::monomial(std::size_t nvars, int deg)
{
    MonomialExp m(nvars);
    for (int k = 0; k < deg; ++k) m[integer(0, static_cast<int>(nvars) - 1)] += 1;
    return m;
}

ValuedPoly RandomSource::poly(std::size_t nvars, int max_deg, int max_terms, int range, int max_den)
{
    for (;;) {
        ValuedPoly f(nvars);
        int k = integer(1, max_terms);
        for (int j = 0; j < k; ++j) f.add_term(monomial(nvars, integer(0, max_deg)), scalar(2, range, max_den, 0.1));
        if (!f.is_zero()) return f;
    }
}

ValuedPoly RandomSource::sparse_poly(std::size_t nvars, int max_deg, int max_terms, int range, int max_den)
{
    for (;;) {
        ValuedPoly f(nvars);
        int k = integer(2, std::max(2, max_terms));
        for (int j = 0; j < k; ++j) {
            Coeff c(Rational(integer(-2, 2)), coin(0.3) ? Rational(integer(-1, 1)) : Rational(0));
            if (c.is_zero()) c = Coeff(Rational(1));
            f.add_term(monomial(nvars, integer(0, max_deg)), HahnScalar::monomial(c, exponent(range, max_den)));
        }
        if (!f.is_constant()) return f;
    }
}

ComplexPoly RandomSource::homogeneous(std::size_t nvars, int deg, int max_terms)
{
    for (;;) {
        ComplexPoly f(nvars);
        int k = integer(1, max_terms);
        for (int j = 0; j < k; ++j) f = f + ComplexPoly::monomial(monomial(nvars, deg), coeff());
        if (!f.is_zero()) return f;
    }
}

}  // namespace phasetrop
