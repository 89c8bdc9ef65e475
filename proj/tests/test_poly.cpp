#include "doctest.h"
#include "phasetrop/phase_space.hpp"
#include "support.hpp"

using namespace testing;

namespace {

const std::vector<std::string> X1 = {"x"};
const std::vector<std::string> X12 = {"x1", "x2"};

ComplexPoly residue_poly(const std::string& text, std::size_t n) { return C(text, default_names(n, "x")); }

}  // namespace

TEST_CASE("polynomial arithmetic")
{
    CHECK(P("(x - t)*(x + t)", X1) == P("x^2 - t^2", X1));
    ValuedPoly f = P("t*x^2 + 3*x - 1/(t+1)", X1);
    CHECK((f + (-f)).is_zero());
    RandomSource rnd(31);
    for (int k = 0; k < 100; ++k) {
        ValuedPoly a = rnd.poly(3, 3, 4), b = rnd.poly(3, 3, 4);
        CHECK((a * b).total_degree() == a.total_degree() + b.total_degree());
    }
}

TEST_CASE("monomial valuation")
{
    CHECK(monomial_valuation(P("t*x1^2 + x2", X12), WeightVector{1, 1}) == ExtExponent(Exponent(3)));
    CHECK(monomial_valuation(P("x - t", X1), Exponent(1)) + monomial_valuation(P("x + t", X1), Exponent(1)) ==
          monomial_valuation(P("x^2 - t^2", X1), Exponent(1)));
    CHECK(monomial_valuation(P("x1^2*x2^3", X12), WeightVector{Q("1/2"), Q("1/3")}) == ExtExponent(Exponent(2)));
    CHECK(monomial_valuation(ValuedPoly(2), WeightVector{0, 0}).is_neg_inf());
}

TEST_CASE("leading part")
{
    CHECK(leading_part(P("t*x1^2 + x2", X12), WeightVector{1, 1}) == P("t*x1^2", X12));
    ValuedPoly h = P("3*x1^2 - x1*x2 + (1+i)*x2^2", X12);
    CHECK(leading_part(h, WeightVector{Q("1/2"), Q("1/2")}) == h);
    RandomSource rnd(32);
    for (int k = 0; k < 200; ++k) {
        ValuedPoly f = rnd.poly(3, 3, 4), g = rnd.poly(3, 3, 4);
        WeightVector w{rnd.exponent(2, 3), rnd.exponent(2, 3), rnd.exponent(2, 3)};
        CHECK(monomial_valuation(leading_part(f, w) * leading_part(g, w), w) ==
              monomial_valuation(f, w) + monomial_valuation(g, w));
    }
}

TEST_CASE("initial polynomial")
{
    ValuedPoly det1 = P("x1*x4 - x2*x3 - 1", x1234());
    InitialPoly a = initial_poly(det1, Exponent(-1));
    CHECK(a.value == 0);
    CHECK(a.rep == residue_poly("-1", 4));
    InitialPoly b = initial_poly(det1, Exponent(0));
    CHECK(b.value == 0);
    CHECK(b.rep == residue_poly("x1*x4 - x2*x3 - 1", 4));
    InitialPoly c = initial_poly(det1, Exponent(1));
    CHECK(c.value == 2);
    CHECK(c.rep == residue_poly("x1*x4 - x2*x3", 4));
    InitialPoly d = initial_poly(P("x - t", X1), Exponent(1));
    CHECK(d.value == 1);
    CHECK(d.rep.str() == "X1 - 1");
    CHECK_THROWS_AS(initial_poly(ValuedPoly(1), Exponent(0)), PreconditionError);
    // Coefficients are read through the splitting t^gamma.
    InitialPoly e = initial_poly(P("(2*t^(1/2) + 1)*x + 3*t^(3/2)", X1), Exponent(1));
    CHECK(e.value == Q("3/2"));
    CHECK(e.rep == residue_poly("2*x1 + 3", 1));
}

TEST_CASE("tropical polynomial")
{
    TropicalPoly a = tropical_poly(P("x1*x4 - x2*x3 - 1", x1234()));
    CHECK(a.pieces() == std::vector<TropicalPiece>{{0, 0}, {2, 0}});
    CHECK(a.eval(1) == 2);
    TropicalPoly b = tropical_poly(P("1 + t*x", X1));
    CHECK(b.pieces() == std::vector<TropicalPiece>{{0, 0}, {1, 1}});
    CHECK(b.eval(-2) == 0);
    CHECK_THROWS_AS(tropical_poly(ValuedPoly(1)), PreconditionError);
}

TEST_CASE("tropical roots")
{
    CHECK(tropical_roots(P("x1*x4 - x2*x3 - 1", x1234())) == std::vector<Exponent>{0});
    CHECK(tropical_roots(P("1 + t^-1*x", X1)) == std::vector<Exponent>{1});
    ValuedPoly f = P("1 + t*x + t^3*x^2", X1);
    CHECK(tropical_roots(f) == std::vector<Exponent>{Q("-3/2")});
    CHECK(grid_bends(f, -4, 1, 400) == std::vector<Exponent>{Q("-3/2")});
}

TEST_CASE("tilde reduction")
{
    // Monomials are kept or dropped whole.
    CHECK(tilde_reduce(P("1 + t*x + t^-10*x", X1)) == P("1 + (t + t^-10)*x", X1));
    CHECK(tilde_reduce(P("1 + x^2 + t^-5*x", X1)) == P("1 + x^2", X1));
    ValuedPoly g = P("1 + t^-1*x + t^-3*x^2", X1);
    CHECK(tilde_reduce(g) == g);
    ValuedPoly det1 = P("x1*x4 - x2*x3 - 1", x1234());
    CHECK(tilde_reduce(det1) == det1);
}

TEST_CASE("homogenization")
{
    const std::vector<std::string> xx0{"x", "x0"};
    ValuedPoly f = P("x - t", X1);
    CHECK(homogenize(f) == P("x - t*x0", xx0));
    CHECK(dehomogenize(homogenize(f)) == f);
    InitialPoly h = initial_poly(P("x - t*x0", xx0), WeightVector{1, 0});
    ComplexPoly back = h.rep.substitute({ComplexPoly::variable(1, 0), ComplexPoly(1, Coeff(1))});
    CHECK(back == initial_poly(f, Exponent(1)).rep);
}

TEST_CASE("linear substitution")
{
    LinearMap phi{{{S("1"), S("1")}, {S("0"), S("1")}}, {}};
    CHECK(linear_substitute(P("x1", X12), phi) == P("x1 + x2", X12));
    LinearMap id{{{S("1"), S("0")}, {S("0"), S("1")}}, {}};
    ValuedPoly f = P("t*x1^2 - x1*x2 + 1/(t+1)", X12);
    CHECK(linear_substitute(f, id) == f);
    LinearMap singular{{{S("1"), S("1")}, {S("t"), S("t")}}, {}};
    CHECK_THROWS_AS(linear_substitute(f, singular), PreconditionError);
    RandomSource rnd(33);
    for (int k = 0; k < 100; ++k) {
        LinearMap m = random_triangular(rnd, 3);
        ValuedPoly a = rnd.poly(3, 2, 3), b = rnd.poly(3, 2, 3);
        CHECK(linear_substitute(a * b, m) == linear_substitute(a, m) * linear_substitute(b, m));
    }
}

TEST_CASE("graded substitution")
{
    LinearMap phi{{{S("1"), S("1")}, {S("0"), S("1")}}, {}};
    for (int a : {-2, 0, 3}) CHECK(graded_substitute(residue_poly("x1", 2), a, phi) == residue_poly("x1 + x2", 2));
    // A lower-order entry drops out of the residue image.
    LinearMap drop{{{S("1"), S("t^-1")}, {S("0"), S("1")}}, {}};
    CHECK(graded_substitute(residue_poly("x1", 2), 0, drop) == residue_poly("x1", 2));
    // An entry of positive valuation raises the level of x1: rejected, naming the variable.
    LinearMap raise{{{S("1"), S("t")}, {S("0"), S("1")}}, {}};
    CHECK_THROWS_WITH_AS(graded_substitute(residue_poly("x1", 2), 0, raise), doctest::Contains("x1"), PreconditionError);
}

TEST_CASE("property: commuting square of substitution and initial polynomials")
{
    RandomSource rnd(34);
    for (int k = 0; k < 200; ++k) {
        std::size_t n = 1 + k % 3;
        LinearMap phi = random_triangular(rnd, n);
        ValuedPoly f = rnd.poly(n, 3, 4);
        Exponent alpha = rnd.exponent(2, 3);
        ComplexPoly lhs = graded_substitute(initial_poly(f, alpha).rep, alpha, phi);
        InitialPoly rhs = initial_poly(linear_substitute(f, phi), alpha);
        CHECK(rhs.value == initial_poly(f, alpha).value);
        CHECK(lhs == rhs.rep);
    }
}

TEST_CASE("property: substitution preserves the sup valuation and initial forms of points")
{
    RandomSource rnd(35);
    for (int k = 0; k < 200; ++k) {
        std::size_t n = 1 + k % 4;
        LinearMap phi = random_triangular(rnd, n);
        std::vector<HahnScalar> z;
        while (sup_norm(z).is_neg_inf()) {
            z.clear();
            for (std::size_t i = 0; i < n; ++i) z.push_back(rnd.coin(0.2) ? HahnScalar() : rnd.scalar());
        }
        auto w = map_point(phi, z);
        CHECK(sup_norm(w) == sup_norm(z));
        PhasePoint pz = vector_initial_form(z), pw = vector_initial_form(w);
        // Residue matrix applied to the phase.
        std::vector<Coeff> image(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const HahnScalar& a = phi.matrix[i][j];
                if (!a.is_zero() && sgn(valuation(a).value()) == 0) image[i] += residue(a) * pz.phase[phi.target(j)];
            }
        CHECK(pw == PhasePoint{pz.level, image});
    }
}

TEST_CASE("property: monomial valuation axioms and multiplicativity of initial polynomials")
{
    RandomSource rnd(36);
    for (int k = 0; k < 300; ++k) {
        std::size_t n = 1 + k % 4;
        ValuedPoly f = rnd.poly(n, 3, 4), g = rnd.poly(n, 3, 4);
        Exponent alpha = rnd.exponent(2, 3);
        CHECK(monomial_valuation(f * g, alpha) == monomial_valuation(f, alpha) + monomial_valuation(g, alpha));
        ExtExponent vf = monomial_valuation(f, alpha), vg = monomial_valuation(g, alpha), vs = monomial_valuation(f + g, alpha);
        CHECK(vs <= max(vf, vg));
        if (vf != vg) CHECK(vs == max(vf, vg));
        CHECK(initial_poly(f * g, alpha).rep == initial_poly(f, alpha).rep * initial_poly(g, alpha).rep);
        CHECK(initial_poly(f, alpha).rep == initial_poly(leading_part(f, diagonal_weight(n, alpha)), alpha).rep);
    }
}

TEST_CASE("property: tropical polynomials agree with monomial valuations and grid bends")
{
    RandomSource rnd(37);
    for (int k = 0; k < 200; ++k) {
        ValuedPoly f = rnd.poly(2, 4, 5);
        Exponent alpha = rnd.exponent(3, 4);
        TropicalPoly tr = tropical_poly(f);
        CHECK(tr.eval(alpha) == monomial_valuation(f, alpha).value());
        auto roots = tr.roots();
        CHECK(std::is_sorted(roots.begin(), roots.end()));
        // Bends lie in [-12, 12] for these bounds and are at least 1/64 apart, so a 1/240 grid separates them.
        CHECK(grid_bends(f, -13, 13, 26 * 240) == roots);
        // Convexity: midpoint value does not exceed the average.
        Exponent a = rnd.exponent(3, 2), b = rnd.exponent(3, 2);
        CHECK(2 * tr.eval((a + b) / 2) <= tr.eval(a) + tr.eval(b));
    }
}

TEST_CASE("property: tilde reduction preserves initial polynomials")
{
    RandomSource rnd(38);
    for (int k = 0; k < 200; ++k) {
        ValuedPoly f = rnd.poly(2, 4, 6);
        ValuedPoly g = tilde_reduce(f);
        CHECK(tropical_poly(g).eval(0) == tropical_poly(f).eval(0));
        std::vector<Exponent> tests;
        auto roots = tropical_roots(f);
        for (const auto& r : roots) tests.insert(tests.end(), {r, r - 1, r + Q("1/3")});
        tests.push_back(0);
        for (const auto& a : tests) {
            CHECK(initial_poly(g, a).rep == initial_poly(f, a).rep);
            CHECK(initial_poly(g, a).value == initial_poly(f, a).value);
        }
    }
}

TEST_CASE("property: homogenized initial polynomial restricts to the initial polynomial")
{
    RandomSource rnd(39);
    for (int k = 0; k < 200; ++k) {
        ValuedPoly f = rnd.poly(2, 3, 4);
        Exponent alpha = rnd.exponent(2, 3);
        ValuedPoly F = homogenize(f);
        CHECK(F.is_homogeneous());
        CHECK(dehomogenize(F) == f);
        ComplexPoly in = initial_poly(F, WeightVector{alpha, alpha, 0}).rep;
        ComplexPoly restricted = in.substitute({ComplexPoly::variable(2, 0), ComplexPoly::variable(2, 1), ComplexPoly(2, Coeff(1))});
        CHECK(restricted == initial_poly(f, alpha).rep);
    }
}
