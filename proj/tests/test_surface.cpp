#include "doctest.h"
#include "support.hpp"

#include "phasetrop/surface_layers.hpp"

using namespace testing;

namespace {

const std::vector<std::string> X4{"x1", "x2", "x3", "x4"};

ValuedPoly F(const std::string& text) { return P(text, X4); }

ComplexIdealRep CI(const std::vector<std::string>& gens)
{
    std::vector<ComplexPoly> g;
    for (const auto& s : gens) g.push_back(C(s, X4));
    return ComplexIdealRep(4, g);
}

}  // namespace

TEST_CASE("det-free reduction examples")
{
    CHECK(det_free_reduce(F("x1*x4 - x2*x3 + x1")) == F("x1 + 1"));
    CHECK(det_free_reduce(F("t*(x1*x4 - x2*x3) + x1")) == F("x1 + t"));
    CHECK(det_free_reduce(F("x1 - 1")) == F("x1 - 1"));
    CHECK_THROWS_AS(det_free_reduce(F("x1*x4 - x2*x3 - 1")), PreconditionError);
    CHECK_THROWS_AS(det_free_reduce(P("x - 1", xyz())), PreconditionError);
}

TEST_CASE("det-free reduction leaves no positive-level initial form in the determinant ideal")
{
    RandomSource rnd(21);
    ComplexPoly det = det_residue();
    ValuedPoly det_minus_one = det_poly() - ValuedPoly(4, HahnScalar(1));
    for (int k = 0; k < 20; ++k) {
        ValuedPoly g = rnd.sparse_poly(4, 1, 2);
        ValuedPoly f = rnd.sparse_poly(4, 2, 3) + g * det_minus_one;
        ValuedPoly r;
        try {
            r = det_free_reduce(f);
        } catch (const PreconditionError&) {
            continue;
        }
        for (const auto& a : {Q("1/3"), Q("1"), Q("5/2"), Q("7")}) CHECK_FALSE(divide_exact(initial_poly(r, a).rep, det));
        for (const auto& a : {Q("-1"), Q("0"), Q("2")})
            CHECK(InitialIdealSolver(ValuedIdeal(4, {f, det_minus_one})).initial_ideal(a) ==
                  InitialIdealSolver(ValuedIdeal(4, {r, det_minus_one})).initial_ideal(a));
    }
}

TEST_CASE("hat simplification")
{
    CHECK(hat_simplify(F("(1 + t^-1)*x1")) == F("x1"));
    CHECK(hat_simplify(F("x1*x4 - x2*x3 - 1")) == F("x1*x4 - x2*x3 - 1"));
    CHECK_THROWS_AS(hat_simplify(ValuedPoly(4)), PreconditionError);

    RandomSource rnd(22);
    for (int k = 0; k < 40; ++k) {
        ValuedPoly f = rnd.poly(4, 3, 4);
        ValuedPoly h = hat_simplify(f);
        CHECK(tropical_roots(h) == tropical_roots(f));
        std::vector<Exponent> points{Exponent(-7), Exponent(0), Exponent(9)};
        auto roots = tropical_roots(f);
        for (std::size_t j = 0; j < roots.size(); ++j) {
            points.push_back(roots[j]);
            if (j + 1 < roots.size()) points.push_back((roots[j] + roots[j + 1]) / 2);
        }
        for (const auto& a : points) {
            InitialPoly a1 = initial_poly(f, a), a2 = initial_poly(h, a);
            CHECK(a1.value == a2.value);
            CHECK(a1.rep == a2.rep);
        }
    }
}

TEST_CASE("layer decomposition of a linear surface")
{
    ValuedPoly f = F("x1 - 1");
    LayerDecomposition d = layer_decomposition(f);
    CHECK(d.level_values() == std::vector<Exponent>{0});
    CHECK(d.generic);
    CHECK_FALSE(d.empty_base);
    REQUIRE(d.levels.size() == 1);
    REQUIRE(d.intervals.size() == 1);
    CHECK(d.levels[0].fiber.ideal == CI({"x1*x4 - x2*x3 - 1", "x1 - 1"}));
    CHECK(d.levels[0].fiber.dimension == 2);
    CHECK_FALSE(d.levels[0].fiber.homogeneous);
    CHECK(d.intervals[0].fiber.ideal == CI({"x1*x4 - x2*x3", "x1"}));
    CHECK(d.intervals[0].fiber.dimension == 2);
    CHECK(d.intervals[0].fiber.homogeneous);
    CHECK_FALSE(d.intervals[0].to);

    CriticalLevelReport r = critical_levels(ValuedIdeal(4, {det_poly() - ValuedPoly(4, HahnScalar(1)), f}));
    CHECK(r.levels == std::vector<Exponent>{0});
    CHECK(r.at_level[0].fiber.ideal == d.levels[0].fiber.ideal);
    CHECK(r.intervals.back().fiber.ideal == d.intervals[0].fiber.ideal);
}

TEST_CASE("layer decomposition with a positive level")
{
    LayerDecomposition d = layer_decomposition(F("1 + t^-4*(x1^2 + x2*x3)"));
    CHECK(d.level_values() == std::vector<Exponent>{0, 2});
    CHECK(d.degrees == std::vector<int>{0, 2});
    CHECK(d.generic);
    CHECK(d.empty_base);
    CHECK(d.tags == std::vector<std::string>{"empty", "empty on the interval after 0"});
    REQUIRE(d.intervals.size() == 2);
    CHECK(*d.intervals[0].to == 2);
    CHECK(d.intervals[1].fiber.ideal == CI({"x1*x4 - x2*x3", "x1^2 + x2*x3"}));
    CHECK(d.levels[1].fiber.ideal == CI({"x1*x4 - x2*x3", "1 + x1^2 + x2*x3"}));
    CHECK(d.levels[1].min_degree == 0);
    CHECK(d.levels[1].max_degree == 2);
}

TEST_CASE("layer decomposition is invariant under det-free reduction")
{
    LayerDecomposition a = layer_decomposition(det_free_reduce(F("x1*x4 - x2*x3 + x1")));
    LayerDecomposition b = layer_decomposition(F("x1 + 1"));
    CHECK(a.level_values() == b.level_values());
    REQUIRE(a.levels.size() == b.levels.size());
    for (std::size_t k = 0; k < a.levels.size(); ++k) CHECK(a.levels[k].fiber.ideal == b.levels[k].fiber.ideal);
    for (std::size_t k = 0; k < a.intervals.size(); ++k) CHECK(a.intervals[k].fiber.ideal == b.intervals[k].fiber.ideal);
}

TEST_CASE("empty and non-generic layers are tagged")
{
    LayerDecomposition e = layer_decomposition(F("x1*x4 - x2*x3 + 1"));
    CHECK(e.empty_base);
    CHECK(std::find(e.tags.begin(), e.tags.end(), "empty") != e.tags.end());

    LayerDecomposition n = layer_decomposition(F("(x1*x4 - x2*x3)*x1 + 1"));
    CHECK_FALSE(n.generic);
    CHECK_FALSE(n.tags.empty());
    CHECK_THROWS_AS(layer_decomposition(P("x - 1", xyz())), PreconditionError);
}

TEST_CASE("realization from layers")
{
    Realization one = realize_from_layers({C("1", X4), C("x1^2 + x2*x3", X4)}, {Exponent(2)});
    CHECK(one.poly == F("1 + t^-4*(x1^2 + x2*x3)"));
    CHECK(one.exponents == std::vector<Exponent>{0, -4});

    Realization single = realize_from_layers({C("x1 - x2", X4)}, {});
    CHECK(single.poly == F("x1 - x2"));

    Realization three = realize_from_layers({C("1", X4), C("x1 + x4", X4), C("x2^3 - x3^3", X4)}, {Exponent(1), Exponent(3)});
    CHECK(tropical_roots(three.poly) == std::vector<Exponent>{1, 3});
    CHECK(grid_bends(three.poly, Exponent(-2), Exponent(6), 64) == std::vector<Exponent>{1, 3});
    CHECK(positive(layer_decomposition(three.poly).level_values()) == std::vector<Exponent>{1, 3});

    CHECK_THROWS_AS(realize_from_layers({C("1 + x1", X4)}, {}), PreconditionError);
    CHECK_THROWS_AS(realize_from_layers({C("x1", X4), C("1", X4)}, {Exponent(1)}), PreconditionError);
    CHECK_THROWS_AS(realize_from_layers({C("1", X4), C("x1", X4)}, {Exponent(-1)}), PreconditionError);
    CHECK_THROWS_AS(realize_from_layers({C("1", X4), C("x1", X4)}, {}), PreconditionError);
}

TEST_CASE("property: random realizations round trip")
{
    RandomSource rnd(23);
    for (int k = 0; k < 20; ++k) {
        int blocks = rnd.integer(1, 3);
        std::vector<ComplexPoly> fs;
        std::vector<Exponent> roots;
        int deg = rnd.integer(0, 1);
        for (int b = 0; b < blocks; ++b) {
            fs.push_back(rnd.homogeneous(4, deg, 3));
            deg += rnd.integer(1, 2);
            if (b) roots.push_back((roots.empty() ? Exponent(0) : roots.back()) + abs(rnd.rational(3, 2)) + Q("1/4"));
        }
        Realization r = realize_from_layers(fs, roots);
        CHECK(tropical_roots(r.poly) == roots);
        for (std::size_t b = 0; b < fs.size(); ++b) {
            Exponent mid;
            if (b == 0)
                mid = roots.empty() ? Exponent(1) : Exponent(roots[0] / 2);
            else if (b + 1 < fs.size())
                mid = (roots[b - 1] + roots[b]) / 2;
            else
                mid = roots[b - 1] + 1;
            CHECK(initial_poly(r.poly, mid).rep == fs[b]);
        }
    }
}

TEST_CASE("property: layers agree with critical levels on random surfaces")
{
    RandomSource rnd(24);
    int rejected = 0;
    for (int k = 0; k < 5; ++k) {
        ValuedPoly f = random_surface(rnd, rejected);
        INFO(f.str(X4));
        LayerDecomposition d = layer_decomposition(f);
        CHECK(positive(d.level_values()) == positive(tropical_roots(f)));
        for (const auto& l : d.levels) {
            CHECK(l.fiber.dimension == 2);
            CHECK_FALSE(l.fiber.homogeneous);
        }
        for (const auto& iv : d.intervals) {
            CHECK(iv.fiber.dimension == 2);
            CHECK(iv.fiber.homogeneous);
        }
        CriticalLevelReport r = critical_levels(ValuedIdeal(4, {det_poly() - ValuedPoly(4, HahnScalar(1)), f}));
        std::vector<Exponent> expect = positive(r.levels);
        expect.insert(expect.begin(), Exponent(0));
        CHECK(d.level_values() == expect);
    }
    MESSAGE("regenerated samples: " << rejected);
}
