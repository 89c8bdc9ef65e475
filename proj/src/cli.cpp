#include "phasetrop/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "phasetrop/json_io.hpp"
#include "phasetrop/lifting.hpp"
#include "phasetrop/parse.hpp"
#include "phasetrop/random.hpp"
#include "phasetrop/svg.hpp"

namespace phasetrop {

namespace {

constexpr int kInputError = 2;
constexpr int kNotConverged = 3;

struct Outcome {
    Json body;
    int code = 0;
};

Json error_json(const std::string& kind, const std::string& message)
{
    return {{"error", {{"kind", kind}, {"message", message}}}};
}

std::string read_input(const std::string& path)
{
    if (path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot read input file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> residue_names(const Session& s)
{
    std::vector<std::string> out;
    for (auto v : s.vars) {
        std::transform(v.begin(), v.end(), v.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
        out.push_back(v);
    }
    return out;
}

bool is_poly(const SessionItem& it) { return std::holds_alternative<ValuedPoly>(it.value); }
bool is_ideal(const SessionItem& it) { return std::holds_alternative<std::vector<ValuedPoly>>(it.value); }
bool is_mat(const SessionItem& it) { return std::holds_alternative<Mat2Entries>(it.value); }

bool is_constant_vector(const SessionItem& it)
{
    if (!is_ideal(it)) return false;
    const auto& v = std::get<std::vector<ValuedPoly>>(it.value);
    return std::all_of(v.begin(), v.end(), [](const ValuedPoly& f) { return f.is_constant(); });
}

HahnScalar constant_of(const ValuedPoly& f)
{
    return f.coefficient(MonomialExp(f.nvars()));
}

std::vector<ValuedPoly> generators(const SessionItem& it)
{
    if (is_poly(it)) return {std::get<ValuedPoly>(it.value)};
    return std::get<std::vector<ValuedPoly>>(it.value);
}

using Eligible = std::function<bool(const SessionItem&)>;
using Handler = std::function<Json(const SessionItem&)>;

// Runs the handler on the selected items; one item gives a bare object.
Json for_items(const Session& s, const std::string& name, const Eligible& ok, const std::string& what, const Handler& h)
{
    std::vector<const SessionItem*> items;
    if (!name.empty()) {
        const SessionItem* it = s.find(name);
        if (!it) throw PreconditionError("no item named '" + name + "'");
        if (!ok(*it)) throw PreconditionError("item '" + name + "' is not " + what);
        items.push_back(it);
    } else {
        for (const auto& it : s.items)
            if (ok(it)) items.push_back(&it);
    }
    if (items.empty()) throw PreconditionError("input contains no " + what);
    if (items.size() == 1) return h(*items.front());
    Json all = Json::array();
    for (const auto* it : items) {
        Json j = {{"name", it->name}};
        j.update(h(*it));
        all.push_back(j);
    }
    return {{"items", all}};
}

std::vector<std::string> split_list(const std::string& text)
{
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        part.erase(std::remove_if(part.begin(), part.end(), [](unsigned char c) { return std::isspace(c); }), part.end());
        if (!part.empty()) out.push_back(part);
    }
    return out;
}

std::vector<double> parse_reals(const std::string& text)
{
    std::vector<double> out;
    for (const auto& p : split_list(text)) {
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(p, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != p.size()) throw PreconditionError("not a number: '" + p + "'");
        out.push_back(v);
    }
    return out;
}

Json scalar_json(const HahnScalar& a)
{
    Json j = {{"value", a.str()}, {"valuation", to_json(valuation(a))}};
    if (a.is_zero()) {
        j["initial_form"] = nullptr;
    } else {
        GradedMonomial m = initial_form(a);
        j["initial_form"] = {{"degree", to_json(m.degree)}, {"coeff", m.coeff.str()}};
    }
    return j;
}

Json selftest(std::uint64_t seed, int& failures)
{
    RandomSource rnd(seed);
    failures = 0;
    int scalars = 0, polys = 0, products = 0, limits = 0;
    for (; scalars < 200; ++scalars) {
        HahnScalar a = rnd.scalar();
        if (parse_scalar(a.str()) != a) ++failures;
    }
    const std::vector<std::string> names{"x", "y", "z"};
    for (; polys < 100; ++polys) {
        ValuedPoly f = rnd.poly(3, 3, 4);
        if (parse_poly(f.str(names), names) != f) ++failures;
    }
    for (; products < 100; ++products) {
        ValuedPoly f = rnd.poly(3, 3, 3), g = rnd.poly(3, 3, 3);
        Exponent alpha = rnd.exponent(2, 3);
        InitialPoly a = initial_poly(f, alpha), b = initial_poly(g, alpha), ab = initial_poly(f * g, alpha);
        if (ab.value != a.value + b.value || ab.rep != a.rep * b.rep) ++failures;
    }
    for (; limits < 50; ++limits) {
        SL2TropPoint p{rnd.real(0.1, 3), {}};
        Complex u(rnd.real(-1, 1), rnd.real(-1, 1)), v(rnd.real(-1, 1), rnd.real(-1, 1));
        Complex w(rnd.real(-1, 1), rnd.real(-1, 1)), z(rnd.real(-1, 1), rnd.real(-1, 1));
        p.phase = {{u * w, u * z, v * w, v * z}};
        p.phase = Complex(1 / p.phase.frobenius()) * p.phase;
        SL2TropPoint q = psi_inverse(psi_limit(p));
        if (std::abs(q.level - p.level) > 1e-8 || distance(q.phase, p.phase) > 1e-8) ++failures;
    }
    return {{"seed", seed},
            {"checks", {{"scalar_round_trip", scalars}, {"poly_round_trip", polys}, {"initial_products", products}, {"limit_round_trip", limits}}},
            {"failures", failures}};
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Phase tropicalization toolkit"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    std::string input = "-", name, alpha_text, theta_text = "1", s_text = "10,20,40,80", svg_path, blocks_text, roots_text;
    int precision = 3;
    std::uint64_t seed = 1;
    std::optional<double> s_point;

    auto with_input = [&](CLI::App* sub) {
        sub->add_option("input", input, "session file, - for standard input")->required();
        sub->add_option("--name", name, "only this item");
        return sub;
    };
    auto* val = with_input(app.add_subcommand("val", "valuations and initial forms of scalars and vectors"));
    auto* trop = with_input(app.add_subcommand("trop", "tropical polynomials"));
    auto* init = with_input(app.add_subcommand("init", "initial polynomial or ideal at a level"));
    init->add_option("--alpha", alpha_text, "level p/q")->required();
    auto* levels = with_input(app.add_subcommand("levels", "critical levels report"));
    auto* fiber = with_input(app.add_subcommand("fiber", "fiber ideal and its dimension at a level"));
    fiber->add_option("--alpha", alpha_text, "level p/q")->required();
    auto* lift = with_input(app.add_subcommand("lift", "lift a root of a univariate initial polynomial"));
    lift->add_option("--alpha", alpha_text, "level p/q")->required();
    lift->add_option("--theta", theta_text, "residual root");
    lift->add_option("--precision", precision, "valuation drop below the leading value");
    auto* limit = with_input(app.add_subcommand("sl2-limit", "limit of the stretched family of a unimodular matrix"));
    auto* invert = with_input(app.add_subcommand("sl2-invert", "level and phase of a unimodular complex matrix"));
    invert->add_option("--s", s_point, "evaluate non-constant entries at t = e^s");
    auto* layers = with_input(app.add_subcommand("layers", "layer decomposition of a surface in SL2"));
    layers->add_option("--svg", svg_path, "write a picture of the tropical polynomial and levels");
    auto* verify = with_input(app.add_subcommand("verify-limit", "compare the stretched family with its limit"));
    verify->add_option("--s", s_text, "comma separated increasing s = log t values");
    auto* realize = with_input(app.add_subcommand("realize", "surface with prescribed levels from homogeneous blocks"));
    realize->add_option("--blocks", blocks_text, "comma separated names of homogeneous polynomials")->required();
    realize->add_option("--roots", roots_text, "comma separated increasing positive levels");
    auto* self = app.add_subcommand("selftest", "seeded randomized consistency checks");
    self->add_option("--seed", seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kInputError;
    }

    Outcome res;
    try {
        if (self->parsed()) {
            int failures = 0;
            res.body = selftest(seed, failures);
            res.code = failures ? 1 : 0;
            out << res.body.dump() << "\n";
            return res.code;
        }
        Session s = parse_session(read_input(input));
        const auto names = residue_names(s);
        const std::size_t n = s.vars.size();
        auto need_vars = [&] {
            if (s.vars.empty()) throw PreconditionError("input declares no variables");
        };
        auto poly_or_ideal = [](const SessionItem& it) { return is_poly(it) || is_ideal(it); };

        if (val->parsed()) {
            auto ok = [](const SessionItem& it) {
                return (is_poly(it) && std::get<ValuedPoly>(it.value).is_constant()) || is_constant_vector(it);
            };
            res.body = for_items(s, name, ok, "a scalar or vector", [&](const SessionItem& it) -> Json {
                if (is_poly(it)) return scalar_json(constant_of(std::get<ValuedPoly>(it.value)));
                std::vector<HahnScalar> z;
                for (const auto& f : std::get<std::vector<ValuedPoly>>(it.value)) z.push_back(constant_of(f));
                Json entries = Json::array();
                for (const auto& a : z) entries.push_back(scalar_json(a));
                return {{"sup", to_json(sup_norm(z))}, {"initial_form", to_json(vector_initial_form(z))}, {"entries", entries}};
            });
        } else if (trop->parsed()) {
            res.body = for_items(s, name, is_poly, "a polynomial", [&](const SessionItem& it) -> Json {
                return to_json(tropical_poly(std::get<ValuedPoly>(it.value)));
            });
        } else if (init->parsed()) {
            need_vars();
            Exponent alpha = parse_rational(alpha_text);
            res.body = for_items(s, name, poly_or_ideal, "a polynomial or ideal", [&](const SessionItem& it) -> Json {
                if (is_poly(it)) {
                    InitialPoly in = initial_poly(std::get<ValuedPoly>(it.value), alpha);
                    return {{"value", to_json(in.value)}, {"poly", in.rep.str(names)}};
                }
                return {{"ideal", initial_ideal(ValuedIdeal(n, generators(it)), alpha).basis_strings(names)}};
            });
        } else if (levels->parsed()) {
            need_vars();
            res.body = for_items(s, name, poly_or_ideal, "a polynomial or ideal", [&](const SessionItem& it) -> Json {
                return to_json(critical_levels(ValuedIdeal(n, generators(it))), names);
            });
        } else if (fiber->parsed()) {
            need_vars();
            Exponent alpha = parse_rational(alpha_text);
            res.body = for_items(s, name, poly_or_ideal, "a polynomial or ideal", [&](const SessionItem& it) -> Json {
                Json j = {{"level", to_json(alpha)}};
                j.update(to_json(fiber_report(ValuedIdeal(n, generators(it)), alpha), names));
                return j;
            });
        } else if (lift->parsed()) {
            if (n != 1) throw PreconditionError("lifting needs exactly one declared variable");
            Exponent alpha = parse_rational(alpha_text);
            HahnScalar theta_s = parse_scalar(theta_text);
            if (!theta_s.is_constant()) throw PreconditionError("theta must be a complex number");
            Coeff theta = theta_s.is_zero() ? Coeff() : theta_s.num().leading_coeff();
            res.body = for_items(s, name, is_poly, "a polynomial", [&](const SessionItem& it) -> Json {
                const auto& f = std::get<ValuedPoly>(it.value);
                LiftResult r = lift_hypersurface_root(f, alpha, theta, precision);
                Exponent target = initial_poly(f, alpha).value - precision;
                return {{"root", r.root.str()},
                        {"residual", to_json(r.residual)},
                        {"target", to_json(target)},
                        {"steps", r.steps},
                        {"initial_form", to_json(vector_initial_form({r.root}))}};
            });
        } else if (limit->parsed()) {
            res.body = for_items(s, name, is_mat, "a matrix", [&](const SessionItem& it) -> Json {
                ValuativeTrop vt = valuative_trop_sl2(HahnMat2(std::get<Mat2Entries>(it.value)));
                Json phase = Json::array();
                for (const auto& c : vt.phase) phase.push_back(to_json(c));
                return {{"level", to_json(vt.level)},
                        {"phase", phase},
                        {"branch", vt.point.unitary_branch() ? "unitary" : "singular"},
                        {"limit", to_json(psi_limit(vt.point))}};
            });
        } else if (invert->parsed()) {
            res.body = for_items(s, name, is_mat, "a matrix", [&](const SessionItem& it) -> Json {
                const auto& e = std::get<Mat2Entries>(it.value);
                bool constant = std::all_of(e.begin(), e.end(), [](const HahnScalar& a) { return a.is_constant(); });
                if (!constant && !s_point) throw PreconditionError("matrix has non-constant entries; pass --s");
                return to_json(psi_inverse(HahnMat2(e).evaluate(s_point.value_or(0.0))));
            });
        } else if (layers->parsed()) {
            if (n != 4) throw PreconditionError("surface commands need exactly four declared variables");
            std::vector<LayerDecomposition> all;
            res.body = for_items(s, name, is_poly, "a polynomial", [&](const SessionItem& it) -> Json {
                ValuedPoly f = det_free_reduce(std::get<ValuedPoly>(it.value));
                LayerDecomposition d = layer_decomposition(f);
                if (!d.generic) res.code = kNotConverged;
                all.push_back(d);
                return to_json(d);
            });
            if (!svg_path.empty()) {
                std::ofstream svg(svg_path);
                if (!svg) throw PreconditionError("cannot write '" + svg_path + "'");
                svg << tropical_svg(tropical_poly(all.front().poly), &all.front());
            }
        } else if (verify->parsed()) {
            std::vector<double> sv = parse_reals(s_text);
            Json samples = Json::array();
            auto ok = [&](const SessionItem& it) { return is_mat(it) && (name.empty() || it.name == name); };
            if (!name.empty() && !s.find(name)) throw PreconditionError("no item named '" + name + "'");
            for (const auto& it : s.items) {
                if (!ok(it)) continue;
                HahnMat2 a(std::get<Mat2Entries>(it.value));
                Json j = {{"name", it.name}, {"matrix", a.str()}};
                LimitReport r = limit_verify(a, sv);
                if (!r.rate_ok) res.code = kNotConverged;
                j.update(to_json(r));
                samples.push_back(j);
            }
            if (samples.empty()) throw PreconditionError("input contains no matrix");
            res.body = {{"samples", samples}};
        } else if (realize->parsed()) {
            std::vector<ComplexPoly> blocks;
            for (const auto& b : split_list(blocks_text)) {
                const SessionItem* it = s.find(b);
                if (!it || !is_poly(*it)) throw PreconditionError("no polynomial named '" + b + "'");
                const auto& f = std::get<ValuedPoly>(it->value);
                ComplexPoly c(f.nvars());
                for (const auto& [m, a] : f.terms()) {
                    if (!a.is_constant()) throw PreconditionError("block '" + b + "' must have constant coefficients");
                    c = c + ComplexPoly::monomial(m, a.num().leading_coeff());
                }
                blocks.push_back(std::move(c));
            }
            std::vector<Exponent> roots;
            for (const auto& r : split_list(roots_text)) roots.push_back(parse_rational(r));
            Realization r = realize_from_layers(blocks, roots);
            Json gammas = Json::array(), found = Json::array();
            for (const auto& g : r.exponents) gammas.push_back(to_json(g));
            for (const auto& g : tropical_roots(r.poly)) found.push_back(to_json(g));
            res.body = {{"poly", r.poly.str(s.vars)}, {"exponents", gammas}, {"roots", found}};
        }
    } catch (const ParseError& e) {
        Json j = error_json("parse", e.message());
        j["error"]["line"] = e.line();
        j["error"]["column"] = e.column();
        res = {j, kInputError};
    } catch (const NonConvergence& e) {
        Json j = error_json("non-convergence", e.what());
        j["error"]["partial"] = to_json(e.partial(), default_names(e.partial().intervals.empty() ? 0 : e.partial().intervals.front().fiber.ideal.nvars(), "X"));
        res = {j, kNotConverged};
    } catch (const PreconditionError& e) {
        res = {error_json("precondition", e.what()), kInputError};
    } catch (const std::domain_error& e) {
        res = {error_json("domain", e.what()), kInputError};
    } catch (const std::length_error& e) {
        res = {error_json("precondition", e.what()), kInputError};
    }
    out << res.body.dump() << "\n";
    return res.code;
}

}  // namespace phasetrop
