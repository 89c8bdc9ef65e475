#include "phasetrop/json_io.hpp"

namespace phasetrop {

namespace {

Json optional_level(const std::optional<Exponent>& e)
{
    return e ? to_json(*e) : Json(nullptr);
}

}  // namespace

Json to_json(const Rational& q)
{
    return to_string(q);
}

Json to_json(const ExtExponent& v)
{
    return v.str();
}

Json to_json(const Coeff& c)
{
    return Json::array({to_string(c.re()), to_string(c.im())});
}

Json to_json(Complex z)
{
    return Json::array({z.real(), z.imag()});
}

Json to_json(const CMat2& m)
{
    return Json::array({Json::array({to_json(m(0, 0)), to_json(m(0, 1))}), Json::array({to_json(m(1, 0)), to_json(m(1, 1))})});
}

Json to_json(const PhasePoint& p)
{
    Json phase = Json::array();
    for (const auto& c : p.phase) phase.push_back(to_json(c));
    return {{"level", to_json(p.level)}, {"phase", phase}};
}

Json to_json(const TropicalPoly& p)
{
    Json pieces = Json::array();
    for (const auto& piece : p.pieces()) pieces.push_back({{"slope", piece.slope}, {"intercept", to_json(piece.intercept)}});
    Json roots = Json::array();
    for (const auto& r : p.roots()) roots.push_back(to_json(r));
    return {{"pieces", pieces}, {"roots", roots}};
}

Json to_json(const SL2TropPoint& p)
{
    return {{"level", p.level}, {"phase", to_json(p.phase)}, {"branch", p.unitary_branch() ? "unitary" : "singular"}};
}

Json to_json(const LimitReport& r)
{
    Json errors = Json::array();
    for (const auto& e : r.errors) errors.push_back({{"s", e.s}, {"eps", e.eps}});
    return {{"limit", to_json(r.limit)},
            {"errors", errors},
            {"exact", r.exact},
            {"convergence", to_string(r.convergence)},
            {"decreasing", r.decreasing},
            {"rate_ok", r.rate_ok}};
}

Json to_json(const FiberReport& f, const std::vector<std::string>& names)
{
    return {{"ideal", f.ideal.basis_strings(names)},
            {"homogeneous", f.homogeneous},
            {"dim", f.dimension ? Json(*f.dimension) : Json(nullptr)},
            {"empty", !f.dimension.has_value()}};
}

Json to_json(const CriticalLevelReport& r, const std::vector<std::string>& names)
{
    Json levels = Json::array();
    for (const auto& l : r.levels) levels.push_back(to_json(l));
    Json intervals = Json::array();
    for (const auto& iv : r.intervals) {
        Json j = {{"from", optional_level(iv.from)}, {"to", optional_level(iv.to)}, {"sample", to_json(iv.sample)}};
        j.update(to_json(iv.fiber, names));
        intervals.push_back(j);
    }
    Json at = Json::array();
    for (const auto& l : r.at_level) {
        Json j = {{"level", to_json(l.level)}};
        j.update(to_json(l.fiber, names));
        at.push_back(j);
    }
    return {{"levels", levels}, {"intervals", intervals}, {"at_level", at}, {"flags_ok", r.flags_ok}, {"rounds", r.rounds}};
}

Json to_json(const LayerDecomposition& d)
{
    const auto names = default_names(4, "X");
    Json levels = Json::array();
    Json at = Json::array();
    for (const auto& l : d.levels) {
        levels.push_back(to_json(l.level));
        Json j = {{"level", to_json(l.level)}, {"degrees", {l.min_degree, l.max_degree}}};
        j.update(to_json(l.fiber, names));
        at.push_back(j);
    }
    Json intervals = Json::array();
    for (const auto& iv : d.intervals) {
        Json j = {{"from", to_json(iv.from)}, {"to", optional_level(iv.to)}, {"sample", to_json(iv.sample)}, {"degree", iv.degree}};
        j.update(to_json(iv.fiber, names));
        intervals.push_back(j);
    }
    return {{"poly", d.poly.str()}, {"levels", levels},   {"at_level", at}, {"intervals", intervals},
            {"degrees", d.degrees},  {"generic", d.generic}, {"tags", d.tags}};
}

}  // namespace phasetrop
