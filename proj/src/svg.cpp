#include "phasetrop/svg.hpp"

#include <algorithm>
#include <sstream>

namespace phasetrop {

std::string tropical_svg(const TropicalPoly& trop, const LayerDecomposition* layers)
{
    constexpr double W = 640, H = 400, M = 40, BAR = 60;
    std::vector<Exponent> roots = trop.roots();
    double lo = roots.empty() ? -1 : roots.front().get_d() - 1;
    double hi = roots.empty() ? 1 : roots.back().get_d() + 1;
    if (layers) hi = std::max(hi, layers->levels.back().level.get_d() + 1), lo = std::min(lo, -1.0);

    constexpr int samples = 200;
    std::vector<std::pair<double, double>> pts;
    for (int k = 0; k <= samples; ++k) {
        double a = lo + (hi - lo) * k / samples;
        pts.emplace_back(a, trop.eval(Rational(a)).get_d());
    }
    for (const auto& r : roots) pts.emplace_back(r.get_d(), trop.eval(r).get_d());
    std::sort(pts.begin(), pts.end());
    auto [ymin_it, ymax_it] = std::minmax_element(pts.begin(), pts.end(), [](auto& a, auto& b) { return a.second < b.second; });
    double ymin = ymin_it->second, ymax = ymax_it->second;
    if (ymax - ymin < 1e-9) ymax = ymin + 1;

    double plot_h = H - 2 * M - (layers ? BAR : 0);
    auto px = [&](double a) { return M + (a - lo) / (hi - lo) * (W - 2 * M); };
    auto py = [&](double v) { return M + (ymax - v) / (ymax - ymin) * plot_h; };

    std::ostringstream os;
    os.precision(6);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
    for (const auto& [a, v] : pts) os << px(a) << "," << py(v) << " ";
    os << "\"/>\n";
    for (const auto& r : roots)
        os << "<circle cx=\"" << px(r.get_d()) << "\" cy=\"" << py(trop.eval(r).get_d()) << "\" r=\"4\" fill=\"red\"><title>"
           << to_string(r) << "</title></circle>\n";
    if (layers) {
        double y = H - M - BAR / 2;
        double x0 = px(0), x1 = W - M;
        os << "<line x1=\"" << x0 << "\" y1=\"" << y << "\" x2=\"" << x1 << "\" y2=\"" << y
           << "\" stroke=\"steelblue\" stroke-width=\"6\"/>\n";
        for (const auto& l : layers->levels) {
            double x = px(l.level.get_d());
            os << "<line x1=\"" << x << "\" y1=\"" << y - 12 << "\" x2=\"" << x << "\" y2=\"" << y + 12
               << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
            os << "<text x=\"" << x << "\" y=\"" << y + 28 << "\" font-size=\"12\" text-anchor=\"middle\">" << to_string(l.level)
               << "</text>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace phasetrop
