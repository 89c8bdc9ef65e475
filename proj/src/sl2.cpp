#include "phasetrop/sl2.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "phasetrop/phase_space.hpp"

namespace phasetrop {

namespace {

constexpr double kDetTol = 1e-9;
constexpr double kUnitaryLevel = 1e-7;

std::string text(Complex z)
{
    std::ostringstream os;
    os.precision(17);
    os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    return os.str();
}

// Square-root data of the Hermitian matrix C C*: eigenvalues s1 >= s2 of P = sqrt(C C*).
struct Singular {
    double s1, s2, gap;  // gap = s1 - s2
};

Singular singular_values(const CMat2& c, double absdet)
{
    double f2 = c.frobenius2();
    double gap = std::sqrt(std::max(0.0, f2 - 2 * absdet));
    double sum = std::sqrt(f2 + 2 * absdet);
    double s1 = (sum + gap) / 2;
    return {s1, absdet / s1, gap};
}

}  // namespace

bool CMat2::finite() const
{
    return std::all_of(e.begin(), e.end(), [](Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

CMat2 operator+(const CMat2& a, const CMat2& b)
{
    return {{a.e[0] + b.e[0], a.e[1] + b.e[1], a.e[2] + b.e[2], a.e[3] + b.e[3]}};
}

CMat2 operator-(const CMat2& a, const CMat2& b)
{
    return {{a.e[0] - b.e[0], a.e[1] - b.e[1], a.e[2] - b.e[2], a.e[3] - b.e[3]}};
}

CMat2 operator*(const CMat2& a, const CMat2& b)
{
    return {{a.e[0] * b.e[0] + a.e[1] * b.e[2], a.e[0] * b.e[1] + a.e[1] * b.e[3], a.e[2] * b.e[0] + a.e[3] * b.e[2],
             a.e[2] * b.e[1] + a.e[3] * b.e[3]}};
}

CMat2 operator*(Complex s, const CMat2& a)
{
    return {{s * a.e[0], s * a.e[1], s * a.e[2], s * a.e[3]}};
}

double distance(const CMat2& a, const CMat2& b)
{
    return (a - b).frobenius();
}

CMat2 normalize(const CMat2& c)
{
    Complex d = c.det();
    if (!(d.real() > 0) || std::abs(d.imag()) > kDetTol * std::max(1.0, std::abs(d)))
        throw PreconditionError("normalization needs a positive real determinant, got " + text(d));
    return (1.0 / std::sqrt(d.real())) * c;
}

namespace {

double max_entry(const CMat2& c)
{
    double m = 0;
    for (Complex z : c.e) m = std::max(m, std::abs(z));
    return m;
}

// Polar data of c / m with m the largest entry modulus, so that C C* cannot overflow.
struct ScaledPolar {
    Polar pu;
    Singular sv;
    double scale;
};

ScaledPolar scaled_polar(const CMat2& c, std::optional<Complex> det)
{
    if (!c.finite()) throw PreconditionError("matrix has non-finite entries");
    double m = max_entry(c);
    if (m == 0) throw PreconditionError("polar decomposition needs an invertible matrix");
    CMat2 n = Complex(1 / m) * c;
    Complex d = det ? *det / m / m : n.det();
    double ad = std::abs(d);
    if (ad == 0 || !std::isfinite(ad)) throw PreconditionError("polar decomposition needs an invertible matrix");
    double sum = std::sqrt(n.frobenius2() + 2 * ad);
    Complex phase = d / ad;
    CMat2 u = (1.0 / sum) * (n + phase * n.star().adj());
    CMat2 p = (1.0 / sum) * (n * n.star() + Complex(ad) * CMat2::identity());
    return {{p, u}, singular_values(n, ad), m};
}

}  // namespace

Polar polar_decompose(const CMat2& c, std::optional<Complex> det)
{
    ScaledPolar sp = scaled_polar(c, det);
    return {Complex(sp.scale) * sp.pu.hermitian, sp.pu.unitary};
}

CMat2 stretch(const CMat2& c, double h, std::optional<Complex> det)
{
    if (!(h > 0)) throw PreconditionError("stretch exponent must be positive");
    ScaledPolar sp = scaled_polar(c, det);
    const Singular& sv = sp.sv;
    // P^h = s2^h I + q (P - s2 I) with q the divided difference of x^h at s1, s2.
    double l = std::log1p(sv.gap / sv.s2);
    double q = l == 0 ? h * std::pow(sv.s2, h - 1) : std::pow(sv.s2, h - 1) * std::expm1(h * l) / std::expm1(l);
    double low = std::pow(sv.s2, h);
    CMat2 ph = Complex(q) * (sp.pu.hermitian - Complex(sv.s2) * CMat2::identity()) + Complex(low) * CMat2::identity();
    return Complex(std::pow(sp.scale, h)) * (ph * sp.pu.unitary);
}

CMat2 psi_limit(const SL2TropPoint& p)
{
    if (!(p.level >= 0) || !std::isfinite(p.level)) throw PreconditionError("level must be a finite nonnegative number");
    if (!p.phase.finite()) throw PreconditionError("phase has non-finite entries");
    Complex d = p.phase.det();
    if (p.level == 0) {
        if (std::abs(d - 1.0) > kDetTol) throw PreconditionError("phase at level 0 must have determinant 1, got " + text(d));
    } else {
        double scale = p.phase.frobenius2();
        if (scale == 0) throw PreconditionError("phase must be nonzero");
        if (std::abs(d) > kDetTol * scale) throw PreconditionError("phase at positive level must be singular, got determinant " + text(d));
    }
    double a = p.level;
    CMat2 m = Complex(std::exp(a)) * p.phase + Complex(std::exp(-a)) * p.phase.star().adj();
    Complex dm = m.det();
    return (1.0 / std::sqrt(dm)) * m;
}

double top_eigenvalue(const CMat2& h)
{
    double a = h.e[0].real(), d = h.e[3].real();
    double mid = (a + d) / 2, half = (a - d) / 2;
    return mid + std::sqrt(half * half + std::norm(h.e[1]));
}

SL2TropPoint psi_inverse(const CMat2& c)
{
    if (!c.finite()) throw PreconditionError("matrix has non-finite entries");
    if (std::abs(c.det() - 1.0) > kDetTol) throw PreconditionError("matrix must have determinant 1, got " + text(c.det()));
    CMat2 h = c * c.star();
    double top = top_eigenvalue(h);
    double level = 0.5 * std::log(top);
    if (level < kUnitaryLevel) return {0, c};
    double low = 1 / top;
    CMat2 proj = Complex(1 / (top - low)) * (h - Complex(low) * CMat2::identity());
    CMat2 ray = proj * c;
    return {level, Complex(1 / ray.frobenius()) * ray};
}

CMat2 coamoeba(const CMat2& c)
{
    if (std::abs(c.det() - 1.0) > kDetTol) throw PreconditionError("matrix must have determinant 1, got " + text(c.det()));
    return normalize(c + c.star().adj());
}

HermitianProjections hermitian_projections(const CMat2& c)
{
    if (std::abs(c.det() - 1.0) > kDetTol) throw PreconditionError("matrix must have determinant 1, got " + text(c.det()));
    CMat2 k = c * c.star();
    CMat2 ks = c.star() * c;
    return {k, ks, std::abs(0.5 * std::log(top_eigenvalue(k))), std::abs(0.5 * std::log(top_eigenvalue(ks)))};
}

HahnMat2::HahnMat2(std::array<HahnScalar, 4> entries) : e_(std::move(entries))
{
    sl2_ = det() == HahnScalar(1);
}

CMat2 HahnMat2::evaluate(double s) const
{
    CMat2 m;
    for (int k = 0; k < 4; ++k) m.e[k] = evaluate_numeric(e_[k], s);
    return m;
}

HahnMat2 operator*(const HahnMat2& a, const HahnMat2& b)
{
    return HahnMat2({a.e_[0] * b.e_[0] + a.e_[1] * b.e_[2], a.e_[0] * b.e_[1] + a.e_[1] * b.e_[3],
                     a.e_[2] * b.e_[0] + a.e_[3] * b.e_[2], a.e_[2] * b.e_[1] + a.e_[3] * b.e_[3]});
}

std::string HahnMat2::str() const
{
    return "[[" + e_[0].str() + ", " + e_[1].str() + "], [" + e_[2].str() + ", " + e_[3].str() + "]]";
}

ValuativeTrop valuative_trop_sl2(const HahnMat2& a)
{
    if (!a.is_sl2()) throw PreconditionError("matrix determinant is " + a.det().str() + ", not 1");
    PhasePoint pp = vector_initial_form({a.entries().begin(), a.entries().end()});
    if (sgn(pp.level) < 0) throw std::logic_error("negative level for a unimodular matrix");
    ValuativeTrop out{pp.level, {pp.phase[0], pp.phase[1], pp.phase[2], pp.phase[3]}, {}};
    out.point.level = pp.level.get_d();
    for (int k = 0; k < 4; ++k) out.point.phase.e[k] = pp.phase[k].to_complex();
    Complex d = out.point.phase.det();
    bool ok = sgn(pp.level) == 0 ? std::abs(d - 1.0) <= kDetTol : std::abs(d) <= kDetTol * out.point.phase.frobenius2();
    if (!ok) throw std::logic_error("phase determinant inconsistent with the level");
    return out;
}

RealProjection project_pi_R(const SL2TropPoint& p)
{
    if (p.level == 0) return {0, polar_decompose(p.phase).unitary};
    double f = p.phase.frobenius();
    if (f == 0) throw PreconditionError("phase must be nonzero");
    return {p.level, Complex(1 / f) * p.phase};
}

namespace {

bool unit_monomial(const HahnScalar& a)
{
    return a.is_polynomial() && a.num().size() == 1 && a.num().terms()[0].second.norm2() == 1;
}

// Diagonal or antidiagonal with unit-modulus monomial entries: R_{1/s} of the family is constant.
bool exact_family(const HahnMat2& a)
{
    const auto& e = a.entries();
    bool diag = e[1].is_zero() && e[2].is_zero() && unit_monomial(e[0]) && unit_monomial(e[3]);
    bool anti = e[0].is_zero() && e[3].is_zero() && unit_monomial(e[1]) && unit_monomial(e[2]);
    return diag || anti;
}

// Exponential decay exactly when the phase has top singular value 1: squared Frobenius norm 1
// when singular, 2 when unimodular.
Convergence expected_convergence(const HahnMat2& a, const ValuativeTrop& v)
{
    if (exact_family(a)) return Convergence::Exact;
    Rational f2 = 0;
    for (const auto& c : v.phase) f2 += c.norm2();
    return f2 == (sgn(v.level) == 0 ? 2 : 1) ? Convergence::Exponential : Convergence::InverseLinear;
}

constexpr double kFloor = 1e-9;

}  // namespace

std::string to_string(Convergence c)
{
    switch (c) {
    case Convergence::Exact: return "exact";
    case Convergence::Exponential: return "exponential";
    case Convergence::InverseLinear: return "inverse_linear";
    }
    return "";
}

LimitReport limit_verify(const HahnMat2& a, const std::vector<double>& s_values)
{
    if (s_values.empty()) throw PreconditionError("no sample points");
    for (std::size_t k = 0; k < s_values.size(); ++k) {
        if (!(s_values[k] > 0)) throw PreconditionError("sample points must be positive");
        if (k && !(s_values[k] > s_values[k - 1])) throw PreconditionError("sample points must increase");
    }
    LimitReport r;
    ValuativeTrop v = valuative_trop_sl2(a);
    r.limit = psi_limit(v.point);
    for (double s : s_values) {
        CMat2 c = a.evaluate(s);
        r.errors.push_back({s, distance(stretch(c, 1 / s, Complex(1)), r.limit)});
    }
    r.convergence = expected_convergence(a, v);
    r.exact = r.convergence == Convergence::Exact;
    r.decreasing = true;
    for (std::size_t k = 1; k < r.errors.size(); ++k)
        if (!(r.errors[k].eps < r.errors[k - 1].eps || r.errors[k].eps < kFloor)) r.decreasing = false;
    double last = r.errors.back().eps;
    switch (r.convergence) {
    case Convergence::Exact:
        r.rate_ok = std::all_of(r.errors.begin(), r.errors.end(), [](const LimitSample& x) { return x.eps < 1e-12; });
        break;
    case Convergence::Exponential:
        r.rate_ok = r.decreasing && last < kFloor;
        break;
    case Convergence::InverseLinear: {
        double ratio = r.errors.size() > 1 ? last / r.errors[r.errors.size() - 2].eps : 0.5;
        r.rate_ok = r.decreasing && last < 0.05 && ratio >= 0.3 && ratio <= 0.7;
        break;
    }
    }
    return r;
}

}  // namespace phasetrop
