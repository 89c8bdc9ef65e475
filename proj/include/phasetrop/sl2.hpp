#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "phasetrop/hahn.hpp"

namespace phasetrop {

using Complex = std::complex<double>;

// 2x2 complex matrix, row-major.
struct CMat2 {
    std::array<Complex, 4> e{};

    static CMat2 identity() { return {{1.0, 0.0, 0.0, 1.0}}; }
    Complex operator()(int r, int c) const { return e[2 * r + c]; }

    Complex det() const { return e[0] * e[3] - e[1] * e[2]; }
    Complex trace() const { return e[0] + e[3]; }
    CMat2 adj() const { return {{e[3], -e[1], -e[2], e[0]}}; }
    CMat2 star() const { return {{std::conj(e[0]), std::conj(e[2]), std::conj(e[1]), std::conj(e[3])}}; }
    double frobenius2() const { return std::norm(e[0]) + std::norm(e[1]) + std::norm(e[2]) + std::norm(e[3]); }
    double frobenius() const { return std::sqrt(frobenius2()); }
    bool finite() const;

    friend CMat2 operator+(const CMat2& a, const CMat2& b);
    friend CMat2 operator-(const CMat2& a, const CMat2& b);
    friend CMat2 operator*(const CMat2& a, const CMat2& b);
    friend CMat2 operator*(Complex s, const CMat2& a);
};

double distance(const CMat2& a, const CMat2& b);

// C / sqrt(det C), for det C a positive real.
CMat2 normalize(const CMat2& c);

struct Polar {
    CMat2 hermitian;  // P
    CMat2 unitary;    // U
};

// C = P U. A known determinant can be supplied when the entries are too large for it to be
// recomputed accurately.
Polar polar_decompose(const CMat2& c, std::optional<Complex> det = std::nullopt);
// P^h U.
CMat2 stretch(const CMat2& c, double h, std::optional<Complex> det = std::nullopt);

// A point (level, phase) of the tropicalized group: level 0 with a unimodular phase,
// or positive level with a singular phase.
struct SL2TropPoint {
    double level = 0;
    CMat2 phase;

    bool unitary_branch() const { return level == 0; }
};

CMat2 psi_limit(const SL2TropPoint& p);
SL2TropPoint psi_inverse(const CMat2& c);
CMat2 coamoeba(const CMat2& c);

// Largest eigenvalue of the Hermitian matrix h.
double top_eigenvalue(const CMat2& h);

struct HermitianProjections {
    CMat2 kappa;       // C C*
    CMat2 kappa_star;  // C* C
    double dist;       // distance of kappa to the base point
    double dist_star;  // distance of kappa_star to the base point
};

HermitianProjections hermitian_projections(const CMat2& c);

// 2x2 matrix over the Hahn field.
class HahnMat2 {
public:
    explicit HahnMat2(std::array<HahnScalar, 4> entries);
    const std::array<HahnScalar, 4>& entries() const { return e_; }
    const HahnScalar& operator()(int r, int c) const { return e_[2 * r + c]; }
    bool is_sl2() const { return sl2_; }
    HahnScalar det() const { return e_[0] * e_[3] - e_[1] * e_[2]; }
    // Entries at t = e^s.
    CMat2 evaluate(double s) const;
    friend HahnMat2 operator*(const HahnMat2& a, const HahnMat2& b);
    std::string str() const;

private:
    std::array<HahnScalar, 4> e_;
    bool sl2_;
};

struct ValuativeTrop {
    Exponent level;
    std::array<Coeff, 4> phase;
    SL2TropPoint point;
};

ValuativeTrop valuative_trop_sl2(const HahnMat2& a);

struct RealProjection {
    double level;
    CMat2 representative;  // unit Frobenius ray for positive level, unitary part at level 0
};

RealProjection project_pi_R(const SL2TropPoint& p);

struct LimitSample {
    double s;
    double eps;
};

// Expected decay of the error: none (constant family), exponential in s, or of order 1/s.
enum class Convergence { Exact, Exponential, InverseLinear };

std::string to_string(Convergence c);

struct LimitReport {
    CMat2 limit;
    std::vector<LimitSample> errors;
    Convergence convergence;
    bool exact;       // the stretched family is constant
    bool decreasing;  // strictly decreasing until below 1e-9
    bool rate_ok;
};

LimitReport limit_verify(const HahnMat2& a, const std::vector<double>& s_values);

}  // namespace phasetrop
