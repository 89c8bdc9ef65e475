#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "phasetrop/complex_poly.hpp"
#include "phasetrop/valued_poly.hpp"

namespace phasetrop {

class ValuedIdeal {
public:
    ValuedIdeal(std::size_t nvars, std::vector<ValuedPoly> gens);
    std::size_t nvars() const { return n_; }
    const std::vector<ValuedPoly>& gens() const { return gens_; }

private:
    std::size_t n_;
    std::vector<ValuedPoly> gens_;
};

// Dimension of an affine set; nullopt stands for the empty set.
using Dimension = std::optional<int>;

// Ideal of Q(i)[X1..Xn] with its reduced basis in graded-lex order.
class ComplexIdealRep {
public:
    ComplexIdealRep() = default;
    ComplexIdealRep(std::size_t nvars, std::vector<ComplexPoly> gens);

    std::size_t nvars() const { return n_; }
    const std::vector<ComplexPoly>& gens() const { return gens_; }
    const std::vector<ComplexPoly>& basis() const { return basis_; }

    bool contains(const ComplexPoly& f) const;
    bool contains(const ComplexIdealRep& other) const;
    bool is_unit() const;
    bool is_homogeneous() const;
    // Krull dimension of the quotient ring; -1 for the unit ideal.
    int krull_dimension() const;
    // Dimension of the zero set with the origin removed.
    Dimension punctured_dimension() const;

    ComplexIdealRep operator+(const ComplexIdealRep& other) const;
    ComplexIdealRep operator*(const ComplexIdealRep& other) const;

    friend bool operator==(const ComplexIdealRep& a, const ComplexIdealRep& b)
    {
        return a.n_ == b.n_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const ComplexIdealRep& a, const ComplexIdealRep& b) { return !(a == b); }

    std::vector<std::string> basis_strings(const std::vector<std::string>& names) const;

private:
    std::size_t n_ = 0;
    std::vector<ComplexPoly> gens_;
    std::vector<ComplexPoly> basis_;
};

bool ideal_equal(const ComplexIdealRep& a, const ComplexIdealRep& b);
bool is_homogeneous(const ComplexIdealRep& a);

// Groebner basis of an ideal homogeneous in all variables, the last one being the
// homogenizing variable of weight 0 and the others of weight alpha.
std::vector<ValuedPoly> weight_groebner(const ValuedIdeal& homogeneous, const Exponent& alpha);

// Initial ideals of one ideal at many levels; the level-independent work is done once.
class InitialIdealSolver {
public:
    explicit InitialIdealSolver(const ValuedIdeal& ideal);

    std::size_t nvars() const { return n_; }
    // Saturated generators over x1..xn, x0, s, h with s = t^(1/denominator) and h homogenizing s.
    const std::vector<ComplexPoly>& saturated() const { return saturated_; }
    const Integer& denominator() const { return denom_; }

    struct Sample {
        ComplexIdealRep ideal;
        // Levels at which the leading terms of the basis used here may change.
        std::vector<Exponent> candidates;
    };
    Sample sample(const Exponent& alpha) const;
    ComplexIdealRep initial_ideal(const Exponent& alpha) const { return sample(alpha).ideal; }

private:
    std::size_t n_;
    Integer denom_;                     // exponents live in (1/denom_) Z
    std::vector<ComplexPoly> saturated_;  // variables x1..xn, x0, s, h
};

ComplexIdealRep initial_ideal(const ValuedIdeal& ideal, const Exponent& alpha);

struct FiberReport {
    ComplexIdealRep ideal;
    bool homogeneous;
    Dimension dimension;
};

FiberReport fiber_report(const ValuedIdeal& ideal, const Exponent& alpha);
FiberReport describe(const ComplexIdealRep& ideal);

struct LevelEntry {
    Exponent level;
    FiberReport fiber;
};

struct IntervalEntry {
    std::optional<Exponent> from;  // nullopt: -infinity
    std::optional<Exponent> to;    // nullopt: +infinity
    Exponent sample;
    FiberReport fiber;
};

struct CriticalLevelReport {
    std::vector<Exponent> levels;
    std::vector<IntervalEntry> intervals;  // intervals.size() == levels.size() + 1
    std::vector<LevelEntry> at_level;
    // Interval ideals homogeneous and every level ideal inhomogeneous or different from a neighbour.
    bool flags_ok = true;
    int rounds = 0;
};

class NonConvergence : public std::runtime_error {
public:
    NonConvergence(const std::string& what, CriticalLevelReport partial)
        : std::runtime_error(what), partial_(std::move(partial))
    {
    }
    const CriticalLevelReport& partial() const { return partial_; }

private:
    CriticalLevelReport partial_;
};

struct CriticalLevelOptions {
    int max_rounds = 64;
};

CriticalLevelReport critical_levels(const ValuedIdeal& ideal, const CriticalLevelOptions& options = {});

// Intersection of two ideals over the Hahn field.
ValuedIdeal intersect(const ValuedIdeal& a, const ValuedIdeal& b);

}  // namespace phasetrop
