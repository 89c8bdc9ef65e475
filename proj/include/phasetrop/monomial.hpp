#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace phasetrop {

inline constexpr std::size_t kMaxVars = 16;

// Exponent vector u of a monomial x^u.
class MonomialExp {
public:
    MonomialExp() = default;
    explicit MonomialExp(std::size_t nvars) : n_(check(nvars)) {}
    MonomialExp(std::initializer_list<int> exps) : n_(check(exps.size()))
    {
        std::size_t i = 0;
        for (int e : exps) e_[i++] = e;
    }
    static MonomialExp unit(std::size_t nvars, std::size_t var)
    {
        MonomialExp m(nvars);
        m.e_[var] = 1;
        return m;
    }

    std::size_t nvars() const { return n_; }
    int operator[](std::size_t i) const { return e_[i]; }
    int& operator[](std::size_t i) { return e_[i]; }

    int total() const
    {
        int s = 0;
        for (std::size_t i = 0; i < n_; ++i) s += e_[i];
        return s;
    }
    bool is_one() const { return total() == 0; }

    bool divides(const MonomialExp& o) const
    {
        for (std::size_t i = 0; i < n_; ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }
    bool coprime(const MonomialExp& o) const
    {
        for (std::size_t i = 0; i < n_; ++i)
            if (e_[i] && o.e_[i]) return false;
        return true;
    }
    friend MonomialExp operator*(MonomialExp a, const MonomialExp& b)
    {
        for (std::size_t i = 0; i < a.n_; ++i) a.e_[i] += b.e_[i];
        return a;
    }
    friend MonomialExp operator/(MonomialExp a, const MonomialExp& b)
    {
        for (std::size_t i = 0; i < a.n_; ++i) a.e_[i] -= b.e_[i];
        return a;
    }
    friend MonomialExp lcm(MonomialExp a, const MonomialExp& b)
    {
        for (std::size_t i = 0; i < a.n_; ++i) a.e_[i] = std::max(a.e_[i], b.e_[i]);
        return a;
    }
    friend bool operator==(const MonomialExp& a, const MonomialExp& b)
    {
        return a.n_ == b.n_ && a.e_ == b.e_;
    }
    friend bool operator!=(const MonomialExp& a, const MonomialExp& b) { return !(a == b); }

    // Drop or append variables.
    MonomialExp resized(std::size_t nvars) const
    {
        MonomialExp m(nvars);
        for (std::size_t i = 0; i < std::min<std::size_t>(nvars, n_); ++i) m.e_[i] = e_[i];
        return m;
    }

private:
    static std::uint8_t check(std::size_t n)
    {
        if (n > kMaxVars) throw std::length_error("too many variables");
        return static_cast<std::uint8_t>(n);
    }
    std::array<std::int32_t, kMaxVars> e_{};
    std::uint8_t n_ = 0;
};

// Graded lex with x1 > x2 > ...; the canonical order for printing and reduced bases.
struct GrlexGreater {
    bool operator()(const MonomialExp& a, const MonomialExp& b) const
    {
        int da = a.total(), db = b.total();
        if (da != db) return da > db;
        for (std::size_t i = 0; i < a.nvars(); ++i)
            if (a[i] != b[i]) return a[i] > b[i];
        return false;
    }
};

// Matrix order: compare successive integer weight rows, larger is greater.
class MonomialOrder {
public:
    MonomialOrder() = default;
    explicit MonomialOrder(std::vector<std::vector<long long>> rows) : rows_(std::move(rows)) {}

    static MonomialOrder grlex(std::size_t nvars)
    {
        std::vector<std::vector<long long>> rows;
        rows.emplace_back(nvars, 1);
        for (std::size_t i = 0; i < nvars; ++i) {
            rows.emplace_back(nvars, 0);
            rows.back()[i] = 1;
        }
        return MonomialOrder(std::move(rows));
    }

    // >0 if a > b, 0 if equal, <0 otherwise.
    int compare(const MonomialExp& a, const MonomialExp& b) const
    {
        for (const auto& r : rows_) {
            long long s = 0;
            for (std::size_t i = 0; i < r.size(); ++i) s += r[i] * (a[i] - b[i]);
            if (s != 0) return s > 0 ? 1 : -1;
        }
        return 0;
    }
    bool greater(const MonomialExp& a, const MonomialExp& b) const { return compare(a, b) > 0; }

private:
    std::vector<std::vector<long long>> rows_;
};

}  // namespace phasetrop
