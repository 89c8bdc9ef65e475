#include "phasetrop/groebner.hpp"

#include <algorithm>

namespace phasetrop {

namespace {

struct Term {
    MonomialExp m;
    Coeff c;
};

// Terms sorted descending under the working order.
using Poly = std::vector<Term>;

Poly to_sorted(const ComplexPoly& f, const MonomialOrder& order)
{
    Poly p;
    p.reserve(f.terms().size());
    for (const auto& [m, c] : f.terms()) p.push_back({m, c});
    std::sort(p.begin(), p.end(), [&](const Term& a, const Term& b) { return order.greater(a.m, b.m); });
    return p;
}

ComplexPoly from_sorted(std::size_t nvars, const Poly& p)
{
    std::vector<ComplexPoly::Term> t;
    t.reserve(p.size());
    for (const auto& x : p) t.emplace_back(x.m, x.c);
    return ComplexPoly::from_terms(nvars, std::move(t));
}

void make_monic(Poly& p)
{
    if (p.empty() || p.front().c.is_one()) return;
    Coeff inv = p.front().c.inverse();
    for (auto& t : p) t.c *= inv;
}

// f - c * m * g
Poly sub_mul(const Poly& f, const Coeff& c, const MonomialExp& m, const Poly& g, const MonomialOrder& order)
{
    Poly r;
    r.reserve(f.size() + g.size());
    auto i = f.begin();
    auto j = g.begin();
    while (i != f.end() || j != g.end()) {
        if (j == g.end()) {
            r.push_back(*i++);
            continue;
        }
        MonomialExp mj = j->m * m;
        int cmp = i == f.end() ? -1 : order.compare(i->m, mj);
        if (cmp > 0) {
            r.push_back(*i++);
        } else if (cmp < 0) {
            r.push_back({mj, -(c * j->c)});
            ++j;
        } else {
            Coeff v = i->c - c * j->c;
            if (!v.is_zero()) r.push_back({i->m, std::move(v)});
            ++i;
            ++j;
        }
    }
    return r;
}

Poly reduce(Poly f, const std::vector<const Poly*>& basis, const MonomialOrder& order)
{
    Poly rest;
    while (!f.empty()) {
        const Term& lead = f.front();
        const Poly* div = nullptr;
        for (const Poly* g : basis)
            if (g->front().m.divides(lead.m)) {
                div = g;
                break;
            }
        if (!div) {
            rest.push_back(lead);
            f.erase(f.begin());
            continue;
        }
        Coeff c = lead.c / div->front().c;
        f = sub_mul(f, c, lead.m / div->front().m, *div, order);
    }
    return rest;
}

struct Pair {
    std::size_t i, j;
    MonomialExp lcm;
};

class Buchberger {
public:
    explicit Buchberger(const MonomialOrder& order) : order_(order) {}

    void add(Poly h)
    {
        make_monic(h);
        std::size_t k = polys_.size();
        const MonomialExp& lh = h.front().m;
        polys_.push_back(std::move(h));

        // Gebauer-Moeller update.
        std::vector<Pair> fresh;
        for (std::size_t g : active_) fresh.push_back({g, k, lcm(polys_[g].front().m, lh)});
        std::vector<Pair> kept;
        for (std::size_t a = 0; a < fresh.size(); ++a) {
            const Pair& p = fresh[a];
            bool copr = polys_[p.i].front().m.coprime(lh);
            bool dominated = false;
            if (!copr) {
                for (std::size_t b = 0; b < fresh.size() && !dominated; ++b) {
                    if (b == a) continue;
                    const Pair& q = fresh[b];
                    if (q.lcm.divides(p.lcm) && (q.lcm != p.lcm || b < a)) dominated = true;
                }
            }
            if (!dominated) kept.push_back(p);
        }
        std::vector<Pair> next;
        for (const Pair& p : pairs_) {
            bool drop = lh.divides(p.lcm) && lcm(polys_[p.i].front().m, lh) != p.lcm &&
                        lcm(polys_[p.j].front().m, lh) != p.lcm;
            if (!drop) next.push_back(p);
        }
        for (const Pair& p : kept)
            if (!polys_[p.i].front().m.coprime(lh)) next.push_back(p);
        pairs_ = std::move(next);

        std::vector<std::size_t> act;
        for (std::size_t g : active_)
            if (!lh.divides(polys_[g].front().m)) act.push_back(g);
        act.push_back(k);
        active_ = std::move(act);
    }

    void run()
    {
        while (!pairs_.empty()) {
            auto best = std::min_element(pairs_.begin(), pairs_.end(),
                                         [&](const Pair& a, const Pair& b) { return order_.greater(b.lcm, a.lcm); });
            Pair p = *best;
            pairs_.erase(best);
            const Poly& f = polys_[p.i];
            const Poly& g = polys_[p.j];
            Poly s = sub_mul(Poly{}, Coeff(-1), p.lcm / f.front().m, f, order_);
            s = sub_mul(s, Coeff(1), p.lcm / g.front().m, g, order_);
            Poly h = reduce(std::move(s), basis(), order_);
            if (!h.empty()) add(std::move(h));
        }
    }

    std::vector<const Poly*> basis() const
    {
        std::vector<const Poly*> b;
        for (std::size_t g : active_) b.push_back(&polys_[g]);
        return b;
    }

    std::vector<Poly> reduced() const
    {
        std::vector<Poly> min;
        for (std::size_t g : active_) min.push_back(polys_[g]);
        std::sort(min.begin(), min.end(),
                  [&](const Poly& a, const Poly& b) { return order_.greater(a.front().m, b.front().m); });
        std::vector<Poly> out;
        for (std::size_t a = 0; a < min.size(); ++a) {
            std::vector<const Poly*> others;
            for (std::size_t b = 0; b < min.size(); ++b)
                if (b != a) others.push_back(&min[b]);
            Poly tail(min[a].begin() + 1, min[a].end());
            Poly r = reduce(std::move(tail), others, order_);
            r.insert(r.begin(), min[a].front());
            make_monic(r);
            out.push_back(std::move(r));
        }
        return out;
    }

private:
    const MonomialOrder& order_;
    std::vector<Poly> polys_;
    std::vector<std::size_t> active_;
    std::vector<Pair> pairs_;
};

}  // namespace

MonomialExp leading_monomial(const ComplexPoly& f, const MonomialOrder& order)
{
    if (f.is_zero()) throw PreconditionError("leading monomial of zero");
    const MonomialExp* best = &f.terms().front().first;
    for (const auto& t : f.terms())
        if (order.greater(t.first, *best)) best = &t.first;
    return *best;
}

Coeff leading_coeff(const ComplexPoly& f, const MonomialOrder& order)
{
    return f.coefficient(leading_monomial(f, order));
}

std::vector<ComplexPoly> groebner_basis(const std::vector<ComplexPoly>& gens, const MonomialOrder& order)
{
    std::size_t n = gens.empty() ? 0 : gens.front().nvars();
    Buchberger bb(order);
    std::vector<Poly> input;
    for (const auto& g : gens) {
        if (g.nvars() != n) throw PreconditionError("generators over different rings");
        if (!g.is_zero()) input.push_back(to_sorted(g, order));
    }
    std::sort(input.begin(), input.end(), [&](const Poly& a, const Poly& b) {
        return order.greater(b.front().m, a.front().m);
    });
    for (auto& p : input) {
        Poly h = reduce(std::move(p), bb.basis(), order);
        if (!h.empty()) bb.add(std::move(h));
    }
    bb.run();
    std::vector<ComplexPoly> out;
    for (const auto& p : bb.reduced()) out.push_back(from_sorted(n, p));
    return out;
}

ComplexPoly normal_form(const ComplexPoly& f, const std::vector<ComplexPoly>& basis, const MonomialOrder& order)
{
    std::vector<Poly> sorted;
    for (const auto& g : basis)
        if (!g.is_zero()) sorted.push_back(to_sorted(g, order));
    std::vector<const Poly*> ptrs;
    for (const auto& p : sorted) ptrs.push_back(&p);
    return from_sorted(f.nvars(), reduce(to_sorted(f, order), ptrs, order));
}

}  // namespace phasetrop
