#include "mmc/groebner.hpp"

#include "mmc/error.hpp"

#include <algorithm>
#include <deque>

namespace mmc {

namespace {

struct LexTerm {
    Monomial m;
    Rat c;
};

LexTerm lead(const MPoly& p) {
    auto best = p.terms().begin();
    for (auto it = p.terms().begin(); it != p.terms().end(); ++it) {
        if (it->first > best->first) best = it;
    }
    return {best->first, best->second};
}

bool divides(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
    Monomial q(b.size());
    for (size_t i = 0; i < b.size(); ++i) q[i] = b[i] - a[i];
    return q;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial l(a.size());
    for (size_t i = 0; i < a.size(); ++i) l[i] = std::max(a[i], b[i]);
    return l;
}

bool coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] > 0 && b[i] > 0) return false;
    }
    return true;
}

MPoly monic(const MPoly& p) { return p * (Rat(1) / lead(p).c); }

}  // namespace

Monomial lex_leading_monomial(const MPoly& p) {
    if (p.is_zero()) throw MmError(ErrorCode::InvalidArgument, "leading monomial of zero");
    return lead(p).m;
}

MPoly lex_reduce(const MPoly& p, const std::vector<MPoly>& g) {
    std::vector<LexTerm> leads;
    for (const auto& q : g) leads.push_back(lead(q));
    MPoly rest = p;
    MPoly out(p.nvars());
    while (!rest.is_zero()) {
        LexTerm t = lead(rest);
        bool reduced = false;
        for (size_t i = 0; i < g.size(); ++i) {
            if (!divides(leads[i].m, t.m)) continue;
            rest -= MPoly::term(quotient(t.m, leads[i].m), t.c / leads[i].c) * g[i];
            reduced = true;
            break;
        }
        if (!reduced) {
            out.add_term(t.m, t.c);
            rest.add_term(t.m, -t.c);
        }
    }
    return out;
}

std::vector<MPoly> groebner_lex(const std::vector<MPoly>& gens, size_t max_pairs) {
    std::vector<MPoly> g;
    for (const auto& f : gens) {
        if (!f.is_zero()) g.push_back(monic(f));
    }
    std::deque<std::pair<size_t, size_t>> pairs;
    for (size_t j = 0; j < g.size(); ++j)
        for (size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
    size_t processed = 0;
    while (!pairs.empty()) {
        if (++processed > max_pairs) throw MmError(ErrorCode::InternalError, "Groebner basis pair budget exhausted");
        auto [i, j] = pairs.front();
        pairs.pop_front();
        LexTerm a = lead(g[i]), b = lead(g[j]);
        if (coprime(a.m, b.m)) continue;
        Monomial l = lcm(a.m, b.m);
        MPoly s = MPoly::term(quotient(l, a.m), Rat(1) / a.c) * g[i] - MPoly::term(quotient(l, b.m), Rat(1) / b.c) * g[j];
        MPoly r = lex_reduce(s, g);
        if (r.is_zero()) continue;
        g.push_back(monic(r));
        for (size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace_back(k, g.size() - 1);
    }
    // minimize, then inter-reduce
    std::vector<MPoly> minimal;
    for (size_t i = 0; i < g.size(); ++i) {
        Monomial li = lead(g[i]).m;
        bool redundant = false;
        for (size_t j = 0; j < g.size() && !redundant; ++j) {
            if (i == j) continue;
            Monomial lj = lead(g[j]).m;
            if (divides(lj, li) && (lj != li || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(g[i]);
    }
    std::vector<MPoly> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MPoly> others;
        for (size_t j = 0; j < minimal.size(); ++j) {
            if (j != i) others.push_back(minimal[j]);
        }
        LexTerm t = lead(minimal[i]);
        MPoly tail = minimal[i];
        tail.add_term(t.m, -t.c);
        MPoly r = MPoly::term(t.m, 1) + lex_reduce(tail * (Rat(1) / t.c), others);
        reduced.push_back(r);
    }
    std::sort(reduced.begin(), reduced.end(), [](const MPoly& a, const MPoly& b) { return lead(a).m > lead(b).m; });
    return reduced;
}

std::optional<ShapeBasis> shape_basis(const std::vector<MPoly>& gb) {
    if (gb.empty()) return std::nullopt;
    const size_t n = gb[0].nvars();
    if (gb.size() != n) return std::nullopt;
    auto as_uni = [n](const MPoly& q) -> std::optional<UniPoly> {
        RatVec c;
        for (const auto& [m, v] : q.terms()) {
            for (size_t i = 0; i + 1 < n; ++i) {
                if (m[i] != 0) return std::nullopt;
            }
            const size_t e = static_cast<size_t>(m[n - 1]);
            if (c.size() <= e) c.resize(e + 1);
            c[e] += v;
        }
        return UniPoly(c);
    };
    ShapeBasis s;
    for (size_t i = 0; i + 1 < n; ++i) {
        Monomial x(n, 0);
        x[i] = 1;
        if (lead(gb[i]).m != x) return std::nullopt;
        MPoly rest = gb[i];
        rest.add_term(x, -1);
        auto u = as_uni(rest);
        if (!u) return std::nullopt;
        s.r.push_back(-*u);
    }
    auto p = as_uni(gb[n - 1]);
    if (!p || p->degree() < 1) return std::nullopt;
    s.p = *p;
    return s;
}

}  // namespace mmc
