#include <algorithm>
#include <list>

#include "fcone/polyideal.hpp"

namespace fcone::groebner {

namespace {

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial m(a.size());
    for (size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
    return m;
}

bool coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

struct Pair {
    size_t i, j;
    Monomial lcm;
};

Poly s_poly(const Poly& f, const Poly& g, const PrimeField& field) {
    Monomial l = mono_lcm(f.lead().mono, g.lead().mono);
    Monomial uf = l, ug = l;
    for (size_t k = 0; k < l.size(); ++k) {
        uf[k] -= f.lead().mono[k];
        ug[k] -= g.lead().mono[k];
    }
    Poly a = poly_mul_term(f, uf, field.inv(f.lead().coeff), field);
    Poly b = poly_mul_term(g, ug, field.inv(g.lead().coeff), field);
    return poly_sub(a, b, field);
}

// Gebauer-Moeller pair update: add generator `t` against basis `g`,
// pruning with the product and chain criteria.
void update_pairs(std::list<Pair>& pairs, const std::vector<Poly>& g, size_t t) {
    const Monomial& lt = g[t].lead().mono;
    std::vector<Pair> fresh;
    for (size_t i = 0; i < t; ++i) {
        if (g[i].is_zero()) continue;
        fresh.push_back({i, t, mono_lcm(g[i].lead().mono, lt)});
    }
    // chain criterion inside the fresh set
    std::vector<bool> drop(fresh.size(), false);
    for (size_t a = 0; a < fresh.size(); ++a) {
        if (coprime(g[fresh[a].i].lead().mono, lt)) continue;
        for (size_t b = 0; b < fresh.size(); ++b) {
            if (a == b || drop[b]) continue;
            if (fresh[b].lcm != fresh[a].lcm &&
                monomial::divides(fresh[b].lcm, fresh[a].lcm)) {
                drop[a] = true;
                break;
            }
        }
    }
    // old pairs whose lcm is strictly divisible by the new lead go away
    pairs.remove_if([&](const Pair& p) {
        return monomial::divides(lt, p.lcm) &&
               mono_lcm(g[p.i].lead().mono, lt) != p.lcm &&
               mono_lcm(g[p.j].lead().mono, lt) != p.lcm;
    });
    for (size_t a = 0; a < fresh.size(); ++a) {
        if (drop[a]) continue;
        if (coprime(g[fresh[a].i].lead().mono, lt)) continue;  // product criterion
        pairs.push_back(fresh[a]);
    }
}

}  // namespace

std::vector<Poly> gb_buchberger(std::vector<Poly> gens, const PrimeField& field) {
    std::vector<Poly> g;
    for (auto& f : gens)
        if (!f.is_zero()) g.push_back(std::move(f));
    if (g.empty()) throw Error("gb_buchberger: zero ideal");
    const TermOrder order = g.front().order();

    std::list<Pair> pairs;
    for (size_t t = 0; t < g.size(); ++t) update_pairs(pairs, g, t);

    while (!pairs.empty()) {
        // normal selection: smallest lcm first
        auto best = pairs.begin();
        for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it)
            if (mono_less(it->lcm, best->lcm, order)) best = it;
        Pair p = *best;
        pairs.erase(best);

        Poly s = s_poly(g[p.i], g[p.j], field);
        Poly r = normal_form(s, g, field);
        if (r.is_zero()) continue;
        g.push_back(std::move(r));
        update_pairs(pairs, g, g.size() - 1);
    }

    // minimalize: drop elements whose lead is divisible by another lead
    std::vector<Poly> min;
    for (size_t i = 0; i < g.size(); ++i) {
        bool keep = true;
        for (size_t j = 0; j < g.size() && keep; ++j) {
            if (i == j) continue;
            if (monomial::divides(g[j].lead().mono, g[i].lead().mono) &&
                (g[j].lead().mono != g[i].lead().mono || j < i))
                keep = false;
        }
        if (keep) min.push_back(g[i]);
    }

    // tail-reduce and normalize lead coefficients
    std::vector<Poly> out;
    for (size_t i = 0; i < min.size(); ++i) {
        std::vector<Poly> others;
        for (size_t j = 0; j < min.size(); ++j)
            if (j != i) others.push_back(min[j]);
        Poly r = normal_form(min[i], others, field);
        if (r.is_zero()) continue;
        out.push_back(poly_scale(r, field.inv(r.lead().coeff), field));
    }
    std::sort(out.begin(), out.end(), [&](const Poly& a, const Poly& b) {
        return mono_less(a.lead().mono, b.lead().mono, order);
    });
    return out;
}

}  // namespace fcone::groebner
