#include "fcone/poly.hpp"

#include <algorithm>
#include <map>

namespace fcone::groebner {

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

bool grevlex_less(const Monomial& a, const Monomial& b) {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    // reverse lex: larger exponent in the last differing variable loses
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

}  // namespace

bool mono_less(const Monomial& a, const Monomial& b, TermOrder order) {
    switch (order) {
        case TermOrder::Grevlex:
            return grevlex_less(a, b);
        case TermOrder::Lex:
            return a < b;
        case TermOrder::ElimFirst: {
            if (a[0] != b[0]) return a[0] < b[0];
            Monomial ra(a.begin() + 1, a.end()), rb(b.begin() + 1, b.end());
            return grevlex_less(ra, rb);
        }
    }
    return false;
}

Poly::Poly(int dim, TermOrder order, std::vector<Term> terms, const PrimeField& f)
    : dim_(dim), order_(order) {
    std::sort(terms.begin(), terms.end(), [&](const Term& x, const Term& y) {
        return mono_less(y.mono, x.mono, order);  // descending
    });
    for (auto& t : terms) {
        if (t.coeff >= f.p) t.coeff %= f.p;
        if (t.coeff == 0) continue;
        if (!terms_.empty() && terms_.back().mono == t.mono) {
            terms_.back().coeff = f.add(terms_.back().coeff, t.coeff);
            if (terms_.back().coeff == 0) terms_.pop_back();
        } else {
            terms_.push_back(t);
        }
    }
}

int Poly::min_degree() const {
    int d = 0;
    bool first = true;
    for (const auto& t : terms_) {
        int td = total_degree(t.mono);
        if (first || td < d) d = td;
        first = false;
    }
    return d;
}

int Poly::max_degree() const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, total_degree(t.mono));
    return d;
}

Poly poly_monomial(int dim, TermOrder order, const Monomial& m, uint32_t c,
                   const PrimeField& f) {
    return Poly(dim, order, {{m, c}}, f);
}

namespace {

// Merge two descending term lists with coefficient combination.
Poly merge(const Poly& a, const Poly& b, const PrimeField& f, bool negate_b) {
    std::vector<Term> out;
    out.reserve(a.terms().size() + b.terms().size());
    size_t i = 0, j = 0;
    const auto& at = a.terms();
    const auto& bt = b.terms();
    while (i < at.size() || j < bt.size()) {
        bool take_a;
        if (i == at.size())
            take_a = false;
        else if (j == bt.size())
            take_a = true;
        else if (at[i].mono == bt[j].mono) {
            uint32_t c = negate_b ? f.sub(at[i].coeff, bt[j].coeff)
                                  : f.add(at[i].coeff, bt[j].coeff);
            if (c != 0) out.push_back({at[i].mono, c});
            ++i, ++j;
            continue;
        } else
            take_a = mono_less(bt[j].mono, at[i].mono, a.order());
        if (take_a)
            out.push_back(at[i++]);
        else
            out.push_back({bt[j].mono, negate_b ? f.neg(bt[j].coeff) : bt[j].coeff});
        if (!take_a) ++j;
    }
    return Poly(a.dim(), a.order(), std::move(out), f);
}

}  // namespace

Poly poly_add(const Poly& a, const Poly& b, const PrimeField& f) {
    return merge(a, b, f, false);
}

Poly poly_sub(const Poly& a, const Poly& b, const PrimeField& f) {
    return merge(a, b, f, true);
}

Poly poly_scale(const Poly& a, uint32_t c, const PrimeField& f) {
    std::vector<Term> out;
    for (const auto& t : a.terms()) {
        uint32_t v = f.mul(t.coeff, c);
        if (v) out.push_back({t.mono, v});
    }
    return Poly(a.dim(), a.order(), std::move(out), f);
}

Poly poly_mul_term(const Poly& a, const Monomial& m, uint32_t c, const PrimeField& f) {
    std::vector<Term> out;
    out.reserve(a.terms().size());
    for (const auto& t : a.terms()) {
        uint32_t v = f.mul(t.coeff, c);
        if (!v) continue;
        Monomial mo = t.mono;
        for (size_t i = 0; i < mo.size(); ++i) mo[i] += m[i];
        out.push_back({std::move(mo), v});
    }
    return Poly(a.dim(), a.order(), std::move(out), f);
}

Poly poly_mul(const Poly& a, const Poly& b, const PrimeField& f) {
    std::map<Monomial, uint32_t> acc;
    for (const auto& s : a.terms())
        for (const auto& t : b.terms()) {
            Monomial m = s.mono;
            for (size_t i = 0; i < m.size(); ++i) m[i] += t.mono[i];
            uint32_t& slot = acc[m];
            slot = f.add(slot, f.mul(s.coeff, t.coeff));
        }
    std::vector<Term> out;
    for (auto& [m, c] : acc)
        if (c) out.push_back({m, c});
    return Poly(a.dim(), a.order(), std::move(out), f);
}

Poly poly_truncate(const Poly& a, int bound, const PrimeField& f) {
    std::vector<Term> out;
    for (const auto& t : a.terms())
        if (total_degree(t.mono) < bound) out.push_back(t);
    return Poly(a.dim(), a.order(), std::move(out), f);
}

Poly poly_reorder(const Poly& a, TermOrder order, const PrimeField& f) {
    return Poly(a.dim(), order, a.terms(), f);
}

Poly normal_form(const Poly& f, std::span<const Poly> basis, const PrimeField& field) {
    Poly rem(f.dim(), f.order());
    Poly cur = f;
    while (!cur.is_zero()) {
        bool reduced = false;
        for (const Poly& g : basis) {
            if (g.is_zero()) continue;
            if (!monomial::divides(g.lead().mono, cur.lead().mono)) continue;
            Monomial q = cur.lead().mono;
            for (size_t i = 0; i < q.size(); ++i) q[i] -= g.lead().mono[i];
            uint32_t c = field.mul(cur.lead().coeff, field.inv(g.lead().coeff));
            cur = poly_sub(cur, poly_mul_term(g, q, c, field), field);
            reduced = true;
            break;
        }
        if (!reduced) {
            // move the lead into the remainder and keep going on the tail
            Poly lt = poly_monomial(f.dim(), f.order(), cur.lead().mono,
                                    cur.lead().coeff, field);
            rem = poly_add(rem, lt, field);
            cur = poly_sub(cur, lt, field);
        }
    }
    return rem;
}

Poly poly_divide_exact(const Poly& f, const Poly& g, const PrimeField& field) {
    if (g.is_zero()) throw Error("poly_divide_exact: division by zero");
    Poly quot(f.dim(), f.order());
    Poly cur = f;
    while (!cur.is_zero()) {
        if (!monomial::divides(g.lead().mono, cur.lead().mono))
            throw Error("poly_divide_exact: not an exact multiple");
        Monomial q = cur.lead().mono;
        for (size_t i = 0; i < q.size(); ++i) q[i] -= g.lead().mono[i];
        uint32_t c = field.mul(cur.lead().coeff, field.inv(g.lead().coeff));
        quot = poly_add(quot, poly_monomial(f.dim(), f.order(), q, c, field), field);
        cur = poly_sub(cur, poly_mul_term(g, q, c, field), field);
    }
    return quot;
}

std::string to_string(const Poly& p, std::span<const std::string> var_names) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& t : p.terms()) {
        if (!out.empty()) out += " + ";
        std::string mono;
        for (size_t i = 0; i < t.mono.size(); ++i) {
            if (t.mono[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += var_names[i];
            if (t.mono[i] > 1) mono += "^" + std::to_string(t.mono[i]);
        }
        if (mono.empty()) {
            out += std::to_string(t.coeff);
        } else if (t.coeff == 1) {
            out += mono;
        } else {
            out += std::to_string(t.coeff) + "*" + mono;
        }
    }
    return out;
}

}  // namespace fcone::groebner
