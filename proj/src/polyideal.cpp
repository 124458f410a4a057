#include "fcone/polyideal.hpp"

namespace fcone::groebner {

PolyIdeal::PolyIdeal(int dim, PrimeField field, std::vector<Poly> gens, TermOrder order)
    : dim_(dim), field_(field), order_(order) {
    for (auto& g : gens)
        if (!g.is_zero()) gens_.push_back(std::move(g));
    if (gens_.empty()) throw Error("PolyIdeal: zero ideal");
}

const std::vector<Poly>& PolyIdeal::gb() const {
    if (!gb_) gb_ = gb_buchberger(gens_, field_);
    return *gb_;
}

bool PolyIdeal::contains_global(const Poly& f) const {
    return normal_form(f, gb(), field_).is_zero();
}

PolyIdeal ideal_sum(const PolyIdeal& a, const PolyIdeal& b) {
    std::vector<Poly> gens = a.gens();
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return PolyIdeal(a.dim(), a.field(), std::move(gens), a.order());
}

PolyIdeal ideal_product(const PolyIdeal& a, const PolyIdeal& b) {
    std::vector<Poly> gens;
    gens.reserve(a.gens().size() * b.gens().size());
    for (const auto& f : a.gens())
        for (const auto& g : b.gens()) gens.push_back(poly_mul(f, g, a.field()));
    return PolyIdeal(a.dim(), a.field(), std::move(gens), a.order());
}

PolyIdeal ideal_power(const PolyIdeal& a, int n) {
    if (n < 0) throw Error("ideal_power: negative exponent");
    if (n == 0) {
        Monomial one(a.dim(), 0);
        return PolyIdeal(a.dim(), a.field(),
                         {poly_monomial(a.dim(), a.order(), one, 1, a.field())},
                         a.order());
    }
    PolyIdeal acc = a;
    for (int k = 1; k < n; ++k) acc = ideal_product(acc, a);
    return acc;
}

namespace {

// Lift into F_p[t, x_1..x_d] with t as the eliminated front variable.
Poly lift(const Poly& f, int texp, const PrimeField& field) {
    std::vector<Term> terms;
    for (const auto& t : f.terms()) {
        Monomial m;
        m.reserve(t.mono.size() + 1);
        m.push_back(texp);
        m.insert(m.end(), t.mono.begin(), t.mono.end());
        terms.push_back({std::move(m), t.coeff});
    }
    return Poly(f.dim() + 1, TermOrder::ElimFirst, std::move(terms), field);
}

}  // namespace

PolyIdeal ideal_intersection(const PolyIdeal& a, const PolyIdeal& b) {
    const PrimeField& f = a.field();
    std::vector<Poly> gens;
    for (const auto& g : a.gens()) gens.push_back(lift(g, 1, f));  // t*g
    for (const auto& g : b.gens()) {
        // (1 - t)*g
        Poly tg = lift(g, 1, f);
        gens.push_back(poly_sub(lift(g, 0, f), tg, f));
    }
    auto gb = gb_buchberger(gens, f);
    std::vector<Poly> kept;
    for (const auto& g : gb) {
        bool has_t = false;
        for (const auto& t : g.terms())
            if (t.mono[0] > 0) has_t = true;
        if (has_t) continue;
        std::vector<Term> terms;
        for (const auto& t : g.terms())
            terms.push_back({Monomial(t.mono.begin() + 1, t.mono.end()), t.coeff});
        kept.emplace_back(a.dim(), a.order(), std::move(terms), f);
    }
    if (kept.empty()) throw Error("ideal_intersection: empty intersection basis");
    return PolyIdeal(a.dim(), f, std::move(kept), a.order());
}

PolyIdeal ideal_quotient(const PolyIdeal& a, const Poly& f) {
    if (f.is_zero()) throw Error("ideal_quotient: zero divisor polynomial");
    PolyIdeal fI(a.dim(), a.field(), {f}, a.order());
    PolyIdeal meet = ideal_intersection(a, fI);
    std::vector<Poly> gens;
    for (const auto& g : meet.gens())
        gens.push_back(poly_divide_exact(g, f, a.field()));
    return PolyIdeal(a.dim(), a.field(), std::move(gens), a.order());
}

PolyIdeal from_monomial_ideal(const monomial::MonomialIdeal& I, const PrimeField& f,
                              TermOrder order) {
    std::vector<Poly> gens;
    for (const auto& m : I.mingens()) gens.push_back(poly_monomial(I.dim(), order, m, 1, f));
    return PolyIdeal(I.dim(), f, std::move(gens), order);
}

monomial::MonomialIdeal to_monomial_ideal(const PolyIdeal& I) {
    std::vector<Monomial> gens;
    for (const auto& g : I.gb()) {
        if (g.terms().size() != 1)
            throw Error("to_monomial_ideal: ideal is not monomial");
        gens.push_back(g.lead().mono);
    }
    return monomial::MonomialIdeal(I.dim(), std::move(gens));
}

}  // namespace fcone::groebner
