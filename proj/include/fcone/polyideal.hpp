#pragma once

#include <optional>

#include "fcone/poly.hpp"

namespace fcone::groebner {

/// Reduced Groebner basis of the input (monic, autoreduced, deterministic
/// given the generator list and term order).
std::vector<Poly> gb_buchberger(std::vector<Poly> gens, const PrimeField& field);

/// Ideal in F_p[x_1..x_d] given by generators, with a cached reduced
/// Groebner basis under its term order.
class PolyIdeal {
public:
    PolyIdeal(int dim, PrimeField field, std::vector<Poly> gens,
              TermOrder order = TermOrder::Grevlex);

    int dim() const { return dim_; }
    const PrimeField& field() const { return field_; }
    TermOrder order() const { return order_; }
    const std::vector<Poly>& gens() const { return gens_; }
    const std::vector<Poly>& gb() const;

    bool contains_global(const Poly& f) const;  // membership in the ideal (not localized)

private:
    int dim_;
    PrimeField field_;
    TermOrder order_;
    std::vector<Poly> gens_;
    mutable std::optional<std::vector<Poly>> gb_;
};

PolyIdeal ideal_sum(const PolyIdeal& a, const PolyIdeal& b);
PolyIdeal ideal_product(const PolyIdeal& a, const PolyIdeal& b);
PolyIdeal ideal_power(const PolyIdeal& a, int n);
/// (a : f) computed as (a intersect (f)) divided by f.
PolyIdeal ideal_quotient(const PolyIdeal& a, const Poly& f);
/// Block-elimination intersection: eliminate t from t*a + (1-t)*b.
PolyIdeal ideal_intersection(const PolyIdeal& a, const PolyIdeal& b);

PolyIdeal from_monomial_ideal(const monomial::MonomialIdeal& I, const PrimeField& f,
                              TermOrder order = TermOrder::Grevlex);
/// Requires the ideal's GB to be monomial; returns its minimal generators.
monomial::MonomialIdeal to_monomial_ideal(const PolyIdeal& I);

}  // namespace fcone::groebner
