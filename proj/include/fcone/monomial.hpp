#pragma once

#include <vector>

#include "fcone/errors.hpp"

namespace fcone::monomial {

/// Exponent vector; the ambient dimension is carried by the ideal.
using Monomial = std::vector<int>;

inline int total_degree(const Monomial& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

inline bool divides(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

class MonomialIdeal {
public:
    MonomialIdeal(int dim, std::vector<Monomial> gens);

    int dim() const { return dim_; }
    const std::vector<Monomial>& mingens() const { return gens_; }
    long mu() const { return static_cast<long>(gens_.size()); }

    bool contains(const Monomial& m) const;
    /// True iff a pure power of every variable is in the ideal.
    bool is_m_primary() const;

    bool operator==(const MonomialIdeal& o) const {
        return dim_ == o.dim_ && gens_ == o.gens_;
    }

private:
    int dim_;
    std::vector<Monomial> gens_;  // divisibility-minimal, sorted
};

MonomialIdeal mi_minimalize(int dim, std::vector<Monomial> gens);
MonomialIdeal mi_unit(int dim);
/// The maximal ideal (x_1, ..., x_d).
MonomialIdeal mi_maximal(int dim);
MonomialIdeal mi_product(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal mi_power(const MonomialIdeal& I, int n);
long mi_colength(const MonomialIdeal& I);
std::vector<long> mi_mu_powers(const MonomialIdeal& I, int N);

/// L[r][s] = ell(R / m^r I^s) for r0 <= r < r0+rspan, s0 <= s < s0+sspan.
std::vector<std::vector<long>> grid_lengths(const MonomialIdeal& I, int r0, int s0,
                                            int rspan, int sspan);

}  // namespace fcone::monomial
