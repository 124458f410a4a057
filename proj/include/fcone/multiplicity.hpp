#pragma once

#include "fcone/local.hpp"
#include "fcone/monomial.hpp"
#include "fcone/semigroup.hpp"

namespace fcone::multiplicity {

/// Coefficients of the Bhattacharya polynomial P(r,s) = ell(R/m^r I^s) in
/// the binomial basis, with the mixed multiplicities e_j(m|I) = e_{(d-j) j}.
struct MixedMultiplicityTable {
    int d = 0;
    std::vector<std::vector<long>> e;  // e[i][j] for i+j <= d, 0 elsewhere
    std::vector<long> mixed;           // e_j(m|I), j = 0..d
    int r0 = 0, s0 = 0;                // fit window origin actually used
    int span = 0;                      // grid span fetched in each direction
    int escalations = 0;               // window doublings before success
    bool validated = false;            // held-out points + e(m)/e(I) cross-checks
};

enum class ClassVerdict { Minimal, AlmostMinimal, Neither };

struct Classification {
    ClassVerdict verdict = ClassVerdict::Neither;
    long slack = 0;  // e_{d-1}(m|I) - (mu(I) - d + 1)
    long e_last = 0;
    long mu = 0;
};

/// Fit P(r,s) on a window where it is exactly polynomial, detected by
/// held-out validation; throws FitUnstable after max_escalations doublings.
/// Requires d >= 2 (d = 1 uses mixed_dim1).
MixedMultiplicityTable fit_bhattacharya(const monomial::MonomialIdeal& I,
                                        int max_escalations = 4);

/// d = 1: e_0(m|I) = e(m) and e_1(m|I) = e(I), both from the semigroup.
MixedMultiplicityTable mixed_dim1(const semigroup::SemigroupIdeal& I);

/// Hilbert-Samuel multiplicity e(I) from a one-variable fit on ell(R/I^s).
long hs_multiplicity(const monomial::MonomialIdeal& I);

/// e_{d-1}(m|I) from the certified colength identity
/// ell(R/(xI + (a_1..a_{d-1})m)) - ell(R/I) = d - 1 + e_{d-1}(m|I),
/// for a joint reduction (x, a_1..a_{d-1}) of (m^{[1]} | I^{[d-1]}).
long e_last_via_joint_reduction(const local::LocalEngine& eng,
                                const std::vector<local::Poly>& igens,
                                const local::Poly& x,
                                const std::vector<local::Poly>& aparts);

Classification classify(int d, long mu, long e_last);

long binom(long n, int k);

}  // namespace fcone::multiplicity
