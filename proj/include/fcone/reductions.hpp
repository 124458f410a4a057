#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "fcone/local.hpp"
#include "fcone/monomial.hpp"
#include "fcone/semigroup.hpp"

namespace fcone::reductions {

using groebner::Poly;
using groebner::PrimeField;
using local::LocalEngine;

/// Working context for a monomial m-primary ideal I of F_p[x_1..x_d]_(m).
/// `adjoined` realizes computations in the quotient by previously accepted
/// elements: every ideal gets these generators appended before measuring.
class PolySetup {
public:
    PolySetup(const PrimeField& field, monomial::MonomialIdeal ideal,
              std::vector<Poly> adjoined = {});

    int d() const { return ideal_.dim(); }
    const PrimeField& field() const { return field_; }
    const monomial::MonomialIdeal& ideal() const { return ideal_; }
    const LocalEngine& engine() const { return engine_; }
    const std::vector<Poly>& adjoined() const { return adjoined_; }

    /// Generators of m^a I^b (staircase-minimal) plus the adjoined elements.
    std::vector<Poly> gens(int a, int b) const;
    /// Same, without the adjoined elements (raw monomial generators).
    std::vector<Poly> raw_gens(int a, int b) const;
    /// A fresh context with one more adjoined element.
    PolySetup adjoin(const Poly& a) const;

    Poly random_m_element(std::mt19937_64& rng) const;
    Poly random_i_element(std::mt19937_64& rng) const;

    /// mu(I^n) = ell(I^n / mI^n), in the current (possibly quotient) context.
    long mu_power(int n) const;

private:
    PrimeField field_;
    monomial::MonomialIdeal ideal_;
    LocalEngine engine_;
    std::vector<Poly> adjoined_;
    mutable std::vector<monomial::MonomialIdeal> ipowers_;  // cache I^0, I^1, ...
    const monomial::MonomialIdeal& ipower(int n) const;
};

/// Joint reduction candidate of kind (m^{[d-j]} | I^{[j]}).
struct JointReduction {
    int j = 0;
    std::vector<Poly> xs;  // d-j random elements of m
    std::vector<Poly> as;  // j random elements of I
    uint64_t seed = 0;
    IndexResult certificate;  // Rees condition exponent, once certified
};

JointReduction sample_joint_reduction(const PolySetup& S, int j, uint64_t seed);
/// Smallest n <= nmax satisfying the Rees sumset equality; records it in jr.
IndexResult certify_joint_reduction(const PolySetup& S, JointReduction& jr, int nmax);

/// Smallest n <= Nmax with mI^n = xI^n + (a_1..a_{d-1})mI^{n-1} (jr must be
/// a certified joint reduction of kind (m | I^{[d-1]})).
IndexResult rm_index(const PolySetup& S, const JointReduction& jr, int Nmax);

struct SampledIndex {
    IndexResult overall;
    std::vector<IndexResult> per_sample;
    std::vector<uint64_t> seeds;
};

/// r(m|I) proxy: minimum of rm_index over `samples` certified joint
/// reductions (resampling uncertified candidates).
SampledIndex rm_index_sampled(const PolySetup& S, int samples, int Nmax, uint64_t seed);
/// d generic elements of I, the candidate minimal reduction drawn by
/// reduction_number for this seed.
std::vector<Poly> sample_minimal_reduction(const PolySetup& S, uint64_t seed);
/// r(I) proxy: minimum over samples of the reduction number w.r.t. d generic
/// elements of I; throws NoReductionFound if no sample certifies.
SampledIndex reduction_number(const PolySetup& S, int samples, int Nmax, uint64_t seed);

struct DeficitProfile {
    std::vector<long> values;       // ell(mI^n / (xI^n + J m I^{n-1})), n = 1..N
    std::vector<long> corrections;  // d=2: ell(((mI^{n-1}:x) cap (I^n:a)) / I^{n-1})
    bool lemma42_checked = false;
    bool lemma42_ok = false;  // mu(I^n) - mu(I^{n-1}) = e_1 - deficit(n) + correction(n)
};

/// e1 feeds the d=2 telescoping check; pass a negative value to skip it.
DeficitProfile deficit_profile(const PolySetup& S, const JointReduction& jr, int N, long e1);

struct NzdResult {
    bool certified = false;
    int N = 0;
    int failed_at = -1;
    std::optional<Poly> witness;
};

/// a* nonzerodivisor in F(I): (mI^{n+1} : a) cap I^n = mI^n for n <= N.
NzdResult nzd_fiber(const PolySetup& S, const Poly& a, int N);
/// a° nonzerodivisor in G(I): (I^n : a) = I^{n-1} for n <= N.
NzdResult nzd_graded(const PolySetup& S, const Poly& a, int N);

struct DepthCertificate {
    int gamma_lb = 0;
    int phi_lb = 0;
    std::vector<Poly> gamma_elems;
    std::vector<Poly> phi_elems;
    NzdResult gamma_stop;  // failure that ended the gamma chain (if any)
    NzdResult phi_stop;
    int N = 0;
};

DepthCertificate depth_certificates(const PolySetup& S, int N, int samples, uint64_t seed);

enum class ModElementVerdict { Agree, Disagree, Skipped };

struct ModElementReport {
    ModElementVerdict verdict = ModElementVerdict::Skipped;
    IndexResult base;
    IndexResult reduced;
};

/// Lemma 5.4 property: r_J(m|I) computed in R and in R/(a_1) agree, when a_1
/// passes both nonzerodivisor criteria up to Nmax.
ModElementReport rm_index_mod_element(const PolySetup& S, const JointReduction& jr, int Nmax);

struct Prop56Report {
    bool cond_i = false;         // mI^2 = xI^2 + J m I
    bool cond_ii_graded = false; // a_1..a_{d-1} a regular sequence reading in G(I)
    bool cond_ii_fiber = false;  // same elements read in F(I)
    bool applicable = false;
};

Prop56Report prop56_depth_bound(const PolySetup& S, const JointReduction& jr, int Nmax);

// ---- dimension-one (semigroup) counterparts ----

struct NzdResultDim1 {
    bool certified = false;
    int N = 0;
    int failed_at = -1;
    long witness = -1;  // exponent of the annihilation witness
};

NzdResultDim1 nzd_graded_dim1(long a, const semigroup::SemigroupIdeal& I, int N);
NzdResultDim1 nzd_fiber_dim1(long a, const semigroup::SemigroupIdeal& I, int N);
/// deficits ell(mI^n / xI^n) for the canonical x = t^{e(R)}, n = 1..N.
std::vector<long> deficit_profile_dim1(const semigroup::SemigroupIdeal& I, int N);
/// Greedy depth certificate for G(I) in d=1: 0 or 1, with witness on failure.
NzdResultDim1 gamma_certificate_dim1(const semigroup::SemigroupIdeal& I, int N);

}  // namespace fcone::reductions
