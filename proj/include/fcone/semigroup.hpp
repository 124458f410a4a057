#pragma once

#include <memory>
#include <vector>

#include "fcone/errors.hpp"

namespace fcone::semigroup {

/// Numerical semigroup S = <gens>, gcd(gens) = 1.  Membership is resolved
/// exactly: every integer >= conductor is a member, smaller ones are held
/// in a bit table.
class NumericalSemigroup {
public:
    explicit NumericalSemigroup(std::vector<long> gens);

    const std::vector<long>& generators() const { return gens_; }
    long multiplicity() const { return gens_.front(); }
    long frobenius() const { return frobenius_; }  // -1 when S = N
    long conductor() const { return conductor_; }
    const std::vector<long>& gaps() const { return gaps_; }

    bool contains(long x) const;

private:
    std::vector<long> gens_;       // sorted, de-duplicated, minimal
    std::vector<bool> member_;     // membership for 0 .. conductor
    std::vector<long> gaps_;
    long frobenius_ = -1;
    long conductor_ = 0;
};

using Semigroup = std::shared_ptr<const NumericalSemigroup>;

Semigroup sg_new(std::vector<long> gens);

/// Nonzero monomial ideal of the semigroup ring, as its exponent set
/// E = union of (g + S) over the minimal generators g.
class SemigroupIdeal {
public:
    SemigroupIdeal(Semigroup ambient, std::vector<long> gens);

    const Semigroup& ambient() const { return ambient_; }
    const std::vector<long>& mingens() const { return gens_; }
    long mu() const { return static_cast<long>(gens_.size()); }

    bool contains(long e) const;
    /// Exponents >= this bound are all members of E.
    long full_threshold() const;

private:
    Semigroup ambient_;
    std::vector<long> gens_;  // sorted, minimal
};

/// The maximal ideal m = (gens of S).
SemigroupIdeal si_maximal(const Semigroup& s);

SemigroupIdeal si_power(const SemigroupIdeal& I, int n);
SemigroupIdeal si_product(const SemigroupIdeal& I, const SemigroupIdeal& J);
/// Shift by a semigroup element: the principal multiple t^c * I.
SemigroupIdeal si_shift(const SemigroupIdeal& I, long c);
bool si_equal(const SemigroupIdeal& I, const SemigroupIdeal& J);
bool si_subset(const SemigroupIdeal& I, const SemigroupIdeal& J);
long si_colength(const SemigroupIdeal& I);
/// Colon (I : t^b) = { e in S : e + b in E(I) } as a semigroup ideal.
SemigroupIdeal si_colon(const SemigroupIdeal& I, long b);
SemigroupIdeal si_intersect(const SemigroupIdeal& I, const SemigroupIdeal& J);
/// ell(I/J) for J a subset of I (finite difference of exponent sets).
long si_quot_length(const SemigroupIdeal& I, const SemigroupIdeal& J);

std::vector<long> dim1_mu_powers(const SemigroupIdeal& I, int N);

IndexResult dim1_rm_index(const SemigroupIdeal& I, int Nmax);
IndexResult dim1_reduction_number(const SemigroupIdeal& I, int Nmax);

enum class Dim1Case { Minimal, AlmostMinimal, OutOfTheoremScope };

struct Dim1TheoremReport {
    Dim1Case kind = Dim1Case::OutOfTheoremScope;
    long mu = 0;
    long e = 0;                      // e(R) = multiplicity of the semigroup
    IndexResult rm;                  // only meaningful in the almost-minimal case
    std::vector<long> predicted;     // numerator over (1 - lambda)
    std::vector<long> observed_mu;   // mu(I^n), n = 0..N
    bool lemma31_ok = false;         // mu(I^n) = e(R) - ell(mI^n / xI^n) for n <= N
    bool match = false;
};

Dim1TheoremReport dim1_theorem_check(const SemigroupIdeal& I, int N);

}  // namespace fcone::semigroup
