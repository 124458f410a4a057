#include "fcone/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace fcone::semigroup {

NumericalSemigroup::NumericalSemigroup(std::vector<long> gens) {
    if (gens.empty()) throw Error("semigroup needs at least one generator");
    for (long g : gens)
        if (g < 1) throw Error("semigroup generators must be >= 1");
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    long g = 0;
    for (long x : gens) g = std::gcd(g, x);
    if (g != 1)
        throw NotNumericalSemigroup("gcd of generators is " + std::to_string(g));
    gens_ = std::move(gens);

    // Exhaustive membership scan.  A run of `multiplicity` consecutive
    // members proves everything beyond the run start is a member.
    const long mult = gens_.front();
    long bound = 2 * gens_.back() + mult + 2;
    for (;;) {
        std::vector<bool> mem(static_cast<size_t>(bound), false);
        mem[0] = true;
        for (long x = 1; x < bound; ++x)
            for (long gen : gens_) {
                if (gen > x) break;
                if (mem[x - gen]) {
                    mem[x] = true;
                    break;
                }
            }
        long run = 0, run_start = -1;
        for (long x = 0; x < bound; ++x) {
            run = mem[x] ? run + 1 : 0;
            if (run == mult) {
                run_start = x - mult + 1;
                break;
            }
        }
        if (run_start < 0) {
            bound *= 2;
            continue;
        }
        gaps_.clear();
        for (long x = 0; x < run_start; ++x)
            if (!mem[x]) gaps_.push_back(x);
        frobenius_ = gaps_.empty() ? -1 : gaps_.back();
        conductor_ = frobenius_ + 1;
        member_.assign(mem.begin(), mem.begin() + conductor_);
        return;
    }
}

bool NumericalSemigroup::contains(long x) const {
    if (x < 0) return false;
    if (x >= conductor_) return true;
    return member_[static_cast<size_t>(x)];
}

Semigroup sg_new(std::vector<long> gens) {
    return std::make_shared<const NumericalSemigroup>(std::move(gens));
}

namespace {

std::vector<long> minimalize(const Semigroup& s, std::vector<long> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<long> out;
    for (long g : gens) {
        bool minimal = true;
        for (long h : gens) {
            if (h != g && g - h >= 0 && s->contains(g - h)) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(g);
    }
    return out;
}

}  // namespace

SemigroupIdeal::SemigroupIdeal(Semigroup ambient, std::vector<long> gens)
    : ambient_(std::move(ambient)) {
    if (gens.empty()) throw Error("semigroup ideal needs at least one generator");
    for (long g : gens) {
        if (g < 0) throw Error("ideal generators must be >= 0");
        if (!ambient_->contains(g))
            throw Error("ideal generator " + std::to_string(g) +
                        " is not a semigroup element");
    }
    gens_ = minimalize(ambient_, std::move(gens));
}

bool SemigroupIdeal::contains(long e) const {
    for (long g : gens_) {
        if (g > e) break;
        if (ambient_->contains(e - g)) return true;
    }
    return false;
}

long SemigroupIdeal::full_threshold() const {
    return ambient_->conductor() + gens_.front();
}

SemigroupIdeal si_maximal(const Semigroup& s) {
    return SemigroupIdeal(s, s->generators());
}

SemigroupIdeal si_product(const SemigroupIdeal& I, const SemigroupIdeal& J) {
    if (I.ambient() != J.ambient())
        throw AmbientMismatch("product of ideals over different semigroups");
    std::set<long> sums;
    for (long a : I.mingens())
        for (long b : J.mingens()) sums.insert(a + b);
    return SemigroupIdeal(I.ambient(), {sums.begin(), sums.end()});
}

SemigroupIdeal si_power(const SemigroupIdeal& I, int n) {
    if (n < 0) throw Error("si_power: negative exponent");
    SemigroupIdeal acc(I.ambient(), {0});
    for (int k = 0; k < n; ++k) acc = si_product(acc, I);
    return acc;
}

SemigroupIdeal si_shift(const SemigroupIdeal& I, long c) {
    std::vector<long> gens = I.mingens();
    for (long& g : gens) g += c;
    return SemigroupIdeal(I.ambient(), std::move(gens));
}

bool si_equal(const SemigroupIdeal& I, const SemigroupIdeal& J) {
    // Minimal generating sets of exponent sets are canonical.
    return I.ambient() == J.ambient() && I.mingens() == J.mingens();
}

bool si_subset(const SemigroupIdeal& I, const SemigroupIdeal& J) {
    for (long g : I.mingens())
        if (!J.contains(g)) return false;
    return true;
}

long si_colength(const SemigroupIdeal& I) {
    const auto& s = *I.ambient();
    long count = 0;
    for (long x = 0; x < I.full_threshold(); ++x)
        if (s.contains(x) && !I.contains(x)) ++count;
    return count;
}

SemigroupIdeal si_colon(const SemigroupIdeal& I, long b) {
    if (b < 0) throw Error("si_colon: negative exponent");
    const auto& s = *I.ambient();
    // Beyond cutoff the colon agrees with S itself; a window of one extra
    // conductor + multiplicity of candidates generates the tail.
    long cutoff = std::max<long>(0, I.full_threshold() - b);
    long bound = cutoff + s.conductor() + s.multiplicity() + 1;
    std::vector<long> gens;
    for (long e = 0; e < bound; ++e)
        if (s.contains(e) && I.contains(e + b)) gens.push_back(e);
    if (gens.empty()) throw Error("si_colon: empty colon (unexpected)");
    return SemigroupIdeal(I.ambient(), std::move(gens));
}

SemigroupIdeal si_intersect(const SemigroupIdeal& I, const SemigroupIdeal& J) {
    if (I.ambient() != J.ambient())
        throw AmbientMismatch("si_intersect: different ambient semigroups");
    const auto& s = *I.ambient();
    long cutoff = std::max(I.full_threshold(), J.full_threshold());
    long bound = cutoff + s.conductor() + s.multiplicity() + 1;
    std::vector<long> gens;
    for (long e = 0; e < bound; ++e)
        if (I.contains(e) && J.contains(e)) gens.push_back(e);
    if (gens.empty()) throw Error("si_intersect: empty intersection (unexpected)");
    return SemigroupIdeal(I.ambient(), std::move(gens));
}

long si_quot_length(const SemigroupIdeal& I, const SemigroupIdeal& J) {
    if (!si_subset(J, I)) throw ContainmentFailed("si_quot_length: J not inside I");
    long bound = std::max(I.full_threshold(), J.full_threshold());
    long count = 0;
    for (long x = 0; x < bound; ++x)
        if (I.contains(x) && !J.contains(x)) ++count;
    return count;
}

std::vector<long> dim1_mu_powers(const SemigroupIdeal& I, int N) {
    std::vector<long> mu;
    SemigroupIdeal P(I.ambient(), {0});
    mu.push_back(1);
    for (int n = 1; n <= N; ++n) {
        P = si_product(P, I);
        mu.push_back(P.mu());
    }
    return mu;
}

IndexResult dim1_rm_index(const SemigroupIdeal& I, int Nmax) {
    const long e = I.ambient()->multiplicity();
    SemigroupIdeal m = si_maximal(I.ambient());
    SemigroupIdeal P = I;
    for (int n = 1; n <= Nmax; ++n) {
        if (si_equal(si_product(m, P), si_shift(P, e))) return IndexResult::at(n);
        P = si_product(P, I);
    }
    return IndexResult::not_up_to(Nmax);
}

IndexResult dim1_reduction_number(const SemigroupIdeal& I, int Nmax) {
    const long b = I.mingens().front();
    SemigroupIdeal P(I.ambient(), {0});  // I^0
    for (int n = 0; n <= Nmax; ++n) {
        SemigroupIdeal next = si_product(P, I);  // I^{n+1}
        if (si_equal(next, si_shift(P, b))) return IndexResult::at(n);
        P = next;
    }
    return IndexResult::not_up_to(Nmax);
}

Dim1TheoremReport dim1_theorem_check(const SemigroupIdeal& I, int N) {
    if (N < 4) throw Error("dim1_theorem_check: N must be >= 4");
    Dim1TheoremReport rep;
    rep.mu = I.mu();
    rep.e = I.ambient()->multiplicity();
    rep.observed_mu = dim1_mu_powers(I, N);

    // Per-degree identity mu(I^n) = e(R) - ell(mI^n / xI^n), x = t^e.
    const long e = rep.e;
    SemigroupIdeal m = si_maximal(I.ambient());
    rep.lemma31_ok = true;
    SemigroupIdeal P = I;
    for (int n = 1; n <= N; ++n) {
        long deficit = si_quot_length(si_product(m, P), si_shift(P, e));
        if (rep.observed_mu[static_cast<size_t>(n)] != e - deficit) rep.lemma31_ok = false;
        if (n < N) P = si_product(P, I);
    }

    if (rep.mu == e) {
        rep.kind = Dim1Case::Minimal;
        rep.predicted = {1, e - 1};
    } else if (rep.mu == e - 1) {
        rep.kind = Dim1Case::AlmostMinimal;
        rep.rm = dim1_rm_index(I, N);
        rep.predicted = {1, e - 2};
        if (rep.rm.found) {
            if (static_cast<size_t>(rep.rm.value) >= rep.predicted.size())
                rep.predicted.resize(static_cast<size_t>(rep.rm.value) + 1, 0);
            rep.predicted[static_cast<size_t>(rep.rm.value)] += 1;
        }
    } else {
        rep.kind = Dim1Case::OutOfTheoremScope;
        return rep;
    }

    // Numerator over (1 - lambda): coefficients of the series are the
    // partial sums of the numerator.
    bool ok = rep.lemma31_ok;
    long acc = 0;
    for (int n = 0; n <= N && ok; ++n) {
        if (static_cast<size_t>(n) < rep.predicted.size())
            acc += rep.predicted[static_cast<size_t>(n)];
        ok = rep.observed_mu[static_cast<size_t>(n)] == acc;
    }
    rep.match = ok;
    return rep;
}

}  // namespace fcone::semigroup
