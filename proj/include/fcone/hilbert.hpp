#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fcone/errors.hpp"

namespace fcone::hilbert {

/// Integer polynomial in lambda, coefficient of lambda^i at index i.
using Numerator = std::vector<long>;

/// Truncated Hilbert series of the fiber cone with its reconstructed
/// rational form h(lambda) / (1-lambda)^d, when stable.
struct HilbertSeries {
    std::vector<long> coeffs;  // mu(I^0), mu(I^1), ..., mu(I^N)
    std::optional<Numerator> numerator;
    int d = 0;
    int guard = 0;
};

/// Coefficients of h(lambda) / (1-lambda)^d up to lambda^{len-1}.
std::vector<long> expand(const Numerator& h, int d, int len);

/// Convolve the truncated series with (1-lambda)^d; succeeds iff the last
/// `guard` convolved coefficients vanish (the series has become polynomial
/// over (1-lambda)^d within the truncation), returning the trimmed h.
/// Throws TruncationTooShort otherwise or when len(coeffs) < d + guard + 2.
Numerator rational_reconstruct(const std::vector<long>& coeffs, int d, int guard);

/// 1 + (mu-d) lambda (+ lambda^s when s is Found); d=1 callers pass
/// mu = e(R) - 1 so the two displayed forms coincide.
Numerator predict_theorem(int d, long mu, const IndexResult& s);

/// 1 + (e-1) lambda, the minimal-multiplicity series in dimension one.
Numerator predict_minimal_dim1(long e);

enum class Verdict { Match, Mismatch, HypothesesUncertified };

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Match: return "Match";
        case Verdict::Mismatch: return "Mismatch";
        default: return "HypothesesUncertified";
    }
}

struct Hypothesis {
    std::string name;
    bool certified = false;
};

struct TheoremVerdict {
    std::string theorem_id;  // Prop3.2 | Thm3.3 | Thm4.3 | Thm5.5
    std::vector<Hypothesis> hypotheses;
    std::optional<Numerator> predicted;
    std::optional<Numerator> observed;  // reconstructed from the data
    Verdict verdict = Verdict::HypothesesUncertified;
    bool red_alert = false;  // Mismatch with every hypothesis certified
};

/// Final comparison: Match requires every hypothesis certified, a predicted
/// numerator, and exact agreement of the predicted expansion with the
/// observed coefficients (all n in the truncation window) — numerator
/// equality follows. Anything inconclusive is HypothesesUncertified.
TheoremVerdict assemble_verdict(std::string theorem_id, std::vector<Hypothesis> hypotheses,
                                std::optional<Numerator> predicted,
                                const std::vector<long>& observed_coeffs, int d, int guard);

enum class CmStatus { CM, NotCM, Unknown };

inline std::string to_string(CmStatus s) {
    switch (s) {
        case CmStatus::CM: return "CM";
        case CmStatus::NotCM: return "NotCM";
        default: return "Unknown";
    }
}

struct CmIndicators {
    CmStatus via_numerator = CmStatus::Unknown;    // negative coefficient => NotCM
    CmStatus via_corollary14 = CmStatus::Unknown;  // r(I)<=1, or r(I)=2 & length 1
    CmStatus via_dim1 = CmStatus::Unknown;         // d=1, mu=e-1: CM iff r(I)<=1
    long corollary14_length = -1;                  // ell(I^2/(JI+mI^2)) when used
};

/// Pure assembly of the three Cohen-Macaulay indicators; the caller provides
/// the sampled r(I) and (for the Corollary 1.4 branch) the computed length
/// ell(I^2/(JI+mI^2)). `almost_minimal_certified` gates criterion (b);
/// `dim1_3gen_applicable` (d=1, e(R)=3, mu(I)=3) gates criterion (c).
CmIndicators cm_verdicts(const Numerator& h, int d, const IndexResult& r_ideal,
                         std::optional<long> ell_i2, bool almost_minimal_certified,
                         bool dim1_3gen_applicable = false);

}  // namespace fcone::hilbert
