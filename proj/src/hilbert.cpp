#include "fcone/hilbert.hpp"

#include <algorithm>

namespace fcone::hilbert {

std::vector<long> expand(const Numerator& h, int d, int len) {
    // 1/(1-lambda)^d = sum_n binom(n+d-1, d-1) lambda^n; convolve with h.
    std::vector<long> inv(len, 0);
    for (int n = 0; n < len; ++n) {
        long b = 1;
        for (int k = 1; k < d; ++k) b = b * (n + k) / k;
        inv[n] = d == 0 ? (n == 0 ? 1 : 0) : b;
    }
    std::vector<long> out(len, 0);
    for (int n = 0; n < len; ++n)
        for (int i = 0; i <= n && i < static_cast<int>(h.size()); ++i)
            out[n] += h[i] * inv[n - i];
    return out;
}

Numerator rational_reconstruct(const std::vector<long>& coeffs, int d, int guard) {
    if (static_cast<int>(coeffs.size()) < d + guard + 2)
        throw TruncationTooShort("rational_reconstruct: need at least " +
                                 std::to_string(d + guard + 2) + " coefficients, have " +
                                 std::to_string(coeffs.size()));
    // h = coeffs * (1-lambda)^d, i.e. h_n = sum_k (-1)^k binom(d,k) coeffs[n-k].
    std::vector<long> binom(d + 1, 0);
    binom[0] = 1;
    for (int k = 1; k <= d; ++k) binom[k] = binom[k - 1] * (d - k + 1) / k;
    std::vector<long> h(coeffs.size(), 0);
    for (size_t n = 0; n < coeffs.size(); ++n)
        for (int k = 0; k <= d && k <= static_cast<int>(n); ++k)
            h[n] += (k % 2 ? -1 : 1) * binom[k] * coeffs[n - k];
    for (size_t n = coeffs.size() - guard; n < coeffs.size(); ++n)
        if (h[n] != 0)
            throw TruncationTooShort(
                "rational_reconstruct: numerator not stable within the guard window "
                "(truncation too short or series not rational over (1-lambda)^" +
                std::to_string(d) + ")");
    while (!h.empty() && h.back() == 0) h.pop_back();
    if (h.empty()) h.push_back(0);
    return h;
}

Numerator predict_theorem(int d, long mu, const IndexResult& s) {
    Numerator h{1, mu - d};
    if (s.found) {
        if (static_cast<int>(h.size()) <= s.value) h.resize(s.value + 1, 0);
        h[s.value] += 1;
    }
    while (!h.empty() && h.back() == 0) h.pop_back();
    return h;
}

Numerator predict_minimal_dim1(long e) {
    Numerator h{1, e - 1};
    while (!h.empty() && h.back() == 0) h.pop_back();
    return h;
}

TheoremVerdict assemble_verdict(std::string theorem_id, std::vector<Hypothesis> hypotheses,
                                std::optional<Numerator> predicted,
                                const std::vector<long>& observed_coeffs, int d, int guard) {
    TheoremVerdict out;
    out.theorem_id = std::move(theorem_id);
    out.hypotheses = std::move(hypotheses);
    out.predicted = std::move(predicted);
    try {
        out.observed = rational_reconstruct(observed_coeffs, d, guard);
    } catch (const TruncationTooShort&) {
        out.observed = std::nullopt;
    }
    bool all_certified = std::all_of(out.hypotheses.begin(), out.hypotheses.end(),
                                     [](const Hypothesis& h) { return h.certified; });
    if (!all_certified || !out.predicted) {
        out.verdict = Verdict::HypothesesUncertified;
        return out;
    }
    // compare coefficient-by-coefficient over the whole truncation window
    auto want = expand(*out.predicted, d, static_cast<int>(observed_coeffs.size()));
    out.verdict = want == observed_coeffs ? Verdict::Match : Verdict::Mismatch;
    out.red_alert = out.verdict == Verdict::Mismatch;
    return out;
}

CmIndicators cm_verdicts(const Numerator& h, int d, const IndexResult& r_ideal,
                         std::optional<long> ell_i2, bool almost_minimal_certified,
                         bool dim1_3gen_applicable) {
    CmIndicators out;
    if (std::any_of(h.begin(), h.end(), [](long c) { return c < 0; }))
        out.via_numerator = CmStatus::NotCM;
    if (almost_minimal_certified && r_ideal.found) {
        if (r_ideal.value <= 1)
            out.via_corollary14 = CmStatus::CM;
        else if (r_ideal.value == 2) {
            if (ell_i2) {
                out.corollary14_length = *ell_i2;
                out.via_corollary14 = *ell_i2 == 1 ? CmStatus::CM : CmStatus::NotCM;
            }
        } else {
            out.via_corollary14 = CmStatus::NotCM;  // r(I) > 2 fails both branches
        }
    }
    if (dim1_3gen_applicable && d == 1 && r_ideal.found)
        out.via_dim1 = r_ideal.value <= 1 ? CmStatus::CM : CmStatus::NotCM;
    return out;
}

}  // namespace fcone::hilbert
