#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fcone/hilbert.hpp"
#include "fcone/multiplicity.hpp"
#include "fcone/reductions.hpp"
#include "fcone/ringspec.hpp"

namespace fcone::cli {

/// Everything analyze computes; report.cpp renders it, verify maps the
/// verdict to an exit code.
struct AnalysisReport {
    RingSpec spec;
    int d = 0;
    long mu = 0;
    long e_ring = 1;          // e(m): 1 for the polynomial proxy
    std::vector<long> mixed;  // e_j(m|I), j = 0..d
    bool mixed_crosschecked = false;  // grid fit agrees with the joint-reduction route
    multiplicity::Classification classification;

    IndexResult rm;  // r(m|I): minimum over certified samples
    std::vector<IndexResult> rm_samples;
    IndexResult r_ideal;  // r(I): minimum over sampled minimal reductions
    std::vector<IndexResult> r_samples;

    int gamma_lb = 0;
    int phi_lb = 0;
    int gamma_failed_at = -1;
    std::string gamma_witness;  // rendered annihilation witness, when any

    std::vector<long> deficits;
    std::vector<long> corrections;
    bool lemma42_checked = false;
    bool lemma42_ok = false;

    std::vector<long> observed_mu;  // mu(I^n), n = 0..trunc
    hilbert::TheoremVerdict verdict;
    hilbert::CmIndicators cm;
};

AnalysisReport analyze(const RingSpec& spec);

/// 0 = Match, 1 = certified Mismatch (red alert), 3 = HypothesesUncertified.
int verdict_exit(const AnalysisReport& rep);

struct SearchParams {
    RingKind kind = RingKind::Polynomial;
    int dim = 2;
    multiplicity::ClassVerdict wanted = multiplicity::ClassVerdict::AlmostMinimal;
    int budget = 50;
    Bounds bounds;
};

struct SearchHit {
    int trial = 0;
    RingSpec spec;
    AnalysisReport report;
};

/// Draw `budget` random m-primary ideals, analyze each, and keep those whose
/// certified classification equals `wanted`, in trial order.
std::vector<SearchHit> search(const SearchParams& params);

}  // namespace fcone::cli
