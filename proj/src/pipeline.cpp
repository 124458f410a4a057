#include "fcone/pipeline.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <span>

namespace fcone::cli {

namespace {

using groebner::Poly;
using groebner::PrimeField;
using monomial::Monomial;
using monomial::MonomialIdeal;
using reductions::JointReduction;
using reductions::PolySetup;

std::string render_poly(const Poly& p, const std::vector<std::string>& vars) {
    return groebner::to_string(p, std::span<const std::string>(vars));
}

// Generators of J*I for a sampled minimal reduction J.
std::vector<Poly> ji_gens(const PolySetup& S, const std::vector<Poly>& J) {
    std::vector<Poly> out;
    for (const auto& j : J)
        for (const auto& g : S.raw_gens(0, 1)) out.push_back(groebner::poly_mul(j, g, S.field()));
    return out;
}

// ell(I^2 / (JI + mI^2)) for the sample that achieved r(I) = 2.
std::optional<long> corollary14_length(const PolySetup& S,
                                       const reductions::SampledIndex& r) {
    for (size_t i = 0; i < r.per_sample.size(); ++i) {
        if (!(r.per_sample[i] == r.overall)) continue;
        std::vector<Poly> J = reductions::sample_minimal_reduction(S, r.seeds[i]);
        std::vector<Poly> inner = ji_gens(S, J);
        auto mi2 = S.gens(1, 2);
        inner.insert(inner.end(), mi2.begin(), mi2.end());
        return S.engine().quot_length(S.gens(0, 2), inner);
    }
    return std::nullopt;
}

AnalysisReport analyze_poly(const RingSpec& spec) {
    AnalysisReport rep;
    rep.spec = spec;
    const Bounds& b = spec.bounds;
    const int d = spec.dim();
    rep.d = d;

    MonomialIdeal I(d, spec.ideal_monos);
    PrimeField F{b.prime};
    PolySetup S(F, I);
    rep.mu = I.mu();
    rep.e_ring = 1;

    auto fit = multiplicity::fit_bhattacharya(I);
    rep.mixed = fit.mixed;
    rep.classification = multiplicity::classify(d, rep.mu, fit.mixed[d - 1]);

    std::mt19937_64 master(b.seed);
    const uint64_t jr_seed = master();
    const uint64_t rm_seed = master();
    const uint64_t red_seed = master();
    const uint64_t depth_seed = master();

    // Cross-check e_{d-1}(m|I) through a certified joint reduction.
    JointReduction jr;
    bool jr_ok = false;
    {
        std::mt19937_64 rng(jr_seed);
        for (int t = 0; t < 4 * b.samples && !jr_ok; ++t) {
            JointReduction cand = reductions::sample_joint_reduction(S, d - 1, rng());
            if (reductions::certify_joint_reduction(S, cand, b.nmax).found) {
                jr = cand;
                jr_ok = true;
            }
        }
    }
    if (jr_ok) {
        long e_jr = multiplicity::e_last_via_joint_reduction(S.engine(), S.raw_gens(0, 1),
                                                             jr.xs[0], jr.as);
        rep.mixed_crosschecked = fit.validated && e_jr == fit.mixed[d - 1];
    }

    auto rm = reductions::rm_index_sampled(S, b.samples, b.Nmax, rm_seed);
    rep.rm = rm.overall;
    rep.rm_samples = rm.per_sample;

    std::optional<long> ell_i2;
    try {
        auto r = reductions::reduction_number(S, b.samples, b.Nmax, red_seed);
        rep.r_ideal = r.overall;
        rep.r_samples = r.per_sample;
        if (r.overall.found && r.overall.value == 2) ell_i2 = corollary14_length(S, r);
    } catch (const NoReductionFound&) {
        rep.r_ideal = IndexResult::not_up_to(b.Nmax);
    }

    auto depth = reductions::depth_certificates(S, b.nmax, b.samples, depth_seed);
    rep.gamma_lb = depth.gamma_lb;
    rep.phi_lb = depth.phi_lb;
    rep.gamma_failed_at = depth.gamma_stop.failed_at;
    if (depth.gamma_stop.witness) rep.gamma_witness = render_poly(*depth.gamma_stop.witness, spec.vars);

    if (jr_ok) {
        long e1 = d == 2 ? rep.mixed[1] : -1;
        auto dp = reductions::deficit_profile(S, jr, b.Nmax, e1);
        rep.deficits = dp.values;
        rep.corrections = dp.corrections;
        rep.lemma42_checked = dp.lemma42_checked;
        rep.lemma42_ok = dp.lemma42_ok;
    }

    rep.observed_mu = monomial::mi_mu_powers(I, b.trunc);

    const bool am_certified =
        rep.classification.verdict == multiplicity::ClassVerdict::AlmostMinimal &&
        fit.validated && rep.mixed_crosschecked;
    std::vector<hilbert::Hypothesis> hyps{
        {"almost-minimal mixed multiplicity certified", am_certified},
        {"depth certificate gamma >= d-1", rep.gamma_lb >= d - 1},
        {"depth certificate phi >= d-2", rep.phi_lb >= d - 2},
        {"r(m|I) determined", rep.rm.found},
    };
    std::optional<hilbert::Numerator> predicted;
    if (am_certified && rep.rm.found) predicted = hilbert::predict_theorem(d, rep.mu, rep.rm);
    rep.verdict = hilbert::assemble_verdict(d == 2 ? "Thm4.3" : "Thm5.5", std::move(hyps),
                                            std::move(predicted), rep.observed_mu, d, b.guard);

    rep.cm = hilbert::cm_verdicts(rep.verdict.observed ? *rep.verdict.observed
                                                       : hilbert::Numerator{},
                                  d, rep.r_ideal, ell_i2, am_certified);
    if (ell_i2) rep.cm.corollary14_length = *ell_i2;
    return rep;
}

AnalysisReport analyze_sgp(const RingSpec& spec) {
    AnalysisReport rep;
    rep.spec = spec;
    const Bounds& b = spec.bounds;
    rep.d = 1;

    auto s = semigroup::sg_new(spec.sgens);
    semigroup::SemigroupIdeal I(s, spec.ideal_exps);
    rep.mu = I.mu();
    rep.e_ring = s->multiplicity();

    auto fit = multiplicity::mixed_dim1(I);
    rep.mixed = fit.mixed;
    rep.mixed_crosschecked = fit.validated;
    rep.classification = multiplicity::classify(1, rep.mu, rep.e_ring);

    rep.rm = semigroup::dim1_rm_index(I, b.Nmax);
    rep.rm_samples = {rep.rm};
    rep.r_ideal = semigroup::dim1_reduction_number(I, b.Nmax);
    rep.r_samples = {rep.r_ideal};

    auto gamma = reductions::gamma_certificate_dim1(I, b.nmax);
    rep.gamma_lb = gamma.certified ? 1 : 0;
    rep.gamma_failed_at = gamma.failed_at;
    if (!gamma.certified && gamma.witness >= 0)
        rep.gamma_witness = "t^" + std::to_string(gamma.witness);
    for (long a : I.mingens()) {
        if (reductions::nzd_fiber_dim1(a, I, b.nmax).certified) {
            rep.phi_lb = 1;
            break;
        }
    }

    rep.deficits = reductions::deficit_profile_dim1(I, b.Nmax);
    rep.observed_mu = semigroup::dim1_mu_powers(I, b.trunc);

    // r(m|I) = infinity is certifiable in dimension one: the deficit
    // ell(mI^n/xI^n) is constant from n = r(I) on (powers there are shifts
    // by the principal reduction), so a deficit profile that is still
    // positive past r(I) stays positive forever.
    bool rm_infinite = false;
    if (!rep.rm.found && rep.r_ideal.found && rep.r_ideal.value < b.Nmax) {
        rm_infinite = true;
        for (long v : rep.deficits) rm_infinite = rm_infinite && v >= 1;
    }

    const bool minimal = rep.classification.verdict == multiplicity::ClassVerdict::Minimal;
    const bool almost = rep.classification.verdict == multiplicity::ClassVerdict::AlmostMinimal;
    std::vector<hilbert::Hypothesis> hyps;
    std::optional<hilbert::Numerator> predicted;
    std::string theorem_id;
    if (minimal) {
        theorem_id = "Prop3.2";
        hyps.push_back({"minimal mixed multiplicity (mu(I) = e(R))", true});
        predicted = hilbert::predict_minimal_dim1(rep.e_ring);
    } else {
        theorem_id = "Thm3.3";
        hyps.push_back({"almost-minimal mixed multiplicity (mu(I) = e(R)-1)", almost});
        hyps.push_back({"r(m|I) determined (finite or certified infinite)",
                        rep.rm.found || rm_infinite});
        if (almost && (rep.rm.found || rm_infinite))
            predicted = hilbert::predict_theorem(1, rep.mu, rep.rm);
    }
    rep.verdict = hilbert::assemble_verdict(theorem_id, std::move(hyps), std::move(predicted),
                                            rep.observed_mu, 1, b.guard);

    std::optional<long> ell_i2;
    if (rep.r_ideal.found && rep.r_ideal.value == 2) {
        // J = (t^c) with c the smallest generator is a minimal reduction here.
        long c = I.mingens().front();
        auto i2 = semigroup::si_power(I, 2);
        auto ji = semigroup::si_shift(I, c);
        auto mi2 = semigroup::si_product(semigroup::si_maximal(s), i2);
        std::vector<long> inner_gens = ji.mingens();
        inner_gens.insert(inner_gens.end(), mi2.mingens().begin(), mi2.mingens().end());
        semigroup::SemigroupIdeal inner(s, inner_gens);
        ell_i2 = semigroup::si_quot_length(i2, inner);
    }
    const bool dim1_3gen = rep.e_ring == 3 && rep.mu == 3;
    rep.cm = hilbert::cm_verdicts(rep.verdict.observed ? *rep.verdict.observed
                                                       : hilbert::Numerator{},
                                  1, rep.r_ideal, ell_i2, almost, dim1_3gen);
    if (ell_i2) rep.cm.corollary14_length = *ell_i2;
    return rep;
}

std::vector<std::string> default_vars(int d) {
    static const std::vector<std::string> xyzw{"x", "y", "z", "w"};
    if (d <= 4) return {xyzw.begin(), xyzw.begin() + d};
    std::vector<std::string> vars;
    for (int v = 1; v <= d; ++v) vars.push_back("x" + std::to_string(v));
    return vars;
}

RingSpec random_poly_spec(int d, const Bounds& bounds, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> power(2, 5);
    std::uniform_int_distribution<int> extra_count(0, 3);
    RingSpec spec;
    spec.kind = RingKind::Polynomial;
    spec.vars = default_vars(d);
    spec.bounds = bounds;
    std::vector<int> powers(d);
    std::vector<Monomial> gens;
    for (int v = 0; v < d; ++v) {
        powers[v] = power(rng);
        Monomial pure(d, 0);
        pure[v] = powers[v];
        gens.push_back(pure);
    }
    int extras = extra_count(rng);
    for (int k = 0; k < extras; ++k) {
        Monomial m(d, 0);
        long total = 0;
        for (int v = 0; v < d; ++v) {
            m[v] = std::uniform_int_distribution<int>(0, powers[v] - 1)(rng);
            total += m[v];
        }
        if (total >= 2) gens.push_back(m);
    }
    spec.ideal_monos = monomial::mi_minimalize(d, gens).mingens();
    return spec;
}

std::optional<RingSpec> random_sgp_spec(const Bounds& bounds, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> mult(3, 7);
    long e = mult(rng);
    std::vector<long> sgens{e};
    std::uniform_int_distribution<long> gap(1, 2 * e);
    int extra = std::uniform_int_distribution<int>(2, 3)(rng);
    for (int k = 0; k < extra; ++k) sgens.push_back(e + gap(rng));
    long g = 0;
    for (long v : sgens) g = std::gcd(g, v);
    if (g != 1) return std::nullopt;
    auto s = semigroup::sg_new(sgens);
    // Ideal generators: random semigroup elements in a small window.
    std::vector<long> igens;
    std::uniform_int_distribution<long> elem(e, 4 * e);
    int tries = 0;
    while (static_cast<int>(igens.size()) < 3 && tries < 64) {
        ++tries;
        long c = elem(rng);
        if (s->contains(c)) igens.push_back(c);
    }
    if (igens.empty()) return std::nullopt;
    RingSpec spec;
    spec.kind = RingKind::Semigroup;
    spec.sgens = s->generators();
    spec.ideal_exps = semigroup::SemigroupIdeal(s, igens).mingens();
    spec.bounds = bounds;
    return spec;
}

}  // namespace

AnalysisReport analyze(const RingSpec& spec) {
    return spec.kind == RingKind::Polynomial ? analyze_poly(spec) : analyze_sgp(spec);
}

int verdict_exit(const AnalysisReport& rep) {
    switch (rep.verdict.verdict) {
        case hilbert::Verdict::Match: return 0;
        case hilbert::Verdict::Mismatch: return 1;
        default: return 3;
    }
}

std::vector<SearchHit> search(const SearchParams& params) {
    std::mt19937_64 rng(params.bounds.seed);
    std::vector<SearchHit> hits;
    for (int trial = 0; trial < params.budget; ++trial) {
        std::optional<RingSpec> spec;
        if (params.kind == RingKind::Polynomial) {
            spec = random_poly_spec(params.dim, params.bounds, rng);
            // Cheap pre-filter before the full analysis.
            MonomialIdeal I(params.dim, spec->ideal_monos);
            try {
                auto fit = multiplicity::fit_bhattacharya(I);
                auto cls = multiplicity::classify(params.dim, I.mu(), fit.mixed[params.dim - 1]);
                if (cls.verdict != params.wanted) continue;
            } catch (const FitUnstable&) {
                continue;
            }
        } else {
            spec = random_sgp_spec(params.bounds, rng);
            if (!spec) continue;
            auto s = semigroup::sg_new(spec->sgens);
            semigroup::SemigroupIdeal I(s, spec->ideal_exps);
            if (multiplicity::classify(1, I.mu(), s->multiplicity()).verdict != params.wanted)
                continue;
        }
        AnalysisReport rep;
        try {
            rep = analyze(*spec);
        } catch (const Error&) {
            continue;  // degenerate draw; the trial simply yields no hit
        }
        if (rep.classification.verdict != params.wanted) continue;
        if (params.kind == RingKind::Polynomial && !rep.mixed_crosschecked) continue;
        hits.push_back({trial, std::move(*spec), std::move(rep)});
    }
    return hits;
}

}  // namespace fcone::cli
