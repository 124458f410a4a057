#include "fcone/reductions.hpp"

#include <algorithm>
#include <random>

namespace fcone::reductions {

using groebner::poly_add;
using groebner::poly_mul;
using groebner::poly_mul_term;
using groebner::poly_scale;
using groebner::TermOrder;
using monomial::Monomial;

PolySetup::PolySetup(const PrimeField& field, monomial::MonomialIdeal ideal,
                     std::vector<Poly> adjoined)
    : field_(field),
      ideal_(std::move(ideal)),
      engine_(ideal_.dim(), field_),
      adjoined_(std::move(adjoined)) {
    if (!ideal_.is_m_primary()) throw NotFiniteColength("PolySetup: ideal not m-primary");
    ipowers_.push_back(monomial::mi_unit(ideal_.dim()));
    ipowers_.push_back(ideal_);
}

const monomial::MonomialIdeal& PolySetup::ipower(int n) const {
    while (static_cast<int>(ipowers_.size()) <= n)
        ipowers_.push_back(monomial::mi_product(ipowers_.back(), ideal_));
    return ipowers_[n];
}

std::vector<Poly> PolySetup::raw_gens(int a, int b) const {
    monomial::MonomialIdeal M = ipower(b);
    if (a > 0) M = monomial::mi_product(monomial::mi_power(monomial::mi_maximal(d()), a), M);
    std::vector<Poly> out;
    for (const auto& m : M.mingens())
        out.push_back(groebner::poly_monomial(d(), TermOrder::Grevlex, m, 1, field_));
    return out;
}

std::vector<Poly> PolySetup::gens(int a, int b) const {
    std::vector<Poly> out = raw_gens(a, b);
    out.insert(out.end(), adjoined_.begin(), adjoined_.end());
    return out;
}

PolySetup PolySetup::adjoin(const Poly& a) const {
    std::vector<Poly> adj = adjoined_;
    adj.push_back(a);
    return PolySetup(field_, ideal_, std::move(adj));
}

namespace {

Poly random_combination(const std::vector<Poly>& gens, const PrimeField& F,
                        std::mt19937_64& rng) {
    std::uniform_int_distribution<uint32_t> coeff(1, F.p - 1);
    Poly acc(gens.front().dim(), TermOrder::Grevlex);
    for (const auto& g : gens) acc = poly_add(acc, poly_scale(g, coeff(rng), F), F);
    return acc;
}

}  // namespace

Poly PolySetup::random_m_element(std::mt19937_64& rng) const {
    std::vector<Poly> vars;
    for (int v = 0; v < d(); ++v) {
        Monomial m(d(), 0);
        m[v] = 1;
        vars.push_back(groebner::poly_monomial(d(), TermOrder::Grevlex, m, 1, field_));
    }
    return random_combination(vars, field_, rng);
}

Poly PolySetup::random_i_element(std::mt19937_64& rng) const {
    return random_combination(raw_gens(0, 1), field_, rng);
}

JointReduction sample_joint_reduction(const PolySetup& S, int j, uint64_t seed) {
    if (j < 0 || j > S.d()) throw Error("sample_joint_reduction: bad kind");
    std::mt19937_64 rng(seed);
    JointReduction jr;
    jr.j = j;
    jr.seed = seed;
    for (int k = 0; k < S.d() - j; ++k) jr.xs.push_back(S.random_m_element(rng));
    for (int k = 0; k < j; ++k) jr.as.push_back(S.random_i_element(rng));
    return jr;
}

namespace {

// Generators of  sum_k x_k m^{p-1} I^q T^{n-1}  +  sum_l a_l m^p I^{q-1} T^{n-1}
// style combinations, with the context's adjoined elements appended.
std::vector<Poly> combination_gens(const PolySetup& S, const std::vector<Poly>& elems,
                                   int a, int b) {
    std::vector<Poly> out;
    auto base = S.raw_gens(a, b);
    for (const auto& e : elems)
        for (const auto& g : base) out.push_back(poly_mul(e, g, S.field()));
    return out;
}

bool any_nonzero(const std::vector<Poly>& gens) {
    for (const auto& g : gens)
        if (!g.is_zero()) return true;
    return false;
}

}  // namespace

IndexResult certify_joint_reduction(const PolySetup& S, JointReduction& jr, int nmax) {
    const int d = S.d(), j = jr.j;
    for (int n = 1; n <= nmax; ++n) {
        std::vector<Poly> lhs;
        if (d - j > 0) {
            auto part = combination_gens(S, jr.xs, (d - j) * n - 1, j * n);
            lhs.insert(lhs.end(), part.begin(), part.end());
        }
        if (j > 0) {
            auto part = combination_gens(S, jr.as, (d - j) * n, j * n - 1);
            lhs.insert(lhs.end(), part.begin(), part.end());
        }
        if (!any_nonzero(lhs)) break;  // degenerate sample: never a reduction
        lhs.insert(lhs.end(), S.adjoined().begin(), S.adjoined().end());
        auto rhs = S.gens((d - j) * n, j * n);
        try {
            if (S.engine().equal(lhs, rhs)) {
                jr.certificate = IndexResult::at(n);
                return jr.certificate;
            }
        } catch (const NoStabilization&) {
            break;  // left side not m-primary: sample is degenerate
        }
    }
    jr.certificate = IndexResult::not_up_to(nmax);
    return jr.certificate;
}

namespace {

// mI^n = xI^n + (a_1..a_{d-1}) m I^{n-1}, smallest n <= Nmax.
IndexResult rm_index_elems(const PolySetup& S, const Poly& x, const std::vector<Poly>& as,
                           int Nmax) {
    for (int n = 1; n <= Nmax; ++n) {
        std::vector<Poly> lhs = combination_gens(S, {x}, 0, n);
        if (!as.empty()) {
            auto part = combination_gens(S, as, 1, n - 1);
            lhs.insert(lhs.end(), part.begin(), part.end());
        }
        lhs.insert(lhs.end(), S.adjoined().begin(), S.adjoined().end());
        try {
            if (S.engine().equal(lhs, S.gens(1, n))) return IndexResult::at(n);
        } catch (const NoStabilization&) {
            return IndexResult::not_up_to(Nmax);
        }
    }
    return IndexResult::not_up_to(Nmax);
}

}  // namespace

IndexResult rm_index(const PolySetup& S, const JointReduction& jr, int Nmax) {
    if (jr.j != S.d() - 1) throw Error("rm_index: joint reduction must have kind (m|I^{[d-1]})");
    if (!jr.certificate.found) throw Error("rm_index: joint reduction not certified");
    return rm_index_elems(S, jr.xs.front(), jr.as, Nmax);
}

SampledIndex rm_index_sampled(const PolySetup& S, int samples, int Nmax, uint64_t seed) {
    std::mt19937_64 master(seed);
    SampledIndex out;
    out.overall = IndexResult::not_up_to(Nmax);
    int attempts = 0;
    while (static_cast<int>(out.per_sample.size()) < samples && attempts < 4 * samples) {
        ++attempts;
        uint64_t s = master();
        JointReduction jr = sample_joint_reduction(S, S.d() - 1, s);
        if (!certify_joint_reduction(S, jr, Nmax).found) continue;
        IndexResult r = rm_index(S, jr, Nmax);
        out.per_sample.push_back(r);
        out.seeds.push_back(s);
        if (r.found && (!out.overall.found || r.value < out.overall.value)) out.overall = r;
    }
    return out;
}

std::vector<Poly> sample_minimal_reduction(const PolySetup& S, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Poly> J;
    for (int k = 0; k < S.d(); ++k) J.push_back(S.random_i_element(rng));
    return J;
}

SampledIndex reduction_number(const PolySetup& S, int samples, int Nmax, uint64_t seed) {
    std::mt19937_64 master(seed);
    SampledIndex out;
    out.overall = IndexResult::not_up_to(Nmax);
    for (int t = 0; t < samples; ++t) {
        uint64_t s = master();
        std::vector<Poly> J = sample_minimal_reduction(S, s);
        IndexResult r = IndexResult::not_up_to(Nmax);
        for (int n = 0; n <= Nmax; ++n) {
            std::vector<Poly> lhs = combination_gens(S, J, 0, n);
            lhs.insert(lhs.end(), S.adjoined().begin(), S.adjoined().end());
            try {
                if (S.engine().equal(lhs, S.gens(0, n + 1))) {
                    r = IndexResult::at(n);
                    break;
                }
            } catch (const NoStabilization&) {
                break;
            }
        }
        out.per_sample.push_back(r);
        out.seeds.push_back(s);
        if (r.found && (!out.overall.found || r.value < out.overall.value)) out.overall = r;
    }
    if (!out.overall.found)
        throw NoReductionFound("reduction_number: no sampled J certified up to Nmax = " +
                               std::to_string(Nmax));
    return out;
}

long PolySetup::mu_power(int n) const {
    if (adjoined_.empty()) return ipower(n).mu();
    return engine_.quot_length(gens(0, n), gens(1, n));
}

DeficitProfile deficit_profile(const PolySetup& S, const JointReduction& jr, int N, long e1) {
    if (jr.j != S.d() - 1) throw Error("deficit_profile: need kind (m|I^{[d-1]})");
    if (!jr.certificate.found) throw Error("deficit_profile: joint reduction not certified");
    const auto& eng = S.engine();
    DeficitProfile out;
    for (int n = 1; n <= N; ++n) {
        std::vector<Poly> lhs = combination_gens(S, {jr.xs.front()}, 0, n);
        if (!jr.as.empty()) {
            auto part = combination_gens(S, jr.as, 1, n - 1);
            lhs.insert(lhs.end(), part.begin(), part.end());
        }
        lhs.insert(lhs.end(), S.adjoined().begin(), S.adjoined().end());
        out.values.push_back(eng.quot_length(S.gens(1, n), lhs));
        if (S.d() == 2) {
            auto c1 = eng.colon(S.gens(1, n - 1), jr.xs.front());
            auto c2 = eng.colon(S.gens(0, n), jr.as.front());
            out.corrections.push_back(
                eng.quot_length(eng.intersect(c1, c2), S.gens(0, n - 1)));
        }
    }
    if (S.d() == 2 && e1 >= 0) {
        out.lemma42_checked = true;
        out.lemma42_ok = true;
        for (int n = 1; n <= N; ++n) {
            long delta = S.mu_power(n) - S.mu_power(n - 1);
            if (delta != e1 - out.values[n - 1] + out.corrections[n - 1])
                out.lemma42_ok = false;
        }
    }
    return out;
}

namespace {

// Smallest witness in lhs \ rhs: monomials by ascending degree, within a
// degree by descending lex (powers of the first variable first); falls back
// to the first generator of lhs outside rhs.
std::optional<Poly> find_witness(const PolySetup& S, const std::vector<Poly>& lhs,
                                 const std::vector<Poly>& rhs) {
    const auto& eng = S.engine();
    int level = eng.colength(rhs).cert.level;
    for (int deg = 0; deg < level; ++deg) {
        std::vector<Monomial> monos;
        local::MonoTable T(S.d(), deg + 1);
        for (int c = 0; c < T.size(); ++c)
            if (monomial::total_degree(T.mono(c)) == deg) monos.push_back(T.mono(c));
        std::sort(monos.begin(), monos.end(), std::greater<>());
        for (const auto& w : monos) {
            Poly p = groebner::poly_monomial(S.d(), TermOrder::Grevlex, w, 1, S.field());
            if (eng.member(p, lhs) && !eng.member(p, rhs)) return p;
        }
    }
    for (const auto& g : lhs)
        if (!g.is_zero() && !eng.member(g, rhs)) return g;
    return std::nullopt;
}

}  // namespace

NzdResult nzd_fiber(const PolySetup& S, const Poly& a, int N) {
    // (mI^{n+1} : a) cap I^n = mI^n is exactly injectivity of multiplication
    // by a from I^n/mI^n to I^{n+1}/mI^{n+1}, i.e. ell(I^n/mI^n) =
    // ell((aI^n + mI^{n+1}) / mI^{n+1}).  The colon/intersect route is kept
    // only to extract a witness once a level fails.
    const auto& eng = S.engine();
    NzdResult out;
    out.N = N;
    for (int n = 0; n <= N; ++n) {
        long fiber_dim = eng.quot_length(S.gens(0, n), S.gens(1, n));
        std::vector<Poly> image = combination_gens(S, {a}, 0, n);
        auto rhs = S.gens(1, n + 1);
        image.insert(image.end(), rhs.begin(), rhs.end());
        if (eng.quot_length(image, rhs) != fiber_dim) {
            out.failed_at = n;
            auto lhs = eng.intersect(eng.colon(S.gens(1, n + 1), a), S.gens(0, n));
            out.witness = find_witness(S, lhs, S.gens(1, n));
            return out;
        }
    }
    out.certified = true;
    return out;
}

NzdResult nzd_graded(const PolySetup& S, const Poly& a, int N) {
    // (I^n : a) = I^{n-1} is injectivity of multiplication by a from
    // R/I^{n-1} to R/I^n: ell(R/I^{n-1}) = ell(R/I^n) - ell(R/(I^n + (a))).
    const auto& eng = S.engine();
    NzdResult out;
    out.N = N;
    for (int n = 1; n <= N; ++n) {
        long prev = eng.colength(S.gens(0, n - 1)).colength;
        long cur = eng.colength(S.gens(0, n)).colength;
        std::vector<Poly> with_a = S.gens(0, n);
        with_a.push_back(a);
        long quot = eng.colength(with_a).colength;
        if (prev != cur - quot) {
            out.failed_at = n;
            auto lhs = eng.colon(S.gens(0, n), a);
            out.witness = find_witness(S, lhs, S.gens(0, n - 1));
            return out;
        }
    }
    out.certified = true;
    return out;
}

DepthCertificate depth_certificates(const PolySetup& S, int N, int samples, uint64_t seed) {
    std::mt19937_64 rng(seed);
    DepthCertificate out;
    out.N = N;
    auto chain = [&](auto criterion, int& lb, std::vector<Poly>& elems, NzdResult& stop) {
        PolySetup ctx = S;
        for (int step = 0; step < S.d(); ++step) {
            bool extended = false;
            for (int t = 0; t < samples && !extended; ++t) {
                Poly a = ctx.random_i_element(rng);
                NzdResult res = criterion(ctx, a);
                if (res.certified) {
                    elems.push_back(a);
                    ctx = ctx.adjoin(a);
                    ++lb;
                    extended = true;
                } else if (t == 0) {
                    stop = res;
                }
            }
            if (!extended) return;
        }
    };
    chain([N](const PolySetup& ctx, const Poly& a) { return nzd_graded(ctx, a, N); },
          out.gamma_lb, out.gamma_elems, out.gamma_stop);
    chain([N](const PolySetup& ctx, const Poly& a) { return nzd_fiber(ctx, a, N); },
          out.phi_lb, out.phi_elems, out.phi_stop);
    return out;
}

ModElementReport rm_index_mod_element(const PolySetup& S, const JointReduction& jr,
                                      int Nmax) {
    ModElementReport out;
    if (S.d() < 2 || jr.j != S.d() - 1 || !jr.certificate.found) return out;
    const Poly& a1 = jr.as.front();
    if (!nzd_fiber(S, a1, Nmax).certified || !nzd_graded(S, a1, Nmax).certified) return out;
    out.base = rm_index(S, jr, Nmax);
    PolySetup Sq = S.adjoin(a1);
    std::vector<Poly> rest(jr.as.begin() + 1, jr.as.end());
    out.reduced = rm_index_elems(Sq, jr.xs.front(), rest, Nmax);
    out.verdict =
        out.base == out.reduced ? ModElementVerdict::Agree : ModElementVerdict::Disagree;
    return out;
}

Prop56Report prop56_depth_bound(const PolySetup& S, const JointReduction& jr, int Nmax) {
    if (S.d() < 2) throw Error("prop56_depth_bound: requires d >= 2");
    if (jr.j != S.d() - 1 || !jr.certificate.found)
        throw Error("prop56_depth_bound: need a certified joint reduction (m|I^{[d-1]})");
    Prop56Report out;
    // (i) mI^2 = xI^2 + J m I
    {
        std::vector<Poly> lhs = combination_gens(S, {jr.xs.front()}, 0, 2);
        auto part = combination_gens(S, jr.as, 1, 1);
        lhs.insert(lhs.end(), part.begin(), part.end());
        lhs.insert(lhs.end(), S.adjoined().begin(), S.adjoined().end());
        out.cond_i = S.engine().equal(lhs, S.gens(1, 2));
    }
    // (ii) under both readings of the star notation (see README notes)
    auto sequence_ok = [&](auto criterion) {
        PolySetup ctx = S;
        for (const auto& a : jr.as) {
            if (!criterion(ctx, a).certified) return false;
            ctx = ctx.adjoin(a);
        }
        return true;
    };
    out.cond_ii_graded = sequence_ok(
        [Nmax](const PolySetup& ctx, const Poly& a) { return nzd_graded(ctx, a, Nmax); });
    out.cond_ii_fiber = sequence_ok(
        [Nmax](const PolySetup& ctx, const Poly& a) { return nzd_fiber(ctx, a, Nmax); });
    out.applicable = out.cond_i && out.cond_ii_graded && out.cond_ii_fiber;
    return out;
}

// ---- dimension-one (semigroup) counterparts ----

namespace {

long dim1_witness(const semigroup::SemigroupIdeal& lhs, const semigroup::SemigroupIdeal& rhs) {
    long bound = std::max(lhs.full_threshold(), rhs.full_threshold());
    for (long e = 0; e < bound; ++e)
        if (lhs.contains(e) && !rhs.contains(e)) return e;
    return -1;
}

}  // namespace

NzdResultDim1 nzd_graded_dim1(long a, const semigroup::SemigroupIdeal& I, int N) {
    NzdResultDim1 out;
    out.N = N;
    auto P = semigroup::si_power(I, 0);
    auto Pn = P;
    for (int n = 1; n <= N; ++n) {
        auto prev = Pn;
        Pn = semigroup::si_product(Pn, I);
        auto colon = semigroup::si_colon(Pn, a);
        if (!semigroup::si_equal(colon, prev)) {
            out.failed_at = n;
            out.witness = dim1_witness(colon, prev);
            return out;
        }
    }
    out.certified = true;
    return out;
}

NzdResultDim1 nzd_fiber_dim1(long a, const semigroup::SemigroupIdeal& I, int N) {
    NzdResultDim1 out;
    out.N = N;
    auto m = semigroup::si_maximal(I.ambient());
    for (int n = 0; n <= N; ++n) {
        auto In = semigroup::si_power(I, n);
        auto mIn1 = semigroup::si_product(m, semigroup::si_product(In, I));
        auto lhs = semigroup::si_intersect(semigroup::si_colon(mIn1, a), In);
        auto rhs = semigroup::si_product(m, In);
        if (!semigroup::si_equal(lhs, rhs)) {
            out.failed_at = n;
            out.witness = dim1_witness(lhs, rhs);
            return out;
        }
    }
    out.certified = true;
    return out;
}

std::vector<long> deficit_profile_dim1(const semigroup::SemigroupIdeal& I, int N) {
    auto m = semigroup::si_maximal(I.ambient());
    long e = I.ambient()->multiplicity();
    std::vector<long> out;
    auto Pn = semigroup::si_power(I, 0);
    for (int n = 1; n <= N; ++n) {
        Pn = semigroup::si_product(Pn, I);
        out.push_back(
            semigroup::si_quot_length(semigroup::si_product(m, Pn), semigroup::si_shift(Pn, e)));
    }
    return out;
}

NzdResultDim1 gamma_certificate_dim1(const semigroup::SemigroupIdeal& I, int N) {
    NzdResultDim1 first_failure;
    bool have_failure = false;
    for (long a : I.mingens()) {
        auto res = nzd_graded_dim1(a, I, N);
        if (res.certified) return res;
        if (!have_failure) {
            first_failure = res;
            have_failure = true;
        }
    }
    return first_failure;
}

}  // namespace fcone::reductions
