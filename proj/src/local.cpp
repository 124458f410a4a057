#include "fcone/local.hpp"

#include <algorithm>

namespace fcone::local {

MonoTable::MonoTable(int dim, int level) : dim_(dim), level_(level) {
    // Odometer over exponent vectors of total degree < level, then sort by
    // (degree, lex) so column order is ascending degree.
    Monomial cur(dim, 0);
    while (true) {
        monos_.push_back(cur);
        int i = dim - 1;
        while (i >= 0) {
            ++cur[i];
            if (monomial::total_degree(cur) < level) break;
            cur[i] = 0;
            --i;
        }
        if (i < 0) break;
    }
    std::sort(monos_.begin(), monos_.end(), [](const Monomial& a, const Monomial& b) {
        int da = monomial::total_degree(a), db = monomial::total_degree(b);
        if (da != db) return da < db;
        return a < b;
    });
    for (int c = 0; c < static_cast<int>(monos_.size()); ++c) index_[monos_[c]] = c;
}

int MonoTable::col(const Monomial& m) const {
    auto it = index_.find(m);
    return it == index_.end() ? -1 : it->second;
}

namespace {

// a -= c * b (both sorted by column), over F_p.
Row row_sub_scaled(const Row& a, const Row& b, uint32_t c, const PrimeField& f) {
    Row out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            uint32_t v = f.neg(f.mul(c, b[j].second));
            if (v) out.push_back({b[j].first, v});
            ++j;
        } else {
            uint32_t v = f.sub(a[i].second, f.mul(c, b[j].second));
            if (v) out.push_back({a[i].first, v});
            ++i, ++j;
        }
    }
    return out;
}

Row row_scale(Row r, uint32_t c, const PrimeField& f) {
    for (auto& [col, v] : r) v = f.mul(v, c);
    return r;
}

}  // namespace

bool Echelon::insert(Row main, Row track, Row* kernel) {
    // Dense accumulators avoid a sparse-vector rebuild per eliminated pivot;
    // stored pivot rows are monic with all trailing columns > pivot, so a
    // single left-to-right sweep suffices.
    std::fill(dmain_.begin(), dmain_.end(), 0);
    std::fill(dtrack_.begin(), dtrack_.end(), 0);
    auto load = [](std::vector<uint32_t>& buf, const Row& r) {
        for (const auto& [c, v] : r) {
            if (c >= static_cast<int>(buf.size())) buf.resize(c + 1, 0);
            buf[c] = v;
        }
    };
    load(dmain_, main);
    load(dtrack_, track);
    auto axpy = [this](std::vector<uint32_t>& buf, const Row& r, uint32_t c) {
        for (const auto& [col, v] : r) {
            if (col >= static_cast<int>(buf.size())) buf.resize(col + 1, 0);
            buf[col] = f_->sub(buf[col], f_->mul(c, v));
        }
    };
    int piv = -1;
    for (size_t c = 0; c < dmain_.size(); ++c) {
        if (!dmain_[c]) continue;
        auto it = rows_.find(static_cast<int>(c));
        if (it == rows_.end()) {
            piv = static_cast<int>(c);
            break;
        }
        uint32_t coef = dmain_[c];
        axpy(dmain_, it->second.first, coef);
        if (!it->second.second.empty()) axpy(dtrack_, it->second.second, coef);
    }
    auto dump = [](const std::vector<uint32_t>& buf, size_t from) {
        Row r;
        for (size_t c = from; c < buf.size(); ++c)
            if (buf[c]) r.push_back({static_cast<int>(c), buf[c]});
        return r;
    };
    if (piv < 0) {
        if (kernel) *kernel = dump(dtrack_, 0);
        return false;
    }
    uint32_t inv = f_->inv(dmain_[piv]);
    rows_[piv] = {row_scale(dump(dmain_, piv), inv, *f_),
                  row_scale(dump(dtrack_, 0), inv, *f_)};
    return true;
}

bool Echelon::contains(const Row& r) const {
    Row cur = r;
    while (!cur.empty()) {
        auto it = rows_.find(cur.front().first);
        if (it == rows_.end()) return false;
        cur = row_sub_scaled(cur, it->second.first, cur.front().second, *f_);
    }
    return true;
}

LocalEngine::LocalEngine(int dim, const PrimeField& field, int max_level)
    : dim_(dim), field_(field), max_level_(max_level) {
    if (dim < 1) throw Error("LocalEngine: dimension must be positive");
}

Row LocalEngine::row_of(const Poly& f, const MonoTable& T) const {
    Row r;
    for (const auto& t : f.terms()) {
        int c = T.col(t.mono);
        if (c >= 0) r.push_back({c, t.coeff});
    }
    std::sort(r.begin(), r.end());
    return r;
}

Poly LocalEngine::poly_of(const Row& r, const MonoTable& T) const {
    std::vector<groebner::Term> terms;
    for (const auto& [col, c] : r) terms.push_back({T.mono(col), c});
    return Poly(dim_, groebner::TermOrder::Grevlex, std::move(terms), field_);
}

Echelon LocalEngine::image(const std::vector<Poly>& gens, const MonoTable& T) const {
    ++stats_.images_built;
    Echelon E(field_);
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        int room = T.level() - g.min_degree();
        for (int c = 0; c < T.size(); ++c) {
            const Monomial& u = T.mono(c);
            if (monomial::total_degree(u) >= room) continue;
            E.insert(row_of(groebner::poly_mul_term(g, u, 1, field_), T));
        }
    }
    return E;
}

long LocalEngine::colength_at(const std::vector<Poly>& gens, int level) const {
    MonoTable T(dim_, level);
    return T.size() - image(gens, T).dim();
}

LocalEngine::Stabilized LocalEngine::stabilize(const std::vector<Poly>& gens) const {
    ++stats_.stabilizations;
    // f(D) = ell(R/(B + m^D)) is strictly increasing until m^D lies inside
    // B_m, then constant; find the first stall by doubling, then binary
    // search.  Any stall level is a valid Nakayama certificate.
    std::map<int, long> memo;
    auto f = [&](int level) {
        auto it = memo.find(level);
        if (it != memo.end()) return it->second;
        stats_.max_level_reached = std::max(stats_.max_level_reached, level);
        long v = colength_at(gens, level);
        memo[level] = v;
        return v;
    };
    int d0 = 1;
    for (const auto& g : gens)
        if (!g.is_zero()) d0 = std::max(d0, g.min_degree() + 1);
    // If the generators include a pure power of every variable (true for
    // every m^a I^b we build), m^cap lies inside B for cap = sum(p_v - 1) + 1
    // with p_v the smallest pure-power exponent in variable v, so the stall
    // happens no later than cap.
    int cap = max_level_;
    {
        std::vector<long> pv(dim_, -1);
        for (const auto& g : gens) {
            if (g.terms().size() != 1) continue;
            const auto& m = g.terms().front().mono;
            int var = -1;
            bool pure = true;
            for (int v = 0; v < dim_; ++v)
                if (m[v] > 0) {
                    if (var >= 0) pure = false;
                    var = v;
                }
            if (!pure || var < 0) continue;
            if (pv[var] < 0 || m[var] < pv[var]) pv[var] = m[var];
        }
        long sum = 1;
        bool complete = true;
        for (int v = 0; v < dim_; ++v) {
            if (pv[v] < 0) complete = false;
            else sum += pv[v] - 1;
        }
        if (complete) cap = std::min<long>(cap, std::max<long>(sum, d0));
    }
    int lo = d0, hi = std::min(d0, cap), step = 1;
    while (f(hi) != f(hi + 1)) {
        lo = hi + 1;
        if (hi >= cap || lo > max_level_)
            throw NoStabilization("colength did not stabilize below level " +
                                  std::to_string(max_level_) +
                                  " (ideal may not be m-primary)");
        hi = std::min(hi + step, cap);
        step *= 2;
    }
    while (lo < hi) {
        int mid = lo + (hi - lo) / 2;
        if (f(mid) == f(mid + 1))
            hi = mid;
        else
            lo = mid + 1;
    }
    StabilizationCertificate cert{hi, f(hi), f(hi + 1), f(hi + 2)};
    if (cert.value != cert.value_next2)
        throw Error("stabilization soundness violated: f(N)=f(N+1) but f(N)!=f(N+2) at N=" +
                    std::to_string(hi));
    return {hi, f(hi), cert};
}

std::vector<Poly> LocalEngine::power_of_maximal(int level) const {
    // Monomial generators of m^level: all exponent vectors of total degree
    // exactly `level`.
    std::vector<Poly> out;
    MonoTable T(dim_, level + 1);
    for (int c = 0; c < T.size(); ++c)
        if (monomial::total_degree(T.mono(c)) == level)
            out.push_back(
                groebner::poly_monomial(dim_, groebner::TermOrder::Grevlex, T.mono(c), 1, field_));
    return out;
}

ColengthResult LocalEngine::colength(const std::vector<Poly>& gens) const {
    Stabilized s = stabilize(gens);
    return {s.colength, s.cert};
}

bool LocalEngine::member(const Poly& f, const std::vector<Poly>& gens) const {
    Stabilized s = stabilize(gens);
    MonoTable T(dim_, s.level);
    return image(gens, T).contains(row_of(f, T));
}

bool LocalEngine::subset(const std::vector<Poly>& a, const std::vector<Poly>& b) const {
    // a_m subset of b_m iff every generator of a lies in b_m; one shared
    // stabilization of b suffices.
    Stabilized sb = stabilize(b);
    MonoTable T(dim_, sb.level);
    Echelon Eb = image(b, T);
    for (const auto& g : a)
        if (!Eb.contains(row_of(g, T))) return false;
    return true;
}

bool LocalEngine::equal(const std::vector<Poly>& a, const std::vector<Poly>& b) const {
    return subset(a, b) && subset(b, a);
}

long LocalEngine::quot_length(const std::vector<Poly>& outer,
                              const std::vector<Poly>& inner) const {
    Stabilized so = stabilize(outer);
    Stabilized si = stabilize(inner);
    int level = std::max(so.level, si.level);
    MonoTable T(dim_, level);
    Echelon Eo = image(outer, T);
    Echelon Ei = image(inner, T);
    for (const auto& g : inner)
        if (!Eo.contains(row_of(g, T)))
            throw ContainmentFailed("quot_length: inner ideal not contained in outer");
    return Eo.dim() - Ei.dim();
}

std::vector<Poly> LocalEngine::colon(const std::vector<Poly>& gens, const Poly& a) const {
    if (a.is_zero()) throw Error("colon: zero element");
    Stabilized s = stabilize(gens);
    int level = s.level;
    MonoTable T(dim_, level);
    // Seed the working echelon with the image of B (tracking 0): a tracked
    // kernel is then exactly a combination f of monomials with a*f in B_m.
    Echelon W(field_);
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        int room = level - g.min_degree();
        for (int c = 0; c < T.size(); ++c) {
            if (monomial::total_degree(T.mono(c)) >= room) continue;
            W.insert(row_of(groebner::poly_mul_term(g, T.mono(c), 1, field_), T));
        }
    }
    std::vector<Poly> out;
    for (int c = 0; c < T.size(); ++c) {
        Row main = row_of(groebner::poly_mul_term(a, T.mono(c), 1, field_), T);
        Row track{{c, 1}};
        Row kernel;
        if (!W.insert(std::move(main), std::move(track), &kernel))
            if (!kernel.empty()) out.push_back(poly_of(kernel, T));
    }
    for (auto& p : power_of_maximal(level)) out.push_back(std::move(p));
    return out;
}

std::vector<Poly> LocalEngine::intersect(const std::vector<Poly>& a,
                                         const std::vector<Poly>& b) const {
    Stabilized sa = stabilize(a);
    Stabilized sb = stabilize(b);
    int level = std::max(sa.level, sb.level);
    MonoTable T(dim_, level);
    // Zassenhaus-style: seed with Image(b) rows carrying zero tracking, then
    // feed a spanning set of Image(a) tracking itself; a dependent insertion
    // yields a vector of Image(a) that lies in Image(b).
    Echelon W(field_);
    for (const auto& g : b) {
        if (g.is_zero()) continue;
        int room = level - g.min_degree();
        for (int c = 0; c < T.size(); ++c) {
            if (monomial::total_degree(T.mono(c)) >= room) continue;
            W.insert(row_of(groebner::poly_mul_term(g, T.mono(c), 1, field_), T));
        }
    }
    std::vector<Poly> out;
    for (const auto& g : a) {
        if (g.is_zero()) continue;
        int room = level - g.min_degree();
        for (int c = 0; c < T.size(); ++c) {
            if (monomial::total_degree(T.mono(c)) >= room) continue;
            Row main = row_of(groebner::poly_mul_term(g, T.mono(c), 1, field_), T);
            Row track = main;
            Row kernel;
            if (!W.insert(std::move(main), std::move(track), &kernel))
                if (!kernel.empty()) out.push_back(poly_of(kernel, T));
        }
    }
    for (auto& p : power_of_maximal(level)) out.push_back(std::move(p));
    return out;
}

}  // namespace fcone::local
