#include "fcone/monomial.hpp"

#include <algorithm>
#include <map>

namespace fcone::monomial {

namespace {

bool lex_degree_less(const Monomial& a, const Monomial& b) {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
}

}  // namespace

MonomialIdeal::MonomialIdeal(int dim, std::vector<Monomial> gens) : dim_(dim) {
    if (dim < 1) throw Error("monomial ideal: dimension must be >= 1");
    if (gens.empty()) throw Error("monomial ideal: need at least one generator");
    for (const auto& g : gens) {
        if (static_cast<int>(g.size()) != dim)
            throw Error("monomial ideal: generator arity mismatch");
        for (int e : g)
            if (e < 0) throw Error("monomial ideal: negative exponent");
    }
    std::sort(gens.begin(), gens.end(), lex_degree_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    // For large candidate sets the all-pairs divisibility scan is quadratic;
    // switch to an upward-closure sweep over the exponent bounding box, where
    // a cell is a minimal generator iff it is in the ideal but no one-step
    // predecessor is.
    std::vector<long> box(dim, 1);
    for (int v = 0; v < dim; ++v)
        for (const auto& g : gens) box[v] = std::max<long>(box[v], g[v] + 1);
    long cells = 1;
    for (int v = 0; v < dim; ++v) {
        cells *= box[v];
        if (cells > (1L << 23)) break;
    }
    if (gens.size() > 256 && cells <= (1L << 23)) {
        std::vector<long> stride(dim, 1);
        for (int v = dim - 2; v >= 0; --v) stride[v] = stride[v + 1] * box[v + 1];
        std::vector<char> in_ideal(cells, 0);
        for (const auto& g : gens) {
            long idx = 0;
            for (int v = 0; v < dim; ++v) idx += stride[v] * g[v];
            in_ideal[idx] = 1;
        }
        Monomial p(dim, 0);
        for (long idx = 0; idx < cells; ++idx) {
            bool in = in_ideal[idx] != 0;
            for (int v = 0; v < dim && !in; ++v)
                if (p[v] > 0 && in_ideal[idx - stride[v]]) in = true;
            if (in) {
                in_ideal[idx] = 1;
                bool minimal = true;
                for (int v = 0; v < dim && minimal; ++v)
                    if (p[v] > 0 && in_ideal[idx - stride[v]]) minimal = false;
                if (minimal) gens_.push_back(p);
            }
            for (int v = dim - 1; v >= 0; --v) {
                if (++p[v] < box[v]) break;
                p[v] = 0;
            }
        }
        std::sort(gens_.begin(), gens_.end(), lex_degree_less);
        return;
    }

    for (const auto& g : gens) {
        bool minimal = true;
        for (const auto& h : gens)
            if (h != g && divides(h, g)) {
                minimal = false;
                break;
            }
        if (minimal) gens_.push_back(g);
    }
}

bool MonomialIdeal::contains(const Monomial& m) const {
    for (const auto& g : gens_)
        if (divides(g, m)) return true;
    return false;
}

bool MonomialIdeal::is_m_primary() const {
    if (total_degree(gens_.front()) == 0) return true;  // unit ideal
    for (int v = 0; v < dim_; ++v) {
        bool found = false;
        for (const auto& g : gens_) {
            bool pure = g[v] > 0;
            for (int w = 0; w < dim_ && pure; ++w)
                if (w != v && g[w] != 0) pure = false;
            if (pure) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

MonomialIdeal mi_minimalize(int dim, std::vector<Monomial> gens) {
    return MonomialIdeal(dim, std::move(gens));
}

MonomialIdeal mi_unit(int dim) {
    return MonomialIdeal(dim, {Monomial(dim, 0)});
}

MonomialIdeal mi_maximal(int dim) {
    std::vector<Monomial> gens;
    for (int v = 0; v < dim; ++v) {
        Monomial m(dim, 0);
        m[v] = 1;
        gens.push_back(m);
    }
    return MonomialIdeal(dim, std::move(gens));
}

MonomialIdeal mi_product(const MonomialIdeal& I, const MonomialIdeal& J) {
    if (I.dim() != J.dim()) throw Error("mi_product: dimension mismatch");
    std::vector<Monomial> gens;
    gens.reserve(I.mingens().size() * J.mingens().size());
    for (const auto& a : I.mingens())
        for (const auto& b : J.mingens()) {
            Monomial m = a;
            for (size_t i = 0; i < m.size(); ++i) m[i] += b[i];
            gens.push_back(std::move(m));
        }
    return MonomialIdeal(I.dim(), std::move(gens));
}

MonomialIdeal mi_power(const MonomialIdeal& I, int n) {
    if (n < 0) throw Error("mi_power: negative exponent");
    // Repeated squaring with minimalization after each multiply; generator
    // blow-up is the cost driver here.
    MonomialIdeal acc = mi_unit(I.dim());
    MonomialIdeal base = I;
    while (n > 0) {
        if (n & 1) acc = mi_product(acc, base);
        n >>= 1;
        if (n > 0) base = mi_product(base, base);
    }
    return acc;
}

long mi_colength(const MonomialIdeal& I) {
    if (!I.is_m_primary())
        throw NotFiniteColength("mi_colength: ideal is not m-primary");
    const int d = I.dim();
    // Bounding box from the generator exponents; every standard monomial is
    // strictly below the pure-power corner in each coordinate.
    std::vector<long> box(d, 0);
    for (const auto& g : I.mingens())
        for (int v = 0; v < d; ++v) box[v] = std::max<long>(box[v], g[v]);

    long cells = 1;
    for (int v = 0; v < d; ++v) cells *= box[v];
    if (cells == 0) return 0;  // unit ideal

    std::map<Monomial, bool> is_gen;
    for (const auto& g : I.mingens()) is_gen[g] = true;

    // Membership is upward-closed: a box cell is in the ideal iff it is a
    // generator or lies one unit step above an in-ideal cell.
    std::vector<char> in_ideal(cells, 0);
    std::vector<long> stride(d, 1);
    for (int v = d - 2; v >= 0; --v) stride[v] = stride[v + 1] * box[v + 1];

    Monomial p(d, 0);
    long count = 0;
    for (long idx = 0; idx < cells; ++idx) {
        bool in = is_gen.count(p) > 0;
        for (int v = 0; v < d && !in; ++v)
            if (p[v] > 0 && in_ideal[idx - stride[v]]) in = true;
        in_ideal[idx] = in ? 1 : 0;
        if (!in) ++count;
        for (int v = d - 1; v >= 0; --v) {  // odometer, last coordinate fastest
            if (++p[v] < box[v]) break;
            p[v] = 0;
        }
    }
    return count;
}

std::vector<long> mi_mu_powers(const MonomialIdeal& I, int N) {
    std::vector<long> mu{1};
    MonomialIdeal P = mi_unit(I.dim());
    for (int n = 1; n <= N; ++n) {
        P = mi_product(P, I);
        mu.push_back(P.mu());
    }
    return mu;
}

std::vector<std::vector<long>> grid_lengths(const MonomialIdeal& I, int r0, int s0,
                                            int rspan, int sspan) {
    if (!I.is_m_primary())
        throw NotFiniteColength("grid_lengths: ideal is not m-primary");
    const MonomialIdeal m = mi_maximal(I.dim());
    std::vector<std::vector<long>> table(rspan, std::vector<long>(sspan, 0));
    MonomialIdeal Is = mi_power(I, s0);
    for (int s = 0; s < sspan; ++s) {
        MonomialIdeal mrIs = mi_product(mi_power(m, r0), Is);
        for (int r = 0; r < rspan; ++r) {
            table[r][s] = mi_colength(mrIs);
            if (r + 1 < rspan) mrIs = mi_product(m, mrIs);
        }
        if (s + 1 < sspan) Is = mi_product(Is, I);
    }
    return table;
}

}  // namespace fcone::monomial
