#pragma once

#include <map>
#include <utility>
#include <vector>

#include "fcone/poly.hpp"

namespace fcone::local {

using groebner::Poly;
using groebner::PrimeField;
using monomial::Monomial;

/// Witness that ell(R/(B + m^D)) stalled: value == value_next certifies
/// m^level is contained in the localized ideal (Nakayama), so every
/// measurement taken in R/m^level is exact for the localization.
struct StabilizationCertificate {
    int level = 0;
    long value = 0;
    long value_next = 0;
    long value_next2 = 0;
    bool operator==(const StabilizationCertificate&) const = default;
};

struct ColengthResult {
    long colength = 0;
    StabilizationCertificate cert;
};

struct EngineStats {
    long stabilizations = 0;
    long images_built = 0;
    int max_level_reached = 0;
};

/// All monomials of total degree < level in `dim` variables, indexed by
/// ascending degree (ties broken by a fixed lex rule).
class MonoTable {
public:
    MonoTable(int dim, int level);

    int size() const { return static_cast<int>(monos_.size()); }
    int level() const { return level_; }
    const Monomial& mono(int col) const { return monos_[col]; }
    int col(const Monomial& m) const;  // -1 if degree >= level

private:
    int dim_;
    int level_;
    std::vector<Monomial> monos_;
    std::map<Monomial, int> index_;
};

/// Sparse F_p row: (column, coefficient) pairs sorted by column.
using Row = std::vector<std::pair<int, uint32_t>>;

/// Row echelon form over F_p with one pivot per column; insertions may
/// carry a tracking row that accumulates the same eliminations, so a
/// dependent insertion reports the combination that vanished (used for
/// colon and intersection kernels).
class Echelon {
public:
    explicit Echelon(const PrimeField& f) : f_(&f) {}

    /// Returns true if the row was independent (and stored). When the row
    /// is dependent and `kernel` is non-null, the eliminated tracking row
    /// is written there.
    bool insert(Row main, Row track = {}, Row* kernel = nullptr);
    bool contains(const Row& r) const;
    int dim() const { return static_cast<int>(rows_.size()); }

private:
    const PrimeField* f_;
    std::map<int, std::pair<Row, Row>> rows_;  // pivot column -> (monic row, track)
    std::vector<uint32_t> dmain_, dtrack_;     // dense scratch for insert()
};

/// Exact measurements on ideals of the local ring F_p[x_1..x_d]_(m).
/// Every operation works in R/m^D for a level D certified by a colength
/// stall (see StabilizationCertificate); results are exact, not truncated
/// approximations.
class LocalEngine {
public:
    LocalEngine(int dim, const PrimeField& field, int max_level = 128);

    int dim() const { return dim_; }
    const PrimeField& field() const { return field_; }
    const EngineStats& stats() const { return stats_; }

    /// ell(R_m / B_m); throws NoStabilization if no stall occurs within
    /// the level cap (e.g. the ideal is not m-primary).
    ColengthResult colength(const std::vector<Poly>& gens) const;
    /// f in B_m?
    bool member(const Poly& f, const std::vector<Poly>& gens) const;
    /// a subset of b, as localized ideals.
    bool subset(const std::vector<Poly>& a, const std::vector<Poly>& b) const;
    bool equal(const std::vector<Poly>& a, const std::vector<Poly>& b) const;
    /// ell(outer_m / inner_m); throws ContainmentFailed unless inner is
    /// contained in outer.
    long quot_length(const std::vector<Poly>& outer, const std::vector<Poly>& inner) const;
    /// Generators of (B_m : a) (a finite generating set, not minimal).
    std::vector<Poly> colon(const std::vector<Poly>& gens, const Poly& a) const;
    /// Generators of a_m intersect b_m.
    std::vector<Poly> intersect(const std::vector<Poly>& a, const std::vector<Poly>& b) const;

private:
    struct Stabilized {
        int level;
        long colength;
        StabilizationCertificate cert;
    };

    Row row_of(const Poly& f, const MonoTable& T) const;
    Poly poly_of(const Row& r, const MonoTable& T) const;
    Echelon image(const std::vector<Poly>& gens, const MonoTable& T) const;
    long colength_at(const std::vector<Poly>& gens, int level) const;
    Stabilized stabilize(const std::vector<Poly>& gens) const;
    std::vector<Poly> power_of_maximal(int level) const;  // monomial generators of m^level

    int dim_;
    PrimeField field_;
    int max_level_;
    mutable EngineStats stats_;
};

}  // namespace fcone::local
