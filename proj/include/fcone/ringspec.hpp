#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fcone/monomial.hpp"

namespace fcone::cli {

enum class RingKind { Polynomial, Semigroup };

struct Bounds {
    uint32_t prime = 32003;
    uint64_t seed = 0;
    int trunc = 12;    // series truncation: mu(I^0..I^trunc)
    int Nmax = 8;      // bound for r(m|I), r(I) searches
    int nmax = 6;      // bound for Rees certification / nzd degree window
    int samples = 5;   // Monte Carlo sample count
    int guard = 4;     // trailing-zero window for reconstruction
};

/// Parsed problem statement: a local ring proxy and an m-primary ideal.
struct RingSpec {
    RingKind kind = RingKind::Polynomial;
    std::vector<std::string> vars;                // polynomial kind
    std::vector<long> sgens;                      // semigroup kind
    std::vector<monomial::Monomial> ideal_monos;  // polynomial kind
    std::vector<long> ideal_exps;                 // semigroup kind
    Bounds bounds;

    int dim() const {
        return kind == RingKind::Polynomial ? static_cast<int>(vars.size()) : 1;
    }
};

/// Line-oriented `key value` grammar; throws ParseError with line/column
/// positions for syntax errors and explanations for semantic ones
/// (non-coprime semigroup generators, non-m-primary ideals, ...).
RingSpec parse_spec(const std::string& text);

/// Canonical rendering; parse_spec(print_spec(s)) reproduces s.
std::string print_spec(const RingSpec& spec);

std::string to_string(const monomial::Monomial& m, const std::vector<std::string>& vars);

}  // namespace fcone::cli
