#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fcone/errors.hpp"
#include "fcone/monomial.hpp"

namespace fcone::groebner {

using monomial::Monomial;
using monomial::total_degree;

struct PrimeField {
    uint32_t p = 32003;

    uint32_t add(uint32_t a, uint32_t b) const {
        uint32_t s = a + b;
        return s >= p ? s - p : s;
    }
    uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p - b; }
    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p - a; }
    uint32_t mul(uint32_t a, uint32_t b) const {
        return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p);
    }
    uint32_t pow(uint32_t a, uint64_t e) const {
        uint32_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    uint32_t inv(uint32_t a) const {
        if (a == 0) throw Error("division by zero in F_p");
        return pow(a, p - 2);
    }
    bool operator==(const PrimeField&) const = default;
};

bool is_prime(uint64_t n);

enum class TermOrder {
    Grevlex,
    Lex,
    /// Block order eliminating variable 0: compare its exponent first,
    /// grevlex on the remaining variables.
    ElimFirst,
};

/// Strict order on monomials of equal arity; returns a < b.
bool mono_less(const Monomial& a, const Monomial& b, TermOrder order);

struct Term {
    Monomial mono;
    uint32_t coeff;
};

/// Sparse polynomial over F_p, terms sorted leading-first.
class Poly {
public:
    Poly(int dim, TermOrder order) : dim_(dim), order_(order) {}
    Poly(int dim, TermOrder order, std::vector<Term> terms, const PrimeField& f);

    int dim() const { return dim_; }
    TermOrder order() const { return order_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    const Term& lead() const { return terms_.front(); }

    int min_degree() const;  // min total degree over terms; 0 for the zero poly
    int max_degree() const;

private:
    int dim_;
    TermOrder order_;
    std::vector<Term> terms_;
};

Poly poly_monomial(int dim, TermOrder order, const Monomial& m, uint32_t c,
                   const PrimeField& f);
Poly poly_add(const Poly& a, const Poly& b, const PrimeField& f);
Poly poly_sub(const Poly& a, const Poly& b, const PrimeField& f);
Poly poly_scale(const Poly& a, uint32_t c, const PrimeField& f);
/// a * (c * x^m)
Poly poly_mul_term(const Poly& a, const Monomial& m, uint32_t c, const PrimeField& f);
Poly poly_mul(const Poly& a, const Poly& b, const PrimeField& f);
/// Drop all terms of total degree >= bound.
Poly poly_truncate(const Poly& a, int bound, const PrimeField& f);
/// Reorder the terms of `a` under a different term order (same support).
Poly poly_reorder(const Poly& a, TermOrder order, const PrimeField& f);

/// Full normal form of f against a set of reducers (every term reduced).
Poly normal_form(const Poly& f, std::span<const Poly> basis, const PrimeField& field);
/// Exact division; throws if f is not a multiple of g.
Poly poly_divide_exact(const Poly& f, const Poly& g, const PrimeField& field);

std::string to_string(const Poly& p, std::span<const std::string> var_names);

}  // namespace fcone::groebner
