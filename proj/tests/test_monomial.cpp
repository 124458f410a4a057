#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fcone/monomial.hpp"

using namespace fcone;
using namespace fcone::monomial;

namespace {

// Example 6.2 ideal: (x^4, x^3 y, x y^3, y^4).
MonomialIdeal example62() {
    return MonomialIdeal(2, {{4, 0}, {3, 1}, {1, 3}, {0, 4}});
}

MonomialIdeal random_m_primary(std::mt19937_64& rng, int d, int max_exp, int extra) {
    std::uniform_int_distribution<int> exp(1, max_exp), coord(0, max_exp);
    std::vector<Monomial> gens;
    for (int v = 0; v < d; ++v) {
        Monomial m(d, 0);
        m[v] = exp(rng);
        gens.push_back(m);
    }
    for (int i = 0; i < extra; ++i) {
        Monomial m(d);
        for (int v = 0; v < d; ++v) m[v] = coord(rng);
        if (total_degree(m) == 0) continue;
        gens.push_back(m);
    }
    return MonomialIdeal(d, gens);
}

}  // namespace

TEST_CASE("mi_minimalize") {
    MonomialIdeal a(2, {{2, 0}, {2, 1}, {0, 3}});
    CHECK(a.mingens() == std::vector<Monomial>{{2, 0}, {0, 3}});

    CHECK(example62().mu() == 4);

    // all degree-3 monomials in 3 variables
    std::vector<Monomial> cubics;
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; i + j <= 3; ++j) cubics.push_back({i, j, 3 - i - j});
    CHECK(MonomialIdeal(3, cubics).mu() == 10);
}

TEST_CASE("mi_product and mi_power") {
    MonomialIdeal a(2, {{2, 0}, {0, 2}});
    MonomialIdeal b(2, {{1, 0}, {0, 1}});
    CHECK(mi_product(a, b).mingens() ==
          std::vector<Monomial>{{0, 3}, {1, 2}, {2, 1}, {3, 0}});

    // Example 6.2: I^2 = m^8
    auto I2 = mi_power(example62(), 2);
    CHECK(I2 == mi_power(mi_maximal(2), 8));
    CHECK(I2.mu() == 9);

    CHECK(mi_power(example62(), 0) == mi_unit(2));
}

TEST_CASE("mi_colength") {
    CHECK(mi_colength(MonomialIdeal(2, {{2, 0}, {0, 3}})) == 6);
    CHECK(mi_colength(example62()) == 11);
    CHECK(mi_colength(mi_power(mi_maximal(2), 4)) == 10);
    CHECK_THROWS_AS(mi_colength(MonomialIdeal(2, {{1, 1}})), NotFiniteColength);
}

TEST_CASE("mi_mu_powers") {
    // Example 6.1: I = m^3 in 3 variables, mu(I^n) = C(3n+2, 2)
    auto I = mi_power(mi_maximal(3), 3);
    CHECK(mi_mu_powers(I, 3) == std::vector<long>{1, 10, 28, 55});

    CHECK(mi_mu_powers(example62(), 5) == std::vector<long>{1, 4, 9, 13, 17, 21});

    CHECK(mi_mu_powers(mi_maximal(2), 4) == std::vector<long>{1, 2, 3, 4, 5});
}

TEST_CASE("grid_lengths") {
    auto g = grid_lengths(example62(), 0, 0, 5, 2);
    CHECK(g[1][0] == 1);    // ell(R/m)
    CHECK(g[0][1] == 11);   // ell(R/I)
    CHECK(g[4][0] == 10);   // ell(R/m^4)
}

TEST_CASE("power agrees with iterated product on random ideals") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 30; ++trial) {
        std::uniform_int_distribution<int> dd(1, 3);
        int d = dd(rng);
        auto I = random_m_primary(rng, d, 6, 3);
        MonomialIdeal it = mi_unit(d);
        for (int n = 0; n <= 5; ++n) {
            CHECK(mi_power(I, n) == it);
            it = mi_product(it, I);
        }
    }
}

TEST_CASE("grid lengths strictly increase in each argument") {
    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 10; ++trial) {
        auto I = random_m_primary(rng, 2, 4, 2);
        auto g = grid_lengths(I, 1, 1, 4, 4);
        for (int r = 0; r < 4; ++r)
            for (int s = 0; s < 4; ++s) {
                if (r + 1 < 4) CHECK(g[r + 1][s] > g[r][s]);
                if (s + 1 < 4) CHECK(g[r][s + 1] > g[r][s]);
            }
    }
}

TEST_CASE("grid of a power of m matches m-adic lengths") {
    auto I = mi_power(mi_maximal(2), 3);  // I = m^3, so m^r I^s = m^(r+3s)
    auto g = grid_lengths(I, 2, 1, 3, 3);
    for (int r = 0; r < 3; ++r)
        for (int s = 0; s < 3; ++s) {
            long k = (2 + r) + 3 * (1 + s);
            CHECK(g[r][s] == k * (k + 1) / 2);
        }
}
