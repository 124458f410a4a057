#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fcone/local.hpp"

using namespace fcone;
using namespace fcone::groebner;
using namespace fcone::local;

namespace {

const PrimeField F;

Poly mono(int d, const Monomial& e, uint32_t c = 1) {
    return poly_monomial(d, TermOrder::Grevlex, e, c, F);
}

Poly make(int d, std::vector<Term> terms) { return Poly(d, TermOrder::Grevlex, std::move(terms), F); }

std::vector<Poly> lift(const monomial::MonomialIdeal& I) {
    std::vector<Poly> out;
    for (const auto& m : I.mingens()) out.push_back(mono(I.dim(), m));
    return out;
}

monomial::MonomialIdeal random_mprimary(std::mt19937_64& rng, int d, int maxexp, int extra) {
    std::uniform_int_distribution<int> pow_dist(1, maxexp);
    std::vector<Monomial> gens;
    for (int v = 0; v < d; ++v) {
        Monomial m(d, 0);
        m[v] = pow_dist(rng);
        gens.push_back(m);
    }
    std::uniform_int_distribution<int> exp_dist(0, maxexp);
    for (int k = 0; k < extra; ++k) {
        Monomial m(d);
        for (int v = 0; v < d; ++v) m[v] = exp_dist(rng);
        gens.push_back(m);
    }
    return monomial::MonomialIdeal(d, std::move(gens));
}

}  // namespace

TEST_CASE("local colength of simple ideals") {
    LocalEngine L(2, F);
    CHECK(L.colength({mono(2, {2, 0}), mono(2, {1, 1}), mono(2, {0, 2})}).colength == 3);
    // (x + y^2, y^3): substitute x = -y^2, leaving k[y]/(y^3)
    CHECK(L.colength({make(2, {{{1, 0}, 1}, {{0, 2}, 1}}), mono(2, {0, 3})}).colength == 3);
    // (x^2 + y^2, y^3): standard monomials {1, x, y, xy, y^2, xy^2}
    CHECK(L.colength({make(2, {{{2, 0}, 1}, {{0, 2}, 1}}), mono(2, {0, 3})}).colength == 6);
}

TEST_CASE("stabilization certificate records three equal witnesses") {
    LocalEngine L(2, F);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 25; ++trial) {
        auto cr = L.colength(lift(random_mprimary(rng, 2, 5, 2)));
        CHECK(cr.cert.level >= 1);
        CHECK(cr.cert.value == cr.cert.value_next);
        CHECK(cr.cert.value == cr.cert.value_next2);
        CHECK(cr.cert.value == cr.colength);
    }
}

TEST_CASE("non-m-primary ideal is rejected with NoStabilization") {
    LocalEngine L(2, F, 24);
    CHECK_THROWS_AS((void)L.colength({mono(2, {1, 0})}), NoStabilization);
    CHECK_THROWS_AS((void)L.colength({make(2, {{{1, 1}, 1}, {{0, 3}, 1}})}), NoStabilization);
}

TEST_CASE("colength agrees with the staircase oracle on random monomial ideals") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 60; ++trial) {
        int d = 2 + static_cast<int>(rng() % 2);
        LocalEngine L(d, F);
        auto I = random_mprimary(rng, d, d == 2 ? 6 : 4, 3);
        CHECK(L.colength(lift(I)).colength == monomial::mi_colength(I));
    }
}

TEST_CASE("local equality") {
    LocalEngine L(2, F);
    std::vector<Poly> A = {mono(2, {2, 0}), mono(2, {0, 2})};
    CHECK(L.equal(A, A));
    std::vector<Poly> B = {mono(2, {2, 0}), mono(2, {0, 2}),
                           make(2, {{{2, 0}, 1}, {{0, 2}, 1}})};
    CHECK(L.equal(A, B));
    std::vector<Poly> C = {mono(2, {2, 0}), mono(2, {1, 1}), mono(2, {0, 2})};
    CHECK_FALSE(L.equal(A, C));
    CHECK(L.subset(C, A) == false);
    CHECK(L.subset(A, C));
}

TEST_CASE("local membership") {
    LocalEngine L(2, F);
    std::vector<Poly> m2 = {mono(2, {2, 0}), mono(2, {1, 1}), mono(2, {0, 2})};
    CHECK(L.member(mono(2, {2, 0}), m2));
    CHECK(L.member(mono(2, {5, 3}), m2));
    CHECK_FALSE(L.member(mono(2, {0, 1}), m2));
    // a unit times a member is a member: (1 + x) * x^2
    CHECK(L.member(make(2, {{{3, 0}, 1}, {{2, 0}, 1}}), m2));

    std::vector<Poly> I = {mono(2, {4, 0}), mono(2, {3, 1}), mono(2, {1, 3}), mono(2, {0, 4})};
    CHECK_FALSE(L.member(mono(2, {2, 2}), I));
    CHECK(L.member(mono(2, {6, 2}), I));  // x^2y^2 * x^4 lies in I (degree 8 >= staircase)
}

TEST_CASE("quot_length and containment enforcement") {
    LocalEngine L(2, F);
    std::vector<Poly> m1 = {mono(2, {1, 0}), mono(2, {0, 1})};
    std::vector<Poly> m3 = {mono(2, {3, 0}), mono(2, {2, 1}), mono(2, {1, 2}), mono(2, {0, 3})};
    CHECK(L.quot_length(m1, m3) == 5);  // ell(m/m^3) = 6 - 1
    CHECK_THROWS_AS((void)L.quot_length(m3, m1), ContainmentFailed);
}

TEST_CASE("colon and intersection against staircase oracles") {
    std::mt19937_64 rng(21);
    LocalEngine L(2, F);
    for (int trial = 0; trial < 30; ++trial) {
        auto A = random_mprimary(rng, 2, 5, 2);
        Monomial f{static_cast<int>(rng() % 3), static_cast<int>(rng() % 3)};
        std::vector<Monomial> qgens;
        for (const auto& a : A.mingens())
            qgens.push_back({std::max(a[0] - f[0], 0), std::max(a[1] - f[1], 0)});
        monomial::MonomialIdeal qoracle(2, std::move(qgens));
        CHECK(L.equal(L.colon(lift(A), mono(2, f)), lift(qoracle)));

        auto B = random_mprimary(rng, 2, 5, 2);
        std::vector<Monomial> lcms;
        for (const auto& a : A.mingens())
            for (const auto& b : B.mingens())
                lcms.push_back({std::max(a[0], b[0]), std::max(a[1], b[1])});
        monomial::MonomialIdeal moracle(2, std::move(lcms));
        CHECK(L.equal(L.intersect(lift(A), lift(B)), lift(moracle)));
    }
}

TEST_CASE("length identity ell((x,y)/(xI+yJ)) = ell(R/I) + ell(R/J) - ell(R/((I:y) cap (J:x)))") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<uint32_t> coeff(1, F.p - 1);
    LocalEngine L(2, F);
    for (int trial = 0; trial < 12; ++trial) {
        // generic linear forms x', y' (a regular pair generating m)
        Poly xe = make(2, {{{1, 0}, coeff(rng)}, {{0, 1}, coeff(rng)}});
        Poly ye = make(2, {{{1, 0}, coeff(rng)}, {{0, 1}, coeff(rng)}});
        auto I = lift(random_mprimary(rng, 2, 4, 2));
        auto J = lift(random_mprimary(rng, 2, 4, 2));

        std::vector<Poly> xIyJ;
        for (const auto& g : I) xIyJ.push_back(poly_mul(xe, g, F));
        for (const auto& g : J) xIyJ.push_back(poly_mul(ye, g, F));
        std::vector<Poly> xy = {xe, ye};
        long lhs = L.quot_length(xy, xIyJ);

        long rI = L.colength(I).colength;
        long rJ = L.colength(J).colength;
        long rMeet = L.colength(L.intersect(L.colon(I, ye), L.colon(J, xe))).colength;
        CHECK(lhs == rI + rJ - rMeet);
    }
}
