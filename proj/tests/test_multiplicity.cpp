#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fcone/multiplicity.hpp"

using namespace fcone;
using namespace fcone::multiplicity;
using groebner::Poly;
using groebner::PrimeField;
using monomial::Monomial;
using monomial::MonomialIdeal;

namespace {

const PrimeField F;

Poly mono(int d, const Monomial& e, uint32_t c = 1) {
    return groebner::poly_monomial(d, groebner::TermOrder::Grevlex, e, c, F);
}

std::vector<Poly> lift(const MonomialIdeal& I) {
    std::vector<Poly> out;
    for (const auto& m : I.mingens()) out.push_back(mono(I.dim(), m));
    return out;
}

Poly random_combination(const std::vector<Poly>& gens, std::mt19937_64& rng) {
    std::uniform_int_distribution<uint32_t> coeff(1, F.p - 1);
    Poly acc(gens.front().dim(), groebner::TermOrder::Grevlex);
    for (const auto& g : gens)
        acc = groebner::poly_add(acc, groebner::poly_scale(g, coeff(rng), F), F);
    return acc;
}

const MonomialIdeal ideal62(2, {{4, 0}, {3, 1}, {1, 3}, {0, 4}});

}  // namespace

TEST_CASE("Hilbert-Samuel multiplicity of monomial ideals") {
    CHECK(hs_multiplicity(monomial::mi_maximal(2)) == 1);
    CHECK(hs_multiplicity(monomial::mi_power(monomial::mi_maximal(2), 3)) == 9);
    CHECK(hs_multiplicity(monomial::mi_power(monomial::mi_maximal(3), 2)) == 8);
    CHECK(hs_multiplicity(ideal62) == 16);
    // e(I) for I = (x^2, y^3): colength of a parameter ideal, 2*3
    CHECK(hs_multiplicity(MonomialIdeal(2, {{2, 0}, {0, 3}})) == 6);
}

TEST_CASE("Bhattacharya fit on the 4-generated degree-4 plane ideal") {
    auto t = fit_bhattacharya(ideal62);
    REQUIRE(t.d == 2);
    CHECK(t.validated);
    CHECK(t.mixed == std::vector<long>{1, 4, 16});
    CHECK(t.escalations == 0);
}

TEST_CASE("Bhattacharya fit for I = m^3 in three variables") {
    auto t = fit_bhattacharya(monomial::mi_power(monomial::mi_maximal(3), 3));
    CHECK(t.validated);
    CHECK(t.mixed == std::vector<long>{1, 3, 9, 27});
}

TEST_CASE("power law: e_j(m|m^k) = k^j") {
    for (int d = 2; d <= 3; ++d)
        for (int k = 1; k <= 3; ++k) {
            auto t = fit_bhattacharya(monomial::mi_power(monomial::mi_maximal(d), k));
            long expect = 1;
            for (int j = 0; j <= d; ++j) {
                CHECK(t.mixed[j] == expect);
                expect *= k;
            }
        }
}

TEST_CASE("joint-reduction route for e_{d-1}") {
    std::mt19937_64 rng(2024);
    SUBCASE("plane 4-generated ideal: e_1 = 4 via colengths 16 - 11 - 1") {
        local::LocalEngine L(2, F);
        auto igens = lift(ideal62);
        Poly x = random_combination({mono(2, {1, 0}), mono(2, {0, 1})}, rng);
        Poly a = random_combination(igens, rng);
        // the two colengths behind the identity
        std::vector<Poly> big;
        for (const auto& g : igens) big.push_back(groebner::poly_mul(x, g, F));
        big.push_back(groebner::poly_mul_term(a, {1, 0}, 1, F));
        big.push_back(groebner::poly_mul_term(a, {0, 1}, 1, F));
        CHECK(L.colength(big).colength == 16);
        CHECK(L.colength(igens).colength == 11);
        CHECK(e_last_via_joint_reduction(L, igens, x, {a}) == 4);
    }
    SUBCASE("three variables, I = m^3: e_2 = 9 via colengths 21 - 10 - 2") {
        local::LocalEngine L(3, F);
        auto m3 = monomial::mi_power(monomial::mi_maximal(3), 3);
        auto igens = lift(m3);
        auto mgens = lift(monomial::mi_maximal(3));
        Poly x = random_combination(mgens, rng);
        Poly a1 = random_combination(igens, rng);
        Poly a2 = random_combination(igens, rng);
        std::vector<Poly> big;
        for (const auto& g : igens) big.push_back(groebner::poly_mul(x, g, F));
        for (const auto& a : {a1, a2})
            for (int v = 0; v < 3; ++v) {
                Monomial xv(3, 0);
                xv[v] = 1;
                big.push_back(groebner::poly_mul_term(a, xv, 1, F));
            }
        CHECK(L.colength(big).colength == 21);
        CHECK(L.colength(igens).colength == 10);
        CHECK(e_last_via_joint_reduction(L, igens, x, {a1, a2}) == 9);
    }
    SUBCASE("regular plane ring, I = m: e_1 = 1") {
        local::LocalEngine L(2, F);
        auto mgens = lift(monomial::mi_maximal(2));
        Poly x = random_combination(mgens, rng);
        Poly a = random_combination(mgens, rng);
        CHECK(e_last_via_joint_reduction(L, mgens, x, {a}) == 1);
    }
}

TEST_CASE("fit route and joint-reduction route agree on random plane ideals") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> exp_dist(1, 5);
    int done = 0;
    for (int trial = 0; done < 15 && trial < 60; ++trial) {
        int a = exp_dist(rng), b = exp_dist(rng);
        Monomial extra{exp_dist(rng), exp_dist(rng)};
        MonomialIdeal I(2, {{a, 0}, {0, b}, extra});
        local::LocalEngine L(2, F);
        auto igens = lift(I);
        Poly x = random_combination(lift(monomial::mi_maximal(2)), rng);
        Poly acomb = random_combination(igens, rng);
        long via_jr = e_last_via_joint_reduction(L, igens, x, {acomb});
        long via_fit = fit_bhattacharya(I).mixed[1];
        CHECK(via_jr == via_fit);
        ++done;
    }
    CHECK(done == 15);
}

TEST_CASE("classification") {
    auto c1 = classify(3, 10, 9);
    CHECK(c1.verdict == ClassVerdict::AlmostMinimal);
    CHECK(c1.slack == 1);
    auto c2 = classify(2, 4, 4);
    CHECK(c2.verdict == ClassVerdict::AlmostMinimal);
    auto c3 = classify(2, 2, 1);  // I = m in the regular plane ring
    CHECK(c3.verdict == ClassVerdict::Minimal);
    CHECK(classify(2, 3, 6).verdict == ClassVerdict::Neither);
}

TEST_CASE("dimension-one mixed multiplicities from the semigroup") {
    // <4,5,6,7>, I = (t^4, t^5, t^6): e(m) = 4, e(I) = 4, almost minimal
    auto S = semigroup::sg_new({4, 5, 6, 7});
    semigroup::SemigroupIdeal I(S, {4, 5, 6});
    auto t = mixed_dim1(I);
    CHECK(t.mixed == std::vector<long>{4, 4});
    CHECK(classify(1, I.mu(), t.mixed[0]).verdict == ClassVerdict::AlmostMinimal);

    // <3,7,11>, I = (t^6, t^7, t^11): e(m) = 3 = mu, minimal
    auto S2 = semigroup::sg_new({3, 7, 11});
    semigroup::SemigroupIdeal I2(S2, {6, 7, 11});
    auto t2 = mixed_dim1(I2);
    CHECK(t2.mixed[0] == 3);
    CHECK(classify(1, I2.mu(), t2.mixed[0]).verdict == ClassVerdict::Minimal);
}
