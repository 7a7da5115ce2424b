#include <doctest.h>

#include <random>
#include <stdexcept>

#include "sextic/chow.hpp"

using namespace sextic;

namespace {

ChowClass divisor(Variety v, long long a1, long long a2) {
    return DivisorClass{v, a1, a2}.to_chow();
}

ChowClass pow(const ChowClass& x, int k) {
    ChowClass out = ChowClass::unit(x.variety());
    for (int i = 0; i < k; ++i) out = out * x;
    return out;
}

// independent small binomial for the eta^4 oracle
long long choose(int n, int k) {
    long long out = 1;
    for (int i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
    return out;
}

}  // namespace

TEST_CASE("normalize: the F relation rewrites h1 h2") {
    const auto x = ChowClass::monomial(Variety::F, {1, 1});
    const auto expected =
        ChowClass::from_terms(Variety::F, {{{2, 0}, 1}, {{0, 2}, 1}});
    CHECK(x == expected);
}

TEST_CASE("normalize: hyperplane cubes to six points on F") {
    CHECK(pow(divisor(Variety::F, 1, 1), 3) ==
          ChowClass::monomial(Variety::F, {2, 1}, 6));
}

TEST_CASE("normalize: eta^4 = 6 [pt] by binomial expansion") {
    // only eta1^2 eta2^2 survives; its binomial coefficient is C(4,2)
    CHECK(choose(4, 2) == 6);
    const auto x = pow(divisor(Variety::Phi, 1, 1), 4);
    CHECK(x == ChowClass::monomial(Variety::Phi, {2, 2}, choose(4, 2)));
}

TEST_CASE("normalize is idempotent on basis support") {
    for (Variety v : {Variety::F, Variety::Phi}) {
        std::vector<std::pair<Monomial, Int>> terms;
        Int c = 1;
        for (const auto& m : ChowClass::basis(v)) terms.emplace_back(m, c++);
        const auto x = ChowClass::from_terms(v, terms);
        CHECK(ChowClass::from_terms(v, terms) == x);
        std::vector<std::pair<Monomial, Int>> again;
        for (const auto& m : ChowClass::basis(v)) again.emplace_back(m, x.coeff(m));
        CHECK(ChowClass::from_terms(v, again) == x);
    }
}

TEST_CASE("mul: examples on F") {
    const auto h = divisor(Variety::F, 1, 1);
    CHECK(h * h == ChowClass::from_terms(Variety::F, {{{2, 0}, 3}, {{0, 2}, 3}}));
    CHECK(ChowClass::monomial(Variety::F, {2, 0}) * ChowClass::monomial(Variety::F, {0, 1}) ==
          ChowClass::monomial(Variety::F, {2, 1}));
    CHECK((ChowClass::monomial(Variety::F, {0, 2}) * ChowClass::monomial(Variety::F, {0, 1}))
              .is_zero());
}

TEST_CASE("mul rejects mixed varieties") {
    CHECK_THROWS_AS(divisor(Variety::F, 1, 0) * divisor(Variety::Phi, 1, 0),
                    std::invalid_argument);
}

TEST_CASE("degree: examples") {
    CHECK(ChowClass::monomial(Variety::F, {2, 1}, 6).degree() == 6);
    CHECK((divisor(Variety::F, 1, 1) * class_from_beta(4, 4)).degree() == 8);
    CHECK(ChowClass::monomial(Variety::Phi, {2, 2}).degree() == 1);
    CHECK(ChowClass::zero(Variety::F).degree() == 0);
}

TEST_CASE("degree rejects non-top classes") {
    CHECK_THROWS_AS(divisor(Variety::F, 1, 0).degree(), std::invalid_argument);
    CHECK_THROWS_AS(
        (ChowClass::unit(Variety::Phi) + ChowClass::monomial(Variety::Phi, {2, 2})).degree(),
        std::invalid_argument);
}

TEST_CASE("restriction: coefficient formula and examples") {
    // mu1 eta2^2 + mu2 eta1^2 + mu3 eta1 eta2 -> (mu1+mu3) h2^2 + (mu2+mu3) h1^2
    CHECK(restrict_to_f(class_from_mu(1, 3, 2)) == class_from_beta(3, 5));
    CHECK(restrict_to_f(divisor(Variety::Phi, 1, 1)) == divisor(Variety::F, 1, 1));
    CHECK(restrict_to_f(class_from_mu(1, 3, 2) * Int(1)) == class_from_beta(3, 5));
    for (long long m1 = -4; m1 <= 4; ++m1)
        for (long long m2 = -4; m2 <= 4; ++m2)
            for (long long m3 = -4; m3 <= 4; ++m3)
                CHECK(restrict_to_f(class_from_mu(m1, m2, m3)) ==
                      class_from_beta(m1 + m3, m2 + m3));
}

TEST_CASE("restriction rejects point classes on Phi") {
    CHECK_THROWS_AS(restrict_to_f(ChowClass::monomial(Variety::Phi, {2, 2})),
                    std::invalid_argument);
    CHECK_THROWS_AS(restrict_to_f(divisor(Variety::F, 1, 0)), std::invalid_argument);
}

TEST_CASE("ring laws on random classes") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coeff(-20, 20);
    for (Variety v : {Variety::F, Variety::Phi}) {
        auto random_class = [&] {
            std::vector<std::pair<Monomial, Int>> terms;
            for (const auto& m : ChowClass::basis(v)) terms.emplace_back(m, coeff(rng));
            return ChowClass::from_terms(v, terms);
        };
        for (int round = 0; round < 100; ++round) {
            const auto x = random_class(), y = random_class(), z = random_class();
            CHECK(x * y == y * x);
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
        }
    }
}

TEST_CASE("beta and mu extraction are intersection numbers") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long long> coeff(-20, 20);
    for (int round = 0; round < 100; ++round) {
        const long long b1 = coeff(rng), b2 = coeff(rng);
        CHECK(beta_pair(class_from_beta(b1, b2)) == std::pair<Int, Int>{b1, b2});
        const long long m1 = coeff(rng), m2 = coeff(rng), m3 = coeff(rng);
        const auto mu = mu_triple(class_from_mu(m1, m2, m3));
        CHECK(mu[0] == m1);
        CHECK(mu[1] == m2);
        CHECK(mu[2] == m3);
    }
}

TEST_CASE("divisor closed forms over the ring") {
    const auto h = divisor(Variety::F, 1, 1);
    const auto w2 = ChowClass::monomial(Variety::F, {1, 1}, 6);
    for (long long a1 = -10; a1 <= 10; ++a1)
        for (long long a2 = -10; a2 <= 10; ++a2) {
            const auto c1 = divisor(Variety::F, a1, a2);
            CHECK((c1 * c1 * c1).degree() == 3 * (Int(a1) * a1 * a2 + Int(a1) * a2 * a2));
            CHECK((c1 * c1 * h).degree() == Int(a1) * a1 + 4 * Int(a1) * a2 + Int(a2) * a2);
            CHECK((c1 * h * h).degree() == 3 * (Int(a1) + a2));
            CHECK((w2 * c1).degree() == 6 * (Int(a1) + a2));
        }
}

TEST_CASE("both sextics have degree 6") {
    CHECK(pow(divisor(Variety::F, 1, 1), 3).degree() == 6);
    CHECK(pow(divisor(Variety::Phi, 1, 1), 4).degree() == 6);
}

TEST_CASE("variety constants") {
    CHECK(dimension(Variety::F) == 3);
    CHECK(dimension(Variety::Phi) == 4);
    CHECK(canonical_twist(Variety::F) == -2);
    CHECK(canonical_twist(Variety::Phi) == -3);
}
