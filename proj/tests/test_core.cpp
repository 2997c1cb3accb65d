#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kummer/core.hpp"
#include "kummer/cyclotomic.hpp"
#include "test_util.hpp"

using namespace kummer;
using testutil::random_nonzero;

TEST_CASE("symplectic phase matches the presentation") {
    AlgebraShape shape(4, 1);
    CHECK(symplectic_phase(shape, {1, 0}, {0, 1}) == 1);  // x y = rho y x
    CHECK(symplectic_phase(shape, {0, 1}, {1, 0}) == 3);
    CHECK(symplectic_phase(shape, {1, 0}, {1, 0}) == 0);

    AlgebraShape wide(4, 2);
    // distinct tensor factors commute
    CHECK(symplectic_phase(wide, {1, 0, 0, 0}, {0, 0, 0, 1}) == 0);
}

TEST_CASE("symplectic phase rejects length mismatch") {
    AlgebraShape shape(4, 1);
    CHECK_THROWS_AS(symplectic_phase(shape, {1, 0, 0, 0}, {0, 1}),
                    std::invalid_argument);
}

TEST_CASE("phase antisymmetry and bilinearity") {
    for (int d : {2, 3, 4, 5}) {
        AlgebraShape shape(d, 2);
        for (int trial = 0; trial < 300; ++trial) {
            const auto u = random_nonzero(shape);
            const auto v = random_nonzero(shape);
            const auto w = random_nonzero(shape);
            CHECK((symplectic_phase(shape, u, v) + symplectic_phase(shape, v, u)) %
                      d ==
                  0);
            const auto sum = combine(shape, {{1, u}, {1, w}});
            CHECK(symplectic_phase(shape, sum, v) ==
                  (symplectic_phase(shape, u, v) + symplectic_phase(shape, w, v)) %
                      d);
        }
    }
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(2) == std::vector<long long>{1, 1});
    CHECK(cyclotomic_polynomial(3) == std::vector<long long>{1, 1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<long long>{1, 0, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<long long>{1, 0, -1, 0, 1});
}

TEST_CASE("product over divisors of Phi_e equals x^d - 1 for d <= 30") {
    for (int d = 1; d <= 30; ++d) {
        std::vector<long long> prod{1};
        for (int e = 1; e <= d; ++e) {
            if (d % e != 0) continue;
            const auto phi = cyclotomic_polynomial(e);
            std::vector<long long> next(prod.size() + phi.size() - 1, 0);
            for (size_t i = 0; i < prod.size(); ++i)
                for (size_t j = 0; j < phi.size(); ++j) next[i + j] += prod[i] * phi[j];
            prod = std::move(next);
        }
        std::vector<long long> expect(d + 1, 0);
        expect[0] = -1;
        expect[d] = 1;
        CHECK(prod == expect);
    }
}

TEST_CASE("root powers") {
    const auto i1 = CyclotomicInteger::root_power(4, 1);
    const auto i3 = CyclotomicInteger::root_power(4, 3);
    CHECK((i1 + i3).is_zero());
    CHECK(CyclotomicInteger::root_power(4, 2).coeffs() ==
          std::vector<long long>{-1, 0});

    auto sum = CyclotomicInteger::zero(3);
    for (int k = 0; k < 3; ++k) sum = sum + CyclotomicInteger::root_power(3, k);
    CHECK(sum.is_zero());
}

TEST_CASE("multiplication agrees with root-power addition") {
    std::uniform_int_distribution<int> dist(0, 40);
    for (int d : {2, 3, 4, 5, 6, 8, 12}) {
        for (int trial = 0; trial < 100; ++trial) {
            const int a = dist(testutil::rng()), b = dist(testutil::rng());
            CHECK(CyclotomicInteger::root_power(d, a) *
                      CyclotomicInteger::root_power(d, b) ==
                  CyclotomicInteger::root_power(d, a + b));
        }
    }
}

TEST_CASE("x + (-x) is zero and arithmetic mixes orders loudly") {
    std::uniform_int_distribution<long long> dist(-50, 50);
    for (int d : {3, 4, 7}) {
        for (int trial = 0; trial < 50; ++trial) {
            auto x = CyclotomicInteger::root_power(d, trial) *
                     CyclotomicInteger::from_integer(d, dist(testutil::rng()));
            CHECK((x + (-x)).is_zero());
        }
    }
    CHECK_THROWS_AS(CyclotomicInteger::root_power(3, 1) +
                        CyclotomicInteger::root_power(4, 1),
                    std::invalid_argument);
}

TEST_CASE("product exponent") {
    AlgebraShape shape(4, 1);
    CHECK(product_exponent(shape, {{{1, 0}, 1}, {{3, 0}, 3}}) ==
          ExponentVector{2, 0});
    CHECK(product_exponent(shape, {{{1, 0}, 2}, {{3, 0}, 2}}).is_zero());
    CHECK(product_exponent(shape, {}).is_zero());
}

TEST_CASE("transvections preserve the phase") {
    for (int d : {2, 3, 4}) {
        AlgebraShape shape(d, 2);
        for (int trial = 0; trial < 200; ++trial) {
            const auto u = random_nonzero(shape);
            const auto v = random_nonzero(shape);
            const auto c = random_nonzero(shape);
            CHECK(symplectic_phase(shape, transvect(shape, u, c),
                                   transvect(shape, v, c)) ==
                  symplectic_phase(shape, u, v));
        }
    }
}
