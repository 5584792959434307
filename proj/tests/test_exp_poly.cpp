#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "persym/bigint.hpp"
#include "persym/exp_poly.hpp"

using persym::ExpPoly;

TEST(ExpPoly, ZeroAndConstants) {
    ExpPoly z;
    EXPECT_TRUE(z.is_zero());
    EXPECT_EQ(z.degree(), -1);
    EXPECT_EQ(z.to_string(), "0");
    EXPECT_TRUE(ExpPoly(0L).is_zero());
    EXPECT_EQ(ExpPoly(5L).degree(), 0);
    EXPECT_EQ(ExpPoly(5L).to_string(), "5");
}

TEST(ExpPoly, Arithmetic) {
    const ExpPoly x = ExpPoly::x();
    const ExpPoly p = x * x - ExpPoly(3L) * x + ExpPoly(2L);
    EXPECT_EQ(p, (x - ExpPoly(1L)) * (x - ExpPoly(2L)));
    EXPECT_EQ(p.degree(), 2);
    EXPECT_EQ(p.coefficient(1), -3);
    EXPECT_EQ(p.coefficient(7), 0);
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_EQ(-(-p), p);
    EXPECT_EQ(p.to_string(), "x^2 - 3*x + 2");
}

TEST(ExpPoly, RationalCoefficients) {
    const ExpPoly half(mpq_class(1, 2));
    const ExpPoly p = half * ExpPoly::x() + half;
    EXPECT_EQ(p.to_string(), "1/2*x + 1/2");
    EXPECT_EQ(p.evaluate(3), 2);
    EXPECT_EQ((p + p), ExpPoly::x() + ExpPoly(1L));
}

TEST(ExpPoly, PowerRoots) {
    // 3 (x - 2)(x - 8)
    const std::vector<int> roots = {1, 3};
    const ExpPoly p = ExpPoly::from_power_roots(3, roots);
    EXPECT_EQ(p, ExpPoly::monomial(3, 2) - ExpPoly::monomial(30, 1) + ExpPoly(48L));
    EXPECT_EQ(p.at_k(1), 0);
    EXPECT_EQ(p.at_k(3), 0);
    EXPECT_EQ(p.at_k(2), 3 * 2 * -4);
}

TEST(ExpPoly, EvaluateMatchesTermSum) {
    std::mt19937_64 gen(1);
    for (int trial = 0; trial < 200; ++trial) {
        ExpPoly p;
        for (int d = 0; d < 6; ++d) {
            p += ExpPoly::monomial(mpq_class(static_cast<long>(gen() % 2001) - 1000, 1 + gen() % 7), d);
        }
        const int k = static_cast<int>(gen() % 20);
        mpq_class direct = 0;
        for (const auto& [power, c] : p.coeffs()) {
            direct += c * persym::pow2q(static_cast<long>(power) * k);
        }
        EXPECT_EQ(p.at_k(k), direct);
    }
}

TEST(ExpPoly, MultiplicationIsCommutativeAndDistributive) {
    std::mt19937_64 gen(2);
    const auto rnd = [&] {
        ExpPoly p;
        for (int d = 0; d < 4; ++d) {
            p += ExpPoly::monomial(static_cast<long>(gen() % 21) - 10, d);
        }
        return p;
    };
    for (int trial = 0; trial < 100; ++trial) {
        const ExpPoly a = rnd();
        const ExpPoly b = rnd();
        const ExpPoly c = rnd();
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a * b).at_k(3), a.at_k(3) * b.at_k(3));
    }
}

TEST(ExpPoly, MonomialZeroIsNotStored) {
    EXPECT_TRUE(ExpPoly::monomial(0, 4).is_zero());
    EXPECT_TRUE(ExpPoly::monomial(0, 4).coeffs().empty());
}
