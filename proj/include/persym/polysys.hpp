#pragma once

#include <cstdint>

#include <gmpxx.h>

#include "persym/persymmetric.hpp"
#include "persym/rank_distribution.hpp"

namespace persym {

/// Polynomial over F_2 in T, coefficient of T^i at bit i.
class Poly2 {
public:
    constexpr Poly2() = default;
    constexpr explicit Poly2(Word bits) : bits_(bits) {}

    constexpr Word bits() const noexcept { return bits_; }
    /// -1 for the zero polynomial.
    int degree() const noexcept;
    bool is_zero() const noexcept { return bits_ == 0; }

    friend constexpr bool operator==(Poly2, Poly2) = default;

private:
    Word bits_ = 0;
};

/// Carry-less product; throws std::overflow_error if the degree would exceed 63.
Poly2 clmul(Poly2 a, Poly2 b);

/// E(t * y * u) for t = sum_{i=1}^{k+1} alpha_i T^{-i} given as a sequence word.
/// The T^{-1} coefficient of t*y*u is the parity of seq & (y*u).
/// Requires deg y <= k-1 and deg u <= 1.
int char_E(Word seq, int k, Poly2 y, Poly2 u);

/// Direct character sum over deg Y <= k-1 and deg U_j <= 1 (cost 2^k 4^n). Capped at n <= 6, k <= 10.
mpz_class exponential_sum_direct(const SequenceTuple& t);

/// Number of tuples (Y_i, U_j^(i)) with sum_i Y_i U_j^(i) = 0 for every j,
/// deg Y_i <= k-1, deg U_j^(i) <= 1. Requires qk + 2qn <= 34.
///
/// For fixed Y the n equations are identical and independent, so the count is
/// sum_Y c(Y)^n, where c(Y) is found by walking all 4^q choices of one U column.
mpz_class count_solutions_brute(int q, int n, int k);

/// 2^{q(2n+k)-(k+1)n} sum_i Gamma_i 2^{-iq}, evaluated exactly; throws NonIntegralResult
/// if the sum is fractional and rejects sampled distributions.
mpz_class r_from_distribution(int q, const RankDistribution& d);

}  // namespace persym
