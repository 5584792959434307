#include "persym/polysys.hpp"

#include <bit>
#include <stdexcept>
#include <string>
#include <vector>

#include "persym/bigint.hpp"
#include "persym/closed_form.hpp"
#include "persym/errors.hpp"

namespace persym {

namespace {

constexpr int kExpSumMaxBlocks = 6;
constexpr int kExpSumMaxK = 10;
constexpr int kSolutionBitBudget = 34;

}  // namespace

int Poly2::degree() const noexcept {
    return bits_ == 0 ? -1 : 63 - std::countl_zero(bits_);
}

Poly2 clmul(Poly2 a, Poly2 b) {
    if (!a.is_zero() && !b.is_zero() && a.degree() + b.degree() > 63) {
        throw std::overflow_error("carry-less product exceeds degree 63");
    }
    Word out = 0;
    Word rest = b.bits();
    while (rest != 0) {
        out ^= a.bits() << std::countr_zero(rest);
        rest &= rest - 1;
    }
    return Poly2(out);
}

int char_E(Word seq, int k, Poly2 y, Poly2 u) {
    if (k < 1 || k > 62) {
        throw std::invalid_argument("k must lie in [1, 62]");
    }
    if (seq & ~gf2::low_mask(static_cast<std::size_t>(k) + 1)) {
        throw std::invalid_argument("sequence has coefficients beyond alpha_{k+1}");
    }
    if (y.degree() > k - 1) {
        throw std::invalid_argument("deg Y = " + std::to_string(y.degree()) + " exceeds k-1 = " +
                                    std::to_string(k - 1));
    }
    if (u.degree() > 1) {
        throw std::invalid_argument("deg U = " + std::to_string(u.degree()) + " exceeds 1");
    }
    // alpha_i T^{-i} times p_m T^m lands on T^{-1} when m = i-1: bit i-1 on both sides.
    const Word product = clmul(y, u).bits();
    return (std::popcount(seq & product) & 1) ? -1 : 1;
}

mpz_class exponential_sum_direct(const SequenceTuple& t) {
    if (t.n < 1 || t.n > kExpSumMaxBlocks || t.k < 1 || t.k > kExpSumMaxK) {
        throw std::invalid_argument("direct exponential sum is capped at n <= " +
                                    std::to_string(kExpSumMaxBlocks) + ", k <= " +
                                    std::to_string(kExpSumMaxK));
    }
    if (static_cast<int>(t.seqs.size()) != t.n) {
        throw std::invalid_argument("tuple size does not match n");
    }
    std::int64_t total = 0;
    const Word y_end = Word{1} << t.k;
    for (Word y = 0; y < y_end; ++y) {
        std::int64_t product = 1;
        for (const Word seq : t.seqs) {
            std::int64_t inner = 0;
            for (Word u = 0; u < 4; ++u) {
                inner += char_E(seq, t.k, Poly2(y), Poly2(u));
            }
            product *= inner;
            if (product == 0) {
                break;
            }
        }
        total += product;
    }
    return mpz_class(static_cast<long>(total));
}

mpz_class count_solutions_brute(int q, int n, int k) {
    if (q < 1 || n < 1 || k < 1) {
        throw std::invalid_argument("q, n and k must be >= 1");
    }
    const long bits = static_cast<long>(q) * k + 2L * q * n;
    if (bits > kSolutionBitBudget) {
        throw SearchSpaceTooLarge("solution count needs qk + 2qn = " + std::to_string(bits) +
                                      " bits, budget is " + std::to_string(kSolutionBitBudget),
                                  static_cast<int>(bits));
    }
    const int y_bits = q * k;
    const Word y_mask = gf2::low_mask(static_cast<std::size_t>(k));
    const std::uint64_t u_combos = std::uint64_t{1} << (2 * q);

    std::vector<Word> gens(static_cast<std::size_t>(2 * q));
    std::uint64_t total = 0;
    for (std::uint64_t ys = 0; ys < (std::uint64_t{1} << y_bits); ++ys) {
        // U^(i) = u0 + u1 T contributes u0*Y_i + u1*(T Y_i).
        for (int i = 0; i < q; ++i) {
            const Word y = (ys >> (i * k)) & y_mask;
            gens[static_cast<std::size_t>(2 * i)] = y;
            gens[static_cast<std::size_t>(2 * i + 1)] = y << 1;
        }
        // Gray-code walk over every choice of (U^(1), ..., U^(q)) for one equation.
        std::uint64_t zeros = 1;
        Word acc = 0;
        for (std::uint64_t g = 1; g < u_combos; ++g) {
            acc ^= gens[static_cast<std::size_t>(std::countr_zero(g))];
            zeros += acc == 0;
        }
        std::uint64_t term = 1;
        for (int j = 0; j < n; ++j) {
            term *= zeros;
        }
        total += term;
    }
    return from_u64(total);
}

mpz_class r_from_distribution(int q, const RankDistribution& d) {
    if (q < 1) {
        throw std::invalid_argument("q must be >= 1");
    }
    if (d.method != Method::Exact) {
        throw std::invalid_argument("solution counts need an exact distribution");
    }
    const long n = d.n;
    const long k = d.k;
    const long base = static_cast<long>(q) * (2 * n + k) - (k + 1) * n;
    mpq_class sum = 0;
    for (std::size_t i = 0; i < d.counts.size(); ++i) {
        sum += mpq_class(d.counts[i]) * pow2q(base - static_cast<long>(i) * q);
    }
    return require_integer(sum, "R_{q,n}^(k) from the rank distribution");
}

}  // namespace persym
