#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "persym/exp_poly.hpp"
#include "persym/rank_distribution.hpp"

namespace persym {

enum class FamilyId { General, N2, N3, N6 };

std::string_view to_string(FamilyId id) noexcept;
FamilyId family_from_string(std::string_view s);

struct ClosedForm {
    ExpPoly poly;
    /// Smallest k for which the form is stated to hold.
    int k_min = 1;
};

/// Closed forms Gamma_i(x), x = 2^k, for one block count n.
struct ClosedFormFamily {
    FamilyId id = FamilyId::General;
    int n = 0;
    std::map<int, ClosedForm> entries;

    int max_rank() const { return entries.empty() ? -1 : entries.rbegin()->first; }
    const ClosedForm& at(int i) const;
};

/// General-n forms for ranks 0..7, with the rational prefactors applied at N = 2^n.
ExpPoly gamma_general_poly(int n, int i);
int general_k_min(int i);
ClosedFormFamily general_family(int n);

/// Stored tables: n2 and n3 from the low-n literature, n6 for ranks 0..12.
const ClosedFormFamily& family(FamilyId id);

/// Exact Gamma_i for n blocks. Throws BelowValidityRange when k < k_min(i) unless
/// `allow_below_validity`, and NonIntegralResult if the value is fractional.
mpz_class gamma_general(int n, int i, int k, bool allow_below_validity = false);
mpz_class gamma_table(FamilyId id, int i, int k, bool allow_below_validity = false);
mpz_class evaluate_form(const ClosedForm& form, int k, bool allow_below_validity,
                        std::string_view label);

/// 2^n prod_{j=1}^{n} (2^k - 2^{2n-j}), returned literally (callers interpret k < 2n).
mpz_class full_rank_count(int n, int k);
ExpPoly full_rank_poly(int n);

/// sum_i Gamma_i 2^{(2n-i)s}; rejects sampled distributions.
mpz_class moment_lhs(const RankDistribution& d, int s);
/// Closed-form moment scaled by 2^{2ns}, s in {0, 1, 2}.
mpz_class moment_rhs(int n, int k, int s);
/// The same right-hand side as a polynomial in x; needs n >= 2 so every power is non-negative.
ExpPoly moment_rhs_poly(int n, int s);
/// The n = 6 moment targets as literally stated: 64x^6, 64x^6 + 262080x^5, ...
const std::array<ExpPoly, 3>& sextuple_moment_targets();

/// Solutions of the q = 1 bilinear system: 2^{2n} + 2^k - 1.
mpz_class q1_solution_count(int n, int k);

/// Throws NonIntegralResult naming `what` unless q is an integer.
mpz_class require_integer(const mpq_class& q, std::string_view what);

struct TableRow {
    std::string family;
    int n = 0;
    int i = 0;
    int k = 0;
    mpz_class value;
    bool in_range = false;
};

/// Every rank 0..min(max_rank, k) for each k in [k_lo, k_hi]. Values below a form's
/// threshold are still evaluated and flagged in_range = false.
std::vector<TableRow> emit_table(const ClosedFormFamily& fam, int k_lo, int k_hi);

struct ExampleItem {
    int i = 0;
    mpz_class published;
    mpz_class computed;
    bool in_range = false;
    bool matches = false;
};

/// The published n = 6, k = 6 column (ranks 0..6) against the stored n6 table.
std::vector<ExampleItem> check_published_example();

struct FormComparison {
    int i = 0;
    ExpPoly general;
    ExpPoly table;
    bool equal = false;
};

/// General forms at n = 6 against the n6 table, ranks 0..7.
std::vector<FormComparison> compare_general_with_sextuple();

}  // namespace persym
