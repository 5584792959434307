#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "persym/exp_poly.hpp"

namespace persym {

/// Gamma_i(x) = prod_{e in root_exponents} (x - 2^e) * residual(x), residual of the given degree.
struct FactoredRank {
    int rank = 0;
    std::vector<int> root_exponents;
    int residual_degree = 0;
};

/// One unknown: the x^power coefficient of a rank's residual polynomial.
struct UnknownSlot {
    int rank = 0;
    int power = 0;

    std::string name() const;
    friend bool operator==(const UnknownSlot&, const UnknownSlot&) = default;
};

/// Factored shapes of ranks 7..12 for six blocks, and which residual coefficients stay unknown.
struct AnsatzUnknowns {
    std::vector<FactoredRank> factored;
    std::vector<int> known_ranks;
    std::vector<UnknownSlot> unknowns;

    /// Residual coefficients before any rank is fixed from known forms.
    std::size_t total_slots() const;
};

/// Ranks 0..7 known from the general-n forms at n = 6 and rank 12 from the full-rank
/// product; the residuals of ranks 8..11 are unknown.
AnsatzUnknowns sextuple_ansatz();

struct LinearSystemQ {
    std::vector<std::vector<mpq_class>> a;
    std::vector<mpq_class> b;
    std::vector<std::string> row_labels;
    std::vector<UnknownSlot> unknowns;

    std::size_t rows() const noexcept { return a.size(); }
    std::size_t cols() const noexcept { return unknowns.size(); }
};

/// What the system is built from; defaults reproduce the six-block derivation.
struct SystemInputs {
    AnsatzUnknowns ansatz = sextuple_ansatz();
    std::map<int, ExpPoly> known;
    std::array<ExpPoly, 3> targets;

    static SystemInputs sextuple();
};

/// One equation per (moment order s, power of x): sum_i 2^{(12-i)s} Gamma_i(x) = target_s(x).
LinearSystemQ assemble_system(const SystemInputs& inputs = SystemInputs::sextuple());

struct Assignment {
    std::vector<UnknownSlot> unknowns;
    std::vector<mpq_class> values;

    const mpq_class& value(int rank, int power) const;
};

/// Fraction-free (Bareiss) elimination over the integers, rational back-substitution.
/// Every equation is kept; throws InconsistentSystem or UnderdeterminedSystem.
Assignment solve_exact(const LinearSystemQ& sys);

/// Gamma_0..Gamma_12 as plain polynomials: known forms plus the solved factored ranks.
std::map<int, ExpPoly> expand_family(const Assignment& assignment,
                                     const SystemInputs& inputs = SystemInputs::sextuple());

struct CoefficientDiff {
    int rank = 0;
    int power = 0;
    mpq_class left;
    mpq_class right;
};

struct ComparisonReport {
    std::vector<CoefficientDiff> mismatches;
    bool empty() const noexcept { return mismatches.empty(); }
};

ComparisonReport compare_families(const std::map<int, ExpPoly>& left,
                                  const std::map<int, ExpPoly>& right);

/// Expanded derived family against the stored n6 table.
ComparisonReport expand_and_compare(const Assignment& assignment);

/// The stored n6 forms as a rank -> polynomial map.
std::map<int, ExpPoly> stored_sextuple_family();

/// sum_i 2^{(12-i)s} Gamma_i(x) - target_s(x) for s = 0, 1, 2; all zero for a consistent family.
std::array<ExpPoly, 3> moment_residuals(const std::map<int, ExpPoly>& fam);

struct VanishingPoint {
    int rank = 0;
    int k = 0;
    mpq_class value;
};

/// Gamma_i evaluated at k = 6..i-1 for ranks 7..12; each value should be 0.
std::vector<VanishingPoint> vanishing_values(const std::map<int, ExpPoly>& fam);

}  // namespace persym
