#include <gtest/gtest.h>

#include <vector>

#include "persym/bigint.hpp"
#include "persym/closed_form.hpp"
#include "persym/enumeration.hpp"
#include "persym/errors.hpp"

using namespace persym;

namespace {

// Frozen distributions (exhaustive sweeps cross-checked with a subspace-count recursion).
const std::vector<const char*> kN6K5 = {"1", "189", "31122", "4280976", "507030048", "68208134400"};
const std::vector<const char*> kN6K6 = {"1",         "189",         "35154",        "5155920",
                                        "645271200", "65673296640", "4331722752000"};

}  // namespace

TEST(ClosedForm, SpotValues) {
    EXPECT_EQ(gamma_table(FamilyId::N6, 1, 5), 189);
    EXPECT_EQ(gamma_table(FamilyId::N3, 6, 6), 688128);
    EXPECT_EQ(gamma_table(FamilyId::N2, 4, 4), 384);
    EXPECT_EQ(gamma_table(FamilyId::N6, 4, 6), mpz_class("645271200"));
    EXPECT_EQ(gamma_table(FamilyId::N6, 2, 6), 35154);
    EXPECT_EQ(gamma_general(6, 2, 6), 35154);
    EXPECT_EQ(gamma_general(6, 1, 2), 189);
    EXPECT_EQ(gamma_general(1, 0, 1), 1);
}

TEST(ClosedForm, BelowValidityRange) {
    EXPECT_THROW(gamma_table(FamilyId::N6, 7, 6), BelowValidityRange);
    EXPECT_THROW(gamma_general(6, 3, 3), BelowValidityRange);
    EXPECT_NO_THROW(gamma_general(6, 3, 3, true));
    EXPECT_THROW(gamma_general(6, 8, 12), std::out_of_range);
    EXPECT_THROW(family(FamilyId::N6).at(13), std::out_of_range);
}

TEST(ClosedForm, FamilyNames) {
    for (auto id : {FamilyId::General, FamilyId::N2, FamilyId::N3, FamilyId::N6}) {
        EXPECT_EQ(family_from_string(to_string(id)), id);
    }
    EXPECT_THROW(family_from_string("n4"), std::invalid_argument);
    EXPECT_THROW(family(FamilyId::General), std::invalid_argument);
}

TEST(ClosedForm, FullRank) {
    EXPECT_EQ(full_rank_count(2, 4), 384);
    EXPECT_EQ(full_rank_count(3, 6), 688128);
    EXPECT_EQ(full_rank_count(1, 2), 4);
    for (int k = 6; k < 12; ++k) {
        EXPECT_EQ(full_rank_count(6, k), 0) << k;
    }
    EXPECT_EQ(full_rank_poly(6), family(FamilyId::N6).at(12).poly);
    for (int k = 12; k < 20; ++k) {
        EXPECT_EQ(full_rank_poly(6).at_k(k), full_rank_count(6, k));
    }
}

TEST(ClosedForm, MomentsAgainstEnumeration) {
    for (int n = 1; n <= 3; ++n) {
        for (int k = 1; k <= 6; ++k) {
            if (n * (k + 1) > 21) {
                continue;
            }
            const auto d = enumerate_exact(n, k, 1);
            for (int s = 0; s <= 2; ++s) {
                EXPECT_EQ(moment_lhs(d, s), moment_rhs(n, k, s)) << n << "," << k << "," << s;
            }
        }
    }
    EXPECT_EQ(moment_lhs(enumerate_exact(1, 2, 1), 1), 14);
    EXPECT_THROW(moment_lhs(enumerate_sampled(1, 2, 10, 1), 0), std::invalid_argument);
    EXPECT_THROW(moment_rhs(2, 2, 3), std::invalid_argument);
}

TEST(ClosedForm, MomentPolyMatchesScalar) {
    for (int n = 2; n <= 6; ++n) {
        for (int s = 0; s <= 2; ++s) {
            for (int k = 1; k <= 14; ++k) {
                EXPECT_EQ(moment_rhs_poly(n, s).at_k(k), moment_rhs(n, k, s));
            }
        }
    }
    for (int s = 0; s <= 2; ++s) {
        EXPECT_EQ(moment_rhs_poly(6, s), sextuple_moment_targets()[static_cast<std::size_t>(s)]);
    }
}

TEST(ClosedForm, Q1SolutionCount) {
    EXPECT_EQ(q1_solution_count(2, 3), 23);
    EXPECT_EQ(q1_solution_count(1, 1), 5);
    EXPECT_EQ(q1_solution_count(6, 1), 4097);
}

TEST(ClosedForm, IntegralOnValidRange) {
    for (int n = 1; n <= 8; ++n) {
        for (int i = 0; i <= 7; ++i) {
            for (int k = general_k_min(i); k <= 16; ++k) {
                EXPECT_NO_THROW(gamma_general(n, i, k)) << n << "," << i << "," << k;
            }
        }
    }
    for (auto id : {FamilyId::N2, FamilyId::N3, FamilyId::N6}) {
        for (const auto& [i, form] : family(id).entries) {
            for (int k = form.k_min; k <= 16; ++k) {
                EXPECT_GE(gamma_table(id, i, k), 0);
            }
        }
    }
}

TEST(ClosedForm, GeneralFormsMatchSmallTables) {
    for (auto id : {FamilyId::N2, FamilyId::N3}) {
        const auto& fam = family(id);
        for (const auto& [i, form] : fam.entries) {
            EXPECT_EQ(gamma_general_poly(fam.n, i), form.poly) << to_string(id) << " " << i;
        }
    }
    // Above 2n the general forms vanish identically.
    EXPECT_TRUE(gamma_general_poly(1, 3).is_zero());
    EXPECT_TRUE(gamma_general_poly(2, 5).is_zero());
    EXPECT_TRUE(gamma_general_poly(3, 7).is_zero());
}

TEST(ClosedForm, GeneralFormsMatchEnumeration) {
    for (int n = 1; n <= 3; ++n) {
        for (int k = 1; k <= 6; ++k) {
            if (n * (k + 1) > 21) {
                continue;
            }
            const auto d = enumerate_exact(n, k, 1);
            for (int i = 0; i < static_cast<int>(d.counts.size()) && i <= 7; ++i) {
                if (k >= general_k_min(i)) {
                    EXPECT_EQ(gamma_general(n, i, k), d.count(i)) << n << "," << k << "," << i;
                }
            }
        }
    }
}

TEST(ClosedForm, SextupleTableMatchesFrozenCounts) {
    for (int i = 0; i < static_cast<int>(kN6K5.size()); ++i) {
        if (5 >= family(FamilyId::N6).at(i).k_min) {
            EXPECT_EQ(gamma_table(FamilyId::N6, i, 5), mpz_class(kN6K5[i])) << i;
        }
    }
    for (int i = 0; i < static_cast<int>(kN6K6.size()); ++i) {
        EXPECT_EQ(gamma_table(FamilyId::N6, i, 6, true), mpz_class(kN6K6[i])) << i;
    }
}

TEST(ClosedForm, SextupleSumsToTotal) {
    for (int k = 12; k <= 24; ++k) {
        mpz_class sum = 0;
        for (int i = 0; i <= 12; ++i) {
            sum += gamma_table(FamilyId::N6, i, k);
        }
        EXPECT_EQ(sum, pow2(static_cast<unsigned long>(6 * (k + 1)))) << k;
    }
}

TEST(ClosedForm, CrossFormAgreement) {
    for (const auto& c : compare_general_with_sextuple()) {
        EXPECT_TRUE(c.equal) << "rank " << c.i << ": " << c.general.to_string() << " vs "
                             << c.table.to_string();
    }
}

TEST(ClosedForm, PublishedExample) {
    const auto items = check_published_example();
    ASSERT_EQ(items.size(), 7u);
    for (const auto& it : items) {
        EXPECT_TRUE(it.matches) << it.i;
    }
    EXPECT_EQ(items[5].published, mpz_class("65673296640"));
    EXPECT_EQ(items[6].published, mpz_class("4331722752000"));
}

TEST(ClosedForm, EmitTableFlagsRange) {
    const auto rows = emit_table(family(FamilyId::N6), 6, 7);
    ASSERT_EQ(rows.size(), 7u + 8u);
    EXPECT_FALSE(rows[6].in_range);
    EXPECT_TRUE(rows[5].in_range);
    EXPECT_EQ(rows[14].i, 7);
    EXPECT_EQ(rows[14].k, 7);
    EXPECT_THROW(emit_table(family(FamilyId::N2), 3, 2), std::invalid_argument);
}

TEST(ClosedForm, RequireInteger) {
    EXPECT_EQ(require_integer(mpq_class(6, 3), "x"), 2);
    EXPECT_THROW(require_integer(mpq_class(1, 2), "x"), NonIntegralResult);
}
