#include "persym/derivation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "persym/bigint.hpp"
#include "persym/closed_form.hpp"
#include "persym/errors.hpp"

namespace persym {

namespace {

constexpr int kBlocks = 6;
constexpr int kTopRank = 2 * kBlocks;
constexpr int kFirstFactoredRank = 7;

mpq_class weight(int s, int rank) {
    return mpq_class(pow2(static_cast<unsigned long>((kTopRank - rank) * s)));
}

ExpPoly root_product(const FactoredRank& f) {
    return ExpPoly::from_power_roots(1, f.root_exponents);
}

const FactoredRank& factored_for(const AnsatzUnknowns& ansatz, int rank) {
    for (const auto& f : ansatz.factored) {
        if (f.rank == rank) {
            return f;
        }
    }
    throw std::out_of_range("rank " + std::to_string(rank) + " has no factored shape");
}

int max_power(const SystemInputs& inputs) {
    int deg = 0;
    for (const auto& t : inputs.targets) {
        deg = std::max(deg, t.degree());
    }
    for (const auto& [rank, p] : inputs.known) {
        deg = std::max(deg, p.degree());
    }
    for (const auto& f : inputs.ansatz.factored) {
        deg = std::max(deg, static_cast<int>(f.root_exponents.size()) + f.residual_degree);
    }
    return deg;
}

}  // namespace

std::string UnknownSlot::name() const {
    return "Gamma" + std::to_string(rank) + ".residual[x^" + std::to_string(power) + "]";
}

std::size_t AnsatzUnknowns::total_slots() const {
    std::size_t n = 0;
    for (const auto& f : factored) {
        n += static_cast<std::size_t>(f.residual_degree) + 1;
    }
    return n;
}

AnsatzUnknowns sextuple_ansatz() {
    // Residual degrees keep each Gamma_i at its ansatz degree in x.
    const std::map<int, int> residual_degree = {{7, 2}, {8, 2}, {9, 1}, {10, 1}, {11, 0}, {12, 0}};
    AnsatzUnknowns a;
    for (int rank = kFirstFactoredRank; rank <= kTopRank; ++rank) {
        FactoredRank f;
        f.rank = rank;
        for (int e = kBlocks; e <= rank - 1; ++e) {
            f.root_exponents.push_back(e);
        }
        f.residual_degree = residual_degree.at(rank);
        a.factored.push_back(std::move(f));
    }
    for (int rank = 0; rank <= kFirstFactoredRank; ++rank) {
        a.known_ranks.push_back(rank);
    }
    a.known_ranks.push_back(kTopRank);
    for (const auto& f : a.factored) {
        if (std::find(a.known_ranks.begin(), a.known_ranks.end(), f.rank) != a.known_ranks.end()) {
            continue;
        }
        for (int p = f.residual_degree; p >= 0; --p) {
            a.unknowns.push_back({f.rank, p});
        }
    }
    return a;
}

SystemInputs SystemInputs::sextuple() {
    SystemInputs in;
    for (int rank : in.ansatz.known_ranks) {
        in.known[rank] = rank == kTopRank ? full_rank_poly(kBlocks) : gamma_general_poly(kBlocks, rank);
    }
    in.targets = sextuple_moment_targets();
    return in;
}

LinearSystemQ assemble_system(const SystemInputs& inputs) {
    LinearSystemQ sys;
    sys.unknowns = inputs.ansatz.unknowns;

    std::vector<ExpPoly> basis;
    for (const auto& u : sys.unknowns) {
        basis.push_back(root_product(factored_for(inputs.ansatz, u.rank)) *
                        ExpPoly::monomial(1, u.power));
    }

    const int top = max_power(inputs);
    for (int s = 0; s < 3; ++s) {
        ExpPoly rest = inputs.targets[static_cast<std::size_t>(s)];
        for (const auto& [rank, p] : inputs.known) {
            rest -= ExpPoly(weight(s, rank)) * p;
        }
        for (int power = top; power >= 0; --power) {
            std::vector<mpq_class> row;
            row.reserve(basis.size());
            for (std::size_t u = 0; u < basis.size(); ++u) {
                row.push_back(weight(s, sys.unknowns[u].rank) * basis[u].coefficient(power));
            }
            sys.a.push_back(std::move(row));
            sys.b.push_back(rest.coefficient(power));
            sys.row_labels.push_back("s=" + std::to_string(s) + " x^" + std::to_string(power));
        }
    }
    return sys;
}

const mpq_class& Assignment::value(int rank, int power) const {
    for (std::size_t i = 0; i < unknowns.size(); ++i) {
        if (unknowns[i].rank == rank && unknowns[i].power == power) {
            return values[i];
        }
    }
    throw std::out_of_range("no unknown for rank " + std::to_string(rank) + " power " +
                            std::to_string(power));
}

Assignment solve_exact(const LinearSystemQ& sys) {
    const std::size_t m = sys.rows();
    const std::size_t c = sys.cols();
    if (sys.b.size() != m) {
        throw std::invalid_argument("right-hand side length does not match row count");
    }

    // Clear denominators row by row; column c holds the right-hand side.
    std::vector<std::vector<mpz_class>> mat(m, std::vector<mpz_class>(c + 1));
    std::vector<std::size_t> origin(m);
    std::iota(origin.begin(), origin.end(), std::size_t{0});
    for (std::size_t i = 0; i < m; ++i) {
        if (sys.a[i].size() != c) {
            throw std::invalid_argument("row " + std::to_string(i) + " has the wrong width");
        }
        mpz_class l = sys.b[i].get_den();
        for (const auto& q : sys.a[i]) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
        }
        for (std::size_t j = 0; j < c; ++j) {
            mat[i][j] = sys.a[i][j].get_num() * (l / sys.a[i][j].get_den());
        }
        mat[i][c] = sys.b[i].get_num() * (l / sys.b[i].get_den());
    }

    std::vector<std::size_t> pivot_cols;
    std::vector<std::size_t> free_cols;
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t col = 0; col < c; ++col) {
        std::size_t p = r;
        while (p < m && mat[p][col] == 0) {
            ++p;
        }
        if (p == m) {
            free_cols.push_back(col);
            continue;
        }
        std::swap(mat[p], mat[r]);
        std::swap(origin[p], origin[r]);
        for (std::size_t i = r + 1; i < m; ++i) {
            for (std::size_t j = col + 1; j <= c; ++j) {
                mpz_class t = mat[r][col] * mat[i][j] - mat[i][col] * mat[r][j];
                mpz_divexact(mat[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            mat[i][col] = 0;
        }
        prev = mat[r][col];
        pivot_cols.push_back(col);
        ++r;
    }

    std::vector<std::size_t> bad_rows;
    for (std::size_t i = r; i < m; ++i) {
        if (mat[i][c] != 0) {
            bad_rows.push_back(origin[i]);
        }
    }
    if (!bad_rows.empty()) {
        std::sort(bad_rows.begin(), bad_rows.end());
        std::string list;
        for (auto i : bad_rows) {
            list += (list.empty() ? "" : ", ") + std::to_string(i);
        }
        throw InconsistentSystem("inconsistent system: equations " + list + " cannot be satisfied",
                                 bad_rows);
    }
    if (!free_cols.empty()) {
        std::string list;
        for (auto j : free_cols) {
            list += (list.empty() ? "" : ", ") + sys.unknowns[j].name();
        }
        throw UnderdeterminedSystem("underdetermined system: no pivot for " + list, free_cols);
    }

    std::vector<mpq_class> x(c);
    for (std::size_t step = r; step-- > 0;) {
        const std::size_t col = pivot_cols[step];
        mpq_class acc(mat[step][c]);
        for (std::size_t j = col + 1; j < c; ++j) {
            acc -= mpq_class(mat[step][j]) * x[j];
        }
        x[col] = acc / mpq_class(mat[step][col]);
        x[col].canonicalize();
    }

    // Every retained equation must balance, not only the pivot rows.
    for (std::size_t i = 0; i < m; ++i) {
        mpq_class lhs = 0;
        for (std::size_t j = 0; j < c; ++j) {
            lhs += sys.a[i][j] * x[j];
        }
        if (lhs != sys.b[i]) {
            throw InconsistentSystem("solution fails equation " + std::to_string(i), {i});
        }
    }
    return Assignment{sys.unknowns, std::move(x)};
}

std::map<int, ExpPoly> expand_family(const Assignment& assignment, const SystemInputs& inputs) {
    std::map<int, ExpPoly> fam = inputs.known;
    for (const auto& f : inputs.ansatz.factored) {
        if (fam.count(f.rank) != 0) {
            continue;
        }
        ExpPoly residual;
        for (int p = 0; p <= f.residual_degree; ++p) {
            residual += ExpPoly::monomial(assignment.value(f.rank, p), p);
        }
        fam[f.rank] = root_product(f) * residual;
    }
    return fam;
}

ComparisonReport compare_families(const std::map<int, ExpPoly>& left,
                                  const std::map<int, ExpPoly>& right) {
    ComparisonReport report;
    std::vector<int> ranks;
    for (const auto& [rank, p] : left) {
        ranks.push_back(rank);
    }
    for (const auto& [rank, p] : right) {
        ranks.push_back(rank);
    }
    std::sort(ranks.begin(), ranks.end());
    ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());

    const ExpPoly zero;
    for (int rank : ranks) {
        const auto li = left.find(rank);
        const auto ri = right.find(rank);
        const ExpPoly& l = li == left.end() ? zero : li->second;
        const ExpPoly& r = ri == right.end() ? zero : ri->second;
        const int top = std::max(l.degree(), r.degree());
        for (int p = top; p >= 0; --p) {
            if (l.coefficient(p) != r.coefficient(p)) {
                report.mismatches.push_back({rank, p, l.coefficient(p), r.coefficient(p)});
            }
        }
    }
    return report;
}

std::map<int, ExpPoly> stored_sextuple_family() {
    std::map<int, ExpPoly> fam;
    for (const auto& [rank, form] : family(FamilyId::N6).entries) {
        fam[rank] = form.poly;
    }
    return fam;
}

ComparisonReport expand_and_compare(const Assignment& assignment) {
    return compare_families(expand_family(assignment), stored_sextuple_family());
}

std::array<ExpPoly, 3> moment_residuals(const std::map<int, ExpPoly>& fam) {
    std::array<ExpPoly, 3> out;
    const auto& targets = sextuple_moment_targets();
    for (int s = 0; s < 3; ++s) {
        ExpPoly sum;
        for (const auto& [rank, p] : fam) {
            sum += ExpPoly(weight(s, rank)) * p;
        }
        out[static_cast<std::size_t>(s)] = sum - targets[static_cast<std::size_t>(s)];
    }
    return out;
}

std::vector<VanishingPoint> vanishing_values(const std::map<int, ExpPoly>& fam) {
    std::vector<VanishingPoint> out;
    for (int rank = kFirstFactoredRank; rank <= kTopRank; ++rank) {
        const auto it = fam.find(rank);
        if (it == fam.end()) {
            continue;
        }
        for (int k = kBlocks; k <= rank - 1; ++k) {
            out.push_back({rank, k, it->second.at_k(k)});
        }
    }
    return out;
}

}  // namespace persym
