#include "persym/closed_form.hpp"

#include <algorithm>
#include <stdexcept>

#include "persym/bigint.hpp"
#include "persym/errors.hpp"

namespace persym {

namespace {

mpz_class Z(const char* decimal) { return mpz_class(decimal, 10); }

mpq_class Q(long num, long den) {
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

// One x-power slice of a general-n form: prefactor * (sum_m c_m N^m) * x^p, N = 2^n.
struct GeneralSlice {
    int x_power;
    mpq_class prefactor;
    std::vector<mpz_class> n_coeffs;  // highest power of N first
};

using GeneralForm = std::vector<GeneralSlice>;

const std::array<GeneralForm, 8>& general_forms() {
    static const std::array<GeneralForm, 8> forms = [] {
        std::array<GeneralForm, 8> f;
        f[0] = {{0, 1, {1}}};
        f[1] = {{0, 3, {1, -1}}};
        f[2] = {{1, 1, {2, -2}}, {0, 1, {7, -25, 18}}};
        f[3] = {{1, 1, {7, -21, 14}}, {0, 1, {15, -133, 294, -176}}};
        f[4] = {{2, Q(1, 3), {2, -6, 4}},
                {1, Q(1, 6), {105, -783, 1614, -936}},
                {0, Q(1, 6), {186, -3630, 19028, -34464, 18880}}};
        f[5] = {{2, Q(1, 2), {5, -35, 70, -40}},
                {1, Q(1, 4), {155, -2565, 12530, -21960, 11840}},
                {0, 1, {63, -2573, 29150, -123760, 203872, -106752}}};
        f[6] = {{3, Q(1, 21), {1, -7, 14, -8}},
                {2, Q(1, 168), {1085, -16723, 79086, -136472, 73024}},
                {1, Q(1, 168), {13671, -475881, 5026378, -20647816, 33473216, -17389568}},
                {0, Q(1, 168),
                 {21336, -1781640, 41896624, -382091648, Z("1470524160"), Z("-2311493632"),
                  Z("1182924800")}}};
        f[7] = {{3, Q(31, 168), {1, -15, 70, -120, 64}},
                {2, Q(1, 96), {1395, -45229, 462210, -1868680, 3005760, -1555456}},
                {1, Q(1, 48),
                 {8001, -571023, 12524806, -110524920, 418606144, -652818432, 332775424}},
                {0, Q(1, 21),
                 {5355, -904113, 43302294, -817168432, Z("6743660640"), -Z("96649567") * pow2(8),
                  Z("4637778") * pow2(13), -Z("293263") * pow2(16)}}};
        return f;
    }();
    return forms;
}

// Polynomial from coefficients listed highest power first.
ExpPoly dense(std::initializer_list<mpz_class> hi_to_lo, const mpq_class& scale = 1) {
    ExpPoly p;
    int power = static_cast<int>(hi_to_lo.size()) - 1;
    for (const auto& c : hi_to_lo) {
        p += ExpPoly::monomial(scale * c, power--);
    }
    return p;
}

ClosedFormFamily make_n2() {
    ClosedFormFamily f{FamilyId::N2, 2, {}};
    f.entries[0] = {dense({1}), 1};
    f.entries[1] = {dense({9}), 2};
    f.entries[2] = {dense({6, 30}), 3};
    f.entries[3] = {dense({42, -168}), 4};
    f.entries[4] = {dense({4, -48, 128}), 4};
    return f;
}

ClosedFormFamily make_n3() {
    ClosedFormFamily f{FamilyId::N3, 3, {}};
    f.entries[0] = {dense({1}), 1};
    f.entries[1] = {dense({21}), 2};
    f.entries[2] = {dense({14, 266}), 3};
    f.entries[3] = {dense({294, 1344}), 4};
    f.entries[4] = {dense({28, 2604, -22624}), 5};
    f.entries[5] = {dense({420, -10080, 53760}), 6};
    f.entries[6] = {dense({8, -448, 7168, -32768}), 6};
    return f;
}

ClosedFormFamily make_n6() {
    ClosedFormFamily f{FamilyId::N6, 6, {}};
    f.entries[0] = {dense({1}), 1};
    f.entries[1] = {dense({189}), 2};
    f.entries[2] = {dense({126, 27090}), 3};
    f.entries[3] = {dense({27342, 3406032}), 4};
    f.entries[4] = {dense({2604, 4070052, 374121888}), 5};
    f.entries[5] = {dense({585900, 494499600, 123537015 * pow2(8)}), 6};
    f.entries[6] = {dense({11160, 84135240, pow2(8) * 184392495, 29391255 * pow2(15)}), 7};
    f.entries[7] = {dense({2421720, 277589655 * pow2(5), Z("2431729125") * pow2(10),
                           -Z("2996595315") * pow2(16)}),
                    8};
    f.entries[8] = {dense({10416, mpz_class(216944) * 1395, Z("2155757205") * pow2(8),
                           -Z("6999385995") * pow2(14), Z("4767802914") * pow2(20)}),
                    9};
    f.entries[9] = {dense({1968624, mpz_class(15196608) * 1395, -Z("2387571795") * pow2(12),
                           Z("4814516070") * pow2(18), -Z("2760151464") * pow2(24)}),
                    10};
    f.entries[10] = {dense({1, 81685, -79052480, pow2(13) * 2888735, -1239163 * pow2(21),
                            pow2(30) * 82645},
                           2016),
                     11};
    f.entries[11] = {dense({1, -1984, 1269760, -325058560, 31744 * pow2(20), -pow2(40)}, 256032),
                     12};
    f.entries[12] = {dense({1, -63 * pow2(6), 651 * pow2(13), -1395 * pow2(21), 651 * pow2(30),
                            -63 * pow2(40), pow2(51)},
                           64),
                     12};
    return f;
}

void check_s(int s) {
    if (s < 0 || s > 2) {
        throw std::invalid_argument("moment order s must be 0, 1 or 2");
    }
}

void check_nk(int n, int k) {
    if (n < 1 || k < 1) {
        throw std::invalid_argument("n and k must be >= 1");
    }
}

}  // namespace

std::string_view to_string(FamilyId id) noexcept {
    switch (id) {
        case FamilyId::General: return "general";
        case FamilyId::N2: return "n2";
        case FamilyId::N3: return "n3";
        case FamilyId::N6: return "n6";
    }
    return "?";
}

FamilyId family_from_string(std::string_view s) {
    for (auto id : {FamilyId::General, FamilyId::N2, FamilyId::N3, FamilyId::N6}) {
        if (s == to_string(id)) {
            return id;
        }
    }
    throw std::invalid_argument("unknown family '" + std::string(s) +
                                "' (expected general, n2, n3 or n6)");
}

const ClosedForm& ClosedFormFamily::at(int i) const {
    const auto it = entries.find(i);
    if (it == entries.end()) {
        throw std::out_of_range("family " + std::string(to_string(id)) + " has no form for rank " +
                                std::to_string(i));
    }
    return it->second;
}

ExpPoly gamma_general_poly(int n, int i) {
    if (n < 1) {
        throw std::invalid_argument("n must be >= 1");
    }
    if (i < 0 || i > 7) {
        throw std::out_of_range("general-n closed forms cover ranks 0..7, got " +
                                std::to_string(i));
    }
    const mpz_class big_n = pow2(static_cast<unsigned long>(n));
    ExpPoly out;
    for (const auto& slice : general_forms()[static_cast<std::size_t>(i)]) {
        mpz_class inner = 0;
        for (const auto& c : slice.n_coeffs) {
            inner = inner * big_n + c;
        }
        out += ExpPoly::monomial(slice.prefactor * inner, slice.x_power);
    }
    return out;
}

int general_k_min(int i) { return i + 1; }

ClosedFormFamily general_family(int n) {
    ClosedFormFamily f{FamilyId::General, n, {}};
    for (int i = 0; i <= 7; ++i) {
        f.entries[i] = {gamma_general_poly(n, i), general_k_min(i)};
    }
    return f;
}

const ClosedFormFamily& family(FamilyId id) {
    static const ClosedFormFamily n2 = make_n2();
    static const ClosedFormFamily n3 = make_n3();
    static const ClosedFormFamily n6 = make_n6();
    switch (id) {
        case FamilyId::N2: return n2;
        case FamilyId::N3: return n3;
        case FamilyId::N6: return n6;
        case FamilyId::General: break;
    }
    throw std::invalid_argument("the general family depends on n; use general_family(n)");
}

mpz_class require_integer(const mpq_class& value, std::string_view what) {
    mpq_class q = value;
    q.canonicalize();
    if (q.get_den() != 1) {
        throw NonIntegralResult(std::string(what) + " is not an integer: " + q.get_str());
    }
    return q.get_num();
}

mpz_class evaluate_form(const ClosedForm& form, int k, bool allow_below_validity,
                        std::string_view label) {
    if (k < 1) {
        throw std::invalid_argument("k must be >= 1");
    }
    if (k < form.k_min && !allow_below_validity) {
        throw BelowValidityRange(std::string(label) + " is stated for k >= " +
                                 std::to_string(form.k_min) + "; k = " + std::to_string(k) +
                                 " is below validity range");
    }
    return require_integer(form.poly.at_k(k), label);
}

mpz_class gamma_general(int n, int i, int k, bool allow_below_validity) {
    const ClosedForm form{gamma_general_poly(n, i), general_k_min(i)};
    return evaluate_form(form, k, allow_below_validity,
                         "general Gamma_" + std::to_string(i) + " (n=" + std::to_string(n) + ")");
}

mpz_class gamma_table(FamilyId id, int i, int k, bool allow_below_validity) {
    const auto& fam = family(id);
    return evaluate_form(fam.at(i), k, allow_below_validity,
                         std::string(to_string(id)) + " Gamma_" + std::to_string(i));
}

mpz_class full_rank_count(int n, int k) {
    check_nk(n, k);
    mpz_class out = pow2(static_cast<unsigned long>(n));
    const mpz_class x = pow2(static_cast<unsigned long>(k));
    for (int j = 1; j <= n; ++j) {
        out *= x - pow2(static_cast<unsigned long>(2 * n - j));
    }
    return out;
}

ExpPoly full_rank_poly(int n) {
    if (n < 1) {
        throw std::invalid_argument("n must be >= 1");
    }
    std::vector<int> roots;
    for (int j = 1; j <= n; ++j) {
        roots.push_back(2 * n - j);
    }
    return ExpPoly::from_power_roots(mpq_class(pow2(static_cast<unsigned long>(n))), roots);
}

mpz_class moment_lhs(const RankDistribution& d, int s) {
    check_s(s);
    if (d.method != Method::Exact) {
        throw std::invalid_argument("moment identities need an exact distribution");
    }
    mpz_class sum = 0;
    for (std::size_t i = 0; i < d.counts.size(); ++i) {
        const long shift = (2L * d.n - static_cast<long>(i)) * s;
        if (shift < 0) {
            throw std::invalid_argument("rank " + std::to_string(i) + " exceeds 2n");
        }
        sum += d.counts[i] * pow2(static_cast<unsigned long>(shift));
    }
    return sum;
}

mpz_class moment_rhs(int n, int k, int s) {
    check_nk(n, k);
    check_s(s);
    const long N = n;
    const long K = k;
    const mpq_class x = pow2q(K);
    mpq_class v;
    switch (s) {
        case 0:
            v = pow2q((K + 1) * N);
            break;
        case 1:
            v = pow2q(3 * N + K * (N - 1)) + pow2q((K + 1) * N) - pow2q((K + 1) * N - K);
            break;
        default:
            v = pow2q(5 * N + K * (N - 2)) + pow2q(3 * N + K * (N - 2)) * (3 * x - 3) +
                pow2q(2 * N + K * (N - 2)) * (3 * x - 6) + pow2q(N + K * N) -
                6 * pow2q(N * (K + 1) - K) + 8 * pow2q(N + K * (N - 2));
            break;
    }
    return require_integer(v, "moment right-hand side s=" + std::to_string(s));
}

ExpPoly moment_rhs_poly(int n, int s) {
    check_s(s);
    if (n < 2) {
        throw std::invalid_argument("moment_rhs_poly needs n >= 2");
    }
    const auto c = [](unsigned long e) { return mpq_class(pow2(e)); };
    const auto un = static_cast<unsigned long>(n);
    const ExpPoly x = ExpPoly::x();
    switch (s) {
        case 0:
            return ExpPoly::monomial(c(un), n);
        case 1:
            return ExpPoly::monomial(c(3 * un), n - 1) + ExpPoly::monomial(c(un), n) -
                   ExpPoly::monomial(c(un), n - 1);
        default: {
            const ExpPoly base = ExpPoly::monomial(1, n - 2);
            return ExpPoly::monomial(c(5 * un), n - 2) +
                   base * ExpPoly(c(3 * un)) * (ExpPoly(3) * x - ExpPoly(3)) +
                   base * ExpPoly(c(2 * un)) * (ExpPoly(3) * x - ExpPoly(6)) +
                   ExpPoly::monomial(c(un), n) - ExpPoly::monomial(6 * c(un), n - 1) +
                   ExpPoly::monomial(8 * c(un), n - 2);
        }
    }
}

const std::array<ExpPoly, 3>& sextuple_moment_targets() {
    static const std::array<ExpPoly, 3> targets = {
        dense({64, 0, 0, 0, 0, 0, 0}),
        dense({64, 262080, 0, 0, 0, 0, 0}),
        dense({64, 798336, 1072931328, 0, 0, 0, 0}),
    };
    return targets;
}

mpz_class q1_solution_count(int n, int k) {
    check_nk(n, k);
    return pow2(2UL * static_cast<unsigned long>(n)) + pow2(static_cast<unsigned long>(k)) - 1;
}

std::vector<TableRow> emit_table(const ClosedFormFamily& fam, int k_lo, int k_hi) {
    if (k_lo < 1 || k_hi < k_lo) {
        throw std::invalid_argument("k range must satisfy 1 <= k_lo <= k_hi");
    }
    std::vector<TableRow> rows;
    for (int k = k_lo; k <= k_hi; ++k) {
        const int top = std::min(fam.max_rank(), std::min(2 * fam.n, k));
        for (int i = 0; i <= top; ++i) {
            const auto& form = fam.at(i);
            TableRow row;
            row.family = std::string(to_string(fam.id));
            row.n = fam.n;
            row.i = i;
            row.k = k;
            row.in_range = k >= form.k_min;
            row.value = evaluate_form(form, k, true, row.family + " Gamma_" + std::to_string(i));
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::vector<ExampleItem> check_published_example() {
    const std::array<mpz_class, 7> published = {
        1, 189, 35154, 5155920, 645271200, 256536315 * pow2(8), pow2(14) * 264387375,
    };
    const auto& n6 = family(FamilyId::N6);
    std::vector<ExampleItem> out;
    for (int i = 0; i <= 6; ++i) {
        ExampleItem item;
        item.i = i;
        item.published = published[static_cast<std::size_t>(i)];
        item.in_range = 6 >= n6.at(i).k_min;
        item.computed = gamma_table(FamilyId::N6, i, 6, true);
        item.matches = item.computed == item.published;
        out.push_back(std::move(item));
    }
    return out;
}

std::vector<FormComparison> compare_general_with_sextuple() {
    const auto& n6 = family(FamilyId::N6);
    std::vector<FormComparison> out;
    for (int i = 0; i <= 7; ++i) {
        FormComparison c;
        c.i = i;
        c.general = gamma_general_poly(6, i);
        c.table = n6.at(i).poly;
        c.equal = c.general == c.table;
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace persym
