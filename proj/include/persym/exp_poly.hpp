#pragma once

#include <map>
#include <span>
#include <string>

#include <gmpxx.h>

namespace persym {

/// Polynomial in x = 2^k with exact rational coefficients. Zero coefficients are never stored.
class ExpPoly {
public:
    using Coeffs = std::map<int, mpq_class>;

    ExpPoly() = default;
    ExpPoly(const mpq_class& c);  // NOLINT(google-explicit-constructor): constants promote
    ExpPoly(long c) : ExpPoly(mpq_class(c)) {}  // NOLINT(google-explicit-constructor)

    static ExpPoly monomial(const mpq_class& c, int power);
    static ExpPoly x() { return monomial(1, 1); }
    /// scale * prod_j (x - 2^{e_j})
    static ExpPoly from_power_roots(const mpq_class& scale, std::span<const int> root_exponents);

    const Coeffs& coeffs() const noexcept { return coeffs_; }
    mpq_class coefficient(int power) const;
    /// -1 for the zero polynomial.
    int degree() const noexcept { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    ExpPoly& operator+=(const ExpPoly& rhs);
    ExpPoly& operator-=(const ExpPoly& rhs);
    ExpPoly& operator*=(const ExpPoly& rhs);
    ExpPoly operator-() const;

    friend ExpPoly operator+(ExpPoly a, const ExpPoly& b) { return a += b; }
    friend ExpPoly operator-(ExpPoly a, const ExpPoly& b) { return a -= b; }
    friend ExpPoly operator*(ExpPoly a, const ExpPoly& b) { return a *= b; }
    friend bool operator==(const ExpPoly& a, const ExpPoly& b) { return a.coeffs_ == b.coeffs_; }

    mpq_class evaluate(const mpq_class& x) const;
    /// Value at x = 2^k.
    mpq_class at_k(int k) const;

    /// e.g. "10416*x^4 - 3*x + 1/2"; "0" for the zero polynomial.
    std::string to_string() const;

private:
    void add_term(int power, const mpq_class& c);

    Coeffs coeffs_;
};

}  // namespace persym
