#include "persym/exp_poly.hpp"

#include <sstream>
#include <stdexcept>

#include "persym/bigint.hpp"

namespace persym {

ExpPoly::ExpPoly(const mpq_class& c) { add_term(0, c); }

ExpPoly ExpPoly::monomial(const mpq_class& c, int power) {
    if (power < 0) {
        throw std::invalid_argument("ExpPoly exponents must be non-negative");
    }
    ExpPoly p;
    p.add_term(power, c);
    return p;
}

ExpPoly ExpPoly::from_power_roots(const mpq_class& scale, std::span<const int> root_exponents) {
    ExpPoly p(scale);
    for (int e : root_exponents) {
        if (e < 0) {
            throw std::invalid_argument("root exponent must be non-negative");
        }
        p *= x() - ExpPoly(mpq_class(pow2(static_cast<unsigned long>(e))));
    }
    return p;
}

mpq_class ExpPoly::coefficient(int power) const {
    const auto it = coeffs_.find(power);
    return it == coeffs_.end() ? mpq_class(0) : it->second;
}

void ExpPoly::add_term(int power, const mpq_class& c) {
    if (c == 0) {
        return;
    }
    auto [it, inserted] = coeffs_.try_emplace(power, c);
    if (inserted) {
        it->second.canonicalize();
    } else {
        it->second += c;
        if (it->second == 0) {
            coeffs_.erase(it);
        }
    }
}

ExpPoly& ExpPoly::operator+=(const ExpPoly& rhs) {
    for (const auto& [p, c] : rhs.coeffs_) {
        add_term(p, c);
    }
    return *this;
}

ExpPoly& ExpPoly::operator-=(const ExpPoly& rhs) {
    for (const auto& [p, c] : rhs.coeffs_) {
        add_term(p, -c);
    }
    return *this;
}

ExpPoly& ExpPoly::operator*=(const ExpPoly& rhs) {
    ExpPoly out;
    for (const auto& [pa, ca] : coeffs_) {
        for (const auto& [pb, cb] : rhs.coeffs_) {
            out.add_term(pa + pb, ca * cb);
        }
    }
    coeffs_ = std::move(out.coeffs_);
    return *this;
}

ExpPoly ExpPoly::operator-() const {
    ExpPoly out;
    out -= *this;
    return out;
}

mpq_class ExpPoly::evaluate(const mpq_class& x) const {
    mpq_class acc = 0;
    int power = degree();
    auto it = coeffs_.rbegin();
    // Horner over the dense range of exponents.
    for (; power >= 0; --power) {
        acc *= x;
        if (it != coeffs_.rend() && it->first == power) {
            acc += it->second;
            ++it;
        }
    }
    return acc;
}

mpq_class ExpPoly::at_k(int k) const { return evaluate(pow2q(k)); }

std::string ExpPoly::to_string() const {
    if (coeffs_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const auto& [p, c] = *it;
        const bool negative = c < 0;
        const mpq_class mag = negative ? mpq_class(-c) : c;
        if (first) {
            os << (negative ? "-" : "");
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        const bool unit = mag == 1;
        if (!unit || p == 0) {
            os << mag.get_str();
        }
        if (p > 0) {
            os << (unit ? "" : "*") << "x";
            if (p > 1) {
                os << "^" << p;
            }
        }
    }
    return os.str();
}

}  // namespace persym
