#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace persym {

inline mpz_class from_u64(std::uint64_t v) {
    mpz_class out;
    mpz_import(out.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return out;
}

inline mpz_class pow2(unsigned long e) {
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
    return out;
}

/// 2^e for any integer e, as an exact rational.
inline mpq_class pow2q(long e) {
    if (e >= 0) {
        return mpq_class(pow2(static_cast<unsigned long>(e)));
    }
    mpq_class q(mpz_class(1), pow2(static_cast<unsigned long>(-e)));
    q.canonicalize();
    return q;
}

inline std::string to_decimal(const mpz_class& v) { return v.get_str(10); }

}  // namespace persym
