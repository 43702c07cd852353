#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace parabraid {

// Exact rational scalar. All algebraic data in this project (coefficients,
// operator entries, Gram matrices) stays in Q; nothing is ever rounded.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Canonical form: "n" for integers, "num/den" otherwise, denominator > 0.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational rational_from_string(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0) {
        throw std::invalid_argument("malformed rational literal: " + text);
    }
    q.canonicalize();
    return q;
}

inline Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

}  // namespace parabraid
