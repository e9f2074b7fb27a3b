#pragma once

#include <gmpxx.h>

#include <string>

namespace opal {

// Exact arbitrary-precision arithmetic. BigRat values handed out by this
// library are canonical: lowest terms, positive denominator.
using BigNat = mpz_class;
using BigRat = mpq_class;

inline BigRat make_rational(const BigNat& numerator, const BigNat& denominator) {
    BigRat q(numerator, denominator);
    q.canonicalize();
    return q;
}

inline std::string to_decimal(const BigNat& n) { return n.get_str(); }

// "num/den" in lowest terms, shortened to "num" when the denominator is 1.
inline std::string format_rational(const BigRat& q) { return q.get_str(); }

}  // namespace opal
