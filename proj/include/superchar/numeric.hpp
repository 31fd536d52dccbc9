#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace superchar {

// Exact counts. Dimensions are nonnegative, superdimensions may be negative.
using BigCount = mpz_class;

using Rational = mpq_class;

// Evaluation point: one exact rational per variable.
using RationalPoint = std::vector<Rational>;

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline RationalPoint constant_point(int count, const Rational& value) {
    return RationalPoint(static_cast<std::size_t>(count), value);
}

inline RationalPoint all_ones(int count) { return constant_point(count, Rational(1)); }

inline RationalPoint all_minus_ones(int count) { return constant_point(count, Rational(-1)); }

// Decimal string; rationals render as "p/q", or just "p" when q == 1.
inline std::string to_string(const BigCount& v) { return v.get_str(); }
inline std::string to_string(const Rational& v) { return v.get_str(); }

}  // namespace superchar
