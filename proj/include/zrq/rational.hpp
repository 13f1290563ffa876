#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace zrq {

using Integer = mpz_class;
using Rational = mpq_class;

using QVector = std::vector<Rational>;
using QMatrix = std::vector<QVector>;
using IntVector = std::vector<std::int64_t>;

/// Parses "p", "-p" or "p/q" (q != 0) into a canonical rational.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string format_rational(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

Integer lcm_of_denominators(const QVector& v);

QVector to_rational(const IntVector& v);

bool is_zero(const QVector& v);
Rational dot(const QVector& a, const QVector& b);

}  // namespace zrq
