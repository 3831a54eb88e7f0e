#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace hom3lie {

// Exact arbitrary-precision scalars. cpp_rational keeps the canonical form we
// require: reduced fraction, positive denominator, zero stored as 0/1.
// No floating point anywhere in the kernel.
using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Builds num/den; throws InputError on a zero denominator.
Rational make_rational(const Integer& num, const Integer& den);

/// "p/q" when q != 1, otherwise just "p".
std::string to_string(const Rational& r);

// ---- coefficient vectors -------------------------------------------------

using Vec = std::vector<Rational>;

Vec zero_vec(std::size_t n);
bool is_zero(const Vec& v);
Vec  add(const Vec& a, const Vec& b);
Vec  sub(const Vec& a, const Vec& b);
Vec  scale(const Rational& c, const Vec& a);
/// dst += c * src (dimension-checked)
void axpy(Vec& dst, const Rational& c, const Vec& src);

std::string to_string(const Vec& v);

} // namespace hom3lie
