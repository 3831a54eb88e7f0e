#include "hom3lie/rational.hpp"

#include "hom3lie/errors.hpp"

namespace hom3lie {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw InputError("rational with zero denominator");
    return Rational(num, den);
}

std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

Vec zero_vec(std::size_t n) { return Vec(n, Rational(0)); }

bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

Vec add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw InputError("vector length mismatch in add");
    Vec out(a);
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

Vec sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw InputError("vector length mismatch in sub");
    Vec out(a);
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    return out;
}

Vec scale(const Rational& c, const Vec& a) {
    Vec out(a);
    for (auto& x : out) x *= c;
    return out;
}

void axpy(Vec& dst, const Rational& c, const Vec& src) {
    if (dst.size() != src.size()) throw InputError("vector length mismatch in axpy");
    if (c == 0) return;
    for (std::size_t i = 0; i < src.size(); ++i) dst[i] += c * src[i];
}

std::string to_string(const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += to_string(v[i]);
    }
    return s + ")";
}

} // namespace hom3lie
