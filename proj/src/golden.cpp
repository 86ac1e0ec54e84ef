#include "ksroots/golden.hpp"

#include <sstream>
#include <stdexcept>

namespace ks {

namespace {

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("GoldenInt addition overflow");
    return r;
}

std::int64_t checked_sub(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_sub_overflow(x, y, &r)) throw std::overflow_error("GoldenInt subtraction overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("GoldenInt multiplication overflow");
    return r;
}

}  // namespace

GoldenInt GoldenInt::conj() const { return {checked_add(a, b), checked_sub(0, b)}; }

std::int64_t GoldenInt::norm() const {
    // a^2 + ab - b^2
    return checked_sub(checked_add(checked_mul(a, a), checked_mul(a, b)), checked_mul(b, b));
}

int GoldenInt::sign() const {
    // a + b*tau has the same sign as s + t*sqrt(5) with s = 2a+b, t = b.
    const std::int64_t s = checked_add(checked_mul(2, a), b);
    const std::int64_t t = b;
    if (s >= 0 && t >= 0) return (s != 0 || t != 0) ? 1 : 0;
    if (s <= 0 && t <= 0) return -1;
    // Mixed signs: compare s^2 against 5*t^2 (equality is impossible for
    // t != 0 since sqrt(5) is irrational).
    const std::int64_t s2 = checked_mul(s, s);
    const std::int64_t t2 = checked_mul(5, checked_mul(t, t));
    const int dominant = s > 0 ? 1 : -1;
    return s2 > t2 ? dominant : -dominant;
}

std::string GoldenInt::str() const {
    if (b == 0) return std::to_string(a);
    std::ostringstream out;
    if (a != 0) out << a << (b > 0 ? "+" : "");
    if (b == 1)
        out << "t";
    else if (b == -1)
        out << "-t";
    else
        out << b << "t";
    return out.str();
}

GoldenInt operator+(GoldenInt x, GoldenInt y) { return {checked_add(x.a, y.a), checked_add(x.b, y.b)}; }

GoldenInt operator-(GoldenInt x, GoldenInt y) { return {checked_sub(x.a, y.a), checked_sub(x.b, y.b)}; }

GoldenInt operator-(GoldenInt x) { return {checked_sub(0, x.a), checked_sub(0, x.b)}; }

GoldenInt operator*(GoldenInt x, GoldenInt y) {
    // (a1 + b1 t)(a2 + b2 t) = a1 a2 + b1 b2 + (a1 b2 + b1 a2 + b1 b2) t
    const std::int64_t bb = checked_mul(x.b, y.b);
    return {checked_add(checked_mul(x.a, y.a), bb),
            checked_add(checked_add(checked_mul(x.a, y.b), checked_mul(x.b, y.a)), bb)};
}

GoldenInt& operator+=(GoldenInt& x, GoldenInt y) { return x = x + y; }
GoldenInt& operator-=(GoldenInt& x, GoldenInt y) { return x = x - y; }
GoldenInt& operator*=(GoldenInt& x, GoldenInt y) { return x = x * y; }

GoldenInt dot(const GoldenVec& u, const GoldenVec& v) {
    if (u.size() != v.size()) throw std::invalid_argument("dot: vector length mismatch");
    GoldenInt acc;
    for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * v[i];
    return acc;
}

GoldenVec negated(const GoldenVec& v) {
    GoldenVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
    return out;
}

bool is_zero(const GoldenVec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

std::string str(const GoldenVec& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += v[i].str();
    }
    out += ")";
    return out;
}

}  // namespace ks
