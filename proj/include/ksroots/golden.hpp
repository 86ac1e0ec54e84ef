#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ks {

// Element a + b*tau of the ring Z[tau], where tau = (1+sqrt(5))/2 satisfies
// tau^2 = tau + 1. Crystallographic root systems only ever use b = 0; H3 and
// H4 need the full ring. All arithmetic is overflow-checked: every quantity
// in this library stays tiny, so an overflow always signals a logic bug and
// throws std::overflow_error.
struct GoldenInt {
    std::int64_t a = 0;  // rational part
    std::int64_t b = 0;  // coefficient of tau

    constexpr GoldenInt() = default;
    constexpr GoldenInt(std::int64_t a_, std::int64_t b_ = 0) : a(a_), b(b_) {}

    bool is_zero() const { return a == 0 && b == 0; }

    // Galois conjugate a+b - b*tau (image under sqrt(5) -> -sqrt(5)).
    GoldenInt conj() const;

    // Field norm N(a+b*tau) = a^2 + ab - b^2. Zero only for the zero element.
    std::int64_t norm() const;

    // Exact sign of the real number a + b*(1+sqrt(5))/2.
    int sign() const;

    std::string str() const;

    friend bool operator==(const GoldenInt&, const GoldenInt&) = default;
    // Component-wise (a, then b) order: a deterministic total order used for
    // canonical sorting, not the order of the underlying reals.
    friend auto operator<=>(const GoldenInt&, const GoldenInt&) = default;
};

GoldenInt operator+(GoldenInt x, GoldenInt y);
GoldenInt operator-(GoldenInt x, GoldenInt y);
GoldenInt operator-(GoldenInt x);
GoldenInt operator*(GoldenInt x, GoldenInt y);
GoldenInt& operator+=(GoldenInt& x, GoldenInt y);
GoldenInt& operator-=(GoldenInt& x, GoldenInt y);
GoldenInt& operator*=(GoldenInt& x, GoldenInt y);

// Coordinate vector over Z[tau]. Lengths used here are 3, 4, 8 and 9.
using GoldenVec = std::vector<GoldenInt>;

// Exact inner product; u is orthogonal to v iff the result is zero.
// Throws std::invalid_argument on length mismatch.
GoldenInt dot(const GoldenVec& u, const GoldenVec& v);

GoldenVec negated(const GoldenVec& v);
bool is_zero(const GoldenVec& v);
std::string str(const GoldenVec& v);

}  // namespace ks
