#pragma once

#include "hlag/hypergraph.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <ostream>
#include <span>
#include <string>

namespace hlag {

using BigInt = boost::multiprecision::cpp_int;

/// Exact reduced fraction with positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long long value) : value_(value) {}
    Rational(const BigInt& numerator, const BigInt& denominator);

    BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    BigInt denominator() const { return boost::multiprecision::denominator(value_); }

    double to_double() const { return value_.convert_to<double>(); }
    /// "p/q", or "p" when q = 1.
    std::string to_string() const;

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) { value_ /= o.value_; return *this; }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        return a.value_ < b.value_ ? std::strong_ordering::less
             : b.value_ < a.value_ ? std::strong_ordering::greater
                                   : std::strong_ordering::equal;
    }

private:
    boost::multiprecision::cpp_rational value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

/// lambda([t]^(r)) = C(t, r) / t^r, attained by the uniform weighting.
/// Throws std::invalid_argument unless 1 <= r <= t.
Rational clique_lambda_exact(int t, int r);

/// lambda(G, x) evaluated exactly; used to certify candidate rational optima.
Rational eval_lambda_exact(const UniformHypergraph& g, std::span<const Rational> x);

/// lambda(E_i, x) evaluated exactly.
Rational vertex_link_exact(const UniformHypergraph& g, std::span<const Rational> x, Vertex i);

} // namespace hlag
