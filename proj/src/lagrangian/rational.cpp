#include "hlag/rational.hpp"

#include <stdexcept>

namespace hlag {

Rational::Rational(const BigInt& numerator, const BigInt& denominator)
{
    if (denominator == 0)
        throw std::domain_error("rational with zero denominator");
    value_ = boost::multiprecision::cpp_rational(numerator, denominator);
}

std::string Rational::to_string() const
{
    const auto q = denominator();
    return q == 1 ? numerator().str() : numerator().str() + "/" + q.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& q)
{
    return os << q.to_string();
}

Rational clique_lambda_exact(int t, int r)
{
    if (r < 1 || r > t)
        throw std::invalid_argument("clique_lambda_exact requires 1 <= r <= t");
    BigInt edges = 1;
    for (int k = 1; k <= r; ++k)
        edges = edges * (t - r + k) / k;
    BigInt power = 1;
    for (int k = 0; k < r; ++k)
        power *= t;
    return Rational(edges, power);
}

namespace {
void require_length(const UniformHypergraph& g, std::span<const Rational> x)
{
    if (x.size() < static_cast<std::size_t>(g.order()))
        throw std::invalid_argument("weighting shorter than the vertex count");
}
} // namespace

Rational eval_lambda_exact(const UniformHypergraph& g, std::span<const Rational> x)
{
    require_length(g, x);
    Rational sum;
    for (EdgeMask e : g.edges()) {
        Rational p{1};
        for_each_vertex(e, [&](Vertex v) { p *= x[static_cast<std::size_t>(v - 1)]; });
        sum += p;
    }
    return sum;
}

Rational vertex_link_exact(const UniformHypergraph& g, std::span<const Rational> x, Vertex i)
{
    require_length(g, x);
    if (i < 1 || i > g.order())
        throw std::out_of_range("vertex outside the graph");
    const EdgeMask bi = vertex_bit(i);
    Rational sum;
    for (EdgeMask e : g.edges()) {
        if (!(e & bi))
            continue;
        Rational p{1};
        for_each_vertex(e & ~bi, [&](Vertex v) { p *= x[static_cast<std::size_t>(v - 1)]; });
        sum += p;
    }
    return sum;
}

} // namespace hlag
