#include "oracles.hpp"

#include "hlag/compression.hpp"
#include "hlag/optimizer.hpp"
#include "hlag/polynomial.hpp"
#include "hlag/rational.hpp"
#include "hlag/weighting.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

using namespace hlag;
using doctest::Approx;

namespace {

const std::vector<double> kSample{0.3, 0.3, 0.2, 0.1, 0.1};

UniformHypergraph single_edge()
{
    return UniformHypergraph(2, 2, std::vector<RSet>{RSet{1, 2}});
}

} // namespace

TEST_CASE("weightings validate the simplex")
{
    CHECK_THROWS_AS(Weighting({0.5, 0.6}), std::invalid_argument);
    CHECK_THROWS_AS(Weighting({1.5, -0.5}), std::invalid_argument);
    CHECK_THROWS_AS(Weighting({NAN, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(Weighting(std::vector<double>{}), std::invalid_argument);
    const auto w = Weighting::uniform_on(5, vertex_bit(2) | vertex_bit(4));
    CHECK(w.at(2) == 0.5);
    CHECK(w.at(1) == 0.0);
    CHECK(w.support() == (vertex_bit(2) | vertex_bit(4)));
}

TEST_CASE("lambda and links at a fixed weighting")
{
    const auto c = colex_segment(3, 5);
    CHECK(eval_lambda(c, kSample) == Approx(0.048).epsilon(1e-15));
    CHECK(vertex_link(c, kSample, 5) == Approx(0.09).epsilon(1e-15));
    CHECK(strict_link(c, kSample, 4, 5) == Approx(0.12).epsilon(1e-15));
    CHECK(pair_link(c, kSample, 1, 2) == Approx(0.2 + 0.1 + 0.1).epsilon(1e-15));
    CHECK(plain_exclusive_link(c, kSample, 4, 5) == Approx(0.09 + 0.06 + 0.06).epsilon(1e-15));
    CHECK_THROWS_AS(vertex_link(c, kSample, 6), std::out_of_range);
    CHECK_THROWS_AS(pair_link(c, kSample, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(eval_lambda(c, std::vector<double>{0.5, 0.5}), std::invalid_argument);
}

TEST_CASE("links match the oracle's finite differences")
{
    std::mt19937_64 rng(21);
    for (int k = 0; k < 100; ++k) {
        const int n = std::uniform_int_distribution<int>(3, 7)(rng);
        const int r = std::uniform_int_distribution<int>(2, 3)(rng);
        const auto g = oracle::random_graph(rng, r, n, 0.5);
        const auto edges = oracle::sets_of(g);
        const auto x = oracle::random_simplex_point(rng, n);
        const auto links = vertex_links(g, x);
        for (int v = 1; v <= n; ++v) {
            auto hi = x, lo = x;
            const double h = 1e-5;
            hi[static_cast<std::size_t>(v - 1)] += h;
            lo[static_cast<std::size_t>(v - 1)] -= h;
            const double fd = (oracle::lambda_at(edges, hi) - oracle::lambda_at(edges, lo)) / (2 * h);
            CHECK(std::abs(links[static_cast<std::size_t>(v - 1)] - fd) <= 1e-6);
            CHECK(links[static_cast<std::size_t>(v - 1)] == Approx(vertex_link(g, x, v)).epsilon(1e-12));
        }
        CHECK(eval_lambda(g, x) == Approx(oracle::lambda_at(edges, x)).epsilon(1e-12));
    }
}

TEST_CASE("growth transform")
{
    const auto g = single_edge();
    const auto next = baum_eagon_step(g, std::vector<double>{0.75, 0.25});
    CHECK(next[0] == Approx(0.5));
    CHECK(next[1] == Approx(0.5));
    CHECK(kkt_residual(g, std::vector<double>{0.75, 0.25}) == Approx(0.375));
    const auto empty = UniformHypergraph(2, 3, std::vector<EdgeMask>{});
    CHECK_THROWS_AS(baum_eagon_step(empty, std::vector<double>{0.2, 0.3, 0.5}), std::domain_error);
}

TEST_CASE("exact clique values")
{
    CHECK(clique_lambda_exact(4, 3) == Rational(BigInt(1), BigInt(16)));
    CHECK(clique_lambda_exact(5, 3) == Rational(BigInt(2), BigInt(25)));
    CHECK(clique_lambda_exact(3, 3) == Rational(BigInt(1), BigInt(27)));
    CHECK(clique_lambda_exact(5, 3).to_string() == "2/25");
    CHECK_THROWS_AS(clique_lambda_exact(2, 3), std::invalid_argument);
}

TEST_CASE("optimizer on small colex segments")
{
    const auto single = optimize(single_edge());
    CHECK(single.value == Approx(0.25).epsilon(1e-12));
    CHECK(single.converged);

    const auto c3 = optimize(colex_segment(3, 3));
    CHECK(std::abs(c3.value - 4.0 / 81) <= 1e-12);
    CHECK(std::abs(c3.weighting.at(1) - 1.0 / 3) <= 1e-8);
    for (int v = 2; v <= 4; ++v)
        CHECK(std::abs(c3.weighting.at(v) - 2.0 / 9) <= 1e-8);
    const std::vector<Rational> exact{Rational(BigInt(1), BigInt(3)), Rational(BigInt(2), BigInt(9)),
                                      Rational(BigInt(2), BigInt(9)), Rational(BigInt(2), BigInt(9))};
    CHECK(eval_lambda_exact(colex_segment(3, 3), exact) == Rational(BigInt(4), BigInt(81)));
    for (int v = 1; v <= 4; ++v)
        CHECK(vertex_link_exact(colex_segment(3, 3), exact, v) == Rational(BigInt(4), BigInt(27)));

    const auto c5 = minimize_support(colex_segment(3, 5), optimize(colex_segment(3, 5)));
    CHECK(std::abs(c5.value - 1.0 / 16) <= 1e-12);
    CHECK(c5.support_vertices() == std::vector<Vertex>{1, 2, 3, 4});

    const auto none = optimize(UniformHypergraph(3, 4, std::vector<EdgeMask>{}));
    CHECK(none.value == 0.0);
    CHECK(none.support == 0);
}

TEST_CASE("optimizer matches the clique formula")
{
    for (int t = 3; t <= 8; ++t) {
        for (int r = 2; r < t; ++r) {
            const auto res = optimize(clique(t, r));
            CHECK(std::abs(res.value - clique_lambda_exact(t, r).to_double()) <= 1e-9);
        }
    }
}

TEST_CASE("optimizer agrees with pairwise coordinate ascent")
{
    std::mt19937_64 rng(99);
    for (int k = 0; k < 60; ++k) {
        const int n = std::uniform_int_distribution<int>(3, 6)(rng);
        const int r = std::uniform_int_distribution<int>(2, 3)(rng);
        const auto g = oracle::random_graph(rng, r, n, 0.5);
        const auto res = optimize(g);
        const double reference = oracle::pairwise_ascent_lambda(oracle::sets_of(g), n, 40, 1000 + k);
        CHECK(res.value >= reference - 1e-9);
        CHECK(std::abs(res.value - reference) <= 1e-7);
        CHECK(res.converged);
        CHECK(res.kkt_residual <= 1e-8);
    }
}

TEST_CASE("optimizer results are reproducible")
{
    std::mt19937_64 rng(4);
    const auto g = oracle::random_graph(rng, 3, 12, 0.3);
    OptimizerConfig cfg;
    cfg.seed = 17;
    const auto a = optimize(g, cfg);
    const auto b = optimize(g, cfg);
    cfg.threads = 3;
    const auto c = optimize(g, cfg);
    CHECK(a.value == b.value);
    CHECK(std::vector<double>(a.weighting.values().begin(), a.weighting.values().end())
          == std::vector<double>(c.weighting.values().begin(), c.weighting.values().end()));
    cfg.restarts = 0;
    CHECK_THROWS_AS(optimize(g, cfg), std::invalid_argument);
}

TEST_CASE("left-compressed optima are sorted and minimal supports are pair-covered")
{
    std::mt19937_64 rng(12);
    for (int k = 0; k < 60; ++k) {
        const int n = std::uniform_int_distribution<int>(4, 7)(rng);
        const auto g = oracle::random_left_compressed(rng, 3, n);
        const auto res = minimize_support(g, optimize(g));
        const auto x = res.weighting.values();
        CHECK(std::is_sorted(x.rbegin(), x.rend()));
        CHECK(pairs_covered(g, res.support));
        CHECK(std::abs(res.value - optimize(g).value) <= 1e-9);
    }
}

TEST_CASE("compression never lowers lambda")
{
    std::mt19937_64 rng(31);
    for (int k = 0; k < 40; ++k) {
        const int n = std::uniform_int_distribution<int>(4, 6)(rng);
        const auto g = oracle::random_graph(rng, 3, n, 0.35);
        const int j = std::uniform_int_distribution<int>(2, n)(rng);
        const int i = std::uniform_int_distribution<int>(1, j - 1)(rng);
        CHECK(optimize(elementary_compress(g, i, j)).value >= optimize(g).value - 1e-8);
    }
}

TEST_CASE("link decomposition and swap pairing")
{
    std::mt19937_64 rng(41);
    for (int k = 0; k < 100; ++k) {
        const int n = std::uniform_int_distribution<int>(3, 7)(rng);
        const int r = std::uniform_int_distribution<int>(2, std::min(4, n))(rng);
        const auto g = oracle::random_graph(rng, r, n, 0.5);
        const auto edges = oracle::sets_of(g);
        const auto x = oracle::random_simplex_point(rng, n);
        const int i = std::uniform_int_distribution<int>(1, n)(rng);
        int j = std::uniform_int_distribution<int>(1, n - 1)(rng);
        if (j >= i)
            ++j;
        // edges through i avoiding j, with x_i dropped, computed from scratch
        double plain = 0.0;
        for (const auto& e : edges) {
            if (std::find(e.begin(), e.end(), i) == e.end() || std::find(e.begin(), e.end(), j) != e.end())
                continue;
            double prod = 1.0;
            for (int v : e) {
                if (v != i)
                    prod *= x[static_cast<std::size_t>(v - 1)];
            }
            plain += prod;
        }
        CHECK(plain_exclusive_link(g, x, i, j) == Approx(plain).epsilon(1e-12));
        CHECK(vertex_link(g, x, i)
              == Approx(x[static_cast<std::size_t>(j - 1)] * pair_link(g, x, i, j) + plain).epsilon(1e-12));
        const double lhs = plain_exclusive_link(g, x, i, j) - strict_link(g, x, i, j);
        const double rhs = plain_exclusive_link(g, x, j, i) - strict_link(g, x, j, i);
        CHECK(std::abs(lhs - rhs) <= 1e-14);
    }
}

TEST_CASE("relabelling vertices leaves lambda unchanged")
{
    std::mt19937_64 rng(52);
    for (int k = 0; k < 100; ++k) {
        const int n = std::uniform_int_distribution<int>(3, 7)(rng);
        const auto g = oracle::random_graph(rng, 3, n, 0.5);
        const auto x = oracle::random_simplex_point(rng, n);
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 1);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<EdgeMask> moved;
        for (EdgeMask e : g.edges()) {
            EdgeMask m = 0;
            for_each_vertex(e, [&](Vertex v) { m |= vertex_bit(perm[static_cast<std::size_t>(v - 1)]); });
            moved.push_back(m);
        }
        std::vector<double> y(x.size());
        for (int v = 1; v <= n; ++v)
            y[static_cast<std::size_t>(perm[static_cast<std::size_t>(v - 1)] - 1)] = x[static_cast<std::size_t>(v - 1)];
        // the same products are summed, possibly in another order
        CHECK(eval_lambda(UniformHypergraph(3, n, moved), y) == Approx(eval_lambda(g, x)).epsilon(1e-15));
    }
}
