#include "oracles.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numeric>
#include <set>

namespace oracle {

bool colex_less(const Set& a, const Set& b)
{
    std::set<int> diff;
    for (int v : a) {
        if (std::find(b.begin(), b.end(), v) == b.end())
            diff.insert(v);
    }
    for (int v : b) {
        if (std::find(a.begin(), a.end(), v) == a.end())
            diff.insert(v);
    }
    if (diff.empty())
        return false;
    const int top = *diff.rbegin();
    return std::find(b.begin(), b.end(), top) != b.end();
}

namespace {

void subsets(int n, int r, int from, Set& cur, Family& out)
{
    if (static_cast<int>(cur.size()) == r) {
        out.push_back(cur);
        return;
    }
    for (int v = from; v <= n; ++v) {
        cur.push_back(v);
        subsets(n, r, v + 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

Family all_subsets_colex(int n, int r)
{
    Family out;
    Set cur;
    subsets(n, r, 1, cur, out);
    std::sort(out.begin(), out.end(), colex_less);
    return out;
}

Family sets_of(const hlag::UniformHypergraph& g)
{
    Family out;
    for (const auto& s : g.edge_sets())
        out.emplace_back(s.vertices().begin(), s.vertices().end());
    return out;
}

hlag::UniformHypergraph graph_of(int r, int n, const Family& edges)
{
    std::vector<hlag::RSet> sets;
    for (const auto& e : edges)
        sets.emplace_back(std::vector<hlag::Vertex>(e.begin(), e.end()));
    return hlag::UniformHypergraph(r, n, sets);
}

double lambda_at(const Family& edges, const std::vector<double>& x)
{
    double total = 0.0;
    for (const auto& e : edges) {
        double prod = 1.0;
        for (int v : e)
            prod *= x[static_cast<std::size_t>(v - 1)];
        total += prod;
    }
    return total;
}

bool left_compressed(const Family& edges)
{
    const std::set<Set> present(edges.begin(), edges.end());
    for (const auto& e : edges) {
        for (std::size_t p = 0; p < e.size(); ++p) {
            for (int u = 1; u < e[p]; ++u) {
                if (std::find(e.begin(), e.end(), u) != e.end())
                    continue;
                Set moved = e;
                moved[p] = u;
                std::sort(moved.begin(), moved.end());
                if (!present.count(moved))
                    return false;
            }
        }
    }
    return true;
}

Family shift(const Family& edges, int i, int j)
{
    const std::set<Set> present(edges.begin(), edges.end());
    Family out;
    for (const auto& e : edges) {
        const bool has_j = std::find(e.begin(), e.end(), j) != e.end();
        const bool has_i = std::find(e.begin(), e.end(), i) != e.end();
        if (has_j && !has_i) {
            Set moved = e;
            std::replace(moved.begin(), moved.end(), j, i);
            std::sort(moved.begin(), moved.end());
            if (!present.count(moved)) {
                out.push_back(moved);
                continue;
            }
        }
        out.push_back(e);
    }
    std::sort(out.begin(), out.end(), colex_less);
    return out;
}

std::vector<Family> list_left_compressed(int r, int m, int n)
{
    const Family all = all_subsets_colex(n, r);
    std::vector<Family> out;
    std::vector<int> pick(all.size(), 0);
    if (m > static_cast<int>(all.size()))
        return out;
    std::fill(pick.end() - m, pick.end(), 1);
    do {
        Family f;
        for (std::size_t k = 0; k < all.size(); ++k) {
            if (pick[k])
                f.push_back(all[k]);
        }
        if (left_compressed(f))
            out.push_back(f);
    } while (std::next_permutation(pick.begin(), pick.end()));
    return out;
}

std::size_t count_left_compressed(int r, int m, int n)
{
    return list_left_compressed(r, m, n).size();
}

std::vector<double> random_simplex_point(std::mt19937_64& rng, int n)
{
    std::exponential_distribution<double> e(1.0);
    std::vector<double> x(static_cast<std::size_t>(n));
    for (double& w : x)
        w = e(rng);
    const double sum = std::accumulate(x.begin(), x.end(), 0.0);
    for (double& w : x)
        w /= sum;
    return x;
}

namespace {

// One sweep of exact pairwise moves; returns the gain.
double pair_sweep(const Family& edges, std::vector<double>& x)
{
    const double before = lambda_at(edges, x);
    const auto n = x.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double lo = -x[i], hi = x[j];
            if (hi - lo <= 0.0)
                continue;
            auto at = [&](double d) {
                auto y = x;
                y[i] += d;
                y[j] -= d;
                return lambda_at(edges, y);
            };
            // quadratic through the endpoints and the current point
            const double f0 = at(0.0), fl = at(lo), fh = at(hi);
            double best_d = 0.0, best_f = f0;
            if (fl > best_f)
                best_d = lo, best_f = fl;
            if (fh > best_f)
                best_d = hi, best_f = fh;
            if (lo < 0.0 && hi > 0.0) {
                // f(d) = f0 + b d + c d^2 from the three samples
                const double c = ((fh - f0) / hi - (fl - f0) / lo) / (hi - lo);
                const double b = (fh - f0) / hi - c * hi;
                if (c < 0.0) {
                    const double d = std::clamp(-b / (2 * c), lo, hi);
                    const double fd = at(d);
                    if (fd > best_f)
                        best_d = d, best_f = fd;
                }
            }
            x[i] += best_d;
            x[j] -= best_d;
            x[i] = std::max(x[i], 0.0);
            x[j] = std::max(x[j], 0.0);
        }
    }
    return lambda_at(edges, x) - before;
}

} // namespace

double pairwise_ascent_lambda(const Family& edges, int n, int starts, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    double best = 0.0;
    for (int s = 0; s < starts; ++s) {
        std::vector<double> x = s == 0 ? std::vector<double>(static_cast<std::size_t>(n), 1.0 / n)
                                       : random_simplex_point(rng, n);
        for (int sweep = 0; sweep < 2000; ++sweep) {
            if (pair_sweep(edges, x) <= 1e-16)
                break;
        }
        best = std::max(best, lambda_at(edges, x));
    }
    return best;
}

hlag::UniformHypergraph random_graph(std::mt19937_64& rng, int r, int n, double p)
{
    const Family all = all_subsets_colex(n, r);
    std::bernoulli_distribution coin(p);
    Family chosen;
    for (const auto& s : all) {
        if (coin(rng))
            chosen.push_back(s);
    }
    if (chosen.empty())
        chosen.push_back(all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)]);
    return graph_of(r, n, chosen);
}

hlag::UniformHypergraph random_left_compressed(std::mt19937_64& rng, int r, int n)
{
    const Family all = all_subsets_colex(n, r);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    const int gens = std::uniform_int_distribution<int>(1, 4)(rng);
    std::vector<Set> tops;
    for (int k = 0; k < gens; ++k)
        tops.push_back(all[pick(rng)]);
    Family chosen;
    for (const auto& s : all) {
        // s is below t in the dominance order iff s_p <= t_p for every position
        const bool below = std::any_of(tops.begin(), tops.end(), [&](const Set& t) {
            for (std::size_t p = 0; p < s.size(); ++p) {
                if (s[p] > t[p])
                    return false;
            }
            return true;
        });
        if (below)
            chosen.push_back(s);
    }
    return graph_of(r, n, chosen);
}

BruteForce brute_force_3graphs_on_6(int mmax, const std::function<double(const hlag::UniformHypergraph&)>& lambda)
{
    constexpr int n = 6;
    const Family triples = all_subsets_colex(n, 3);
    const int k = static_cast<int>(triples.size()); // 20
    auto index_of = [&](Set s) {
        std::sort(s.begin(), s.end());
        return static_cast<int>(std::find(triples.begin(), triples.end(), s) - triples.begin());
    };

    // For each vertex permutation, a table mapping 7-bit chunks of a graph
    // mask to the permuted mask.
    std::vector<std::array<std::array<std::uint32_t, 128>, 3>> tables;
    std::array<int, n> perm{};
    std::iota(perm.begin(), perm.end(), 1);
    do {
        std::array<int, 20> image{};
        for (int t = 0; t < k; ++t) {
            Set s;
            for (int v : triples[static_cast<std::size_t>(t)])
                s.push_back(perm[static_cast<std::size_t>(v - 1)]);
            image[static_cast<std::size_t>(t)] = index_of(s);
        }
        std::array<std::array<std::uint32_t, 128>, 3> tab{};
        for (int chunk = 0; chunk < 3; ++chunk) {
            for (std::uint32_t bits = 0; bits < 128; ++bits) {
                std::uint32_t out = 0;
                for (int b = 0; b < 7; ++b) {
                    const int t = chunk * 7 + b;
                    if (t < k && (bits >> b & 1U))
                        out |= 1U << image[static_cast<std::size_t>(t)];
                }
                tab[static_cast<std::size_t>(chunk)][bits] = out;
            }
        }
        tables.push_back(tab);
    } while (std::next_permutation(perm.begin(), perm.end()));

    BruteForce result;
    result.best.assign(static_cast<std::size_t>(mmax) + 1, 0.0);
    for (int m = 1; m <= mmax; ++m) {
        // Gosper's hack over 20-bit masks with m bits
        std::uint32_t mask = (1U << m) - 1;
        while (mask < (1U << k)) {
            ++result.graphs;
            bool minimal = true;
            for (const auto& tab : tables) {
                const std::uint32_t image = tab[0][mask & 127] | tab[1][(mask >> 7) & 127] | tab[2][mask >> 14];
                if (image < mask) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) {
                ++result.classes;
                Family edges;
                for (int t = 0; t < k; ++t) {
                    if (mask >> t & 1U)
                        edges.push_back(triples[static_cast<std::size_t>(t)]);
                }
                const double value = lambda(graph_of(3, n, edges));
                result.best[static_cast<std::size_t>(m)] = std::max(result.best[static_cast<std::size_t>(m)], value);
            }
            const std::uint32_t c = mask & (~mask + 1);
            const std::uint32_t rr = mask + c;
            mask = (((rr ^ mask) >> 2) / c) | rr;
        }
    }
    return result;
}

} // namespace oracle
