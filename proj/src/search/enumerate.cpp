#include "hlag/enumerate.hpp"

#include "hlag/compression.hpp"

#include <algorithm>
#include <stdexcept>

namespace hlag {

EnumerationCursor::EnumerationCursor(int r, std::size_t m, int nmax, std::size_t shard, std::size_t shard_count)
    : r_(r), m_(m), nmax_(nmax), shard_(shard), shard_count_(shard_count), split_depth_(std::min<std::size_t>(m, 4))
{
    if (r < 1 || nmax < r || nmax > kMaxVertices)
        throw std::invalid_argument("enumeration requires 1 <= r <= nmax <= 64");
    if (shard_count == 0 || shard >= shard_count)
        throw std::invalid_argument("enumeration shard must satisfy shard < shard_count");
    if (m > binomial(nmax, r)) {
        done_ = true;
        return;
    }
    // A downset holding an edge with top vertex v also holds {1..r-1, w} for
    // r <= w <= v, so no edge reaches past vertex m + r - 1.
    const int top = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(nmax), m + static_cast<std::size_t>(r) - 1));
    if (top >= r) {
        const EdgeMask limit = prefix_mask(top);
        for (EdgeMask e = prefix_mask(r); (e & ~limit) == 0;) {
            candidates_.push_back(e);
            const EdgeMask c = e & (~e + 1);
            const EdgeMask s = e + c;
            if (s == 0)
                break;
            e = (((s ^ e) >> 2) / c) | s;
        }
    }
    resume_.assign(m + 1, 0);
}

bool EnumerationCursor::lower_covers_chosen(EdgeMask e) const
{
    bool ok = true;
    for_each_lower_cover(e, [&](EdgeMask lower) {
        ok = ok && std::binary_search(chosen_.begin(), chosen_.end(), lower);
    });
    return ok;
}

bool EnumerationCursor::owns_node()
{
    return (split_nodes_++ % shard_count_) == shard_;
}

std::optional<UniformHypergraph> EnumerationCursor::next()
{
    if (done_)
        return std::nullopt;
    if (!started_) {
        started_ = true;
        if (m_ == 0) {
            done_ = true;
            if (!owns_node())
                return std::nullopt;
            ++yielded_;
            return UniformHypergraph(r_, nmax_, std::vector<EdgeMask>{});
        }
    } else if (!chosen_.empty()) {
        chosen_.pop_back(); // leave the leaf returned last time
    }

    while (true) {
        const std::size_t depth = chosen_.size();
        const std::size_t still_needed = m_ - depth;
        bool advanced = false;
        for (std::size_t k = resume_[depth]; k + still_needed <= candidates_.size(); ++k) {
            if (!lower_covers_chosen(candidates_[k]))
                continue;
            resume_[depth] = k + 1;
            chosen_.push_back(candidates_[k]);
            if (depth + 1 == split_depth_ && !owns_node()) {
                chosen_.pop_back();
                continue;
            }
            advanced = true;
            break;
        }
        if (advanced) {
            if (chosen_.size() == m_) {
                ++yielded_;
                return UniformHypergraph(r_, nmax_, chosen_);
            }
            resume_[chosen_.size()] = resume_[depth];
            continue;
        }
        if (depth == 0) {
            done_ = true;
            return std::nullopt;
        }
        chosen_.pop_back();
    }
}

std::vector<UniformHypergraph> enumerate_left_compressed(int r, std::size_t m, int nmax)
{
    std::vector<UniformHypergraph> out;
    for_each_left_compressed(r, m, nmax, [&](const UniformHypergraph& g) {
        out.push_back(g);
        return true;
    });
    return out;
}

std::size_t for_each_left_compressed(int r, std::size_t m, int nmax,
                                     const std::function<bool(const UniformHypergraph&)>& visit)
{
    EnumerationCursor cursor(r, m, nmax);
    std::size_t count = 0;
    while (auto g = cursor.next()) {
        ++count;
        if (!visit(*g))
            break;
    }
    return count;
}

} // namespace hlag
