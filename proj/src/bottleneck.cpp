#include <algorithm>
#include <cstdlib>
#include <limits>
#include <queue>

#include "hrnflow/persistence.hpp"

namespace hrnflow {

Distance Distance::from_half_units(std::int64_t half_units) {
    if (half_units < 0) {
        throw DomainError("distances are nonnegative");
    }
    Distance d;
    d.half_units_ = half_units;
    return d;
}

Distance Distance::infinity() {
    Distance d;
    d.infinite_ = true;
    return d;
}

std::int64_t Distance::half_units() const {
    if (infinite_) {
        throw DomainError("infinite distance has no finite value");
    }
    return half_units_;
}

double Distance::value() const {
    return infinite_ ? std::numeric_limits<double>::infinity() : static_cast<double>(half_units_) / 2.0;
}

std::string Distance::to_string() const {
    if (infinite_) {
        return "inf";
    }
    std::string out = std::to_string(half_units_ / 2);
    if (half_units_ % 2 != 0) {
        out += ".5";
    }
    return out;
}

namespace {

constexpr std::int64_t kNoEdge = -1;

// Hopcroft-Karp on a dense bipartite graph with n vertices per side, using
// only edges whose cost is <= threshold.
class ThresholdMatcher {
public:
    explicit ThresholdMatcher(const std::vector<std::vector<std::int64_t>>& cost)
        : cost_(cost), n_(cost.size()) {}

    bool has_perfect_matching(std::int64_t threshold) {
        threshold_ = threshold;
        match_left_.assign(n_, kFree);
        match_right_.assign(n_, kFree);
        std::size_t matched = 0;
        while (bfs()) {
            for (std::size_t u = 0; u < n_; ++u) {
                if (match_left_[u] == kFree && dfs(u)) {
                    ++matched;
                }
            }
        }
        return matched == n_;
    }

private:
    static constexpr std::size_t kFree = std::numeric_limits<std::size_t>::max();
    static constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

    bool usable(std::size_t u, std::size_t v) const {
        return cost_[u][v] != kNoEdge && cost_[u][v] <= threshold_;
    }

    bool bfs() {
        layer_.assign(n_, kUnreached);
        std::queue<std::size_t> queue;
        for (std::size_t u = 0; u < n_; ++u) {
            if (match_left_[u] == kFree) {
                layer_[u] = 0;
                queue.push(u);
            }
        }
        bool reached_free = false;
        while (!queue.empty()) {
            const std::size_t u = queue.front();
            queue.pop();
            for (std::size_t v = 0; v < n_; ++v) {
                if (!usable(u, v)) {
                    continue;
                }
                const std::size_t w = match_right_[v];
                if (w == kFree) {
                    reached_free = true;
                } else if (layer_[w] == kUnreached) {
                    layer_[w] = layer_[u] + 1;
                    queue.push(w);
                }
            }
        }
        return reached_free;
    }

    bool dfs(std::size_t u) {
        for (std::size_t v = 0; v < n_; ++v) {
            if (!usable(u, v)) {
                continue;
            }
            const std::size_t w = match_right_[v];
            if (w == kFree || (layer_[w] == layer_[u] + 1 && dfs(w))) {
                match_left_[u] = v;
                match_right_[v] = u;
                return true;
            }
        }
        layer_[u] = kUnreached;
        return false;
    }

    const std::vector<std::vector<std::int64_t>>& cost_;
    std::size_t n_;
    std::int64_t threshold_ = 0;
    std::vector<std::size_t> match_left_;
    std::vector<std::size_t> match_right_;
    std::vector<std::size_t> layer_;
};

struct Expanded {
    std::vector<std::pair<std::int64_t, std::int64_t>> proper;
    std::vector<std::int64_t> infinite_births;
};

Expanded expand(const ErrorDiagram& d) {
    Expanded out;
    for (const auto& p : d.points()) {
        for (Dim c = 0; c < p.multiplicity; ++c) {
            if (p.at_infinity()) {
                out.infinite_births.push_back(p.birth);
            } else {
                out.proper.emplace_back(p.birth, p.death.value());
            }
        }
    }
    return out;
}

// Costs in half units: the L-infinity distance doubled, and the distance to
// the diagonal |d - b| / 2 doubled.
std::int64_t pair_cost(std::pair<std::int64_t, std::int64_t> a, std::pair<std::int64_t, std::int64_t> b) {
    return 2 * std::max(std::llabs(a.first - b.first), std::llabs(a.second - b.second));
}

std::int64_t diagonal_cost(std::pair<std::int64_t, std::int64_t> a) {
    return std::llabs(a.second - a.first);
}

} // namespace

Distance bottleneck_distance(const ErrorDiagram& a, const ErrorDiagram& b) {
    const Expanded left = expand(a);
    const Expanded right = expand(b);
    if (left.infinite_births.size() != right.infinite_births.size()) {
        return Distance::infinity();
    }

    // Left side: a's proper points, a's infinite points, one diagonal slot
    // per proper point of b. Right side mirrors it.
    const std::size_t pa = left.proper.size();
    const std::size_t pb = right.proper.size();
    const std::size_t inf_count = left.infinite_births.size();
    const std::size_t n = pa + inf_count + pb;
    if (n == 0) {
        return Distance::from_half_units(0);
    }

    std::vector<std::vector<std::int64_t>> cost(n, std::vector<std::int64_t>(n, kNoEdge));
    for (std::size_t i = 0; i < pa; ++i) {
        for (std::size_t j = 0; j < pb; ++j) {
            cost[i][j] = pair_cost(left.proper[i], right.proper[j]);
        }
        // a's point i to its own diagonal projection on the right.
        cost[i][pb + inf_count + i] = diagonal_cost(left.proper[i]);
    }
    for (std::size_t i = 0; i < inf_count; ++i) {
        for (std::size_t j = 0; j < inf_count; ++j) {
            cost[pa + i][pb + j] = 2 * std::llabs(left.infinite_births[i] - right.infinite_births[j]);
        }
    }
    for (std::size_t s = 0; s < pb; ++s) {
        // Diagonal slot for b's point s pairs with that point, or with any
        // diagonal slot on the other side at no cost.
        cost[pa + inf_count + s][s] = diagonal_cost(right.proper[s]);
        for (std::size_t t = 0; t < pa; ++t) {
            cost[pa + inf_count + s][pb + inf_count + t] = 0;
        }
    }

    std::vector<std::int64_t> candidates{0};
    for (const auto& row : cost) {
        for (std::int64_t c : row) {
            if (c != kNoEdge) {
                candidates.push_back(c);
            }
        }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    ThresholdMatcher matcher(cost);
    std::size_t lo = 0;
    std::size_t hi = candidates.size() - 1;
    if (!matcher.has_perfect_matching(candidates[hi])) {
        return Distance::infinity();
    }
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (matcher.has_perfect_matching(candidates[mid])) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    return Distance::from_half_units(candidates[lo]);
}

} // namespace hrnflow
