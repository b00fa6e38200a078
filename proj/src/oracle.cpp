#include "cyclespec/oracle.hpp"

#include <cstdlib>
#include <string>
#include <vector>

#include "cyclespec/errors.hpp"
#include "cyclespec/queries.hpp"

namespace cyclespec {
namespace {

inline std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

class CycleSearch {
public:
    CycleSearch(const Graph& g, std::uint64_t budget)
        : g_(g), budget_(budget), dist_(idx(g.vertex_count())), on_path_(idx(g.vertex_count()), 0) {}

    bool has_cycle_of_length(int len) {
        for (Vertex root = 0; root + len <= g_.vertex_count(); ++root) {
            distances_above(root);
            path_.assign(1, root);
            on_path_[idx(root)] = 1;
            bool hit = extend(len);
            on_path_[idx(root)] = 0;
            if (hit) return true;
        }
        return false;
    }

private:
    // Distances from root within vertices >= root.
    void distances_above(Vertex root) {
        std::fill(dist_.begin(), dist_.end(), -1);
        std::vector<Vertex> queue{root};
        dist_[idx(root)] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head)
            for (Vertex w : g_.neighbors(queue[head]))
                if (w > root && dist_[idx(w)] < 0) {
                    dist_[idx(w)] = dist_[idx(queue[head])] + 1;
                    queue.push_back(w);
                }
    }

    bool extend(int len) {
        if (++steps_ > budget_) throw BudgetExceeded("cycle oracle exceeded " + std::to_string(budget_) + " steps");
        const Vertex root = path_.front();
        const Vertex v = path_.back();
        const int t = static_cast<int>(path_.size()) - 1;
        if (t == len - 1) return path_[1] < v && g_.has_edge(v, root);
        for (Vertex w : g_.neighbors(v)) {
            if (w <= root || on_path_[idx(w)] || dist_[idx(w)] < 0) continue;
            if (t + 1 + dist_[idx(w)] > len) continue;
            path_.push_back(w);
            on_path_[idx(w)] = 1;
            bool hit = extend(len);
            on_path_[idx(w)] = 0;
            path_.pop_back();
            if (hit) return true;
        }
        return false;
    }

    const Graph& g_;
    std::uint64_t budget_;
    std::uint64_t steps_ = 0;
    std::vector<int> dist_;
    std::vector<char> on_path_;
    std::vector<Vertex> path_;
};

}  // namespace

std::uint64_t oracle_budget_from_env() {
    if (const char* env = std::getenv("CYCLESPEC_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return kDefaultOracleBudget;
}

std::set<int> brute_cycle_spectrum(const Graph& g, int max_len, std::uint64_t budget) {
    if (g.vertex_count() > 20 && max_len > 12)
        throw BudgetExceeded("cycle oracle needs n <= 20 or max_len <= 12");
    const bool bipartite = bipartition(g).is_bipartite();
    CycleSearch search(g, budget);
    std::set<int> out;
    for (int len = 3; len <= max_len && len <= g.vertex_count(); ++len) {
        if (bipartite && len % 2 == 1) continue;
        if (search.has_cycle_of_length(len)) out.insert(len);
    }
    return out;
}

std::set<int> brute_ab_path_lengths(const ChordedCycle& h, const PartitionAB& part) {
    std::set<int> out;
    for (const auto& [len, _] : path_spectrum_oracle(h, part)) out.insert(len);
    return out;
}

}  // namespace cyclespec
