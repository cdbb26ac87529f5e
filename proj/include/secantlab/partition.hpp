/*
   Copyright 2026 The secantlab authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SECANTLAB_PARTITION_HPP
#define SECANTLAB_PARTITION_HPP

#include <algorithm>
#include <functional>
#include <numeric>
#include <ostream>
#include <set>
#include <stdexcept>
#include <vector>

namespace secantlab {

struct NotReachableError : std::runtime_error {
    NotReachableError() : std::runtime_error("partition is not a degeneration of the given one") {}
};

/// Weakly decreasing list of positive integers. The empty partition (weight
/// zero) is allowed; it is the cycle type of the empty scheme.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : p_(parts) { normalize_(); }
    explicit Partition(std::vector<int> parts) : p_(std::move(parts)) { normalize_(); }

    const std::vector<int>& parts() const { return p_; }
    int weight() const { return std::accumulate(p_.begin(), p_.end(), 0); }
    int block_count() const { return static_cast<int>(p_.size()); }
    bool empty() const { return p_.empty(); }

    friend bool operator==(const Partition& a, const Partition& b) { return a.p_ == b.p_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b) { return a.p_ < b.p_; }

    friend std::ostream& operator<<(std::ostream& os, const Partition& p) {
        os << "(";
        for (size_t i = 0; i < p.p_.size(); ++i) os << (i ? "," : "") << p.p_[i];
        return os << ")";
    }

private:
    void normalize_() {
        for (int x : p_)
            if (x <= 0) throw std::invalid_argument("Partition: parts must be positive");
        std::sort(p_.begin(), p_.end(), std::greater<int>());
    }

    std::vector<int> p_;
};

/// All partitions of the given weight, largest part first within each.
inline std::vector<Partition> partitions_of(int weight) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            cur.push_back(part);
            rec(remaining - part, part);
            cur.pop_back();
        }
    };
    if (weight >= 0) rec(weight, weight == 0 ? 1 : weight);
    return out;
}

namespace detail {
// Can the multiset `fine` be split into groups whose sums are exactly the
// blocks of `coarse`? Backtracking on the largest remaining coarse block.
inline bool subdivides(std::vector<int> fine, std::vector<int> coarse) {
    if (coarse.empty()) return fine.empty();
    int target = coarse.back();
    coarse.pop_back();
    // Choose a subset of `fine` summing to target; recurse on the rest.
    const size_t n = fine.size();
    std::function<bool(size_t, int, std::vector<bool>&)> pick = [&](size_t idx, int remaining,
                                                                    std::vector<bool>& used) -> bool {
        if (remaining == 0) {
            std::vector<int> rest;
            for (size_t i = 0; i < n; ++i)
                if (!used[i]) rest.push_back(fine[i]);
            return subdivides(rest, coarse);
        }
        if (idx >= n) return false;
        for (size_t i = idx; i < n; ++i) {
            if (used[i] || fine[i] > remaining) continue;
            if (i > idx && fine[i] == fine[i - 1] && !used[i - 1]) continue;  // skip equal choices
            used[i] = true;
            if (pick(i + 1, remaining - fine[i], used)) return true;
            used[i] = false;
        }
        return false;
    };
    std::vector<bool> used(n, false);
    std::sort(fine.begin(), fine.end());
    return pick(0, target, used);
}
}  // namespace detail

/// True iff `fine` is obtained from `coarse` by subdividing blocks into
/// positive summands. Weights must agree; every partition refines itself.
inline bool refines(const Partition& fine, const Partition& coarse) {
    if (fine.weight() != coarse.weight()) return false;
    if (fine.block_count() < coarse.block_count()) return false;
    std::vector<int> f = fine.parts(), c = coarse.parts();
    std::sort(c.begin(), c.end());
    return detail::subdivides(f, c);
}

/// True iff `target` is reachable from `start` by repeatedly uniting two
/// blocks or increasing a block by one. Equal partitions are reachable.
inline bool degeneration_reachable(const Partition& start, const Partition& target) {
    if (target.weight() < start.weight()) return false;
    if (start == target) return true;
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> frontier{start.parts()};
    seen.insert(start.parts());
    const int max_weight = target.weight();
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& p : frontier) {
            int weight = std::accumulate(p.begin(), p.end(), 0);
            // Unite blocks i and j.
            for (size_t i = 0; i < p.size(); ++i) {
                for (size_t j = i + 1; j < p.size(); ++j) {
                    std::vector<int> q;
                    for (size_t l = 0; l < p.size(); ++l)
                        if (l != i && l != j) q.push_back(p[l]);
                    q.push_back(p[i] + p[j]);
                    std::sort(q.begin(), q.end(), std::greater<int>());
                    if (q == target.parts()) return true;
                    if (seen.insert(q).second) next.push_back(std::move(q));
                }
            }
            // Grow one block by one.
            if (weight < max_weight) {
                for (size_t i = 0; i < p.size(); ++i) {
                    std::vector<int> q = p;
                    q[i] += 1;
                    std::sort(q.begin(), q.end(), std::greater<int>());
                    if (q == target.parts()) return true;
                    if (seen.insert(q).second) next.push_back(std::move(q));
                }
            }
        }
        frontier = std::move(next);
    }
    return false;
}

}  // namespace secantlab

#endif
