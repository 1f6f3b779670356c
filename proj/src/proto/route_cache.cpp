#include "roam/proto/route_cache.hpp"

#include <algorithm>
#include <set>

namespace roam::proto {

bool has_node_repeats(const std::vector<int>& route) {
    std::set<int> seen;
    for (int n : route)
        if (!seen.insert(n).second) return true;
    return false;
}

bool RouteCache::insert(std::vector<int> path) {
    if (path.size() < 2 || path.front() != owner_) return false;
    if (has_node_repeats(path)) return false;
    if (std::find(routes_.begin(), routes_.end(), path) != routes_.end()) return false;
    if (routes_.size() >= capacity_) routes_.erase(routes_.begin());
    routes_.push_back(std::move(path));
    return true;
}

bool RouteCache::learn(const std::vector<int>& path) {
    bool learned = false;
    auto try_suffix = [&](const std::vector<int>& p) {
        auto it = std::find(p.begin(), p.end(), owner_);
        if (it == p.end()) return;
        std::vector<int> suffix(it, p.end());
        if (suffix.size() >= 2 && !has_node_repeats(suffix)) learned |= insert(std::move(suffix));
    };
    try_suffix(path);
    std::vector<int> reversed(path.rbegin(), path.rend());
    try_suffix(reversed);
    return learned;
}

std::optional<std::vector<int>> RouteCache::lookup(int dest) const {
    const std::vector<int>* best = nullptr;
    std::size_t best_len = 0;
    for (const auto& r : routes_) {
        auto it = std::find(r.begin() + 1, r.end(), dest);
        if (it == r.end()) continue;
        const std::size_t len = static_cast<std::size_t>(it - r.begin()) + 1;
        if (!best || len < best_len) {
            best = &r;
            best_len = len;
        }
    }
    if (!best) return std::nullopt;
    return std::vector<int>(best->begin(), best->begin() + static_cast<long>(best_len));
}

void RouteCache::purge_link(int a, int b) {
    routes_.erase(std::remove_if(routes_.begin(), routes_.end(),
                                 [&](const std::vector<int>& r) {
                                     for (std::size_t i = 0; i + 1 < r.size(); ++i) {
                                         if ((r[i] == a && r[i + 1] == b) ||
                                             (r[i] == b && r[i + 1] == a))
                                             return true;
                                     }
                                     return false;
                                 }),
                  routes_.end());
}

}  // namespace roam::proto
