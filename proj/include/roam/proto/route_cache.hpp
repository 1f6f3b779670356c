#ifndef ROAM_PROTO_ROUTE_CACHE_HPP_
#define ROAM_PROTO_ROUTE_CACHE_HPP_

#include <optional>
#include <vector>

namespace roam::proto {

bool has_node_repeats(const std::vector<int>& route);

// DSR route cache: complete source routes starting at the owning node,
// kept in insertion order. Entries have no age-out; they die by link
// feedback and RERR purges.
class RouteCache {
  public:
    explicit RouteCache(int owner, std::size_t capacity = 128)
        : owner_(owner), capacity_(capacity) {}

    // Stores any suffix of `path` (either orientation) that begins at the
    // owner. Returns true if something new was cached.
    bool learn(const std::vector<int>& path);

    // Inserts a route verbatim; path[0] must be the owner and the path
    // must be loop-free.
    bool insert(std::vector<int> path);

    // Shortest cached path owner..dest; dest may sit mid-route. Ties go
    // to the oldest entry so lookups are deterministic.
    std::optional<std::vector<int>> lookup(int dest) const;

    // Drops every route containing the undirected link (a, b).
    void purge_link(int a, int b);

    std::size_t size() const { return routes_.size(); }
    const std::vector<std::vector<int>>& routes() const { return routes_; }

  private:
    int owner_;
    std::size_t capacity_;
    std::vector<std::vector<int>> routes_;
};

}  // namespace roam::proto

#endif  // ROAM_PROTO_ROUTE_CACHE_HPP_
