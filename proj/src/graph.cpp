#include "fanograph/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace fanograph {

namespace {
constexpr int kBitsetLimit = 4096;
}

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (n <= kBitsetLimit) {
    words_ = (static_cast<std::size_t>(n) + 63) / 64;
    bits_.assign(words_ * static_cast<std::size_t>(n), 0);
  }
}

void Graph::add_edge(int u, int v, int count) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  if (count < 1) throw std::invalid_argument("multiplicity must be positive");
  if (adjacent(u, v)) {
    auto key = std::minmax(u, v);
    multi_[key] = multiplicity(u, v) + count;
    return;
  }
  for (auto [x, y] : {std::pair{u, v}, std::pair{v, u}}) {
    auto& row = adj_[x];
    row.insert(std::lower_bound(row.begin(), row.end(), y), y);
    if (!bits_.empty()) bits_[words_ * x + y / 64] |= std::uint64_t{1} << (y % 64);
  }
  ++edge_count_;
  if (count > 1) multi_[std::minmax(u, v)] = count;
}

bool Graph::adjacent(int u, int v) const {
  if (!bits_.empty()) return (bits_[words_ * u + v / 64] >> (v % 64)) & 1;
  const auto& row = adj_[u];
  return std::binary_search(row.begin(), row.end(), v);
}

int Graph::multiplicity(int u, int v) const {
  if (!adjacent(u, v)) return 0;
  auto it = multi_.find(std::minmax(u, v));
  return it == multi_.end() ? 1 : it->second;
}

void Graph::require_simple(const char* what) const {
  if (!is_simple()) throw std::invalid_argument(std::string(what) + " requires a simple graph");
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count_);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::induced(std::span<const int> vertices) const {
  Graph h(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (int m = multiplicity(vertices[i], vertices[j]); m > 0)
        h.add_edge(static_cast<int>(i), static_cast<int>(j), m);
  if (has_names()) {
    std::vector<std::string> names;
    for (int v : vertices) names.push_back(names_[v]);
    h.set_names(std::move(names));
  }
  return h;
}

void Graph::set_names(std::vector<std::string> names) {
  if (static_cast<int>(names.size()) != n_) throw std::invalid_argument("name count does not match order");
  names_ = std::move(names);
}

std::string Graph::name(int v) const { return names_.empty() ? std::to_string(v) : names_[v]; }

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int x : images_) {
    if (x < 0 || x >= static_cast<int>(images_.size()) || seen[x])
      throw std::invalid_argument("permutation images are not a bijection");
    seen[x] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> id(static_cast<std::size_t>(n));
  std::iota(id.begin(), id.end(), 0);
  return Permutation(std::move(id));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i) inv[images_[i]] = i;
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

std::uint64_t Permutation::element_order() const {
  std::vector<char> seen(images_.size(), 0);
  std::uint64_t order = 1;
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = 1;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.degree() != inner.degree()) throw std::invalid_argument("composing permutations of different degree");
  std::vector<int> out(static_cast<std::size_t>(inner.degree()));
  for (int i = 0; i < inner.degree(); ++i) out[i] = outer(inner(i));
  return Permutation(std::move(out));
}

std::size_t PermutationHash::operator()(const Permutation& p) const {
  std::size_t h = 1469598103934665603ull;
  for (int x : p.images()) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
  return h;
}

bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.degree() != g.order()) return false;
  return is_isomorphism(g, g, p.images());
}

bool is_isomorphism(const Graph& g1, const Graph& g2, const std::vector<int>& map) {
  if (g1.order() != g2.order() || g1.edge_count() != g2.edge_count()) return false;
  if (static_cast<int>(map.size()) != g1.order()) return false;
  std::vector<char> seen(map.size(), 0);
  for (int x : map) {
    if (x < 0 || x >= g2.order() || seen[x]) return false;
    seen[x] = 1;
  }
  // Equal edge counts plus every edge mapping onto an edge of equal
  // multiplicity makes the map an isomorphism.
  for (auto [u, v] : g1.edges())
    if (g1.multiplicity(u, v) != g2.multiplicity(map[u], map[v])) return false;
  return true;
}

std::vector<int> distances_from(const Graph& g, int source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int y : g.neighbors(x))
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
  }
  return dist;
}

std::vector<int> distance_distribution(const Graph& g, int source) {
  std::vector<int> counts;
  for (int d : distances_from(g, source)) {
    if (d < 0) continue;
    if (d >= static_cast<int>(counts.size())) counts.resize(static_cast<std::size_t>(d) + 1, 0);
    ++counts[d];
  }
  return counts;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  auto d = distances_from(g, 0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

std::optional<int> diameter(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.order(); ++v) {
    auto d = distances_from(g, v);
    for (int x : d) {
      if (x < 0) return std::nullopt;
      best = std::max(best, x);
    }
  }
  return best;
}

std::optional<int> girth(const Graph& g) {
  g.require_simple("girth");
  int best = -1;
  for (int root = 0; root < g.order(); ++root) {
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1), parent(static_cast<std::size_t>(g.order()), -1);
    std::deque<int> queue{root};
    dist[root] = 0;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      if (best > 0 && 2 * dist[x] + 1 >= best) break;
      for (int y : g.neighbors(x)) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (parent[x] != y) {
          int len = dist[x] + dist[y] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
  for (int s = 0; s < g.order(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (int y : g.neighbors(x)) {
        if (side[y] < 0) {
          side[y] = 1 - side[x];
          queue.push_back(y);
        } else if (side[y] == side[x]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<int> canonical_cycle(std::vector<int> cycle) {
  const std::size_t k = cycle.size();
  if (k == 0) return cycle;
  std::vector<int> best;
  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t start = 0; start < k; ++start) {
      std::vector<int> cand(k);
      for (std::size_t i = 0; i < k; ++i) cand[i] = cycle[(start + i) % k];
      if (best.empty() || cand < best) best = std::move(cand);
    }
    std::reverse(cycle.begin(), cycle.end());
  }
  return best;
}

std::vector<Hole> holes(const Graph& g, int k) {
  g.require_simple("holes");
  if (k < 3) throw std::invalid_argument("hole length must be at least 3");
  std::vector<Hole> out;
  std::vector<int> path;
  path.reserve(static_cast<std::size_t>(k));

  // The start vertex is the smallest on the cycle and path[1] < path[k-1],
  // which makes each cycle appear once and already in canonical form.
  std::function<void()> extend = [&] {
    const int i = static_cast<int>(path.size());
    const int start = path.front();
    const int last = path.back();
    for (int u : g.neighbors(last)) {
      if (u <= start) continue;
      if (std::find(path.begin(), path.end(), u) != path.end()) continue;
      bool ok = true;
      for (int t = 1; t + 1 < i && ok; ++t)
        if (g.adjacent(path[t], u)) ok = false;
      if (!ok) continue;
      const bool closes = g.adjacent(start, u);
      if (i == k - 1) {
        if (!closes || path[1] > u) continue;
        path.push_back(u);
        out.push_back(Hole{path});
        path.pop_back();
      } else {
        if (closes && i > 1) continue;
        path.push_back(u);
        extend();
        path.pop_back();
      }
    }
  };
  for (int s = 0; s < g.order(); ++s) {
    path.assign(1, s);
    extend();
  }
  std::sort(out.begin(), out.end());
  return out;
}

void for_each_induced_embedding(const Graph& host, const Graph& pattern,
                                const std::function<bool(const std::vector<int>&)>& visit) {
  host.require_simple("induced subgraph search");
  pattern.require_simple("induced subgraph search");
  const int k = pattern.order();
  if (k == 0 || k > host.order()) return;

  // Order pattern vertices so each one (per component) has an earlier neighbor.
  std::vector<int> order;
  std::vector<char> placed(static_cast<std::size_t>(k), 0);
  for (int s = 0; s < k; ++s) {
    if (placed[s]) continue;
    std::deque<int> queue{s};
    placed[s] = 1;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      order.push_back(x);
      for (int y : pattern.neighbors(x))
        if (!placed[y]) {
          placed[y] = 1;
          queue.push_back(y);
        }
    }
  }
  std::vector<int> anchor(static_cast<std::size_t>(k), -1);  // earlier neighbor in `order`
  for (int i = 1; i < k; ++i)
    for (int j = 0; j < i; ++j)
      if (pattern.adjacent(order[i], order[j])) {
        anchor[i] = order[j];
        break;
      }

  std::vector<int> map(static_cast<std::size_t>(k), -1);
  std::vector<char> used(static_cast<std::size_t>(host.order()), 0);
  std::vector<int> all(static_cast<std::size_t>(host.order()));
  std::iota(all.begin(), all.end(), 0);
  bool stop = false;

  std::function<void(int)> place = [&](int i) {
    if (i == k) {
      if (!visit(map)) stop = true;
      return;
    }
    const int pv = order[i];
    const std::vector<int>& cands = anchor[i] < 0 ? all : host.neighbors(map[anchor[i]]);
    for (int hv : cands) {
      if (used[hv]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        if (pattern.adjacent(pv, order[j]) != host.adjacent(hv, map[order[j]])) ok = false;
      if (!ok) continue;
      map[pv] = hv;
      used[hv] = 1;
      place(i + 1);
      used[hv] = 0;
      map[pv] = -1;
      if (stop) return;
    }
  };
  place(0);
}

std::vector<SubgraphCopy> induced_copies(const Graph& host, const Graph& pattern) {
  std::map<std::vector<int>, std::vector<int>> found;
  for_each_induced_embedding(host, pattern, [&](const std::vector<int>& map) {
    std::vector<int> key = map;
    std::sort(key.begin(), key.end());
    found.try_emplace(std::move(key), map);
    return true;
  });
  std::vector<SubgraphCopy> out;
  out.reserve(found.size());
  for (auto& [verts, map] : found) out.push_back(SubgraphCopy{"", verts, map});
  return out;
}

}  // namespace fanograph
