#include "fanograph/generalized.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace fanograph {

namespace {

using Mask = std::uint64_t;  // bit i set for point i

Mask span(const std::vector<int>& gens) {
  std::vector<int> elems{0};
  for (int g : gens) {
    if (std::find(elems.begin(), elems.end(), g) != elems.end()) continue;
    const std::size_t n = elems.size();
    for (std::size_t i = 0; i < n; ++i) elems.push_back(elems[i] ^ g);
  }
  Mask m = 0;
  for (int e : elems)
    if (e) m |= Mask{1} << e;
  return m;
}

int rank(std::vector<int> vecs) {
  int rk = 0;
  for (int bit = 5; bit >= 0; --bit) {
    auto it = std::find_if(vecs.begin() + rk, vecs.end(), [&](int v) { return v >> bit & 1; });
    if (it == vecs.end()) continue;
    std::iter_swap(vecs.begin() + rk, it);
    for (std::size_t i = 0; i < vecs.size(); ++i)
      if (static_cast<int>(i) != rk && (vecs[i] >> bit & 1)) vecs[i] ^= vecs[rk];
    ++rk;
  }
  return rk;
}

std::vector<int> points_in(Mask m) {
  std::vector<int> out;
  for (int i = 1; i < 64; ++i)
    if (m >> i & 1) out.push_back(i);
  return out;
}

// All subspaces of projective dimension sigma through p, ordered by point list.
std::vector<Mask> subspaces_through(int p, int sigma, int npoints) {
  std::set<Mask> found;
  std::vector<std::vector<int>> frontier{{p}};
  for (int step = 0; step < sigma; ++step) {
    std::set<Mask> seen;
    std::vector<std::vector<int>> next;
    for (const auto& gens : frontier) {
      const Mask s = span(gens);
      for (int q = 1; q <= npoints; ++q) {
        if (s >> q & 1) continue;
        auto g2 = gens;
        g2.push_back(q);
        if (seen.insert(span(g2)).second) next.push_back(std::move(g2));
      }
    }
    frontier = std::move(next);
  }
  for (const auto& gens : frontier) found.insert(span(gens));
  std::vector<Mask> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) { return points_in(a) < points_in(b); });
  return out;
}

std::uint64_t factorial(int k) {
  std::uint64_t f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

struct Key {
  int point;
  std::vector<int> order;  // indices into the subspaces through `point`
  auto operator<=>(const Key&) const = default;
};

class Builder {
 public:
  Builder(int r, int sigma) : r_(r), npoints_((1 << r) - 1), through_(npoints_ + 1) {
    for (int p = 1; p <= npoints_; ++p) through_[p] = subspaces_through(p, sigma, npoints_);
  }

  int k() const { return static_cast<int>(through_[1].size()); }

  std::vector<Key> neighbors(const Key& v) const {
    std::vector<Key> out;
    for (int q = 1; q <= npoints_; ++q) {
      if (q == v.point) continue;
      Key w{q, std::vector<int>(k(), -1)};
      std::vector<bool> used(k(), false);
      std::vector<int> meets;
      extend(v, w, used, meets, 0, out);
    }
    return out;
  }

  std::string name(const Key& v) const {
    const bool digits = npoints_ <= 9;
    auto pts = [&](Mask m) {
      std::string s;
      for (int x : points_in(m)) {
        if (x == v.point) continue;
        if (!s.empty() && !digits) s += '.';
        s += std::to_string(x);
      }
      return s;
    };
    std::string s = "(" + std::to_string(v.point);
    for (int i : v.order) s += "," + pts(through_[v.point][i]);
    return s + ")";
  }

 private:
  void extend(const Key& v, Key& w, std::vector<bool>& used, std::vector<int>& meets, int pos,
              std::vector<Key>& out) const {
    if (pos == k()) {
      if (rank(meets) == r_ - 1) out.push_back(w);
      return;
    }
    // As with pairs in the Fano case, base points are left out.
    const Mask s = through_[v.point][v.order[pos]] & ~(Mask{1} << v.point);
    for (int t = 0; t < k(); ++t) {
      if (used[t]) continue;
      const Mask m = s & through_[w.point][t] & ~(Mask{1} << w.point);
      if (std::popcount(m) != 1) continue;
      meets.push_back(std::countr_zero(m));
      if (rank(meets) <= r_ - 1) {
        used[t] = true;
        w.order[pos] = t;
        extend(v, w, used, meets, pos + 1, out);
        used[t] = false;
      }
      meets.pop_back();
    }
  }

  int r_;
  int npoints_;
  std::vector<std::vector<Mask>> through_;
};

}  // namespace

GeneralizedResult generalized_build(int r, int sigma) {
  if (r < 3 || r > 5) throw std::invalid_argument("generalize: r must satisfy 3 <= r <= 5");
  if (sigma <= 0 || sigma >= r - 1) throw std::invalid_argument("generalize: sigma must satisfy 0 < sigma < r - 1");
  Builder b(r, sigma);
  if (b.k() > 8)
    throw std::invalid_argument("generalize: (r, sigma) = (" + std::to_string(r) + ", " + std::to_string(sigma) +
                                ") has " + std::to_string(b.k()) +
                                " subspaces through a point; orderings beyond 8! are not supported");

  GeneralizedResult res;
  res.r = r;
  res.sigma = sigma;
  res.points = (1 << r) - 1;
  res.subspaces_per_point = b.k();
  res.universe = static_cast<std::uint64_t>(res.points) * factorial(b.k());

  Key start{1, std::vector<int>(b.k())};
  std::iota(start.order.begin(), start.order.end(), 0);
  std::map<Key, std::vector<Key>> adj;
  std::deque<Key> queue{start};
  adj[start];
  while (!queue.empty()) {
    Key v = queue.front();
    queue.pop_front();
    auto ns = b.neighbors(v);
    for (const auto& w : ns)
      if (!adj.count(w)) {
        adj[w];
        queue.push_back(w);
      }
    adj[v] = std::move(ns);
  }

  // std::map iterates keys in lexicographic order, which fixes the ids.
  std::map<Key, int> id;
  std::vector<std::string> names;
  for (const auto& [v, ns] : adj) {
    id.emplace(v, static_cast<int>(names.size()));
    names.push_back(b.name(v));
  }
  Graph g(static_cast<int>(names.size()));
  for (const auto& [v, ns] : adj)
    for (const auto& w : ns) {
      const auto& back = adj.at(w);
      if (std::find(back.begin(), back.end(), v) == back.end())
        throw std::logic_error("generalized adjacency is not symmetric");
      if (id[v] < id[w]) g.add_edge(id[v], id[w]);
    }
  g.set_names(std::move(names));
  g.require_simple("generalized graph");

  std::map<int, int> degs;
  for (int v = 0; v < g.order(); ++v) ++degs[g.degree(v)];
  res.degree_counts.assign(degs.begin(), degs.end());
  res.diameter = diameter(g);
  res.component = std::move(g);
  return res;
}

std::string to_json_text(const GeneralizedResult& res) {
  nlohmann::ordered_json j;
  j["r"] = res.r;
  j["sigma"] = res.sigma;
  j["points"] = res.points;
  j["subspaces_per_point"] = res.subspaces_per_point;
  j["universe"] = res.universe;
  j["component_order"] = res.component.order();
  j["component_edges"] = res.component.edge_count();
  auto& d = j["degree_counts"] = nlohmann::ordered_json::array();
  for (auto [deg, n] : res.degree_counts) d.push_back({{"degree", deg}, {"vertices", n}});
  j["diameter"] = res.diameter ? nlohmann::ordered_json(*res.diameter) : nlohmann::ordered_json(nullptr);
  j["first_vertex"] = res.component.order() ? res.component.name(0) : "";
  return j.dump(2);
}

}  // namespace fanograph
