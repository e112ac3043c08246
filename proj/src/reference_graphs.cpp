#include "fanograph/reference_graphs.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

namespace fanograph {

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph k4() { return complete_graph(4); }
Graph k3() { return complete_graph(3); }
Graph k2() { return complete_graph(2); }

Graph k222() {
  Graph g(6);
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v)
      if (u / 2 != v / 2) g.add_edge(u, v);
  return g;
}

Graph k22() { return cycle_graph(4); }

Graph cycle_graph(int k) {
  if (k < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g(k);
  for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
  return g;
}

Graph line_graph_of_cube(int d) {
  if (d < 3 || d > 10) throw std::invalid_argument("line_graph_of_cube needs 3 <= d <= 10");
  // Cube edge (x, i) joins x and x ^ (1 << i), with bit i of x clear.
  std::vector<std::pair<int, int>> cube_edges;
  for (int x = 0; x < (1 << d); ++x)
    for (int i = 0; i < d; ++i)
      if (!(x & (1 << i))) cube_edges.emplace_back(x, x | (1 << i));
  const int n = static_cast<int>(cube_edges.size());
  Graph g(n);
  std::vector<std::string> names;
  for (int a = 0; a < n; ++a) {
    names.push_back(std::to_string(cube_edges[a].first) + "-" + std::to_string(cube_edges[a].second));
    for (int b = a + 1; b < n; ++b) {
      auto [p, q] = cube_edges[a];
      auto [r, s] = cube_edges[b];
      if (p == r || p == s || q == r || q == s) g.add_edge(a, b);
    }
  }
  g.set_names(std::move(names));
  return g;
}

Graph cuboctahedron() {
  std::vector<std::array<int, 3>> pts;
  for (int zero = 0; zero < 3; ++zero)
    for (int s1 : {-1, 1})
      for (int s2 : {-1, 1}) {
        std::array<int, 3> p{};
        int k = 0;
        for (int i = 0; i < 3; ++i) p[i] = i == zero ? 0 : (k++ == 0 ? s1 : s2);
        pts.push_back(p);
      }
  Graph g(static_cast<int>(pts.size()));
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b) {
      int d2 = 0;
      for (int i = 0; i < 3; ++i) d2 += (pts[a][i] - pts[b][i]) * (pts[a][i] - pts[b][i]);
      if (d2 == 2) g.add_edge(static_cast<int>(a), static_cast<int>(b));
    }
  return g;
}

Graph st4() {
  std::vector<std::array<int, 4>> perms;
  std::array<int, 4> p = {0, 1, 2, 3};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  auto id = [&](const std::array<int, 4>& q) {
    return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  Graph g(24);
  std::vector<std::string> names;
  for (int v = 0; v < 24; ++v) {
    std::string name;
    for (int x : perms[v]) name += static_cast<char>('0' + x);
    names.push_back(name);
    for (int j = 1; j < 4; ++j) {
      auto q = perms[v];
      std::swap(q[0], q[j]);
      int w = id(q);
      if (v < w) g.add_edge(v, w);
    }
  }
  g.set_names(std::move(names));
  return g;
}

Graph two_k7() {
  Graph g(7);
  for (int u = 0; u < 7; ++u)
    for (int v = u + 1; v < 7; ++v) g.add_edge(u, v, 2);
  return g;
}

Graph lambda_hemi() {
  // Pairs of vertex names j_i, encoded as 4*j + i.
  static constexpr std::array<std::array<int, 2>, 24> kEdges = {{
      {0, 1}, {0, 3}, {0, 5}, {0, 11}, {1, 2}, {1, 4},   {1, 10},  {2, 3},
      {2, 7}, {2, 9}, {3, 6}, {3, 8},  {4, 5}, {4, 6},   {4, 10},  {5, 7},
      {5, 11}, {6, 7}, {6, 8}, {7, 9}, {8, 10}, {8, 11}, {9, 10}, {9, 11},
  }};
  Graph g(12);
  for (auto [u, v] : kEdges) g.add_edge(u, v);
  std::vector<std::string> names;
  for (char j : {'a', 'b', 'c'})
    for (int i = 0; i < 4; ++i) names.push_back(std::string(1, j) + std::to_string(i));
  g.set_names(std::move(names));
  return g;
}

}  // namespace fanograph
