#include "fanograph/g_graph.hpp"

#include <functional>
#include <stdexcept>

#include "fanograph/automorphism.hpp"
#include "fanograph/reference_graphs.hpp"

namespace fanograph {

namespace {
constexpr int kOrder = 42;
std::size_t slot(int u, int v) { return static_cast<std::size_t>(u) * kOrder + static_cast<std::size_t>(v); }
}  // namespace

std::string WeakColor::to_string() const { return std::to_string(point.value()) + letter(position); }
std::string WeakColor::label() const { return std::to_string(point.value()) + "_" + letter(position); }

bool pencils_adjacent(const OrderedPencil& v, const OrderedPencil& w) {
  if (v.base == w.base) return false;
  for (int i = 0; i < 3; ++i)
    if (popcount(static_cast<PointSet>(v.pairs[i] & w.pairs[i])) != 1) return false;
  return true;
}

OrderedLine compute_strong_color(const OrderedPencil& v, const OrderedPencil& w) {
  if (!pencils_adjacent(v, w))
    throw std::invalid_argument("strong colour of non-adjacent pair " + v.long_name() + " " + w.long_name());
  OrderedLine out{};
  for (int i = 0; i < 3; ++i) out.entries[i] = points_of(static_cast<PointSet>(v.pairs[i] & w.pairs[i])).front();
  try {
    (void)out.line();
  } catch (const std::invalid_argument&) {
    throw std::logic_error("intersection points do not form a line: " + out.to_string());
  }
  return out;
}

WeakColor compute_weak_color(const OrderedPencil& v, const OrderedPencil& w) {
  if (!pencils_adjacent(v, w))
    throw std::invalid_argument("weak colour of non-adjacent pair " + v.long_name() + " " + w.long_name());
  std::optional<WeakColor> found;
  for (Position j : kPositions) {
    if (!(w.pair(j) & v.base.bit()) || !(v.pair(j) & w.base.bit())) continue;
    if (found) throw std::logic_error("weak colour position is not unique for " + v.long_name() + " " + w.long_name());
    PointSet common = static_cast<PointSet>(v.pair(j) & w.pair(j));
    if (popcount(common) != 1) throw std::logic_error("weak colour point is not unique");
    Point q = points_of(common).front();
    if (q != third_point(v.base, w.base)) throw std::logic_error("weak colour point is off the line pp'");
    found = WeakColor{q, j};
  }
  if (!found) throw std::logic_error("no weak colour position for " + v.long_name() + " " + w.long_name());
  return *found;
}

ColoredG::ColoredG()
    : graph_(kOrder),
      strong_(static_cast<std::size_t>(kOrder) * kOrder),
      weak_(static_cast<std::size_t>(kOrder) * kOrder) {
  std::vector<std::string> names;
  for (int v = 0; v < kOrder; ++v) names.push_back(short_name(v));
  graph_.set_names(std::move(names));
  for (int u = 0; u < kOrder; ++u)
    for (int v = u + 1; v < kOrder; ++v) {
      const auto& pu = pencil_of(u);
      const auto& pv = pencil_of(v);
      if (!pencils_adjacent(pu, pv)) continue;
      graph_.add_edge(u, v);
      OrderedLine s = compute_strong_color(pu, pv);
      if (!(s == compute_strong_color(pv, pu))) throw std::logic_error("strong colour depends on endpoint order");
      WeakColor w = compute_weak_color(pu, pv);
      if (!(w == compute_weak_color(pv, pu))) throw std::logic_error("weak colour depends on endpoint order");
      strong_[slot(u, v)] = strong_[slot(v, u)] = s;
      weak_[slot(u, v)] = weak_[slot(v, u)] = w;
    }
}

const OrderedLine& ColoredG::strong(int u, int v) const {
  if (u < 0 || v < 0 || u >= kOrder || v >= kOrder || !strong_[slot(u, v)])
    throw std::invalid_argument("no edge between the given vertices");
  return *strong_[slot(u, v)];
}

const WeakColor& ColoredG::weak(int u, int v) const {
  if (u < 0 || v < 0 || u >= kOrder || v >= kOrder || !weak_[slot(u, v)])
    throw std::invalid_argument("no edge between the given vertices");
  return *weak_[slot(u, v)];
}

const ColoredG& g_graph() {
  static const ColoredG g;
  return g;
}

DualPresentation build_g_dual() {
  const auto& ols = ordered_lines();
  DualPresentation dual{Graph(kOrder), std::vector<int>(kOrder, -1)};
  std::vector<std::string> names;
  for (int x = 0; x < kOrder; ++x) {
    names.push_back(ols[x].to_string());
    for (int y = x + 1; y < kOrder; ++y) {
      int agree = 0;
      for (int i = 0; i < 3; ++i) agree += ols[x].entries[i] == ols[y].entries[i];
      if (agree == 1 && ols[x].line() != ols[y].line()) dual.graph.add_edge(x, y);
    }
  }
  dual.graph.set_names(std::move(names));

  for (int v = 0; v < kOrder; ++v) {
    const auto& pv = pencil_of(v);
    OrderedLine l{};
    for (Position j : kPositions) l.entries[index(j)] = phi_inv(pv.line(j));
    dual.to_g[ordered_line_id(l)] = v;
  }
  if (!is_isomorphism(dual.graph, g_graph().graph(), dual.to_g))
    throw std::logic_error("duality map does not carry the ordered-line graph onto G");
  return dual;
}

QuotientCertificate quotient_unordered() {
  const Graph& g = g_graph().graph();
  QuotientCertificate cert;
  cert.fibers.assign(7, {});
  for (int v = 0; v < kOrder; ++v) cert.fibers[pencil_of(v).base.value() - 1].push_back(v);
  cert.fibers_have_size_6 = true;
  for (const auto& f : cert.fibers)
    if (f.size() != 6) cert.fibers_have_size_6 = false;
  if (!cert.fibers_have_size_6) cert.failure = "fiber size";

  cert.quotient = Graph(7);
  std::vector<std::string> names;
  for (int p = 1; p <= 7; ++p) names.push_back(std::to_string(p));
  cert.quotient.set_names(std::move(names));
  std::vector<int> between(49, 0);
  for (auto [u, v] : g.edges()) {
    int a = pencil_of(u).base.value() - 1, b = pencil_of(v).base.value() - 1;
    ++between[a * 7 + b];
    ++between[b * 7 + a];
  }
  bool divisible = true;
  for (int a = 0; a < 7; ++a)
    for (int b = a + 1; b < 7; ++b) {
      int count = between[a * 7 + b];
      if (count % 6 != 0) divisible = false;
      if (count / 6 > 0) cert.quotient.add_edge(a, b, count / 6);
    }
  if (!divisible && cert.failure.empty()) cert.failure = "edge count between fibers not divisible by 6";

  cert.isomorphic_to_2k7 = divisible && find_isomorphism(cert.quotient, two_k7()).has_value();
  if (!cert.isomorphic_to_2k7 && cert.failure.empty()) cert.failure = "quotient is not 2K7";

  // Local bijection: v over p has exactly mult(p, p') neighbours over each p'.
  cert.local_bijection = divisible;
  for (int v = 0; v < kOrder && cert.local_bijection; ++v) {
    const int p = pencil_of(v).base.value() - 1;
    std::vector<int> ends(7, 0);
    for (int w : g.neighbors(v)) ++ends[pencil_of(w).base.value() - 1];
    for (int q = 0; q < 7; ++q)
      if (ends[q] != cert.quotient.multiplicity(p, q)) cert.local_bijection = false;
  }
  if (!cert.local_bijection && cert.failure.empty()) cert.failure = "edge ends are not in bijection";
  return cert;
}

std::vector<int> diameter_witness() {
  const Graph& g = g_graph().graph();
  const int diam = diameter(g).value();
  std::vector<int> path;
  for (int s = 0; s < g.order(); ++s) {
    auto dist = distances_from(g, s);
    // Only targets at distance `diam` from s; walk geodesically in id order.
    std::vector<int> to_far(static_cast<std::size_t>(g.order()), 0);
    for (int t = 0; t < g.order(); ++t) {
      if (dist[t] != diam) continue;
      auto back = distances_from(g, t);
      for (int x = 0; x < g.order(); ++x)
        if (dist[x] + back[x] == diam) to_far[x] = 1;
    }
    if (!to_far[s]) continue;
    path.assign(1, s);
    while (static_cast<int>(path.size()) <= diam) {
      int cur = path.back();
      for (int y : g.neighbors(cur))
        if (dist[y] == dist[cur] + 1 && to_far[y]) {
          path.push_back(y);
          break;
        }
    }
    return path;
  }
  return path;
}

}  // namespace fanograph
