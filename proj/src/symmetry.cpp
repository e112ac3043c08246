#include "fanograph/symmetry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "fanograph/automorphism.hpp"
#include "fanograph/g_graph.hpp"

namespace fanograph {

namespace {

PointSet map_set(const PointMap& phi, PointSet s) {
  PointSet out = 0;
  for (Point x : points_of(s)) out = static_cast<PointSet>(out | (1u << phi[x.value()]));
  return out;
}

PointMap point_transpositions(std::initializer_list<std::pair<int, int>> swaps) {
  PointMap m{};
  for (int i = 0; i < 8; ++i) m[i] = i;
  for (auto [x, y] : swaps) std::swap(m[x], m[y]);
  return m;
}

constexpr PositionMap kIdentityPositions = {0, 1, 2};

const std::vector<PositionMap>& position_maps() {
  static const std::vector<PositionMap> all = [] {
    std::vector<PositionMap> out;
    PositionMap p = kIdentityPositions;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
  }();
  return all;
}

// Every (phi, psi) pair keyed by its vertex permutation.
const std::unordered_map<Permutation, std::pair<PointMap, PositionMap>, PermutationHash>& decompositions() {
  static const auto table = [] {
    std::unordered_map<Permutation, std::pair<PointMap, PositionMap>, PermutationHash> out;
    for (const PointMap& phi : collineations())
      for (const PositionMap& psi : position_maps()) out.emplace(pencil_action(phi, psi), std::pair{phi, psi});
    return out;
  }();
  return table;
}

std::unordered_map<Permutation, int, PermutationHash> index_of(const std::vector<Permutation>& group) {
  std::unordered_map<Permutation, int, PermutationHash> idx;
  for (std::size_t i = 0; i < group.size(); ++i) idx.emplace(group[i], static_cast<int>(i));
  return idx;
}

std::vector<int> sorted_image(const Permutation& g, const std::vector<int>& set) {
  std::vector<int> out;
  for (int x : set) out.push_back(g(x));
  std::sort(out.begin(), out.end());
  return out;
}

CosetCorrespondence object_cosets(const std::vector<int>& object) {
  const auto group = automorphism_table().permutations();
  const auto sub = setwise_stabilizer(group, object);
  const auto cosets = left_cosets(group, sub);
  CosetCorrespondence out{sub.size(), cosets.size(), true};
  std::set<std::vector<int>> images;
  for (const auto& coset : cosets) {
    auto image = sorted_image(group[coset.front()], object);
    for (int i : coset)
      if (sorted_image(group[i], object) != image) out.bijective = false;
    if (!images.insert(image).second) out.bijective = false;
  }
  return out;
}

// Closure capped at `cap` elements; nullopt past the cap.
std::optional<std::vector<Permutation>> bounded_closure(const std::vector<Permutation>& gens, int degree,
                                                        std::size_t cap) {
  try {
    return group_closure(gens, degree, cap);
  } catch (const std::length_error&) {
    return std::nullopt;
  }
}

bool semiregular(const Permutation& p) {
  const int n = p.degree();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  int len = -1;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    int l = 0;
    for (int x = s; !seen[x]; x = p(x)) {
      seen[x] = 1;
      ++l;
    }
    if (len >= 0 && l != len) return false;
    len = l;
  }
  return true;
}

}  // namespace

Permutation pencil_action(const PointMap& phi, const PositionMap& psi) {
  std::vector<int> images(42);
  for (int v = 0; v < 42; ++v) {
    const auto& pv = pencil_of(v);
    OrderedPencil w{Point(phi[pv.base.value()]), {}};
    for (int j = 0; j < 3; ++j) w.pairs[psi[j]] = map_set(phi, pv.pairs[j]);
    images[v] = vertex_id(w);
  }
  return Permutation(std::move(images));
}

const std::vector<Generator>& printed_generators() {
  static const std::vector<Generator> gens = [] {
    const std::vector<PointMap> phis = {
        point_transpositions({{2, 3}, {6, 7}}), point_transpositions({{4, 5}, {6, 7}}),
        point_transpositions({{1, 3}, {5, 7}}), point_transpositions({{4, 6}, {5, 7}}),
        point_transpositions({{1, 2}, {5, 6}}), point_transpositions({{4, 7}, {5, 6}}),
        point_transpositions({{1, 5}, {3, 7}}), point_transpositions({{2, 6}, {3, 7}}),
        point_transpositions({{1, 4}, {2, 7}}), point_transpositions({{2, 7}, {3, 6}}),
        point_transpositions({{1, 7}, {3, 5}}), point_transpositions({{2, 4}, {3, 5}}),
        point_transpositions({{1, 6}, {3, 4}}), point_transpositions({{2, 5}, {3, 4}}),
    };
    std::vector<Generator> out;
    for (std::size_t i = 0; i < phis.size(); ++i)
      out.push_back({"tau" + std::to_string(i + 1), {pencil_action(phis[i], kIdentityPositions), phis[i],
                                                     kIdentityPositions}});
    const PointMap id = point_transpositions({});
    out.push_back({"tau15", {pencil_action(id, {2, 1, 0}), id, {2, 1, 0}}});
    out.push_back({"tau16", {pencil_action(id, {0, 2, 1}), id, {0, 2, 1}}});
    for (const auto& g : out)
      if (!is_automorphism(g_graph().graph(), g.element.perm))
        throw std::logic_error(g.name + " is not an automorphism of G");
    return out;
  }();
  return gens;
}

Permutation tau_product(std::initializer_list<int> indices) {
  Permutation out = Permutation::identity(42);
  for (int i : indices) out = compose(out, printed_generators().at(static_cast<std::size_t>(i - 1)).element.perm);
  return out;
}

GroupTable::GroupTable(std::vector<GroupElement> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end(),
            [](const GroupElement& x, const GroupElement& y) { return x.perm < y.perm; });
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i].perm, static_cast<int>(i));
}

std::vector<Permutation> GroupTable::permutations() const {
  std::vector<Permutation> out;
  out.reserve(elements_.size());
  for (const auto& e : elements_) out.push_back(e.perm);
  return out;
}

int GroupTable::find(const Permutation& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

const GroupTable& automorphism_table() {
  static const GroupTable table = [] {
    std::vector<Permutation> gens;
    for (const auto& g : printed_generators()) gens.push_back(g.element.perm);
    std::vector<GroupElement> elements;
    for (Permutation& p : group_closure(gens, 42)) {
      GroupElement e{std::move(p), {}, {}};
      auto it = decompositions().find(e.perm);
      if (it != decompositions().end()) std::tie(e.phi, e.psi) = it->second;
      elements.push_back(std::move(e));
    }
    return GroupTable(std::move(elements));
  }();
  return table;
}

GroupReport group_report() {
  GroupReport rep;
  const GroupTable& table = automorphism_table();
  const AutomorphismGroup searched = automorphism_group(g_graph().graph());
  rep.closure_order = table.order();
  rep.search_order = searched.order;
  rep.closure_equals_search = table.permutations() == searched.elements;
  if (!rep.closure_equals_search) rep.failure = "closure of the printed generators differs from the searched group";

  rep.all_decompose = true;
  for (const auto& e : table.elements())
    if (!decompositions().count(e.perm)) rep.all_decompose = false;
  if (!rep.all_decompose && rep.failure.empty()) rep.failure = "an element is not a (phi, psi) pair";

  rep.action_is_homomorphism = pencil_action(point_transpositions({}), kIdentityPositions).is_identity();
  for (const auto& x : table.elements()) {
    if (!rep.action_is_homomorphism) break;
    for (const auto& t : printed_generators()) {
      PointMap phi{};
      PositionMap psi{};
      for (int i = 0; i < 8; ++i) phi[i] = x.phi[t.element.phi[i]];
      for (int j = 0; j < 3; ++j) psi[j] = x.psi[t.element.psi[j]];
      if (!(pencil_action(phi, psi) == compose(x.perm, t.element.perm))) {
        rep.action_is_homomorphism = false;
        break;
      }
    }
  }
  if (!rep.action_is_homomorphism && rep.failure.empty()) rep.failure = "the pencil action is not a homomorphism";
  return rep;
}

std::vector<Permutation> setwise_stabilizer(const std::vector<Permutation>& group, std::vector<int> set) {
  std::sort(set.begin(), set.end());
  std::vector<Permutation> out;
  for (const auto& g : group)
    if (sorted_image(g, set) == set) out.push_back(g);
  return out;
}

std::vector<std::vector<int>> left_cosets(const std::vector<Permutation>& group,
                                          const std::vector<Permutation>& subgroup) {
  const auto idx = index_of(group);
  std::vector<char> done(group.size(), 0);
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < group.size(); ++i) {
    if (done[i]) continue;
    std::vector<int> coset;
    for (const auto& h : subgroup) {
      auto it = idx.find(compose(group[i], h));
      if (it == idx.end()) throw std::invalid_argument("subgroup is not contained in the group");
      coset.push_back(it->second);
      done[it->second] = 1;
    }
    std::sort(coset.begin(), coset.end());
    out.push_back(std::move(coset));
  }
  return out;
}

bool generates(const std::vector<Permutation>& generators, const std::vector<Permutation>& subgroup) {
  if (subgroup.empty()) return false;
  auto closure = bounded_closure(generators, subgroup.front().degree(), subgroup.size() + 1);
  if (!closure) return false;
  auto sorted = subgroup;
  std::sort(sorted.begin(), sorted.end());
  return *closure == sorted;
}

CosetCorrespondence vertex_cosets(int v) { return object_cosets({v}); }
CosetCorrespondence edge_cosets(int u, int v) { return object_cosets({u, v}); }

UHCertificate uh_certify(const Graph& g, const Graph& pattern, const std::string& name,
                         const std::vector<Permutation>& group) {
  UHCertificate cert;
  cert.template_name = name;
  const auto copies = induced_copies(g, pattern);
  cert.copies = copies.size();
  const auto auts = automorphism_group(pattern).elements;
  const int n = g.order();
  const int k = pattern.order();

  // by_image[x * n + y]: elements sending x to y.
  std::vector<std::vector<int>> by_image(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (std::size_t e = 0; e < group.size(); ++e)
    for (int x = 0; x < n; ++x) by_image[static_cast<std::size_t>(x * n + group[e](x))].push_back(static_cast<int>(e));

  std::vector<int> h(static_cast<std::size_t>(k));
  for (const auto& a : copies)
    for (const auto& b : copies)
      for (const auto& alpha : auts) {
        for (int t = 0; t < k; ++t) h[t] = b.mapping[alpha(t)];
        ++cert.isomorphisms_checked;
        bool extended = false;
        for (int e : by_image[static_cast<std::size_t>(a.mapping[0] * n + h[0])]) {
          bool agree = true;
          for (int t = 1; t < k && agree; ++t) agree = group[e](a.mapping[t]) == h[t];
          if (agree) {
            extended = true;
            break;
          }
        }
        if (!extended) {
          cert.counterexample = std::array<std::vector<int>, 3>{a.mapping, b.mapping, h};
          return cert;
        }
      }
  cert.passed = true;
  return cert;
}

HnmCertificate h_n_m_certify(const Graph& g, const Graph& pattern) {
  HnmCertificate cert;
  const auto copies = induced_copies(g, pattern);
  cert.n = static_cast<int>(copies.size());
  std::map<std::pair<int, int>, int> cover;
  std::vector<int> per_vertex(static_cast<std::size_t>(g.order()), 0);
  for (const auto& c : copies) {
    for (int v : c.vertices) ++per_vertex[v];
    for (std::size_t x = 0; x < c.vertices.size(); ++x)
      for (std::size_t y = x + 1; y < c.vertices.size(); ++y)
        if (g.adjacent(c.vertices[x], c.vertices[y])) ++cover[{c.vertices[x], c.vertices[y]}];
  }
  cert.edge_partition = cover.size() == g.edge_count() &&
                        std::all_of(cover.begin(), cover.end(), [](const auto& kv) { return kv.second == 1; });
  if (!cert.edge_partition) cert.failure = "(a) copies do not partition the edges";

  cert.m = per_vertex.empty() ? 0 : per_vertex.front();
  cert.uniform_m = std::all_of(per_vertex.begin(), per_vertex.end(), [&](int c) { return c == cert.m; });
  if (!cert.uniform_m && cert.failure.empty()) cert.failure = "(b) copies per vertex are not constant";

  cert.meet_at_most_one = true;
  for (std::size_t i = 0; i < copies.size() && cert.meet_at_most_one; ++i)
    for (std::size_t j = i + 1; j < copies.size(); ++j) {
      std::vector<int> meet;
      std::set_intersection(copies[i].vertices.begin(), copies[i].vertices.end(), copies[j].vertices.begin(),
                            copies[j].vertices.end(), std::back_inserter(meet));
      if (meet.size() > 1) {
        cert.meet_at_most_one = false;
        break;
      }
    }
  if (!cert.meet_at_most_one && cert.failure.empty()) cert.failure = "(b) two copies share more than one vertex";
  return cert;
}

LineGraphicalReport line_graphical_report(const std::vector<std::pair<HnmCertificate, bool>>& templates) {
  LineGraphicalReport rep;
  rep.min_m = templates.empty() ? 0 : templates.front().first.m;
  for (const auto& [cert, complete] : templates) {
    rep.min_m = std::min(rep.min_m, cert.m);
    if (complete && cert.m == 2) rep.complete_template_with_m2 = true;
  }
  rep.line_graphical = rep.min_m == 2 && rep.complete_template_with_m2;
  return rep;
}

CayleySearchResult cayley_search(const std::vector<Permutation>& group, std::uint64_t budget) {
  CayleySearchResult res;
  if (group.empty()) return res;
  const int n = group.front().degree();
  std::vector<Permutation> cands;
  for (const auto& p : group) {
    if (p.is_identity()) continue;
    if (42 % p.element_order() != 0 || !semiregular(p)) continue;
    cands.push_back(p);
  }
  // Larger orders first: fewer generators reach order 42.
  std::stable_sort(cands.begin(), cands.end(),
                   [](const Permutation& x, const Permutation& y) { return x.element_order() > y.element_order(); });
  res.candidates = cands.size();

  auto accept = [&](const std::vector<Permutation>& gens) {
    ++res.closures_tried;
    auto h = bounded_closure(gens, n, static_cast<std::size_t>(n));
    if (!h || h->size() != static_cast<std::size_t>(n)) return false;
    std::vector<char> hit(static_cast<std::size_t>(n), 0);
    int fixers = 0;
    for (const auto& e : *h) {
      hit[e(0)] = 1;
      fixers += e(0) == 0;
    }
    if (fixers != 1 || std::count(hit.begin(), hit.end(), 1) != n) return false;
    res.witness_generators = gens;
    res.witness = std::move(*h);
    return true;
  };
  auto spent = [&] {
    if (res.closures_tried < budget) return false;
    res.budget_exhausted = true;
    return true;
  };

  for (std::size_t i = 0; i < cands.size(); ++i)
    for (std::size_t j = i + 1; j < cands.size(); ++j) {
      if (spent()) return res;
      if (accept({cands[i], cands[j]})) return res;
    }
  for (std::size_t i = 0; i < cands.size(); ++i)
    for (std::size_t j = i + 1; j < cands.size(); ++j)
      for (std::size_t l = j + 1; l < cands.size(); ++l) {
        if (spent()) return res;
        if (accept({cands[i], cands[j], cands[l]})) return res;
      }
  return res;
}

}  // namespace fanograph
