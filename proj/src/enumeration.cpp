#include "sombor/enumeration.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "sombor/families.hpp"
#include "sombor/sombor.hpp"

namespace sombor {
namespace {

void check_cap(int n, int cap, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + " needs n >= 1");
  if (n > cap)
    throw CapExceeded(std::string(what) + " is capped at n <= " + std::to_string(cap) + ", got n = " +
                      std::to_string(n));
}

// Deduplicating accumulator keyed by certificate; emits canonical forms sorted
// by certificate so output is independent of insertion order.
class ClassSet {
 public:
  void insert(const Graph& g) {
    Certificate cert = certify(g);
    if (seen_.count(cert.code)) return;
    seen_.emplace(std::move(cert.code), g.relabeled(cert.canonical_position));
  }
  std::vector<Graph> take() {
    std::vector<std::pair<std::string, Graph>> items(seen_.begin(), seen_.end());
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Graph> out;
    out.reserve(items.size());
    for (auto& [code, g] : items) out.push_back(g);
    return out;
  }

 private:
  std::unordered_map<std::string, Graph> seen_;
};

Graph with_new_vertex(const Graph& g, Graph::Row attach) {
  const int n = g.order();
  std::vector<Graph::Row> rows(n + 1, 0);
  for (int v = 0; v < n; ++v) rows[v] = g.neighbors(v) | ((attach >> v & 1u) << n);
  rows[n] = attach;
  return Graph::from_rows(n + 1, rows);
}

std::vector<Graph> grow_by_leaves(const std::vector<Graph>& smaller) {
  ClassSet next;
  for (const Graph& g : smaller)
    for (int v = 0; v < g.order(); ++v) next.insert(with_new_vertex(g, Graph::Row{1} << v));
  return next.take();
}

}  // namespace

std::vector<Graph> connected_graphs(int n) {
  check_cap(n, kConnectedCap, "connected graph generation");
  std::vector<Graph> level{Graph(1)};
  for (int order = 2; order <= n; ++order) {
    ClassSet next;
    const Graph::Row subsets = Graph::Row{1} << (order - 1);
    for (const Graph& g : level)
      for (Graph::Row attach = 1; attach < subsets; ++attach) next.insert(with_new_vertex(g, attach));
    level = next.take();
  }
  return level;
}

std::vector<Graph> connected_graphs_labeled(int n) {
  check_cap(n, kLabeledOracleCap, "labeled connected graph enumeration");
  std::vector<Edge> slots;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) slots.push_back({i, j});
  std::map<std::string, Graph> classes;
  const unsigned long total = 1ul << slots.size();
  std::vector<Edge> edges;
  for (unsigned long mask = 0; mask < total; ++mask) {
    edges.clear();
    for (std::size_t b = 0; b < slots.size(); ++b)
      if (mask >> b & 1ul) edges.push_back(slots[b]);
    Graph g = Graph::from_edge_list(n, edges);
    if (!is_connected(g)) continue;
    classes.emplace(canonical_code(g), g);
  }
  std::vector<Graph> out;
  for (auto& [code, g] : classes) out.push_back(g);
  return out;
}

std::vector<Graph> trees(int n) {
  check_cap(n, kTreeCap, "tree generation");
  std::vector<Graph> level{Graph(1)};
  for (int order = 2; order <= n; ++order) level = grow_by_leaves(level);
  return level;
}

std::vector<Graph> unicyclic_graphs(int n) {
  check_cap(n, kUnicyclicCap, "unicyclic generation");
  if (n < 3) return {};
  std::vector<Graph> level{canonical_form(cycle(3))};
  for (int order = 4; order <= n; ++order) {
    // Every unicyclic graph other than the cycle has a leaf.
    ClassSet next;
    next.insert(cycle(order));
    for (const Graph& g : level)
      for (int v = 0; v < g.order(); ++v) next.insert(with_new_vertex(g, Graph::Row{1} << v));
    level = next.take();
  }
  return level;
}

const char* to_string(Universe u) {
  switch (u) {
    case Universe::kGeneral: return "general";
    case Universe::kTrees: return "trees";
    case Universe::kUnicyclic: return "unicyclic";
  }
  return "?";
}

const char* to_string(Objective o) { return o == Objective::kMin ? "min" : "max"; }

int universe_cap(Universe universe) {
  switch (universe) {
    case Universe::kGeneral: return kConnectedCap;
    case Universe::kTrees: return kTreeCap;
    case Universe::kUnicyclic: return kUnicyclicCap;
  }
  return 0;
}

std::vector<Graph> universe_graphs(Universe universe, int n) {
  switch (universe) {
    case Universe::kGeneral: return connected_graphs(n);
    case Universe::kTrees: return trees(n);
    case Universe::kUnicyclic: return unicyclic_graphs(n);
  }
  return {};
}

void GraphClassSpec::validate() const {
  auto bad = [this](const std::string& why) { throw std::invalid_argument("graph class " + describe() + ": " + why); };
  if (order < 1) bad("order must be >= 1");
  if (max_degree && (*max_degree < 0 || *max_degree > order - 1)) bad("max degree outside [0, n-1]");
  if (girth && (*girth < 3 || *girth > order)) bad("girth outside [3, n]");
  if (pendent_count && (*pendent_count < 0 || *pendent_count > order)) bad("pendent count outside [0, n]");
  if (cut_edge_count && (*cut_edge_count < 0 || *cut_edge_count > order - 1)) bad("cut edge count outside [0, n-1]");
  if (unicyclic && tree && *unicyclic && *tree) bad("a graph cannot be both a tree and unicyclic");
  if (girth && tree && *tree) bad("trees have no girth");
}

std::string GraphClassSpec::describe() const {
  std::ostringstream os;
  os << "{n:" << order;
  if (max_degree) os << ", max_degree:" << *max_degree;
  if (girth) os << ", girth:" << *girth;
  if (pendent_count) os << ", pendent_count:" << *pendent_count;
  if (cut_edge_count) os << ", cut_edge_count:" << *cut_edge_count;
  if (unicyclic) os << ", unicyclic:" << (*unicyclic ? "true" : "false");
  if (tree) os << ", tree:" << (*tree ? "true" : "false");
  os << '}';
  return os.str();
}

bool matches(const Graph& g, const GraphClassSpec& spec) {
  if (g.order() != spec.order || !is_connected(g)) return false;
  if (spec.max_degree && max_degree(g) != *spec.max_degree) return false;
  if (spec.unicyclic && (g.size() == g.order()) != *spec.unicyclic) return false;
  if (spec.tree && (g.size() == g.order() - 1) != *spec.tree) return false;
  if (spec.pendent_count && static_cast<int>(pendent_vertices(g).size()) != *spec.pendent_count) return false;
  if (spec.girth) {
    auto gg = girth(g);
    if (!gg || *gg != *spec.girth) return false;
  }
  if (spec.cut_edge_count && static_cast<int>(bridges(g).size()) != *spec.cut_edge_count) return false;
  return true;
}

namespace {

struct Shortlist {
  double best = 0.0;
  bool any = false;
  long members = 0;
  std::vector<std::size_t> candidates;  // indices within margin of best
};

bool within(double value, double best) { return std::abs(value - best) <= 1e-9 * std::max(1.0, std::abs(best)); }

Shortlist scan(const std::vector<Graph>& graphs, std::size_t begin, std::size_t end, const GraphClassSpec& spec,
               Objective objective) {
  Shortlist out;
  std::vector<std::pair<std::size_t, double>> kept;
  for (std::size_t i = begin; i < end; ++i) {
    if (!matches(graphs[i], spec)) continue;
    ++out.members;
    double value = sombor_index(graphs[i]);
    bool better = !out.any || (objective == Objective::kMin ? value < out.best : value > out.best);
    if (better) {
      out.best = value;
      out.any = true;
    }
    if (within(value, out.best)) kept.emplace_back(i, value);
  }
  for (auto& [i, v] : kept)
    if (within(v, out.best)) out.candidates.push_back(i);
  return out;
}

}  // namespace

ExtremalResult extremal_search_in(const std::vector<Graph>& universe, const GraphClassSpec& spec,
                                  Objective objective, int workers) {
  spec.validate();
  workers = std::max(1, workers);
  const std::size_t total = universe.size();
  const std::size_t chunks = std::min<std::size_t>(workers, std::max<std::size_t>(1, total));

  std::vector<Shortlist> partial(chunks);
  if (chunks == 1) {
    partial[0] = scan(universe, 0, total, spec, objective);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t c = 0; c < chunks; ++c) {
      std::size_t begin = total * c / chunks, end = total * (c + 1) / chunks;
      pool.emplace_back([&, c, begin, end] { partial[c] = scan(universe, begin, end, spec, objective); });
    }
    for (auto& t : pool) t.join();
  }

  ExtremalResult result;
  result.universe_size = static_cast<long>(total);
  bool any = false;
  double best = 0.0;
  for (const Shortlist& s : partial) {
    result.class_size += s.members;
    if (!s.any) continue;
    if (!any || (objective == Objective::kMin ? s.best < best : s.best > best)) best = s.best;
    any = true;
  }
  if (!any) throw EmptyClass("no graph in the universe matches " + spec.describe());

  std::vector<std::size_t> candidates;
  for (const Shortlist& s : partial)
    for (std::size_t i : s.candidates)
      if (within(sombor_index(universe[i]), best)) candidates.push_back(i);
  std::sort(candidates.begin(), candidates.end());

  std::vector<std::pair<RadicalSum, std::size_t>> exact;
  for (std::size_t i : candidates) exact.emplace_back(sombor_exact(universe[i]), i);
  RadicalSum optimum = exact.front().first;
  for (const auto& [value, i] : exact) {
    auto order = compare(value, optimum);
    if (objective == Objective::kMin ? order < 0 : order > 0) optimum = value;
  }

  std::map<std::string, Graph> witnesses;
  for (const auto& [value, i] : exact)
    if (value == optimum) {
      Certificate cert = certify(universe[i]);
      witnesses.emplace(cert.code, universe[i].relabeled(cert.canonical_position));
    }
  result.optimum = optimum;
  result.optimum_float = optimum.value();
  for (auto& [code, g] : witnesses) result.witnesses.push_back(g);
  return result;
}

ExtremalResult extremal_search(const GraphClassSpec& spec, Objective objective, Universe universe, int workers) {
  const int cap = universe_cap(universe);
  if (spec.order > cap)
    throw CapExceeded(std::string("the ") + to_string(universe) + " universe is capped at n <= " +
                      std::to_string(cap) + ", got n = " + std::to_string(spec.order));
  spec.validate();
  return extremal_search_in(universe_graphs(universe, spec.order), spec, objective, workers);
}

}  // namespace sombor
