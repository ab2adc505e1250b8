#include "sombor/theorems.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include "sombor/families.hpp"
#include "sombor/graph_io.hpp"
#include "sombor/sombor.hpp"

namespace sombor {
namespace {

struct Plan {
  GraphClassSpec spec;
  Objective objective = Objective::kMin;
  Universe universe = Universe::kGeneral;
  bool exclude_cycle = false;
  RadicalSum bound;
  std::vector<Graph> predicted;
};

int second(const std::optional<int>& value, const char* name, TheoremId id) {
  if (!value)
    throw TheoremParamError(std::string(to_string(id)) + " needs parameter " + name);
  return *value;
}

void require(bool ok, TheoremId id, const TheoremParams& p, const std::string& why) {
  if (!ok) throw TheoremParamError(std::string(to_string(id)) + " " + p.describe() + ": " + why);
}

void check_cap(Universe universe, TheoremId id, const TheoremParams& p) {
  const int cap = universe_cap(universe);
  if (p.n > cap)
    throw CapExceeded(std::string(to_string(id)) + " searches the " + to_string(universe) +
                      " universe, capped at n <= " + std::to_string(cap) + "; got n = " + std::to_string(p.n));
}

Universe universe_of(TheoremId id) {
  switch (id) {
    case TheoremId::kMinDelta:
    case TheoremId::kPendentMax:
    case TheoremId::kCutEdgeMax:
      return Universe::kGeneral;
    default:
      return Universe::kUnicyclic;
  }
}

// Parameter and cap validation only; no graphs are built.
void validate(TheoremId id, const TheoremParams& p) {
  check_cap(universe_of(id), id, p);
  switch (id) {
    case TheoremId::kMinDelta: {
      int delta = second(p.delta, "delta", id);
      require(delta >= 3 && p.n >= delta + 1, id, p, "need delta >= 3 and n >= delta + 1");
      break;
    }
    case TheoremId::kGirthMin:
      require(p.n >= 5, id, p, "need n >= 5");
      if (p.g)
        require(*p.g >= 3 && (*p.g <= p.n - 2 || *p.g == p.n), id, p,
                "need 3 <= g <= n - 2 (lollipop) or g = n (cycle)");
      break;
    case TheoremId::kUnicyclicMin:
      require(p.n >= 3, id, p, "need n >= 3");
      break;
    case TheoremId::kUnicyclicMax: {
      int g = second(p.g, "g", id);
      require(g >= 3 && g <= p.n, id, p, "need 3 <= g <= n");
      break;
    }
    case TheoremId::kPendentMax: {
      int k = second(p.k, "k", id);
      require(k >= 1 && k <= p.n - 3, id, p, "need 1 <= k <= n - 3");
      break;
    }
    case TheoremId::kCutEdgeMax: {
      int r = second(p.r, "r", id);
      require(r >= 1 && r <= p.n - 3, id, p, "need 1 <= r <= n - 3");
      break;
    }
  }
}

Plan make_plan(TheoremId id, const TheoremParams& p) {
  Plan plan;
  plan.spec.order = p.n;
  plan.universe = universe_of(id);
  switch (id) {
    case TheoremId::kMinDelta: {
      const int delta = *p.delta;
      const int k = std::max(0, 2 * delta - p.n + 1);
      plan.spec.max_degree = delta;
      plan.objective = Objective::kMin;
      plan.bound = min_so_delta_bound_exact(p.n, delta);
      for (const auto& lengths : star_like_partitions(p.n, delta, k))
        plan.predicted.push_back(star_like_tree({p.n, delta, k, lengths}));
      break;
    }
    case TheoremId::kGirthMin:
      plan.spec.unicyclic = true;
      plan.objective = Objective::kMin;
      if (p.g && *p.g == p.n) {
        plan.spec.girth = p.n;
        plan.bound = cycle_so_exact(p.n);
        plan.predicted.push_back(cycle(p.n));
      } else if (p.g) {
        plan.spec.girth = *p.g;
        plan.bound = lollipop_so_exact(p.n);
        plan.predicted.push_back(lollipop(p.n, *p.g));
      } else {
        plan.exclude_cycle = true;
        plan.bound = lollipop_so_exact(p.n);
        for (int g = 3; g <= p.n - 2; ++g) plan.predicted.push_back(lollipop(p.n, g));
      }
      break;
    case TheoremId::kUnicyclicMin:
      plan.spec.unicyclic = true;
      plan.objective = Objective::kMin;
      plan.bound = cycle_so_exact(p.n);
      plan.predicted.push_back(cycle(p.n));
      break;
    case TheoremId::kUnicyclicMax:
      plan.spec.unicyclic = true;
      plan.spec.girth = *p.g;
      plan.objective = Objective::kMax;
      plan.bound = max_so_unicyclic_exact(p.n, *p.g);
      plan.predicted.push_back(u_n_g(p.n, *p.g));
      break;
    case TheoremId::kPendentMax:
      plan.spec.pendent_count = *p.k;
      plan.objective = Objective::kMax;
      plan.bound = max_so_pendent_exact(p.n, *p.k);
      plan.predicted.push_back(kite_with_pendants(p.n, *p.k));
      break;
    case TheoremId::kCutEdgeMax:
      plan.spec.cut_edge_count = *p.r;
      plan.objective = Objective::kMax;
      plan.bound = max_so_cut_edges_exact(p.n, *p.r);
      plan.predicted.push_back(kite_with_pendants(p.n, *p.r));
      break;
  }
  return plan;
}

}  // namespace

const char* to_string(TheoremId id) {
  switch (id) {
    case TheoremId::kMinDelta: return "min-delta";
    case TheoremId::kGirthMin: return "girth-min";
    case TheoremId::kUnicyclicMin: return "unicyclic-min";
    case TheoremId::kUnicyclicMax: return "unicyclic-max";
    case TheoremId::kPendentMax: return "pendent-max";
    case TheoremId::kCutEdgeMax: return "cutedge-max";
  }
  return "?";
}

std::vector<TheoremId> all_theorems() {
  return {TheoremId::kMinDelta,     TheoremId::kGirthMin,   TheoremId::kUnicyclicMin,
          TheoremId::kUnicyclicMax, TheoremId::kPendentMax, TheoremId::kCutEdgeMax};
}

TheoremId parse_theorem_id(const std::string& text) {
  for (TheoremId id : all_theorems())
    if (text == to_string(id)) return id;
  throw std::invalid_argument("unknown theorem id '" + text + "'");
}

std::string TheoremParams::describe() const {
  std::ostringstream os;
  os << "n=" << n;
  if (delta) os << ";delta=" << *delta;
  if (g) os << ";g=" << *g;
  if (k) os << ";k=" << *k;
  if (r) os << ";r=" << *r;
  return os.str();
}

void check_theorem_params(TheoremId id, const TheoremParams& params) { validate(id, params); }

TheoremReport verify_theorem(TheoremId id, const TheoremParams& params, int workers) {
  validate(id, params);
  const auto start = std::chrono::steady_clock::now();
  Plan plan = make_plan(id, params);

  std::vector<Graph> universe = universe_graphs(plan.universe, params.n);
  if (plan.exclude_cycle) {
    const std::string cycle_code = certificate(cycle(params.n));
    std::erase_if(universe, [&](const Graph& g) { return certificate(g) == cycle_code; });
  }
  ExtremalResult found = extremal_search_in(universe, plan.spec, plan.objective, workers);

  TheoremReport report;
  report.id = id;
  report.params = params;
  report.bound_value = plan.bound;
  report.search_value = found.optimum;
  report.bound_matches = plan.bound == found.optimum;
  report.class_size = found.class_size;

  std::set<std::string> predicted_codes, found_codes;
  for (const Graph& g : plan.predicted) predicted_codes.insert(certificate(g));
  for (const Graph& g : found.witnesses) found_codes.insert(certificate(g));
  report.characterization_holds = predicted_codes == found_codes;

  for (const Graph& g : found.witnesses) report.witnesses.push_back(to_graph6(g));
  std::set<std::string> seen;
  for (const Graph& g : plan.predicted)
    if (seen.insert(certificate(g)).second) report.predicted.push_back(to_graph6(canonical_form(g)));

  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

bool proposition_cut_edges_check(int n, int k, int workers) {
  GraphClassSpec spec;
  spec.order = n;
  spec.cut_edge_count = k;
  ExtremalResult found = extremal_search(spec, Objective::kMax, Universe::kGeneral, workers);
  for (const Graph& g : found.witnesses)
    for (const Edge& e : bridges(g))
      if (g.degree(e.u) != 1 && g.degree(e.v) != 1) return false;
  return true;
}

}  // namespace sombor
