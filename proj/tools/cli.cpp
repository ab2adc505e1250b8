#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sombor/enumeration.hpp"
#include "sombor/families.hpp"
#include "sombor/graph_io.hpp"
#include "sombor/report.hpp"
#include "sombor/sombor.hpp"
#include "sombor/theorems.hpp"

namespace sombor::cli {
namespace {

using nlohmann::json;

enum class OutputFormat { kText, kJson, kCsv };

struct RunConfig {
  std::string input = "-";
  std::string input_format = "graph6";
  std::string format = "text";
  std::string out;
  int workers = 1;

  OutputFormat output() const {
    if (format == "json") return OutputFormat::kJson;
    if (format == "csv") return OutputFormat::kCsv;
    return OutputFormat::kText;
  }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

int parse_endpoint(const std::string& text, int n) {
  std::string s = text;
  if (s.empty()) throw UsageError("empty range endpoint");
  try {
    if (s[0] == 'n') {
      if (s.size() == 1) return n;
      if (s[1] != '-' && s[1] != '+') throw UsageError("bad range endpoint '" + text + "'");
      std::size_t used = 0;
      int off = std::stoi(s.substr(2), &used);
      if (used != s.size() - 2) throw UsageError("bad range endpoint '" + text + "'");
      return s[1] == '-' ? n - off : n + off;
    }
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw UsageError("bad range endpoint '" + text + "'");
    return v;
  } catch (const std::logic_error&) {
    throw UsageError("bad range endpoint '" + text + "'");
  }
}

// ---------------------------------------------------------------- compute

int cmd_compute(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  InputFormat format;
  if (cfg.input_format == "graph6") format = InputFormat::kGraph6;
  else if (cfg.input_format == "edgelist") format = InputFormat::kEdgeList;
  else throw UsageError("unknown input format '" + cfg.input_format + "'");

  std::vector<Graph> graphs;
  if (cfg.input == "-") {
    graphs = read_graphs(in, format);
  } else {
    std::ifstream file(cfg.input);
    if (!file) throw UsageError("cannot open " + cfg.input);
    graphs = read_graphs(file, format);
  }

  json records = json::array();
  if (cfg.output() == OutputFormat::kCsv) out << "index,graph6,order,size,connected,so,terms\n";
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i];
    const bool connected = is_connected(g);
    if (!connected) err << "warning: graph " << i << " is disconnected\n";
    const RadicalSum exact = sombor_exact(g);
    const double value = sombor_index(g);
    switch (cfg.output()) {
      case OutputFormat::kText:
        out << to_graph6(g) << '\t' << format_value(value) << '\t' << exact.to_string() << '\n';
        break;
      case OutputFormat::kCsv:
        out << i << ',' << to_graph6(g) << ',' << g.order() << ',' << g.size() << ','
            << (connected ? "true" : "false") << ',' << format_value(value) << ',' << csv_quote(exact.to_string())
            << '\n';
        break;
      case OutputFormat::kJson:
        records.push_back({{"index", i},
                           {"graph6", to_graph6(g)},
                           {"order", g.order()},
                           {"size", g.size()},
                           {"connected", connected},
                           {"so_float", value},
                           {"so_radical_terms", radical_terms_json(exact)}});
        break;
    }
  }
  if (cfg.output() == OutputFormat::kJson) out << records.dump(2) << '\n';
  return kOk;
}

// ----------------------------------------------------------------- family

struct FamilyArgs {
  std::string name;
  int n = 0;
  std::optional<int> g, delta, k;
  std::vector<int> lengths;
};

int cmd_family(const RunConfig& cfg, const FamilyArgs& a, std::ostream& out) {
  auto need = [&](const std::optional<int>& v, const char* flag) {
    if (!v) throw UsageError("family " + a.name + " needs --" + flag);
    return *v;
  };
  Graph graph(0);
  RadicalSum bound;
  std::string params = "n=" + std::to_string(a.n);
  if (a.name == "path") {
    graph = path(a.n);
    bound = path_so_exact(a.n);
  } else if (a.name == "cycle") {
    graph = cycle(a.n);
    bound = cycle_so_exact(a.n);
  } else if (a.name == "starlike") {
    const int delta = need(a.delta, "delta"), k = need(a.k, "k");
    StarLikeSpec spec{a.n, delta, k, a.lengths};
    if (spec.branch_lengths.empty() && k < delta) {
      auto partitions = star_like_partitions(a.n, delta, k);
      if (partitions.empty()) {
        validate(spec);  // reports the violated condition
        throw FamilyError("no star-like tree with these parameters");
      }
      spec.branch_lengths = partitions.front();
    }
    graph = star_like_tree(spec);
    bound = star_like_so_exact(a.n, delta, k);
    params += ";delta=" + std::to_string(delta) + ";k=" + std::to_string(k);
  } else if (a.name == "lollipop") {
    const int g = need(a.g, "g");
    graph = lollipop(a.n, g);
    bound = lollipop_so_exact(a.n);
    params += ";g=" + std::to_string(g);
  } else if (a.name == "cycle-pendant") {
    graph = cycle_with_pendant(a.n);
    bound = cycle_with_pendant_so_exact(a.n);
  } else if (a.name == "ung") {
    const int g = need(a.g, "g");
    graph = u_n_g(a.n, g);
    bound = max_so_unicyclic_exact(a.n, g);
    params += ";g=" + std::to_string(g);
  } else if (a.name == "kite") {
    const int k = need(a.k, "k");
    graph = kite_with_pendants(a.n, k);
    bound = max_so_pendent_exact(a.n, k);
    params += ";k=" + std::to_string(k);
  } else {
    throw UsageError("unknown family '" + a.name + "'");
  }

  const RadicalSum exact = sombor_exact(graph);
  const bool equal = exact == bound;
  switch (cfg.output()) {
    case OutputFormat::kText:
      out << "family  " << a.name << '\n'
          << "params  " << params << '\n'
          << "graph6  " << to_graph6(graph) << '\n'
          << "so      " << format_value(exact.value()) << "  " << exact.to_string() << '\n'
          << "bound   " << format_value(bound.value()) << "  " << bound.to_string() << '\n'
          << "equal   " << (equal ? "true" : "false") << '\n';
      break;
    case OutputFormat::kCsv:
      out << "family,params,graph6,so,bound,equal\n"
          << a.name << ',' << params << ',' << to_graph6(graph) << ',' << format_value(exact.value()) << ','
          << format_value(bound.value()) << ',' << (equal ? "true" : "false") << '\n';
      break;
    case OutputFormat::kJson:
      out << json{{"family", a.name},
                  {"params", params},
                  {"graph6", to_graph6(graph)},
                  {"so_float", exact.value()},
                  {"so_radical_terms", radical_terms_json(exact)},
                  {"bound_float", bound.value()},
                  {"bound_radical_terms", radical_terms_json(bound)},
                  {"equal", equal}}
                 .dump(2)
          << '\n';
      break;
  }
  return kOk;
}

// -------------------------------------------------------------- enumerate

int cmd_enumerate(const RunConfig& cfg, const std::string& cls, int n, bool labeled, std::ostream& out) {
  std::vector<Graph> graphs;
  if (labeled) {
    if (cls != "connected") throw UsageError("--labeled applies to the connected class only");
    graphs = connected_graphs_labeled(n);
  } else if (cls == "connected") {
    graphs = connected_graphs(n);
  } else if (cls == "trees") {
    graphs = trees(n);
  } else if (cls == "unicyclic") {
    graphs = unicyclic_graphs(n);
  } else {
    throw UsageError("unknown class '" + cls + "'");
  }
  switch (cfg.output()) {
    case OutputFormat::kText:
      for (const Graph& g : graphs) out << to_graph6(g) << '\n';
      break;
    case OutputFormat::kCsv:
      out << "graph6,order,size\n";
      for (const Graph& g : graphs) out << to_graph6(g) << ',' << g.order() << ',' << g.size() << '\n';
      break;
    case OutputFormat::kJson: {
      json list = json::array();
      for (const Graph& g : graphs) list.push_back(to_graph6(g));
      out << json{{"class", cls}, {"n", n}, {"count", graphs.size()}, {"graph6", list}}.dump(2) << '\n';
      break;
    }
  }
  return kOk;
}

// ----------------------------------------------------------------- search

struct SearchArgs {
  GraphClassSpec spec;
  std::string objective = "min";
  std::string universe = "general";
};

int cmd_search(const RunConfig& cfg, const SearchArgs& a, std::ostream& out) {
  Objective objective;
  if (a.objective == "min") objective = Objective::kMin;
  else if (a.objective == "max") objective = Objective::kMax;
  else throw UsageError("objective must be min or max");
  Universe universe;
  if (a.universe == "general") universe = Universe::kGeneral;
  else if (a.universe == "trees") universe = Universe::kTrees;
  else if (a.universe == "unicyclic") universe = Universe::kUnicyclic;
  else throw UsageError("universe must be general, trees or unicyclic");

  ExtremalResult r = extremal_search(a.spec, objective, universe, cfg.workers);
  switch (cfg.output()) {
    case OutputFormat::kText:
      out << "class      " << a.spec.describe() << '\n'
          << "search     " << to_string(objective) << " over " << to_string(universe) << '\n'
          << "optimum    " << format_value(r.optimum_float) << "  " << r.optimum.to_string() << '\n'
          << "class_size " << r.class_size << '\n'
          << "witnesses  " << r.witnesses.size() << '\n';
      for (const Graph& g : r.witnesses) out << "  " << to_graph6(g) << '\n';
      break;
    case OutputFormat::kCsv:
      out << "optimum,terms,class_size,witness_count,witnesses\n"
          << format_value(r.optimum_float) << ',' << csv_quote(r.optimum.to_string()) << ',' << r.class_size << ','
          << r.witnesses.size() << ',';
      for (std::size_t i = 0; i < r.witnesses.size(); ++i) out << (i ? ";" : "") << to_graph6(r.witnesses[i]);
      out << '\n';
      break;
    case OutputFormat::kJson:
      out << to_json(r).dump(2) << '\n';
      break;
  }
  return kOk;
}

// ----------------------------------------------------------------- verify

struct VerifyArgs {
  std::string theorem;
  std::string n;
  std::string delta, g, k, r;
  bool pooled = false;
};

std::vector<TheoremParams> expand_verify(TheoremId id, const VerifyArgs& a) {
  std::vector<TheoremParams> out;
  if (a.n.empty()) throw UsageError("verify needs --n");
  if (a.n.find('n') != std::string::npos) throw UsageError("--n cannot refer to n");
  for (int n : expand_range(a.n, 0)) {
    auto second = [&](const std::string& given, const std::string& fallback) {
      return expand_range(given.empty() ? fallback : given, n);
    };
    switch (id) {
      case TheoremId::kMinDelta:
        for (int d : second(a.delta, "3..n-1")) out.push_back({n, d, {}, {}, {}});
        break;
      case TheoremId::kGirthMin:
        if (a.pooled) {
          out.push_back({n, {}, {}, {}, {}});
        } else {
          for (int g : second(a.g, "3..n-2")) out.push_back({n, {}, g, {}, {}});
          if (a.g.empty()) out.push_back({n, {}, n, {}, {}});
        }
        break;
      case TheoremId::kUnicyclicMin:
        out.push_back({n, {}, {}, {}, {}});
        break;
      case TheoremId::kUnicyclicMax:
        for (int g : second(a.g, "3..n")) out.push_back({n, {}, g, {}, {}});
        break;
      case TheoremId::kPendentMax:
        for (int k : second(a.k, "1..n-3")) out.push_back({n, {}, {}, k, {}});
        break;
      case TheoremId::kCutEdgeMax:
        for (int r : second(a.r, "1..n-3")) out.push_back({n, {}, {}, {}, r});
        break;
    }
  }
  return out;
}

int cmd_verify(const RunConfig& cfg, const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  TheoremId id;
  try {
    id = parse_theorem_id(a.theorem);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  // All tuples are checked against the caps before any search starts;
  // tuples outside a theorem's parameter domain are skipped.
  std::vector<TheoremParams> tuples;
  for (const TheoremParams& p : expand_verify(id, a)) {
    try {
      check_theorem_params(id, p);
      tuples.push_back(p);
    } catch (const TheoremParamError& e) {
      err << "skipping " << p.describe() << ": " << e.what() << '\n';
    }
  }
  if (tuples.empty()) throw UsageError("no valid parameter tuples for " + a.theorem);

  int failures = 0;
  json reports = json::array();
  if (cfg.output() == OutputFormat::kCsv) out << csv_header() << '\n';
  for (const TheoremParams& p : tuples) {
    TheoremReport rep = verify_theorem(id, p, cfg.workers);
    if (!rep.passed()) ++failures;
    switch (cfg.output()) {
      case OutputFormat::kText:
        out << (rep.passed() ? "PASS " : "FAIL ") << to_string(id) << ' ' << p.describe()
            << "  bound=" << format_value(rep.bound_value.value())
            << "  optimum=" << format_value(rep.search_value.value())
            << "  bound_matches=" << (rep.bound_matches ? "yes" : "no")
            << "  characterization=" << (rep.characterization_holds ? "yes" : "no")
            << "  witnesses=" << rep.witnesses.size() << "  class=" << rep.class_size << '\n';
        break;
      case OutputFormat::kCsv:
        out << to_csv_row(rep) << '\n';
        break;
      case OutputFormat::kJson:
        reports.push_back(to_json(rep));
        break;
    }
    out.flush();
  }
  if (cfg.output() == OutputFormat::kJson) out << reports.dump(2) << '\n';
  if (cfg.output() == OutputFormat::kText)
    out << (tuples.size() - failures) << '/' << tuples.size() << " passed\n";
  return failures == 0 ? kOk : kVerificationFailed;
}

}  // namespace

std::vector<int> expand_range(const std::string& text, int n) {
  std::vector<int> out;
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    out.push_back(parse_endpoint(text, n));
    return out;
  }
  int lo = parse_endpoint(text.substr(0, dots), n);
  int hi = parse_endpoint(text.substr(dots + 2), n);
  for (int v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sombor index computation, extremal families and exhaustive verification", "sombor"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("-i,--input", cfg.input, "Input file for compute ('-' for stdin)");
  app.add_option("--input-format", cfg.input_format, "graph6 or edgelist")->check(CLI::IsMember({"graph6", "edgelist"}));
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--out", cfg.out, "Write output to this file");
  app.add_option("--workers", cfg.workers, "Worker threads for searches")->check(CLI::PositiveNumber);

  auto* compute = app.add_subcommand("compute", "SO of every input graph");

  FamilyArgs fam;
  auto* family = app.add_subcommand("family", "Build an extremal family member and compare with its closed form");
  family->add_option("--name", fam.name, "path, cycle, starlike, lollipop, cycle-pendant, ung, kite")->required();
  family->add_option("--n", fam.n, "Order")->required();
  family->add_option("--g", fam.g, "Girth");
  family->add_option("--delta", fam.delta, "Hub degree (starlike)");
  family->add_option("--k", fam.k, "Pendant count");
  family->add_option("--lengths", fam.lengths, "Branch lengths (starlike)")->delimiter(',');

  std::string enum_class = "connected";
  int enum_n = 0;
  bool labeled = false;
  auto* enumerate = app.add_subcommand("enumerate", "List one graph per isomorphism class as graph6");
  enumerate->add_option("--class", enum_class, "connected, trees or unicyclic");
  enumerate->add_option("--n", enum_n, "Order")->required();
  enumerate->add_flag("--labeled", labeled, "Use labeled exhaustion (n <= 6)");

  SearchArgs sa;
  std::optional<int> s_delta, s_girth, s_pendent, s_cut;
  std::optional<bool> s_unicyclic, s_tree;
  auto* search = app.add_subcommand("search", "Exhaustive SO optimum over a graph class");
  search->add_option("--n", sa.spec.order, "Order")->required();
  search->add_option("--max-degree", s_delta);
  search->add_option("--girth", s_girth);
  search->add_option("--pendent", s_pendent);
  search->add_option("--cut-edges", s_cut);
  search->add_option("--unicyclic", s_unicyclic);
  search->add_option("--tree", s_tree);
  search->add_option("--objective", sa.objective)->check(CLI::IsMember({"min", "max"}));
  search->add_option("--universe", sa.universe)->check(CLI::IsMember({"general", "trees", "unicyclic"}));

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check an extremal theorem by exhaustive search");
  verify->add_option("--theorem", va.theorem,
                     "min-delta, girth-min, unicyclic-min, unicyclic-max, pendent-max, cutedge-max")
      ->required();
  verify->add_option("--n", va.n, "Order or range a..b")->required();
  verify->add_option("--delta", va.delta, "Range; may use n, e.g. 3..n-1");
  verify->add_option("--g", va.g, "Range; may use n");
  verify->add_option("--k", va.k, "Range; may use n");
  verify->add_option("--r", va.r, "Range; may use n");
  verify->add_flag("--pooled", va.pooled, "girth-min over all unicyclic graphs other than C_n");

  std::vector<std::string> storage = args;
  if (storage.empty()) storage.push_back("sombor");
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  std::unique_ptr<std::ofstream> file;
  std::ostream* sink = &out;
  if (!cfg.out.empty()) {
    file = std::make_unique<std::ofstream>(cfg.out);
    if (!*file) {
      err << "error: cannot write " << cfg.out << '\n';
      return kUsageError;
    }
    sink = file.get();
  }

  try {
    if (*compute) return cmd_compute(cfg, in, *sink, err);
    if (*family) return cmd_family(cfg, fam, *sink);
    if (*enumerate) return cmd_enumerate(cfg, enum_class, enum_n, labeled, *sink);
    if (*search) {
      sa.spec.max_degree = s_delta;
      sa.spec.girth = s_girth;
      sa.spec.pendent_count = s_pendent;
      sa.spec.cut_edge_count = s_cut;
      sa.spec.unicyclic = s_unicyclic;
      sa.spec.tree = s_tree;
      return cmd_search(cfg, sa, *sink);
    }
    if (*verify) return cmd_verify(cfg, va, *sink, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    // Family, class-spec, cap and parameter errors.
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const EmptyClass& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace sombor::cli
