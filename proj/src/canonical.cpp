#include <algorithm>
#include <bit>

#include "sombor/graph.hpp"

namespace sombor {
namespace {

using Row = Graph::Row;

// Branch-and-bound over vertex orderings p_0..p_{n-1}. Column j of the
// upper-triangle string holds adj(p_i, p_j) for i < j with i = 0 as the most
// significant bit, so columns compare as integers and the whole string
// compares column by column. Twins (vertices with equal neighbourhoods apart
// from each other) generate identical subtrees and only one is expanded.
class OrderingSearch {
 public:
  OrderingSearch(const Graph& g, std::vector<Row> allowed, bool maximize)
      : g_(g), n_(g.order()), allowed_(std::move(allowed)), maximize_(maximize),
        cur_cols_(n_), best_cols_(n_), cur_perm_(n_), best_perm_(n_) {}

  void run() {
    if (n_ == 0) return;
    dfs(0, false);
  }

  const std::vector<std::uint32_t>& columns() const { return best_cols_; }
  const std::vector<Vertex>& ordering() const { return best_perm_; }

 private:
  bool twins(Vertex a, Vertex b) const {
    Row na = g_.neighbors(a) & ~(Row{1} << b);
    Row nb = g_.neighbors(b) & ~(Row{1} << a);
    return na == nb;
  }

  // equal_prefix: columns 0..pos-1 coincide with the incumbent. Returns true
  // if the incumbent was replaced somewhere below.
  bool dfs(int pos, bool equal_prefix) {
    if (pos == n_) {
      if (equal_prefix) return false;
      best_cols_ = cur_cols_;
      best_perm_ = cur_perm_;
      return true;
    }
    bool updated = false;
    Row candidates = allowed_[pos] & ~used_;
    std::vector<Vertex> tried;
    while (candidates) {
      Vertex v = std::countr_zero(candidates);
      candidates &= candidates - 1;
      bool redundant = false;
      for (Vertex w : tried) {
        if (twins(v, w)) {
          redundant = true;
          break;
        }
      }
      if (redundant) continue;
      tried.push_back(v);

      std::uint32_t col = 0;
      Row nbrs = g_.neighbors(v);
      for (int i = 0; i < pos; ++i) col = (col << 1) | (nbrs >> cur_perm_[i] & 1u);

      bool child_equal = false;
      if (equal_prefix) {
        std::uint32_t inc = best_cols_[pos];
        bool worse = maximize_ ? col < inc : col > inc;
        if (worse) continue;
        child_equal = col == inc;
      }
      cur_cols_[pos] = col;
      cur_perm_[pos] = v;
      used_ |= Row{1} << v;
      if (dfs(pos + 1, child_equal)) {
        updated = true;
        equal_prefix = true;
      }
      used_ &= ~(Row{1} << v);
    }
    return updated;
  }

  const Graph& g_;
  int n_;
  std::vector<Row> allowed_;
  bool maximize_;
  Row used_ = 0;
  std::vector<std::uint32_t> cur_cols_, best_cols_;
  std::vector<Vertex> cur_perm_, best_perm_;
};

std::string pack(int n, std::uint8_t flag, const std::vector<std::uint32_t>& cols) {
  std::string out;
  out.push_back(static_cast<char>(n));
  out.push_back(static_cast<char>(flag));
  std::uint8_t byte = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      byte = static_cast<std::uint8_t>(byte << 1 | (cols[j] >> (j - 1 - i) & 1u));
      if (++filled == 8) {
        out.push_back(static_cast<char>(byte));
        byte = 0;
        filled = 0;
      }
    }
  }
  if (filled) out.push_back(static_cast<char>(byte << (8 - filled)));
  return out;
}

// Colour refinement with colours named by rank of their signature, so the
// final colouring is invariant under relabeling.
std::vector<int> refined_colours(const Graph& g) {
  const int n = g.order();
  std::vector<int> colour(n);
  for (int v = 0; v < n; ++v) colour[v] = g.degree(v);
  int classes = 0;
  {
    std::vector<int> sorted = colour;
    std::sort(sorted.begin(), sorted.end());
    classes = static_cast<int>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
    for (int& c : colour) c = static_cast<int>(std::lower_bound(sorted.begin(), sorted.begin() + classes, c) - sorted.begin());
  }
  while (true) {
    std::vector<std::vector<int>> signature(n);
    for (int v = 0; v < n; ++v) {
      auto& sig = signature[v];
      sig.push_back(colour[v]);
      Row r = g.neighbors(v);
      while (r) {
        int w = std::countr_zero(r);
        r &= r - 1;
        sig.push_back(colour[w]);
      }
      std::sort(sig.begin() + 1, sig.end());
    }
    std::vector<std::vector<int>> distinct = signature;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < n; ++v)
      colour[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), signature[v]) - distinct.begin());
    int next = static_cast<int>(distinct.size());
    if (next == classes) break;
    classes = next;
  }
  return colour;
}

}  // namespace

std::string canonical_code(const Graph& g) {
  const int n = g.order();
  if (n > kCanonicalCodeCap)
    throw OrderCapExceeded("canonical_code supports order <= " + std::to_string(kCanonicalCodeCap) +
                           ", got " + std::to_string(n));
  Row all = (Row{1} << n) - 1;
  OrderingSearch search(g, std::vector<Row>(n, all), /*maximize=*/false);
  search.run();
  return pack(n, 0, search.columns());
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() > kCanonicalCodeCap || b.order() > kCanonicalCodeCap)
    throw OrderCapExceeded("are_isomorphic supports order <= " + std::to_string(kCanonicalCodeCap));
  if (a.order() != b.order() || a.size() != b.size()) return false;
  auto da = a.degrees(), db = b.degrees();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_code(a) == canonical_code(b);
}

Certificate certify(const Graph& input) {
  const int n = input.order();
  const bool dense = 4 * input.size() > n * (n - 1);
  const Graph g = dense ? input.complement() : input;

  std::vector<int> colour = refined_colours(g);
  std::vector<Vertex> by_colour(n);
  for (int v = 0; v < n; ++v) by_colour[v] = v;
  std::stable_sort(by_colour.begin(), by_colour.end(),
                   [&](Vertex a, Vertex b) { return colour[a] < colour[b]; });
  std::vector<Row> cell_of_colour(n, 0);
  for (int v = 0; v < n; ++v) cell_of_colour[colour[v]] |= Row{1} << v;
  std::vector<Row> allowed(n);
  for (int pos = 0; pos < n; ++pos) allowed[pos] = cell_of_colour[colour[by_colour[pos]]];

  OrderingSearch search(g, std::move(allowed), /*maximize=*/true);
  search.run();

  Certificate cert;
  cert.code = pack(n, dense ? 1 : 0, search.columns());
  cert.canonical_position.assign(n, 0);
  const auto& order = search.ordering();
  for (int pos = 0; pos < n; ++pos) cert.canonical_position[order[pos]] = pos;
  return cert;
}

Graph canonical_form(const Graph& g) {
  Certificate cert = certify(g);
  return g.relabeled(cert.canonical_position);
}

}  // namespace sombor
