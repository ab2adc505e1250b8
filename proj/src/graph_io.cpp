#include "sombor/graph_io.hpp"

#include <sstream>

namespace sombor {

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  out.push_back(static_cast<char>(63 + n));  // n <= 32 always fits the short form
  int bits = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      bits = bits << 1 | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + bits));
        bits = 0;
        filled = 0;
      }
    }
  }
  if (filled) out.push_back(static_cast<char>(63 + (bits << (6 - filled))));
  return out;
}

Graph from_graph6(std::string_view text) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty graph6 string", 0);
  for (char ch : text)
    if (ch < 63 || ch > 126) throw ParseError("graph6 byte outside 63..126", 0);

  std::size_t pos = 0;
  long n = 0;
  if (text[0] != 126) {
    n = text[0] - 63;
    pos = 1;
  } else if (text.size() >= 4 && text[1] != 126) {
    n = static_cast<long>(text[1] - 63) << 12 | static_cast<long>(text[2] - 63) << 6 | (text[3] - 63);
    pos = 4;
  } else if (text.size() >= 8) {
    n = 0;
    for (int i = 2; i < 8; ++i) n = n << 6 | (text[i] - 63);
    pos = 8;
  } else {
    throw ParseError("truncated graph6 size field", 0);
  }
  if (n > Graph::kMaxOrder)
    throw ParseError("graph6 order " + std::to_string(n) + " exceeds 32", 0);

  const long pairs = n * (n - 1) / 2;
  const std::size_t want = static_cast<std::size_t>((pairs + 5) / 6);
  if (text.size() - pos != want)
    throw ParseError("graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                         std::to_string(want),
                     0);

  std::vector<Edge> edges;
  long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int chunk = text[pos + k / 6] - 63;
      if (chunk >> (5 - k % 6) & 1) edges.push_back({i, j});
    }
  }
  if (k % 6 != 0) {
    int chunk = text[pos + k / 6] - 63;
    if (chunk & ((1 << (6 - k % 6)) - 1)) throw ParseError("nonzero graph6 padding bits", 0);
  }
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

namespace {

std::string strip(const std::string& line, bool comments) {
  std::string s = line;
  if (comments) {
    auto hash = s.find('#');
    if (hash != std::string::npos) s.erase(hash);
  }
  auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<long> integers(const std::string& line, int lineno) {
  std::istringstream is(line);
  std::vector<long> out;
  std::string tok;
  while (is >> tok) {
    try {
      std::size_t used = 0;
      long v = std::stol(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw ParseError("line " + std::to_string(lineno) + ": expected an integer, got '" + tok + "'", lineno);
    }
  }
  return out;
}

}  // namespace

std::vector<Graph> read_graphs(std::istream& in, InputFormat format) {
  std::vector<Graph> out;
  std::string raw;
  int lineno = 0;
  if (format == InputFormat::kGraph6) {
    while (std::getline(in, raw)) {
      ++lineno;
      std::string line = strip(raw, false);
      if (line.empty() || line == ">>graph6<<") continue;
      try {
        out.push_back(from_graph6(line));
      } catch (const ParseError& e) {
        throw ParseError("line " + std::to_string(lineno) + ": " + e.what(), lineno);
      } catch (const GraphError& e) {
        throw ParseError("line " + std::to_string(lineno) + ": " + e.what(), lineno);
      }
    }
    return out;
  }

  auto next_content = [&](std::string& line) {
    while (std::getline(in, raw)) {
      ++lineno;
      line = strip(raw, true);
      if (!line.empty()) return true;
    }
    return false;
  };

  std::string line;
  while (next_content(line)) {
    auto header = integers(line, lineno);
    if (header.size() != 2 || header[0] < 0 || header[1] < 0)
      throw ParseError("line " + std::to_string(lineno) + ": expected header \"n m\"", lineno);
    if (header[0] > Graph::kMaxOrder)
      throw ParseError("line " + std::to_string(lineno) + ": order exceeds 32", lineno);
    const int header_line = lineno;
    std::vector<Edge> edges;
    for (long i = 0; i < header[1]; ++i) {
      if (!next_content(line))
        throw ParseError("line " + std::to_string(lineno) + ": expected " + std::to_string(header[1]) +
                             " edges after header on line " + std::to_string(header_line),
                         lineno);
      auto uv = integers(line, lineno);
      if (uv.size() != 2) throw ParseError("line " + std::to_string(lineno) + ": expected \"u v\"", lineno);
      edges.push_back({static_cast<int>(uv[0]), static_cast<int>(uv[1])});
      try {
        Graph::from_edge_list(static_cast<int>(header[0]), std::span<const Edge>(&edges.back(), 1));
      } catch (const GraphError& e) {
        throw ParseError("line " + std::to_string(lineno) + ": " + e.what(), lineno);
      }
    }
    try {
      out.push_back(Graph::from_edge_list(static_cast<int>(header[0]), edges));
    } catch (const GraphError& e) {
      throw ParseError("line " + std::to_string(header_line) + ": " + e.what(), header_line);
    }
  }
  return out;
}

}  // namespace sombor
