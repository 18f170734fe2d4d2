#include "zflab/io.hpp"

#include <sstream>
#include <vector>

namespace zflab {

using nlohmann::json;

namespace {

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 0;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 0;
    } else {
      ++col;
    }
  }
  return {line, col};
}

int require_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string("expected integer for ") + what, 1, 0);
  return j.get<int>();
}

}  // namespace

json to_json(const SimpleGraph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.order()}, {"edges", edges}};
}

SimpleGraph simple_graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
    throw ParseError("graph object needs \"n\" and \"edges\"", 1, 0);
  }
  const int n = require_int(j.at("n"), "n");
  if (!j.at("edges").is_array()) throw ParseError("\"edges\" must be an array", 1, 0);
  std::vector<Edge> edges;
  std::size_t index = 0;
  for (const json& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) {
      throw ParseError("edge " + std::to_string(index) + " must be [u, v]", 1, index);
    }
    edges.emplace_back(require_int(e[0], "vertex"), require_int(e[1], "vertex"));
    if (edges.back().u == edges.back().v) {
      throw ParseError("self-loop in edge " + std::to_string(index), 1, index);
    }
    ++index;
  }
  try {
    return SimpleGraph(n, edges);
  } catch (const GraphError& err) {
    throw ParseError(err.what(), 1, 0);
  }
}

json to_json(const Multigraph& h) {
  json edges = json::array();
  for (const MultiEdge& e : h.edges()) edges.push_back({e.u, e.v, e.mult});
  return {{"n", h.order()}, {"edges", edges}};
}

Multigraph multigraph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
    throw ParseError("multigraph object needs \"n\" and \"edges\"", 1, 0);
  }
  const int n = require_int(j.at("n"), "n");
  std::vector<MultiEdge> edges;
  std::size_t index = 0;
  for (const json& e : j.at("edges")) {
    if (!e.is_array() || e.size() < 2 || e.size() > 3) {
      throw ParseError("edge " + std::to_string(index) + " must be [u, v] or [u, v, mult]", 1,
                       index);
    }
    const int mult = e.size() == 3 ? require_int(e[2], "mult") : 1;
    edges.push_back({require_int(e[0], "vertex"), require_int(e[1], "vertex"), mult});
    ++index;
  }
  try {
    return Multigraph(n, edges);
  } catch (const GraphError& err) {
    throw ParseError(err.what(), 1, 0);
  }
}

json parse_json_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& err) {
    const std::size_t byte = err.byte == 0 ? 0 : err.byte - 1;
    auto [line, col] = line_and_column(text, byte);
    throw ParseError(std::string("malformed JSON: ") + err.what(), line, col);
  }
}

SimpleGraph parse_json_graph(std::string_view text) {
  return simple_graph_from_json(parse_json_text(text));
}

std::string emit_json(const SimpleGraph& g) { return to_json(g).dump(); }

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

}  // namespace

SimpleGraph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.substr(0, kGraph6Header.size()) == kGraph6Header) pos = kGraph6Header.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  auto byte_at = [&](std::size_t i) -> int {
    if (i >= text.size()) throw ParseError("graph6 input truncated", 1, i);
    const int c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw ParseError("graph6 byte out of range", 1, i);
    return c - 63;
  };
  long long n = 0;
  if (pos < text.size() && text[pos] == '~') {
    if (pos + 1 < text.size() && text[pos + 1] == '~') {
      for (int k = 0; k < 6; ++k) n = (n << 6) | byte_at(pos + 2 + k);
      pos += 8;
    } else {
      for (int k = 0; k < 3; ++k) n = (n << 6) | byte_at(pos + 1 + k);
      pos += 4;
    }
  } else {
    n = byte_at(pos);
    pos += 1;
  }
  const long long bits = n * (n - 1) / 2;
  const long long bytes = (bits + 5) / 6;
  if (static_cast<long long>(text.size() - pos) != bytes) {
    throw ParseError("graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                         std::to_string(bytes),
                     1, pos);
  }
  std::vector<Edge> edges;
  long long k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const int chunk = byte_at(pos + static_cast<std::size_t>(k / 6));
      if ((chunk >> (5 - k % 6)) & 1) edges.emplace_back(u, v);
    }
  }
  // Padding bits must be zero.
  for (; k < bytes * 6; ++k) {
    const int chunk = byte_at(pos + static_cast<std::size_t>(k / 6));
    if ((chunk >> (5 - k % 6)) & 1) throw ParseError("nonzero graph6 padding", 1, pos + k / 6);
  }
  return SimpleGraph(static_cast<int>(n), edges);
}

std::string emit_graph6(const SimpleGraph& g) {
  const long long n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
  } else {
    out += "~~";
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
  }
  int chunk = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      chunk = (chunk << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + chunk));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (chunk << (6 - filled))));
  return out;
}

std::string emit_dot(const SimpleGraph& g, std::string_view name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.order(); ++v) os << "  " << v << ";\n";
  for (const Edge& e : g.edges()) os << "  " << e.u << " -- " << e.v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace zflab
