#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"
#include "zflab/graph.hpp"

namespace zflab {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t offset)
      : std::runtime_error(what + " (line " + std::to_string(line) + ", offset " +
                           std::to_string(offset) + ")"),
        line_(line),
        offset_(offset) {}

  std::size_t line() const { return line_; }
  std::size_t offset() const { return offset_; }

 private:
  std::size_t line_;
  std::size_t offset_;
};

// {"n": int, "edges": [[u, v], ...]}
nlohmann::json to_json(const SimpleGraph& g);
SimpleGraph simple_graph_from_json(const nlohmann::json& j);
// {"n": int, "edges": [[u, v, mult], ...]}; a missing mult means 1.
nlohmann::json to_json(const Multigraph& h);
Multigraph multigraph_from_json(const nlohmann::json& j);

// Parses JSON text, mapping syntax errors to ParseError with line/offset.
nlohmann::json parse_json_text(std::string_view text);
SimpleGraph parse_json_graph(std::string_view text);
std::string emit_json(const SimpleGraph& g);

// Standard graph6 ASCII encoding (simple graphs only). A leading ">>graph6<<"
// header and trailing newline are accepted on input.
SimpleGraph parse_graph6(std::string_view text);
std::string emit_graph6(const SimpleGraph& g);

std::string emit_dot(const SimpleGraph& g, std::string_view name = "G");

}  // namespace zflab
