#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "zflab/graph.hpp"

namespace zflab {

enum class MopErrorKind {
  invalid_chord,     // out of range, a boundary edge, or repeated
  crossing_chords,
  not_triangulated,  // fewer than three boundary vertices
  not_maximal,       // some chord can still be added without crossing
};

class InvalidMop : public std::runtime_error {
 public:
  InvalidMop(MopErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  MopErrorKind kind() const { return kind_; }

 private:
  MopErrorKind kind_;
};

const char* to_string(MopErrorKind kind);

// Triangulated polygon. The boundary is 0, 1, ..., n-1 in cyclic order.
struct Mop {
  int n = 0;
  std::vector<Edge> chords;  // sorted

  SimpleGraph graph() const;
  bool is_boundary_edge(Vertex a, Vertex b) const;
};

Mop validate_mop(int n, std::vector<Edge> chords);

// {"n": int, "chords": [[u, v], ...]}
nlohmann::json to_json(const Mop& m);
Mop mop_from_json(const nlohmann::json& j);

using Triangle = std::array<Vertex, 3>;  // ascending

struct SerpentineLeaf {
  std::vector<int> triangles;  // from the dual leaf inward
  int separator = -1;          // the separator triangle it hangs from
  bool fan = false;
};

// A maximal chain of dual degree-2 triangles between two separator triangles.
struct SerpentinePath {
  std::vector<int> triangles;
  int separator_a = -1;
  int separator_b = -1;
};

struct MopStructure {
  std::vector<Triangle> triangles;
  std::vector<std::vector<int>> dual;  // weak dual, indices into triangles
  std::vector<int> separators;
  // Component id in the union of separator triangles, or -1.
  std::vector<int> component_of;
  std::vector<SerpentineLeaf> leaves;
  std::vector<SerpentinePath> paths;
  int t = 0;
  int c = 0;
  int h = 0;
  int n2 = 0;
  int h_F = 0;
  bool serpentine = false;
};

MopStructure analyze(const Mop& m);

nlohmann::json to_json(const MopStructure& s);

enum class BoundKind { exact, lower, upper };

struct BoundEntry {
  std::string name;
  std::string invariant;  // "z" or "z_loop"
  BoundKind kind = BoundKind::exact;
  int value = 0;
  bool applies = false;
  std::string precondition;
};

struct MopBounds {
  std::vector<BoundEntry> entries;
  std::optional<int> exact_z;
  std::optional<int> exact_z_loop;
  int upper_z = 0;
  std::optional<int> lower_z;  // best applicable lower bound
  // Inputs of the component-based lower bound.
  int n2_prime = 0;
  int c_prime = 0;
};

MopBounds bounds_report(const MopStructure& s);

nlohmann::json to_json(const MopBounds& b);

// Strip triangulation. Each pattern character is 'a' (advance the low end)
// or 'b' (retreat the high end); its length is the number of triangles. A
// constant pattern yields a fan.
Mop serpentine_from_pattern(std::string_view pattern);
Mop generate_serpentine(int triangles, std::uint64_t seed);

// Random recursive ear splitting of the n-gon.
Mop generate_random_mop(int n, std::uint64_t seed);

// One separator triangle with a strip-triangulated leaf on each side. A leaf
// pattern of constant letters gives a fan leaf.
Mop one_separator_mop(const std::array<std::string, 3>& leaf_patterns);

}  // namespace zflab
