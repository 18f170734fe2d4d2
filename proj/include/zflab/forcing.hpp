#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "zflab/graph.hpp"

namespace zflab {

enum class Rule {
  standard,  // blue v with exactly one white neighbour w forces w
  loop,      // standard, plus: white w whose neighbours are all blue turns blue
};

enum class SequenceVariant {
  closed,  // each entry footprints some vertex of its closed neighbourhood
  z,       // each entry footprints a vertex other than itself
};

class DisconnectedGraph : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class DuplicateVertex : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class IncompleteCertificate : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ColorState {
  std::vector<char> blue;

  bool is_blue(Vertex v) const { return blue[v] != 0; }
  int count() const;
  bool all_blue() const { return count() == static_cast<int>(blue.size()); }
  std::vector<Vertex> blue_vertices() const;
};

// One force. Loop-saturation forces have no forcer.
struct ForceStep {
  std::optional<Vertex> forcer;
  Vertex forced = 0;
  Rule rule = Rule::standard;

  friend bool operator==(const ForceStep&, const ForceStep&) = default;
};

// Chronological record of a closure: replaying `steps` from `initial` is legal
// at every step and reproduces the final colouring.
struct ForcingCertificate {
  std::vector<Vertex> initial;
  std::vector<ForceStep> steps;
};

struct ClosureResult {
  ColorState state;
  ForcingCertificate certificate;
};

// Applies the colour change rule until nothing changes. Among applicable
// forces the smallest (forcer, forced) pair fires first; loop-saturation
// forces rank after every standard force. Rejects disconnected graphs.
ClosureResult closure(const SimpleGraph& g, std::span<const Vertex> start, Rule rule);

bool is_forcing_set(const SimpleGraph& g, std::span<const Vertex> s, Rule rule);

struct ReplayResult {
  bool ok = false;
  std::size_t steps_applied = 0;  // index of the offending step when !ok
  std::string error;
  ColorState state;
};

// Checks every step of a certificate against the colouring at that moment.
ReplayResult replay(const SimpleGraph& g, const ForcingCertificate& cert);

// Replay succeeds and ends with every vertex blue.
bool certifies_forcing_set(const SimpleGraph& g, const ForcingCertificate& cert);

struct VertexSequence {
  std::vector<Vertex> seq;
  SequenceVariant variant = SequenceVariant::closed;
};

struct SequenceCheck {
  bool legal = false;
  std::optional<std::size_t> first_violation;  // 0-based position
  // Closed-neighbourhood footprint of each entry (newly dominated vertices).
  std::vector<std::vector<Vertex>> footprints;
};

// Legality of a closed-neighbourhood or Z-sequence. Throws DuplicateVertex on
// repeated entries and GraphError on out-of-range ids.
SequenceCheck validate_legal_sequence(const SimpleGraph& g, const VertexSequence& vs);

// Complement sequence of a complete certificate: the forced vertices in
// reverse force order. For a standard-rule certificate this is a Z-sequence;
// if the certificate contains loop forces it is a closed-neighbourhood
// sequence. Throws IncompleteCertificate unless the replay colours all of g.
VertexSequence certificate_to_zsequence(const SimpleGraph& g, const ForcingCertificate& cert);

const char* to_string(Rule rule);
const char* to_string(SequenceVariant variant);
Rule parse_rule(const std::string& text);
SequenceVariant parse_variant(const std::string& text);

// {"initial":[...],"steps":[{"forcer":int|"loop","forced":int,"rule":"std"|"loop"}]}
nlohmann::json to_json(const ForcingCertificate& cert);
ForcingCertificate certificate_from_json(const nlohmann::json& j);
nlohmann::json to_json(const VertexSequence& vs);

}  // namespace zflab
