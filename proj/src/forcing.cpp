#include "zflab/forcing.hpp"

#include <algorithm>
#include <set>

namespace zflab {

using nlohmann::json;

int ColorState::count() const {
  return static_cast<int>(std::count(blue.begin(), blue.end(), 1));
}

std::vector<Vertex> ColorState::blue_vertices() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < static_cast<Vertex>(blue.size()); ++v) {
    if (blue[v]) out.push_back(v);
  }
  return out;
}

namespace {

void check_vertices(const SimpleGraph& g, std::span<const Vertex> vs) {
  for (Vertex v : vs) {
    if (v < 0 || v >= g.order()) {
      throw GraphError("vertex " + std::to_string(v) + " not in graph of order " +
                       std::to_string(g.order()));
    }
  }
}

}  // namespace

ClosureResult closure(const SimpleGraph& g, std::span<const Vertex> start, Rule rule) {
  if (!g.is_connected()) throw DisconnectedGraph("closure requires a connected graph");
  check_vertices(g, start);
  const int n = g.order();
  ClosureResult out;
  out.state.blue.assign(n, 0);
  for (Vertex v : start) {
    if (!out.state.blue[v]) {
      out.state.blue[v] = 1;
      out.certificate.initial.push_back(v);
    }
  }
  std::sort(out.certificate.initial.begin(), out.certificate.initial.end());

  auto& blue = out.state.blue;
  std::vector<int> white_count(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(v)) white_count[v] += blue[w] ? 0 : 1;
  }
  std::set<Vertex> ready;       // blue with exactly one white neighbour
  std::set<Vertex> saturated;   // white with no white neighbour (loop rule)
  for (Vertex v = 0; v < n; ++v) {
    if (blue[v] && white_count[v] == 1) ready.insert(v);
    if (!blue[v] && white_count[v] == 0 && rule == Rule::loop) saturated.insert(v);
  }

  auto colour = [&](Vertex w) {
    blue[w] = 1;
    saturated.erase(w);
    if (white_count[w] == 1) ready.insert(w);
    for (Vertex x : g.neighbors(w)) {
      const int c = --white_count[x];
      if (blue[x]) {
        if (c == 1) {
          ready.insert(x);
        } else {
          ready.erase(x);
        }
      } else if (c == 0 && rule == Rule::loop) {
        saturated.insert(x);
      }
    }
  };

  while (true) {
    if (!ready.empty()) {
      const Vertex v = *ready.begin();
      Vertex target = -1;
      for (Vertex w : g.neighbors(v)) {
        if (!blue[w]) {
          target = w;
          break;
        }
      }
      ready.erase(ready.begin());
      out.certificate.steps.push_back({v, target, Rule::standard});
      colour(target);
    } else if (!saturated.empty()) {
      const Vertex w = *saturated.begin();
      out.certificate.steps.push_back({std::nullopt, w, Rule::loop});
      colour(w);
    } else {
      break;
    }
  }
  return out;
}

bool is_forcing_set(const SimpleGraph& g, std::span<const Vertex> s, Rule rule) {
  return closure(g, s, rule).state.all_blue();
}

ReplayResult replay(const SimpleGraph& g, const ForcingCertificate& cert) {
  check_vertices(g, cert.initial);
  ReplayResult out;
  out.state.blue.assign(g.order(), 0);
  auto& blue = out.state.blue;
  for (Vertex v : cert.initial) blue[v] = 1;
  for (const ForceStep& step : cert.steps) {
    auto fail = [&](std::string why) {
      out.error = "step " + std::to_string(out.steps_applied) + ": " + std::move(why);
      return out;
    };
    if (step.forced < 0 || step.forced >= g.order()) return fail("forced vertex out of range");
    if (blue[step.forced]) return fail("vertex " + std::to_string(step.forced) + " already blue");
    if (step.rule == Rule::standard) {
      if (!step.forcer) return fail("standard force without forcer");
      const Vertex v = *step.forcer;
      if (v < 0 || v >= g.order()) return fail("forcer out of range");
      if (!blue[v]) return fail("forcer " + std::to_string(v) + " is white");
      if (!g.has_edge(v, step.forced)) return fail("forced vertex is not a neighbour of forcer");
      for (Vertex w : g.neighbors(v)) {
        if (w != step.forced && !blue[w]) {
          return fail("forcer " + std::to_string(v) + " has a second white neighbour " +
                      std::to_string(w));
        }
      }
    } else {
      if (step.forcer) return fail("loop force must not name a forcer");
      for (Vertex w : g.neighbors(step.forced)) {
        if (!blue[w]) return fail("neighbour " + std::to_string(w) + " of loop-forced vertex is white");
      }
    }
    blue[step.forced] = 1;
    ++out.steps_applied;
  }
  out.ok = true;
  return out;
}

bool certifies_forcing_set(const SimpleGraph& g, const ForcingCertificate& cert) {
  const ReplayResult r = replay(g, cert);
  return r.ok && r.state.all_blue();
}

SequenceCheck validate_legal_sequence(const SimpleGraph& g, const VertexSequence& vs) {
  check_vertices(g, vs.seq);
  {
    auto sorted = vs.seq;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) throw DuplicateVertex("vertex " + std::to_string(*dup) + " repeated");
  }
  SequenceCheck out;
  std::vector<char> dominated(g.order(), 0);
  for (std::size_t i = 0; i < vs.seq.size(); ++i) {
    const Vertex x = vs.seq[i];
    std::vector<Vertex> footprint;
    bool open_footprint = false;
    if (!dominated[x]) footprint.push_back(x);
    for (Vertex w : g.neighbors(x)) {
      if (!dominated[w]) {
        footprint.push_back(w);
        open_footprint = true;
      }
    }
    std::sort(footprint.begin(), footprint.end());
    const bool ok = vs.variant == SequenceVariant::closed ? !footprint.empty() : open_footprint;
    if (!ok && !out.first_violation) out.first_violation = i;
    for (Vertex w : footprint) dominated[w] = 1;
    out.footprints.push_back(std::move(footprint));
  }
  out.legal = !out.first_violation.has_value();
  return out;
}

VertexSequence certificate_to_zsequence(const SimpleGraph& g, const ForcingCertificate& cert) {
  const ReplayResult r = replay(g, cert);
  if (!r.ok) throw IncompleteCertificate("certificate does not replay: " + r.error);
  if (!r.state.all_blue()) throw IncompleteCertificate("certificate leaves white vertices");
  VertexSequence out;
  out.variant = SequenceVariant::z;
  for (auto it = cert.steps.rbegin(); it != cert.steps.rend(); ++it) {
    out.seq.push_back(it->forced);
    if (it->rule == Rule::loop) out.variant = SequenceVariant::closed;
  }
  return out;
}

const char* to_string(Rule rule) { return rule == Rule::standard ? "std" : "loop"; }

const char* to_string(SequenceVariant variant) {
  return variant == SequenceVariant::closed ? "closed" : "z";
}

Rule parse_rule(const std::string& text) {
  if (text == "std" || text == "standard") return Rule::standard;
  if (text == "loop") return Rule::loop;
  throw std::invalid_argument("unknown rule '" + text + "'");
}

SequenceVariant parse_variant(const std::string& text) {
  if (text == "closed" || text == "gr") return SequenceVariant::closed;
  if (text == "z" || text == "grz") return SequenceVariant::z;
  throw std::invalid_argument("unknown sequence variant '" + text + "'");
}

json to_json(const ForcingCertificate& cert) {
  json steps = json::array();
  for (const ForceStep& s : cert.steps) {
    json step;
    if (s.forcer) {
      step["forcer"] = *s.forcer;
    } else {
      step["forcer"] = "loop";
    }
    step["forced"] = s.forced;
    step["rule"] = to_string(s.rule);
    steps.push_back(std::move(step));
  }
  return {{"initial", cert.initial}, {"steps", steps}};
}

ForcingCertificate certificate_from_json(const json& j) {
  ForcingCertificate cert;
  cert.initial = j.at("initial").get<std::vector<Vertex>>();
  for (const json& s : j.at("steps")) {
    ForceStep step;
    step.forced = s.at("forced").get<Vertex>();
    step.rule = parse_rule(s.at("rule").get<std::string>());
    if (s.at("forcer").is_number_integer()) step.forcer = s.at("forcer").get<Vertex>();
    cert.steps.push_back(step);
  }
  return cert;
}

json to_json(const VertexSequence& vs) {
  return {{"sequence", vs.seq}, {"variant", to_string(vs.variant)}};
}

}  // namespace zflab
