// zflab: compute, certify, construct and survey forcing invariants.

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "zflab/cubic.hpp"
#include "zflab/families.hpp"
#include "zflab/forcing.hpp"
#include "zflab/halin.hpp"
#include "zflab/io.hpp"
#include "zflab/mop.hpp"
#include "zflab/solver.hpp"

using nlohmann::json;
using namespace zflab;

namespace {

enum ExitCode { kOk = 0, kParse = 2, kCap = 3, kScope = 4, kProperty = 5 };

struct Common {
  std::string input = "-";
  std::string format = "json";
  std::uint64_t seed = 20240917;
  std::optional<int> cap;
  bool pretty = false;
  std::string out;
  unsigned workers = 1;
};

SolverConfig solver_config(const Common& c) {
  SolverConfig cfg;
  if (c.cap) cfg.forcing_cap = cfg.grundy_cap = *c.cap;
  return cfg;
}

std::string read_text(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path, 0, 0);
    ss << in.rdbuf();
  }
  return ss.str();
}

// A whole-file JSON value (a graph or an array of graphs), or one graph per
// line for JSON lines and graph6.
std::vector<SimpleGraph> read_graphs(const Common& c) {
  const std::string text = read_text(c.input);
  std::vector<SimpleGraph> out;
  if (c.format == "json") {
    if (json::accept(text)) {
      const json j = json::parse(text);
      if (j.is_array()) {
        for (const json& g : j) out.push_back(simple_graph_from_json(g));
      } else {
        out.push_back(simple_graph_from_json(j));
      }
      return out;
    }
  }
  std::istringstream lines(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(c.format == "json" ? parse_json_graph(line) : parse_graph6(line));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), lineno, e.offset());
    }
  }
  if (out.empty()) throw ParseError("no graph in input", lineno, 0);
  return out;
}

json read_json(const Common& c) { return parse_json_text(read_text(c.input)); }

std::vector<Vertex> parse_list(const std::string& text) {
  std::vector<Vertex> out;
  std::string item;
  std::istringstream ss(text);
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" ") == std::string::npos) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw ParseError("bad vertex \"" + item + "\"", 1, 0);
    }
    if (item.find_first_not_of(" ", used) != std::string::npos) {
      throw ParseError("bad vertex \"" + item + "\"", 1, used);
    }
    out.push_back(v);
  }
  return out;
}

class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot write " + path);
    }
  }
  std::ostream& os() { return file_.is_open() ? file_ : std::cout; }
  void line(const json& j, bool pretty) { os() << (pretty ? j.dump(2) : j.dump()) << '\n'; }

 private:
  std::ofstream file_;
};

// Every certificate goes through replay before it is printed.
const ForcingCertificate& checked(const SimpleGraph& g, const ForcingCertificate& cert) {
  if (!certifies_forcing_set(g, cert)) throw std::logic_error("emitted certificate does not replay");
  return cert;
}

const VertexSequence& checked(const SimpleGraph& g, const VertexSequence& vs) {
  if (!validate_legal_sequence(g, vs).legal) throw std::logic_error("emitted sequence is not legal");
  return vs;
}

// ---- compute ---------------------------------------------------------------

int cmd_compute(const Common& c, const std::string& invariant) {
  const auto graphs = read_graphs(c);
  const SolverConfig cfg = solver_config(c);
  Sink sink(c.out);
  if (c.pretty) sink.os() << "graph      n    z  z_loop   gr  gr_z  duality\n";
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const SimpleGraph& g = graphs[i];
    const std::string id = "#" + std::to_string(i);
    json j;
    if (invariant == "all") {
      const InvariantReport r = check_duality(g, cfg, id);
      for (const auto* f : {&r.z_witness, &r.z_loop_witness}) checked(g, f->certificate);
      for (const auto* s : {&r.gr_witness, &r.gr_z_witness}) checked(g, s->witness);
      j = to_json(r);
      j["certificates"] = {{"z", to_json(r.z_witness.certificate)},
                           {"z_loop", to_json(r.z_loop_witness.certificate)}};
    } else {
      j = {{"graph", id}, {"n", g.order()}};
      if (invariant == "z" || invariant == "zloop") {
        const Rule rule = invariant == "z" ? Rule::standard : Rule::loop;
        const ForcingResult f = forcing_number(g, rule, cfg);
        const std::string key = invariant == "z" ? "z" : "z_loop";
        j[key] = f.number;
        j["witness"] = f.witness;
        j["certificate"] = to_json(checked(g, f.certificate));
      } else {
        const SequenceVariant v = invariant == "gr" ? SequenceVariant::closed : SequenceVariant::z;
        const GrundyResult r = grundy_number(g, v, cfg);
        j[invariant == "gr" ? "gr" : "gr_z"] = r.length;
        j["witness"] = checked(g, r.witness).seq;
      }
    }
    if (c.pretty) {
      auto cell = [&](const char* key) {
        return j.contains(key) ? std::to_string(j[key].get<int>()) : std::string("-");
      };
      sink.os() << std::left << std::setw(8) << id << std::right << std::setw(4) << g.order()
                << std::setw(5) << cell("z") << std::setw(8) << cell("z_loop") << std::setw(5)
                << cell("gr") << std::setw(6) << cell("gr_z") << "  "
                << (j.contains("duality_ok") ? (j["duality_ok"].get<bool>() ? "ok" : "FAIL") : "-")
                << '\n';
    } else {
      sink.line(j, false);
    }
  }
  return kOk;
}

// ---- certify ---------------------------------------------------------------

struct CertifyArgs {
  std::string set;
  std::string sequence;
  std::string certificate;
  std::string rule = "std";
  std::string variant = "closed";
};

int cmd_certify(const Common& c, const CertifyArgs& a) {
  const auto graphs = read_graphs(c);
  if (graphs.size() != 1) throw ParseError("certify takes exactly one graph", 1, 0);
  const SimpleGraph& g = graphs[0];
  Sink sink(c.out);
  json j;
  bool valid = false;
  if (!a.certificate.empty()) {
    const ForcingCertificate cert = certificate_from_json(parse_json_text(read_text(a.certificate)));
    const ReplayResult r = replay(g, cert);
    valid = r.ok && r.state.all_blue();
    j = {{"kind", "certificate"}, {"valid", valid}, {"steps_applied", r.steps_applied}};
    if (!r.ok) {
      j["first_violation"] = r.steps_applied + 1;
      j["error"] = r.error;
    } else if (!valid) {
      j["error"] = "replay ends with white vertices";
      j["blue"] = r.state.count();
    }
  } else if (!a.sequence.empty()) {
    const VertexSequence vs{parse_list(a.sequence), parse_variant(a.variant)};
    const SequenceCheck r = validate_legal_sequence(g, vs);
    valid = r.legal;
    j = {{"kind", "sequence"}, {"variant", to_string(vs.variant)}, {"valid", valid},
         {"length", vs.seq.size()}, {"footprints", r.footprints}};
    if (r.first_violation) j["first_violation"] = *r.first_violation + 1;
  } else if (!a.set.empty()) {
    const Rule rule = parse_rule(a.rule == "std" ? "standard" : a.rule);
    const std::vector<Vertex> s = parse_list(a.set);
    const ClosureResult r = closure(g, s, rule);
    valid = r.state.all_blue();
    j = {{"kind", "set"}, {"rule", to_string(rule)}, {"valid", valid}, {"blue", r.state.count()}};
    if (valid) {
      j["certificate"] = to_json(checked(g, r.certificate));
    } else {
      std::vector<Vertex> white;
      for (Vertex v = 0; v < g.order(); ++v) {
        if (!r.state.is_blue(v)) white.push_back(v);
      }
      j["white"] = white;
    }
  } else {
    throw ParseError("certify needs --set, --sequence or --certificate", 1, 0);
  }
  sink.line(j, c.pretty);
  return valid ? kOk : kProperty;
}

// ---- construct -------------------------------------------------------------

struct ConstructArgs {
  std::string family;
  std::optional<int> size;
  std::string mop_kind = "random";
};

json exact_forcing(const SimpleGraph& g, const SolverConfig& cfg) {
  json j;
  for (Rule rule : {Rule::standard, Rule::loop}) {
    try {
      const ForcingResult f = forcing_number(g, rule, cfg);
      checked(g, f.certificate);
      j[rule == Rule::standard ? "z" : "z_loop"] = f.number;
    } catch (const SizeCapExceeded&) {
      j[rule == Rule::standard ? "z" : "z_loop"] = nullptr;
    }
  }
  return j;
}

json construct_halin(const HalinStructure& hs, const SolverConfig& cfg) {
  const HalinForcingSet fs = construct_forcing_set(hs);
  json j = {{"family", "halin"},
            {"n", hs.graph.order()},
            {"end_support", hs.end_support},
            {"root", fs.root},
            {"set", fs.set},
            {"size", fs.set.size()},
            {"windows_disjoint", fs.windows_disjoint},
            {"certificate", to_json(checked(hs.graph, fs.certificate))},
            {"report", to_json(halin_report(hs))},
            {"tree", to_json(hs.embedding)}};
  json chosen = json::object();
  for (const auto& [s, leaf] : fs.chosen_leaf) chosen[std::to_string(s)] = leaf;
  j["chosen_leaf"] = chosen;
  j["exact"] = exact_forcing(hs.graph, cfg);
  return j;
}

json construct_mop(const Mop& m, const SolverConfig& cfg) {
  const MopStructure s = analyze(m);
  json j = {{"family", "mop"},
            {"mop", to_json(m)},
            {"structure", to_json(s)},
            {"bounds", to_json(bounds_report(s))}};
  j["exact"] = exact_forcing(m.graph(), cfg);
  return j;
}

json construct_cubic(const SimpleGraph& g) {
  const ConstructionTrace tr = construct_forcing_set(g);
  checked(g, tr.certificate);
  json j = to_json(tr);
  j["family"] = "cubic";
  return j;
}

int cmd_construct(const Common& c, const ConstructArgs& a) {
  const SolverConfig cfg = solver_config(c);
  Sink sink(c.out);
  const bool generate = c.input == "-" && a.size.has_value();
  json j;
  if (a.family == "halin") {
    j = construct_halin(generate ? generate_random_halin(*a.size, c.seed)
                                 : build_halin(plane_tree_from_json(read_json(c))),
                        cfg);
  } else if (a.family == "mop") {
    Mop m;
    if (generate) {
      m = a.mop_kind == "serpentine" ? generate_serpentine(*a.size - 2, c.seed)
                                     : generate_random_mop(*a.size, c.seed);
    } else {
      m = mop_from_json(read_json(c));
    }
    j = construct_mop(m, cfg);
  } else if (a.family == "cubic" || a.family == "ring") {
    std::vector<SimpleGraph> graphs;
    if (generate) {
      graphs.push_back(a.family == "ring"
                           ? ring_of_diamonds(*a.size).graph
                           : synthesize(random_decomposition(*a.size, 0.3, 3, c.seed), c.seed).graph);
    } else {
      graphs = read_graphs(c);
    }
    for (std::size_t i = 0; i + 1 < graphs.size(); ++i) sink.line(construct_cubic(graphs[i]), c.pretty);
    j = construct_cubic(graphs.back());
  } else {
    throw ParseError("unknown family " + a.family, 1, 0);
  }
  sink.line(j, c.pretty);
  return kOk;
}

// ---- survey ----------------------------------------------------------------

struct SurveyArgs {
  std::string family = "random";
  int count = 100;
  int min_size = 4;
  int max_size = 10;
  std::vector<std::string> checks;
  std::string mop_kind = "random";
};

const std::vector<std::string> kChecks = {"duality", "thm-2-3", "thm-2-6", "prop-3-2", "thm-1-1",
                                          "dh-bound", "prop-1-4", "observation-count"};

enum class Status { pass, fail, skip };

struct CheckOutcome {
  Status status = Status::skip;
  std::string detail;
};

struct InstanceResult {
  int n = 0;
  std::uint64_t seed = 0;
  std::map<std::string, CheckOutcome> outcomes;
  std::optional<int> observation;  // number of minimum forcing sets
  std::string error;
};

std::uint64_t instance_seed(std::uint64_t seed, int index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index)};
  std::array<std::uint32_t, 2> out{};
  seq.generate(out.begin(), out.end());
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

struct Instance {
  SimpleGraph graph;
  std::optional<Mop> mop;
  std::optional<HalinStructure> halin;
  bool cubic = false;
  bool ring = false;
};

Instance make_instance(const SurveyArgs& a, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int size = std::uniform_int_distribution<int>(a.min_size, a.max_size)(rng);
  Instance inst;
  if (a.family == "random") {
    const double p = std::uniform_real_distribution<double>(0.2, 0.7)(rng);
    inst.graph = random_connected_graph(size, p, rng);
  } else if (a.family == "mop") {
    inst.mop = a.mop_kind == "serpentine" ? generate_serpentine(size - 2, seed)
                                          : generate_random_mop(size, seed);
    inst.graph = inst.mop->graph();
  } else if (a.family == "halin") {
    inst.halin = generate_random_halin(size, seed);
    inst.graph = inst.halin->graph;
  } else if (a.family == "cubic") {
    inst.cubic = true;
    const int h = std::max(2, size - size % 2);
    inst.graph = synthesize(random_decomposition(h, 0.3, 3, seed), seed).graph;
  } else if (a.family == "ring") {
    inst.ring = true;
    inst.graph = ring_of_diamonds(std::max(2, size)).graph;
  } else {
    throw ParseError("unknown family " + a.family, 1, 0);
  }
  return inst;
}

CheckOutcome verdict(bool ok, std::string detail) {
  return {ok ? Status::pass : Status::fail, ok ? std::string() : std::move(detail)};
}

CheckOutcome skip(std::string why) { return {Status::skip, std::move(why)}; }

CheckOutcome run_check(const std::string& name, const Instance& inst, const SolverConfig& cfg,
                       InstanceResult& res) {
  const SimpleGraph& g = inst.graph;
  const int n = g.order();
  if (name == "duality") {
    const InvariantReport r = check_duality(g, cfg);
    return verdict(r.duality_ok, "z=" + std::to_string(r.z) + " gr_z=" + std::to_string(r.gr_z) +
                                     " z_loop=" + std::to_string(r.z_loop) +
                                     " gr=" + std::to_string(r.gr));
  }
  if (name == "prop-1-4") {
    return verdict(min_degree_bound_check(g, cfg), "gr exceeds n - delta");
  }
  if (name == "thm-2-3" || name == "thm-2-6" || name == "observation-count") {
    if (!inst.mop) return skip("not a MOP");
    const MopStructure s = analyze(*inst.mop);
    if (name == "observation-count") {
      if (!s.serpentine) return skip("not serpentine");
      res.observation =
          static_cast<int>(enumerate_minimum_forcing_sets(g, Rule::standard, cfg).size());
      return skip("reported");
    }
    const MopBounds b = bounds_report(s);
    const int z = forcing_number(g, Rule::standard, cfg).number;
    if (name == "thm-2-3") {
      return verdict(z <= b.upper_z, "Z=" + std::to_string(z) + " above " + std::to_string(b.upper_z));
    }
    for (const BoundEntry& e : b.entries) {
      if (e.applies && e.kind == BoundKind::lower && e.invariant == "z" && z < e.value) {
        return verdict(false, e.name + ": Z=" + std::to_string(z) + " below " + std::to_string(e.value));
      }
    }
    return verdict(true, {});
  }
  if (name == "prop-3-2") {
    if (!inst.halin) return skip("not a Halin graph");
    const HalinForcingSet fs = construct_forcing_set(*inst.halin);
    const int bound = 3 * (static_cast<int>(inst.halin->end_support.size()) - 1);
    if (!certifies_forcing_set(g, fs.certificate) || static_cast<int>(fs.set.size()) > bound) {
      return verdict(false, "constructed set of size " + std::to_string(fs.set.size()));
    }
    if (n <= cfg.forcing_cap) {
      const int z = forcing_number(g, Rule::standard, cfg).number;
      if (z > static_cast<int>(fs.set.size())) return verdict(false, "exact Z above |S|");
    }
    return verdict(true, {});
  }
  if (name == "thm-1-1") {
    if (!inst.cubic && !inst.ring) return skip("not claw-free cubic");
    const ConstructionTrace tr = construct_forcing_set(g);
    const int size = static_cast<int>(tr.s_prime.size());
    if (!certifies_forcing_set(g, tr.certificate)) return verdict(false, "certificate fails");
    if (inst.ring ? size != n / 4 + 2 : size > cubic_bound(n)) {
      return verdict(false, tr.case_name + ": |S'|=" + std::to_string(size));
    }
    if (n <= cfg.forcing_cap && forcing_number(g, Rule::standard, cfg).number > size) {
      return verdict(false, "exact Z above |S'|");
    }
    return verdict(true, {});
  }
  if (name == "dh-bound") {
    if (!inst.cubic && !inst.ring) return skip("not claw-free cubic");
    if (n < 10) return skip("n below 10");
    return verdict(davila_henning_check(g, cfg.forcing_cap), "Z above n/3 + 1");
  }
  throw ParseError("unknown check " + name, 1, 0);
}

InstanceResult run_instance(const SurveyArgs& a, const SolverConfig& cfg, std::uint64_t seed) {
  InstanceResult res;
  res.seed = seed;
  const Instance inst = make_instance(a, seed);
  res.n = inst.graph.order();
  for (const std::string& name : a.checks) {
    try {
      res.outcomes[name] = run_check(name, inst, cfg, res);
    } catch (const SizeCapExceeded& e) {
      res.outcomes[name] = skip(e.what());
    } catch (const std::exception& e) {
      res.outcomes[name] = {Status::fail, e.what()};
    }
  }
  return res;
}

std::vector<std::string> default_checks(const std::string& family) {
  if (family == "mop") return {"thm-2-3", "thm-2-6"};
  if (family == "halin") return {"prop-3-2"};
  if (family == "cubic" || family == "ring") return {"thm-1-1"};
  return {"duality", "prop-1-4"};
}

int cmd_survey(const Common& c, SurveyArgs a) {
  if (a.checks.empty()) a.checks = default_checks(a.family);
  for (const std::string& name : a.checks) {
    if (std::find(kChecks.begin(), kChecks.end(), name) == kChecks.end()) {
      throw ParseError("unknown check " + name, 1, 0);
    }
  }
  if (a.min_size > a.max_size || a.count < 0) throw ParseError("empty size range or count", 1, 0);
  make_instance(a, c.seed);  // rejects an unknown family before threads start

  const SolverConfig cfg = solver_config(c);
  std::vector<InstanceResult> results(a.count);
  std::atomic<int> next{0};
  auto work = [&] {
    for (int i = next++; i < a.count; i = next++) {
      results[i] = run_instance(a, cfg, instance_seed(c.seed, i));
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(c.workers, std::max(1, a.count)));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (std::thread& t : pool) t.join();

  Sink sink(c.out);
  std::map<std::string, std::array<int, 3>> tally;
  std::map<int, int> observations;
  bool failed = false;
  for (const std::string& name : a.checks) tally[name] = {0, 0, 0};
  for (int i = 0; i < a.count; ++i) {
    const InstanceResult& r = results[i];
    json failures = json::array();
    for (const auto& [name, o] : r.outcomes) {
      ++tally[name][static_cast<int>(o.status)];
      if (o.status == Status::fail) failures.push_back({{"check", name}, {"detail", o.detail}});
    }
    if (r.observation) ++observations[*r.observation];
    if (failures.empty() && !r.observation) continue;
    failed |= !failures.empty();
    json line = {{"index", i}, {"n", r.n}, {"seed", r.seed}};
    if (!failures.empty()) line["failures"] = failures;
    if (r.observation) line["minimum_forcing_sets"] = *r.observation;
    if (c.pretty) {
      for (const json& f : failures) {
        sink.os() << "instance " << i << " (n=" << r.n << "): " << f["check"].get<std::string>()
                  << " failed: " << f["detail"].get<std::string>() << '\n';
      }
    } else {
      sink.line(line, false);
    }
  }

  if (c.pretty) {
    sink.os() << "family " << a.family << ", " << a.count << " instances, seed " << c.seed << '\n';
    sink.os() << std::left << std::setw(20) << "check" << std::right << std::setw(7) << "pass"
              << std::setw(7) << "fail" << std::setw(7) << "skip" << '\n';
    for (const auto& [name, t] : tally) {
      sink.os() << std::left << std::setw(20) << name << std::right << std::setw(7) << t[0]
                << std::setw(7) << t[1] << std::setw(7) << t[2] << '\n';
    }
    for (const auto& [count, times] : observations) {
      sink.os() << "minimum forcing sets = " << count << ": " << times << " instances\n";
    }
  } else {
    json summary = {{"family", a.family}, {"count", a.count}, {"seed", c.seed}};
    json checks = json::object();
    for (const auto& [name, t] : tally) checks[name] = {{"pass", t[0]}, {"fail", t[1]}, {"skip", t[2]}};
    summary["checks"] = checks;
    if (!observations.empty()) {
      json obs = json::object();
      for (const auto& [count, times] : observations) obs[std::to_string(count)] = times;
      summary["minimum_forcing_sets"] = obs;
    }
    sink.line({{"summary", summary}}, false);
  }
  return failed ? kProperty : kOk;
}

void add_common(CLI::App* app, Common& c, bool graph_format) {
  app->add_option("--input", c.input, "Input file, - for stdin");
  if (graph_format) {
    app->add_option("--format", c.format, "Graph format")->check(CLI::IsMember({"json", "graph6"}));
  }
  app->add_option("--seed", c.seed, "Seed for all randomness");
  app->add_option("--cap", c.cap, "Largest order for exact searches");
  app->add_flag("--pretty", c.pretty, "Human-readable output");
  app->add_option("--out", c.out, "Write output to this file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zero forcing and Grundy domination lab"};
  app.require_subcommand(1);
  Common common;

  std::string invariant = "all";
  auto* compute = app.add_subcommand("compute", "Exact invariants of each input graph");
  add_common(compute, common, true);
  compute->add_option("--invariant", invariant, "z, zloop, gr, grz or all")
      ->check(CLI::IsMember({"z", "zloop", "gr", "grz", "all"}));

  CertifyArgs certify_args;
  auto* certify = app.add_subcommand("certify", "Check a forcing set, sequence or certificate");
  add_common(certify, common, true);
  certify->add_option("--set", certify_args.set, "Comma-separated initial blue set");
  certify->add_option("--sequence", certify_args.sequence, "Comma-separated vertex sequence");
  certify->add_option("--certificate", certify_args.certificate, "JSON certificate file");
  certify->add_option("--rule", certify_args.rule, "Color change rule")
      ->check(CLI::IsMember({"std", "loop"}));
  certify->add_option("--variant", certify_args.variant, "Sequence kind")
      ->check(CLI::IsMember({"closed", "z"}));

  ConstructArgs construct_args;
  auto* construct = app.add_subcommand("construct", "Constructive forcing sets for a family");
  add_common(construct, common, true);
  construct->add_option("--family", construct_args.family, "halin, cubic, ring or mop")
      ->required()
      ->check(CLI::IsMember({"halin", "cubic", "ring", "mop"}));
  construct->add_option("--size", construct_args.size,
                        "Generate instead of reading: internal vertices (halin), H order "
                        "(cubic), diamonds (ring), vertices (mop)");
  construct->add_option("--mop-kind", construct_args.mop_kind, "random or serpentine")
      ->check(CLI::IsMember({"random", "serpentine"}));

  SurveyArgs survey_args;
  auto* survey = app.add_subcommand("survey", "Check named properties over generated instances");
  add_common(survey, common, false);
  survey->add_option("--family", survey_args.family, "random, mop, halin, cubic or ring")
      ->check(CLI::IsMember({"random", "mop", "halin", "cubic", "ring"}));
  survey->add_option("--count", survey_args.count, "Number of instances");
  survey->add_option("--min-size", survey_args.min_size, "Smallest size parameter");
  survey->add_option("--max-size", survey_args.max_size, "Largest size parameter");
  survey->add_option("--checks", survey_args.checks, "Properties to check")
      ->delimiter(',')
      ->check(CLI::IsMember(kChecks));
  survey->add_option("--workers", common.workers, "Worker threads");
  survey->add_option("--mop-kind", survey_args.mop_kind, "random or serpentine")
      ->check(CLI::IsMember({"random", "serpentine"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*compute) return cmd_compute(common, invariant);
    if (*certify) return cmd_certify(common, certify_args);
    if (*construct) return cmd_construct(common, construct_args);
    return cmd_survey(common, survey_args);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const json::exception& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const InvalidMop& e) {
    std::cerr << "invalid MOP (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return kScope;
  } catch (const GraphError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const SizeCapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kCap;
  } catch (const NotInScope& e) {
    std::cerr << "out of scope: " << e.what() << '\n';
    return kScope;
  } catch (const NotClawFreeCubic2EC& e) {
    std::cerr << "out of scope: " << e.what() << '\n';
    return kScope;
  } catch (const DegenerateTree& e) {
    std::cerr << "out of scope: " << e.what() << '\n';
    return kScope;
  } catch (const DisconnectedGraph& e) {
    std::cerr << "out of scope: " << e.what() << '\n';
    return kScope;
  } catch (const DuplicateVertex& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kProperty;
  }
}
