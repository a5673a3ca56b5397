#include "hedgegraph/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "hedgegraph/matroid.hpp"
#include "hedgegraph/measures.hpp"
#include "hedgegraph/oracle.hpp"
#include "hedgegraph/polymatroid.hpp"
#include "hedgegraph/stochastic.hpp"

namespace hedge::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string file;
  bool exact = false;
  std::uint64_t seed = 0;
  std::size_t trials = 1000;
  double epsilon = 0.5;
  std::optional<std::size_t> k;
  std::optional<std::string> root;
  double c0 = kDefaultSparsifierConstant;
  std::optional<double> p;
  std::optional<std::int64_t> t;
  std::string witness;
  bool base = false;
  bool certificate = false;
  bool timing = false;
};

// Thrown for bad input that is not a parse error of the hedgegraph itself.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Context {
  const Options& options;
  const Hedgegraph& graph;
  OracleLimits limits;
  Json& out;
  std::ostringstream& err;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Json hedge_names(const Hedgegraph& g, const HedgeSet& set) {
  Json out = Json::array();
  set.for_each([&](HedgeIndex e) { out.push_back(g.hedge(e).id); });
  return out;
}

Json vertex_names(const Hedgegraph& g, const std::vector<VertexId>& vs) {
  Json out = Json::array();
  for (VertexId v : vs) out.push_back(g.vertex_name(v));
  return out;
}

Json partition_json(const Hedgegraph& g, const Partition& p) {
  Json out = Json::array();
  for (const auto& block : p.blocks()) out.push_back(vertex_names(g, block));
  return out;
}

Json rational_json(const Extended<Rational>& r) { return r.is_finite() ? to_string(r.value()) : "inf"; }

Json trimming_json(const Hedgegraph& g, const Trimming& t) {
  Json out = Json::array();
  for (const auto& x : t)
    out.push_back({{"hedge", g.hedge(x.hedge).id},
                   {"hyperedge", x.hyperedge},
                   {"pair", {g.vertex_name(x.u), g.vertex_name(x.v)}}});
  return out;
}

std::string describe(const Hedgegraph& g, const Partition& p) {
  std::string s;
  for (const auto& block : p.blocks()) {
    s += s.empty() ? "{" : " | {";
    for (std::size_t i = 0; i < block.size(); ++i) s += (i ? " " : "") + g.vertex_name(block[i]);
    s += "}";
  }
  return s;
}

// Certificate for a partition P that violates |delta(P)| >= k (|P| - 1).
int boundary_certificate(Context& c, const Partition& p, std::size_t k) {
  const auto d = partition_boundary(c.graph, p);
  const std::size_t required = k * (p.block_count() - 1);
  c.out["certificate"] = {{"partition", partition_json(c.graph, p)},
                          {"boundary", hedge_names(c.graph, d)},
                          {"boundary_size", d.size()},
                          {"required", required}};
  if (c.options.certificate)
    c.err << "certificate: partition " << describe(c.graph, p) << " has |delta(P)| = " << d.size() << " < " << required
          << "\n";
  return kInfeasible;
}

VertexId resolve_root(const Context& c) {
  if (!c.options.root) return 0;
  auto v = c.graph.find_vertex(*c.options.root);
  if (!v) throw InputError("unknown root vertex '" + *c.options.root + "'");
  return *v;
}

int cmd_info(Context& c) {
  const auto& g = c.graph;
  Json hedges = Json::array();
  for (const auto& h : g.hedges()) {
    Json hyperedges = Json::array();
    for (const auto& he : h.hyperedges) hyperedges.push_back(vertex_names(g, he.vertices));
    hedges.push_back({{"id", h.id}, {"weight", to_string(h.weight)}, {"hyperedges", hyperedges}});
  }
  Partition comps = components(g, g.all_hedges());
  c.out["vertices"] = g.vertex_names();
  c.out["hedges"] = hedges;
  c.out["representation_size"] = g.representation_size();
  c.out["f_full"] = polymatroid_f(g, g.all_hedges());
  c.out["connected"] = comps.block_count() == 1;
  c.out["components"] = partition_json(g, comps);
  return kSuccess;
}

int cmd_connectivity(Context& c) {
  if (c.options.exact) {
    CutWitness w = exact_connectivity(c.graph, c.limits);
    c.out["method"] = "exhaustive";
    c.out["value"] = w.value;
    c.out["witness_cut"] = {{"side", vertex_names(c.graph, w.side)},
                            {"hedges", hedge_names(c.graph, cut_hedges(c.graph, w.side))}};
    return kSuccess;
  }
  MeasureReport r = approx_connectivity(c.graph, c.limits);
  c.out["method"] = r.method;
  c.out["lo"] = r.lo;
  c.out["hi"] = r.hi;
  if (r.exact()) c.out["value"] = r.lo;
  for (const auto& note : r.notes) c.out["notes"].push_back(note);
  return kSuccess;
}

int cmd_pc(Context& c) {
  if (c.options.exact) {
    PartitionWitness w = exact_pc(c.graph, c.limits);
    c.out["method"] = "exhaustive";
    c.out["value"] = w.value;
    c.out["witness_partition"] = partition_json(c.graph, w.partition);
    return kSuccess;
  }
  MeasureReport r = partition_connectivity(c.graph);
  c.out["method"] = r.method;
  c.out["value"] = r.value();
  if (r.ratio) c.out["kappa"] = to_string(*r.ratio);
  if (r.witness_partition) c.out["witness_partition"] = partition_json(c.graph, *r.witness_partition);
  if (r.methods_agree) c.out["methods_agree"] = *r.methods_agree;
  return kSuccess;
}

int cmd_wpc(Context& c) {
  MeasureReport r = weak_partition_connectivity(c.graph, c.limits);
  c.out["method"] = r.method;
  c.out["value"] = r.value();
  if (r.witness_partition) c.out["witness_partition"] = partition_json(c.graph, *r.witness_partition);
  for (const auto& note : r.notes) c.out["notes"].push_back(note);
  return kSuccess;
}

int cmd_kstar(Context& c) {
  if (c.options.exact) {
    KStarResult k = exact_kstar(c.graph, c.limits);
    c.out["method"] = "exhaustive";
    if (k.value.is_infinite()) {
      c.out["value"] = "inf";
    } else {
      c.out["value"] = k.value.value();
      c.out["argmin"] = hedge_names(c.graph, k.argmin);
    }
    return kSuccess;
  }
  MeasureReport r = kstar_approx(c.graph, c.limits);
  c.out["method"] = r.method;
  c.out["lo"] = r.lo;
  c.out["hi"] = r.hi;
  if (r.exact_value) c.out["exact_value"] = *r.exact_value;
  if (r.witness_hedges) c.out["exact_argmin"] = hedge_names(c.graph, *r.witness_hedges);
  for (const auto& note : r.notes) c.out["notes"].push_back(note);
  return kSuccess;
}

int cmd_decompose(Context& c) {
  std::size_t k = 0;
  if (c.options.k) {
    k = *c.options.k;
  } else {
    k = static_cast<std::size_t>(std::max<std::int64_t>(1, partition_connectivity(c.graph).value()));
  }
  PackingResult r = pack_bases(c.graph, k);
  c.out["k"] = k;
  c.out["success"] = r.success;
  if (!r.success) return boundary_certificate(c, *r.certificate, k);
  Json bases = Json::array();
  for (std::size_t i = 0; i < r.bases.size(); ++i)
    bases.push_back({{"hedges", hedge_names(c.graph, r.bases[i])}, {"trimming", trimming_json(c.graph, r.trimmings[i])}});
  c.out["bases"] = bases;
  c.out["leftover"] = hedge_names(c.graph, r.leftover);
  return kSuccess;
}

Json cover_json(const Hedgegraph& g, const CoverResult& cover) {
  Json classes = Json::array();
  for (std::size_t i = 0; i < cover.classes.size(); ++i)
    classes.push_back({{"hedges", hedge_names(g, cover.classes[i])}, {"trimming", trimming_json(g, cover.trimmings[i])}});
  return classes;
}

// Certificate for |E[P]| > k (|V| - |P|).
Json cover_certificate(Context& c, const Partition& p, std::size_t k) {
  const auto inside = internal_hedges(c.graph, p);
  const std::size_t allowed = k * (c.graph.vertex_count() - p.block_count());
  if (c.options.certificate)
    c.err << "certificate: partition " << describe(c.graph, p) << " has |E[P]| = " << inside.size() << " > "
          << allowed << "\n";
  return {{"partition", partition_json(c.graph, p)},
          {"internal", hedge_names(c.graph, inside)},
          {"internal_size", inside.size()},
          {"allowed", allowed}};
}

int cmd_cover(Context& c) {
  if (c.options.k) {
    CoverResult r = cover_acyclic_trimmable(c.graph, *c.options.k);
    c.out["k"] = *c.options.k;
    c.out["success"] = r.success;
    if (!r.success) {
      c.out["certificate"] = cover_certificate(c, *r.certificate, *c.options.k);
      return kInfeasible;
    }
    c.out["classes"] = cover_json(c.graph, r);
    return kSuccess;
  }
  CoverNumber r = min_cover_number(c.graph);
  c.out["value"] = r.k;
  c.out["classes"] = cover_json(c.graph, r.cover);
  if (r.below_certificate) c.out["below_certificate"] = cover_certificate(c, *r.below_certificate, r.k - 1);
  return kSuccess;
}

int cmd_trim(Context& c) {
  SpanningTreeResult r = spanning_tree_trimming(c.graph);
  c.out["success"] = r.found;
  if (!r.found) return boundary_certificate(c, *r.certificate, 1);
  c.out["hedges"] = hedge_names(c.graph, r.hedges);
  c.out["trimming"] = trimming_json(c.graph, r.trimming);
  return kSuccess;
}

Json orientation_json(const Hedgegraph& g, const Orientation& o) {
  Json choices = Json::array();
  for (std::size_t e = 0; e < o.choices.size(); ++e)
    choices.push_back({{"hedge", g.hedge(static_cast<HedgeIndex>(e)).id},
                       {"hyperedge", o.choices[e].hyperedge},
                       {"head", g.vertex_name(o.choices[e].head)}});
  return choices;
}

int cmd_orient(Context& c) {
  const std::size_t k = c.options.k.value_or(1);
  const VertexId root = resolve_root(c);
  OrientResult r = orient(c.graph, k, root);
  c.out["k"] = k;
  c.out["root"] = c.graph.vertex_name(root);
  c.out["success"] = r.success;
  if (!r.success) return boundary_certificate(c, *r.certificate, k);
  c.out["choices"] = orientation_json(c.graph, r.orientation);
  return kSuccess;
}

Json report_json(const ExperimentReport& r) {
  return {{"trials", r.trials},   {"successes", r.successes}, {"frequency", r.frequency},
          {"probability", r.probability}, {"n", r.n},     {"strength", r.strength},
          {"f_full", r.f_full},   {"target", r.target}};
}

int cmd_sample(Context& c) {
  ExperimentOptions e;
  e.trials = c.options.trials;
  e.seed = c.options.seed;
  e.probability = c.options.p;
  ExperimentReport r = c.options.base ? base_sampling_experiment(c.graph, e, c.limits)
                                      : connectivity_sampling_experiment(c.graph, e, c.limits);
  c.out["experiment"] = c.options.base ? "base" : "connectivity";
  c.out["seed"] = c.options.seed;
  c.out["report"] = report_json(r);
  return kSuccess;
}

int cmd_sparsify(Context& c) {
  const auto w = c.graph.weights();
  SparsifierResult r = sparsify_partitions(c.graph, w, c.options.epsilon, c.options.seed, c.options.c0);
  Json hedges = Json::array();
  for (std::size_t e = 0; e < w.size(); ++e)
    hedges.push_back({{"hedge", c.graph.hedge(static_cast<HedgeIndex>(e)).id},
                      {"weight", to_string(w[e])},
                      {"strength", rational_json(r.strength[e])},
                      {"probability", r.probability[e]},
                      {"new_weight", r.weights[e]}});
  c.out["epsilon"] = c.options.epsilon;
  c.out["seed"] = c.options.seed;
  c.out["c0"] = c.options.c0;
  c.out["rho"] = r.rho;
  c.out["support"] = r.support;
  c.out["support_bound"] = sparsifier_support_bound(c.graph.vertex_count(), c.options.epsilon, c.options.c0);
  c.out["hedges"] = hedges;
  return kSuccess;
}

HedgeIndex hedge_by_id(const Hedgegraph& g, const Json& id) {
  auto e = g.find_hedge(id.get<std::string>());
  if (!e) throw InputError("witness names unknown hedge '" + id.get<std::string>() + "'");
  return *e;
}

VertexId vertex_by_name(const Hedgegraph& g, const Json& name) {
  auto v = g.find_vertex(name.get<std::string>());
  if (!v) throw InputError("witness names unknown vertex '" + name.get<std::string>() + "'");
  return *v;
}

Trimming parse_trimming(const Hedgegraph& g, const Json& items) {
  Trimming t;
  for (const auto& x : items) {
    VertexId u = vertex_by_name(g, x.at("pair").at(0));
    VertexId v = vertex_by_name(g, x.at("pair").at(1));
    if (u > v) std::swap(u, v);
    t.push_back({hedge_by_id(g, x.at("hedge")), x.at("hyperedge").get<std::uint32_t>(), u, v});
  }
  return t;
}

int verify_orientation_witness(Context& c, const Json& w) {
  Orientation o;
  o.root = vertex_by_name(c.graph, w.at("root"));
  o.choices.assign(c.graph.hedge_count(), {});
  std::vector<bool> seen(c.graph.hedge_count(), false);
  for (const auto& x : w.at("choices")) {
    HedgeIndex e = hedge_by_id(c.graph, x.at("hedge"));
    o.choices[e] = {x.at("hyperedge").get<std::uint32_t>(), vertex_by_name(c.graph, x.at("head"))};
    seen[e] = true;
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) throw InputError("orientation misses a hedge");
  const auto k = static_cast<std::int64_t>(c.options.k.value_or(w.value("k", std::size_t{1})));
  OrientationCheck check = verify_orientation(c.graph, o, k, c.limits);
  c.out["k"] = k;
  c.out["valid"] = check.valid;
  if (check.valid) return kSuccess;
  c.out["certificate"] = {{"violating_set", vertex_names(c.graph, check.violating)}, {"out_degree", check.out_degree}};
  if (c.options.certificate)
    c.err << "certificate: set " << vertex_names(c.graph, check.violating).dump() << " has out-degree "
          << check.out_degree << " < " << k << "\n";
  return kInfeasible;
}

int verify_sparsifier_witness(Context& c, const Json& w) {
  std::vector<double> new_weights(c.graph.hedge_count(), 0.0);
  for (const auto& x : w.at("hedges")) new_weights[hedge_by_id(c.graph, x.at("hedge"))] = x.at("new_weight").get<double>();
  const double epsilon = w.value("epsilon", c.options.epsilon);
  const auto weights = c.graph.weights();
  SparsifierCheck check = verify_sparsifier(c.graph, weights, new_weights, epsilon, c.limits);
  c.out["epsilon"] = epsilon;
  c.out["valid"] = check.ok;
  c.out["max_relative_error"] = std::isinf(check.max_relative_error) ? Json("inf") : Json(check.max_relative_error);
  if (check.worst) c.out["worst_partition"] = partition_json(c.graph, *check.worst);
  if (check.ok) return kSuccess;
  if (c.options.certificate)
    c.err << "certificate: partition " << describe(c.graph, *check.worst) << " has relative error "
          << check.max_relative_error << " > " << epsilon << "\n";
  return kInfeasible;
}

int verify_trimmings(Context& c, const std::vector<Trimming>& trimmings, bool spanning) {
  HedgeSet used = c.graph.no_hedges();
  bool valid = true;
  for (const auto& t : trimmings) {
    const bool ok = spanning ? is_spanning_tree_trimming(c.graph, t) : is_forest_trimming(c.graph, t);
    HedgeSet hs = trimmed_hedges(c.graph, t);
    valid = valid && ok && (used & hs).empty();
    used |= hs;
  }
  c.out["valid"] = valid;
  return valid ? kSuccess : kInfeasible;
}

int cmd_verify(Context& c) {
  if (c.options.witness.empty()) throw InputError("verify needs --witness <json>");
  Json w;
  try {
    w = Json::parse(read_file(c.options.witness));
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("witness is not valid JSON: ") + e.what());
  }
  const std::string kind = w.value("command", std::string());
  c.out["witness_command"] = kind;
  if (w.contains("input") && w["input"].value("digest", std::string()) != c.out["input"]["digest"])
    c.out["notes"].push_back("witness was produced from a different input file");
  try {
    if (kind == "orient" && w.value("success", false)) return verify_orientation_witness(c, w);
    if (kind == "sparsify") return verify_sparsifier_witness(c, w);
    if (kind == "trim" && w.value("success", false)) return verify_trimmings(c, {parse_trimming(c.graph, w.at("trimming"))}, true);
    if (kind == "decompose" && w.value("success", false)) {
      std::vector<Trimming> ts;
      for (const auto& b : w.at("bases")) ts.push_back(parse_trimming(c.graph, b.at("trimming")));
      return verify_trimmings(c, ts, true);
    }
    if (kind == "cover" && w.contains("classes")) {
      std::vector<Trimming> ts;
      for (const auto& b : w.at("classes")) ts.push_back(parse_trimming(c.graph, b.at("trimming")));
      return verify_trimmings(c, ts, false);
    }
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed witness: ") + e.what());
  }
  throw InputError("witness of kind '" + kind + "' cannot be verified");
}

int cmd_quotients(Context& c) {
  const auto w = c.graph.weights();
  auto quotients = enumerate_quotients(c.graph, c.limits);
  RatioResult kappa = min_ratio(polymatroid_oracle(c.graph), w);
  Json list = Json::array();
  for (const auto& q : quotients) {
    Rational total(0);
    q.for_each([&](HedgeIndex e) { total += w[e]; });
    list.push_back({{"hedges", hedge_names(c.graph, q)}, {"weight", to_string(total)}});
  }
  c.out["kappa"] = rational_json(kappa.value);
  c.out["count"] = quotients.size();
  c.out["quotients"] = list;
  if (c.options.t) {
    c.out["t"] = *c.options.t;
    c.out["small_count"] = count_small_quotients(c.graph, w, *c.options.t, c.limits);
  }
  return kSuccess;
}

struct Command {
  const char* name;
  const char* help;
  std::function<int(Context&)> run;
  std::vector<std::string> flags;
};

const std::vector<Command>& commands() {
  static const std::vector<Command> table = {
      {"info", "Summarize the hedgegraph", cmd_info, {}},
      {"connectivity", "Hedge connectivity (band, or exact with --exact)", cmd_connectivity, {"exact"}},
      {"pc", "Partition connectivity", cmd_pc, {"exact"}},
      {"wpc", "Weak partition connectivity (exhaustive)", cmd_wpc, {"exact"}},
      {"kstar", "Functional strength k* (band, or exact with --exact)", cmd_kstar, {"exact"}},
      {"decompose", "Pack k disjoint spanning hedge sets", cmd_decompose, {"k"}},
      {"cover", "Cover by acyclic trimmable sets", cmd_cover, {"k"}},
      {"trim", "Spanning tree trimming", cmd_trim, {}},
      {"orient", "Rooted k-out orientation", cmd_orient, {"k", "root"}},
      {"sample", "Hedge sampling experiment", cmd_sample, {"seed", "trials", "p", "base"}},
      {"sparsify", "Partition sparsifier", cmd_sparsify, {"seed", "epsilon", "c0"}},
      {"verify", "Check a witness produced by orient, sparsify, trim, decompose or cover", cmd_verify,
       {"witness", "k", "epsilon"}},
      {"quotients", "Enumerate quotients", cmd_quotients, {"t"}},
  };
  return table;
}

void add_flags(CLI::App* sub, Options& o, const std::vector<std::string>& flags) {
  sub->add_option("--file", o.file, "Input .hg file")->required();
  sub->add_flag("--certificate", o.certificate, "Print certificates in readable form on stderr");
  sub->add_flag("--timing", o.timing, "Include wall-clock timing in the output");
  for (const auto& f : flags) {
    if (f == "exact") sub->add_flag("--exact", o.exact, "Use the exhaustive oracle");
    if (f == "seed") sub->add_option("--seed", o.seed, "Random seed")->capture_default_str();
    if (f == "trials") sub->add_option("--trials", o.trials, "Number of trials")->capture_default_str()->check(CLI::PositiveNumber);
    if (f == "p") sub->add_option("--p", o.p, "Sampling probability")->check(CLI::Range(0.0, 1.0));
    if (f == "base") sub->add_flag("--base", o.base, "Sample for f(S) = f(E) instead of connectivity");
    if (f == "epsilon") sub->add_option("--epsilon", o.epsilon, "Accuracy")->capture_default_str();
    if (f == "c0") sub->add_option("--c0", o.c0, "Sparsifier constant")->capture_default_str();
    if (f == "k") sub->add_option("--k", o.k, "Target k")->check(CLI::PositiveNumber);
    if (f == "root") sub->add_option("--root", o.root, "Root vertex name");
    if (f == "t") sub->add_option("--t", o.t, "Threshold multiple of kappa")->check(CLI::PositiveNumber);
    if (f == "witness") sub->add_option("--witness", o.witness, "JSON output of a previous command")->required();
  }
}

Json error_json(const std::string& command, const char* kind, const std::string& message) {
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["command"] = command;
  out["error"] = {{"kind", kind}, {"message", message}};
  return out;
}

}  // namespace

std::string fnv1a_digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buffer;
}

Outcome run(const std::vector<std::string>& args) {
  Outcome outcome;
  Options options;
  CLI::App app("Hedgegraph connectivity toolkit", "hedgegraph");
  app.require_subcommand(1);
  app.set_version_flag("--version", "hedgegraph schema " + std::to_string(kSchemaVersion));
  std::map<CLI::App*, const Command*> lookup;
  for (const auto& command : commands()) {
    CLI::App* sub = app.add_subcommand(command.name, command.help);
    add_flags(sub, options, command.flags);
    lookup[sub] = &command;
  }

  std::vector<std::string> storage{"hedgegraph"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  std::ostringstream out;
  std::ostringstream err;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    outcome.exit_code = app.exit(e, out, err) == 0 ? kSuccess : kInputError;
    outcome.out = out.str();
    outcome.err = err.str();
    return outcome;
  }

  const Command* command = lookup.at(app.get_subcommands().front());
  Json result;
  result["schema_version"] = kSchemaVersion;
  result["command"] = command->name;
  try {
    const auto start = std::chrono::steady_clock::now();
    const std::string text = read_file(options.file);
    std::vector<ParseWarning> warnings;
    Hedgegraph graph = parse_hedgegraph(text, &warnings);
    for (const auto& w : warnings) err << options.file << ":" << w.line << ": warning: " << w.message << "\n";
    result["input"] = {{"file", options.file},
                       {"digest", fnv1a_digest(text)},
                       {"vertices", graph.vertex_count()},
                       {"hedges", graph.hedge_count()}};
    Context context{options, graph, OracleLimits::from_environment(), result, err};
    outcome.exit_code = command->run(context);
    if (options.timing) {
      const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
      result["timing_ms"] = elapsed.count();
    }
  } catch (const ParseError& e) {
    result = error_json(command->name, "input", options.file + ":" + e.what());
    result["error"]["line"] = e.line();
    outcome.exit_code = kInputError;
  } catch (const OracleLimitError& e) {
    result = error_json(command->name, "oracle_limit", e.what());
    outcome.exit_code = kOracleLimit;
  } catch (const InputError& e) {
    result = error_json(command->name, "input", e.what());
    outcome.exit_code = kInputError;
  } catch (const InvalidArgument& e) {
    result = error_json(command->name, "input", e.what());
    outcome.exit_code = kInputError;
  }
  if (result.contains("error")) err << "error: " << result["error"]["message"].get<std::string>() << "\n";
  outcome.out = result.dump(2) + "\n";
  outcome.err = err.str();
  return outcome;
}

}  // namespace hedge::cli
