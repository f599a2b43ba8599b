#include "rigor/commands.hpp"

#include "rigor/construct.hpp"
#include "rigor/errors.hpp"
#include "rigor/linecon.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>

namespace rigor {

namespace {

using Clock = std::chrono::steady_clock;

struct Input {
  Json json;
  std::string digest;
};

Input load(const CommandOptions& opt) {
  if (opt.file.empty()) throw ParseError("no input file given");
  const std::string text = read_text_file(opt.file);
  return {parse_json(text), fnv1a_hex(text)};
}

Json make_report(const std::string& command, const CommandOptions& opt, const std::string& digest) {
  return {{"command", command},
          {"version", kVersion},
          {"prime", std::to_string(ModP::kModulus)},
          {"input_digest", digest},
          {"seed", opt.seed},
          {"trials", opt.trials}};
}

void write_json(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out << j.dump(2) << '\n';
}

Json trace_to_json(const std::vector<ReductionStep>& trace) {
  Json out = Json::array();
  for (const ReductionStep& s : trace)
    out.push_back({{"vertex", s.vertex}, {"k", s.k}, {"neighbours", s.neighbours}});
  return out;
}

Index mode_dimension(const CommandOptions& opt, const std::string& mode) {
  if (opt.d != 0) return opt.d;
  const Index t = static_cast<Index>(opt.t);
  if (mode == "main") return std::max(2 * t, t * (t - 1));
  if (mode == "plane3d") return 3;
  if (mode == "st2d") return 2;
  return 0;
}

void check_main_hypothesis(Index d, unsigned t) {
  const Index ti = static_cast<Index>(t);
  if (t < 1) throw HypothesisError("t must be positive");
  if (d < std::max(2 * ti, ti * (ti - 1)))
    throw HypothesisError("main mode needs d >= max(2t, t(t-1)); got d = " + std::to_string(d) +
                          ", t = " + std::to_string(t));
}

struct LineInput {
  LoopedGraph graph;
  Index d;
  RationalMatrix q;
};

// Graph G with d and q keyed by loop ids of G^[d-1].
LineInput line_input(const Json& j) {
  LineInput in;
  in.graph = graph_from_json(j);
  if (!j.contains("d") || !j["d"].is_number_integer() || j["d"].get<long long>() < 1)
    throw ParseError("line mode needs a positive integer \"d\"");
  in.d = j["d"].get<Index>();
  if (j.contains("lift") && j["lift"] != in.d - 1)
    throw ParseError("line mode reads q on G^[d-1]; \"lift\" must be d-1 when given");
  const LoopedGraph lifted = add_uniform_loops(in.graph, static_cast<std::size_t>(in.d - 1));
  in.q = normals_from_json(j.contains("q") ? j["q"] : Json::object(), lifted, in.d);
  return in;
}

const char* line_verdict_name(LineVerdict v) {
  switch (v) {
    case LineVerdict::holds: return "holds";
    case LineVerdict::fails: return "fails";
    case LineVerdict::unknown: return "unknown";
  }
  return "unknown";
}

void require_mode(const std::string& mode, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (mode == a) return;
  std::string list;
  for (const char* a : allowed) list += (list.empty() ? "" : "|") + std::string(a);
  throw ParseError("mode must be one of " + list + ", got \"" + mode + "\"");
}

}  // namespace

unsigned poisson(Rng& rng, double mean) {
  const double limit = std::exp(-mean);
  unsigned k = 0;
  double prod = rng.unit();
  while (prod > limit) {
    ++k;
    prod *= rng.unit();
  }
  return k;
}

LoopedGraph random_looped_graph(Rng& rng, std::size_t n, double edge_prob, double loop_rate) {
  LoopedGraph g(n);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (rng.unit() < edge_prob) g.add_edge(u, v);
  for (VertexId v = 0; v < n; ++v) {
    const unsigned c = poisson(rng, loop_rate);
    for (unsigned i = 0; i < c; ++i) g.add_loop(v);
  }
  return g;
}

// -- sparsity ----------------------------------------------------------------

CommandResult cmd_sparsity(const CommandOptions& opt) {
  const Input in = load(opt);
  const LoopedGraph g = graph_from_json(in.json);
  const SparsityParams params{opt.k, opt.l};
  params.validate();
  require_mode(opt.backend, {"pebble", "brute"});
  const SparsityCertificate cert =
      opt.backend == "brute" ? is_sparse_bruteforce(g, params) : is_sparse(g, params);
  const std::size_t rank = matroid_rank(g, params);
  const bool tight = cert.sparse && static_cast<long>(g.element_count()) ==
                                        static_cast<long>(params.k * g.vertex_count()) -
                                            static_cast<long>(params.l);
  CommandResult r;
  r.report = make_report("sparsity", opt, in.digest);
  r.report["verdict"] = tight ? "tight" : cert.sparse ? "sparse" : "not sparse";
  r.report["payload"] = {{"k", opt.k},
                         {"l", opt.l},
                         {"backend", opt.backend},
                         {"sparse", cert.sparse},
                         {"tight", tight},
                         {"rank", rank},
                         {"elements", g.element_count()},
                         {"certificate", certificate_to_json(g, params, cert)},
                         {"revalidated", revalidate(g, params, cert)}};
  r.exit_code = cert.sparse ? exit_code::ok : exit_code::false_verdict;
  return r;
}

// -- characterize ------------------------------------------------------------

CommandResult cmd_characterize(const CommandOptions& opt) {
  require_mode(opt.mode, {"main", "plane3d", "st2d", "line"});
  const Input in = load(opt);
  CommandResult r;
  r.report = make_report("characterize", opt, in.digest);
  Json payload = {{"mode", opt.mode}};
  bool verdict = false;

  if (opt.mode == "line") {
    const LineInput li = line_input(in.json);
    const LineCheck check = line_theorem_check(li.graph, li.d, li.q);
    payload["d"] = li.d;
    Json comps = Json::array();
    for (std::size_t c = 0; c < check.components.size(); ++c) {
      Json entry = {{"vertices", check.components[c]}};
      entry["witness"] = check.witnesses[c] ? element_set_to_json(*check.witnesses[c]) : Json();
      comps.push_back(entry);
    }
    payload["components"] = comps;
    payload["cycle_enumeration_truncated"] = check.truncated;
    r.report["verdict"] = line_verdict_name(check.verdict);
    r.report["payload"] = payload;
    r.exit_code = check.verdict == LineVerdict::holds ? exit_code::ok : exit_code::false_verdict;
    return r;
  }

  const LoopedGraph g = graph_from_json(in.json);
  const Index d = mode_dimension(opt, opt.mode);
  payload["d"] = d;
  if (opt.mode == "main") {
    check_main_hypothesis(d, opt.t);
    payload["t"] = opt.t;
    const auto basis = tight_spanning_basis(g, opt.t);
    verdict = basis.has_value();
    payload["witness"] = basis ? element_set_to_json(*basis) : Json();
  } else if (opt.mode == "plane3d") {
    if (d != 3) throw HypothesisError("plane3d mode is for d = 3");
    const auto basis = tight_k5free_spanning_basis(g);
    verdict = basis.has_value();
    payload["witness"] = basis ? element_set_to_json(*basis) : Json();
    Json k5 = Json::array();
    for (const auto& s : find_k5_subgraphs(g)) k5.push_back(s);
    payload["k5_subgraphs"] = k5;
  } else {
    if (d != 2) throw HypothesisError("st2d mode is for d = 2");
    const std::size_t rank = mixed_count_rank(g);
    verdict = rank == 2 * g.vertex_count();
    payload["mixed_rank"] = rank;
  }
  r.report["verdict"] = verdict;
  r.report["payload"] = payload;
  r.exit_code = verdict ? exit_code::ok : exit_code::false_verdict;
  return r;
}

// -- realize -----------------------------------------------------------------

CommandResult cmd_realize(const CommandOptions& opt) {
  require_mode(opt.mode, {"main", "plane3d", "line"});
  const Input in = load(opt);
  CommandResult r;
  r.report = make_report("realize", opt, in.digest);
  Json payload = {{"mode", opt.mode}};
  std::optional<RationalFramework> framework;

  if (opt.mode == "line") {
    const LineInput li = line_input(in.json);
    framework = realize_line(li.graph, li.d, li.q, opt.seed);
  } else {
    const LoopedGraph g = graph_from_json(in.json);
    const Index d = mode_dimension(opt, opt.mode);
    std::optional<Realization> real;
    if (opt.mode == "main") {
      check_main_hypothesis(d, opt.t);
      payload["t"] = opt.t;
      real = realize_main(g, d, opt.t, opt.seed);
    } else {
      if (d != 3) throw HypothesisError("plane3d mode is for d = 3");
      real = realize_plane(g, opt.seed);
    }
    if (real) {
      payload["trace"] = trace_to_json(real->trace);
      framework = std::move(real->framework);
    }
  }
  if (!framework) {
    r.report["verdict"] = "characterization failed";
    r.report["payload"] = payload;
    r.exit_code = exit_code::characterization_failed;
    return r;
  }
  const Index rank = rigidity_rank(*framework);
  payload["d"] = framework->d;
  payload["rank"] = rank;
  payload["target_rank"] = framework->d * static_cast<Index>(framework->graph.vertex_count());
  const Json fj = framework_to_json(*framework);
  if (opt.out.empty()) {
    payload["framework"] = fj;
  } else {
    write_json(opt.out, fj);
    payload["framework_file"] = opt.out;
  }
  const bool rigid = rank == payload["target_rank"].get<Index>();
  r.report["verdict"] = rigid ? "rigid" : "not rigid";
  r.report["payload"] = payload;
  r.exit_code = rigid ? exit_code::ok : exit_code::characterization_failed;
  return r;
}

// -- bodybar -----------------------------------------------------------------

CommandResult cmd_bodybar(const CommandOptions& opt) {
  const std::string check = opt.check.empty() ? "both" : opt.check;
  require_mode(check, {"count", "rank", "both"});
  const Input in = load(opt);
  const BodyBarInstance inst = bodybar_from_json(in.json);
  CommandResult r;
  r.report = make_report("bodybar", opt, in.digest);
  Json payload = {{"check", check},
                  {"d", inst.d},
                  {"mode", inst.mode == ConstraintMode::point ? "point" : "body"},
                  {"target_rank", body_freedom(inst.d) * static_cast<Index>(inst.graph.vertex_count())}};
  std::optional<bool> by_count, by_rank;
  if (check != "rank") {
    const CountResult c = inst.mode == ConstraintMode::point ? point_count_check(inst, opt.seed)
                                                             : body_count_check(inst);
    by_count = c.holds;
    payload["count_holds"] = c.holds;
    payload["witness"] = c.witness ? witness_to_json(*c.witness) : Json();
  }
  if (check != "count") {
    Json ranks = Json::array();
    bool all = true, any = false;
    for (unsigned i = 0; i < std::max(1u, opt.trials); ++i) {
      const Index rank = body_bar_rank(inst, derive_seed(opt.seed, i));
      ranks.push_back(rank);
      const bool rigid = rank == payload["target_rank"].get<Index>();
      all = all && rigid;
      any = any || rigid;
    }
    payload["ranks"] = ranks;
    payload["seed_consistent"] = all == any;
    by_rank = any;
    if (all != any) {
      r.report["verdict"] = "inconsistent across seeds";
      r.report["payload"] = payload;
      r.exit_code = exit_code::discrepancy;
      return r;
    }
  }
  if (by_count && by_rank && *by_count != *by_rank) {
    r.report["verdict"] = "mismatch";
    r.report["payload"] = payload;
    r.exit_code = exit_code::discrepancy;
    return r;
  }
  const bool verdict = by_count ? *by_count : *by_rank;
  r.report["verdict"] = verdict;
  r.report["payload"] = payload;
  r.exit_code = verdict ? exit_code::ok : exit_code::false_verdict;
  return r;
}

// -- fuzz --------------------------------------------------------------------

CommandResult cmd_fuzz(const CommandOptions& opt) {
  require_mode(opt.mode, {"main", "plane3d", "st2d"});
  const Index d = mode_dimension(opt, opt.mode);
  if (opt.mode == "main") check_main_hypothesis(d, opt.t);
  if (opt.mode == "plane3d" && d != 3) throw HypothesisError("plane3d mode is for d = 3");
  if (opt.mode == "st2d" && d != 2) throw HypothesisError("st2d mode is for d = 2");
  if (opt.max_n < 1) throw ParseError("fuzz needs max-n >= 1");

  CommandResult r;
  r.report = make_report("fuzz", opt, "");
  std::size_t agree = 0, skipped = 0, positive = 0;
  Json discrepancies = Json::array();
  for (std::size_t i = 0; i < opt.count; ++i) {
    Rng rng(derive_seed(opt.seed, i));
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(opt.max_n)));
    const LoopedGraph g = random_looped_graph(rng, n, opt.edge_prob, opt.loop_rate);
    bool characterized = false;
    LoopedGraph lifted = g;
    try {
      if (opt.mode == "main") {
        characterized = tight_spanning_basis(g, opt.t).has_value();
        lifted = add_uniform_loops(g, static_cast<std::size_t>(d) - opt.t);
      } else if (opt.mode == "plane3d") {
        characterized = tight_k5free_spanning_basis(g).has_value();
        lifted = add_uniform_loops(g, 1);
      } else {
        characterized = st_spanning_check(g);
      }
    } catch (const ScaleError&) {
      ++skipped;
      continue;
    }
    const Index rank = generic_rank(lifted, d, opt.trials, derive_seed(opt.seed ^ 0x5eed, i));
    const bool rigid = rank == d * static_cast<Index>(n);
    positive += characterized;
    if (rigid == characterized) {
      ++agree;
      continue;
    }
    Json entry = {{"index", i},
                  {"graph", graph_to_json(g)},
                  {"characterization", characterized},
                  {"generic_rank", rank}};
    if (!opt.out.empty()) {
      std::filesystem::create_directories(opt.out);
      const std::string path =
          (std::filesystem::path(opt.out) /
           ("fuzz-" + opt.mode + "-" + std::to_string(opt.seed) + "-" + std::to_string(i) + ".json"))
              .string();
      write_json(path, graph_to_json(g));
      entry["reproducer"] = path;
    }
    discrepancies.push_back(entry);
  }
  r.report["payload"] = {{"mode", opt.mode},
                         {"d", d},
                         {"t", opt.t},
                         {"count", opt.count},
                         {"max_n", opt.max_n},
                         {"edge_prob", opt.edge_prob},
                         {"loop_rate", opt.loop_rate},
                         {"agree", agree},
                         {"skipped", skipped},
                         {"characterized_true", positive},
                         {"discrepancies", discrepancies}};
  r.report["verdict"] = discrepancies.empty() ? "agree" : "discrepancy";
  r.exit_code = discrepancies.empty() ? exit_code::ok : exit_code::discrepancy;
  return r;
}

CommandResult run_command(const std::string& name, const CommandOptions& opt) {
  const auto start = Clock::now();
  CommandResult r;
  auto failure = [&](int code, const char* kind, const std::exception& e) {
    r.exit_code = code;
    r.report = make_report(name, opt, "");
    r.report["verdict"] = "error";
    r.report["error"] = {{"kind", kind}, {"message", e.what()}};
  };
  try {
    if (name == "sparsity") r = cmd_sparsity(opt);
    else if (name == "characterize") r = cmd_characterize(opt);
    else if (name == "realize") r = cmd_realize(opt);
    else if (name == "bodybar") r = cmd_bodybar(opt);
    else if (name == "fuzz") r = cmd_fuzz(opt);
    else throw ParseError("unknown command " + name);
  } catch (const ParseError& e) {
    failure(exit_code::parse, "parse", e);
  } catch (const Json::exception& e) {
    failure(exit_code::parse, "parse", e);
  } catch (const ScaleError& e) {
    failure(exit_code::scale, "scale", e);
  } catch (const HypothesisError& e) {
    failure(exit_code::hypothesis, "hypothesis", e);
  } catch (const DegenerateError& e) {
    failure(exit_code::characterization_failed, "degenerate", e);
  } catch (const std::invalid_argument& e) {
    failure(exit_code::parse, "invalid argument", e);
  }
  if (opt.timing)
    r.report["timing_ms"] =
        std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return r;
}

}  // namespace rigor
