#include "rigor/io.hpp"

#include "rigor/errors.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace rigor {

namespace {

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

std::size_t index_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    fail(std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) { return parse_json(read_text_file(path)); }

LoopedGraph graph_from_json(const Json& j) {
  const std::size_t n = index_from_json(field(j, "n"), "n");
  std::vector<Edge> edges;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) fail("edges must be an array");
    for (const Json& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2) fail("each edge must be a pair [u, v]");
      edges.push_back({index_from_json(e[0], "edge endpoint"), index_from_json(e[1], "edge endpoint")});
    }
  }
  std::vector<Loop> loops;
  if (j.contains("loops")) {
    if (!j["loops"].is_array()) fail("loops must be an array");
    for (const Json& l : j["loops"]) loops.push_back({index_from_json(l, "loop vertex")});
  }
  try {
    return LoopedGraph(n, std::move(edges), std::move(loops));
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
}

Json graph_to_json(const LoopedGraph& g) {
  Json edges = Json::array(), loops = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  for (const Loop& l : g.loops()) loops.push_back(l.vertex);
  return {{"n", g.vertex_count()}, {"edges", edges}, {"loops", loops}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) fail("rational must be a \"num/den\" string or an integer");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
}

Json rational_to_json(const Rational& r) { return to_string(r); }

RationalVector vector_from_json(const Json& j, Index d) {
  if (!j.is_array() || static_cast<Index>(j.size()) != d)
    fail("vector must have " + std::to_string(d) + " entries");
  RationalVector v(d);
  for (Index i = 0; i < d; ++i) v(i) = rational_from_json(j[static_cast<std::size_t>(i)]);
  return v;
}

Json vector_to_json(const RationalVector& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(rational_to_json(v(i)));
  return out;
}

RationalMatrix normals_from_json(const Json& j, const LoopedGraph& g, Index d) {
  RationalMatrix q = RationalMatrix::Zero(static_cast<Index>(g.loop_count()), d);
  std::vector<bool> seen(g.loop_count(), false);
  auto put = [&](std::size_t id, const Json& v) {
    if (id >= g.loop_count()) fail("q names loop " + std::to_string(id) + " which does not exist");
    if (seen[id]) fail("q gives loop " + std::to_string(id) + " twice");
    seen[id] = true;
    q.row(static_cast<Index>(id)) = vector_from_json(v, d).transpose();
  };
  if (j.is_object()) {
    for (const auto& [key, v] : j.items()) {
      std::size_t pos = 0;
      unsigned long long id = 0;
      try {
        id = std::stoull(key, &pos);
      } catch (const std::exception&) {
        fail("q key \"" + key + "\" is not a loop id");
      }
      if (pos != key.size()) fail("q key \"" + key + "\" is not a loop id");
      put(static_cast<std::size_t>(id), v);
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) put(i, j[i]);
  } else {
    fail("q must be an object keyed by loop id");
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i]) fail("q is missing loop " + std::to_string(i));
  return q;
}

Json normals_to_json(const RationalMatrix& q) {
  Json out = Json::object();
  for (Index j = 0; j < q.rows(); ++j) out[std::to_string(j)] = vector_to_json(q.row(j).transpose());
  return out;
}

RationalFramework framework_from_json(const Json& j, bool require_p) {
  const LoopedGraph base = graph_from_json(j);
  const std::size_t lift = j.contains("lift") ? index_from_json(j["lift"], "lift") : 0;
  const Index d = static_cast<Index>(index_from_json(field(j, "d"), "d"));
  if (d < 1) fail("d must be positive");
  RationalFramework f(add_uniform_loops(base, lift), d);
  if (j.contains("p")) {
    const Json& p = j["p"];
    if (!p.is_array() || p.size() != f.graph.vertex_count()) fail("p must list one point per vertex");
    for (std::size_t i = 0; i < p.size(); ++i)
      f.p.row(static_cast<Index>(i)) = vector_from_json(p[i], d).transpose();
  } else if (require_p) {
    fail("missing field \"p\"");
  }
  f.q = normals_from_json(j.contains("q") ? j["q"] : Json::object(), f.graph, d);
  return f;
}

Json framework_to_json(const RationalFramework& f) {
  Json out = graph_to_json(f.graph);
  out["d"] = f.d;
  out["lift"] = 0;
  Json p = Json::array();
  for (Index i = 0; i < f.p.rows(); ++i) p.push_back(vector_to_json(f.p.row(i).transpose()));
  out["p"] = p;
  out["q"] = normals_to_json(f.q);
  return out;
}

BodyBarInstance bodybar_from_json(const Json& j) {
  BodyBarInstance inst;
  inst.graph = graph_from_json(j);
  inst.d = static_cast<Index>(index_from_json(field(j, "d"), "d"));
  if (inst.d < 1) fail("d must be positive");
  const Json& mode = field(j, "mode");
  if (mode == "point") inst.mode = ConstraintMode::point;
  else if (mode == "body") inst.mode = ConstraintMode::body;
  else fail("mode must be \"point\" or \"body\"");
  inst.q = normals_from_json(j.contains("q") ? j["q"] : Json::object(), inst.graph, inst.d);
  try {
    validate(inst);
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
  return inst;
}

Json bodybar_to_json(const BodyBarInstance& inst) {
  Json out = graph_to_json(inst.graph);
  out["d"] = inst.d;
  out["mode"] = inst.mode == ConstraintMode::point ? "point" : "body";
  out["q"] = normals_to_json(inst.q);
  return out;
}

Json element_set_to_json(const EdgeOrLoopSet& f) { return {{"edges", f.edges}, {"loops", f.loops}}; }

Json certificate_to_json(const LoopedGraph& g, const SparsityParams& params,
                         const SparsityCertificate& cert) {
  if (!cert.sparse) {
    const std::size_t vf = incident_vertices(g, cert.violation).size();
    return {{"verdict", "violation"},
            {"violation", element_set_to_json(cert.violation)},
            {"size", cert.violation.size()},
            {"bound", static_cast<long>(params.k * vf) - static_cast<long>(params.l)}};
  }
  Json out = {{"verdict", "sparse"}};
  if (!cert.edge_tail.empty() || !cert.pebbles.empty()) {
    out["edge_tails"] = cert.edge_tail;
    out["pebbles"] = cert.pebbles;
  }
  return out;
}

Json partition_to_json(const Partition& p) { return p; }

Json witness_to_json(const PartitionWitness& w) {
  return {{"blocks", partition_to_json(w.blocks)},
          {"crossing", w.crossing},
          {"required", w.required},
          {"deficiency", w.deficiency}};
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace rigor
