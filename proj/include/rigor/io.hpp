#pragma once

// JSON formats. Rationals are "num/den" strings (integers also accepted on
// input).
//
//   graph:      {"n": 3, "edges": [[0,1],[1,2]], "loops": [0, 0]}
//   framework:  graph + {"d": 2, "p": [[..],..], "q": {"0": [..], ..},
//               "lift": 1}; the framework lives on add_uniform_loops(graph,
//               lift) and q is keyed by loop ids of that lifted graph
//   body-bar:   graph + {"d": 2, "mode": "point"|"body", "q": {..}}

#include "rigor/bodybar.hpp"
#include "rigor/graph.hpp"
#include "rigor/rigidity.hpp"
#include "rigor/sparsity.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>

namespace rigor {

using Json = nlohmann::json;

// Throw ParseError on malformed input.
Json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);
Json parse_json(const std::string& text);

LoopedGraph graph_from_json(const Json& j);
Json graph_to_json(const LoopedGraph& g);

Rational rational_from_json(const Json& j);
Json rational_to_json(const Rational& r);
RationalVector vector_from_json(const Json& j, Index d);
Json vector_to_json(const RationalVector& v);

// Normals keyed by loop id, one for every loop of `g`.
RationalMatrix normals_from_json(const Json& j, const LoopedGraph& g, Index d);
Json normals_to_json(const RationalMatrix& q);

// When `require_p` is false a missing "p" leaves p zero.
RationalFramework framework_from_json(const Json& j, bool require_p = true);
// The lifted graph is written out explicitly with lift 0.
Json framework_to_json(const RationalFramework& f);

BodyBarInstance bodybar_from_json(const Json& j);
Json bodybar_to_json(const BodyBarInstance& inst);

Json element_set_to_json(const EdgeOrLoopSet& f);
Json certificate_to_json(const LoopedGraph& g, const SparsityParams& params,
                         const SparsityCertificate& cert);
Json partition_to_json(const Partition& p);
Json witness_to_json(const PartitionWitness& w);

// FNV-1a, 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace rigor
