#pragma once

// JSON encodings shared by the CLI and its tests. Keys are emitted in a
// fixed order and dumped compactly on one line.

#include <json.hpp>
#include <string>

#include "powergraph/class_set.hpp"
#include "powergraph/connectivity.hpp"
#include "powergraph/cutsets.hpp"
#include "powergraph/graphcore.hpp"

namespace powergraph::json_io {

using Json = nlohmann::ordered_json;

/// {n, nodes:[{d, phi, neighbors:[...]}]}
Json divisor_graph(const graphcore::DivisorGraph& g);

/// {n, classes:[...], size}
Json class_set(const ClassSet& s, const numtheory::Factorization& f);

/// {n, kappa, method, alpha?, beta?, gamma?, witness?:[{d, count}]}
Json kappa_result(const connectivity::KappaResult& r, bool include_witness);

/// {n, r, alpha_j, beta_j, gamma_ab, alpha, beta, gamma?, orderings?}.
/// Requires r >= 2.
Json bounds_report(const numtheory::Factorization& f);

std::string dump(const Json& j);

}  // namespace powergraph::json_io
