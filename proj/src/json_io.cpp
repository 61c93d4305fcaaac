#include "powergraph/json_io.hpp"

namespace powergraph::json_io {

Json divisor_graph(const graphcore::DivisorGraph& g) {
  Json nodes = Json::array();
  for (std::size_t i = 0; i < g.size(); ++i) {
    Json neighbors = Json::array();
    for (std::size_t j : g.neighbors[i]) neighbors.push_back(g.nodes[j]);
    Json node;
    node["d"] = g.nodes[i];
    node["phi"] = g.weight[i];
    node["neighbors"] = std::move(neighbors);
    nodes.push_back(std::move(node));
  }
  Json out;
  out["n"] = g.n;
  out["nodes"] = std::move(nodes);
  return out;
}

Json class_set(const ClassSet& s, const numtheory::Factorization& f) {
  Json out;
  out["n"] = s.n();
  out["classes"] = s.members();
  out["size"] = s.cardinality(f);
  return out;
}

Json kappa_result(const connectivity::KappaResult& r, bool include_witness) {
  Json out;
  out["n"] = r.n;
  out["kappa"] = r.kappa;
  out["method"] = std::string(connectivity::to_string(r.method));
  if (r.bounds.alpha) out["alpha"] = *r.bounds.alpha;
  if (r.bounds.beta) out["beta"] = *r.bounds.beta;
  if (r.bounds.gamma) out["gamma"] = *r.bounds.gamma;
  if (include_witness && r.witness) {
    Json w = Json::array();
    for (const auto& e : *r.witness) {
      Json item;
      item["d"] = e.divisor;
      item["count"] = e.count;
      w.push_back(std::move(item));
    }
    out["witness"] = std::move(w);
  }
  return out;
}

Json bounds_report(const numtheory::Factorization& f) {
  const std::size_t r = f.r();
  if (r < 2) {
    throw DomainError("bounds need at least two distinct prime factors; n=" +
                      std::to_string(f.value) + " is a prime power");
  }
  Json alpha_j = Json::array();
  Json beta_j = Json::array();
  for (std::size_t j = 1; j <= r; ++j) {
    alpha_j.push_back(cutsets::alpha_j(f, j));
    beta_j.push_back(cutsets::beta_j(f, j));
  }
  Json gamma_ab = Json::object();
  if (r >= 3) {
    for (std::size_t a = 1; a <= r; ++a) {
      for (std::size_t b = a + 1; b <= r; ++b) {
        gamma_ab[std::to_string(a) + "," + std::to_string(b)] = cutsets::gamma_ab(f, a, b);
      }
    }
  }
  Json out;
  out["n"] = f.value;
  out["r"] = r;
  out["alpha_j"] = std::move(alpha_j);
  out["beta_j"] = std::move(beta_j);
  out["gamma_ab"] = std::move(gamma_ab);
  out["alpha"] = cutsets::alpha(f);
  out["beta"] = cutsets::beta(f);
  if (r >= 3) {
    out["gamma"] = cutsets::gamma(f);
    const auto rep = cutsets::check_orderings(f);
    Json ord;
    ord["alpha_strictly_decreasing"] = rep.alpha_strictly_decreasing;
    ord["alpha_beta_trichotomy"] = rep.alpha_beta_trichotomy;
    ord["beta_descent"] = rep.beta_descent;
    ord["beta_below_gamma"] = rep.beta_below_gamma;
    ord["alpha_le_gamma_criterion"] = cutsets::alpha_le_gamma_criterion(f);
    ord["alpha_gamma_criterion_matches"] = rep.alpha_gamma_criterion_matches;
    ord["gamma_minimal_at_last_pair"] = rep.gamma_minimal_at_last_pair;
    out["orderings"] = std::move(ord);
  }
  return out;
}

std::string dump(const Json& j) { return j.dump(); }

}  // namespace powergraph::json_io
