#pragma once

#include <optional>
#include <vector>

#include "rlab/report.hpp"
#include "rlab/vec.hpp"

namespace rlab {

/// One sample (x, u) of a set-valued operator, u in A(x).
struct GraphPair {
  Vec x;
  Vec u;
};

/// Finite sample of an operator's graph. The pair list may be empty; every
/// universally quantified property then holds vacuously.
struct OperatorGraph {
  int dim = 0;
  std::vector<GraphPair> pairs;
};

/// Throws when a pair has the wrong dimension or non-finite entries.
void validate(const OperatorGraph& g);

OperatorGraph invert_graph(const OperatorGraph& g);                  // (x,u) -> (u,x)
OperatorGraph rho_shift_graph(const OperatorGraph& g, double rho);   // (x,u) -> (u, x - rho u)
OperatorGraph rho_unshift_graph(const OperatorGraph& g, double rho);  // (x,u) -> (u + rho x, x)

OperatorGraph resolvent_graph(const OperatorGraph& g);             // (x,u) -> (x+u, x)
OperatorGraph complement_resolvent_graph(const OperatorGraph& g);  // (x,u) -> (x+u, u)
OperatorGraph reflected_resolvent_graph(const OperatorGraph& g);   // (x,u) -> (x+u, x-u)

/// <x-y, u-v> >= rho |x-y|^2 over all point pairs of the graph.
CertReport check_rho_monotone(const OperatorGraph& g, double rho, double tol = kDefaultTol);

/// <x-y, u-v> >= rho |u-v|^2 over all point pairs of the graph.
CertReport check_rho_comonotone(const OperatorGraph& g, double rho, double tol = kDefaultTol);

/// inf over point pairs with x != y of <dx,du>/|dx|^2; +inf on an empty set
/// of eligible pairs. Pairs with dx = 0 impose no constraint.
double optimal_monotone_modulus(const OperatorGraph& g);

/// inf over point pairs with u != v of <dx,du>/|du|^2; +inf when empty.
double optimal_comonotone_modulus(const OperatorGraph& g);

/// Functional-graph scan: first coordinates matching within 1e-12 (max norm)
/// whose second coordinates are separated by more than 1e-9 flag the graph as
/// multivalued.
struct FunctionalScan {
  bool single_valued = true;
  double worst_separation = 0.0;
  std::optional<GraphPair> first;   // colliding pair with the lower index
  std::optional<GraphPair> second;  // its partner
};
FunctionalScan scan_functional(const OperatorGraph& g);

/// Certify a map property on a functional graph whose pairs are read as
/// (input, output) samples of a single-valued map.
CertReport certify_graph_as_map(Property property, const OperatorGraph& g, double param,
                                double tol = kDefaultTol);

}  // namespace rlab
