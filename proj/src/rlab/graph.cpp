#include "rlab/graph.hpp"

#include <cmath>
#include <limits>

#include "rlab/certify.hpp"

namespace rlab {

namespace {

constexpr double kCoordMatchTol = 1e-12;   // first-coordinate collision (max norm)
constexpr double kMultivaluedTol = 1e-9;   // second-coordinate separation that counts

OperatorGraph transform(const OperatorGraph& g, Vec (*fx)(const GraphPair&),
                        Vec (*fu)(const GraphPair&)) {
  OperatorGraph out;
  out.dim = g.dim;
  out.pairs.reserve(g.pairs.size());
  for (const auto& p : g.pairs) out.pairs.push_back({fx(p), fu(p)});
  return out;
}

CertReport check_graph_property(Property prop, const OperatorGraph& g, double param, double tol) {
  validate(g);
  validate_parameter(prop, param);
  CertReport r;
  r.property = prop;
  r.parameter = param;
  r.tolerance = tol;
  r.samples_used = static_cast<long>(g.pairs.size());

  double worst = std::numeric_limits<double>::infinity();
  std::size_t bi = g.pairs.size(), bj = g.pairs.size();
  for (std::size_t i = 0; i < g.pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < g.pairs.size(); ++j) {
      const Slack s = property_slack(prop, param, sub(g.pairs[i].x, g.pairs[j].x),
                                     sub(g.pairs[i].u, g.pairs[j].u));
      const double margin = s.value / s.scale;
      if (margin < worst) {
        worst = margin;
        bi = i;
        bj = j;
      }
    }
  }
  r.worst_margin = worst;
  r.passed = !(worst < -tol);
  if (bi < g.pairs.size()) {
    r.witness_x = g.pairs[bi].x;
    r.witness_y = g.pairs[bj].x;
    r.witness_u = g.pairs[bi].u;
    r.witness_v = g.pairs[bj].u;
  }
  return r;
}

}  // namespace

void validate(const OperatorGraph& g) {
  if (g.dim < 1) fail(ErrorKind::dimension, "operator graph: dim must be >= 1");
  const auto dim = static_cast<std::size_t>(g.dim);
  for (const auto& p : g.pairs) {
    require_dim(p.x, dim, "graph point x");
    require_dim(p.u, dim, "graph value u");
  }
}

OperatorGraph invert_graph(const OperatorGraph& g) {
  return transform(
      g, [](const GraphPair& p) { return p.u; }, [](const GraphPair& p) { return p.x; });
}

OperatorGraph rho_shift_graph(const OperatorGraph& g, double rho) {
  OperatorGraph out;
  out.dim = g.dim;
  out.pairs.reserve(g.pairs.size());
  for (const auto& p : g.pairs) out.pairs.push_back({p.u, axpy(-rho, p.u, p.x)});
  return out;
}

OperatorGraph rho_unshift_graph(const OperatorGraph& g, double rho) {
  OperatorGraph out;
  out.dim = g.dim;
  out.pairs.reserve(g.pairs.size());
  for (const auto& p : g.pairs) out.pairs.push_back({axpy(rho, p.x, p.u), p.x});
  return out;
}

OperatorGraph resolvent_graph(const OperatorGraph& g) {
  return transform(
      g, [](const GraphPair& p) { return add(p.x, p.u); }, [](const GraphPair& p) { return p.x; });
}

OperatorGraph complement_resolvent_graph(const OperatorGraph& g) {
  return transform(
      g, [](const GraphPair& p) { return add(p.x, p.u); }, [](const GraphPair& p) { return p.u; });
}

OperatorGraph reflected_resolvent_graph(const OperatorGraph& g) {
  return transform(
      g, [](const GraphPair& p) { return add(p.x, p.u); }, [](const GraphPair& p) { return sub(p.x, p.u); });
}

CertReport check_rho_monotone(const OperatorGraph& g, double rho, double tol) {
  return check_graph_property(Property::rho_monotone, g, rho, tol);
}

CertReport check_rho_comonotone(const OperatorGraph& g, double rho, double tol) {
  return check_graph_property(Property::rho_comonotone, g, rho, tol);
}

double optimal_monotone_modulus(const OperatorGraph& g) {
  validate(g);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < g.pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < g.pairs.size(); ++j) {
      const Vec dx = sub(g.pairs[i].x, g.pairs[j].x);
      const double ndx = norm2(dx);
      if (ndx == 0.0) continue;  // vacuous: both sides are zero
      best = std::min(best, dot(dx, sub(g.pairs[i].u, g.pairs[j].u)) / ndx);
    }
  }
  return best;
}

double optimal_comonotone_modulus(const OperatorGraph& g) {
  validate(g);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < g.pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < g.pairs.size(); ++j) {
      const Vec du = sub(g.pairs[i].u, g.pairs[j].u);
      const double ndu = norm2(du);
      if (ndu == 0.0) continue;
      best = std::min(best, dot(sub(g.pairs[i].x, g.pairs[j].x), du) / ndu);
    }
  }
  return best;
}

FunctionalScan scan_functional(const OperatorGraph& g) {
  validate(g);
  FunctionalScan scan;
  for (std::size_t i = 0; i < g.pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < g.pairs.size(); ++j) {
      if (inf_dist(g.pairs[i].x, g.pairs[j].x) > kCoordMatchTol) continue;
      const double sep = norm(sub(g.pairs[i].u, g.pairs[j].u));
      if (sep > scan.worst_separation) {
        scan.worst_separation = sep;
        scan.first = g.pairs[i];
        scan.second = g.pairs[j];
      }
    }
  }
  scan.single_valued = scan.worst_separation <= kMultivaluedTol;
  return scan;
}

CertReport certify_graph_as_map(Property property, const OperatorGraph& g, double param,
                                double tol) {
  return check_graph_property(property, g, param, tol);
}

}  // namespace rlab
