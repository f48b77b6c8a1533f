#include "resolventlab.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "rlab/correspond.hpp"
#include "rlab/iterate.hpp"
#include "rlab/json_io.hpp"

using nlohmann::json;

struct rl_graph {
  rlab::OperatorGraph g;
};

struct rl_matrix {
  rlab::Matrix m;
};

namespace {

thread_local std::string g_last_error;

rl_status status_of(rlab::ErrorKind kind) {
  switch (kind) {
    case rlab::ErrorKind::argument: return RL_ERR_ARGUMENT;
    case rlab::ErrorKind::parse: return RL_ERR_PARSE;
    case rlab::ErrorKind::dimension: return RL_ERR_DIMENSION;
    case rlab::ErrorKind::singular: return RL_ERR_SINGULAR;
    case rlab::ErrorKind::domain: return RL_ERR_DOMAIN;
    case rlab::ErrorKind::regime: return RL_ERR_REGIME;
    case rlab::ErrorKind::bracket: return RL_ERR_BRACKET;
  }
  return RL_ERR_INTERNAL;
}

template <typename Fn>
rl_status guarded(Fn&& fn) {
  try {
    fn();
    return RL_OK;
  } catch (const rlab::Error& e) {
    g_last_error = e.what();
    return status_of(e.kind());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return RL_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void put(char** out, const std::string& s) {
  if (out) *out = dup_string(s);
}

rlab::Property parse_property(std::string name) {
  for (auto& c : name)
    if (c == '_') c = '-';
  if (name == "rho-monotone") return rlab::Property::rho_monotone;
  if (name == "rho-comonotone") return rlab::Property::rho_comonotone;
  if (name == "conic" || name == "conic-nonexpansive") return rlab::Property::conic_nonexpansive;
  if (name == "nonexpansive") return rlab::Property::nonexpansive;
  if (name == "averaged") return rlab::Property::averaged;
  if (name == "cocoercive") return rlab::Property::cocoercive;
  if (name == "lipschitz") return rlab::Property::lipschitz;
  if (name == "strongly-monotone") return rlab::Property::strongly_monotone;
  rlab::fail(rlab::ErrorKind::argument, "unknown property '" + name + "'");
}

json iteration_summary(const rlab::IterationTrace& trace) {
  json j;
  j["version"] = std::string(rlab::kVersion);
  j["seed"] = 0;  // iteration draws no samples
  j["status"] = std::string(rlab::iter_status_name(trace.status));
  j["iterations"] = trace.iterates.size() - 1;
  j["final_residual"] =
      trace.residuals.empty() ? nullptr : rlab::json_number(trace.residuals.back());
  if (trace.limit) j["limit"] = *trace.limit;
  j["final_iterate"] = trace.iterates.back();
  return j;
}

}  // namespace

extern "C" {

const char* rl_version(void) { return "0.1.0"; }

const char* rl_last_error(void) { return g_last_error.c_str(); }

double rl_default_tolerance(void) {
  if (const char* env = std::getenv("RESOLVENT_LAB_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && v > 0.0) return v;
  }
  return rlab::kDefaultTol;
}

void rl_string_free(char* s) { std::free(s); }

rl_status rl_graph_parse_json(const char* text, rl_graph** out) {
  if (!text || !out) {
    g_last_error = "null argument";
    return RL_ERR_ARGUMENT;
  }
  return guarded([&] { *out = new rl_graph{rlab::graph_from_json(text)}; });
}

void rl_graph_free(rl_graph* g) { delete g; }

int rl_graph_dim(const rl_graph* g) { return g ? g->g.dim : 0; }

long rl_graph_pairs(const rl_graph* g) { return g ? static_cast<long>(g->g.pairs.size()) : 0; }

rl_status rl_graph_to_json(const rl_graph* g, char** json_out) {
  if (!g || !json_out) {
    g_last_error = "null argument";
    return RL_ERR_ARGUMENT;
  }
  return guarded([&] { put(json_out, rlab::graph_to_json_text(g->g)); });
}

rl_status rl_graph_certify(const rl_graph* g, const char* property, double param, double tol,
                           char** json_out, int* passed_out) {
  if (!g || !property) {
    g_last_error = "null argument";
    return RL_ERR_ARGUMENT;
  }
  return guarded([&] {
    if (tol <= 0.0) tol = rl_default_tolerance();
    json j;
    bool passed = false;
    const std::string prop = property;
    if (prop == "resolvent-single-valued" || prop == "resolvent_single_valued") {
      const auto scan = rlab::scan_functional(rlab::resolvent_graph(g->g));
      passed = scan.single_valued;
      j["property"] = "resolvent-single-valued";
      j["passed"] = passed;
      j["worst_margin"] = rlab::json_number(-scan.worst_separation);
      j["samples_used"] = g->g.pairs.size();
      j["seed"] = 0;
      j["tolerance"] = tol;
      if (scan.first) {
        // colliding resolvent inputs x ~ y with separated values u, v
        j["witness"] = {{"x", scan.first->x},
                        {"y", scan.second->x},
                        {"u", scan.first->u},
                        {"v", scan.second->u}};
      }
    } else {
      rlab::Property p = parse_property(prop);
      rlab::CertReport r;
      if (p == rlab::Property::rho_monotone) {
        r = rlab::check_rho_monotone(g->g, param, tol);
      } else if (p == rlab::Property::rho_comonotone) {
        r = rlab::check_rho_comonotone(g->g, param, tol);
      } else {
        r = rlab::certify_graph_as_map(p, g->g, param, tol);
      }
      passed = r.passed;
      j = rlab::report_to_json(r);
    }
    j["version"] = std::string(rlab::kVersion);
    put(json_out, j.dump());
    if (passed_out) *passed_out = passed ? 1 : 0;
  });
}

rl_status rl_matrix_parse_json(const char* text, rl_matrix** out) {
  if (!text || !out) {
    g_last_error = "null argument";
    return RL_ERR_ARGUMENT;
  }
  return guarded([&] { *out = new rl_matrix{rlab::matrix_from_json(text)}; });
}

void rl_matrix_free(rl_matrix* m) { delete m; }

int rl_matrix_dim(const rl_matrix* m) { return m ? m->m.n() : 0; }

rl_status rl_matrix_classify(const rl_matrix* m, char** json_out) {
  if (!m || !json_out) {
    g_last_error = "null argument";
    return RL_ERR_ARGUMENT;
  }
  return guarded([&] { put(json_out, rlab::classification_json(m->m).dump()); });
}

rl_status rl_matrix_correspond(const rl_matrix* m, unsigned long long seed, double tol,
                               char** json_out, int* all_ok_out) {
  if (!m) {
    g_last_error = "null argument";
    return RL_ERR_ARGUMENT;
  }
  return guarded([&] {
    if (tol <= 0.0) tol = rl_default_tolerance();
    rlab::SamplerConfig cfg;
    cfg.seed = seed;
    const auto rep = rlab::regime_report(m->m, cfg, tol);
    put(json_out, rlab::regime_report_json(rep, seed, tol).dump());
    if (all_ok_out) *all_ok_out = rep.all_ok ? 1 : 0;
  });
}

rl_status rl_prox_eval(const char* function, double lambda, double mu, double x,
                       const char* spec, char** json_out) {
  if (!function) {
    g_last_error = "null argument";
    return RL_ERR_ARGUMENT;
  }
  return guarded([&] {
    const auto f = rlab::make_function(function, lambda, spec ? spec : "");
    const auto res = rlab::prox(f, mu, x);
    json j;
    j["version"] = std::string(rlab::kVersion);
    j["seed"] = 0;  // prox evaluation draws no samples
    j["function"] = f.name;
    j["lambda"] = lambda;
    j["mu"] = mu;
    j["x"] = x;
    j["point"] = res.point;
    j["residual"] = rlab::json_number(res.residual);
    j["method"] = std::string(rlab::prox_method_name(res.method));
    put(json_out, j.dump());
  });
}

rl_status rl_proximal_point(const char* function, double lambda, double mu, const char* spec,
                            double x0, long max_iter, double tol, char** csv_out,
                            char** json_out) {
  if (!function) {
    g_last_error = "null argument";
    return RL_ERR_ARGUMENT;
  }
  return guarded([&] {
    const auto f = rlab::make_function(function, lambda, spec ? spec : "");
    if (max_iter <= 0) max_iter = rlab::kDefaultMaxIter;
    if (tol <= 0.0) tol = rlab::kDefaultIterTol;
    const auto trace = rlab::proximal_point(f, mu, x0, max_iter, tol);
    put(csv_out, rlab::trace_csv(trace));
    json j = iteration_summary(trace);
    j["function"] = f.name;
    j["lambda"] = lambda;
    j["mu"] = mu;
    j["x0"] = x0;
    put(json_out, j.dump());
  });
}

rl_status rl_km_resolvent(const rl_matrix* m, const double* x0, int dim, double relaxation,
                          long max_iter, double tol, char** csv_out, char** json_out) {
  if (!m || !x0) {
    g_last_error = "null argument";
    return RL_ERR_ARGUMENT;
  }
  return guarded([&] {
    if (dim != m->m.n())
      rlab::fail(rlab::ErrorKind::dimension, "x0 dimension does not match the matrix");
    if (max_iter <= 0) max_iter = rlab::kDefaultMaxIter;
    if (tol <= 0.0) tol = rlab::kDefaultIterTol;
    const rlab::Matrix j_a = rlab::resolvent_linear(m->m);
    const rlab::Vec start(x0, x0 + dim);
    const auto trace =
        rlab::km_iterate(rlab::matrix_map(j_a), start, relaxation, max_iter, tol);
    put(csv_out, rlab::trace_csv(trace));
    json j = iteration_summary(trace);
    j["relaxation"] = relaxation;
    put(json_out, j.dump());
  });
}

rl_status rl_family_rotation(double lambda, int dim, char** matrix_json_out) {
  return guarded([&] {
    const auto fam = rlab::rotation_family(lambda, dim);
    put(matrix_json_out, rlab::matrix_to_json_text(fam.A));
  });
}

rl_status rl_family_rotation_info(double lambda, int dim, char** json_out) {
  return guarded([&] {
    const auto fam = rlab::rotation_family(lambda, dim);
    json j;
    j["version"] = std::string(rlab::kVersion);
    j["family"] = "rotation";
    j["lambda"] = lambda;
    j["n"] = dim;
    j["A"] = json::parse(rlab::matrix_to_json_text(fam.A))["rows"];
    j["T"] = json::parse(rlab::matrix_to_json_text(fam.T))["rows"];
    j["rho_mono"] = rlab::json_number(fam.rho_mono);
    j["rho_comono"] = rlab::json_number(fam.rho_comono);
    put(json_out, j.dump());
  });
}

rl_status rl_family_rotation_graph(double lambda, int dim, int samples, unsigned long long seed,
                                   char** graph_json_out) {
  return guarded([&] {
    const auto fam = rlab::rotation_family(lambda, dim);
    put(graph_json_out, rlab::graph_to_json_text(rlab::sample_linear_graph(fam.A, samples, seed)));
  });
}

rl_status rl_family_projection(double alpha, int dim, int subspace_dim, char** json_out) {
  return guarded([&] {
    if (dim < 1 || subspace_dim < 1 || subspace_dim > dim)
      rlab::fail(rlab::ErrorKind::argument, "projection family: need 1 <= subspace_dim <= dim");
    std::vector<rlab::Vec> basis;
    for (int k = 0; k < subspace_dim; ++k) {
      rlab::Vec e(static_cast<std::size_t>(dim), 0.0);
      e[static_cast<std::size_t>(k)] = 1.0;
      basis.push_back(std::move(e));
    }
    const auto fam = rlab::projection_family(alpha, basis);
    json j;
    j["version"] = std::string(rlab::kVersion);
    j["family"] = "projection";
    j["alpha"] = alpha;
    j["n"] = dim;
    j["subspace_dim"] = subspace_dim;
    j["T"] = json::parse(rlab::matrix_to_json_text(fam.T))["rows"];
    j["rho_comono"] = rlab::json_number(fam.rho_comono);
    if (fam.normal_cone) {
      j["A"] = "normal-cone";  // alpha = 1/2: set-valued, no matrix
    } else {
      j["A"] = json::parse(rlab::matrix_to_json_text(*fam.A))["rows"];
    }
    put(json_out, j.dump());
  });
}

rl_status rl_family_counterexample_graph(double r, double lo, double hi, int whole_line,
                                         int samples, unsigned long long seed,
                                         char** graph_json_out) {
  return guarded([&] {
    const rlab::Box c = whole_line ? rlab::Box::whole_line() : rlab::Box::interval(lo, hi);
    put(graph_json_out, rlab::graph_to_json_text(rlab::counterexample_graph(r, c, samples, seed)));
  });
}

}  // extern "C"
