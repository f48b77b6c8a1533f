// rlab — batch front end over the resolventlab C API.
//
// Exit codes: 0 success / certification pass, 1 certification failure,
// 2 usage, parse or regime errors.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "resolventlab.h"

namespace {

struct OwnedString {
  char* s = nullptr;
  ~OwnedString() { rl_string_free(s); }
  std::string str() const { return s ? std::string(s) : std::string(); }
};

int report_error(rl_status st) {
  std::cerr << "error (" << static_cast<int>(st) << "): " << rl_last_error() << "\n";
  return 2;
}

bool read_file(const std::string& path, std::string* out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  *out = ss.str();
  return true;
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << text;
  return bool(out);
}

struct GraphHandle {
  rl_graph* g = nullptr;
  ~GraphHandle() { rl_graph_free(g); }
};

struct MatrixHandle {
  rl_matrix* m = nullptr;
  ~MatrixHandle() { rl_matrix_free(m); }
};

int load_matrix(const std::string& path, MatrixHandle* h) {
  std::string text;
  if (!read_file(path, &text)) {
    std::cerr << "error: cannot read " << path << "\n";
    return 2;
  }
  if (rl_status st = rl_matrix_parse_json(text.c_str(), &h->m); st != RL_OK)
    return report_error(st);
  return 0;
}

std::vector<double> parse_vector_arg(const std::string& text, bool* ok) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string tok;
  *ok = true;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(tok, &used));
      if (used != tok.size()) *ok = false;
    } catch (const std::exception&) {
      *ok = false;
    }
  }
  if (v.empty()) *ok = false;
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"resolventlab: classification and certification of generalized "
               "monotone operators, their resolvents, and hypoconvex proximal maps"};
  app.require_subcommand(1);
  int rc = 0;

  // ---- classify ----------------------------------------------------------
  std::string classify_file;
  auto* classify = app.add_subcommand("classify", "optimal moduli of a matrix operator");
  classify->add_option("matrix", classify_file, "matrix JSON file")->required();
  classify->callback([&] {
    MatrixHandle h;
    if ((rc = load_matrix(classify_file, &h)) != 0) return;
    OwnedString out;
    if (rl_status st = rl_matrix_classify(h.m, &out.s); st != RL_OK) {
      rc = report_error(st);
      return;
    }
    std::cout << out.str() << "\n";
  });

  // ---- certify ------------------------------------------------------------
  std::string certify_file, certify_property;
  double certify_param = 0.0, certify_tol = 0.0;
  auto* certify = app.add_subcommand("certify", "certify a property on a graph sample");
  certify->add_option("graph", certify_file, "graph JSON file")->required();
  certify->add_option("--property", certify_property,
                      "rho-monotone | rho-comonotone | conic | nonexpansive | averaged | "
                      "cocoercive | lipschitz | strongly-monotone | resolvent-single-valued")
      ->required();
  certify->add_option("--param", certify_param, "property parameter (rho, alpha, beta, L)");
  certify->add_option("--tol", certify_tol, "tolerance (default 1e-9 or RESOLVENT_LAB_TOL)");
  certify->callback([&] {
    std::string text;
    if (!read_file(certify_file, &text)) {
      std::cerr << "error: cannot read " << certify_file << "\n";
      rc = 2;
      return;
    }
    GraphHandle h;
    if (rl_status st = rl_graph_parse_json(text.c_str(), &h.g); st != RL_OK) {
      rc = report_error(st);
      return;
    }
    OwnedString out;
    int passed = 0;
    if (rl_status st = rl_graph_certify(h.g, certify_property.c_str(), certify_param,
                                        certify_tol, &out.s, &passed);
        st != RL_OK) {
      rc = report_error(st);
      return;
    }
    std::cout << out.str() << "\n";
    rc = passed ? 0 : 1;
  });

  // ---- correspond ----------------------------------------------------------
  std::string correspond_file;
  unsigned long long correspond_seed = 42;
  double correspond_tol = 0.0;
  auto* correspond =
      app.add_subcommand("correspond", "regime row and certified resolvent correspondences");
  correspond->add_option("matrix", correspond_file, "matrix JSON file")->required();
  correspond->add_option("--seed", correspond_seed, "sampler seed (default 42)");
  correspond->add_option("--tol", correspond_tol, "tolerance (default 1e-9)");
  correspond->callback([&] {
    MatrixHandle h;
    if ((rc = load_matrix(correspond_file, &h)) != 0) return;
    OwnedString out;
    int ok = 0;
    if (rl_status st =
            rl_matrix_correspond(h.m, correspond_seed, correspond_tol, &out.s, &ok);
        st != RL_OK) {
      rc = report_error(st);
      return;
    }
    std::cout << out.str() << "\n";
    rc = ok ? 0 : 1;
  });

  // ---- prox ----------------------------------------------------------------
  std::string prox_function, prox_box, prox_spline;
  double prox_lambda = 1.0, prox_mu = 0.5, prox_x = 0.0;
  auto* prox = app.add_subcommand("prox", "evaluate a hypoconvex proximal operator");
  prox->add_option("--function", prox_function, "exp-hypoconvex | indicator-quadratic | "
                                                "concave-quadratic | quadratic-spline")
      ->required();
  prox->add_option("--lambda", prox_lambda, "hypoconvexity scale")->required();
  prox->add_option("--mu", prox_mu, "prox parameter")->required();
  prox->add_option("--x", prox_x, "evaluation point")->required();
  prox->add_option("--box,--cone", prox_box, "domain: R | R+ | lo,hi (indicator family)");
  prox->add_option("--spline", prox_spline, "pieces JSON file (quadratic-spline family)");
  prox->callback([&] {
    std::string spec = prox_box;
    if (!prox_spline.empty() && !read_file(prox_spline, &spec)) {
      std::cerr << "error: cannot read " << prox_spline << "\n";
      rc = 2;
      return;
    }
    OwnedString out;
    if (rl_status st = rl_prox_eval(prox_function.c_str(), prox_lambda, prox_mu, prox_x,
                                    spec.c_str(), &out.s);
        st != RL_OK) {
      rc = report_error(st);
      return;
    }
    std::cout << out.str() << "\n";
  });

  // ---- iterate ---------------------------------------------------------------
  std::string iter_function, iter_box, iter_spline, iter_matrix, iter_x0, iter_trace;
  double iter_lambda = 1.0, iter_mu = 0.5, iter_t = 1.0, iter_tol = 0.0;
  long iter_max = 0;
  auto* iterate = app.add_subcommand(
      "iterate", "proximal-point iteration of a function, or KM iteration of a matrix resolvent");
  iterate->add_option("--function", iter_function, "hypoconvex function name");
  iterate->add_option("--matrix", iter_matrix, "matrix JSON file (iterates J_A)");
  iterate->add_option("--lambda", iter_lambda, "hypoconvexity scale");
  iterate->add_option("--mu", iter_mu, "prox parameter");
  iterate->add_option("--box,--cone", iter_box, "domain spec for indicator-quadratic");
  iterate->add_option("--spline", iter_spline, "pieces JSON file for quadratic-spline");
  iterate->add_option("--x0", iter_x0, "start point (comma-separated for matrices)")->required();
  iterate->add_option("--t", iter_t, "KM relaxation in (0,1] (default 1)");
  iterate->add_option("--max-iter", iter_max, "iteration cap (default 10000)");
  iterate->add_option("--tol", iter_tol, "residual tolerance (default 1e-10)");
  iterate->add_option("--trace", iter_trace, "write the trajectory CSV to this file");
  iterate->callback([&] {
    if (iter_function.empty() == iter_matrix.empty()) {
      std::cerr << "error: iterate needs exactly one of --function or --matrix\n";
      rc = 2;
      return;
    }
    bool ok = false;
    const std::vector<double> x0 = parse_vector_arg(iter_x0, &ok);
    if (!ok) {
      std::cerr << "error: --x0 expects a comma-separated list of numbers\n";
      rc = 2;
      return;
    }
    OwnedString csv, out;
    if (!iter_function.empty()) {
      if (x0.size() != 1) {
        std::cerr << "error: function iteration expects a scalar --x0\n";
        rc = 2;
        return;
      }
      std::string spec = iter_box;
      if (!iter_spline.empty() && !read_file(iter_spline, &spec)) {
        std::cerr << "error: cannot read " << iter_spline << "\n";
        rc = 2;
        return;
      }
      if (rl_status st = rl_proximal_point(iter_function.c_str(), iter_lambda, iter_mu,
                                           spec.c_str(), x0[0], iter_max, iter_tol, &csv.s,
                                           &out.s);
          st != RL_OK) {
        rc = report_error(st);
        return;
      }
    } else {
      MatrixHandle h;
      if ((rc = load_matrix(iter_matrix, &h)) != 0) return;
      if (rl_status st =
              rl_km_resolvent(h.m, x0.data(), static_cast<int>(x0.size()), iter_t, iter_max,
                              iter_tol, &csv.s, &out.s);
          st != RL_OK) {
        rc = report_error(st);
        return;
      }
    }
    if (!iter_trace.empty() && !write_file(iter_trace, csv.str())) {
      std::cerr << "error: cannot write " << iter_trace << "\n";
      rc = 2;
      return;
    }
    std::cout << out.str() << "\n";
  });

  // ---- family -----------------------------------------------------------------
  auto* family = app.add_subcommand("family", "generate the constructive example families");
  family->require_subcommand(1);

  double rot_lambda = 0.25;
  int rot_n = 2, rot_samples = 200;
  unsigned long long rot_seed = 42;
  std::string rot_out, rot_graph;
  bool rot_info = false;
  auto* rotation = family->add_subcommand("rotation", "rotation family A_lambda (even n)");
  rotation->add_option("--lambda", rot_lambda, "mixing parameter in [0,1)")->required();
  rotation->add_option("--n", rot_n, "dimension (even, default 2)");
  rotation->add_option("--out", rot_out, "write the matrix JSON here instead of stdout");
  rotation->add_option("--graph", rot_graph, "also write a sampled graph JSON file");
  rotation->add_option("--samples", rot_samples, "graph sample count (default 200)");
  rotation->add_option("--seed", rot_seed, "graph sampler seed (default 42)");
  rotation->add_flag("--info", rot_info, "print family info (T, A, optimal moduli)");
  rotation->callback([&] {
    OwnedString matrix_json;
    if (rl_status st = rl_family_rotation(rot_lambda, rot_n, &matrix_json.s); st != RL_OK) {
      rc = report_error(st);
      return;
    }
    if (!rot_graph.empty()) {
      OwnedString graph_json;
      if (rl_status st = rl_family_rotation_graph(rot_lambda, rot_n, rot_samples, rot_seed,
                                                  &graph_json.s);
          st != RL_OK) {
        rc = report_error(st);
        return;
      }
      if (!write_file(rot_graph, graph_json.str())) {
        std::cerr << "error: cannot write " << rot_graph << "\n";
        rc = 2;
        return;
      }
    }
    if (rot_info) {
      OwnedString info;
      if (rl_status st = rl_family_rotation_info(rot_lambda, rot_n, &info.s); st != RL_OK) {
        rc = report_error(st);
        return;
      }
      std::cout << info.str() << "\n";
    }
    if (!rot_out.empty()) {
      if (!write_file(rot_out, matrix_json.str())) {
        std::cerr << "error: cannot write " << rot_out << "\n";
        rc = 2;
        return;
      }
    } else if (!rot_info) {
      std::cout << matrix_json.str() << "\n";
    }
  });

  double proj_alpha = 1.0;
  int proj_n = 2, proj_subspace = 1;
  auto* projection = family->add_subcommand("projection", "projection family on span(e_1..e_k)");
  projection->add_option("--alpha", proj_alpha, "conic constant (> 0)")->required();
  projection->add_option("--n", proj_n, "dimension (default 2)");
  projection->add_option("--subspace", proj_subspace, "subspace dimension (default 1)");
  projection->callback([&] {
    OwnedString out;
    if (rl_status st = rl_family_projection(proj_alpha, proj_n, proj_subspace, &out.s);
        st != RL_OK) {
      rc = report_error(st);
      return;
    }
    std::cout << out.str() << "\n";
  });

  double cex_r = 1.0;
  std::string cex_interval = "0,1", cex_out;
  bool cex_line = false;
  int cex_samples = 41;
  unsigned long long cex_seed = 42;
  auto* counterexample =
      family->add_subcommand("counterexample", "graph of A = (-Id - r P_C)^{-1}");
  counterexample->add_option("--r", cex_r, "scaling r >= 0")->required();
  counterexample->add_option("--interval", cex_interval, "C as lo,hi (default 0,1)");
  counterexample->add_flag("--line", cex_line, "C = R (whole line)");
  counterexample->add_option("--samples", cex_samples, "sample count (default 41)");
  counterexample->add_option("--seed", cex_seed, "sampler seed (default 42)");
  counterexample->add_option("--out", cex_out, "write the graph JSON here instead of stdout");
  counterexample->callback([&] {
    double lo = 0.0, hi = 1.0;
    if (!cex_line) {
      bool ok = false;
      const auto bounds = parse_vector_arg(cex_interval, &ok);
      if (!ok || bounds.size() != 2) {
        std::cerr << "error: --interval expects lo,hi\n";
        rc = 2;
        return;
      }
      lo = bounds[0];
      hi = bounds[1];
    }
    OwnedString out;
    if (rl_status st = rl_family_counterexample_graph(cex_r, lo, hi, cex_line ? 1 : 0,
                                                      cex_samples, cex_seed, &out.s);
        st != RL_OK) {
      rc = report_error(st);
      return;
    }
    if (!cex_out.empty()) {
      if (!write_file(cex_out, out.str())) {
        std::cerr << "error: cannot write " << cex_out << "\n";
        rc = 2;
      }
    } else {
      std::cout << out.str() << "\n";
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  return rc;
}
