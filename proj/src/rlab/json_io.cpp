#include "rlab/json_io.hpp"

#include <cmath>
#include <limits>

namespace rlab {

using nlohmann::json;

json json_number(double v) {
  if (std::isnan(v)) return nullptr;
  if (std::isinf(v)) return v > 0.0 ? "inf" : "-inf";
  return v;
}

OperatorGraph graph_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    fail(ErrorKind::parse, std::string("graph JSON: ") + e.what());
  }
  OperatorGraph g;
  try {
    g.dim = j.at("dim").get<int>();
    for (const auto& p : j.at("pairs")) {
      g.pairs.push_back({p.at("x").get<Vec>(), p.at("u").get<Vec>()});
    }
  } catch (const std::exception& e) {
    fail(ErrorKind::parse, std::string("graph JSON: ") + e.what());
  }
  validate(g);
  return g;
}

std::string graph_to_json_text(const OperatorGraph& g) {
  json pairs = json::array();
  for (const auto& p : g.pairs) pairs.push_back({{"x", p.x}, {"u", p.u}});
  return json{{"dim", g.dim}, {"pairs", pairs}}.dump();
}

Matrix matrix_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    fail(ErrorKind::parse, std::string("matrix JSON: ") + e.what());
  }
  try {
    const int n = j.at("n").get<int>();
    const auto rows = j.at("rows").get<std::vector<std::vector<double>>>();
    if (static_cast<int>(rows.size()) != n) fail(ErrorKind::parse, "matrix JSON: wrong row count");
    std::vector<double> entries;
    entries.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != n) fail(ErrorKind::parse, "matrix JSON: ragged rows");
      entries.insert(entries.end(), row.begin(), row.end());
    }
    return Matrix(n, std::move(entries));
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    fail(ErrorKind::parse, std::string("matrix JSON: ") + e.what());
  }
}

std::string matrix_to_json_text(const Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.n(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.n(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return json{{"n", m.n()}, {"rows", rows}}.dump();
}

json report_to_json(const CertReport& r) {
  json j;
  j["property"] = std::string(property_name(r.property));
  j["parameter"] = json_number(r.parameter);
  j["passed"] = r.passed;
  j["worst_margin"] = json_number(r.worst_margin);
  if (r.witness_x && r.witness_y) {
    json w;
    w["x"] = *r.witness_x;
    w["y"] = *r.witness_y;
    if (r.witness_u) w["u"] = *r.witness_u;
    if (r.witness_v) w["v"] = *r.witness_v;
    j["witness"] = w;
  }
  j["samples_used"] = r.samples_used;
  j["seed"] = r.seed;
  j["tolerance"] = json_number(r.tolerance);
  return j;
}

json classification_json(const Matrix& a) {
  json j;
  j["version"] = std::string(kVersion);
  j["seed"] = 0;  // classification draws no samples
  j["n"] = a.n();
  const double rho_mono = optimal_monotone_modulus_linear(a);
  const double rho_co = optimal_comonotone_modulus_linear(a);
  j["lambda_min_sym"] = json_number(rho_mono);
  j["rho_mono_opt"] = json_number(rho_mono);
  j["rho_comono_opt"] = json_number(rho_co);
  if (std::isfinite(rho_co) && rho_co > -1.0) {
    j["alpha_conic"] = 1.0 / (2.0 * (rho_co + 1.0));
  } else {
    j["alpha_conic"] = nullptr;
  }
  bool defined = true;
  try {
    resolvent_linear(a);
  } catch (const Error&) {
    defined = false;
  }
  j["resolvent_defined"] = defined;
  return j;
}

namespace {

json matrix_rows(const Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.n(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.n(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

json claims_json(const std::vector<ClaimResult>& claims) {
  json arr = json::array();
  for (const auto& c : claims) arr.push_back({{"name", c.name}, {"report", report_to_json(c.report)}});
  return arr;
}

}  // namespace

json reflected_report_json(const ReflectedReport& rep) {
  json j;
  j["rho_comono_opt"] = json_number(rep.rho_comono_opt);
  j["rho_mono_opt"] = json_number(rep.rho_mono_opt);
  j["resolvent"] = matrix_rows(rep.resolvent);
  j["reflected"] = matrix_rows(rep.reflected);
  json items = json::array();
  for (const auto& it : rep.items) {
    json ij;
    ij["item"] = it.item;
    ij["description"] = it.description;
    ij["applicable"] = it.applicable;
    if (!it.note.empty()) ij["note"] = it.note;
    if (it.applicable) ij["parameter"] = json_number(it.parameter);
    ij["lhs"] = claims_json(it.lhs);
    ij["rhs"] = claims_json(it.rhs);
    ij["agree"] = it.agree;
    items.push_back(ij);
  }
  j["items"] = items;
  j["all_agree"] = rep.all_agree;
  return j;
}

json regime_report_json(const RegimeReport& rep, std::uint64_t seed, double tol) {
  json j;
  j["version"] = std::string(kVersion);
  j["seed"] = seed;
  j["tolerance"] = json_number(tol);
  j["n"] = rep.n;
  j["rho_comono_opt"] = json_number(rep.rho_comono_opt);
  j["rho_mono_opt"] = json_number(rep.rho_mono_opt);
  j["regime"] = rep.regime;
  j["resolvent_defined"] = rep.resolvent_defined;
  j["alpha_conic"] = json_number(rep.alpha_conic);
  if (rep.degenerate_zero) j["degenerate_zero"] = true;
  j["claims"] = claims_json(rep.claims);
  j["all_claims_pass"] = rep.all_claims_pass;
  if (rep.reflected) j["reflected"] = reflected_report_json(*rep.reflected);
  j["all_ok"] = rep.all_ok;
  return j;
}

Box parse_box_spec(const std::string& spec) {
  std::string s;
  for (char c : spec)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty() || s == "R") return Box::whole_line();
  if (s == "R+") return Box::nonnegative();
  if (s.size() >= 2 && s.front() == '[' && s.back() == ']') s = s.substr(1, s.size() - 2);
  const auto comma = s.find(',');
  if (comma == std::string::npos)
    fail(ErrorKind::parse, "box spec: expected \"R\", \"R+\" or \"lo,hi\"");
  auto bound = [](const std::string& t) -> double {
    if (t == "inf" || t == "+inf") return std::numeric_limits<double>::infinity();
    if (t == "-inf") return -std::numeric_limits<double>::infinity();
    try {
      std::size_t used = 0;
      const double v = std::stod(t, &used);
      if (used != t.size()) fail(ErrorKind::parse, "box spec: bad bound '" + t + "'");
      return v;
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      fail(ErrorKind::parse, "box spec: bad bound '" + t + "'");
    }
  };
  return Box::interval(bound(s.substr(0, comma)), bound(s.substr(comma + 1)));
}

HypoconvexFn make_function(const std::string& name, double lambda, const std::string& spec) {
  if (name == "exp" || name == "exp-hypoconvex") return make_exp_family(lambda);
  if (name == "concave-quadratic") return make_concave_quadratic(lambda);
  if (name == "indicator-quadratic")
    return make_indicator_quadratic(lambda, parse_box_spec(spec));
  if (name == "quadratic-spline") {
    json j;
    try {
      j = json::parse(spec);
    } catch (const std::exception& e) {
      fail(ErrorKind::parse, std::string("spline spec JSON: ") + e.what());
    }
    std::vector<SplinePiece> pieces;
    try {
      for (const auto& p : j.at("pieces")) {
        pieces.push_back({p.at("a").get<double>(), p.at("b").get<double>(),
                          p.at("c").get<double>(), p.at("lo").get<double>(),
                          p.at("hi").get<double>()});
      }
    } catch (const std::exception& e) {
      fail(ErrorKind::parse, std::string("spline spec JSON: ") + e.what());
    }
    return make_quadratic_spline(lambda, std::move(pieces));
  }
  fail(ErrorKind::argument, "unknown function '" + name +
                                "'; known: exp-hypoconvex, indicator-quadratic, "
                                "concave-quadratic, quadratic-spline");
}

}  // namespace rlab
