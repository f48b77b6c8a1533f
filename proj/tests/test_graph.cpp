#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "rlab/families.hpp"
#include "rlab/graph.hpp"
#include "rlab/sampler.hpp"

using namespace rlab;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

OperatorGraph graph1d(std::initializer_list<std::pair<double, double>> pts) {
  OperatorGraph g;
  g.dim = 1;
  for (const auto& [x, u] : pts) g.pairs.push_back({Vec{x}, Vec{u}});
  return g;
}

// Graph with independently random x and u values (a generic relation).
OperatorGraph random_graph(int dim, int count, std::uint64_t seed) {
  OperatorGraph g;
  g.dim = dim;
  auto xs = sample_points(dim, count, seed);
  auto us = sample_points(dim, count, seed + 1);
  for (int i = 0; i < count; ++i) g.pairs.push_back({xs[i], us[i]});
  return g;
}

bool same_pairs(const OperatorGraph& a, const OperatorGraph& b) {
  if (a.dim != b.dim || a.pairs.size() != b.pairs.size()) return false;
  for (std::size_t i = 0; i < a.pairs.size(); ++i)
    if (a.pairs[i].x != b.pairs[i].x || a.pairs[i].u != b.pairs[i].u) return false;
  return true;
}

}  // namespace

TEST_CASE("rho-monotonicity on the identity graph") {
  const auto g = graph1d({{0.0, 0.0}, {1.0, 1.0}});
  const auto rep = check_rho_monotone(g, 1.0);
  CHECK(rep.passed);
  CHECK(rep.worst_margin == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(rep.samples_used == 2);
  REQUIRE(rep.witness_x.has_value());
}

TEST_CASE("skew rotation is not strongly monotone") {
  // graph of N = [[0,-1],[1,0]] at e1, e2: <dx, N dx> = 0 by skew-symmetry
  OperatorGraph g;
  g.dim = 2;
  g.pairs.push_back({{1.0, 0.0}, {0.0, 1.0}});
  g.pairs.push_back({{0.0, 1.0}, {-1.0, 0.0}});
  CHECK(check_rho_monotone(g, 0.0).passed);
  CHECK_FALSE(check_rho_monotone(g, 0.1).passed);
}

TEST_CASE("rotation family graph: monotone modulus 0.2 at lambda = 1/4") {
  const auto fam = rotation_family(0.25, 2);
  const auto g = sample_linear_graph(fam.A, 50, 7);
  CHECK(check_rho_monotone(g, 0.2).passed);
  CHECK_FALSE(check_rho_monotone(g, 0.21).passed);
}

TEST_CASE("rho-comonotonicity examples") {
  const auto id = graph1d({{0.0, 0.0}, {1.0, 1.0}});
  CHECK(check_rho_comonotone(id, 1.0).passed);

  const auto fam = rotation_family(0.25, 2);
  const auto g = sample_linear_graph(fam.A, 50, 11);
  CHECK(check_rho_comonotone(g, 1.0).passed);
  CHECK_FALSE(check_rho_comonotone(g, 1.01).passed);

  // repeated u across distinct x: du = 0 makes the pair vacuous at any rho
  const auto constant = graph1d({{0.0, 0.0}, {1.0, 0.0}});
  CHECK(check_rho_comonotone(constant, 1e6).passed);
}

TEST_CASE("optimal monotone modulus") {
  CHECK(optimal_monotone_modulus(graph1d({{0.0, 0.0}, {1.0, 1.0}})) == doctest::Approx(1.0));

  // A = -0.6 Id - 1.2 N: the ratio <dx, A dx>/|dx|^2 is constantly -0.6
  const auto fam = rotation_family(0.75, 2);
  const auto g = sample_linear_graph(fam.A, 120, 3);
  CHECK(optimal_monotone_modulus(g) == doctest::Approx(-0.6).epsilon(1e-9));

  CHECK(optimal_monotone_modulus(graph1d({{2.0, 5.0}})) == kInf);
}

TEST_CASE("optimal comonotone modulus") {
  CHECK(optimal_comonotone_modulus(graph1d({{0.0, 0.0}, {1.0, 1.0}})) == doctest::Approx(1.0));

  const auto fam = rotation_family(0.75, 2);
  const auto g = sample_linear_graph(fam.A, 120, 3);
  CHECK(optimal_comonotone_modulus(g) == doctest::Approx(-1.0 / 3.0).epsilon(1e-9));

  // constant operator sample: du = 0 everywhere, empty infimum
  CHECK(optimal_comonotone_modulus(graph1d({{0.0, 0.0}, {1.0, 0.0}})) == kInf);
}

TEST_CASE("invert_graph swaps pairs and is an involution") {
  const auto g = graph1d({{1.0, 2.0}});
  const auto inv = invert_graph(g);
  CHECK(inv.pairs[0].x == Vec{2.0});
  CHECK(inv.pairs[0].u == Vec{1.0});

  const auto h = random_graph(3, 20, 99);
  CHECK(same_pairs(invert_graph(invert_graph(h)), h));
}

TEST_CASE("comonotone modulus equals monotone modulus of the inverse") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto g = random_graph(2, 15, seed);
    CHECK(optimal_comonotone_modulus(g) ==
          doctest::Approx(optimal_monotone_modulus(invert_graph(g))).epsilon(1e-12));
  }
}

TEST_CASE("rho_shift_graph") {
  const auto g = graph1d({{3.0, 1.0}});
  const auto s = rho_shift_graph(g, 2.0);
  CHECK(s.pairs[0].x == Vec{1.0});
  CHECK(s.pairs[0].u == Vec{1.0});

  const auto h = random_graph(2, 12, 5);
  CHECK(same_pairs(rho_shift_graph(h, 0.0), invert_graph(h)));
}

TEST_CASE("rho_unshift_graph inverts the shift") {
  const auto g = graph1d({{1.0, 1.0}});
  const auto u = rho_unshift_graph(g, 2.0);
  CHECK(u.pairs[0].x == Vec{3.0});
  CHECK(u.pairs[0].u == Vec{1.0});

  const auto h = random_graph(3, 25, 17);
  for (double rho : {-0.7, 0.0, 1.3}) {
    const auto round = rho_unshift_graph(rho_shift_graph(h, rho), rho);
    REQUIRE(round.pairs.size() == h.pairs.size());
    for (std::size_t i = 0; i < h.pairs.size(); ++i) {
      CHECK(inf_dist(round.pairs[i].x, h.pairs[i].x) <= 1e-12 * (1.0 + norm(h.pairs[i].x)));
      CHECK(round.pairs[i].u == h.pairs[i].u);
    }
  }
  CHECK(same_pairs(rho_unshift_graph(h, 0.0), invert_graph(h)));
}

TEST_CASE("comonotonicity transfers to the inverse and the shifted graph") {
  for (std::uint64_t seed : {4u, 8u, 15u}) {
    const auto g = random_graph(2, 12, seed);
    for (double rho : {-0.5, 0.0, 0.25}) {
      const bool direct = check_rho_comonotone(g, rho).passed;
      CHECK(direct == check_rho_monotone(invert_graph(g), rho).passed);
      CHECK(direct == check_rho_monotone(rho_shift_graph(g, rho), 0.0).passed);
    }
  }
}

TEST_CASE("modulus is invariant under duplicates and nonincreasing under growth") {
  auto g = random_graph(2, 10, 23);
  const double base = optimal_monotone_modulus(g);

  auto dup = g;
  dup.pairs.push_back(g.pairs.front());
  CHECK(optimal_monotone_modulus(dup) == base);

  auto grown = g;
  for (const auto& p : random_graph(2, 10, 24).pairs) {
    grown.pairs.push_back(p);
    CHECK(optimal_monotone_modulus(grown) <= base + 1e-15);
  }
}

TEST_CASE("verdict is monotone in rho around the optimal modulus") {
  // unit-scale graphs: the relative-tolerance scale max(1, |dx|^2) matches
  // the ratio the modulus is built from only when pairs are not sub-unit
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 2; ++trial) {
    OperatorGraph g;
    g.dim = 2;
    for (int i = 0; i < 10; ++i) {
      auto next = [&] { return 4.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53) - 2.0; };
      g.pairs.push_back({{next(), next()}, {next(), next()}});
    }
    const double star = optimal_monotone_modulus(g);
    CHECK(check_rho_monotone(g, star - 1e-6).passed);
    CHECK_FALSE(check_rho_monotone(g, star + 1e-6).passed);
  }
}

TEST_CASE("empty and single-point graphs certify everything") {
  OperatorGraph empty;
  empty.dim = 2;
  const auto rep = check_rho_monotone(empty, 1e9);
  CHECK(rep.passed);
  CHECK(rep.worst_margin == kInf);
  CHECK_FALSE(rep.witness_x.has_value());

  CHECK(check_rho_comonotone(graph1d({{1.0, 2.0}}), 1e9).passed);
}

TEST_CASE("sampler contract: radii cycle and near-coincident pairs") {
  const auto pairs = sample_pairs(3, {42, 24});
  REQUIRE(pairs.size() == 24);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const double r = norm(pairs[i].first);
    switch (i % 3) {
      case 0: CHECK(r < 0.1); break;          // radius 1e-3
      case 1: CHECK((r > 0.1 && r < 100)); break;
      case 2: CHECK(r > 100); break;          // radius 1e3
    }
    if (i % 4 == 3) {
      CHECK(norm(sub(pairs[i].first, pairs[i].second)) ==
            doctest::Approx(1e-6).epsilon(1e-9));
    }
  }
  // seeded and reproducible
  CHECK(sample_pairs(3, {42, 24}) == pairs);
  CHECK(sample_pairs(3, {43, 24}) != pairs);
}

TEST_CASE("malformed graphs are rejected") {
  OperatorGraph g;
  g.dim = 2;
  g.pairs.push_back({{1.0, 0.0}, {1.0}});  // u has the wrong dimension
  CHECK_THROWS_AS(check_rho_monotone(g, 0.0), Error);
  try {
    check_rho_monotone(g, 0.0);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::dimension);
  }
}
