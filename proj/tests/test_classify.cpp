#include <doctest.h>

#include <random>

#include <Eigen/Eigenvalues>

#include "artin/catalog.hpp"
#include "artin/classify.hpp"
#include "artin/json_io.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace artin;

namespace {

// Smallest eigenvalue of the cosine matrix, as an independent route to
// positive-definiteness.
double min_eigenvalue(const LabeledGraph& g) {
  Eigen::SelfAdjointEigenSolver<DenseMatrix<double>> es(gram_matrix<double>(g));
  return es.eigenvalues().minCoeff();
}

std::optional<bool> brute_hyperbolic(const LabeledGraph& g) {
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (g.entry(i, j) != 0 && g.entry(i, j) < 3) return std::nullopt;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      for (std::size_t k = j + 1; k < g.size(); ++k)
        if (g.entry(i, j) == 3 && g.entry(j, k) == 3 && g.entry(i, k) == 3) return false;
  return true;
}

}  // namespace

TEST_CASE("golden corpus") {
  const auto golden = testutil::golden();
  for (const auto& path : testutil::corpus_files()) {
    const std::string name = path.filename().string();
    CAPTURE(name);
    REQUIRE(golden.contains(name));
    const auto& want = golden[name];
    const auto got = to_json(classify(parse_graph(testutil::slurp(path))));
    for (const char* key : {"is_large", "is_free_of_infinity", "is_xxxl", "is_hyperbolic_type",
                            "spherical_type", "is_twistless", "is_twistless_star"}) {
      CAPTURE(key);
      CHECK(got[key].dump() == want[key].dump());
    }
  }
}

TEST_CASE("catalog types are recognized") {
  for (std::size_t n = 1; n <= 8; ++n)
    CHECK(spherical_type(catalog::type_A(n)) ==
          std::vector<std::string>{n == 2 ? "I2(3)" : "A" + std::to_string(n)});
  for (std::size_t n = 3; n <= 8; ++n)
    CHECK(spherical_type(catalog::type_B(n)) == std::vector<std::string>{"B" + std::to_string(n)});
  for (std::size_t n = 4; n <= 8; ++n)
    CHECK(spherical_type(catalog::type_D(n)) == std::vector<std::string>{"D" + std::to_string(n)});
  for (std::size_t n = 6; n <= 8; ++n)
    CHECK(spherical_type(catalog::type_E(n)) == std::vector<std::string>{"E" + std::to_string(n)});
  CHECK(spherical_type(catalog::type_F4()) == std::vector<std::string>{"F4"});
  CHECK(spherical_type(catalog::type_H(3)) == std::vector<std::string>{"H3"});
  CHECK(spherical_type(catalog::type_H(4)) == std::vector<std::string>{"H4"});
  for (int m = 2; m <= 12; ++m)
    CHECK(spherical_type(catalog::dihedral(m)) ==
          (m == 2 ? std::vector<std::string>{"A1", "A1"}
                  : std::vector<std::string>{"I2(" + std::to_string(m) + ")"}));
}

TEST_CASE("affine and hyperbolic diagrams are not spherical") {
  CHECK_FALSE(spherical_type(testutil::cycle(3, 3)));
  CHECK_FALSE(spherical_type(convert(testutil::cycle(4, 3), Convention::Coxeter)));
  // Affine D4 tilde: a centre with four leaves.
  CHECK_FALSE(spherical_type(parse_graph(
      "convention coxeter; vertices c a b d e; edge c a 3; edge c b 3; edge c d 3; edge c e 3")));
  // E9 = affine E8.
  CHECK_FALSE(spherical_type(parse_graph(
      "convention coxeter; vertices t1 t2 t3 t4 t5 t6 t7 t8 t9; edge t1 t2 3; edge t2 t3 3;"
      "edge t3 t4 3; edge t4 t5 3; edge t5 t6 3; edge t6 t7 3; edge t7 t8 3; edge t3 t9 3")));
  CHECK_FALSE(spherical_type(parse_graph("convention coxeter; vertices a b c; edge a b 5; edge b c 5")));
  CHECK_FALSE(spherical_type(parse_graph("convention coxeter; vertices a b; edge a b inf")));
}

TEST_CASE("spherical type agrees with the Gram matrix on random graphs") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 400; ++k) {
    const auto g = testutil::random_graph(rng, 1 + k % 6, 0.5, {3, 3, 3, 4, 5, 6},
                                          Convention::Coxeter);
    CAPTURE(serialize_graph(g));
    const bool pd = is_positive_definite(gram_matrix<double>(g));
    CHECK(spherical_type(g).has_value() == pd);
    const double lambda = min_eigenvalue(g);
    if (std::abs(lambda) > 1e-7) CHECK(pd == (lambda > 0));
  }
}

TEST_CASE("Gram matrix is templated on the scalar") {
  const auto g = catalog::type_H(3);
  const auto f = gram_matrix<float>(g);
  const auto d = gram_matrix<long double>(g);
  CHECK(f(0, 1) == doctest::Approx(-std::cos(std::numbers::pi / 5)));
  CHECK(static_cast<double>(d(1, 2)) == doctest::Approx(-0.5));
  CHECK(is_positive_definite(d));
}

TEST_CASE("twistless and hyperbolic-type match brute-force definitions") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 300; ++k) {
    const auto g = testutil::random_graph(rng, 1 + k % 7, 0.55, {2, 3, 3, 4, 6});
    CAPTURE(serialize_graph(g));
    CHECK(is_twistless(g) == oracle::brute_twistless(g));
    CHECK(is_twistless_star(g) == oracle::brute_twistless_star(g, full_mask(g)));
    CHECK(is_hyperbolic_type(g) == brute_hyperbolic(g));
  }
}

TEST_CASE("label predicates") {
  const auto tri = parse_graph("vertices a b c; edge a b 3; edge b c 6; edge a c 7");
  CHECK(is_large(tri));
  CHECK_FALSE(is_xxxl(tri));
  CHECK(is_free_of_infinity(tri));
  const auto big = parse_graph("vertices a b c; edge a b 6; edge b c 7");
  CHECK(is_xxxl(big));
  CHECK_FALSE(is_free_of_infinity(big));
  const auto small = parse_graph("vertices a b c; edge a b 2; edge b c 7; edge a c 3");
  CHECK_FALSE(is_large(small));
  CHECK_FALSE(is_hyperbolic_type(small).has_value());
}

TEST_CASE("complete graphs are twistless stars; cycles and paths are not") {
  for (std::size_t n = 1; n <= 7; ++n) CHECK(is_twistless_star(testutil::complete(n, 3)));
  for (std::size_t n = 4; n <= 7; ++n) {
    CHECK(is_twistless(testutil::cycle(n, 4)));
    CHECK_FALSE(is_twistless_star(testutil::cycle(n, 4)));
  }
  CHECK_FALSE(is_twistless(parse_graph("vertices a b c; edge a b 3; edge b c 3")));
  // Two triangles sharing an edge: the shared edge separates.
  CHECK_FALSE(is_twistless(
      parse_graph("vertices a b c d; edge a b 3; edge b c 3; edge a c 3; edge b d 3; edge c d 3")));
}

TEST_CASE("classical orders") {
  CHECK(classical_order("A5") == 720);
  CHECK(classical_order("B4") == 384);
  CHECK(classical_order("D5") == 1920);
  CHECK(classical_order("F4") == 1152);
  CHECK(classical_order("H3") == 120);
  CHECK(classical_order("I2(7)") == 14);
  CHECK(classical_order("E6") == 51840);
}
