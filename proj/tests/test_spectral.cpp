#include "doctest.h"

#include <random>

#include "cheeger.hpp"
#include "generators.hpp"
#include "spectral.hpp"

using namespace treegap;

namespace {

Diagram two_vertex() {
  DiagramSpec s;
  s.vertices = {{"u", false}, {"v", false}};
  s.edges = {{"e0", "u", "v", 1, 1}};
  s.base = "u";
  return Diagram::build(s);
}

Diagram cycle4() {
  DiagramSpec s;
  for (int i = 0; i < 4; ++i) s.vertices.push_back({"v" + std::to_string(i), false});
  for (int i = 0; i < 4; ++i)
    s.edges.push_back({"e" + std::to_string(i), "v" + std::to_string(i),
                       "v" + std::to_string((i + 1) % 4), 1, 1});
  s.base = "v0";
  return Diagram::build(s);
}

}  // namespace

TEST_SUITE("spectral") {

TEST_CASE("two-vertex diagram: walk matrix and lambda = 2") {
  const Diagram d = two_vertex();
  const OperatorBundle b = assemble_operators(d);
  CHECK(b.walk(0, 0) == 0.0);
  CHECK(b.walk(0, 1) == 1.0);
  CHECK(b.walk(1, 0) == 1.0);
  CHECK(b.walk(1, 1) == 0.0);
  const SpectralReport rep = lambda_bottom(d);
  CHECK(rep.lambda == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(rep.residual < 1e-12);
  CHECK(rep.deflation < 1e-12);
}

TEST_CASE("walk rows sum to the inner-product weight, exactly") {
  for (const Diagram& d : {gen_ray_blocks({2, 3}), gen_ray_blocks({4, 2}),
                           random_diagram(7, 30, false), random_diagram(8, 30, true)}) {
    const OperatorBundle b = assemble_operators(d);
    for (int x = 0; x < b.dim; ++x) {
      Rat row = 0;
      for (const auto& [y, m] : b.pair_measure[x]) row += m;
      CHECK(row == b.w[x]);
    }
  }
}

TEST_CASE("4-cycle spectrum is 0,1,1,2; lambda = 1") {
  const Diagram d = cycle4();
  const OperatorBundle b = assemble_operators(d);
  const auto spec = laplacian_spectrum(b);
  REQUIRE(spec.size() == 4);
  const double expect[] = {0.0, 1.0, 1.0, 2.0};
  for (int i = 0; i < 4; ++i)
    CHECK(std::abs(spec[i] - expect[i]) < 1e-12);
  CHECK(lambda_bottom(d).lambda == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("symmetrized operator is exactly symmetric and similar to the walk") {
  const Diagram d = gen_ray_blocks({2, 3});
  const OperatorBundle b = assemble_operators(d);
  CHECK((b.sym - b.sym.transpose()).cwiseAbs().maxCoeff() == 0.0);

  auto sym_spec = laplacian_spectrum(b);
  for (auto& ev : sym_spec) ev = 1.0 - ev;  // to walk eigenvalues
  std::sort(sym_spec.begin(), sym_spec.end());
  const auto walk_spec = walk_spectrum_unsymmetrized(b);
  REQUIRE(walk_spec.size() == sym_spec.size());
  for (std::size_t i = 0; i < walk_spec.size(); ++i)
    CHECK(std::abs(walk_spec[i] - sym_spec[i]) < 1e-10);
}

TEST_CASE("spectra of walk and symmetrized operator agree on assorted diagrams") {
  for (std::uint64_t seed : {11, 12, 13}) {
    const Diagram d = random_diagram(seed, 40, seed % 2 == 0);
    const OperatorBundle b = assemble_operators(d);
    auto sym_spec = laplacian_spectrum(b);
    for (auto& ev : sym_spec) ev = 1.0 - ev;
    std::sort(sym_spec.begin(), sym_spec.end());
    const auto walk_spec = walk_spectrum_unsymmetrized(b);
    double dev = 0;
    for (std::size_t i = 0; i < walk_spec.size(); ++i)
      dev = std::max(dev, std::abs(walk_spec[i] - sym_spec[i]));
    CHECK(dev < 1e-9);
  }
}

TEST_CASE("ray-blocks ladder: lambda decreases with the truncation") {
  const double l5 = lambda_bottom(gen_ray_blocks({2, 5})).lambda;
  const double l20 = lambda_bottom(gen_ray_blocks({2, 20})).lambda;
  CHECK(l20 < l5);
  // regression constants frozen from the first dense computation
  CHECK(l5 == doctest::Approx(0.002142992179).epsilon(1e-6));
  CHECK(l20 == doctest::Approx(0.000061734932).epsilon(1e-6));
}

TEST_CASE("rayleigh quotients") {
  const Diagram d = gen_ray_blocks({2, 4});
  const OperatorBundle b = assemble_operators(d);
  const SpectralReport rep = lambda_bottom(b);

  SUBCASE("block indicator dominates lambda") {
    std::vector<double> f(b.dim, 0.0);
    for (const auto& id : ray_blocks_block_ids(4)) f[*d.find_vertex(id)] = 1.0;
    CHECK(rayleigh(b, f) >= rep.lambda - 1e-12);
  }
  SUBCASE("the bottom eigenvector achieves lambda") {
    std::vector<double> f(b.dim);
    for (int i = 0; i < b.dim; ++i) f[i] = rep.eigenvector[i] / b.sqrt_w[i];
    CHECK(rayleigh(b, f) == doctest::Approx(rep.lambda).epsilon(1e-9));
  }
  SUBCASE("constant functions are rejected") {
    std::vector<double> f(b.dim, 3.25);
    CHECK_THROWS_AS(rayleigh(b, f), Error);
  }
}

TEST_CASE("random vectors on the 4-cycle stay within the known spectrum") {
  const Diagram d = cycle4();
  const OperatorBundle b = assemble_operators(d);
  std::mt19937_64 rng(99);
  std::normal_distribution<double> gauss;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> f(4);
    for (auto& x : f) x = gauss(rng);
    const double r = rayleigh(b, f);
    CHECK(r >= 1.0 - 1e-12);
    CHECK(r <= 2.0 + 1e-12);
  }
}

TEST_CASE("iterative path agrees with the dense oracle") {
  for (std::uint64_t seed : {21, 22, 23, 24}) {
    const Diagram d = random_diagram(seed, 60, seed % 2 == 0);
    LambdaOptions iter_opts;
    iter_opts.force_iterative = true;
    iter_opts.tol = 1e-11;
    const auto dense = lambda_bottom(d);
    const auto iter = lambda_bottom(d, iter_opts);
    CHECK(iter.converged);
    CHECK(iter.method == LambdaMethod::iterative);
    CHECK(std::abs(dense.lambda - iter.lambda) < 1e-8);
  }
  // one larger instance, still within the full-span budget
  const Diagram big = random_diagram(25, 300, false);
  LambdaOptions iter_opts;
  iter_opts.force_iterative = true;
  const auto dense = lambda_bottom(big);
  const auto iter = lambda_bottom(big, iter_opts);
  CHECK(iter.converged);
  CHECK(std::abs(dense.lambda - iter.lambda) < 1e-8);
}

TEST_CASE("single vertex with a loop: no nonconstant functions") {
  DiagramSpec s;
  s.vertices = {{"v", false}};
  s.edges = {{"loop", "v", "v", 1, 1}};
  s.base = "v";
  CHECK_THROWS_AS(lambda_bottom(Diagram::build(s)), Error);
}

TEST_CASE("isolated vertex has zero indeg") {
  DiagramSpec s;
  s.vertices = {{"v", false}};
  s.base = "v";
  CHECK_THROWS_AS(assemble_operators(Diagram::build(s)), Error);
}

TEST_CASE("parity squaring: regular tree ball, interior identity is exact") {
  const Diagram ball = gen_tree_ball(3, 3, 4);
  const auto rep = square_split_check(ball, 1e-10);
  CHECK(rep.parity_split_ok);
  CHECK(rep.k0 == Rat(3));
  CHECK(rep.k1 == Rat(3));
  CHECK(rep.max_identity_dev == Rat(0));
  CHECK(rep.max_eigen_dev < 1e-10);
  CHECK(rep.pass);
}

TEST_CASE("parity squaring on the 4-cycle: half identity, half swap") {
  const Diagram d = cycle4();
  const auto rep = square_split_check(d, 1e-12);
  CHECK(rep.k0 == Rat(2));
  CHECK(rep.k1 == Rat(2));
  CHECK(rep.interior_even == 2);
  CHECK(rep.max_identity_dev == Rat(0));
  CHECK(rep.max_eigen_dev < 1e-12);
  CHECK(rep.pass);
  // by hand: walk^2 on {v0, v2} is [[1/2, 1/2], [1/2, 1/2]], the affine image
  // (1/2)I + (1/2)W of the distance-2 swap
  const OperatorBundle b = assemble_operators(d);
  const Eigen::MatrixXd sq = b.walk * b.walk;
  CHECK(sq(0, 0) == doctest::Approx(0.5));
  CHECK(sq(0, 2) == doctest::Approx(0.5));
}

TEST_CASE("parity squaring on a biregular ball has distinct class constants") {
  // even class sees 1/k1, odd class 1/k0; both identities exact
  const auto rep = square_split_check(gen_tree_ball(3, 4, 4), 1e-10);
  CHECK(rep.k0 == Rat(3));
  CHECK(rep.k1 == Rat(4));
  CHECK(rep.interior_even > 0);
  CHECK(rep.interior_odd > 0);
  CHECK(rep.max_identity_dev == Rat(0));
  CHECK(rep.pass);
}

TEST_CASE("parity squaring counts multi-edge lifts") {
  DiagramSpec s;  // three parallel edges: 3-regular, bipartite, walk^2 = I
  s.vertices = {{"u", false}, {"v", false}};
  for (int i = 0; i < 3; ++i)
    s.edges.push_back({"e" + std::to_string(i), "u", "v", 1, 1});
  s.base = "u";
  const auto rep = square_split_check(Diagram::build(s), 1e-12);
  CHECK(rep.k0 == Rat(3));
  CHECK(rep.max_identity_dev == Rat(0));
  CHECK(rep.pass);
}

TEST_CASE("parity squaring on the ray-blocks truncation") {
  const Diagram d = gen_ray_blocks({2, 4});
  const auto rep = square_split_check(d, 1e-9);
  CHECK(rep.k0 == Rat(3));
  CHECK(rep.k1 == Rat(3));
  CHECK(rep.max_identity_dev == Rat(0));
  CHECK(rep.max_eigen_dev < 1e-9);
  CHECK(rep.pass);
}

TEST_CASE("bipartite regular: squared walk eigenvalues live in the parity blocks") {
  const Diagram d = gen_ray_blocks({2, 3});
  const OperatorBundle b = assemble_operators(d);
  REQUIRE(b.parity.has_value());
  const auto walk_spec = walk_spectrum_unsymmetrized(b);

  std::vector<int> even, odd;
  for (int v = 0; v < b.dim; ++v) ((*b.parity)[v] == 0 ? even : odd).push_back(v);
  const Eigen::MatrixXd sq = b.walk * b.walk;
  auto block_eigs = [&](const std::vector<int>& idx) {
    Eigen::MatrixXd m(idx.size(), idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) m(i, j) = sq(idx[i], idx[j]);
    Eigen::EigenSolver<Eigen::MatrixXd> es(m);
    std::vector<double> out;
    for (int i = 0; i < m.rows(); ++i) out.push_back(es.eigenvalues()(i).real());
    return out;
  };
  const auto ev_even = block_eigs(even);
  const auto ev_odd = block_eigs(odd);
  for (double lam : walk_spec) {
    double best = 1e9;
    for (double mu : ev_even) best = std::min(best, std::abs(lam * lam - mu));
    for (double mu : ev_odd) best = std::min(best, std::abs(lam * lam - mu));
    CHECK(best < 1e-9);
  }
}

TEST_CASE("non-bipartite diagrams are rejected by the parity check") {
  DiagramSpec s;
  s.vertices = {{"a", false}, {"b", false}, {"c", false}};
  s.edges = {{"e0", "a", "b", 1, 1}, {"e1", "b", "c", 1, 1}, {"e2", "c", "a", 1, 1}};
  s.base = "a";
  try {
    square_split_check(Diagram::build(s), 1e-9);
    FAIL("expected NotBipartite");
  } catch (const Error& err) {
    CHECK(err.code() == Errc::not_bipartite);
  }
}

TEST_CASE("irregular diagrams are rejected by the parity-squaring check") {
  DiagramSpec s;  // path of 3: middle vertex has indeg 2, the ends 1
  s.vertices = {{"a", false}, {"b", false}, {"c", false}};
  s.edges = {{"e0", "a", "b", 1, 1}, {"e1", "b", "c", 1, 1}};
  s.base = "a";
  try {
    square_split_check(Diagram::build(s), 1e-9);
    FAIL("expected NotRegular");
  } catch (const Error& err) {
    CHECK(err.code() == Errc::not_regular);
  }
}

}  // TEST_SUITE
