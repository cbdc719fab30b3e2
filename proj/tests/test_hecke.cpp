#include "doctest.h"

#include <deque>

#include "generators.hpp"
#include "hecke.hpp"

using namespace treegap;

namespace {

// independent sphere count: BFS on the generated tree ball
Int bfs_sphere_count(long k0, long k1, long n) {
  const Diagram ball = gen_tree_ball(k0, k1, std::max<long>(n, 1));
  std::vector<long> depth(ball.vertex_count(), -1);
  std::deque<VertexId> queue{ball.base()};
  depth[ball.base()] = 0;
  Int count = (n == 0) ? 1 : 0;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (HalfEdgeId e : ball.out_edges(v)) {
      const VertexId u = ball.terminus(e);
      if (depth[u] < 0) {
        depth[u] = depth[v] + 1;
        if (depth[u] == n) ++count;
        queue.push_back(u);
      }
    }
  }
  return count;
}

}  // namespace

TEST_SUITE("hecke") {

TEST_CASE("sphere sizes: closed values and BFS agreement") {
  CHECK(sphere_size(3, 3, 1) == 3);
  CHECK(sphere_size(3, 4, 2) == 9);
  CHECK(sphere_size(3, 3, 4) == 24);
  for (auto [k0, k1] : std::vector<std::pair<long, long>>{{3, 3}, {3, 4}, {4, 4}})
    for (long n = 0; n <= 8; ++n)
      CHECK(sphere_size(k0, k1, n) == bfs_sphere_count(k0, k1, n));
}

TEST_CASE("sphere sizes satisfy the alternating-degree recursion") {
  for (auto [k0, k1] : std::vector<std::pair<long, long>>{{3, 3}, {3, 5}, {4, 4}})
    for (long n = 1; n <= 10; ++n) {
      const long deg = (n % 2 == 0) ? k0 : k1;
      CHECK(sphere_size(k0, k1, n + 1) == sphere_size(k0, k1, n) * (deg - 1));
    }
}

TEST_CASE("delta_0 is the convolution identity") {
  const auto id = RadialFunction::sphere(3, 4, 0);
  RadialFunction a;
  a.k0 = 3;
  a.k1 = 4;
  a.coeff[0] = Rat(2, 3);
  a.coeff[2] = Rat(-1, 7);
  a.coeff[4] = Rat(5);
  CHECK(radial_convolve(id, a) == a);
  CHECK(radial_convolve(a, id) == a);
}

TEST_CASE("sphere-2 convolved with itself, biregular (3,4)") {
  const auto d2 = RadialFunction::sphere(3, 4, 2);
  const auto sq = radial_convolve(d2, d2);
  CHECK(sq.coeff.at(0) == Rat(9));  // k0 (k1 - 1) midpoints at the base
  CHECK(sq.coeff.at(4) == Rat(1));  // unique midpoint at distance 4
  CHECK(sq.coeff.at(2) == Rat(2));  // k1 - 2 siblings through the shared middle
}

TEST_CASE("radial convolution is commutative and associative within budget") {
  for (auto [k0, k1] : std::vector<std::pair<long, long>>{{3, 3}, {3, 4}}) {
    RadialFunction a, b, c;
    a.k0 = b.k0 = c.k0 = k0;
    a.k1 = b.k1 = c.k1 = k1;
    a.coeff = {{0, Rat(1, 2)}, {2, Rat(3)}};
    b.coeff = {{2, Rat(1)}, {4, Rat(-2, 5)}};
    c.coeff = {{2, Rat(7, 3)}};
    CHECK(radial_convolve(a, b) == radial_convolve(b, a));
    CHECK(radial_convolve(radial_convolve(a, b), c) ==
          radial_convolve(a, radial_convolve(b, c)));
  }
}

TEST_CASE("recurrence identities hold exactly") {
  for (auto [k0, k1] : std::vector<std::pair<long, long>>{{3, 3}, {3, 4}, {4, 4}}) {
    const RecurrenceReport rep = verify_recurrences(k0, k1, 3);
    CHECK(rep.all_ok);
    CHECK(rep.lines.size() == 3);  // delta4 plus n = 2, 3
    for (const auto& line : rep.lines) CHECK(line.ok);
  }
}

TEST_CASE("radius-0 coefficient of the delta4 identity cancels") {
  // (delta_2 * delta_2)(base) equals the full sphere size, which the identity
  // subtracts exactly
  for (auto [k0, k1] : std::vector<std::pair<long, long>>{{3, 3}, {4, 5}}) {
    const auto sq = radial_convolve(RadialFunction::sphere(k0, k1, 2),
                                    RadialFunction::sphere(k0, k1, 2));
    CHECK(sq.coeff.at(0) == Rat(k0) * (k1 - 1));
  }
}

TEST_CASE("two-step walk profile matches the lazy sphere average") {
  for (auto [k0, k1] : std::vector<std::pair<long, long>>{{3, 3}, {3, 4}, {4, 4}, {5, 3}}) {
    const auto profile = two_step_walk_profile(k0, k1);
    // (1/k1) delta_0 + (1 - 1/k1) * (delta_2 / |S_2|), per vertex
    REQUIRE(profile.size() == 2);
    CHECK(profile.at(0) == Rat(1, k1));
    CHECK(profile.at(2) == (1 - Rat(1, k1)) / Rat(sphere_size(k0, k1, 2)));
    CHECK(profile.at(2) == Rat(1) / (Rat(k0) * k1));
  }
}

TEST_CASE("convolution budget is enforced") {
  const auto big = RadialFunction::sphere(4, 4, 30);
  CHECK_THROWS_AS(radial_convolve(big, big), Error);
}

TEST_CASE("odd radii are rejected") {
  CHECK_THROWS_AS(RadialFunction::sphere(3, 3, 3), Error);
  RadialFunction bad;
  bad.coeff[1] = 1;
  CHECK_THROWS_AS(radial_convolve(bad, bad), Error);
}

}  // TEST_SUITE
