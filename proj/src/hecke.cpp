#include "hecke.hpp"

#include <algorithm>

#include "error.hpp"

namespace treegap {

namespace {

// Plain rooted ball of the biregular tree: parent pointers and depths, root
// of degree k0. Distances between ball vertices go through depths and the
// meet on root paths.
struct Ball {
  long k0, k1, radius;
  std::vector<int> parent;  // -1 at root
  std::vector<long> depth;

  long dist(int a, int b) const {
    long da = depth[a], db = depth[b];
    long extra = 0;
    while (da > db) {
      a = parent[a];
      --da;
      ++extra;
    }
    while (db > da) {
      b = parent[b];
      --db;
      ++extra;
    }
    while (a != b) {
      a = parent[a];
      b = parent[b];
      extra += 2;
    }
    return extra;
  }
};

Int ball_size(long k0, long k1, long radius) {
  Int total = 1;
  Int sphere = 1;
  for (long n = 0; n < radius; ++n) {
    const long deg = (n % 2 == 0) ? k0 : k1;
    sphere *= (n == 0) ? deg : deg - 1;
    total += sphere;
  }
  return total;
}

Ball make_ball(long k0, long k1, long radius) {
  if (k0 < 2 || k1 < 2) fail(Errc::invalid_argument, "tree degrees must be >= 2");
  if (ball_size(k0, k1, radius) > Int(kBallBudget))
    fail(Errc::budget_exceeded, "tree ball of radius " + std::to_string(radius) +
                                    " exceeds the counting budget");
  Ball b{k0, k1, radius, {-1}, {0}};
  std::vector<int> frontier{0};
  for (long d = 0; d < radius; ++d) {
    std::vector<int> next;
    const long deg = (d % 2 == 0) ? k0 : k1;
    const long children = (d == 0) ? deg : deg - 1;
    for (int v : frontier) {
      for (long c = 0; c < children; ++c) {
        next.push_back(static_cast<int>(b.parent.size()));
        b.parent.push_back(v);
        b.depth.push_back(d + 1);
      }
    }
    frontier = std::move(next);
  }
  return b;
}

int first_at_depth(const Ball& b, long depth) {
  for (std::size_t v = 0; v < b.depth.size(); ++v)
    if (b.depth[v] == depth) return static_cast<int>(v);
  return -1;
}

// #{z : d(root,z) = 2r, d(z,y) = 2s} per even distance class of y. Any
// representative y works: the ball's automorphisms act transitively on each
// sphere.
std::map<long, Int> sphere_pair_counts(const Ball& b, long two_r, long two_s) {
  std::map<long, Int> counts;
  std::vector<int> sphere;
  for (std::size_t v = 0; v < b.depth.size(); ++v)
    if (b.depth[v] == two_r) sphere.push_back(static_cast<int>(v));
  const long lo = std::abs(two_r - two_s);
  for (long t = lo; t <= two_r + two_s; t += 2) {
    const int y = first_at_depth(b, t);
    if (y < 0) fail(Errc::budget_exceeded, "ball too small for the requested radius");
    Int c = 0;
    for (int z : sphere)
      if (b.dist(z, y) == two_s) ++c;
    if (c != 0) counts[t] = c;
  }
  return counts;
}

long max_radius(const RadialFunction& f) {
  long m = 0;
  for (const auto& [r, c] : f.coeff)
    if (c != 0) m = std::max(m, r);
  return m;
}

}  // namespace

RadialFunction RadialFunction::sphere(long k0, long k1, long radius) {
  if (radius < 0 || radius % 2 != 0)
    fail(Errc::invalid_argument, "radial functions live on even radii");
  RadialFunction f;
  f.k0 = k0;
  f.k1 = k1;
  f.coeff[radius] = 1;
  return f;
}

Int sphere_size(long k0, long k1, long n) {
  if (n < 0) fail(Errc::invalid_argument, "negative radius");
  Int size = 1;
  for (long m = 0; m < n; ++m) {
    const long deg = (m % 2 == 0) ? k0 : k1;
    size *= (m == 0) ? deg : deg - 1;
  }
  return size;
}

RadialFunction radial_convolve(const RadialFunction& a, const RadialFunction& b) {
  if (a.k0 != b.k0 || a.k1 != b.k1)
    fail(Errc::invalid_argument, "convolution needs matching tree parameters");
  for (const auto* f : {&a, &b})
    for (const auto& [r, c] : f->coeff)
      if (r < 0 || r % 2 != 0) fail(Errc::invalid_argument, "odd or negative support radius");

  const long need = max_radius(a) + max_radius(b);
  const Ball ball = make_ball(a.k0, a.k1, std::max<long>(need, 1));

  RadialFunction out;
  out.k0 = a.k0;
  out.k1 = a.k1;
  std::map<std::pair<long, long>, std::map<long, Int>> cache;
  for (const auto& [ra, ca] : a.coeff) {
    if (ca == 0) continue;
    for (const auto& [rb, cb] : b.coeff) {
      if (cb == 0) continue;
      auto key = std::make_pair(ra, rb);
      auto it = cache.find(key);
      if (it == cache.end()) it = cache.emplace(key, sphere_pair_counts(ball, ra, rb)).first;
      for (const auto& [t, cnt] : it->second) out.coeff[t] += ca * cb * Rat(cnt);
    }
  }
  std::erase_if(out.coeff, [](const auto& kv) { return kv.second == 0; });
  return out;
}

RecurrenceReport verify_recurrences(long k0, long k1, long n_max) {
  if (n_max < 2) fail(Errc::invalid_argument, "n_max must be >= 2");
  RecurrenceReport rep;
  rep.k0 = k0;
  rep.k1 = k1;
  rep.n_max = n_max;
  rep.all_ok = true;

  auto sphere = [&](long r) { return RadialFunction::sphere(k0, k1, r); };
  auto minus = [](RadialFunction f, const Rat& scale, const RadialFunction& g) {
    for (const auto& [r, c] : g.coeff) f.coeff[r] -= scale * c;
    std::erase_if(f.coeff, [](const auto& kv) { return kv.second == 0; });
    return f;
  };

  {
    // delta_4 = delta_2*delta_2 - k0(k1-1) delta_0 - (k1-2) delta_2
    RadialFunction rhs = radial_convolve(sphere(2), sphere(2));
    rhs = minus(std::move(rhs), Rat(k0) * (k1 - 1), sphere(0));
    rhs = minus(std::move(rhs), Rat(k1 - 2), sphere(2));
    rep.lines.push_back({"delta4", 1, 4, rhs == sphere(4)});
  }
  for (long n = 2; n <= n_max; ++n) {
    RadialFunction rhs = radial_convolve(sphere(2), sphere(2 * n));
    rhs = minus(std::move(rhs), Rat(k0 - 1) * (k1 - 1), sphere(2 * n - 2));
    rhs = minus(std::move(rhs), Rat(k1 - 2), sphere(2 * n));
    rep.lines.push_back({"delta2n+2", n, 2 * n + 2, rhs == sphere(2 * n + 2)});
  }
  for (const auto& line : rep.lines) rep.all_ok = rep.all_ok && line.ok;
  return rep;
}

std::map<long, Rat> two_step_walk_profile(long k0, long k1) {
  // enumerate the two-step 1/deg walks from the center of a radius-2 ball
  const Ball ball = make_ball(k0, k1, 2);
  std::vector<std::vector<int>> nbrs(ball.parent.size());
  for (std::size_t v = 1; v < ball.parent.size(); ++v) {
    nbrs[v].push_back(ball.parent[v]);
    nbrs[ball.parent[v]].push_back(static_cast<int>(v));
  }
  std::vector<Rat> mass(ball.parent.size(), Rat(0));
  for (int y : nbrs[0])
    for (int z : nbrs[y]) mass[z] += Rat(1, k0) * Rat(1, k1);

  // per-vertex coefficients; equal across each sphere or the walk is not radial
  std::map<long, Rat> profile;
  for (std::size_t z = 0; z < mass.size(); ++z) {
    if (mass[z] == 0) continue;
    auto [it, fresh] = profile.emplace(ball.depth[z], mass[z]);
    if (!fresh && it->second != mass[z])
      fail(Errc::invalid_argument, "two-step walk is not radial");
  }
  return profile;
}

}  // namespace treegap
