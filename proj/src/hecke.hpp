#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rational.hpp"

namespace treegap {

// Radial function combinatorics on the (k0,k1)-biregular tree, base point of
// degree k0. Only even radii are modeled: the sphere indicators delta_{2n}
// span a commutative convolution algebra, and convolution is evaluated by
// finite path counting on generated tree balls rather than by closed-form
// product formulas, so the displayed recurrences stay an independent oracle.

struct RadialFunction {
  long k0 = 3, k1 = 3;
  std::map<long, Rat> coeff;  // even radius -> coefficient, finite support

  static RadialFunction sphere(long k0, long k1, long radius);  // delta_radius
  bool operator==(const RadialFunction&) const = default;
};

/// |{y : d(base, y) = n}| for a base point of degree k0.
Int sphere_size(long k0, long k1, long n);

inline constexpr std::size_t kBallBudget = 2'000'000;  // vertices

/// Convolution by path counting: (delta_{2r} * delta_{2s})(y) counts the
/// midpoints z with d(base,z)=2r and d(z,y)=2s, extended bilinearly. Needs a
/// ball of radius max support(a) + max support(b); throws BudgetExceeded when
/// that ball would be too large.
RadialFunction radial_convolve(const RadialFunction& a, const RadialFunction& b);

struct RecurrenceLine {
  std::string identity;
  long n = 0;
  long max_radius = 0;
  bool ok = false;
};

struct RecurrenceReport {
  long k0 = 0, k1 = 0, n_max = 0;
  std::vector<RecurrenceLine> lines;
  bool all_ok = false;
};

// Verifies, as exact coefficient identities,
//   delta_4      = delta_2*delta_2 - k0(k1-1) delta_0 - (k1-2) delta_2
//   delta_{2n+2} = delta_2*delta_{2n} - (k0-1)(k1-1) delta_{2n-2}
//                                     - (k1-2) delta_{2n}        (n >= 2)
// for all n up to n_max.
RecurrenceReport verify_recurrences(long k0, long k1, long n_max);

/// Radial profile of the two-step walk operator at the center of a tree ball:
/// coefficient per even radius of applying the 1/deg neighbor average twice.
/// Equals (1/k1) delta_0 + (1 - 1/k1) * delta_2/|S_2| coefficientwise.
std::map<long, Rat> two_step_walk_profile(long k0, long k1);

}  // namespace treegap
