#pragma once

#include <Eigen/Dense>

#include <map>
#include <optional>
#include <vector>

#include "diagram.hpp"

namespace treegap {

// The walk operator of a diagram averages over outgoing half-edges with
// weights mu(e)/mu(x), normalized by indeg(x); the Laplacian is I minus it.
// The walk operator is self-adjoint for the inner product with weights
// w(x) = indeg(x) * mu(x) (which is the measure inner product, up to scale,
// whenever indeg is constant), so we symmetrize by conjugating with
// diag(sqrt(w)). Symmetry is structural: matched entries are computed from
// one exact rational pair measure, never from two float paths.

struct OperatorBundle {
  int dim = 0;
  std::vector<Rat> w;      // indeg(x) * mu(x)
  std::vector<Rat> indeg;  // exact, all > 0
  bool constant_indeg = false;
  // m(x,y) = sum of mu(e) over half-edges x->y; exact and symmetric
  std::vector<std::map<int, Rat>> pair_measure;
  Eigen::MatrixXd walk;  // walk[x][y] = m(x,y)/w(x)
  Eigen::MatrixXd sym;   // diag(sqrt w) * walk * diag(1/sqrt w)
  Eigen::VectorXd sqrt_w;
  // 0/1 color per vertex (0 = base side) when the graph is bipartite
  std::optional<std::vector<int>> parity;
};

OperatorBundle assemble_operators(const Diagram& d);

enum class LambdaMethod { dense, iterative };

struct SpectralReport {
  double lambda = 0;
  LambdaMethod method = LambdaMethod::dense;
  double residual = 0;
  int dim = 0;
  double deflation = 0;  // |<eigenvector, constants>| in the w inner product
  bool converged = true;
  Eigen::VectorXd eigenvector;  // in symmetrized coordinates
};

struct LambdaOptions {
  double tol = 1e-10;
  int dense_cutoff = 512;        // dense solve up to this dimension
  bool force_iterative = false;  // run the Lanczos path regardless of size
  int max_iters = 400;
  std::uint64_t seed = 0x5eed;   // start vector for the iterative path
};

/// Smallest eigenvalue of the Laplacian on the orthogonal complement of the
/// constants. Dense solve below the cutoff; above it, Lanczos with full
/// reorthogonalization and explicit deflation of the constant vector.
SpectralReport lambda_bottom(const Diagram& d, const LambdaOptions& opts = {});
SpectralReport lambda_bottom(const OperatorBundle& ops, const LambdaOptions& opts = {});

/// Rayleigh quotient of the Laplacian at f (after removing the w-weighted
/// mean); an upper bound for lambda by the variational principle.
double rayleigh(const OperatorBundle& ops, const std::vector<double>& f);

/// All eigenvalues of the symmetrized Laplacian, ascending (dense oracle).
std::vector<double> laplacian_spectrum(const OperatorBundle& ops);

/// Eigenvalues of the raw (unsymmetrized) walk operator, sorted ascending.
/// Throws if any eigenvalue has imaginary part above 1e-9: the walk operator
/// is similar to a symmetric one, so its spectrum must be real.
std::vector<double> walk_spectrum_unsymmetrized(const OperatorBundle& ops);

// Parity-squaring machinery. For a bipartite diagram with class indegs
// (k0 on the base side, k1 opposite), the square of the walk operator leaves
// each parity class invariant and on interior rows satisfies, exactly in
// rationals,
//
//   walk^2 | class p  =  a_p I + (1 - a_p) W_p,   a_even = 1/k1, a_odd = 1/k0,
//
// where W_p is the two-step operator descended from the distance-2 sphere
// average on the universal cover: each outgoing half-edge e contributes i(e)
// lifts and the continuation e' contributes i(e') lifts minus one backtrack
// when e' is the partner of e. Consequently the spectrum of walk^2 on a
// parity class is the affine image a_p + (1 - a_p) * sigma(W_p).
struct SquareSplitReport {
  Rat k0, k1;
  int even_size = 0, odd_size = 0;
  int interior_even = 0, interior_odd = 0;  // rows actually compared
  bool parity_split_ok = false;   // walk maps each class into the other
  Rat max_identity_dev = 0;       // exact deviation in the operator identity
  double max_eigen_dev = 0;       // affine spectrum comparison on even class
  double tol = 0;
  bool pass = false;
};

SquareSplitReport square_split_check(const Diagram& d, double tol);

}  // namespace treegap
