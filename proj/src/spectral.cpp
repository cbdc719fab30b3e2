#include "spectral.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <deque>
#include <random>

namespace treegap {

OperatorBundle assemble_operators(const Diagram& d) {
  OperatorBundle b;
  b.dim = static_cast<int>(d.vertex_count());
  b.indeg.reserve(b.dim);
  for (int v = 0; v < b.dim; ++v) {
    Rat deg = d.indeg(v);
    if (deg == 0)
      fail(Errc::zero_indeg, "vertex '" + d.vertex(v).name + "' has no outgoing half-edges");
    b.indeg.push_back(std::move(deg));
  }
  b.constant_indeg =
      std::all_of(b.indeg.begin(), b.indeg.end(), [&](const Rat& x) { return x == b.indeg[0]; });

  b.w.reserve(b.dim);
  for (int v = 0; v < b.dim; ++v) b.w.push_back(b.indeg[v] * d.mu_vertex(v));

  b.pair_measure.assign(b.dim, {});
  for (std::size_t e = 0; e < d.half_edge_count(); ++e) {
    const auto id = static_cast<HalfEdgeId>(e);
    b.pair_measure[d.origin(id)][d.terminus(id)] += d.mu_edge(id);
  }

  b.sqrt_w.resize(b.dim);
  for (int v = 0; v < b.dim; ++v) b.sqrt_w[v] = std::sqrt(rat_dbl(b.w[v]));

  b.walk = Eigen::MatrixXd::Zero(b.dim, b.dim);
  b.sym = Eigen::MatrixXd::Zero(b.dim, b.dim);
  for (int x = 0; x < b.dim; ++x) {
    for (const auto& [y, m] : b.pair_measure[x]) {
      b.walk(x, y) = rat_dbl(m / b.w[x]);
      if (y >= x) {
        const double s = rat_dbl(m) / (b.sqrt_w[x] * b.sqrt_w[y]);
        b.sym(x, y) = s;
        b.sym(y, x) = s;  // mirror of the same value: exact symmetry
      }
    }
  }

  // two-coloring; loops and odd cycles leave parity unset
  std::vector<int> color(b.dim, -1);
  color[0] = 0;
  std::deque<int> queue{0};
  bool bipartite = true;
  while (!queue.empty() && bipartite) {
    const int v = queue.front();
    queue.pop_front();
    for (HalfEdgeId e : d.out_edges(v)) {
      const int u = d.terminus(e);
      if (color[u] < 0) {
        color[u] = 1 - color[v];
        queue.push_back(u);
      } else if (color[u] == color[v]) {
        bipartite = false;
        break;
      }
    }
  }
  if (bipartite) {
    // re-anchor so the base vertex is in class 0
    if (color[d.base()] == 1)
      for (auto& c : color) c = 1 - c;
    b.parity = std::move(color);
  }
  return b;
}

namespace {

Eigen::VectorXd constants_direction(const OperatorBundle& b) {
  return b.sqrt_w.normalized();
}

SpectralReport finish_report(const OperatorBundle& b, double lambda,
                             const Eigen::VectorXd& vec, LambdaMethod method, bool converged) {
  const Eigen::MatrixXd lap = Eigen::MatrixXd::Identity(b.dim, b.dim) - b.sym;
  SpectralReport r;
  r.lambda = lambda;
  r.method = method;
  r.dim = b.dim;
  r.residual = (lap * vec - lambda * vec).norm();
  r.deflation = std::abs(constants_direction(b).dot(vec));
  r.converged = converged;
  r.eigenvector = vec;
  return r;
}

SpectralReport lambda_dense(const OperatorBundle& b) {
  const Eigen::MatrixXd lap = Eigen::MatrixXd::Identity(b.dim, b.dim) - b.sym;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(lap);
  // index 0 is the constants' zero; the bottom of the nonzero spectrum is next
  return finish_report(b, es.eigenvalues()(1), es.eigenvectors().col(1), LambdaMethod::dense,
                       true);
}

SpectralReport lambda_lanczos(const OperatorBundle& b, const LambdaOptions& opts) {
  const int n = b.dim;
  const Eigen::MatrixXd lap = Eigen::MatrixXd::Identity(n, n) - b.sym;
  const Eigen::VectorXd u = constants_direction(b);

  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> gauss;
  auto fresh_direction = [&](const std::vector<Eigen::VectorXd>& basis)
      -> std::optional<Eigen::VectorXd> {
    for (int attempt = 0; attempt < 8; ++attempt) {
      Eigen::VectorXd v(n);
      for (int i = 0; i < n; ++i) v[i] = gauss(rng);
      v -= u.dot(v) * u;
      for (const auto& q : basis) v -= q.dot(v) * q;
      for (const auto& q : basis) v -= q.dot(v) * q;
      if (v.norm() > 1e-8) return v.normalized();
    }
    return std::nullopt;
  };

  // With full reorthogonalization the Krylov space is exhausted exactly once
  // the basis spans the deflated space, so for dimensions within the budget
  // the smallest Ritz value is the answer to machine precision. A small
  // residual alone is no stopping rule: it certifies proximity to *some*
  // eigenvalue, not to the bottom one.
  const int full_span = n - 1;
  const int m_max = std::min(full_span, opts.max_iters);
  const bool can_span_fully = m_max == full_span;

  std::vector<Eigen::VectorXd> basis;
  if (auto v0 = fresh_direction(basis)) basis.push_back(*v0);
  std::vector<double> alpha, beta;

  auto ritz = [&](double* theta, Eigen::VectorXd* vec) {
    const int m = static_cast<int>(alpha.size());
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
    for (int i = 0; i < m; ++i) {
      t(i, i) = alpha[i];
      if (i + 1 < m) t(i, i + 1) = t(i + 1, i) = beta[i];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
    *theta = es.eigenvalues()(0);
    Eigen::VectorXd y = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < m; ++i) y += es.eigenvectors()(i, 0) * basis[i];
    y -= u.dot(y) * u;
    y.normalize();
    *vec = y;
  };

  double prev_theta = 2.0;
  int stable_checks = 0;
  while (static_cast<int>(alpha.size()) < m_max && !basis.empty()) {
    const Eigen::VectorXd& v = basis.back();
    Eigen::VectorXd r = lap * v;
    r -= u.dot(r) * u;
    const double a = v.dot(r);
    alpha.push_back(a);
    r -= a * v;
    if (alpha.size() > 1 && beta.back() != 0) r -= beta.back() * basis[basis.size() - 2];
    // full reorthogonalization, with u in the sweep: normalizing a nearly
    // closed residual would otherwise amplify roundoff-sized components of
    // the deflated direction into the basis
    for (int sweep = 0; sweep < 2; ++sweep) {
      r -= u.dot(r) * u;
      for (const auto& q : basis) r -= q.dot(r) * q;
    }
    const double nb = r.norm();

    if (static_cast<int>(alpha.size()) >= m_max) break;
    if (nb > 1e-10) {
      beta.push_back(nb);
      basis.push_back(r / nb);
    } else {
      // invariant subspace (nearly) closed; keep expanding with a fresh
      // direction rather than normalizing noise
      auto next = fresh_direction(basis);
      if (!next) break;  // the deflated space is spanned
      beta.push_back(0.0);
      basis.push_back(*next);
    }

    // stopping rule for problems too large to span fully: residual below tol
    // twice in a row with a stationary Ritz value
    if (!can_span_fully && alpha.size() % 16 == 0) {
      double theta;
      Eigen::VectorXd y;
      ritz(&theta, &y);
      const double resid = (lap * y - theta * y).norm();
      if (resid < opts.tol && std::abs(theta - prev_theta) < std::max(opts.tol, 1e-14))
        ++stable_checks;
      else
        stable_checks = 0;
      prev_theta = theta;
      if (stable_checks >= 2)
        return finish_report(b, theta, y, LambdaMethod::iterative, true);
    }
  }

  double theta = 0;
  Eigen::VectorXd y;
  ritz(&theta, &y);
  SpectralReport rep = finish_report(b, theta, y, LambdaMethod::iterative, false);
  const bool spanned = static_cast<int>(alpha.size()) >= full_span;
  if (spanned || rep.residual < opts.tol) rep.converged = true;
  return rep;
}

}  // namespace

SpectralReport lambda_bottom(const OperatorBundle& ops, const LambdaOptions& opts) {
  if (ops.dim < 2)
    fail(Errc::invalid_argument, "lambda needs at least two vertices");
  if (!opts.force_iterative && ops.dim <= opts.dense_cutoff) return lambda_dense(ops);
  return lambda_lanczos(ops, opts);
}

SpectralReport lambda_bottom(const Diagram& d, const LambdaOptions& opts) {
  return lambda_bottom(assemble_operators(d), opts);
}

double rayleigh(const OperatorBundle& ops, const std::vector<double>& f) {
  if (static_cast<int>(f.size()) != ops.dim)
    fail(Errc::invalid_argument, "rayleigh: wrong function length");
  std::vector<double> wd(ops.dim);
  double wsum = 0, mean_num = 0, norm_in = 0;
  for (int i = 0; i < ops.dim; ++i) {
    wd[i] = rat_dbl(ops.w[i]);
    wsum += wd[i];
    mean_num += wd[i] * f[i];
    norm_in += wd[i] * f[i] * f[i];
  }
  const double mean = mean_num / wsum;
  Eigen::VectorXd f0(ops.dim);
  for (int i = 0; i < ops.dim; ++i) f0[i] = f[i] - mean;
  double nrm = 0;
  for (int i = 0; i < ops.dim; ++i) nrm += wd[i] * f0[i] * f0[i];
  if (!(nrm > 1e-24 * std::max(1.0, norm_in)))
    fail(Errc::degenerate_function, "function is (numerically) constant");

  const Eigen::VectorXd af = ops.walk * f0;
  double quad = 0;  // <(I - walk) f0, f0>_w
  for (int i = 0; i < ops.dim; ++i) quad += wd[i] * (f0[i] - af[i]) * f0[i];
  return quad / nrm;
}

std::vector<double> laplacian_spectrum(const OperatorBundle& ops) {
  const Eigen::MatrixXd lap = Eigen::MatrixXd::Identity(ops.dim, ops.dim) - ops.sym;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(lap);
  std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + ops.dim);
  return out;
}

std::vector<double> walk_spectrum_unsymmetrized(const OperatorBundle& ops) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(ops.walk);
  std::vector<double> out;
  out.reserve(ops.dim);
  for (int i = 0; i < ops.dim; ++i) {
    const auto ev = es.eigenvalues()(i);
    if (std::abs(ev.imag()) > 1e-9)
      fail(Errc::convergence_failure, "walk operator produced a non-real eigenvalue");
    out.push_back(ev.real());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---- parity squaring ---------------------------------------------------------

namespace {

using SparseRow = std::map<int, Rat>;

std::vector<double> symmetrized_eigenvalues(const std::vector<SparseRow>& rows,
                                            const std::vector<int>& idx,
                                            const std::vector<Rat>& w) {
  const int m = static_cast<int>(idx.size());
  std::vector<int> pos(w.size(), -1);
  for (int i = 0; i < m; ++i) pos[idx[i]] = i;
  std::vector<double> sq(m);
  for (int i = 0; i < m; ++i) sq[i] = std::sqrt(rat_dbl(w[idx[i]]));
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(m, m);
  for (int i = 0; i < m; ++i) {
    for (const auto& [col, val] : rows[i]) {
      const int j = pos[col];
      if (j < 0) continue;
      if (j < i) continue;  // fill from the upper triangle only
      const double t = rat_dbl(val * w[idx[i]]);  // w-selfadjoint: t(i,j) == t(j,i)
      s(i, j) = t / (sq[i] * sq[j]);
      s(j, i) = s(i, j);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s);
  return {es.eigenvalues().data(), es.eigenvalues().data() + m};
}

}  // namespace

SquareSplitReport square_split_check(const Diagram& d, double tol) {
  const OperatorBundle b = assemble_operators(d);
  if (!b.parity) fail(Errc::not_bipartite, "diagram is not bipartite");
  const auto& parity = *b.parity;
  const int n = b.dim;

  SquareSplitReport rep;
  rep.tol = tol;

  // class indegs over non-exempted vertices
  std::optional<Rat> k[2];
  for (int v = 0; v < n; ++v) {
    if (d.vertex(v).boundary) continue;
    auto& slot = k[parity[v]];
    if (!slot)
      slot = b.indeg[v];
    else if (*slot != b.indeg[v])
      fail(Errc::not_regular, "class indeg is not constant over interior vertices");
  }
  if (!k[0] || !k[1]) fail(Errc::not_regular, "a parity class has no interior vertex");
  if (*k[0] < 2 || *k[1] < 2) fail(Errc::not_regular, "parity squaring needs indeg >= 2");
  rep.k0 = *k[0];
  rep.k1 = *k[1];

  for (int v = 0; v < n; ++v) (parity[v] == 0 ? rep.even_size : rep.odd_size)++;

  // (a) every edge crosses parity, so walk maps each class into the other
  rep.parity_split_ok = true;
  for (std::size_t e = 0; e < d.half_edge_count(); ++e)
    if (parity[d.origin(static_cast<HalfEdgeId>(e))] ==
        parity[d.terminus(static_cast<HalfEdgeId>(e))])
      rep.parity_split_ok = false;

  // exact sparse walk rows
  std::vector<SparseRow> walk_rows(n);
  for (int x = 0; x < n; ++x)
    for (const auto& [y, m] : b.pair_measure[x]) walk_rows[x][y] = m / b.w[x];

  // rows where the exact identity applies: the vertex and all neighbours
  // carry their class indeg
  std::vector<char> interior(n, 1);
  for (int v = 0; v < n; ++v)
    if (d.vertex(v).boundary) interior[v] = 0;
  std::vector<char> included(n, 0);
  for (int x = 0; x < n; ++x) {
    if (!interior[x]) continue;
    bool ok = true;
    for (HalfEdgeId e : d.out_edges(x))
      if (!interior[d.terminus(e)]) ok = false;
    included[x] = ok;
  }

  std::vector<SparseRow> square_rows(n), two_step_rows(n);
  for (int x = 0; x < n; ++x) {
    if (!included[x]) continue;
    // walk^2 row by sparse composition
    for (const auto& [y, axy] : walk_rows[x])
      for (const auto& [z, ayz] : walk_rows[y]) square_rows[x][z] += axy * ayz;
    // descended distance-2 operator: lift multiplicities minus the backtrack
    const Rat norm = (parity[x] == 0) ? (*k[0]) * (*k[1] - 1) : (*k[1]) * (*k[0] - 1);
    for (HalfEdgeId e : d.out_edges(x)) {
      const VertexId y = d.terminus(e);
      for (HalfEdgeId ep : d.out_edges(y)) {
        Rat lifts = d.index(ep);
        if (ep == d.partner(e)) lifts -= 1;
        if (lifts != 0) two_step_rows[x][d.terminus(ep)] += d.index(e) * lifts / norm;
      }
    }
  }

  // (b) walk^2 == a I + (1-a) W on included rows, exactly
  for (int x = 0; x < n; ++x) {
    if (!included[x]) continue;
    (parity[x] == 0 ? rep.interior_even : rep.interior_odd)++;
    const Rat a = (parity[x] == 0) ? Rat(1) / *k[1] : Rat(1) / *k[0];
    SparseRow expect = two_step_rows[x];
    for (auto& [z, val] : expect) val *= (1 - a);
    expect[x] += a;
    SparseRow got = square_rows[x];
    for (const auto& [z, val] : expect) {
      Rat dev = got.count(z) ? Rat(got[z] - val) : Rat(-val);
      if (dev < 0) dev = -dev;
      if (dev > rep.max_identity_dev) rep.max_identity_dev = dev;
      got.erase(z);
    }
    for (const auto& [z, val] : got) {
      const Rat dev = val < 0 ? Rat(-val) : val;
      if (dev > rep.max_identity_dev) rep.max_identity_dev = dev;
    }
  }

  // (c) spectra on the included even block: the affine image must match
  std::vector<int> even_idx;
  for (int x = 0; x < n; ++x)
    if (included[x] && parity[x] == 0) even_idx.push_back(x);
  if (!even_idx.empty()) {
    std::vector<SparseRow> sq_block(even_idx.size()), ts_block(even_idx.size());
    std::vector<char> in_block(n, 0);
    for (int x : even_idx) in_block[x] = 1;
    for (std::size_t i = 0; i < even_idx.size(); ++i) {
      for (const auto& [z, val] : square_rows[even_idx[i]])
        if (in_block[z]) sq_block[i][z] = val;
      for (const auto& [z, val] : two_step_rows[even_idx[i]])
        if (in_block[z]) ts_block[i][z] = val;
    }
    const auto sq_eigs = symmetrized_eigenvalues(sq_block, even_idx, b.w);
    auto ts_eigs = symmetrized_eigenvalues(ts_block, even_idx, b.w);
    const double a = rat_dbl(Rat(1) / *k[1]);
    for (auto& ev : ts_eigs) ev = a + (1 - a) * ev;
    std::sort(ts_eigs.begin(), ts_eigs.end());
    for (std::size_t i = 0; i < sq_eigs.size(); ++i)
      rep.max_eigen_dev = std::max(rep.max_eigen_dev, std::abs(sq_eigs[i] - ts_eigs[i]));
  }

  rep.pass = rep.parity_split_ok && rep.max_identity_dev == 0 && rep.max_eigen_dev < tol;
  return rep;
}

}  // namespace treegap
