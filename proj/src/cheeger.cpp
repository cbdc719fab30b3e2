#include "cheeger.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>

#include "generators.hpp"

namespace treegap {

CutResult boundary_measure(const Diagram& d, const std::vector<VertexId>& s) {
  const std::size_t n = d.vertex_count();
  if (s.empty() || s.size() >= n)
    fail(Errc::empty_or_full_set, "cut set must be nonempty and proper");
  std::vector<char> in_s(n, 0);
  for (VertexId v : s) {
    if (v < 0 || static_cast<std::size_t>(v) >= n)
      fail(Errc::invalid_argument, "cut set contains an unknown vertex");
    if (in_s[v]) fail(Errc::invalid_argument, "cut set contains a repeated vertex");
    in_s[v] = 1;
  }

  CutResult r;
  r.members = s;
  std::sort(r.members.begin(), r.members.end());
  for (VertexId v : r.members) r.mu_s += d.mu_vertex(v);
  for (std::size_t e = 0; e < d.half_edge_count(); ++e) {
    const auto id = static_cast<HalfEdgeId>(e);
    if (in_s[d.origin(id)] && !in_s[d.terminus(id)]) r.mu_boundary += d.mu_edge(id);
  }
  r.ratio = r.mu_boundary / r.mu_s;
  r.feasible = 2 * r.mu_s <= d.total_volume();
  return r;
}

namespace {

// Lexicographic order on the sorted member lists of two subsets, decided from
// the masks: at the lowest differing bit, the set holding it is smaller unless
// the other set is exhausted above that bit.
bool mask_lex_less(std::uint32_t a, std::uint32_t b) {
  if (a == b) return false;
  const int i = std::countr_zero(a ^ b);
  const bool a_has = (a >> i) & 1u;
  const std::uint32_t rest = (a_has ? b : a) >> (i + 1);
  return a_has ? rest != 0 : rest == 0;
}

std::vector<VertexId> mask_members(std::uint32_t mask, int n) {
  std::vector<VertexId> out;
  for (int v = 0; v < n; ++v)
    if ((mask >> v) & 1u) out.push_back(v);
  return out;
}

}  // namespace

CutResult cheeger_exact(const Diagram& d, int cutoff) {
  const int n = static_cast<int>(d.vertex_count());
  if (n > cutoff)
    fail(Errc::too_large, "exact enumeration supports at most " + std::to_string(cutoff) +
                              " vertices; use the sweep");
  if (n < 2) fail(Errc::empty_or_full_set, "no proper nonempty subsets exist");

  // Scale all measures to integers so the 2^n scan runs on plain big-int
  // additions with exact comparisons throughout.
  using boost::multiprecision::lcm;
  Int denom = 1;
  for (int v = 0; v < n; ++v) denom = lcm(denom, rat_den(d.mu_vertex(v)));
  for (std::size_t e = 0; e < d.half_edge_count(); ++e)
    denom = lcm(denom, rat_den(d.mu_edge(static_cast<HalfEdgeId>(e))));
  auto scaled = [&](const Rat& r) { return Int(rat_num(r) * (denom / rat_den(r))); };

  std::vector<Int> mv(n);
  for (int v = 0; v < n; ++v) mv[v] = scaled(d.mu_vertex(v));
  const Int mtotal = std::accumulate(mv.begin(), mv.end(), Int(0));

  struct Flank {
    int other;
    Int out_w;  // mu of the half-edge leaving v
    Int in_w;   // mu of the partner half-edge entering v
  };
  std::vector<std::vector<Flank>> flanks(n);
  for (std::size_t e = 0; e < d.half_edge_count(); ++e) {
    const auto id = static_cast<HalfEdgeId>(e);
    const int v = d.origin(id), u = d.terminus(id);
    if (v == u) continue;  // loops never cross a cut
    flanks[v].push_back({u, scaled(d.mu_edge(id)), scaled(d.mu_edge(d.partner(id)))});
  }

  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1u);
  std::uint32_t mask = 0;
  Int ms = 0, bs = 0;
  bool have_best = false;
  Int best_ms = 1, best_bs = 0;
  std::uint32_t best_mask = 0;

  for (std::uint32_t t = 1; t <= full; ++t) {
    const int v = std::countr_zero(t);
    const bool entering = !((mask >> v) & 1u);
    mask ^= (1u << v);
    if (entering) {
      ms += mv[v];
      for (const auto& f : flanks[v]) {
        const bool other_in = (mask >> f.other) & 1u;
        if (other_in)
          bs -= f.in_w;  // the edge into v stopped being boundary
        else
          bs += f.out_w;
      }
    } else {
      ms -= mv[v];
      for (const auto& f : flanks[v]) {
        const bool other_in = (mask >> f.other) & 1u;
        if (other_in)
          bs += f.in_w;
        else
          bs -= f.out_w;
      }
    }
    if (mask == full) continue;
    if (2 * ms > mtotal) continue;
    // compare bs/ms against the incumbent exactly
    if (have_best) {
      const Int lhs = bs * best_ms, rhs = best_bs * ms;
      if (lhs > rhs) continue;
      if (lhs == rhs && !mask_lex_less(mask, best_mask)) continue;
    }
    have_best = true;
    best_ms = ms;
    best_bs = bs;
    best_mask = mask;
  }

  return boundary_measure(d, mask_members(best_mask, n));
}

CutResult cheeger_sweep(const Diagram& d, const LambdaOptions& opts) {
  const int n = static_cast<int>(d.vertex_count());
  if (n < 2) fail(Errc::empty_or_full_set, "no proper nonempty subsets exist");
  const OperatorBundle ops = assemble_operators(d);
  const SpectralReport rep = lambda_bottom(ops, opts);
  if (!rep.converged)
    fail(Errc::convergence_failure, "eigensolver did not converge for the sweep");

  // recover the eigenvector in the original (unsymmetrized) coordinates
  std::vector<double> f(n);
  for (int i = 0; i < n; ++i) f[i] = rep.eigenvector[i] / ops.sqrt_w[i];

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (f[a] != f[b]) return f[a] < f[b];
    return a < b;
  });

  const Rat half_total = d.total_volume() / 2;
  std::optional<CutResult> best;
  std::vector<VertexId> prefix;
  std::vector<char> in_prefix(n, 0);
  for (int t = 0; t + 1 < n; ++t) {
    prefix.push_back(order[t]);
    in_prefix[order[t]] = 1;
    Rat mu_prefix = 0;
    for (VertexId v : prefix) mu_prefix += d.mu_vertex(v);
    std::vector<VertexId> side;
    if (mu_prefix <= half_total) {
      side = prefix;
    } else {
      for (int v = 0; v < n; ++v)
        if (!in_prefix[v]) side.push_back(v);
    }
    CutResult cut = boundary_measure(d, side);
    if (!cut.feasible) continue;
    if (!best || cut.ratio < best->ratio ||
        (cut.ratio == best->ratio &&
         std::lexicographical_compare(cut.members.begin(), cut.members.end(),
                                      best->members.begin(), best->members.end())))
      best = std::move(cut);
  }
  if (!best) fail(Errc::empty_or_full_set, "no feasible sweep cut");
  return *best;
}

// ---- certificate -------------------------------------------------------------

GapCertificate gap_certificate(const Diagram& diag, const std::vector<VertexId>& core,
                               const Rat& c, const Rat& d) {
  const int n = static_cast<int>(diag.vertex_count());
  if (core.empty()) fail(Errc::invalid_argument, "certificate needs a nonempty core");
  std::vector<char> in_core(n, 0);
  for (VertexId v : core) {
    if (v < 0 || v >= n) fail(Errc::invalid_argument, "core contains an unknown vertex");
    in_core[v] = 1;
  }
  if (c <= 0 || d <= 0) fail(Errc::invalid_argument, "certificate parameters must be positive");

  Rat mu_core = 0;
  for (VertexId v : core) mu_core += diag.mu_vertex(v);
  const Rat total = diag.total_volume();
  if (!(2 * mu_core > total))
    fail(Errc::core_too_small, "core holds at most half the volume");

  const Rat tail_bound = c * (1 - Rat(1) / d);
  if (!(tail_bound > 0))
    fail(Errc::decay_violated, "decay parameter d must exceed 1 for a positive tail bound");

  // core connectivity over the induced subgraph
  {
    std::vector<char> seen(n, 0);
    std::deque<VertexId> queue{core.front()};
    seen[core.front()] = 1;
    std::size_t reached = 1;
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      for (HalfEdgeId e : diag.out_edges(v)) {
        const VertexId u = diag.terminus(e);
        if (in_core[u] && !seen[u]) {
          seen[u] = 1;
          ++reached;
          queue.push_back(u);
        }
      }
    }
    std::size_t core_size = 0;
    for (int v = 0; v < n; ++v) core_size += in_core[v];
    if (reached != core_size) fail(Errc::core_not_connected, "core is not connected");
  }

  // The complement must split into simple paths, each hanging off the core by
  // a single edge; walk each and verify decay and first-edge strength.
  std::vector<char> visited(n, 0);
  for (int head = 0; head < n; ++head) {
    if (in_core[head] || visited[head]) continue;
    // find the attachment: exactly one half-edge into the core from the head
    int core_links = 0;
    HalfEdgeId to_core = -1;
    for (HalfEdgeId e : diag.out_edges(head)) {
      if (in_core[diag.terminus(e)]) {
        ++core_links;
        to_core = e;
      }
    }
    if (core_links == 0) continue;  // reached later from its ray head
    if (core_links > 1)
      fail(Errc::ray_structure,
           "vertex '" + diag.vertex(head).name + "' touches the core more than once");

    VertexId prev = diag.terminus(to_core);
    VertexId cur = head;
    HalfEdgeId back_edge = to_core;
    while (true) {
      visited[cur] = 1;
      // first-edge strength for the tail starting at cur
      if (diag.mu_edge(back_edge) < c * diag.mu_vertex(cur))
        fail(Errc::decay_violated, "first boundary edge at '" + diag.vertex(cur).name +
                                       "' is weaker than c * mu(vertex)");
      // enumerate continuations: exactly one backward pair, at most one forward
      HalfEdgeId forward = -1;
      int back_count = 0;
      for (HalfEdgeId e : diag.out_edges(cur)) {
        const VertexId u = diag.terminus(e);
        if (u == prev && e == back_edge) {
          ++back_count;
          continue;
        }
        if (in_core[u] || visited[u] || u == cur || forward >= 0)
          fail(Errc::ray_structure,
               "complement of the core is not a disjoint union of rays at '" +
                   diag.vertex(cur).name + "'");
        forward = e;
      }
      if (back_count != 1)
        fail(Errc::ray_structure, "multi-edge on a ray at '" + diag.vertex(cur).name + "'");
      if (forward < 0) break;
      const VertexId nxt = diag.terminus(forward);
      if (diag.mu_vertex(nxt) > diag.mu_vertex(cur) / d)
        fail(Errc::decay_violated,
             "measure does not decay by d at '" + diag.vertex(nxt).name + "'");
      prev = cur;
      cur = nxt;
      back_edge = diag.partner(forward);
    }
  }
  for (int v = 0; v < n; ++v)
    if (!in_core[v] && !visited[v])
      fail(Errc::ray_structure,
           "vertex '" + diag.vertex(v).name + "' is outside the core but on no ray");

  GapCertificate cert;
  cert.core = core;
  std::sort(cert.core.begin(), cert.core.end());
  cert.c = c;
  cert.d = d;
  cert.tail_bound = tail_bound;
  std::optional<Rat> least_core_edge;
  for (std::size_t e = 0; e < diag.half_edge_count(); ++e) {
    const auto id = static_cast<HalfEdgeId>(e);
    if (in_core[diag.origin(id)] && in_core[diag.terminus(id)]) {
      const Rat& m = diag.mu_edge(id);
      if (!least_core_edge || m < *least_core_edge) least_core_edge = m;
    }
  }
  if (least_core_edge) cert.core_bound = *least_core_edge / total;
  cert.certified = cert.core_bound ? std::min(cert.tail_bound, *cert.core_bound) : cert.tail_bound;
  return cert;
}

// ---- family ladders ----------------------------------------------------------

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::no_expansion_witness: return "no-expansion-witness";
    case Verdict::expansion_consistent: return "expansion-consistent";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

FamilyHooks ray_blocks_family_hooks(long q) {
  FamilyHooks h;
  h.name = "ray-blocks";
  h.make = [q](long n) { return gen_ray_blocks({q, n}); };
  h.witness_cuts = [](const Diagram& d, long n) {
    std::vector<std::pair<std::string, std::vector<VertexId>>> cuts;
    for (long m = 1; m <= n; ++m) {
      std::vector<VertexId> ids;
      for (const auto& name : ray_blocks_block_ids(m)) ids.push_back(*d.find_vertex(name));
      cuts.emplace_back("block " + std::to_string(m), std::move(ids));
    }
    return cuts;
  };
  h.certify = nullptr;
  return h;
}

FamilyHooks cusp_family_hooks(long q, long rays) {
  FamilyHooks h;
  h.name = "cusp";
  h.make = [q, rays](long n) { return gen_cusp(cusp_family(q, rays, n)).diagram; };
  h.witness_cuts = nullptr;
  h.certify = [q, rays](const Diagram& d, long n) -> std::optional<GapCertificate> {
    const CuspDiagram cd = gen_cusp(cusp_family(q, rays, n));
    std::vector<VertexId> core;
    for (const auto& id : cd.core_ids) core.push_back(*d.find_vertex(id));
    return gap_certificate(d, core, cd.c, cd.d);
  };
  return h;
}

FamilyPoint evaluate_family_point(const FamilyHooks& family, long n, const LambdaOptions& opts) {
  const Diagram d = family.make(n);
  FamilyPoint p;
  p.n = n;
  p.dim = static_cast<int>(d.vertex_count());

  p.max_index_ratio = 0;
  p.max_indeg = 0;
  for (std::size_t e = 0; e < d.half_edge_count(); ++e) {
    const auto id = static_cast<HalfEdgeId>(e);
    const Rat ratio = d.index(d.partner(id)) / d.index(id);
    if (ratio > p.max_index_ratio) p.max_index_ratio = ratio;
  }
  for (int v = 0; v < p.dim; ++v) {
    const Rat deg = d.indeg(v);
    if (deg > p.max_indeg) p.max_indeg = deg;
  }

  std::optional<CutResult> best;
  std::string witness;
  auto offer = [&](CutResult cut, std::string desc) {
    if (!cut.feasible) return;
    if (!best || cut.ratio < best->ratio) {
      best = std::move(cut);
      witness = std::move(desc);
    }
  };
  if (p.dim <= kExactCutoff) {
    CutResult exact = cheeger_exact(d);
    p.h_exact = exact.ratio;
    offer(std::move(exact), "exact minimizer");
  } else {
    offer(cheeger_sweep(d, opts), "sweep cut");
  }
  if (family.witness_cuts)
    for (auto& [desc, ids] : family.witness_cuts(d, n))
      offer(boundary_measure(d, ids), desc);
  if (!best) fail(Errc::empty_or_full_set, "no feasible cut on the truncation");
  p.h_upper = best->ratio;
  p.witness = witness;

  p.lambda = lambda_bottom(d, opts).lambda;
  if (family.certify) {
    auto cert = family.certify(d, n);
    if (cert) p.certified = cert->certified;
  }
  return p;
}

VerdictRecord expander_verdict(const FamilyHooks& family, const std::vector<long>& ladder,
                               const Rat& eps, const LambdaOptions& opts) {
  if (ladder.empty()) fail(Errc::invalid_argument, "empty truncation ladder");
  for (std::size_t i = 1; i < ladder.size(); ++i)
    if (ladder[i] <= ladder[i - 1])
      fail(Errc::invalid_argument, "truncation ladder must be strictly increasing");
  if (!(eps > 0)) fail(Errc::invalid_argument, "eps must be positive");

  VerdictRecord rec;
  rec.eps = eps;
  for (long n : ladder) rec.points.push_back(evaluate_family_point(family, n, opts));

  // boundedness hypotheses: report growth along the ladder, never fatal
  bool ratio_grows = true, indeg_grows = true;
  for (std::size_t i = 1; i < rec.points.size(); ++i) {
    ratio_grows = ratio_grows && rec.points[i].max_index_ratio > rec.points[i - 1].max_index_ratio;
    indeg_grows = indeg_grows && rec.points[i].max_indeg > rec.points[i - 1].max_indeg;
  }
  rec.hypothesis_flag = rec.points.size() > 1 && (ratio_grows || indeg_grows);

  bool decreasing = true;
  for (std::size_t i = 1; i < rec.points.size(); ++i)
    decreasing = decreasing && rec.points[i].h_upper < rec.points[i - 1].h_upper;

  Rat floor_h;  // min over the ladder of certified (when present) else h_upper
  bool first = true;
  for (const auto& p : rec.points) {
    const Rat v = p.certified ? *p.certified : p.h_upper;
    if (first || v < floor_h) floor_h = v;
    first = false;
  }

  if (rec.points.back().h_upper < eps && (rec.points.size() == 1 || decreasing))
    rec.verdict = Verdict::no_expansion_witness;
  else if (floor_h >= eps)
    rec.verdict = Verdict::expansion_consistent;
  else
    rec.verdict = Verdict::inconclusive;
  rec.note = "evidence about the truncation ladder only, not the untruncated diagram";
  return rec;
}

}  // namespace treegap
