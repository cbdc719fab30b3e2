#include "treegap/treegap.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <sstream>

#include "cheeger.hpp"
#include "cover.hpp"
#include "diagram.hpp"
#include "generators.hpp"
#include "hecke.hpp"
#include "spectral.hpp"

using namespace treegap;

struct tg_diagram {
  Diagram d;
};

namespace {

thread_local std::string g_last_error;

tg_status status_of(Errc code) {
  switch (code) {
    case Errc::parse_error: return TG_E_PARSE;
    case Errc::dangling_partner: return TG_E_DANGLING_PARTNER;
    case Errc::fixed_point_involution: return TG_E_FIXED_POINT_INVOLUTION;
    case Errc::non_positive_index: return TG_E_NON_POSITIVE_INDEX;
    case Errc::disconnected: return TG_E_DISCONNECTED;
    case Errc::cycle_inconsistent: return TG_E_CYCLE_INCONSISTENT;
    case Errc::zero_indeg: return TG_E_ZERO_INDEG;
    case Errc::convergence_failure: return TG_E_CONVERGENCE_FAILURE;
    case Errc::degenerate_function: return TG_E_DEGENERATE_FUNCTION;
    case Errc::not_bipartite: return TG_E_NOT_BIPARTITE;
    case Errc::not_regular: return TG_E_NOT_REGULAR;
    case Errc::empty_or_full_set: return TG_E_EMPTY_OR_FULL_SET;
    case Errc::too_large: return TG_E_TOO_LARGE;
    case Errc::core_too_small: return TG_E_CORE_TOO_SMALL;
    case Errc::core_not_connected: return TG_E_CORE_NOT_CONNECTED;
    case Errc::ray_structure: return TG_E_RAY_STRUCTURE;
    case Errc::decay_violated: return TG_E_DECAY_VIOLATED;
    case Errc::non_integer_index: return TG_E_NON_INTEGER_INDEX;
    case Errc::budget_exceeded: return TG_E_BUDGET_EXCEEDED;
    case Errc::invalid_argument: return TG_E_INVALID_ARGUMENT;
    case Errc::io_error: return TG_E_IO;
  }
  return TG_E_INTERNAL;
}

template <typename Fn>
tg_status guarded(Fn&& fn) {
  try {
    fn();
    return TG_OK;
  } catch (const Error& err) {
    g_last_error = std::string(errc_name(err.code())) + ": " + err.what();
    return status_of(err.code());
  } catch (const std::exception& ex) {
    g_last_error = ex.what();
    return TG_E_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return TG_E_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

char* dup_rat(const Rat& r) { return dup_string(rat_str(r)); }

std::vector<VertexId> parse_members(const Diagram& d, const char* members) {
  if (!members) fail(Errc::invalid_argument, "member list is null");
  std::string text(members);
  for (auto& ch : text)
    if (ch == ',') ch = ' ';
  std::istringstream is(text);
  std::vector<VertexId> out;
  std::string tok;
  while (is >> tok) {
    auto v = d.find_vertex(tok);
    if (!v) fail(Errc::invalid_argument, "unknown vertex '" + tok + "'");
    out.push_back(*v);
  }
  return out;
}

std::string join_members(const Diagram& d, const std::vector<VertexId>& members) {
  std::string out;
  for (VertexId v : members) {
    if (!out.empty()) out += ' ';
    out += d.vertex(v).name;
  }
  return out;
}

Rat parse_rat_arg(const char* text, const char* what) {
  if (!text) fail(Errc::invalid_argument, std::string(what) + " is null");
  auto r = rat_parse(text);
  if (!r) fail(Errc::invalid_argument, std::string("bad rational for ") + what);
  return *r;
}

void fill_cut(const Diagram& d, const CutResult& cut, tg_cut* out) {
  out->members = dup_string(join_members(d, cut.members));
  out->mu_s = dup_rat(cut.mu_s);
  out->mu_boundary = dup_rat(cut.mu_boundary);
  out->ratio = dup_rat(cut.ratio);
  out->ratio_approx = rat_dbl(cut.ratio);
  out->feasible = cut.feasible ? 1 : 0;
}

FamilyHooks hooks_for(const char* family, long q, long rays) {
  if (!family) fail(Errc::invalid_argument, "family is null");
  const std::string name(family);
  if (name == "ray-blocks") return ray_blocks_family_hooks(q);
  if (name == "cusp") return cusp_family_hooks(q, rays < 1 ? 1 : rays);
  fail(Errc::invalid_argument, "unknown family '" + name + "' (ray-blocks | cusp)");
}

}  // namespace

extern "C" {

const char* tg_version(void) { return "1.0.0"; }

const char* tg_last_error(void) { return g_last_error.c_str(); }

const char* tg_status_name(tg_status status) {
  switch (status) {
    case TG_OK: return "ok";
    case TG_E_PARSE: return "ParseError";
    case TG_E_DANGLING_PARTNER: return "DanglingPartner";
    case TG_E_FIXED_POINT_INVOLUTION: return "FixedPointInvolution";
    case TG_E_NON_POSITIVE_INDEX: return "NonPositiveIndex";
    case TG_E_DISCONNECTED: return "Disconnected";
    case TG_E_CYCLE_INCONSISTENT: return "CycleInconsistent";
    case TG_E_ZERO_INDEG: return "ZeroIndeg";
    case TG_E_CONVERGENCE_FAILURE: return "ConvergenceFailure";
    case TG_E_DEGENERATE_FUNCTION: return "DegenerateFunction";
    case TG_E_NOT_BIPARTITE: return "NotBipartite";
    case TG_E_NOT_REGULAR: return "NotRegular";
    case TG_E_EMPTY_OR_FULL_SET: return "EmptyOrFullSet";
    case TG_E_TOO_LARGE: return "TooLarge";
    case TG_E_CORE_TOO_SMALL: return "CoreTooSmall";
    case TG_E_CORE_NOT_CONNECTED: return "CoreNotConnected";
    case TG_E_RAY_STRUCTURE: return "RayStructure";
    case TG_E_DECAY_VIOLATED: return "DecayViolated";
    case TG_E_NON_INTEGER_INDEX: return "NonIntegerIndex";
    case TG_E_BUDGET_EXCEEDED: return "BudgetExceeded";
    case TG_E_INVALID_ARGUMENT: return "InvalidArgument";
    case TG_E_IO: return "IoError";
    case TG_E_INTERNAL: return "InternalError";
  }
  return "?";
}

void tg_string_free(char* s) { std::free(s); }

tg_status tg_diagram_parse_file(const char* path, tg_diagram** out) {
  return guarded([&] {
    if (!path || !out) fail(Errc::invalid_argument, "null argument");
    *out = new tg_diagram{parse_diag_file(path)};
  });
}

tg_status tg_diagram_parse_text(const char* text, tg_diagram** out) {
  return guarded([&] {
    if (!text || !out) fail(Errc::invalid_argument, "null argument");
    *out = new tg_diagram{parse_diag_string(text)};
  });
}

tg_status tg_diagram_to_text(const tg_diagram* d, char** out) {
  return guarded([&] {
    if (!d || !out) fail(Errc::invalid_argument, "null argument");
    *out = dup_string(to_diag(d->d));
  });
}

tg_status tg_diagram_write_file(const tg_diagram* d, const char* path) {
  return guarded([&] {
    if (!d || !path) fail(Errc::invalid_argument, "null argument");
    write_diag_file(d->d, path);
  });
}

void tg_diagram_free(tg_diagram* d) { delete d; }

size_t tg_diagram_vertex_count(const tg_diagram* d) { return d ? d->d.vertex_count() : 0; }

size_t tg_diagram_edge_pair_count(const tg_diagram* d) {
  return d ? d->d.half_edge_count() / 2 : 0;
}

tg_status tg_diagram_total_volume(const tg_diagram* d, char** rational, double* approx) {
  return guarded([&] {
    if (!d) fail(Errc::invalid_argument, "null diagram");
    const Rat vol = d->d.total_volume();
    if (rational) *rational = dup_rat(vol);
    if (approx) *approx = rat_dbl(vol);
  });
}

tg_status tg_diagram_regularity(const tg_diagram* d, tg_regularity* out) {
  return guarded([&] {
    if (!d || !out) fail(Errc::invalid_argument, "null argument");
    const RegularityReport rep = d->d.regularity();
    out->is_k_regular = rep.is_k_regular ? 1 : 0;
    out->k = rep.k ? dup_rat(*rep.k) : nullptr;
    out->exempted = rep.exempted.size();
    Rat max_indeg = 0, max_ratio = 0;
    for (const auto& deg : rep.indeg)
      if (deg > max_indeg) max_indeg = deg;
    for (std::size_t e = 0; e < d->d.half_edge_count(); ++e) {
      const auto id = static_cast<HalfEdgeId>(e);
      const Rat ratio = d->d.index(d->d.partner(id)) / d->d.index(id);
      if (ratio > max_ratio) max_ratio = ratio;
    }
    out->max_indeg = dup_rat(max_indeg);
    out->max_index_ratio = dup_rat(max_ratio);
  });
}

void tg_regularity_free(tg_regularity* r) {
  if (!r) return;
  std::free(r->k);
  std::free(r->max_indeg);
  std::free(r->max_index_ratio);
  r->k = r->max_indeg = r->max_index_ratio = nullptr;
}

tg_status tg_generate_ray_blocks(long q, long blocks, tg_diagram** out) {
  return guarded([&] {
    if (!out) fail(Errc::invalid_argument, "null argument");
    *out = new tg_diagram{gen_ray_blocks({q, blocks})};
  });
}

tg_status tg_generate_tree_ball(long k0, long k1, long radius, tg_diagram** out) {
  return guarded([&] {
    if (!out) fail(Errc::invalid_argument, "null argument");
    *out = new tg_diagram{gen_tree_ball(k0, k1, radius)};
  });
}

tg_status tg_generate_random(unsigned long long seed, int vertices, int integer_indices,
                             tg_diagram** out) {
  return guarded([&] {
    if (!out) fail(Errc::invalid_argument, "null argument");
    *out = new tg_diagram{random_diagram(seed, vertices, integer_indices != 0)};
  });
}

tg_status tg_generate_cusp(long q, long rays, long ray_length, tg_cusp* out) {
  return guarded([&] {
    if (!out) fail(Errc::invalid_argument, "null argument");
    CuspDiagram cd = gen_cusp(cusp_family(q, rays, ray_length));
    std::string core;
    for (const auto& id : cd.core_ids) {
      if (!core.empty()) core += ' ';
      core += id;
    }
    out->diagram = new tg_diagram{std::move(cd.diagram)};
    out->core = dup_string(core);
    out->c = dup_rat(cd.c);
    out->d = dup_rat(cd.d);
  });
}

void tg_cusp_free(tg_cusp* cusp) {
  if (!cusp) return;
  std::free(cusp->core);
  std::free(cusp->c);
  std::free(cusp->d);
  cusp->core = cusp->c = cusp->d = nullptr;
}

tg_status tg_lambda(const tg_diagram* d, double tol, int force_iterative,
                    unsigned long long seed, tg_spectral* out) {
  return guarded([&] {
    if (!d || !out) fail(Errc::invalid_argument, "null argument");
    LambdaOptions opts;
    if (tol > 0) opts.tol = tol;
    opts.force_iterative = force_iterative != 0;
    if (seed != 0) opts.seed = seed;
    const SpectralReport rep = lambda_bottom(d->d, opts);
    out->lambda = rep.lambda;
    out->iterative = rep.method == LambdaMethod::iterative ? 1 : 0;
    out->residual = rep.residual;
    out->dim = rep.dim;
    out->deflation = rep.deflation;
    out->converged = rep.converged ? 1 : 0;
  });
}

tg_status tg_square_split_check(const tg_diagram* d, double tol, tg_square_split* out) {
  return guarded([&] {
    if (!d || !out) fail(Errc::invalid_argument, "null argument");
    const SquareSplitReport rep = square_split_check(d->d, tol > 0 ? tol : 1e-9);
    out->k0 = dup_rat(rep.k0);
    out->k1 = dup_rat(rep.k1);
    out->even_size = rep.even_size;
    out->odd_size = rep.odd_size;
    out->interior_even = rep.interior_even;
    out->interior_odd = rep.interior_odd;
    out->parity_split_ok = rep.parity_split_ok ? 1 : 0;
    out->max_identity_dev = dup_rat(rep.max_identity_dev);
    out->max_eigen_dev = rep.max_eigen_dev;
    out->pass = rep.pass ? 1 : 0;
  });
}

void tg_square_split_free(tg_square_split* r) {
  if (!r) return;
  std::free(r->k0);
  std::free(r->k1);
  std::free(r->max_identity_dev);
  r->k0 = r->k1 = r->max_identity_dev = nullptr;
}

tg_status tg_boundary_measure(const tg_diagram* d, const char* members, tg_cut* out) {
  return guarded([&] {
    if (!d || !out) fail(Errc::invalid_argument, "null argument");
    fill_cut(d->d, boundary_measure(d->d, parse_members(d->d, members)), out);
  });
}

tg_status tg_cheeger_exact(const tg_diagram* d, tg_cut* out) {
  return guarded([&] {
    if (!d || !out) fail(Errc::invalid_argument, "null argument");
    fill_cut(d->d, cheeger_exact(d->d), out);
  });
}

tg_status tg_cheeger_sweep(const tg_diagram* d, tg_cut* out) {
  return guarded([&] {
    if (!d || !out) fail(Errc::invalid_argument, "null argument");
    fill_cut(d->d, cheeger_sweep(d->d), out);
  });
}

void tg_cut_free(tg_cut* cut) {
  if (!cut) return;
  std::free(cut->members);
  std::free(cut->mu_s);
  std::free(cut->mu_boundary);
  std::free(cut->ratio);
  cut->members = cut->mu_s = cut->mu_boundary = cut->ratio = nullptr;
}

tg_status tg_gap_certificate(const tg_diagram* d, const char* core_members, const char* c,
                             const char* decay, tg_certificate* out) {
  return guarded([&] {
    if (!d || !out) fail(Errc::invalid_argument, "null argument");
    const GapCertificate cert =
        gap_certificate(d->d, parse_members(d->d, core_members),
                        parse_rat_arg(c, "c"), parse_rat_arg(decay, "d"));
    out->tail_bound = dup_rat(cert.tail_bound);
    out->core_bound = cert.core_bound ? dup_rat(*cert.core_bound) : nullptr;
    out->certified = dup_rat(cert.certified);
    out->certified_approx = rat_dbl(cert.certified);
  });
}

void tg_certificate_free(tg_certificate* cert) {
  if (!cert) return;
  std::free(cert->tail_bound);
  std::free(cert->core_bound);
  std::free(cert->certified);
  cert->tail_bound = cert->core_bound = cert->certified = nullptr;
}

tg_status tg_expander_verdict(const char* family, long q, long rays, const long* ladder,
                              size_t ladder_len, const char* eps, tg_verdict* out) {
  return guarded([&] {
    if (!out || !ladder || ladder_len == 0) fail(Errc::invalid_argument, "null argument");
    const FamilyHooks hooks = hooks_for(family, q, rays);
    const std::vector<long> ns(ladder, ladder + ladder_len);

    Rat eps_value;
    if (eps) {
      eps_value = parse_rat_arg(eps, "eps");
    } else {
      // default for certified families: the weakest certificate on the ladder
      if (!hooks.certify)
        fail(Errc::invalid_argument, "eps is required for the " + hooks.name + " family");
      bool first = true;
      for (long n : ns) {
        const Diagram d = hooks.make(n);
        const auto cert = hooks.certify(d, n);
        if (!cert) fail(Errc::invalid_argument, "family produced no certificate");
        if (first || cert->certified < eps_value) eps_value = cert->certified;
        first = false;
      }
    }

    const VerdictRecord rec = expander_verdict(hooks, ns, eps_value, {});
    out->n_points = rec.points.size();
    out->points = static_cast<tg_family_point*>(
        std::calloc(rec.points.size(), sizeof(tg_family_point)));
    for (std::size_t i = 0; i < rec.points.size(); ++i) {
      const FamilyPoint& p = rec.points[i];
      tg_family_point& row = out->points[i];
      row.n = p.n;
      row.dim = p.dim;
      row.h_upper = dup_rat(p.h_upper);
      row.h_upper_approx = rat_dbl(p.h_upper);
      row.h_exact = p.h_exact ? dup_rat(*p.h_exact) : nullptr;
      row.lambda = p.lambda;
      row.certified = p.certified ? dup_rat(*p.certified) : nullptr;
      row.witness = dup_string(p.witness);
      row.max_indeg = dup_rat(p.max_indeg);
      row.max_index_ratio = dup_rat(p.max_index_ratio);
    }
    out->verdict = static_cast<int>(rec.verdict);
    out->verdict_name = verdict_name(rec.verdict);
    out->hypothesis_flag = rec.hypothesis_flag ? 1 : 0;
    out->eps = dup_rat(rec.eps);
  });
}

void tg_verdict_free(tg_verdict* v) {
  if (!v) return;
  for (std::size_t i = 0; i < v->n_points; ++i) {
    std::free(v->points[i].h_upper);
    std::free(v->points[i].h_exact);
    std::free(v->points[i].certified);
    std::free(v->points[i].witness);
    std::free(v->points[i].max_indeg);
    std::free(v->points[i].max_index_ratio);
  }
  std::free(v->points);
  std::free(v->eps);
  v->points = nullptr;
  v->n_points = 0;
  v->eps = nullptr;
}

tg_status tg_hecke_verify(long k0, long k1, long n_max, tg_hecke_report* out) {
  return guarded([&] {
    if (!out) fail(Errc::invalid_argument, "null argument");
    const RecurrenceReport rep = verify_recurrences(k0, k1, n_max);
    out->n_lines = rep.lines.size();
    out->lines =
        static_cast<tg_hecke_line*>(std::calloc(rep.lines.size(), sizeof(tg_hecke_line)));
    for (std::size_t i = 0; i < rep.lines.size(); ++i) {
      std::snprintf(out->lines[i].identity, sizeof(out->lines[i].identity), "%s",
                    rep.lines[i].identity.c_str());
      out->lines[i].n = rep.lines[i].n;
      out->lines[i].max_radius = rep.lines[i].max_radius;
      out->lines[i].ok = rep.lines[i].ok ? 1 : 0;
    }
    out->all_ok = rep.all_ok ? 1 : 0;
  });
}

void tg_hecke_report_free(tg_hecke_report* r) {
  if (!r) return;
  std::free(r->lines);
  r->lines = nullptr;
  r->n_lines = 0;
}

tg_status tg_finite_grouping(const tg_diagram* d, tg_grouping* out) {
  return guarded([&] {
    if (!d || !out) fail(Errc::invalid_argument, "null argument");
    const GraphOfGroups g = finite_grouping(d->d);
    out->scale = dup_rat(g.scale);
    out->covolume = dup_rat(covolume(g));
    std::ostringstream rows;
    rows << "vertex,order\n";
    for (std::size_t v = 0; v < d->d.vertex_count(); ++v)
      rows << d->d.vertex(static_cast<VertexId>(v)).name << "," << g.vertex_order[v].str()
           << "\n";
    out->rows = dup_string(rows.str());
  });
}

void tg_grouping_free(tg_grouping* g) {
  if (!g) return;
  std::free(g->scale);
  std::free(g->covolume);
  std::free(g->rows);
  g->scale = g->covolume = g->rows = nullptr;
}

tg_status tg_cover_unfold(const tg_diagram* d, const char* base_id, long radius,
                          tg_diagram** ball) {
  return guarded([&] {
    if (!d || !ball) fail(Errc::invalid_argument, "null argument");
    VertexId base = d->d.base();
    if (base_id && *base_id) {
      auto v = d->d.find_vertex(base_id);
      if (!v) fail(Errc::invalid_argument, "unknown base vertex '" + std::string(base_id) + "'");
      base = *v;
    }
    *ball = new tg_diagram{universal_cover_ball(d->d, base, radius).ball};
  });
}

tg_status tg_cover_unfold_file(const char* path, const char* base_id, long radius,
                               tg_diagram** ball) {
  return guarded([&] {
    if (!path || !ball) fail(Errc::invalid_argument, "null argument");
    const DiagramSpec spec = parse_diag_spec_file(path);
    const std::string base = base_id ? base_id : "";
    *ball = new tg_diagram{universal_cover_ball(spec, base, radius).ball};
  });
}

}  // extern "C"
