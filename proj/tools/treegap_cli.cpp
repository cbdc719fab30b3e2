// treegap command-line front end. Everything goes through the C API of the
// shared library; exact rationals arrive as "p/q" strings and are printed
// verbatim next to 12-digit decimal renderings.

#include "treegap/treegap.h"

#include "CLI11.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;  // bad input, failed validation, IO
constexpr int kExitAssertion = 3;   // a checked identity came out false

struct CliError {
  int exit_code;
  std::string message;
};

void check(tg_status status) {
  if (status == TG_OK) return;
  throw CliError{kExitValidation,
                 std::string(tg_status_name(status)) + ": " + tg_last_error()};
}

std::string dec12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

std::string rat_cell(const char* rational, double approx) {
  if (!rational) return "";
  return std::string(rational) + "=" + dec12(approx);
}

double rat_approx(const std::string& rational) {
  const auto slash = rational.find('/');
  if (slash == std::string::npos) return std::stod(rational);
  return std::stod(rational.substr(0, slash)) / std::stod(rational.substr(slash + 1));
}

struct DiagramHandle {
  tg_diagram* ptr = nullptr;
  ~DiagramHandle() { tg_diagram_free(ptr); }
};

struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { tg_string_free(ptr); }
};

void parse_file(const std::string& path, DiagramHandle& d) {
  check(tg_diagram_parse_file(path.c_str(), &d.ptr));
}

void write_text_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CliError{kExitValidation, "cannot write '" + path + "'"};
  out << bytes;
}

// ---- subcommand payloads ----------------------------------------------------

struct GenerateArgs {
  std::string family;
  long q = 2;
  long blocks = 1;
  long rays = 1;
  long ray_length = 4;
  long k0 = 3, k1 = 3, radius = 2;
  std::string out;
};

int run_generate(const GenerateArgs& a) {
  DiagramHandle d;
  if (a.family == "ray-blocks") {
    check(tg_generate_ray_blocks(a.q, a.blocks, &d.ptr));
  } else if (a.family == "cusp") {
    tg_cusp cusp{};
    check(tg_generate_cusp(a.q, a.rays, a.ray_length, &cusp));
    d.ptr = cusp.diagram;
    std::printf("core: %s\nc: %s\nd: %s\n", cusp.core, cusp.c, cusp.d);
    tg_cusp_free(&cusp);
  } else if (a.family == "ball") {
    check(tg_generate_tree_ball(a.k0, a.k1, a.radius, &d.ptr));
  } else {
    throw CliError{kExitValidation, "unknown family '" + a.family + "'"};
  }
  check(tg_diagram_write_file(d.ptr, a.out.c_str()));
  std::printf("wrote %s (%zu vertices, %zu edges)\n", a.out.c_str(),
              tg_diagram_vertex_count(d.ptr), tg_diagram_edge_pair_count(d.ptr));
  return kExitOk;
}

int run_validate(const std::string& path) {
  DiagramHandle d;
  parse_file(path, d);
  OwnedString volume;
  double volume_approx = 0;
  check(tg_diagram_total_volume(d.ptr, &volume.ptr, &volume_approx));
  tg_regularity reg{};
  check(tg_diagram_regularity(d.ptr, &reg));
  std::printf("valid: %zu vertices, %zu edges\n", tg_diagram_vertex_count(d.ptr),
              tg_diagram_edge_pair_count(d.ptr));
  std::printf("volume: %s (%s)\n", volume.ptr, dec12(volume_approx).c_str());
  if (reg.is_k_regular)
    std::printf("k-regular: yes, k = %s (%zu boundary vertices exempt)\n", reg.k,
                reg.exempted);
  else
    std::printf("k-regular: no (max indeg %s)\n", reg.max_indeg);
  std::printf("max index ratio: %s\n", reg.max_index_ratio);
  tg_regularity_free(&reg);
  return kExitOk;
}

int run_lambda(const std::string& path, double tol, bool iterative, unsigned long long seed) {
  DiagramHandle d;
  parse_file(path, d);
  tg_spectral rep{};
  check(tg_lambda(d.ptr, tol, iterative ? 1 : 0, seed, &rep));
  std::printf("lambda: %s\n", dec12(rep.lambda).c_str());
  std::printf("method: %s\n", rep.iterative ? "iterative" : "dense-oracle");
  std::printf("dim: %d\nresidual: %s\ndeflation: %s\n", rep.dim,
              dec12(rep.residual).c_str(), dec12(rep.deflation).c_str());
  if (!rep.converged) {
    std::printf("converged: no (budget exhausted; estimate reported)\n");
    return kExitValidation;
  }
  return kExitOk;
}

void print_cut(const tg_cut& cut) {
  std::printf("ratio: %s (%s)\n", cut.ratio, dec12(cut.ratio_approx).c_str());
  std::printf("mu(S): %s\nmu(E(S,S^c)): %s\nfeasible: %s\nS: %s\n", cut.mu_s,
              cut.mu_boundary, cut.feasible ? "yes" : "no", cut.members);
}

int run_cheeger(const std::string& path, bool exact, bool sweep, const std::string& set) {
  DiagramHandle d;
  parse_file(path, d);
  tg_cut cut{};
  if (!set.empty()) {
    check(tg_boundary_measure(d.ptr, set.c_str(), &cut));
  } else if (exact) {
    check(tg_cheeger_exact(d.ptr, &cut));
  } else if (sweep) {
    check(tg_cheeger_sweep(d.ptr, &cut));
  } else if (tg_diagram_vertex_count(d.ptr) <= 22) {
    check(tg_cheeger_exact(d.ptr, &cut));
  } else {
    check(tg_cheeger_sweep(d.ptr, &cut));
  }
  print_cut(cut);
  tg_cut_free(&cut);
  return kExitOk;
}

int run_certify(const std::string& path, const std::string& core, const std::string& c,
                const std::string& d_param) {
  DiagramHandle d;
  parse_file(path, d);
  tg_certificate cert{};
  check(tg_gap_certificate(d.ptr, core.c_str(), c.c_str(), d_param.c_str(), &cert));
  std::printf("tail bound: %s\n", cert.tail_bound);
  std::printf("core bound: %s\n", cert.core_bound ? cert.core_bound : "(core has no edges)");
  std::printf("certified lower bound: %s (%s)\n", cert.certified,
              dec12(cert.certified_approx).c_str());
  tg_certificate_free(&cert);
  return kExitOk;
}

std::string verdict_csv(const tg_verdict& v, const std::string& family, long q) {
  std::ostringstream csv;
  csv << "family,q,N,dim,h_upper,h_exact,lambda,certified_lower\n";
  for (size_t i = 0; i < v.n_points; ++i) {
    const tg_family_point& p = v.points[i];
    csv << family << "," << q << "," << p.n << "," << p.dim << ","
        << rat_cell(p.h_upper, p.h_upper_approx) << ","
        << (p.h_exact ? rat_cell(p.h_exact, rat_approx(p.h_exact)) : "") << ","
        << dec12(p.lambda) << ","
        << (p.certified ? rat_cell(p.certified, rat_approx(p.certified)) : "") << "\n";
  }
  return csv.str();
}

struct VerdictArgs {
  std::string family;
  long q = 2;
  long rays = 1;
  std::vector<long> ladder;
  std::string eps;
  std::string out_csv;
};

int run_verdict(const VerdictArgs& a) {
  tg_verdict v{};
  check(tg_expander_verdict(a.family.c_str(), a.q, a.rays, a.ladder.data(), a.ladder.size(),
                            a.eps.empty() ? nullptr : a.eps.c_str(), &v));
  std::printf("verdict: %s (eps = %s)\n", v.verdict_name, v.eps);
  std::printf("note: ladder evidence only, not a statement about the untruncated diagram\n");
  if (v.hypothesis_flag)
    std::printf("warning: boundedness hypothesis quantities grew along the ladder\n");
  for (size_t i = 0; i < v.n_points; ++i) {
    const tg_family_point& p = v.points[i];
    std::printf("N=%ld dim=%d h_upper=%s lambda=%s%s%s witness=%s\n", p.n, p.dim, p.h_upper,
                dec12(p.lambda).c_str(), p.certified ? " certified=" : "",
                p.certified ? p.certified : "", p.witness);
  }
  if (!a.out_csv.empty()) write_text_file(a.out_csv, verdict_csv(v, a.family, a.q));
  tg_verdict_free(&v);
  return kExitOk;
}

int run_hecke(long k0, long k1, long n_max, const std::string& out_csv) {
  tg_hecke_report rep{};
  check(tg_hecke_verify(k0, k1, n_max, &rep));
  std::ostringstream csv;
  csv << "identity,n,max_radius,status\n";
  for (size_t i = 0; i < rep.n_lines; ++i) {
    const tg_hecke_line& line = rep.lines[i];
    std::printf("%-10s n=%ld radius<=%ld %s\n", line.identity, line.n, line.max_radius,
                line.ok ? "ok" : "FAILED");
    csv << line.identity << "," << line.n << "," << line.max_radius << ","
        << (line.ok ? "ok" : "failed") << "\n";
  }
  const bool all_ok = rep.all_ok != 0;
  tg_hecke_report_free(&rep);
  if (!out_csv.empty()) write_text_file(out_csv, csv.str());
  if (!all_ok)
    throw CliError{kExitAssertion, "a convolution recurrence identity failed"};
  std::printf("all identities hold exactly\n");
  return kExitOk;
}

int run_cover(const std::string& path, const std::string& base, long radius,
              const std::string& out) {
  tg_diagram* ball = nullptr;
  check(tg_cover_unfold_file(path.c_str(), base.empty() ? nullptr : base.c_str(), radius,
                             &ball));
  DiagramHandle owned;
  owned.ptr = ball;
  check(tg_diagram_write_file(ball, out.c_str()));
  std::printf("wrote %s (%zu vertices)\n", out.c_str(), tg_diagram_vertex_count(ball));
  return kExitOk;
}

int run_grouping(const std::string& path, const std::string& out_csv) {
  DiagramHandle d;
  parse_file(path, d);
  tg_grouping g{};
  check(tg_finite_grouping(d.ptr, &g));
  std::printf("scale: %s\ncovolume: %s\n", g.scale, g.covolume);
  if (!out_csv.empty())
    write_text_file(out_csv, g.rows);
  else
    std::fputs(g.rows, stdout);
  tg_grouping_free(&g);
  return kExitOk;
}

// ---- report: the two evidence tables plus an SVG ladder plot ----------------

struct Series {
  std::string label;
  std::vector<std::pair<long, double>> points;
};

std::string render_svg(const std::vector<Series>& series) {
  const double width = 640, height = 400;
  const double ml = 70, mr = 160, mt = 30, mb = 45;
  long n_min = 1L << 60, n_max = 0;
  double v_min = 1e300, v_max = 0;
  for (const auto& s : series)
    for (const auto& [n, v] : s.points) {
      n_min = std::min(n_min, n);
      n_max = std::max(n_max, n);
      if (v > 0) {
        v_min = std::min(v_min, v);
        v_max = std::max(v_max, v);
      }
    }
  if (n_max == n_min) n_max = n_min + 1;
  const double log_lo = std::floor(std::log10(v_min));
  const double log_hi = std::ceil(std::log10(v_max));
  const double span = std::max(log_hi - log_lo, 1.0);

  auto fx = [&](long n) {
    return ml + (width - ml - mr) * (double(n - n_min) / double(n_max - n_min));
  };
  auto fy = [&](double v) {
    const double t = (std::log10(std::max(v, 1e-300)) - log_lo) / span;
    return height - mb - (height - mt - mb) * t;
  };
  auto f2 = [](double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", x);
    return std::string(buf);
  };

  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                 "#ff7f0e", "#8c564b"};
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"400\" "
         "viewBox=\"0 0 640 400\">\n";
  svg << "<rect width=\"640\" height=\"400\" fill=\"white\"/>\n";
  svg << "<line x1=\"" << f2(ml) << "\" y1=\"" << f2(height - mb) << "\" x2=\""
      << f2(width - mr) << "\" y2=\"" << f2(height - mb)
      << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  svg << "<line x1=\"" << f2(ml) << "\" y1=\"" << f2(mt) << "\" x2=\"" << f2(ml)
      << "\" y2=\"" << f2(height - mb) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  svg << "<text x=\"" << f2((ml + width - mr) / 2) << "\" y=\"" << f2(height - 10)
      << "\" font-size=\"13\" text-anchor=\"middle\">truncation N</text>\n";
  svg << "<text x=\"18\" y=\"" << f2((mt + height - mb) / 2)
      << "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
      << f2((mt + height - mb) / 2) << ")\">value (log scale)</text>\n";
  for (double e = log_lo; e <= log_hi + 0.5; e += 1.0) {
    const double y = fy(std::pow(10.0, e));
    svg << "<line x1=\"" << f2(ml) << "\" y1=\"" << f2(y) << "\" x2=\"" << f2(width - mr)
        << "\" y2=\"" << f2(y) << "\" stroke=\"#dddddd\" stroke-width=\"0.5\"/>\n";
    svg << "<text x=\"" << f2(ml - 6) << "\" y=\"" << f2(y + 4)
        << "\" font-size=\"11\" text-anchor=\"end\">1e" << static_cast<long>(e)
        << "</text>\n";
  }
  for (long n = n_min; n <= n_max; ++n) {
    svg << "<text x=\"" << f2(fx(n)) << "\" y=\"" << f2(height - mb + 16)
        << "\" font-size=\"11\" text-anchor=\"middle\">" << n << "</text>\n";
  }
  for (std::size_t si = 0; si < series.size(); ++si) {
    const auto& s = series[si];
    svg << "<polyline fill=\"none\" stroke=\"" << colors[si % 6]
        << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& [n, v] : s.points) svg << f2(fx(n)) << "," << f2(fy(v)) << " ";
    svg << "\"/>\n";
    for (const auto& [n, v] : s.points)
      svg << "<circle cx=\"" << f2(fx(n)) << "\" cy=\"" << f2(fy(v))
          << "\" r=\"2.5\" fill=\"" << colors[si % 6] << "\"/>\n";
    svg << "<text x=\"" << f2(width - mr + 10) << "\" y=\"" << f2(mt + 16.0 * si + 10)
        << "\" font-size=\"12\" fill=\"" << colors[si % 6] << "\">" << s.label
        << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

struct ReportArgs {
  long q = 2;
  std::vector<long> ladder{5, 10, 20};
  long rays = 1;
  std::string out_dir = ".";
};

int run_report(const ReportArgs& a) {
  if (a.ladder.size() < 2)
    throw CliError{kExitValidation, "report needs at least two truncation sizes"};
  std::filesystem::create_directories(a.out_dir);

  // family with vanishing cuts: verdict at eps = the penultimate h_upper,
  // which a genuinely decreasing ladder must undercut at its deepest point
  tg_verdict probe{};
  check(tg_expander_verdict("ray-blocks", a.q, 0, a.ladder.data(), a.ladder.size(), "1",
                            &probe));
  std::string eps = probe.points[probe.n_points - 2].h_upper;
  tg_verdict_free(&probe);
  tg_verdict rb{};
  check(tg_expander_verdict("ray-blocks", a.q, 0, a.ladder.data(), a.ladder.size(),
                            eps.c_str(), &rb));

  tg_verdict cusp{};
  check(tg_expander_verdict("cusp", a.q, a.rays, a.ladder.data(), a.ladder.size(), nullptr,
                            &cusp));

  bool identities_ok = true;
  // the block cut pins h_upper at or below (q+1)/(2N+1)
  for (size_t i = 0; i < rb.n_points; ++i) {
    const double bound =
        double(a.q + 1) / double(2 * rb.points[i].n + 1) + 1e-12;
    identities_ok = identities_ok && rb.points[i].h_upper_approx <= bound;
    if (i > 0) identities_ok = identities_ok && rb.points[i].lambda < rb.points[i - 1].lambda;
  }
  identities_ok = identities_ok && std::string(rb.verdict_name) == "no-expansion-witness";
  identities_ok = identities_ok && std::string(cusp.verdict_name) == "expansion-consistent";
  for (size_t i = 0; i < cusp.n_points; ++i) {
    identities_ok = identities_ok && cusp.points[i].certified != nullptr;
    if (cusp.points[i].h_exact)
      identities_ok = identities_ok &&
                      rat_approx(cusp.points[i].h_exact) >=
                          rat_approx(cusp.points[i].certified) - 1e-12;
  }

  write_text_file(a.out_dir + "/ray_blocks.csv", verdict_csv(rb, "ray-blocks", a.q));
  write_text_file(a.out_dir + "/cusp.csv", verdict_csv(cusp, "cusp", a.q));

  std::vector<Series> series(4);
  series[0].label = "ray-blocks h";
  series[1].label = "ray-blocks lambda";
  series[2].label = "cusp h";
  series[3].label = "cusp certified";
  for (size_t i = 0; i < rb.n_points; ++i) {
    series[0].points.emplace_back(rb.points[i].n, rb.points[i].h_upper_approx);
    series[1].points.emplace_back(rb.points[i].n, rb.points[i].lambda);
  }
  for (size_t i = 0; i < cusp.n_points; ++i) {
    series[2].points.emplace_back(cusp.points[i].n, cusp.points[i].h_upper_approx);
    series[3].points.emplace_back(cusp.points[i].n, rat_approx(cusp.points[i].certified));
  }
  write_text_file(a.out_dir + "/report.svg", render_svg(series));

  std::printf("ray-blocks (q=%ld): %s; h ladder", a.q, rb.verdict_name);
  for (size_t i = 0; i < rb.n_points; ++i) std::printf(" %s", rb.points[i].h_upper);
  std::printf("\ncusp (q=%ld): %s; certified floor %s\n", a.q, cusp.verdict_name,
              cusp.points[0].certified);
  std::printf("wrote %s/ray_blocks.csv, cusp.csv, report.svg\n",
              a.out_dir.c_str());

  tg_verdict_free(&rb);
  tg_verdict_free(&cusp);
  if (!identities_ok)
    throw CliError{kExitAssertion, "identity assertions failed in the report"};
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral gaps and isoperimetric constants of edge-indexed tree diagrams"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tg_version()));

  GenerateArgs gen;
  auto* cmd_gen = app.add_subcommand("generate", "emit a DIAG v1 file for a builtin family");
  cmd_gen->add_option("--family", gen.family, "ray-blocks | cusp | ball")->required();
  cmd_gen->add_option("--q", gen.q, "branching parameter (k = q+1)");
  cmd_gen->add_option("--blocks", gen.blocks, "ray-blocks: number of blocks");
  cmd_gen->add_option("--rays", gen.rays, "cusp: number of rays");
  cmd_gen->add_option("--ray-length", gen.ray_length, "cusp: truncated ray length");
  cmd_gen->add_option("--k0", gen.k0, "ball: even-class degree");
  cmd_gen->add_option("--k1", gen.k1, "ball: odd-class degree");
  cmd_gen->add_option("--radius", gen.radius, "ball: radius");
  cmd_gen->add_option("--out", gen.out, "output path")->required();

  std::string in_path, cut_set, core, c_param, d_param, eps, out_path, base;
  double tol = 1e-10;
  bool flag_iter = false, flag_exact = false, flag_sweep = false;
  long k0 = 3, k1 = 3, nmax = 3, radius = 4;
  unsigned long long seed = 0;

  auto* cmd_val = app.add_subcommand("validate", "parse and validate a DIAG v1 file");
  cmd_val->add_option("file", in_path)->required();

  auto* cmd_lam = app.add_subcommand("lambda", "bottom of the nonzero Laplacian spectrum");
  cmd_lam->add_option("file", in_path)->required();
  cmd_lam->add_option("--tol", tol, "residual tolerance");
  cmd_lam->add_flag("--iterative", flag_iter, "force the iterative eigensolver");
  cmd_lam->add_option("--seed", seed, "iterative start vector seed (0 = default)");

  auto* cmd_ch = app.add_subcommand("cheeger", "isoperimetric cut search");
  cmd_ch->add_option("file", in_path)->required();
  cmd_ch->add_flag("--exact", flag_exact, "exhaustive enumeration (<= 22 vertices)");
  cmd_ch->add_flag("--sweep", flag_sweep, "eigenvector sweep cut");
  cmd_ch->add_option("--set", cut_set, "score this vertex set instead of searching");

  auto* cmd_cert = app.add_subcommand("certify-gap", "two-case lower-bound certificate");
  cmd_cert->add_option("file", in_path)->required();
  cmd_cert->add_option("--core", core, "space/comma-joined core vertex ids")->required();
  cmd_cert->add_option("--c", c_param, "first-edge strength, rational")->required();
  cmd_cert->add_option("--d", d_param, "ray decay, rational")->required();

  VerdictArgs verdict;
  auto* cmd_ver = app.add_subcommand("verdict", "expander verdict over a truncation ladder");
  cmd_ver->add_option("--family", verdict.family, "ray-blocks | cusp")->required();
  cmd_ver->add_option("--q", verdict.q, "branching parameter");
  cmd_ver->add_option("--rays", verdict.rays, "cusp: number of rays");
  cmd_ver->add_option("--N", verdict.ladder, "truncation ladder, strictly increasing")
      ->required()
      ->delimiter(',');
  cmd_ver->add_option("--eps", verdict.eps, "expansion threshold, rational");
  cmd_ver->add_option("--out", verdict.out_csv, "write the ladder as CSV");

  auto* cmd_hk = app.add_subcommand("hecke-verify", "sphere convolution recurrences");
  cmd_hk->add_option("--k0", k0)->required();
  cmd_hk->add_option("--k1", k1)->required();
  cmd_hk->add_option("--nmax", nmax);
  cmd_hk->add_option("--out", out_path, "write the report as CSV");

  auto* cmd_cov = app.add_subcommand("cover", "unfold the universal cover ball");
  cmd_cov->add_option("file", in_path)->required();
  cmd_cov->add_option("--base", base, "base vertex (default: file base)");
  cmd_cov->add_option("--radius", radius)->required();
  cmd_cov->add_option("--out", out_path, "output DIAG v1 path")->required();

  auto* cmd_grp = app.add_subcommand("grouping", "minimal finite grouping and covolume");
  cmd_grp->add_option("file", in_path)->required();
  cmd_grp->add_option("--out", out_path, "write vertex orders as CSV");

  ReportArgs report;
  auto* cmd_rep = app.add_subcommand("report", "evidence tables for both built-in families");
  cmd_rep->add_option("--q", report.q, "branching parameter");
  cmd_rep->add_option("--N", report.ladder, "truncation ladder")->delimiter(',');
  cmd_rep->add_option("--rays", report.rays, "cusp rays");
  cmd_rep->add_option("--out-dir", report.out_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (cmd_gen->parsed()) return run_generate(gen);
    if (cmd_val->parsed()) return run_validate(in_path);
    if (cmd_lam->parsed()) return run_lambda(in_path, tol, flag_iter, seed);
    if (cmd_ch->parsed()) return run_cheeger(in_path, flag_exact, flag_sweep, cut_set);
    if (cmd_cert->parsed()) return run_certify(in_path, core, c_param, d_param);
    if (cmd_ver->parsed()) return run_verdict(verdict);
    if (cmd_hk->parsed()) return run_hecke(k0, k1, nmax, out_path);
    if (cmd_cov->parsed()) return run_cover(in_path, base, radius, out_path);
    if (cmd_grp->parsed()) return run_grouping(in_path, out_path);
    if (cmd_rep->parsed()) return run_report(report);
  } catch (const CliError& e) {
    std::fprintf(stderr, "error: %s\n", e.message.c_str());
    return e.exit_code;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitValidation;
  }
  return kExitValidation;
}
