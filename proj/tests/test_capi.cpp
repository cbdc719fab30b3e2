// Exercises the extern-C surface of the shared library exactly as an
// embedder would: opaque handles, status codes, strings across the boundary.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "treegap/treegap.h"

#include <cstdio>
#include <fstream>
#include <string>

namespace {

struct Handle {
  tg_diagram* ptr = nullptr;
  ~Handle() { tg_diagram_free(ptr); }
};

std::string tmp_path(const char* name) {
  return std::string("capi_") + name + ".diag";
}

}  // namespace

TEST_SUITE("capi") {

TEST_CASE("version and status names") {
  CHECK(std::string(tg_version()) == "1.0.0");
  CHECK(std::string(tg_status_name(TG_OK)) == "ok");
  CHECK(std::string(tg_status_name(TG_E_CYCLE_INCONSISTENT)) == "CycleInconsistent");
}

TEST_CASE("generate, serialize, parse round-trip") {
  Handle d;
  REQUIRE(tg_generate_ray_blocks(2, 3, &d.ptr) == TG_OK);
  CHECK(tg_diagram_vertex_count(d.ptr) == 23);

  char* text = nullptr;
  REQUIRE(tg_diagram_to_text(d.ptr, &text) == TG_OK);
  Handle back;
  REQUIRE(tg_diagram_parse_text(text, &back.ptr) == TG_OK);
  char* text2 = nullptr;
  REQUIRE(tg_diagram_to_text(back.ptr, &text2) == TG_OK);
  CHECK(std::string(text) == text2);
  tg_string_free(text);
  tg_string_free(text2);

  char* volume = nullptr;
  double approx = 0;
  REQUIRE(tg_diagram_total_volume(d.ptr, &volume, &approx) == TG_OK);
  CHECK(volume == std::string("277/48"));  // 1/3 + 29/16 on the ray + 29/8 in blocks
  CHECK(approx == doctest::Approx(277.0 / 48).epsilon(1e-12));
  tg_string_free(volume);
}

TEST_CASE("file io and parse errors") {
  const std::string path = tmp_path("roundtrip");
  Handle d;
  REQUIRE(tg_generate_tree_ball(3, 4, 2, &d.ptr) == TG_OK);
  REQUIRE(tg_diagram_write_file(d.ptr, path.c_str()) == TG_OK);
  Handle back;
  CHECK(tg_diagram_parse_file(path.c_str(), &back.ptr) == TG_OK);
  CHECK(tg_diagram_vertex_count(back.ptr) == 13);
  std::remove(path.c_str());

  Handle bad;
  CHECK(tg_diagram_parse_text("diag v1\nvertex a\nfrobnicate\nbase a 1\n", &bad.ptr) ==
        TG_E_PARSE);
  CHECK(std::string(tg_last_error()).find("unknown directive") != std::string::npos);
  CHECK(tg_diagram_parse_file("does-not-exist.diag", &bad.ptr) == TG_E_IO);
}

TEST_CASE("validation failures carry their code") {
  Handle bad;
  const char* text =
      "diag v1\nvertex a\nvertex b\nvertex c\n"
      "edge e0 a b 2 1\nedge e1 b c 1 1\nedge e2 c a 1 1\nbase a 1\n";
  CHECK(tg_diagram_parse_text(text, &bad.ptr) == TG_E_CYCLE_INCONSISTENT);
}

TEST_CASE("regularity report") {
  Handle d;
  REQUIRE(tg_generate_ray_blocks(3, 2, &d.ptr) == TG_OK);
  tg_regularity reg{};
  REQUIRE(tg_diagram_regularity(d.ptr, &reg) == TG_OK);
  CHECK(reg.is_k_regular == 1);
  CHECK(reg.k == std::string("4"));
  CHECK(reg.exempted == 1);
  CHECK(reg.max_index_ratio == std::string("3"));
  tg_regularity_free(&reg);
}

TEST_CASE("lambda through the C surface") {
  Handle d;
  REQUIRE(tg_generate_ray_blocks(2, 5, &d.ptr) == TG_OK);
  tg_spectral dense{};
  REQUIRE(tg_lambda(d.ptr, 1e-10, 0, 0, &dense) == TG_OK);
  CHECK(dense.iterative == 0);
  CHECK(dense.converged == 1);
  CHECK(dense.dim == 47);
  tg_spectral iter{};
  REQUIRE(tg_lambda(d.ptr, 1e-11, 1, 7, &iter) == TG_OK);
  CHECK(iter.iterative == 1);
  CHECK(std::abs(iter.lambda - dense.lambda) < 1e-8);
}

TEST_CASE("cuts through the C surface") {
  Handle d;
  REQUIRE(tg_generate_ray_blocks(2, 2, &d.ptr) == TG_OK);
  tg_cut block{};
  REQUIRE(tg_boundary_measure(d.ptr, "b2_1,b2_2,b2_3,b2_4,b2_5", &block) == TG_OK);
  CHECK(block.ratio == std::string("3/5"));
  CHECK(block.feasible == 1);
  tg_cut_free(&block);

  tg_cut exact{}, sweep{};
  REQUIRE(tg_cheeger_exact(d.ptr, &exact) == TG_OK);
  REQUIRE(tg_cheeger_sweep(d.ptr, &sweep) == TG_OK);
  CHECK(exact.ratio == std::string("2/13"));
  CHECK(sweep.ratio_approx >= exact.ratio_approx - 1e-15);
  tg_cut_free(&exact);
  tg_cut_free(&sweep);

  tg_cut bad{};
  CHECK(tg_boundary_measure(d.ptr, "nope", &bad) == TG_E_INVALID_ARGUMENT);
}

TEST_CASE("cusp generation and certificate") {
  tg_cusp cusp{};
  REQUIRE(tg_generate_cusp(2, 1, 5, &cusp) == TG_OK);
  Handle d;
  d.ptr = cusp.diagram;
  CHECK(cusp.core == std::string("c0 c1 c2"));
  CHECK(cusp.c == std::string("2"));

  tg_certificate cert{};
  REQUIRE(tg_gap_certificate(d.ptr, cusp.core, cusp.c, cusp.d, &cert) == TG_OK);
  CHECK(cert.tail_bound == std::string("1"));
  REQUIRE(cert.core_bound != nullptr);
  CHECK(cert.core_bound == std::string("32/127"));
  CHECK(cert.certified == std::string("32/127"));
  tg_certificate_free(&cert);

  tg_certificate bad{};
  CHECK(tg_gap_certificate(d.ptr, "c0", "2", "2", &bad) == TG_E_CORE_TOO_SMALL);
  CHECK(tg_gap_certificate(d.ptr, cusp.core, "2", "3", &bad) == TG_E_DECAY_VIOLATED);
  tg_cusp_free(&cusp);
}

TEST_CASE("square split through the C surface") {
  Handle d;
  REQUIRE(tg_generate_ray_blocks(2, 4, &d.ptr) == TG_OK);
  tg_square_split rep{};
  REQUIRE(tg_square_split_check(d.ptr, 1e-9, &rep) == TG_OK);
  CHECK(rep.pass == 1);
  CHECK(rep.max_identity_dev == std::string("0"));
  CHECK(rep.max_eigen_dev < 1e-9);
  tg_square_split_free(&rep);
}

TEST_CASE("verdicts through the C surface") {
  const long ladder[] = {3, 6, 12};
  tg_verdict rb{};
  REQUIRE(tg_expander_verdict("ray-blocks", 2, 0, ladder, 3, "1/6", &rb) == TG_OK);
  CHECK(rb.verdict == 0);
  CHECK(std::string(rb.verdict_name) == "no-expansion-witness");
  REQUIRE(rb.n_points == 3);
  CHECK(rb.points[0].h_exact == nullptr);  // 23 vertices, above the cutoff
  CHECK(rb.points[0].max_indeg == std::string("3"));
  tg_verdict_free(&rb);

  const long cusp_ladder[] = {2, 4, 6};
  tg_verdict cusp{};
  REQUIRE(tg_expander_verdict("cusp", 2, 1, cusp_ladder, 3, nullptr, &cusp) == TG_OK);
  CHECK(std::string(cusp.verdict_name) == "expansion-consistent");
  for (size_t i = 0; i < cusp.n_points; ++i) CHECK(cusp.points[i].certified != nullptr);
  tg_verdict_free(&cusp);

  tg_verdict bad{};
  CHECK(tg_expander_verdict("nope", 2, 0, ladder, 3, "1", &bad) == TG_E_INVALID_ARGUMENT);
  CHECK(tg_expander_verdict("ray-blocks", 2, 0, ladder, 3, nullptr, &bad) ==
        TG_E_INVALID_ARGUMENT);  // eps required without a certificate
}

TEST_CASE("hecke verification through the C surface") {
  tg_hecke_report rep{};
  REQUIRE(tg_hecke_verify(3, 4, 3, &rep) == TG_OK);
  CHECK(rep.all_ok == 1);
  REQUIRE(rep.n_lines == 3);
  CHECK(rep.lines[0].identity == std::string("delta4"));
  CHECK(rep.lines[2].max_radius == 8);
  tg_hecke_report_free(&rep);
}

TEST_CASE("grouping through the C surface") {
  Handle d;
  REQUIRE(tg_generate_ray_blocks(2, 1, &d.ptr) == TG_OK);
  tg_grouping g{};
  REQUIRE(tg_finite_grouping(d.ptr, &g) == TG_OK);
  CHECK(g.scale == std::string("1"));
  CHECK(std::string(g.rows).find("x0,3") != std::string::npos);
  tg_grouping_free(&g);
}

TEST_CASE("cover unfolding, including measureless graphs from files") {
  Handle d;
  REQUIRE(tg_generate_ray_blocks(2, 3, &d.ptr) == TG_OK);
  tg_diagram* ball = nullptr;
  REQUIRE(tg_cover_unfold(d.ptr, "x0", 4, &ball) == TG_OK);
  Handle owned;
  owned.ptr = ball;
  CHECK(tg_diagram_vertex_count(ball) == 46);

  // the (1,2) loop bouquet has no consistent measure: parsing rejects it but
  // the file unfolder accepts it
  const std::string path = tmp_path("bouquet");
  std::ofstream(path) << "diag v1\nvertex v\nedge loop v v 1 2\nbase v 1\n";
  Handle rejected;
  CHECK(tg_diagram_parse_file(path.c_str(), &rejected.ptr) == TG_E_CYCLE_INCONSISTENT);
  tg_diagram* bouquet_ball = nullptr;
  REQUIRE(tg_cover_unfold_file(path.c_str(), "v", 4, &bouquet_ball) == TG_OK);
  Handle owned2;
  owned2.ptr = bouquet_ball;
  CHECK(tg_diagram_vertex_count(bouquet_ball) == 46);
  std::remove(path.c_str());
}

}  // TEST_SUITE
