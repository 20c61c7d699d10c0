#include <doctest.h>

#include "corita/json_io.hpp"

using namespace corita;

namespace {
const Field QF = Field::rationals();
}

TEST_CASE("scalar and matrix serialization") {
  Mat m(QF, 2, 2);
  m.set(0, 0, Rat(3));
  m.set(0, 1, Rat(-2, 5));
  Json j = mat_to_json_entries(m);
  CHECK(j["entries"][0] == "3");
  CHECK(j["entries"][1] == "-2/5");
  Mat back = mat_from_json(QF, j);
  CHECK(back == m);

  Field f5 = Field::prime(5);
  Mat p(f5, 1, 2);
  p.set(0, 0, Rat(7));  // canonicalizes to 2
  Json jp = mat_to_json_entries(p);
  CHECK(jp["entries"][0] == 2);
  CHECK(mat_from_json(f5, jp) == p);

  CHECK_THROWS_AS(mat_from_json(QF, Json{{"rows", 2}, {"cols", 2}, {"entries", Json::array({1})}}),
                  input_error);
}

TEST_CASE("algebra round trip") {
  Algebra a = matrix_algebra(QF, 2);
  Json j = algebra_to_json(a);
  Algebra back = algebra_from_json(j);
  CHECK(back == a);

  Algebra nil = nilpotent_line(QF);
  CHECK(algebra_from_json(algebra_to_json(nil)) == nil);
}

TEST_CASE("workspace with bare algebra document") {
  Json doc = algebra_to_json(dual_numbers(QF));
  Workspace ws = Workspace::from_json(doc, "algebra");
  AlgebraPtr a = ws.algebra("main");
  CHECK(a->dim() == 2);
  CHECK(validate(*a).passed());
}

TEST_CASE("workspace with named refs") {
  Json doc;
  doc["algebras"]["kk"] = algebra_to_json(product_field_algebra(QF, 2));
  Json bm;
  bm["right"] = "kk";
  bm["dim"] = 2;
  bm["right_action"] = Json::array();
  Mat e1(QF, 2, 2);
  e1.set(0, 0, Rat(1));
  Mat e2(QF, 2, 2);
  e2.set(1, 1, Rat(1));
  bm["right_action"].push_back(mat_to_json_entries(e1));
  bm["right_action"].push_back(mat_to_json_entries(e2));
  doc["bimodules"]["m"] = bm;
  Workspace ws = Workspace::from_json(doc, "bimodule");
  Bimodule m = ws.bimodule("m");
  CHECK(validate_module(m).passed());
  CHECK(module_firmness(m, ws.algebra("kk")).is_firm);
}

TEST_CASE("context and coring round trips through JSON") {
  MoritaContext ctx = matrix_context_example();
  Json j = context_to_json(ctx);
  Workspace ws = Workspace::from_json(j, "context");
  MoritaContext back = ws.context("main");
  CHECK(validate_context(back).passed());
  CHECK(back.P.dim() == 2);
  CHECK(back.wt.form == ctx.wt.form);

  SweedlerData sw = sweedler_kxk_example();
  Json jc = coring_to_json(sw.coring);
  Workspace wc = Workspace::from_json(jc, "coring");
  CoringPtr c = wc.coring("main");
  CHECK(validate_coring(*c).passed());
  CHECK(c->dim() == 4);
  // the coproduct refers to the canonical carrier, which the loader rebuilds
  CHECK(c->delta == sw.coring.delta);

  auto cg = std::make_shared<Coring>(sw.coring);
  Comodule areg = sweedler_regular_comodule(cg, sw.coring.A, sw.carrier);
  Json jm = comodule_to_json(areg);
  Workspace wm = Workspace::from_json(jm, "comodule");
  Comodule m = wm.comodule("main");
  CHECK(validate_comodule(m).passed());
}

TEST_CASE("schema violations raise input_error") {
  Json bad;
  bad["field"] = Json{{"kind", "rationals"}, {"characteristic", 0}};
  bad["dim"] = 2;
  bad["mult"] = Json::array();  // wrong length
  CHECK_THROWS_AS(algebra_from_json(bad), input_error);

  CHECK_THROWS_AS(Field::prime(9), input_error);
  CHECK_THROWS_AS(field_from_json(Json{{"kind", "complex"}}), input_error);
}

TEST_CASE("report JSON is deterministic") {
  Report a = run_example("triangular-core");
  Report b = run_example("triangular-core");
  CHECK(a.to_json().dump() == b.to_json().dump());
}
