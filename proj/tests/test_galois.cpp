#include <doctest.h>

#include "corita/examples.hpp"

using namespace corita;

namespace {
const Field Q = Field::rationals();

std::vector<Bimodule> k_catalog(const AlgebraPtr& one_dim, std::size_t up_to) {
  std::vector<Bimodule> cat;
  for (std::size_t n = 1; n <= up_to; ++n)
    cat.push_back(right_module(one_dim, n, {Mat::identity(Q, n)}, "k^" + std::to_string(n)));
  return cat;
}
}  // namespace

TEST_CASE("context_a_mod") {
  // Σ = A (free of rank 1): strict context, S̄ = A
  auto kk = std::make_shared<Algebra>(product_field_algebra(Q, 2));
  AModContext am = context_a_mod(forget_left(regular_bimodule(kk)));
  CHECK(validate_context(am.ctx).passed());
  CHECK(am.s->dim() == 2);
  CHECK(am.s_bar.dim() == 2);

  // Σ = k² over k: S̄ = M_2 (dimension 4)
  auto k = std::make_shared<Algebra>(base_field_algebra(Q));
  Bimodule k2 = right_module(k, 2, {Mat::identity(Q, 2)}, "k2");
  AModContext am2 = context_a_mod(k2);
  CHECK(validate_context(am2.ctx).passed());
  CHECK(am2.s->dim() == 4);
  CHECK(am2.s_bar.dim() == 4);

  // Σ = 0: zero context
  Bimodule zero = right_module(k, 0, {Mat(Q, 0, 0)}, "0");
  AModContext am0 = context_a_mod(zero);
  CHECK(am0.s->dim() == 0);
}

TEST_CASE("construct_r on the trivial coring") {
  auto kk = std::make_shared<Algebra>(product_field_algebra(Q, 2));
  auto cg = std::make_shared<Coring>(trivial_coring(kk));
  Comodule reg = regular_comodule(cg);
  GaloisDatum d = construct_r(reg);
  CHECK(d.report.passed());
  CHECK(d.r_alg->dim() == 2);  // R ≅ A
  CHECK(firmness(*d.r_alg).is_firm);
}

TEST_CASE("construct_r on the Hopf Z/2 coring gives R = k") {
  HopfExample ex = hopf_example(2);
  Comodule h = regular_hopf_module(ex);
  GaloisDatum d = construct_r(h);
  CHECK(d.report.passed());
  CHECK(d.r_alg->dim() == 1);
}

TEST_CASE("construct_r zero datum") {
  // a comodule with trivial endomorphism overlap: Σ = 0
  auto kk = std::make_shared<Algebra>(product_field_algebra(Q, 2));
  auto cg = std::make_shared<Coring>(trivial_coring(kk));
  Bimodule zero = right_module(kk, 0, std::vector<Mat>(2, Mat(Q, 0, 0)), "0");
  Comodule z = make_comodule_flat(cg, zero, Mat(Q, 0, 0));
  GaloisDatum d = construct_r(z);
  CHECK(d.zero_datum);
  ComatrixData cm = comatrix(d);
  CHECK(rank(cm.can) == 0);  // can not surjective onto a 2-dim C
  GaloisChecks gc = galois_checks(cm, {}, {});
  CHECK(!gc.can_iso);
}

TEST_CASE("comatrix on the separable bimodule example: can is the identity") {
  SeparableBimoduleExample ex = separable_bimodule_example(2);
  CHECK(ex.datum.report.passed());
  CHECK(ex.comatrix_data.report.passed());
  CHECK(ex.comatrix_data.can.is_identity());
  CHECK(ex.witness.coseparable);
}

TEST_CASE("comatrix + galois_checks on Hopf Z/2") {
  HopfExample ex = hopf_example(2);
  Comodule h = regular_hopf_module(ex);
  GaloisDatum d = construct_r(h);
  ComatrixData cm = comatrix(d);
  CHECK(cm.report.passed());
  CHECK(rank(cm.can) == 4);
  CHECK(is_iso(LinMap(cm.carrier.space, ex.data.coring->C.space, cm.can)));

  std::vector<Comodule> ccat = {h, free_hopf_module(ex, 2), regular_comodule(ex.data.coring),
                                free_hopf_module(ex, 3)};
  std::vector<Bimodule> rcat = k_catalog(d.r_alg, 3);
  GaloisChecks gc = galois_checks(cm, ccat, rcat);
  CHECK(gc.report.passed());
  CHECK(gc.can_iso);
}

TEST_CASE("context_sigma on the trivial coring") {
  auto kk = std::make_shared<Algebra>(product_field_algebra(Q, 2));
  auto cg = std::make_shared<Coring>(trivial_coring(kk));
  Comodule reg = regular_comodule(cg);
  SigmaContext sc = context_sigma(reg);
  CHECK(validate_context(sc.ctx).passed());
  // Q ≅ A and the context is strict: both images are everything
  CHECK(sc.q_space.dim() == 2);
  CHECK(sc.tau_image.dim() == sc.t->dim());
  CHECK(sc.sigma_image.dim() == sc.dual.alg.dim());
}

TEST_CASE("context_sigma on Hopf Z/2") {
  HopfExample ex = hopf_example(2);
  Comodule h = regular_hopf_module(ex);
  SigmaContext sc = context_sigma(h);
  CHECK(validate_context(sc.ctx).passed());
  CHECK(sc.sigma_image.dim() <= sc.dual.alg.dim());
}

TEST_CASE("two_comodule_context degenerate Σ = Λ") {
  auto kk = std::make_shared<Algebra>(product_field_algebra(Q, 2));
  auto cg = std::make_shared<Coring>(trivial_coring(kk));
  Comodule reg = regular_comodule(cg);
  TwoComoduleContext tc = two_comodule_context(reg, reg, std::nullopt, {reg});
  CHECK(tc.report.passed());
}

TEST_CASE("two_comodule_context: Sweedler descent Σ = A, Λ = C") {
  SweedlerData sw = sweedler_kxk_example();
  auto cg = std::make_shared<Coring>(sw.coring);
  Comodule areg = sweedler_regular_comodule(cg, sw.coring.A, sw.carrier);
  Comodule creg = regular_comodule(cg);
  TwoComoduleContext tc = two_comodule_context(areg, creg, std::nullopt, {areg, creg});
  CHECK(tc.report.passed());

  // B = 0: vacuous
  TwoComoduleContext tz =
      two_comodule_context(areg, creg, zero_subspace(Q, tc.end_lambda->space()), {areg});
  CHECK(tz.report.passed());
}

TEST_CASE("b_structure_theorem") {
  // trivial coring, Σ = A: the full chain passes with B = *C ≅ A
  auto kk = std::make_shared<Algebra>(product_field_algebra(Q, 2));
  auto cg = std::make_shared<Coring>(trivial_coring(kk));
  Comodule reg = regular_comodule(cg);
  Report rep = b_structure_theorem(reg, {reg});
  CHECK(rep.passed());

  // Σ = 0: the chain fails cleanly at density
  Bimodule zero = right_module(kk, 0, std::vector<Mat>(2, Mat(Q, 0, 0)), "0");
  Comodule z = make_comodule_flat(cg, zero, Mat(Q, 0, 0));
  Report rz = b_structure_theorem(z, {});
  CHECK(!rz.passed());
  bool density_failed = false;
  for (const Check& c : rz.items())
    if (c.name.find("dense") != std::string::npos && c.verdict != Verdict::Pass)
      density_failed = true;
  bool b_zero = false;
  for (const Check& c : rz.items())
    if (c.name.find("B = QσΣ") != std::string::npos && c.detail == "dim 0") b_zero = true;
  CHECK((density_failed || b_zero));
}

TEST_CASE("b_structure_theorem on Hopf Z/2") {
  HopfExample ex = hopf_example(2);
  Comodule h = regular_hopf_module(ex);
  Report rep = b_structure_theorem(h, {h});
  // frozen from the solver: the full chain passes for the Hopf coring
  CHECK(rep.passed());
}

TEST_CASE("cosep_strong_structure on all three coseparable examples") {
  // Sweedler descent
  {
    SweedlerData sw = sweedler_kxk_example();
    auto cg = std::make_shared<Coring>(sw.coring);
    Comodule areg = sweedler_regular_comodule(cg, sw.coring.A, sw.carrier);
    HomResult endo = comodule_hom(areg, areg);
    Subspace r{BasedSpace{4, ""}, endo.maps.basis};
    GaloisDatum d = galois_datum_on(areg, r);
    ComatrixData cm = comatrix(d);
    CosepWitness w = coseparability_solve(sw.coring);
    Report rep = cosep_strong_structure(cm, w, {areg, regular_comodule(cg)}, k_catalog(d.r_alg, 3));
    CHECK(rep.passed());
  }
  // separable bimodule
  {
    SeparableBimoduleExample ex = separable_bimodule_example(2);
    Report rep = cosep_strong_structure(ex.comatrix_data, ex.witness,
                                        {ex.sigma, regular_comodule(ex.coring)},
                                        k_catalog(ex.datum.r_alg, 3));
    CHECK(rep.passed());
  }
  // Hopf Z/2 fundamental theorem
  {
    HopfExample ex = hopf_example(2);
    Comodule h = regular_hopf_module(ex);
    GaloisDatum d = construct_r(h);
    ComatrixData cm = comatrix(d);
    Report rep = cosep_strong_structure(cm, ex.data.witness,
                                        {h, free_hopf_module(ex, 2)}, k_catalog(d.r_alg, 3));
    CHECK(rep.passed());
  }
}

TEST_CASE("extension context on the trivial extension D = L = k") {
  // every coring is a pure extension of the trivial coring over k
  SweedlerData sw = sweedler_kxk_example();
  auto cg = std::make_shared<Coring>(sw.coring);
  auto k = std::make_shared<Algebra>(base_field_algebra(Q));
  auto dtriv = std::make_shared<Coring>(trivial_coring(k));
  std::size_t dc = cg->dim();
  // right k-action trivial; ρ_D = identity into C⊗_k k ≅ C
  std::vector<Mat> l_on_c = {Mat::identity(Q, dc)};
  CoringExtension ext = make_coring_extension(cg, dtriv, l_on_c, Mat::identity(Q, dc));
  Comodule areg = sweedler_regular_comodule(cg, sw.coring.A, sw.carrier);
  CHECK(validate_extension(ext, {areg}).passed());
  Bimodule sig_l;
  sig_l.space = areg.M.space;
  sig_l.left = k;
  sig_l.left_act = {Mat::identity(Q, areg.dim())};
  ExtensionContext ec = extension_context(ext, areg, sig_l, std::nullopt, {areg});
  CHECK(ec.report.passed());
  // the collapsed context is comparable with M(Σ)
  SigmaContext sc = context_sigma(areg);
  CHECK(ec.conv->dim() == sc.t->dim());
  CHECK(ec.endop->dim() == sc.dual.alg.dim());
}

TEST_CASE("roundtrips helper rejects non-firm modules") {
  MoritaContext ctx = projection_context_example();
  BarContext bar = restrict_to_images(ctx);
  Bimodule bad = zero_right_action_module(bar.a_bar, 1, "k0");
  Report rep = context_roundtrips(bar.context, {bad}, {});
  CHECK(!rep.passed());
}
