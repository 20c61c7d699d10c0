// corita — batch driver for exact checks on non-unital rings, Morita
// contexts, corings and comodules. Loads structures from JSON files, runs
// named check suites and prints human-readable and machine reports.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "corita/json_io.hpp"

namespace {

using namespace corita;

struct Options {
  std::string file;
  std::string ideal = "auto";
  std::string catalog;
  std::string json_out;
  std::string expect;
  std::string name;  // workspace entry, default "main"
};

int finish(const Report& rep, const Options& opt) {
  rep.print(std::cout);
  if (!opt.json_out.empty()) {
    std::ofstream out(opt.json_out, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write '" << opt.json_out << "'\n";
      return 2;
    }
    out << rep.to_json().dump(2) << "\n";
  }
  if (!opt.expect.empty()) {
    // --expect <item substring>: require that item (or the whole report when
    // the substring is "pass") to hold
    if (opt.expect == "pass") return rep.passed() ? 0 : 1;
    std::function<bool(const std::vector<Check>&)> find = [&](const std::vector<Check>& items) {
      for (const Check& c : items) {
        if (c.name.find(opt.expect) != std::string::npos && c.verdict == Verdict::Pass) return true;
        if (find(c.sub)) return true;
      }
      return false;
    };
    return find(rep.items()) ? 0 : 1;
  }
  return rep.no_failures() ? 0 : 1;
}

std::string pick_name(const Workspace& ws, const std::string& kind, const Options& opt) {
  if (!opt.name.empty()) return opt.name;
  if (ws.has(kind, "main")) return "main";
  throw input_error("no --name given and no single structure in the file");
}

std::vector<Bimodule> load_catalog(const Workspace& ws, const Options& opt, const AlgebraPtr& a) {
  if (!opt.catalog.empty()) return ws.catalog(opt.catalog);
  return default_module_catalog(a);
}

int cmd_check_ring(const Options& opt) {
  Workspace ws = Workspace::load_file(opt.file, "algebra");
  AlgebraPtr a = ws.algebra(pick_name(ws, "algebra", opt));
  Report rep("check-ring");
  rep.absorb("valid", validate(*a));
  IdempotencyReport idem = is_idempotent(*a);
  rep.add("idempotent", idem.is_idempotent, "R² has dimension " + std::to_string(idem.square.dim()));
  FirmnessReport fr = firmness(*a);
  rep.add("firm", fr.is_firm, "R⊗_R R has dimension " + std::to_string(fr.carrier.space.dim));
  LocalUnitsReport lu = has_right_local_units(*a);
  rep.add("right local units", lu.verdict);
  if (a->field().is_rational() && a->is_unital()) {
    Subspace rad = radical_char0(*a);
    rep.add("radical computed", true, "dimension " + std::to_string(rad.dim()));
  }
  return finish(rep, opt);
}

int cmd_check_module(const Options& opt) {
  Workspace ws = Workspace::load_file(opt.file, "bimodule");
  Bimodule m = ws.bimodule(pick_name(ws, "bimodule", opt));
  Report rep("check-module");
  rep.absorb("module axioms", validate_module(m));
  if (m.right) {
    FirmnessReport fr = module_firmness(m, m.right);
    rep.add("MR = M", fr.is_idempotent);
    rep.add("firm", fr.is_firm);
    if (m.right->is_unital()) {
      rep.add("projective", is_projective(m, Side::Right));
      if (m.right->field().is_rational()) {
        FlatnessReport ff = is_faithfully_flat(m, Side::Right);
        rep.add_verdict("faithfully flat", ff.verdict, ff.note);
      }
    } else {
      rep.add("projective (through the Dorroh extension)", is_projective(m, Side::Right),
              "non-unital base handled via R⊕k");
    }
  }
  return finish(rep, opt);
}

int cmd_check_context(const Options& opt) {
  Workspace ws = Workspace::load_file(opt.file, "context");
  MoritaContext ctx = ws.context(pick_name(ws, "context", opt));
  Report rep("check-context");
  rep.absorb("context axioms", validate_context(ctx));
  ImageRings imgs = image_rings(ctx);
  rep.add("PτQ ideal", check_ideal(imgs.a_image).passed(),
          "dimension " + std::to_string(imgs.a_image.dim()));
  rep.add("QσP ideal", check_ideal(imgs.ap_image).passed(),
          "dimension " + std::to_string(imgs.ap_image.dim()));
  return finish(rep, opt);
}

Subspace resolve_ideal(const Workspace& ws, const Options& opt, const MoritaContext& ctx) {
  if (opt.ideal == "auto") {
    ImageRings imgs = image_rings(ctx);
    return idempotent_core(imgs.ap_image).core.subspace;
  }
  return ws.ideal(opt.ideal, ctx.Ap->space(), ctx.Ap->field());
}

int cmd_reduce_context(const Options& opt) {
  Workspace ws = Workspace::load_file(opt.file, "context");
  MoritaContext ctx = ws.context(pick_name(ws, "context", opt));
  ReducedContext red = reduce_by_ideal(ctx, resolve_ideal(ws, opt, ctx));
  Report rep("reduce-context");
  rep.add("B", true, "dimension " + std::to_string(red.b.dim()));
  rep.add("W", true, "dimension " + std::to_string(red.w.dim()));
  rep.absorb("reduction lemma", red.lemma);
  rep.absorb("reduced context axioms", validate_context(red.context));
  rep.add("τ̄ bijective", red.tau_bijective);
  rep.add("σ̄ bijective", red.sigma_bijective);
  Report printed = rep;
  int rc = finish(printed, opt);
  if (opt.json_out.empty()) {
    // emit the reduced context itself when no report file was requested
    std::cout << context_to_json(red.context).dump(2) << "\n";
  }
  return rc;
}

int cmd_kato_ohtake(const Options& opt) {
  Workspace ws = Workspace::load_file(opt.file, "context");
  MoritaContext ctx = ws.context(pick_name(ws, "context", opt));
  ReducedContext red = reduce_by_ideal(ctx, resolve_ideal(ws, opt, ctx));
  Report rep("kato-ohtake");
  rep.absorb("reduction lemma", red.lemma);
  std::vector<Bimodule> wcat, bcat;
  if (!opt.catalog.empty()) {
    bcat = ws.catalog(opt.catalog);
  } else {
    bcat = default_module_catalog(red.b_alg);
    // keep the firm part of the default catalog
    std::vector<Bimodule> firm;
    for (const Bimodule& m : bcat)
      if (module_firmness(m, red.b_alg).is_firm) firm.push_back(m);
    bcat = firm;
  }
  for (const Bimodule& n : bcat) {
    BalancedTensor t = tensor_over(forget_left(n), red.b_alg, red.context.Q);
    Bimodule m = forget_left(t.result);
    m.space.label = n.space.label + "(x)Q";
    wcat.push_back(m);
  }
  rep.absorb("round trips", kato_ohtake_verify(red, wcat, bcat));
  return finish(rep, opt);
}

int cmd_check_coring(const Options& opt) {
  Workspace ws = Workspace::load_file(opt.file, "coring");
  CoringPtr c = ws.coring(pick_name(ws, "coring", opt));
  Report rep("check-coring");
  rep.absorb("coring axioms", validate_coring(*c));
  DualRing dual = dual_ring(*c);
  rep.add("dual ring", validate(dual.alg).passed(), "dimension " + std::to_string(dual.alg.dim()));
  rep.absorb("dual action convention", dual_action_compatibility(regular_comodule(c), dual));
  return finish(rep, opt);
}

int cmd_coseparable(const Options& opt) {
  Workspace ws = Workspace::load_file(opt.file, "coring");
  CoringPtr c = ws.coring(pick_name(ws, "coring", opt));
  Report rep("coseparable");
  CosepWitness w = coseparability_solve(*c);
  rep.add("coseparable", w.coseparable);
  if (w.coseparable) {
    rep.absorb("witness identities", w.report);
    rep.absorb("category isomorphism", cosep_category_iso(*c, w, {regular_comodule(c)}));
    rep.absorb("tensor isomorphism",
               cosep_tensor_iso(regular_comodule(c), regular_left_comodule(c), w));
  }
  return finish(rep, opt);
}

int cmd_galois(const Options& opt) {
  Workspace ws = Workspace::load_file(opt.file, "comodule");
  Comodule sigma = ws.comodule(pick_name(ws, "comodule", opt));
  Report rep("galois");
  rep.absorb("comodule axioms", validate_comodule(sigma));
  GaloisDatum datum = construct_r(sigma);
  rep.absorb("datum", datum.report);
  ComatrixData cm = comatrix(datum);
  rep.absorb("comatrix coring", cm.report);
  std::vector<Comodule> ccat = {sigma, regular_comodule(sigma.coring)};
  std::vector<Bimodule> rcat;
  if (!datum.zero_datum) {
    for (Bimodule& m : default_module_catalog(datum.r_alg))
      if (module_firmness(m, datum.r_alg).is_firm) rcat.push_back(m);
  }
  GaloisChecks gc = galois_checks(cm, ccat, rcat);
  rep.absorb("structure theorems", gc.report);
  CosepWitness w = coseparability_solve(*sigma.coring);
  if (w.coseparable)
    rep.absorb("strong structure theorem", cosep_strong_structure(cm, w, ccat, rcat));
  return finish(rep, opt);
}

int cmd_b_structure(const Options& opt) {
  Workspace ws = Workspace::load_file(opt.file, "comodule");
  Comodule sigma = ws.comodule(pick_name(ws, "comodule", opt));
  Report rep = b_structure_theorem(sigma, {sigma, regular_comodule(sigma.coring)});
  return finish(rep, opt);
}

int cmd_extension(const Options& opt) {
  std::ifstream in(opt.file);
  if (!in) throw input_error("cannot read file '" + opt.file + "'");
  Json doc;
  in >> doc;
  Workspace ws = Workspace::from_json(doc, "extension");
  if (!doc.contains("extension")) throw input_error("extension file needs an 'extension' object");
  const Json& e = doc.at("extension");
  CoringPtr c = ws.coring(e.at("C").get<std::string>());
  CoringPtr d = ws.coring(e.at("D").get<std::string>());
  std::vector<Mat> l_on_c;
  for (const Json& m : e.at("right_l_on_c")) l_on_c.push_back(mat_from_json(c->A->field(), m));
  Mat rho_d = mat_from_json(c->A->field(), e.at("rho_d"));
  CoringExtension ext = make_coring_extension(c, d, l_on_c, rho_d);
  Comodule sigma = ws.comodule(e.at("sigma").get<std::string>());
  Bimodule sig_l;
  sig_l.space = sigma.M.space;
  sig_l.left = d->A;
  for (const Json& m : e.at("sigma_left_l")) sig_l.left_act.push_back(mat_from_json(c->A->field(), m));
  Report rep("extension");
  rep.absorb("extension axioms + purity", validate_extension(ext, {sigma}));
  ExtensionContext ec = extension_context(ext, sigma, sig_l, std::nullopt, {sigma});
  rep.absorb("extension context", ec.report);
  return finish(rep, opt);
}

int cmd_examples(const std::string& action, const std::string& name, const Options& opt) {
  if (action == "list") {
    for (const std::string& n : example_names()) std::cout << n << "\n";
    return 0;
  }
  Report rep = run_example(name);
  return finish(rep, opt);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"corita — exact checks for firm rings, Morita contexts, corings and comodules"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd, bool needs_file) {
    if (needs_file) cmd->add_option("--file", opt.file, "input JSON file")->required();
    cmd->add_option("--name", opt.name, "workspace entry name (default: main)");
    cmd->add_option("--json", opt.json_out, "write the machine report to this file");
    cmd->add_option("--expect", opt.expect, "require a named check (or 'pass') to hold");
    cmd->add_option("--catalog", opt.catalog, "named module catalog from the workspace");
  };

  CLI::App* ring = app.add_subcommand("check-ring", "validity, idempotency, firmness, local units");
  add_common(ring, true);
  CLI::App* module = app.add_subcommand("check-module", "module axioms, firmness, projectivity");
  add_common(module, true);
  CLI::App* context = app.add_subcommand("check-context", "Morita context axioms and images");
  add_common(context, true);
  CLI::App* reduce = app.add_subcommand("reduce-context", "B-reduced form of a Morita context");
  add_common(reduce, true);
  reduce->add_option("--ideal", opt.ideal, "auto (idempotent core) or a named ideal");
  CLI::App* kato = app.add_subcommand("kato-ohtake", "equivalence round trips of the reduction");
  add_common(kato, true);
  kato->add_option("--ideal", opt.ideal, "auto (idempotent core) or a named ideal");
  CLI::App* coring_cmd = app.add_subcommand("check-coring", "coring axioms and the dual ring");
  add_common(coring_cmd, true);
  CLI::App* cosep = app.add_subcommand("coseparable", "cointegral solve and category isomorphism");
  add_common(cosep, true);
  CLI::App* galois_cmd = app.add_subcommand("galois", "comatrix coring, can, structure theorems");
  add_common(galois_cmd, true);
  CLI::App* bstr = app.add_subcommand("b-structure", "the B = QσΣ structure-theorem chain");
  add_common(bstr, true);
  CLI::App* extension = app.add_subcommand("extension", "pure coring extension context");
  add_common(extension, true);

  CLI::App* examples = app.add_subcommand("examples", "builtin example suites");
  std::string ex_action, ex_name;
  examples->add_option("action", ex_action, "list | run")->required();
  examples->add_option("name", ex_name, "example name for 'run'");
  examples->add_option("--json", opt.json_out, "write the machine report to this file");
  examples->add_option("--expect", opt.expect, "require a named check (or 'pass') to hold");

  CLI11_PARSE(app, argc, argv);

  try {
    if (ring->parsed()) return cmd_check_ring(opt);
    if (module->parsed()) return cmd_check_module(opt);
    if (context->parsed()) return cmd_check_context(opt);
    if (reduce->parsed()) return cmd_reduce_context(opt);
    if (kato->parsed()) return cmd_kato_ohtake(opt);
    if (coring_cmd->parsed()) return cmd_check_coring(opt);
    if (cosep->parsed()) return cmd_coseparable(opt);
    if (galois_cmd->parsed()) return cmd_galois(opt);
    if (bstr->parsed()) return cmd_b_structure(opt);
    if (extension->parsed()) return cmd_extension(opt);
    if (examples->parsed()) {
      if (ex_action == "list") return cmd_examples("list", "", opt);
      if (ex_action == "run") {
        if (ex_name.empty()) {
          std::cerr << "examples run <name>: missing name\n";
          return 2;
        }
        return cmd_examples("run", ex_name, opt);
      }
      std::cerr << "examples: action must be 'list' or 'run'\n";
      return 2;
    }
  } catch (const corita::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
