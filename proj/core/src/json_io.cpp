#include "corita/json_io.hpp"

#include <fstream>

namespace corita {

namespace {

const Json& need(const Json& j, const std::string& key) {
  if (!j.contains(key)) throw input_error("missing key '" + key + "' in JSON object");
  return j.at(key);
}

Rat scalar_from_json(const Field& f, const Json& j) {
  if (j.is_number_integer()) return f.from_long(j.get<long>());
  if (j.is_string()) return f.parse(j.get<std::string>());
  throw input_error("scalar must be an integer or a 'p/q' string");
}

}  // namespace

Json field_to_json(const Field& f) {
  Json j;
  j["kind"] = f.is_rational() ? "rationals" : "prime";
  j["characteristic"] = f.characteristic();
  return j;
}

Field field_from_json(const Json& j) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "Q" || s == "rationals") return Field::rationals();
    throw input_error("unknown field '" + s + "'");
  }
  std::string kind = need(j, "kind").get<std::string>();
  if (kind == "rationals") return Field::rationals();
  if (kind == "prime" || kind == "prime field")
    return Field::prime(need(j, "characteristic").get<std::uint32_t>());
  throw input_error("field kind must be 'rationals' or 'prime'");
}

Json mat_to_json_entries(const Mat& m) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k) {
      if (m.field().is_rational())
        entries.push_back(m.field().str(m.at(i, k)));
      else
        entries.push_back(
            static_cast<long>(boost::multiprecision::numerator(m.at(i, k))));
    }
  j["entries"] = entries;
  return j;
}

Mat mat_from_json(const Field& f, const Json& j) {
  std::size_t rows = need(j, "rows").get<std::size_t>();
  std::size_t cols = need(j, "cols").get<std::size_t>();
  const Json& entries = need(j, "entries");
  if (!entries.is_array() || entries.size() != rows * cols)
    throw input_error("matrix entries length must be rows*cols");
  Mat m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k) m.set(i, k, scalar_from_json(f, entries[i * cols + k]));
  return m;
}

Json algebra_to_json(const Algebra& a) {
  Json j;
  j["field"] = field_to_json(a.field());
  j["dim"] = a.dim();
  Json mult = Json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < a.dim(); ++k) {
      Json coeffs = Json::array();
      for (const Rat& c : a.basis_product(i, k)) {
        if (a.field().is_rational())
          coeffs.push_back(a.field().str(c));
        else
          coeffs.push_back(static_cast<long>(boost::multiprecision::numerator(c)));
      }
      row.push_back(coeffs);
    }
    mult.push_back(row);
  }
  j["mult"] = mult;
  if (a.is_unital()) {
    Json u = Json::array();
    for (const Rat& c : *a.unit()) u.push_back(a.field().str(c));
    j["unit"] = u;
  } else {
    j["unit"] = nullptr;
  }
  j["label"] = a.label();
  return j;
}

Algebra algebra_from_json(const Json& j) {
  Field f = field_from_json(need(j, "field"));
  std::size_t dim = need(j, "dim").get<std::size_t>();
  std::string label = j.contains("label") ? j.at("label").get<std::string>() : "";
  Algebra a(f, dim, label);
  const Json& mult = need(j, "mult");
  if (!mult.is_array() || mult.size() != dim) throw input_error("mult must be a dim×dim×dim array");
  for (std::size_t i = 0; i < dim; ++i) {
    if (!mult[i].is_array() || mult[i].size() != dim) throw input_error("mult row shape");
    for (std::size_t k = 0; k < dim; ++k) {
      const Json& coeffs = mult[i][k];
      if (!coeffs.is_array() || coeffs.size() != dim) throw input_error("mult coefficient shape");
      Vec v(dim);
      for (std::size_t t = 0; t < dim; ++t) v[t] = scalar_from_json(f, coeffs[t]);
      a.set_product(i, k, v);
    }
  }
  if (j.contains("unit") && !j.at("unit").is_null()) {
    const Json& u = j.at("unit");
    if (!u.is_array() || u.size() != dim) throw input_error("unit length mismatch");
    Vec v(dim);
    for (std::size_t t = 0; t < dim; ++t) v[t] = scalar_from_json(f, u[t]);
    a.set_unit(v);
  }
  return a;
}

Json bimodule_to_json(const Bimodule& m) {
  Json j;
  j["left"] = m.left ? algebra_to_json(*m.left) : Json(nullptr);
  j["right"] = m.right ? algebra_to_json(*m.right) : Json(nullptr);
  j["dim"] = m.dim();
  Json la = Json::array();
  for (const Mat& a : m.left_act) la.push_back(mat_to_json_entries(a));
  j["left_action"] = la;
  Json ra = Json::array();
  for (const Mat& a : m.right_act) ra.push_back(mat_to_json_entries(a));
  j["right_action"] = ra;
  j["label"] = m.space.label;
  return j;
}

Json context_to_json(const MoritaContext& ctx) {
  Json j;
  j["A"] = algebra_to_json(*ctx.A);
  j["Ap"] = algebra_to_json(*ctx.Ap);
  j["P"] = bimodule_to_json(ctx.P);
  j["Q"] = bimodule_to_json(ctx.Q);
  j["wt"] = mat_to_json_entries(ctx.wt.form);
  j["bt"] = mat_to_json_entries(ctx.bt.form);
  return j;
}

Json coring_to_json(const Coring& c) {
  Json j;
  j["algebra"] = algebra_to_json(*c.A);
  j["C"] = bimodule_to_json(c.C);
  j["delta"] = mat_to_json_entries(c.delta);
  j["eps"] = mat_to_json_entries(c.eps);
  return j;
}

Json comodule_to_json(const Comodule& m) {
  Json j;
  j["coring"] = coring_to_json(*m.coring);
  j["M"] = bimodule_to_json(m.M);
  j["rho"] = mat_to_json_entries(m.rho);
  return j;
}

// ---------------------------------------------------------------------------
// workspace

Workspace Workspace::load_file(const std::string& path, const std::string& expect_kind) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot read file '" + path + "'");
  Json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    throw input_error("malformed JSON in '" + path + "': " + e.what());
  }
  return from_json(doc, expect_kind);
}

Workspace Workspace::from_json(const Json& doc, const std::string& expect_kind) {
  Workspace ws;
  bool is_workspace = doc.contains("algebras") || doc.contains("bimodules") ||
                      doc.contains("contexts") || doc.contains("corings") ||
                      doc.contains("comodules");
  Json root = doc;
  if (!is_workspace) {
    root = Json::object();
    root[expect_kind + "s"] = Json::object();
    root[expect_kind + "s"]["main"] = doc;
  }
  if (root.contains("algebras"))
    for (auto& [name, j] : root.at("algebras").items())
      ws.algebras_[name] = std::make_shared<Algebra>(algebra_from_json(j));
  if (root.contains("bimodules"))
    for (auto& [name, j] : root.at("bimodules").items())
      ws.bimodules_[name] = ws.bimodule_from_json(j);
  if (root.contains("contexts"))
    for (auto& [name, j] : root.at("contexts").items())
      ws.contexts_[name] = ws.context_from_json(j);
  if (root.contains("corings"))
    for (auto& [name, j] : root.at("corings").items())
      ws.corings_[name] = std::make_shared<Coring>(ws.coring_from_json(j));
  if (root.contains("comodules"))
    for (auto& [name, j] : root.at("comodules").items())
      ws.comodules_[name] = ws.comodule_from_json(j);
  if (root.contains("ideals"))
    for (auto& [name, j] : root.at("ideals").items()) ws.ideals_[name] = j;
  if (root.contains("catalogs"))
    for (auto& [name, j] : root.at("catalogs").items())
      ws.catalogs_[name] = j.get<std::vector<std::string>>();
  return ws;
}

AlgebraPtr Workspace::algebra_ref(const Json& j) const {
  if (j.is_string()) return algebra(j.get<std::string>());
  return std::make_shared<Algebra>(algebra_from_json(j));
}

Bimodule Workspace::bimodule_from_json(const Json& j) const {
  Bimodule m;
  std::size_t dim = need(j, "dim").get<std::size_t>();
  m.space = BasedSpace{dim, j.contains("label") ? j.at("label").get<std::string>() : ""};
  Field f = Field::rationals();
  bool have_field = false;
  if (j.contains("left") && !j.at("left").is_null()) {
    m.left = algebra_ref(j.at("left"));
    f = m.left->field();
    have_field = true;
  }
  if (j.contains("right") && !j.at("right").is_null()) {
    m.right = algebra_ref(j.at("right"));
    f = m.right->field();
    have_field = true;
  }
  if (!have_field) throw input_error("bimodule needs at least one acting algebra");
  if (m.left) {
    const Json& la = need(j, "left_action");
    if (la.size() != m.left->dim()) throw input_error("left_action count mismatch");
    for (const Json& a : la) m.left_act.push_back(mat_from_json(f, a));
  }
  if (m.right) {
    const Json& ra = need(j, "right_action");
    if (ra.size() != m.right->dim()) throw input_error("right_action count mismatch");
    for (const Json& a : ra) m.right_act.push_back(mat_from_json(f, a));
  }
  return m;
}

MoritaContext Workspace::context_from_json(const Json& j) const {
  AlgebraPtr a = algebra_ref(need(j, "A"));
  AlgebraPtr ap = algebra_ref(need(j, "Ap"));
  Bimodule p = bimodule_from_json(need(j, "P"));
  Bimodule q = bimodule_from_json(need(j, "Q"));
  Mat wt = mat_from_json(a->field(), need(j, "wt"));
  Mat bt = mat_from_json(a->field(), need(j, "bt"));
  return make_context(a, ap, std::move(p), std::move(q), wt, bt);
}

Coring Workspace::coring_from_json(const Json& j) const {
  AlgebraPtr a = algebra_ref(need(j, "algebra"));
  Bimodule c = bimodule_from_json(need(j, "C"));
  Mat delta = mat_from_json(a->field(), need(j, "delta"));
  Mat eps = mat_from_json(a->field(), need(j, "eps"));
  return make_coring(a, std::move(c), delta, eps);
}

Comodule Workspace::comodule_from_json(const Json& j) const {
  CoringPtr cg;
  const Json& cj = need(j, "coring");
  if (cj.is_string())
    cg = coring(cj.get<std::string>());
  else
    cg = std::make_shared<Coring>(coring_from_json(cj));
  Bimodule m = bimodule_from_json(need(j, "M"));
  Mat rho = mat_from_json(cg->A->field(), need(j, "rho"));
  return make_comodule(cg, std::move(m), rho);
}

AlgebraPtr Workspace::algebra(const std::string& name) const {
  auto it = algebras_.find(name);
  if (it == algebras_.end()) throw input_error("no algebra named '" + name + "'");
  return it->second;
}

Bimodule Workspace::bimodule(const std::string& name) const {
  auto it = bimodules_.find(name);
  if (it == bimodules_.end()) throw input_error("no bimodule named '" + name + "'");
  return it->second;
}

MoritaContext Workspace::context(const std::string& name) const {
  auto it = contexts_.find(name);
  if (it == contexts_.end()) throw input_error("no context named '" + name + "'");
  return it->second;
}

CoringPtr Workspace::coring(const std::string& name) const {
  auto it = corings_.find(name);
  if (it == corings_.end()) throw input_error("no coring named '" + name + "'");
  return it->second;
}

Comodule Workspace::comodule(const std::string& name) const {
  auto it = comodules_.find(name);
  if (it == comodules_.end()) throw input_error("no comodule named '" + name + "'");
  return it->second;
}

Subspace Workspace::ideal(const std::string& name, const BasedSpace& ambient, const Field& f) const {
  auto it = ideals_.find(name);
  if (it == ideals_.end()) throw input_error("no ideal named '" + name + "'");
  const Json& j = it->second;
  Mat basis = mat_from_json(f, j.contains("basis") ? j.at("basis") : j);
  if (basis.cols() != ambient.dim)
    throw input_error("ideal '" + name + "' has ambient dimension " + std::to_string(basis.cols()) +
                      ", expected " + std::to_string(ambient.dim));
  return span_rows(ambient, basis);
}

std::vector<Bimodule> Workspace::catalog(const std::string& name) const {
  auto it = catalogs_.find(name);
  if (it == catalogs_.end()) throw input_error("no catalog named '" + name + "'");
  std::vector<Bimodule> out;
  for (const std::string& n : it->second) out.push_back(bimodule(n));
  return out;
}

bool Workspace::has(const std::string& kind, const std::string& name) const {
  if (kind == "algebra") return algebras_.count(name) > 0;
  if (kind == "bimodule") return bimodules_.count(name) > 0;
  if (kind == "context") return contexts_.count(name) > 0;
  if (kind == "coring") return corings_.count(name) > 0;
  if (kind == "comodule") return comodules_.count(name) > 0;
  return false;
}

}  // namespace corita
