#pragma once

#include <map>

#include "corita/examples.hpp"

namespace corita {

using Json = nlohmann::ordered_json;

Json field_to_json(const Field& f);
Field field_from_json(const Json& j);

/// {"rows":r,"cols":c,"entries":[... row-major ...]} — rationals as "p/q"
/// strings in lowest terms, prime-field residues as integers in [0,p).
Json mat_to_json_entries(const Mat& m);
Mat mat_from_json(const Field& f, const Json& j);

Json algebra_to_json(const Algebra& a);
Algebra algebra_from_json(const Json& j);

Json bimodule_to_json(const Bimodule& m);
Json context_to_json(const MoritaContext& ctx);
Json coring_to_json(const Coring& c);
Json comodule_to_json(const Comodule& m);

/// Named structures loaded from one UTF-8 JSON document. A document is
/// either a workspace object ({"algebras":{...}, "bimodules":{...},
/// "contexts":{...}, "corings":{...}, "comodules":{...}, "ideals":{...},
/// "catalogs":{...}}) or a bare single structure, which the commands pick up
/// under the name "main".
class Workspace {
 public:
  static Workspace load_file(const std::string& path, const std::string& expect_kind);
  static Workspace from_json(const Json& doc, const std::string& expect_kind);

  AlgebraPtr algebra(const std::string& name) const;
  Bimodule bimodule(const std::string& name) const;
  MoritaContext context(const std::string& name) const;
  CoringPtr coring(const std::string& name) const;
  Comodule comodule(const std::string& name) const;
  /// Basis rows of a named ideal, interpreted in the given ambient dimension.
  Subspace ideal(const std::string& name, const BasedSpace& ambient, const Field& f) const;
  std::vector<Bimodule> catalog(const std::string& name) const;
  bool has(const std::string& kind, const std::string& name) const;

 private:
  AlgebraPtr algebra_ref(const Json& j) const;
  Bimodule bimodule_from_json(const Json& j) const;
  MoritaContext context_from_json(const Json& j) const;
  Coring coring_from_json(const Json& j) const;
  Comodule comodule_from_json(const Json& j) const;

  std::map<std::string, AlgebraPtr> algebras_;
  std::map<std::string, Bimodule> bimodules_;
  std::map<std::string, MoritaContext> contexts_;
  std::map<std::string, CoringPtr> corings_;
  std::map<std::string, Comodule> comodules_;
  std::map<std::string, Json> ideals_;
  std::map<std::string, std::vector<std::string>> catalogs_;
};

}  // namespace corita
