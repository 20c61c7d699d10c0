#pragma once

#include "corita/galois.hpp"

namespace corita {

/// The builtin example set: each entry constructs its structures from code
/// and runs the full theorem suite attached to it.
std::vector<std::string> example_names();
Report run_example(const std::string& name);  // throws input_error on unknown names

// Reusable builders (the CLI, tests and the acceptance suite share these).

MoritaContext projection_context_example();
MoritaContext matrix_context_example();

SweedlerData sweedler_kxk_example();
/// A as the standard right comodule over the Sweedler coring of B -> A.
Comodule sweedler_regular_comodule(const CoringPtr& cg, const AlgebraPtr& a, const Quotient& carrier);

struct HopfExample {
  HopfAlgebra hopf;
  HopfCoringData data;
};
HopfExample hopf_example(std::size_t order);
/// Free Hopf module V⊗H with dim V = copies.
Comodule free_hopf_module(const HopfExample& ex, std::size_t copies);
/// H itself with action = multiplication and coaction through Δ.
Comodule regular_hopf_module(const HopfExample& ex);

/// Σ = k^n over A = k with the comatrix coring Σ*⊗_k Σ; can is the identity.
struct SeparableBimoduleExample {
  CoringPtr coring;
  Comodule sigma;
  GaloisDatum datum;
  ComatrixData comatrix_data;
  CosepWitness witness;
};
SeparableBimoduleExample separable_bimodule_example(std::size_t n);

/// Default module catalogs exercising the firm/non-firm boundary:
/// regular, square, zero, and a Dorroh-unital variant.
std::vector<Bimodule> default_module_catalog(const AlgebraPtr& a);

}  // namespace corita
