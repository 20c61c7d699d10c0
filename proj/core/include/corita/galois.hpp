#pragma once

#include "corita/coring.hpp"

namespace corita {

/// The Morita context (S = End_A(Σ), A, Σ, Σ*, τ, σ) of a right A-module,
/// with x τ ξ = xξ(-) and ξ σ x = ξ(x).
struct AModContext {
  MoritaContext ctx;
  AlgebraPtr s;        // End_A(Σ)
  HomResult s_hom;     // its basis inside Hom_k(Σ,Σ)
  HomResult star;      // Σ* = Hom_A(Σ, A)
  IdealWitness s_bar;  // ΣτΣ* inside S
};
AModContext context_a_mod(const Bimodule& sigma);

/// A firm ring R acting on a comodule Σ through an endomorphism-valued ring
/// map, together with the dual-basis map into Σ⊗_A Σ*.
struct GaloisDatum {
  CoringPtr coring;
  Comodule sigma;
  AlgebraPtr r_alg;     // firm
  Mat iota;             // dimΣ² × dimR: R -> End_k(Σ), image inside S̄∩T
  HomResult star;       // Σ*
  BalancedTensor ss;    // Σ ⊗_A Σ*
  Mat dual_basis;       // carrier(Σ⊗_AΣ*) × dimR
  bool zero_datum = false;
  Report report{"galois-datum"};
};

/// Canonical construction: B = S̄∩T, B' its idempotent core, R = B'⊗_{B'}B'.
GaloisDatum construct_r(const Comodule& sigma);
/// Datum from an explicitly given subring R ⊆ S̄∩T (flat End coordinates).
GaloisDatum galois_datum_on(const Comodule& sigma, const Subspace& r_flat);

/// Comatrix coring Σ†⊗_R Σ with its canonical map to C.
struct ComatrixData {
  GaloisDatum datum;
  Quotient carrier;    // of flat (Σ*, R, Σ)
  Coring coring;       // on that carrier
  Mat can;             // dim C × carrier dim
  Report report{"comatrix"};
};
ComatrixData comatrix(const GaloisDatum& datum);

/// Σ† = Σ*⊗_R R as a left C-comodule with its right R-action.
struct SigmaDagger {
  Quotient carrier;    // of flat (Σ*, R)
  Bimodule module;     // left A, and the R-action kept separately
  std::vector<Mat> right_r_act;
  LeftComodule as_left_comodule;
};
SigmaDagger sigma_dagger(const ComatrixData& cm);

/// Hom–tensor adjunction data (F = -⊗_RΣ, G = Hom^C(Σ,-)⊗_R R) evaluated on
/// one comodule / one firm module.
struct GaloisChecks {
  Report report{"galois-checks"};
  bool can_iso = false;
};
GaloisChecks galois_checks(const ComatrixData& cm, const std::vector<Comodule>& comodule_catalog,
                           const std::vector<Bimodule>& firm_r_catalog);

/// Morita context M(Σ) = (T, *C, Σ, Q, τ, σ) of a comodule.
struct SigmaContext {
  MoritaContext ctx;
  AlgebraPtr t;        // End^C(Σ)
  HomResult t_hom;
  DualRing dual;       // *C
  Subspace q_space;    // Q inside Hom_k(Σ, *C-coords)
  IdealWitness tau_image;    // ΣτQ in T
  IdealWitness sigma_image;  // QσΣ in *C
};
SigmaContext context_sigma(const Comodule& sigma);

/// Morita context of two comodules through their hom-spaces, the B-reduction
/// and the natural-equivalence comparison of the two hom functors.
struct TwoComoduleContext {
  MoritaContext ctx;
  AlgebraPtr end_sigma;
  AlgebraPtr end_lambda;
  HomResult hom_ls;  // Hom^C(Λ,Σ)
  HomResult hom_sl;  // Hom^C(Σ,Λ)
  ReducedContext reduced;
  Report report{"two-comodule-context"};
};
TwoComoduleContext two_comodule_context(const Comodule& sigma, const Comodule& lambda,
                                        const std::optional<Subspace>& b_opt,
                                        const std::vector<Comodule>& catalog);

/// The §-chain for the comodule B = QσΣ: finite-dimensional collapses of
/// local projectivity and density, local units, firmness of C over B, the
/// bicomodule structure, the two-context comparison and the structure-theorem
/// round trips.
Report b_structure_theorem(const Comodule& sigma, const std::vector<Comodule>& comodule_catalog);

/// A pure right coring extension: D over L with a D-coaction on C.
struct CoringExtension {
  CoringPtr c;            // over A
  CoringPtr d;            // over L
  std::vector<Mat> right_l_on_c;  // right L-action on C
  Mat rho_d;              // C -> carrier(C⊗_L D)
  BalancedTensor cd;      // C ⊗_L D
};
CoringExtension make_coring_extension(const CoringPtr& c, const CoringPtr& d,
                                      std::vector<Mat> right_l_on_c, const Mat& rho_d_flat);
Report validate_extension(const CoringExtension& ext, const std::vector<Comodule>& purity_catalog);

/// The extension context M̃(Σ) with its connecting maps, and the canonical
/// natural-isomorphism checks of the associated structure theorem.
struct ExtensionContext {
  MoritaContext ctx;
  AlgebraPtr conv;     // _L Hom_L(D, T)
  AlgebraPtr endop;    // ^C End^D(C)^op
  Report report{"extension-context"};
};
ExtensionContext extension_context(const CoringExtension& ext, const Comodule& sigma,
                                   const Bimodule& sigma_left_l,
                                   const std::optional<Subspace>& r_opt,
                                   const std::vector<Comodule>& catalog);

/// Strong structure theorem for a firmly projective comodule of a
/// coseparable coring: surjectivity of can certifies the equivalence.
Report cosep_strong_structure(const ComatrixData& cm, const CosepWitness& w,
                              const std::vector<Comodule>& comodule_catalog,
                              const std::vector<Bimodule>& firm_r_catalog);

/// ω/β round trips of a Morita context on firm-module catalogs (the checks
/// behind the Kato–Ohtake equivalence, reusable for any context).
Report context_roundtrips(const MoritaContext& ctx, const std::vector<Bimodule>& a_catalog,
                          const std::vector<Bimodule>& ap_catalog);

}  // namespace corita
