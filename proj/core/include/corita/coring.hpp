#pragma once

#include "corita/morita.hpp"

namespace corita {

/// A-coring: an A-bimodule C with coproduct Δ: C -> C⊗_A C and counit
/// ε: C -> A. The balanced carrier of C⊗_A C is computed canonically at
/// construction time and the coproduct matrix refers to its coordinates;
/// that index convention is part of the external contract.
struct Coring {
  AlgebraPtr A;
  Bimodule C;
  BalancedTensor cc;  // C ⊗_A C
  Mat delta;          // cc-carrier coords <- C
  Mat eps;            // A <- C

  std::size_t dim() const { return C.dim(); }
  Mat flat_delta() const { return cc.carrier.section.matrix * delta; }
};
using CoringPtr = std::shared_ptr<const Coring>;

struct Comodule {
  CoringPtr coring;
  Bimodule M;          // right A-module
  BalancedTensor mc;   // M ⊗_A C
  Mat rho;             // mc-carrier coords <- M

  std::size_t dim() const { return M.dim(); }
  Mat flat_rho() const { return mc.carrier.section.matrix * rho; }
};

struct LeftComodule {
  CoringPtr coring;
  Bimodule M;          // left A-module
  BalancedTensor cm;   // C ⊗_A M
  Mat rho;             // cm-carrier coords <- M

  std::size_t dim() const { return M.dim(); }
  Mat flat_rho() const { return cm.carrier.section.matrix * rho; }
};

Coring make_coring(const AlgebraPtr& a, Bimodule c, const Mat& delta_on_carrier, const Mat& eps);
/// Same, with the coproduct given by a representative into C ⊗_k C.
Coring make_coring_flat(const AlgebraPtr& a, Bimodule c, const Mat& delta_flat, const Mat& eps);
Comodule make_comodule(const CoringPtr& cg, Bimodule m, const Mat& rho_on_carrier);
Comodule make_comodule_flat(const CoringPtr& cg, Bimodule m, const Mat& rho_flat);
LeftComodule make_left_comodule_flat(const CoringPtr& cg, Bimodule m, const Mat& rho_flat);

/// C = A with Δ the canonical isomorphism A ≅ A⊗_A A and ε = id.
Coring trivial_coring(const AlgebraPtr& a);
/// A as a right comodule over any coring via x -> x·Δ-style regular coaction:
/// the regular comodule C itself.
Comodule regular_comodule(const CoringPtr& cg);
LeftComodule regular_left_comodule(const CoringPtr& cg);

Report validate_coring(const Coring& c);
Report validate_comodule(const Comodule& m);
Report validate_left_comodule(const LeftComodule& m);

/// Left dual *C = _A Hom(C, A) with product (f*g)(c) = g(c⁽¹⁾ f(c⁽²⁾)) and
/// unit ε. `maps` is the solution space inside Hom_k(C, A) (row-major).
struct DualRing {
  Algebra alg;
  Subspace maps;
};
DualRing dual_ring(const Coring& c);
/// Right *C-action matrices m·f = m⁽⁰⁾ f(m⁽¹⁾) on a comodule, one per dual
/// ring basis element.
std::vector<Mat> dual_ring_action(const Comodule& m, const DualRing& dual);
/// Invariant (m·f)·g = m·(f*g); pins the product convention.
Report dual_action_compatibility(const Comodule& m, const DualRing& dual);

/// An A-ring: an algebra T carrying a compatible A-bimodule structure.
struct ARing {
  AlgebraPtr alg;
  Bimodule bimod;
};
/// Convolution algebra _A Hom_A(C, T), (f*g)(c) = f(c⁽¹⁾)g(c⁽²⁾).
struct ConvolutionAlgebra {
  Algebra alg;
  Subspace maps;
};
ConvolutionAlgebra convolution_algebra(const Coring& c, const ARing& t);
/// Image of an A-bimodule map f: C -> T that is idempotent under
/// convolution; verified an idempotent ring.
Report idempotent_image(const Coring& c, const ARing& t, const Mat& f, Subspace* image_out = nullptr);

/// Thm-level construction: a firm ideal R of a unital algebra A is an
/// A-coring with counit the inclusion.
Coring coring_from_firm_ideal(const AlgebraPtr& a, const Subspace& r);
/// Converse extractor: recover (R, d_R) from a coring whose counit is
/// injective, certifying firmness of the image ideal.
Report firm_ideal_from_coring(const Coring& c);

/// Colinear maps between right comodules; endo case carries composition.
HomResult comodule_hom(const Comodule& m, const Comodule& n);

/// Cotensor product P □_C Q as a subspace of the carrier of P⊗_A Q.
struct Cotensor {
  BalancedTensor pq;  // P ⊗_A Q
  Subspace space;     // equalizer inside the carrier
};
Cotensor cotensor(const Comodule& p, const LeftComodule& q);

/// Cointegral witness: A-bilinear γ with c⁽¹⁾γ(c⁽²⁾⊗d) = γ(c⊗d⁽¹⁾)d⁽²⁾ and
/// γ∘Δ = ε; μ is the induced bicolinear retraction of Δ.
struct CosepWitness {
  bool coseparable = false;
  Mat gamma;  // A <- cc-carrier
  Mat mu;     // C <- cc-carrier
  Report report{"coseparability"};
};
CosepWitness coseparability_solve(const Coring& c);

/// C as a non-unital k-algebra with product μ.
Algebra cosep_ring(const Coring& c, const CosepWitness& w);

/// Right C-module structure m·c = m⁽⁰⁾γ(m⁽¹⁾⊗c) on a comodule.
Bimodule cosep_action(const Comodule& m, const CosepWitness& w, const AlgebraPtr& c_ring);
/// Left C-module structure c·q = γ(c⊗q⁽⁻¹⁾)q⁽⁰⁾ on a left comodule.
Bimodule cosep_action_left(const LeftComodule& m, const CosepWitness& w, const AlgebraPtr& c_ring);

/// Round trips of the category isomorphism M^C ≅ M_C on a finite catalog.
Report cosep_category_iso(const Coring& c, const CosepWitness& w,
                          const std::vector<Comodule>& catalog);

/// β : P⊗_C Q -> P□_C Q mutually inverse with π∘ι.
Report cosep_tensor_iso(const Comodule& p, const LeftComodule& q, const CosepWitness& w);

/// Sweedler coring A⊗_B A of a split extension ι: B -> A with retraction E.
struct SweedlerData {
  Coring coring;
  CosepWitness witness;
  Quotient carrier;  // of A ⊗_k A
  Report report{"sweedler-coring"};
};
SweedlerData sweedler_coring(const AlgebraPtr& b, const AlgebraPtr& a, const Mat& iota,
                             const Mat& retraction);

struct HopfAlgebra {
  Algebra H;       // unital
  Mat delta;       // (dim H)² <- dim H, flat into H⊗_k H
  Mat eps;         // 1 <- dim H
  Mat antipode;    // dim H <- dim H
};
Report validate_hopf(const HopfAlgebra& h);
HopfAlgebra cyclic_group_hopf(const Field& f, std::size_t n);

/// The coseparable H-coring H⊗_k H whose comodules are Hopf modules.
struct HopfCoringData {
  CoringPtr coring;
  AlgebraPtr base;  // A = H
  CosepWitness witness;
  Report report{"hopf-module-coring"};
};
HopfCoringData hopf_module_coring(const HopfAlgebra& h);

// shared low-level helpers
Mat left_collapse(const Bimodule& m);   // flat(A, M) -> M
Mat right_collapse(const Bimodule& m);  // flat(M, A) -> M

}  // namespace corita
