#pragma once

#include <functional>

#include "corita/bimodule.hpp"

namespace corita {

/// Sextuple (A, A', P, Q, τ, σ): P an A-A' bimodule, Q an A'-A bimodule,
/// τ: P⊗_{A'}Q -> A and σ: Q⊗_A P -> A' balanced bilinear forms subject to
/// the two mixed associativity squares.
struct MoritaContext {
  AlgebraPtr A;
  AlgebraPtr Ap;
  Bimodule P;
  Bimodule Q;
  BalancedForm wt;  // τ
  BalancedForm bt;  // σ

  Vec tau(const Vec& p, const Vec& q) const { return wt.eval(p, q); }
  Vec sigma(const Vec& q, const Vec& p) const { return bt.eval(q, p); }
};

/// Convenience constructor: forms given as flat matrices into the ring
/// coordinates, targets the regular bimodules.
MoritaContext make_context(const AlgebraPtr& a, const AlgebraPtr& ap, Bimodule p, Bimodule q,
                           const Mat& tau_flat, const Mat& sigma_flat);

MoritaContext swap_context(const MoritaContext& ctx);

Report validate_context(const MoritaContext& ctx);

struct ImageRings {
  IdealWitness a_image;   // PτQ inside A
  IdealWitness ap_image;  // QσP inside A'
};
ImageRings image_rings(const MoritaContext& ctx);

/// The bar restriction (Ā, Ā', P, Q, τ̄, σ̄) onto the connecting images.
struct BarContext {
  MoritaContext context;
  AlgebraPtr a_bar;
  AlgebraPtr ap_bar;
  ImageRings images;
};
BarContext restrict_to_images(const MoritaContext& ctx);

/// ω_M : M⊗_A P⊗_{A'} Q -> M (the composite μ∘(M⊗τ) on the balanced carrier).
struct OmegaResult {
  Quotient carrier;
  LinMap map;
};
OmegaResult omega(const MoritaContext& ctx, const Bimodule& m);
/// β_N : N⊗_{A'} Q⊗_A P -> N.
OmegaResult beta(const MoritaContext& ctx, const Bimodule& n);

/// Lemma-level biconditional: ω_M iso exactly on firm modules, over a
/// context whose τ is surjective.
Report omegabeta_check(const MoritaContext& ctx, const std::vector<Bimodule>& catalog);

/// The B-reduced context (W, B, P⊗_B B, B⊗_B Q, τ̄, σ̄) for an idempotent
/// left ideal B of the image ring QσP, with the Lemma identities verified.
struct ReducedContext {
  MoritaContext base;
  IdealWitness b;         // inside A'
  IdealWitness w;         // inside A
  AlgebraPtr b_alg;
  AlgebraPtr w_alg;
  MoritaContext context;  // the reduced sextuple over (w_alg, b_alg)
  Quotient p_carrier;     // of P⊗B
  Quotient q_carrier;     // of B⊗Q
  bool tau_surjective = false, sigma_surjective = false;
  bool tau_bijective = false, sigma_bijective = false;
  Report lemma;           // the B/W identities
};
ReducedContext reduce_by_ideal(const MoritaContext& ctx, const Subspace& b_in_ap);

/// The second reduced form over the firm squares (W̃, B̃, ...), strict by
/// construction; strictness re-verified.
struct SecondReduced {
  MoritaContext context;
  AlgebraPtr w_tilde;
  AlgebraPtr b_tilde;
  FirmSquare w_square;
  FirmSquare b_square;
  bool strict = false;
};
SecondReduced second_reduced(const ReducedContext& red);

/// Round trips of the Kato–Ohtake equivalence over the reduced context, on
/// finite catalogs of firm modules on each side.
Report kato_ohtake_verify(const ReducedContext& red, const std::vector<Bimodule>& firm_w_modules,
                          const std::vector<Bimodule>& firm_b_modules);

/// Materializes the equivalent data of the reduction-existence lemma for a
/// candidate B (supplied, or discovered through the idempotent core of QσP).
Report reduction_conditions(const MoritaContext& ctx, const std::optional<Subspace>& b_opt);

/// The firm-ring Morita theorems (i)-(vii) checked on a context with firm A
/// and surjective τ. Returns the unit u of (i) alongside the report.
struct MoritafirmResult {
  Report report{"moritafirm"};
  Mat u;                // A -> carrier(P⊗_{A'}Q)
  Quotient pq_carrier;  // the carrier u maps into
};
MoritafirmResult moritafirm_checks(const MoritaContext& ctx, const std::vector<Bimodule>& a_catalog,
                                   const std::vector<Bimodule>& ap_catalog);

/// Dual-basis data of a firm left ideal R ⊆ PτQ in a context of unital
/// rings: ŭ with τ∘ŭ = id_R, and the multiplicative ĵ into
/// (R⊗_R P)⊗_{A'}(R⊗_R P)*.
struct FirmIdealDualBasis {
  Report report{"firm-ideal-dual-basis"};
  Mat u_breve;          // R-coords -> carrier(P⊗_{A'}Q)
  BalancedTensor pq;    // P⊗_{A'}Q with its structure
  Quotient pq_carrier;
  AlgebraPtr r_alg;
  IdealWitness r;       // inside A
};
FirmIdealDualBasis firm_ideal_dualbasis(const MoritaContext& ctx, const Subspace& r_in_a);

/// Matrix of a balanced form on the carrier of its balanced tensor product.
Mat form_on_carrier(const Quotient& carrier, const Mat& form_flat);

/// Build a matrix column-by-column from an evaluator on flat indices.
Mat matrix_from_columns(const Field& f, std::size_t rows, std::size_t cols,
                        const std::function<Vec(std::size_t)>& column);

/// Firmness of a left module, through the right module over the opposite ring.
FirmnessReport module_firmness_left(const Bimodule& m, const AlgebraPtr& r);

/// The unit u : A -> P⊗_{A'}Q of the firm Morita theorem, constructed by
/// (μ_{A,P}⊗Q)∘(A⊗τ)^{-1}∘d_A. Fails (ok = false) when A is not firm or
/// A⊗τ is not invertible.
struct UnitU {
  bool ok = false;
  std::string why;
  Mat u;
  Quotient pq_carrier;
  Mat tau_on_carrier;
  BalancedTensor pq;  // P⊗_{A'}Q with its bimodule structure
};
UnitU compute_unit_u(const MoritaContext& ctx);

}  // namespace corita
