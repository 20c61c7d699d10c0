#pragma once

#include "corita/algebra.hpp"

namespace corita {

enum class Side { Left, Right };

/// Finite-dimensional one- or two-sided module over possibly non-unital
/// algebras. Actions are stored as one matrix per acting-algebra basis
/// element; a missing algebra means no action on that side.
struct Bimodule {
  AlgebraPtr left;   // may be null
  AlgebraPtr right;  // may be null
  BasedSpace space;
  std::vector<Mat> left_act;   // left_act[g] : m -> e_g·m
  std::vector<Mat> right_act;  // right_act[g]: m -> m·e_g

  std::size_t dim() const { return space.dim; }
  const Field& field() const;

  Mat left_action(const Vec& a) const;   // Σ a_g · left_act[g]
  Mat right_action(const Vec& a) const;
  Vec act_left(const Vec& a, const Vec& m) const { return left_action(a).apply(m); }
  Vec act_right(const Vec& m, const Vec& a) const { return right_action(a).apply(m); }
};

/// A linear map between module carriers together with the claimed linearity.
struct ModMap {
  enum class Linearity { Left, Right, Bi };
  Bimodule source;
  Bimodule target;
  LinMap map;
  Linearity linearity = Linearity::Right;
};

/// Bilinear form P ⊗_k Q -> target, balanced over `middle`.
struct BalancedForm {
  Bimodule P;
  Bimodule Q;
  AlgebraPtr middle;   // may be null (plain ⊗_k)
  Bimodule target;
  Mat form;            // target.dim x (dimP·dimQ) flat matrix

  Vec eval(const Vec& p, const Vec& q) const;
};

Report validate_module(const Bimodule& m);
Report validate_mod_map(const ModMap& f);
Report validate_balanced_form(const BalancedForm& f);

/// M ⊗_R N as an explicit quotient carrier with the residual outer actions.
struct BalancedTensor {
  Quotient carrier;   // of the flat space M ⊗_k N
  Bimodule result;    // carrier space, M.left and N.right actions
};
BalancedTensor tensor_over(const Bimodule& m, const AlgebraPtr& r, const Bimodule& n);

/// Thm-level comparison M⊗_R N ≅ M⊗_S N for S = R⊗_R R, R idempotent.
Report tensor_square_comparison(const Bimodule& m, const AlgebraPtr& r, const Bimodule& n);

/// Hom space between modules over the shared algebra on `side`.
/// Map matrices are flattened row-major: entry (i,j) of F at index i*dimM+j.
struct HomResult {
  Subspace maps;               // solution space inside Hom_k(M, N)
  Bimodule module;             // carrier with residual actions
  std::optional<Algebra> endo; // composition algebra when source == target
};
HomResult hom(const Bimodule& m, const Bimodule& n, Side side);

FirmnessReport module_firmness(const Bimodule& m, const AlgebraPtr& r);

/// Firm right R-module extended to a right A-module along a right-ideal
/// witness, via m·a = m^r(ra). Returns the extended module; throws on a
/// non-firm input.
Bimodule functor_j(const Bimodule& m, const IdealWitness& r_in_a);
/// The composite check: extending then restricting recovers the input.
Report functor_j_roundtrip(const Bimodule& m, const IdealWitness& r_in_a);

Report tensor_lemma_check(const Bimodule& m, const IdealWitness& r_in_a, const Bimodule& p);

/// Projectivity by solvability of a splitting of the free cover A^{dim M} ↠ M.
/// Non-unital acting algebras are handled through the Dorroh extension.
bool is_projective(const Bimodule& m, Side side);

struct FlatnessReport {
  Verdict verdict = Verdict::Unmet;
  bool projective = false;
  bool trace_full = false;
  std::string note;
};
/// Faithful flatness over characteristic 0: projective and the trace ideal
/// of the module equals the whole acting algebra.
FlatnessReport is_faithfully_flat(const Bimodule& m, Side side);

// construction helpers -------------------------------------------------------

Bimodule regular_bimodule(const AlgebraPtr& a);
Bimodule free_right_module(const AlgebraPtr& a, std::size_t n);
Bimodule right_module(const AlgebraPtr& a, std::size_t dim, std::vector<Mat> acts,
                      const std::string& label = "");
Bimodule left_module(const AlgebraPtr& a, std::size_t dim, std::vector<Mat> acts,
                     const std::string& label = "");
Bimodule zero_right_action_module(const AlgebraPtr& a, std::size_t dim,
                                  const std::string& label = "");
/// M over R turned into a module over dorroh(R): m·(r,α) = m·r + α·m.
Bimodule dorroh_extend_right(const Bimodule& m, const AlgebraPtr& r_hat);
/// Restrict the right action of M along an ideal witness (the new acting
/// algebra is subalgebra_on the witness).
Bimodule restrict_right(const Bimodule& m, const IdealWitness& w, const AlgebraPtr& sub);
Bimodule restrict_left(const Bimodule& m, const IdealWitness& w, const AlgebraPtr& sub);
Bimodule direct_sum(const Bimodule& a, const Bimodule& b);
/// Forget one side of the actions.
Bimodule forget_left(const Bimodule& m);
Bimodule forget_right(const Bimodule& m);

/// Is `f`, given as a target.dim x source.dim matrix, linear over the stated
/// side actions?
bool commutes_with_actions(const Bimodule& source, const Bimodule& target, const Mat& f,
                           ModMap::Linearity lin);

// row-major (un)flattening of map matrices, shared by the hom machinery
Mat unflatten(const Field& f, const Vec& v, std::size_t rows, std::size_t cols);
Vec flatten(const Mat& m);

}  // namespace corita
