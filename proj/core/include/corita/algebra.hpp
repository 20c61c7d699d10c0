#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "corita/linalg.hpp"
#include "corita/report.hpp"

namespace corita {

/// Finite-dimensional, possibly non-unital algebra over a Field, given by
/// structure constants: basis_product(i, j) is the coordinate vector of
/// e_i · e_j. A two-sided unit is optional; dim 0 is allowed.
class Algebra {
 public:
  Algebra() : Algebra(Field::rationals(), 0) {}
  Algebra(const Field& f, std::size_t dim, std::string label = "");

  const Field& field() const { return field_; }
  std::size_t dim() const { return space_.dim; }
  const BasedSpace& space() const { return space_; }
  const std::string& label() const { return space_.label; }

  void set_product(std::size_t i, std::size_t j, const Vec& v);
  const Vec& basis_product(std::size_t i, std::size_t j) const { return c_[i * dim() + j]; }

  Vec mul(const Vec& x, const Vec& y) const;
  Mat left_mult(const Vec& x) const;   // y -> x·y
  Mat right_mult(const Vec& x) const;  // y -> y·x
  Mat left_mult_basis(std::size_t g) const { return left_mult(unit_vec(dim(), g)); }
  Mat right_mult_basis(std::size_t g) const { return right_mult(unit_vec(dim(), g)); }
  /// All left (resp. right) multiplication operators by basis elements.
  std::vector<Mat> left_regular() const;
  std::vector<Mat> right_regular() const;

  void set_unit(const Vec& u);
  bool is_unital() const { return unit_.has_value(); }
  const std::optional<Vec>& unit() const { return unit_; }
  /// Solve for a two-sided unit; does not modify the algebra.
  std::optional<Vec> solve_unit() const;

  bool operator==(const Algebra& o) const;

 private:
  Field field_;
  BasedSpace space_;
  std::vector<Vec> c_;  // c_[i*dim+j] = coordinates of e_i e_j
  std::optional<Vec> unit_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

enum class Sidedness { Left, Right, TwoSided };

/// A subspace of an ambient algebra claimed closed under the ambient
/// multiplications on the stated side(s).
struct IdealWitness {
  AlgebraPtr ambient;
  Subspace subspace;
  Sidedness side = Sidedness::TwoSided;

  std::size_t dim() const { return subspace.dim(); }
};

/// Verdict for μ_R : R⊗_R R → R (or μ_{M,R} for a module).
struct FirmnessReport {
  Quotient carrier;           // R⊗_R R (resp. M⊗_R R) as an explicit quotient
  LinMap mu;                  // carrier.space -> R (resp. M)
  bool is_idempotent = false; // for modules: MR = M
  bool is_firm = false;
  std::optional<LinMap> d;    // inverse of mu when firm
  Subspace image_mr;          // MR (= R² for rings)
};

Report validate(const Algebra& a);
Algebra dorroh(const Algebra& r);

/// R² as a subspace plus the verdict R² = R.
struct IdempotencyReport {
  bool is_idempotent = false;
  Subspace square;
};
IdempotencyReport is_idempotent(const Algebra& r);

FirmnessReport firmness(const Algebra& r);

/// S = R⊗_R R with (r1⊗r'1)(r2⊗r'2) = r1r'1 ⊗ r2r'2, together with the
/// quotient that defines its carrier.
struct FirmSquare {
  Algebra algebra;
  Quotient carrier;
};
FirmSquare firm_square(const Algebra& r);

Report check_ideal(const IdealWitness& w);

/// Largest idempotent left ideal inside I, by iterating I_{n+1} = I·I_n to a
/// fixpoint. Also reports the dimension chain and iteration count.
struct CoreResult {
  IdealWitness core;
  std::vector<std::size_t> dim_chain;  // dims of I_1, I_2, ...
  std::size_t iterations = 0;          // multiplications performed
};
CoreResult idempotent_core(const IdealWitness& ideal);

/// Jacobson radical of a unital algebra in characteristic 0, via the trace
/// form of the left regular representation. Rejects prime characteristic.
Subspace radical_char0(const Algebra& a);

struct LocalUnitsReport {
  bool verdict = false;
  Vec witness;  // e with b_i·e = b_i for all basis b_i, when verdict holds
};
LocalUnitsReport has_right_local_units(const Algebra& b);

Algebra opposite(const Algebra& a);

/// Algebra structure on a multiplicatively closed subspace of `ambient`
/// (basis = the subspace's rref basis). Throws input_error when the subspace
/// is not closed.
Algebra subalgebra_on(const AlgebraPtr& ambient, const Subspace& s, const std::string& label);

/// Express an ambient-coordinates element in the basis of `s`.
Vec to_sub_coords(const Subspace& s, const Vec& ambient_vec);
Vec to_ambient_coords(const Subspace& s, const Vec& sub_vec);

// Stock constructions used across tests and the builtin examples.
Algebra base_field_algebra(const Field& f);
Algebra zero_algebra(const Field& f);
Algebra matrix_algebra(const Field& f, std::size_t n);     // basis E_{ab} at index a*n+b
Algebra product_field_algebra(const Field& f, std::size_t m);  // k × ... × k
Algebra nilpotent_line(const Field& f);                     // span{n}, n² = 0
Algebra dual_numbers(const Field& f);                       // k[n]/(n²)
Algebra upper_triangular_algebra(const Field& f, std::size_t n);
Algebra cyclic_group_algebra(const Field& f, std::size_t m);

}  // namespace corita
