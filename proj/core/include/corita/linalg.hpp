#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "corita/matrix.hpp"

namespace corita {

struct BasedSpace {
  std::size_t dim = 0;
  std::string label;
};

/// Linear map codomain <- domain; matrix is codomain.dim x domain.dim and
/// acts on column vectors.
struct LinMap {
  BasedSpace domain;
  BasedSpace codomain;
  Mat matrix;

  LinMap() = default;
  LinMap(BasedSpace dom, BasedSpace cod, Mat m);
  Vec operator()(const Vec& x) const { return matrix.apply(x); }
};

LinMap compose(const LinMap& f, const LinMap& g);  // f after g
LinMap identity_map(const Field& f, const BasedSpace& v);

/// Subspace of an ambient based space, held as canonical rref basis rows.
struct Subspace {
  BasedSpace ambient;
  Mat basis;  // rref rows, linearly independent

  std::size_t dim() const { return basis.rows(); }
};

/// V / relations with a chosen section.
///
/// projection ∘ section = id on the quotient space; kernel(projection) equals
/// the relation span. The section maps quotient basis vectors onto the
/// rref-complement basis of the ambient space, which pins every downstream
/// carrier exactly.
struct Quotient {
  BasedSpace ambient;
  Subspace relations;
  BasedSpace space;
  LinMap projection;  // ambient -> space
  LinMap section;     // space -> ambient
};

/// Incremental row-reduced span. Rows live in k^dim, are stored sparsely and
/// kept in echelon form; `basis()` returns the canonical rref matrix, which
/// is independent of insertion order.
class SpanBuilder {
 public:
  SpanBuilder(const Field& f, std::size_t dim) : field_(f), dim_(dim) {}

  bool add(const Vec& v);  // true if the span grew
  bool add_sparse(std::vector<std::pair<std::size_t, Rat>> v);
  bool contains(const Vec& v) const;
  Vec reduce(const Vec& v) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }
  const Field& field() const { return field_; }
  Mat basis() const;
  std::vector<std::size_t> pivots() const;

 private:
  using SparseRow = std::vector<std::pair<std::size_t, Rat>>;
  SparseRow reduce_sparse(SparseRow v) const;

  Field field_;
  std::size_t dim_;
  std::vector<SparseRow> rows_;  // echelon, normalized leading 1, sorted by pivot on demand
};

Subspace span_rows(const BasedSpace& ambient, const Mat& rows);
Subspace full_space(const Field& f, const BasedSpace& v);
Subspace zero_subspace(const Field& f, const BasedSpace& v);
bool subspace_contains(const Subspace& s, const Vec& v);
bool subspace_eq(const Subspace& a, const Subspace& b);
Subspace subspace_sum(const Subspace& a, const Subspace& b);

/// One solution of A·x = b (leftmost-pivot elimination, free variables zero),
/// or nullopt when the system is inconsistent. b may have several columns;
/// the result then solves A·X = b columnwise.
std::optional<Mat> rref_solve(const Mat& A, const Mat& b);

/// In-place reduced row echelon form; returns pivot column indices.
std::vector<std::size_t> rref(Mat& m);

Subspace kernel(const LinMap& f);
Subspace image(const LinMap& f);
std::size_t rank(const Mat& m);

/// Tensor product space with the index map (i,j) -> i*dimV + j.
BasedSpace tensor_space(const BasedSpace& u, const BasedSpace& v);
std::size_t tensor_index(std::size_t i, std::size_t j, std::size_t dim_v);

Quotient quotient_by(const Field& f, const BasedSpace& v, const Subspace& relations);

Subspace intersect(const Subspace& a, const Subspace& b);
bool is_iso(const LinMap& f);
std::optional<LinMap> try_inverse(const LinMap& f);
LinMap inverse(const LinMap& f);  // throws input_error if not an isomorphism

/// Push an ambient-level map through quotients: the induced map
/// dst.space <- src.space. Throws internal_error unless `phi` descends
/// (i.e. maps src relations into dst relations).
Mat induce(const Quotient& src, const Mat& phi, const Quotient& dst);
/// Same, codomain not a quotient.
Mat induce_to_plain(const Quotient& src, const Mat& phi);

/// Coordinates of v in the row space of `basis` (rref rows): pivot reads.
/// Throws internal_error if v is not in the span.
Vec coords_in_rref(const Mat& basis, const Vec& v);

/// Canonical flat-chain quotient: legs V_0 ⊗ ... ⊗ V_{n-1} modulo balancing
/// relations at each junction. Junction j supplies, per algebra basis
/// element, the right action on leg j and the left action on leg j+1; a
/// junction with no algebra (plain ⊗_k) passes an empty vector.
struct ChainJunction {
  std::vector<Mat> right_on_left;  // per algebra basis g: action on leg j
  std::vector<Mat> left_on_right;  // per algebra basis g: action on leg j+1
};
Quotient chain_quotient(const Field& f, const std::vector<std::size_t>& dims,
                        const std::vector<ChainJunction>& junctions,
                        const std::string& label = "");

/// Kronecker product of one map per leg, as a single flat matrix.
Mat leg_kron(const std::vector<Mat>& per_leg);

std::vector<std::size_t> flat_strides(const std::vector<std::size_t>& dims);
std::size_t flat_index(const std::vector<std::size_t>& idx, const std::vector<std::size_t>& strides);

}  // namespace corita
