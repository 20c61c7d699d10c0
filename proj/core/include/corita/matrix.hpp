#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "corita/field.hpp"

namespace corita {

using Vec = std::vector<Rat>;

/// Dense matrix over a fixed Field, row-major, entries always canonical.
class Mat {
 public:
  Mat() : field_(Field::rationals()) {}
  Mat(const Field& f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), e_(rows * cols) {}

  static Mat identity(const Field& f, std::size_t n);
  /// Build from integer literals (handy in tests and builtin examples).
  static Mat of(const Field& f, std::size_t rows, std::size_t cols,
                std::initializer_list<long> entries);
  static Mat from_rows(const Field& f, const std::vector<Vec>& rows, std::size_t cols);
  static Mat row_vector(const Field& f, const Vec& v);
  static Mat col_vector(const Field& f, const Vec& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  const Rat& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, const Rat& v) { e_[i * cols_ + j] = field_.canon(v); }
  const std::vector<Rat>& entries() const { return e_; }

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;
  Mat scaled(const Rat& c) const;
  Mat transpose() const;
  /// Kronecker product; index convention (i,j) -> i*o.dim + j on both sides.
  Mat kron(const Mat& o) const;

  Vec apply(const Vec& x) const;  // M·x, column-vector convention
  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  void set_row(std::size_t i, const Vec& v);

  Mat vstack(const Mat& o) const;
  Mat hstack(const Mat& o) const;

  bool is_zero() const;
  bool is_identity() const;
  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }

 private:
  Field field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> e_;
};

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
Vec add(const Field& f, const Vec& a, const Vec& b);
Vec sub(const Field& f, const Vec& a, const Vec& b);
Vec scale(const Field& f, const Rat& c, const Vec& a);
bool is_zero_vec(const Vec& v);

}  // namespace corita
