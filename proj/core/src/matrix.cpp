#include "corita/matrix.hpp"

namespace corita {

namespace {
void check_same_field(const Field& a, const Field& b) {
  if (a != b) throw input_error("mixed fields: " + a.name() + " vs " + b.name());
}
}  // namespace

Mat Mat::identity(const Field& f, std::size_t n) {
  Mat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Rat(1));
  return m;
}

Mat Mat::of(const Field& f, std::size_t rows, std::size_t cols,
            std::initializer_list<long> entries) {
  if (entries.size() != rows * cols) throw input_error("entry count mismatch in Mat::of");
  Mat m(f, rows, cols);
  std::size_t k = 0;
  for (long v : entries) {
    m.e_[k] = f.from_long(v);
    ++k;
  }
  return m;
}

Mat Mat::from_rows(const Field& f, const std::vector<Vec>& rows, std::size_t cols) {
  Mat m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw input_error("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Mat Mat::row_vector(const Field& f, const Vec& v) { return from_rows(f, {v}, v.size()); }

Mat Mat::col_vector(const Field& f, const Vec& v) {
  Mat m(f, v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m.set(i, 0, v[i]);
  return m;
}

Mat Mat::operator+(const Mat& o) const {
  check_same_field(field_, o.field_);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw input_error("shape mismatch in +");
  Mat r(field_, rows_, cols_);
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = field_.add(e_[k], o.e_[k]);
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  check_same_field(field_, o.field_);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw input_error("shape mismatch in -");
  Mat r(field_, rows_, cols_);
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = field_.sub(e_[k], o.e_[k]);
  return r;
}

Mat Mat::operator*(const Mat& o) const {
  check_same_field(field_, o.field_);
  if (cols_ != o.rows_) throw input_error("shape mismatch in *");
  Mat r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& a = e_[i * cols_ + k];
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Rat& b = o.e_[k * o.cols_ + j];
        if (b.is_zero()) continue;
        r.e_[i * o.cols_ + j] = field_.add(r.e_[i * o.cols_ + j], field_.mul(a, b));
      }
    }
  return r;
}

Mat Mat::scaled(const Rat& c) const {
  Mat r(field_, rows_, cols_);
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = field_.mul(e_[k], c);
  return r;
}

Mat Mat::transpose() const {
  Mat r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.e_[j * rows_ + i] = e_[i * cols_ + j];
  return r;
}

Mat Mat::kron(const Mat& o) const {
  check_same_field(field_, o.field_);
  Mat r(field_, rows_ * o.rows_, cols_ * o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Rat& a = e_[i * cols_ + j];
      if (a.is_zero()) continue;
      for (std::size_t p = 0; p < o.rows_; ++p)
        for (std::size_t q = 0; q < o.cols_; ++q) {
          const Rat& b = o.e_[p * o.cols_ + q];
          if (b.is_zero()) continue;
          r.e_[(i * o.rows_ + p) * r.cols_ + (j * o.cols_ + q)] = field_.mul(a, b);
        }
    }
  return r;
}

Vec Mat::apply(const Vec& x) const {
  if (x.size() != cols_) throw input_error("vector length mismatch in apply");
  Vec r(rows_, Rat(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Rat& a = e_[i * cols_ + j];
      if (a.is_zero() || x[j].is_zero()) continue;
      r[i] = field_.add(r[i], field_.mul(a, x[j]));
    }
  return r;
}

Vec Mat::row(std::size_t i) const {
  return Vec(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_);
}

Vec Mat::col(std::size_t j) const {
  Vec r(rows_);
  for (std::size_t i = 0; i < rows_; ++i) r[i] = e_[i * cols_ + j];
  return r;
}

void Mat::set_row(std::size_t i, const Vec& v) {
  if (v.size() != cols_) throw input_error("row length mismatch");
  for (std::size_t j = 0; j < cols_; ++j) set(i, j, v[j]);
}

Mat Mat::vstack(const Mat& o) const {
  check_same_field(field_, o.field_);
  if (cols_ != o.cols_) throw input_error("column mismatch in vstack");
  Mat r(field_, rows_ + o.rows_, cols_);
  r.e_ = e_;
  r.e_.insert(r.e_.end(), o.e_.begin(), o.e_.end());
  return r;
}

Mat Mat::hstack(const Mat& o) const {
  check_same_field(field_, o.field_);
  if (rows_ != o.rows_) throw input_error("row mismatch in hstack");
  Mat r(field_, rows_, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r.e_[i * r.cols_ + j] = e_[i * cols_ + j];
    for (std::size_t j = 0; j < o.cols_; ++j) r.e_[i * r.cols_ + cols_ + j] = o.e_[i * o.cols_ + j];
  }
  return r;
}

bool Mat::is_zero() const {
  for (const Rat& v : e_)
    if (!v.is_zero()) return false;
  return true;
}

bool Mat::is_identity() const {
  if (rows_ != cols_) return false;
  return *this == identity(field_, rows_);
}

bool Mat::operator==(const Mat& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

Vec zero_vec(std::size_t n) { return Vec(n, Rat(0)); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n, Rat(0));
  v[i] = 1;
  return v;
}

Vec add(const Field& f, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw input_error("vector length mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
  return r;
}

Vec sub(const Field& f, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw input_error("vector length mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.sub(a[i], b[i]);
  return r;
}

Vec scale(const Field& f, const Rat& c, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(c, a[i]);
  return r;
}

bool is_zero_vec(const Vec& v) {
  for (const Rat& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace corita
