#include "corita/linalg.hpp"

#include <algorithm>
#include <map>

namespace corita {

LinMap::LinMap(BasedSpace dom, BasedSpace cod, Mat m)
    : domain(std::move(dom)), codomain(std::move(cod)), matrix(std::move(m)) {
  if (matrix.rows() != codomain.dim || matrix.cols() != domain.dim)
    throw input_error("LinMap matrix shape does not match domain/codomain");
}

LinMap compose(const LinMap& f, const LinMap& g) {
  if (f.domain.dim != g.codomain.dim) throw input_error("compose: dimension mismatch");
  return LinMap(g.domain, f.codomain, f.matrix * g.matrix);
}

LinMap identity_map(const Field& f, const BasedSpace& v) {
  return LinMap(v, v, Mat::identity(f, v.dim));
}

// ---------------------------------------------------------------------------
// SpanBuilder

SpanBuilder::SparseRow SpanBuilder::reduce_sparse(SparseRow v) const {
  // rows_ is kept sorted by pivot; one ascending pass eliminates every pivot
  for (const SparseRow& row : rows_) {
    if (v.empty()) break;
    std::size_t p = row.front().first;
    auto it = std::lower_bound(v.begin(), v.end(), p,
                               [](const auto& a, std::size_t c) { return a.first < c; });
    if (it == v.end() || it->first != p) continue;
    Rat c = it->second;  // row is normalized to leading 1
    SparseRow out;
    out.reserve(v.size() + row.size());
    auto a = v.begin();
    auto b = row.begin();
    while (a != v.end() || b != row.end()) {
      if (b == row.end() || (a != v.end() && a->first < b->first)) {
        out.push_back(*a++);
      } else if (a == v.end() || b->first < a->first) {
        out.emplace_back(b->first, field_.mul(field_.neg(c), b->second));
        ++b;
      } else {
        Rat s = field_.sub(a->second, field_.mul(c, b->second));
        if (!s.is_zero()) out.emplace_back(a->first, s);
        ++a;
        ++b;
      }
    }
    v = std::move(out);
  }
  return v;
}

bool SpanBuilder::add_sparse(std::vector<std::pair<std::size_t, Rat>> v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseRow merged;
  for (auto& [i, c] : v) {
    if (i >= dim_) throw input_error("SpanBuilder: index out of range");
    if (!merged.empty() && merged.back().first == i)
      merged.back().second = field_.add(merged.back().second, c);
    else
      merged.emplace_back(i, field_.canon(c));
  }
  v = std::move(merged);
  v.erase(std::remove_if(v.begin(), v.end(), [](const auto& e) { return e.second.is_zero(); }),
          v.end());
  SparseRow r = reduce_sparse(std::move(v));
  if (r.empty()) return false;
  Rat lead = r.front().second;
  if (lead != 1) {
    Rat inv = field_.inv(lead);
    for (auto& [i, c] : r) c = field_.mul(inv, c);
  }
  auto pos = std::lower_bound(rows_.begin(), rows_.end(), r.front().first,
                              [](const SparseRow& row, std::size_t p) { return row.front().first < p; });
  rows_.insert(pos, std::move(r));
  return true;
}

bool SpanBuilder::add(const Vec& v) {
  if (v.size() != dim_) throw input_error("SpanBuilder: vector length mismatch");
  SparseRow r;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) r.emplace_back(i, v[i]);
  return add_sparse(std::move(r));
}

bool SpanBuilder::contains(const Vec& v) const {
  SparseRow r;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) r.emplace_back(i, field_.canon(v[i]));
  return reduce_sparse(std::move(r)).empty();
}

Vec SpanBuilder::reduce(const Vec& v) const {
  SparseRow r;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) r.emplace_back(i, field_.canon(v[i]));
  r = reduce_sparse(std::move(r));
  Vec out(dim_, Rat(0));
  for (const auto& [i, c] : r) out[i] = c;
  return out;
}

Mat SpanBuilder::basis() const {
  // back-substitute to full rref
  std::vector<SparseRow> rows = rows_;
  for (std::size_t i = rows.size(); i-- > 0;) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      std::size_t p = rows[j].front().first;
      auto it = std::lower_bound(rows[i].begin(), rows[i].end(), p,
                                 [](const auto& a, std::size_t c) { return a.first < c; });
      if (it == rows[i].end() || it->first != p) continue;
      Rat c = it->second;
      std::map<std::size_t, Rat> acc(rows[i].begin(), rows[i].end());
      for (const auto& [k, v] : rows[j]) {
        Rat s = field_.sub(acc.count(k) ? acc[k] : Rat(0), field_.mul(c, v));
        if (s.is_zero())
          acc.erase(k);
        else
          acc[k] = s;
      }
      rows[i].assign(acc.begin(), acc.end());
    }
  }
  Mat m(field_, rows.size(), dim_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [k, v] : rows[i]) m.set(i, k, v);
  return m;
}

std::vector<std::size_t> SpanBuilder::pivots() const {
  std::vector<std::size_t> p;
  p.reserve(rows_.size());
  for (const SparseRow& r : rows_) p.push_back(r.front().first);
  return p;
}

// ---------------------------------------------------------------------------
// subspaces

Subspace span_rows(const BasedSpace& ambient, const Mat& rows) {
  SpanBuilder sb(rows.field(), ambient.dim);
  for (std::size_t i = 0; i < rows.rows(); ++i) sb.add(rows.row(i));
  return Subspace{ambient, sb.basis()};
}

Subspace full_space(const Field& f, const BasedSpace& v) {
  return Subspace{v, Mat::identity(f, v.dim)};
}

Subspace zero_subspace(const Field& f, const BasedSpace& v) {
  return Subspace{v, Mat(f, 0, v.dim)};
}

bool subspace_contains(const Subspace& s, const Vec& v) {
  SpanBuilder sb(s.basis.field(), s.ambient.dim);
  for (std::size_t i = 0; i < s.basis.rows(); ++i) sb.add(s.basis.row(i));
  return sb.contains(v);
}

bool subspace_eq(const Subspace& a, const Subspace& b) {
  if (a.ambient.dim != b.ambient.dim) return false;
  return a.basis == b.basis;  // rref bases are canonical
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient.dim != b.ambient.dim) throw input_error("subspace_sum: ambient mismatch");
  SpanBuilder sb(a.basis.field(), a.ambient.dim);
  for (std::size_t i = 0; i < a.basis.rows(); ++i) sb.add(a.basis.row(i));
  for (std::size_t i = 0; i < b.basis.rows(); ++i) sb.add(b.basis.row(i));
  return Subspace{a.ambient, sb.basis()};
}

// ---------------------------------------------------------------------------
// elimination

std::vector<std::size_t> rref(Mat& m) {
  const Field& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t sel = r;
    while (sel < m.rows() && m.at(sel, c).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != r) {
      Vec tmp = m.row(sel);
      m.set_row(sel, m.row(r));
      m.set_row(r, tmp);
    }
    Rat inv = f.inv(m.at(r, c));
    m.set_row(r, scale(f, inv, m.row(r)));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Rat coef = m.at(i, c);
      m.set_row(i, sub(f, m.row(i), scale(f, coef, m.row(r))));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(const Mat& m) {
  Mat c = m;
  return rref(c).size();
}

std::optional<Mat> rref_solve(const Mat& A, const Mat& b) {
  if (A.rows() != b.rows()) throw input_error("rref_solve: row count mismatch");
  Mat aug = A.hstack(b);
  std::vector<std::size_t> piv = rref(aug);
  for (std::size_t p : piv)
    if (p >= A.cols()) return std::nullopt;  // pivot in the rhs block: inconsistent
  Mat x(A.field(), A.cols(), b.cols());
  for (std::size_t i = 0; i < piv.size(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x.set(piv[i], j, aug.at(i, A.cols() + j));
  return x;
}

Subspace kernel(const LinMap& f) {
  Mat m = f.matrix;
  std::vector<std::size_t> piv = rref(m);
  std::vector<bool> is_piv(m.cols(), false);
  for (std::size_t p : piv) is_piv[p] = true;
  SpanBuilder sb(m.field(), m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (is_piv[j]) continue;
    Vec v(m.cols(), Rat(0));
    v[j] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = m.field().neg(m.at(i, j));
    sb.add(v);
  }
  return Subspace{f.domain, sb.basis()};
}

Subspace image(const LinMap& f) {
  return span_rows(f.codomain, f.matrix.transpose());
}

// ---------------------------------------------------------------------------
// tensor / quotient

BasedSpace tensor_space(const BasedSpace& u, const BasedSpace& v) {
  std::string label = u.label.empty() || v.label.empty() ? "" : u.label + "(x)" + v.label;
  return BasedSpace{u.dim * v.dim, label};
}

std::size_t tensor_index(std::size_t i, std::size_t j, std::size_t dim_v) {
  return i * dim_v + j;
}

Quotient quotient_by(const Field& f, const BasedSpace& v, const Subspace& relations) {
  if (relations.ambient.dim != v.dim) throw input_error("quotient_by: relations not in ambient");
  Subspace rel = span_rows(v, relations.basis);  // force canonical rref
  std::vector<std::size_t> piv;
  for (std::size_t i = 0; i < rel.basis.rows(); ++i) {
    std::size_t j = 0;
    while (j < v.dim && rel.basis.at(i, j).is_zero()) ++j;
    piv.push_back(j);
  }
  std::vector<bool> is_piv(v.dim, false);
  for (std::size_t p : piv) is_piv[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < v.dim; ++j)
    if (!is_piv[j]) free_cols.push_back(j);

  BasedSpace q{free_cols.size(), v.label.empty() ? "" : v.label + "/~"};
  Mat proj(f, q.dim, v.dim);
  for (std::size_t a = 0; a < free_cols.size(); ++a) proj.set(a, free_cols[a], Rat(1));
  for (std::size_t i = 0; i < piv.size(); ++i)
    for (std::size_t a = 0; a < free_cols.size(); ++a)
      proj.set(a, piv[i], f.neg(rel.basis.at(i, free_cols[a])));
  Mat sect(f, v.dim, q.dim);
  for (std::size_t a = 0; a < free_cols.size(); ++a) sect.set(free_cols[a], a, Rat(1));

  return Quotient{v, rel, q, LinMap(v, q, proj), LinMap(q, v, sect)};
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient.dim != b.ambient.dim) throw input_error("intersect: shared ambient required");
  const Field& f = a.basis.field();
  std::size_t r1 = a.basis.rows(), r2 = b.basis.rows();
  Mat combined = a.basis.transpose().hstack(b.basis.transpose().scaled(Rat(-1)));
  BasedSpace dom{r1 + r2, ""};
  Subspace null = kernel(LinMap(dom, a.ambient, combined));
  SpanBuilder sb(f, a.ambient.dim);
  Mat a_cols = a.basis.transpose();
  for (std::size_t i = 0; i < null.basis.rows(); ++i) {
    Vec full = null.basis.row(i);
    Vec coeff(full.begin(), full.begin() + r1);
    sb.add(a_cols.apply(coeff));
  }
  return Subspace{a.ambient, sb.basis()};
}

bool is_iso(const LinMap& f) {
  return f.domain.dim == f.codomain.dim && rank(f.matrix) == f.domain.dim;
}

std::optional<LinMap> try_inverse(const LinMap& f) {
  if (f.domain.dim != f.codomain.dim) return std::nullopt;
  auto x = rref_solve(f.matrix, Mat::identity(f.matrix.field(), f.codomain.dim));
  if (!x) return std::nullopt;
  // rref_solve returns a right inverse; for square full-rank it is two-sided
  if (!(f.matrix * *x).is_identity() || !(*x * f.matrix).is_identity()) return std::nullopt;
  return LinMap(f.codomain, f.domain, *x);
}

LinMap inverse(const LinMap& f) {
  auto inv = try_inverse(f);
  if (!inv) throw input_error("inverse: map is not an isomorphism");
  return *inv;
}

Mat induce(const Quotient& src, const Mat& phi, const Quotient& dst) {
  if (phi.cols() != src.ambient.dim || phi.rows() != dst.ambient.dim)
    throw input_error("induce: ambient map shape mismatch");
  Mat down = dst.projection.matrix * phi;
  if (down * src.section.matrix * src.projection.matrix != down)
    throw internal_error("induce: map does not descend to the quotient");
  return down * src.section.matrix;
}

Mat induce_to_plain(const Quotient& src, const Mat& phi) {
  if (phi.cols() != src.ambient.dim) throw input_error("induce_to_plain: shape mismatch");
  if (phi * src.section.matrix * src.projection.matrix != phi)
    throw internal_error("induce_to_plain: map does not descend to the quotient");
  return phi * src.section.matrix;
}

Vec coords_in_rref(const Mat& basis, const Vec& v) {
  const Field& f = basis.field();
  Vec coords(basis.rows(), Rat(0));
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    std::size_t p = 0;
    while (p < basis.cols() && basis.at(i, p).is_zero()) ++p;
    if (p == basis.cols()) throw internal_error("coords_in_rref: zero basis row");
    coords[i] = f.canon(v[p]);
  }
  Vec check(basis.cols(), Rat(0));
  for (std::size_t i = 0; i < basis.rows(); ++i)
    if (!coords[i].is_zero()) check = add(f, check, scale(f, coords[i], basis.row(i)));
  for (std::size_t j = 0; j < basis.cols(); ++j)
    if (f.canon(v[j]) != check[j]) throw internal_error("coords_in_rref: vector not in span");
  return coords;
}

// ---------------------------------------------------------------------------
// flat chains

std::vector<std::size_t> flat_strides(const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> s(dims.size(), 1);
  for (std::size_t i = dims.size(); i-- > 1;) s[i - 1] = s[i] * dims[i];
  return s;
}

std::size_t flat_index(const std::vector<std::size_t>& idx, const std::vector<std::size_t>& strides) {
  std::size_t k = 0;
  for (std::size_t i = 0; i < idx.size(); ++i) k += idx[i] * strides[i];
  return k;
}

Mat leg_kron(const std::vector<Mat>& per_leg) {
  if (per_leg.empty()) throw input_error("leg_kron: no legs");
  Mat acc = per_leg[0];
  for (std::size_t i = 1; i < per_leg.size(); ++i) acc = acc.kron(per_leg[i]);
  return acc;
}

Quotient chain_quotient(const Field& f, const std::vector<std::size_t>& dims,
                        const std::vector<ChainJunction>& junctions, const std::string& label) {
  if (junctions.size() + 1 != dims.size())
    throw input_error("chain_quotient: need one junction between consecutive legs");
  std::size_t total = 1;
  for (std::size_t d : dims) total *= d;
  std::vector<std::size_t> strides = flat_strides(dims);
  SpanBuilder rel(f, total);

  std::vector<std::size_t> idx(dims.size(), 0);
  for (std::size_t j = 0; total > 0 && j < junctions.size(); ++j) {
    const ChainJunction& jn = junctions[j];
    if (jn.right_on_left.size() != jn.left_on_right.size())
      throw input_error("chain_quotient: junction action count mismatch");
    for (std::size_t g = 0; g < jn.right_on_left.size(); ++g) {
      const Mat& Rg = jn.right_on_left[g];
      const Mat& Lg = jn.left_on_right[g];
      if (Rg.rows() != dims[j] || Rg.cols() != dims[j] || Lg.rows() != dims[j + 1] ||
          Lg.cols() != dims[j + 1])
        throw input_error("chain_quotient: action matrix shape mismatch");
      // one generator per flat basis tuple: (g acting on leg j) - (g acting on leg j+1)
      std::fill(idx.begin(), idx.end(), 0);
      while (true) {
        std::size_t base = flat_index(idx, strides);
        std::size_t base_j = base - idx[j] * strides[j];
        std::size_t base_j1 = base - idx[j + 1] * strides[j + 1];
        std::vector<std::pair<std::size_t, Rat>> gen;
        for (std::size_t r = 0; r < dims[j]; ++r) {
          const Rat& c = Rg.at(r, idx[j]);
          if (!c.is_zero()) gen.emplace_back(base_j + r * strides[j], c);
        }
        for (std::size_t r = 0; r < dims[j + 1]; ++r) {
          const Rat& c = Lg.at(r, idx[j + 1]);
          if (!c.is_zero()) gen.emplace_back(base_j1 + r * strides[j + 1], f.neg(c));
        }
        rel.add_sparse(std::move(gen));
        // advance tuple
        bool done = true;
        for (std::size_t k = dims.size(); k-- > 0;) {
          if (++idx[k] < dims[k]) {
            done = false;
            break;
          }
          idx[k] = 0;
        }
        if (done) break;
      }
    }
  }
  BasedSpace ambient{total, label};
  return quotient_by(f, ambient, Subspace{ambient, rel.basis()});
}

}  // namespace corita
