#include "corita/algebra.hpp"

#include <algorithm>
#include <array>

namespace corita {

Algebra::Algebra(const Field& f, std::size_t dim, std::string label)
    : field_(f), space_{dim, std::move(label)}, c_(dim * dim, zero_vec(dim)) {}

void Algebra::set_product(std::size_t i, std::size_t j, const Vec& v) {
  if (i >= dim() || j >= dim() || v.size() != dim()) throw input_error("set_product: bad indices");
  Vec w(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) w[k] = field_.canon(v[k]);
  c_[i * dim() + j] = std::move(w);
}

Vec Algebra::mul(const Vec& x, const Vec& y) const {
  if (x.size() != dim() || y.size() != dim()) throw input_error("Algebra::mul: length mismatch");
  Vec r = zero_vec(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (y[j].is_zero()) continue;
      Rat coef = field_.mul(x[i], y[j]);
      const Vec& p = basis_product(i, j);
      for (std::size_t k = 0; k < dim(); ++k)
        if (!p[k].is_zero()) r[k] = field_.add(r[k], field_.mul(coef, p[k]));
    }
  }
  return r;
}

Mat Algebra::left_mult(const Vec& x) const {
  Mat m(field_, dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    Vec col = mul(x, unit_vec(dim(), j));
    for (std::size_t k = 0; k < dim(); ++k) m.set(k, j, col[k]);
  }
  return m;
}

Mat Algebra::right_mult(const Vec& x) const {
  Mat m(field_, dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    Vec col = mul(unit_vec(dim(), j), x);
    for (std::size_t k = 0; k < dim(); ++k) m.set(k, j, col[k]);
  }
  return m;
}

std::vector<Mat> Algebra::left_regular() const {
  std::vector<Mat> v;
  v.reserve(dim());
  for (std::size_t g = 0; g < dim(); ++g) v.push_back(left_mult_basis(g));
  return v;
}

std::vector<Mat> Algebra::right_regular() const {
  std::vector<Mat> v;
  v.reserve(dim());
  for (std::size_t g = 0; g < dim(); ++g) v.push_back(right_mult_basis(g));
  return v;
}

void Algebra::set_unit(const Vec& u) {
  if (u.size() != dim()) throw input_error("set_unit: length mismatch");
  Vec w(u.size());
  for (std::size_t k = 0; k < u.size(); ++k) w[k] = field_.canon(u[k]);
  unit_ = std::move(w);
}

std::optional<Vec> Algebra::solve_unit() const {
  if (dim() == 0) return Vec{};
  // u with u·e_j = e_j and e_j·u = e_j for all j
  Mat lhs(field_, 0, dim());
  Mat rhs(field_, 0, 1);
  for (std::size_t j = 0; j < dim(); ++j) {
    Mat rj = right_mult_basis(j);  // u -> u·e_j, linear in u
    Mat lj = left_mult_basis(j);   // u -> e_j·u
    lhs = lhs.vstack(rj).vstack(lj);
    Mat target(field_, 2 * dim(), 1);
    target.set(j, 0, Rat(1));
    target.set(dim() + j, 0, Rat(1));
    rhs = rhs.vstack(target);
  }
  auto sol = rref_solve(lhs, rhs);
  if (!sol) return std::nullopt;
  return sol->col(0);
}

bool Algebra::operator==(const Algebra& o) const {
  return field_ == o.field_ && dim() == o.dim() && c_ == o.c_ && unit_ == o.unit_;
}

// ---------------------------------------------------------------------------

Report validate(const Algebra& a) {
  Report rep("validate-ring");
  std::size_t n = a.dim();
  std::vector<std::array<std::size_t, 3>> failures;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        Vec lhs = a.mul(a.basis_product(i, j), unit_vec(n, l));
        Vec rhs = a.mul(unit_vec(n, i), a.basis_product(j, l));
        if (lhs != rhs) failures.push_back({i, j, l});
      }
  Check& c = rep.add("associativity", failures.empty(),
                     failures.empty() ? "" : std::to_string(failures.size()) + " failing triples");
  if (!failures.empty()) {
    nlohmann::ordered_json w = nlohmann::ordered_json::array();
    for (const auto& t : failures) w.push_back({t[0], t[1], t[2]});
    c.witness = w;
  }
  if (a.is_unital()) {
    bool ok = true;
    const Vec& u = *a.unit();
    for (std::size_t j = 0; j < n; ++j) {
      Vec e = unit_vec(n, j);
      if (a.mul(u, e) != e || a.mul(e, u) != e) ok = false;
    }
    rep.add("two-sided unit", ok);
  }
  return rep;
}

Algebra dorroh(const Algebra& r) {
  std::size_t n = r.dim();
  Algebra out(r.field(), n + 1, r.label().empty() ? "dorroh" : r.label() + "^");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec p = r.basis_product(i, j);
      p.push_back(Rat(0));
      out.set_product(i, j, p);
    }
  for (std::size_t i = 0; i < n; ++i) {
    out.set_product(i, n, unit_vec(n + 1, i));
    out.set_product(n, i, unit_vec(n + 1, i));
  }
  out.set_product(n, n, unit_vec(n + 1, n));
  out.set_unit(unit_vec(n + 1, n));
  return out;
}

IdempotencyReport is_idempotent(const Algebra& r) {
  std::size_t n = r.dim();
  SpanBuilder sb(r.field(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) sb.add(r.basis_product(i, j));
  IdempotencyReport rep;
  rep.square = Subspace{r.space(), sb.basis()};
  rep.is_idempotent = sb.rank() == n;
  return rep;
}

namespace {
Mat flat_mult_matrix(const Algebra& r) {
  // R ⊗_k R -> R, e_i⊗e_j -> e_i e_j
  std::size_t n = r.dim();
  Mat m(r.field(), n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec& p = r.basis_product(i, j);
      for (std::size_t k = 0; k < n; ++k) m.set(k, i * n + j, p[k]);
    }
  return m;
}
}  // namespace

FirmnessReport firmness(const Algebra& r) {
  std::size_t n = r.dim();
  FirmnessReport rep;
  rep.carrier = chain_quotient(r.field(), {n, n},
                               {ChainJunction{r.right_regular(), r.left_regular()}},
                               r.label().empty() ? "RxR" : r.label() + "(x)" + r.label());
  Mat mu = induce_to_plain(rep.carrier, flat_mult_matrix(r));
  rep.mu = LinMap(rep.carrier.space, r.space(), mu);
  rep.image_mr = is_idempotent(r).square;
  rep.is_idempotent = rep.image_mr.dim() == n;
  auto inv = try_inverse(rep.mu);
  rep.is_firm = inv.has_value();
  if (inv) rep.d = *inv;
  return rep;
}

FirmSquare firm_square(const Algebra& r) {
  FirmnessReport fr = firmness(r);
  const Quotient& q = fr.carrier;
  std::size_t sd = q.space.dim;
  Mat mult = flat_mult_matrix(r);
  Algebra s(r.field(), sd, r.label().empty() ? "S" : r.label() + "⊗" + r.label());
  for (std::size_t a = 0; a < sd; ++a) {
    Vec ra = q.section.matrix.col(a);
    Vec ma = mult.apply(ra);  // r1·r'1 summed over the representative of u_a
    for (std::size_t b = 0; b < sd; ++b) {
      Vec rb = q.section.matrix.col(b);
      Vec mb = mult.apply(rb);
      // (r1⊗r'1)(r2⊗r'2) = r1r'1 ⊗ r2r'2
      Vec flat(r.dim() * r.dim(), Rat(0));
      for (std::size_t i = 0; i < r.dim(); ++i) {
        if (ma[i].is_zero()) continue;
        for (std::size_t j = 0; j < r.dim(); ++j)
          if (!mb[j].is_zero())
            flat[i * r.dim() + j] = r.field().mul(ma[i], mb[j]);
      }
      s.set_product(a, b, q.projection.matrix.apply(flat));
    }
  }
  return FirmSquare{std::move(s), q};
}

Report check_ideal(const IdealWitness& w) {
  Report rep("check-ideal");
  const Algebra& a = *w.ambient;
  const Mat& basis = w.subspace.basis;
  bool left_ok = true, right_ok = true;
  for (std::size_t g = 0; g < a.dim(); ++g) {
    for (std::size_t i = 0; i < basis.rows(); ++i) {
      Vec x = basis.row(i);
      if (!subspace_contains(w.subspace, a.mul(unit_vec(a.dim(), g), x))) left_ok = false;
      if (!subspace_contains(w.subspace, a.mul(x, unit_vec(a.dim(), g)))) right_ok = false;
    }
  }
  switch (w.side) {
    case Sidedness::Left: rep.add("A·I ⊆ I", left_ok); break;
    case Sidedness::Right: rep.add("I·A ⊆ I", right_ok); break;
    case Sidedness::TwoSided:
      rep.add("A·I ⊆ I", left_ok);
      rep.add("I·A ⊆ I", right_ok);
      break;
  }
  return rep;
}

CoreResult idempotent_core(const IdealWitness& ideal) {
  Report ideal_check = check_ideal(ideal);
  if (!ideal_check.passed()) throw input_error("idempotent_core: subspace is not an ideal of the claimed sidedness");
  const Algebra& a = *ideal.ambient;
  CoreResult res;
  Subspace cur = ideal.subspace;
  res.dim_chain.push_back(cur.dim());
  while (true) {
    SpanBuilder next(a.field(), a.dim());
    for (std::size_t i = 0; i < ideal.subspace.basis.rows(); ++i)
      for (std::size_t j = 0; j < cur.basis.rows(); ++j)
        next.add(a.mul(ideal.subspace.basis.row(i), cur.basis.row(j)));
    Subspace ns{a.space(), next.basis()};
    ++res.iterations;
    res.dim_chain.push_back(ns.dim());
    if (subspace_eq(ns, cur)) break;
    cur = ns;
  }
  res.core = IdealWitness{ideal.ambient, cur, Sidedness::Left};
  return res;
}

Subspace radical_char0(const Algebra& a) {
  if (!a.field().is_rational())
    throw input_error("radical_char0: only defined over characteristic 0");
  if (!a.is_unital()) throw input_error("radical_char0: algebra must be unital");
  std::size_t n = a.dim();
  std::vector<Mat> lm = a.left_regular();
  Mat gram(a.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Mat prod = lm[i] * lm[j];
      Rat tr(0);
      for (std::size_t k = 0; k < n; ++k) tr = a.field().add(tr, prod.at(k, k));
      gram.set(i, j, tr);
    }
  return kernel(LinMap(a.space(), a.space(), gram));
}

LocalUnitsReport has_right_local_units(const Algebra& b) {
  std::size_t n = b.dim();
  LocalUnitsReport rep;
  if (n == 0) {
    rep.verdict = true;
    return rep;
  }
  Mat lhs(b.field(), 0, n);
  Mat rhs(b.field(), 0, 1);
  for (std::size_t i = 0; i < n; ++i) {
    lhs = lhs.vstack(b.left_mult_basis(i));  // e -> b_i·e
    Mat t(b.field(), n, 1);
    t.set(i, 0, Rat(1));
    rhs = rhs.vstack(t);
  }
  auto sol = rref_solve(lhs, rhs);
  rep.verdict = sol.has_value();
  if (sol) rep.witness = sol->col(0);
  return rep;
}

Algebra opposite(const Algebra& a) {
  Algebra out(a.field(), a.dim(), a.label().empty() ? "op" : a.label() + "^op");
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) out.set_product(i, j, a.basis_product(j, i));
  if (a.is_unital()) out.set_unit(*a.unit());
  return out;
}

Vec to_sub_coords(const Subspace& s, const Vec& ambient_vec) {
  return coords_in_rref(s.basis, ambient_vec);
}

Vec to_ambient_coords(const Subspace& s, const Vec& sub_vec) {
  return s.basis.transpose().apply(sub_vec);
}

Algebra subalgebra_on(const AlgebraPtr& ambient, const Subspace& s, const std::string& label) {
  std::size_t d = s.dim();
  Algebra out(ambient->field(), d, label);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vec prod = ambient->mul(s.basis.row(i), s.basis.row(j));
      if (!subspace_contains(s, prod))
        throw input_error("subalgebra_on: subspace is not multiplicatively closed");
      out.set_product(i, j, to_sub_coords(s, prod));
    }
  auto u = out.solve_unit();
  if (u) out.set_unit(*u);
  return out;
}

// ---------------------------------------------------------------------------
// stock constructions

Algebra base_field_algebra(const Field& f) {
  Algebra a(f, 1, "k");
  a.set_product(0, 0, {Rat(1)});
  a.set_unit({Rat(1)});
  return a;
}

Algebra zero_algebra(const Field& f) { return Algebra(f, 0, "0"); }

Algebra matrix_algebra(const Field& f, std::size_t n) {
  Algebra a(f, n * n, "M_" + std::to_string(n));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) {
          Vec prod = zero_vec(n * n);
          if (q == r) prod[p * n + s] = 1;
          a.set_product(p * n + q, r * n + s, prod);
        }
  Vec u = zero_vec(n * n);
  for (std::size_t p = 0; p < n; ++p) u[p * n + p] = 1;
  a.set_unit(u);
  return a;
}

Algebra product_field_algebra(const Field& f, std::size_t m) {
  Algebra a(f, m, "k^" + std::to_string(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Vec prod = zero_vec(m);
      if (i == j) prod[i] = 1;
      a.set_product(i, j, prod);
    }
  Vec u(m, Rat(1));
  a.set_unit(u);
  return a;
}

Algebra nilpotent_line(const Field& f) {
  Algebra a(f, 1, "k·n, n²=0");
  a.set_product(0, 0, {Rat(0)});
  return a;
}

Algebra dual_numbers(const Field& f) {
  Algebra a(f, 2, "k[n]/(n²)");
  a.set_product(0, 0, {Rat(1), Rat(0)});
  a.set_product(0, 1, {Rat(0), Rat(1)});
  a.set_product(1, 0, {Rat(0), Rat(1)});
  a.set_product(1, 1, {Rat(0), Rat(0)});
  a.set_unit({Rat(1), Rat(0)});
  return a;
}

Algebra upper_triangular_algebra(const Field& f, std::size_t n) {
  // basis: E_{pq} for p <= q, ordered row by row
  std::vector<std::pair<std::size_t, std::size_t>> idx;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p; q < n; ++q) idx.emplace_back(p, q);
  Algebra a(f, idx.size(), "T_" + std::to_string(n));
  auto find = [&](std::size_t p, std::size_t q) -> std::size_t {
    for (std::size_t k = 0; k < idx.size(); ++k)
      if (idx[k] == std::make_pair(p, q)) return k;
    throw internal_error("upper_triangular_algebra: index");
  };
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) {
      Vec prod = zero_vec(idx.size());
      if (idx[i].second == idx[j].first) prod[find(idx[i].first, idx[j].second)] = 1;
      a.set_product(i, j, prod);
    }
  Vec u = zero_vec(idx.size());
  for (std::size_t p = 0; p < n; ++p) u[find(p, p)] = 1;
  a.set_unit(u);
  return a;
}

Algebra cyclic_group_algebra(const Field& f, std::size_t m) {
  Algebra a(f, m, "k[Z/" + std::to_string(m) + "]");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) a.set_product(i, j, unit_vec(m, (i + j) % m));
  a.set_unit(unit_vec(m, 0));
  return a;
}

}  // namespace corita
