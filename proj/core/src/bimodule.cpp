#include "corita/bimodule.hpp"

namespace corita {

const Field& Bimodule::field() const {
  if (left) return left->field();
  if (right) return right->field();
  throw input_error("Bimodule with no acting algebra has no field");
}

Mat Bimodule::left_action(const Vec& a) const {
  if (!left) throw input_error("no left action");
  Mat m(left->field(), dim(), dim());
  for (std::size_t g = 0; g < left_act.size(); ++g)
    if (!a[g].is_zero()) m = m + left_act[g].scaled(a[g]);
  return m;
}

Mat Bimodule::right_action(const Vec& a) const {
  if (!right) throw input_error("no right action");
  Mat m(right->field(), dim(), dim());
  for (std::size_t g = 0; g < right_act.size(); ++g)
    if (!a[g].is_zero()) m = m + right_act[g].scaled(a[g]);
  return m;
}

Vec BalancedForm::eval(const Vec& p, const Vec& q) const {
  if (p.size() != P.dim() || q.size() != Q.dim()) throw input_error("BalancedForm::eval: size");
  Vec flat(P.dim() * Q.dim(), Rat(0));
  const Field& f = form.field();
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].is_zero()) continue;
    for (std::size_t j = 0; j < q.size(); ++j)
      if (!q[j].is_zero()) flat[i * q.size() + j] = f.mul(p[i], q[j]);
  }
  return form.apply(flat);
}

// ---------------------------------------------------------------------------
// validation

Report validate_module(const Bimodule& m) {
  Report rep("validate-module");
  const Field& f = m.field();
  if (m.right) {
    const Algebra& r = *m.right;
    if (m.right_act.size() != r.dim()) throw input_error("right action count mismatch");
    bool assoc = true;
    for (std::size_t i = 0; i < r.dim(); ++i)
      for (std::size_t j = 0; j < r.dim(); ++j) {
        Mat lhs(f, m.dim(), m.dim());
        const Vec& p = r.basis_product(i, j);
        for (std::size_t g = 0; g < r.dim(); ++g)
          if (!p[g].is_zero()) lhs = lhs + m.right_act[g].scaled(p[g]);
        if (lhs != m.right_act[j] * m.right_act[i]) assoc = false;
      }
    rep.add("right action associativity", assoc);
    if (r.is_unital())
      rep.add("right unit acts as identity", m.right_action(*r.unit()).is_identity());
  }
  if (m.left) {
    const Algebra& l = *m.left;
    if (m.left_act.size() != l.dim()) throw input_error("left action count mismatch");
    bool assoc = true;
    for (std::size_t i = 0; i < l.dim(); ++i)
      for (std::size_t j = 0; j < l.dim(); ++j) {
        Mat lhs(f, m.dim(), m.dim());
        const Vec& p = l.basis_product(i, j);
        for (std::size_t g = 0; g < l.dim(); ++g)
          if (!p[g].is_zero()) lhs = lhs + m.left_act[g].scaled(p[g]);
        if (lhs != m.left_act[i] * m.left_act[j]) assoc = false;
      }
    rep.add("left action associativity", assoc);
    if (l.is_unital())
      rep.add("left unit acts as identity", m.left_action(*l.unit()).is_identity());
  }
  if (m.left && m.right) {
    bool comm = true;
    for (const Mat& lg : m.left_act)
      for (const Mat& rg : m.right_act)
        if (lg * rg != rg * lg) comm = false;
    rep.add("actions commute", comm);
  }
  return rep;
}

bool commutes_with_actions(const Bimodule& source, const Bimodule& target, const Mat& f,
                           ModMap::Linearity lin) {
  bool check_left = lin != ModMap::Linearity::Right;
  bool check_right = lin != ModMap::Linearity::Left;
  if (check_left) {
    if (!source.left || !target.left) return false;
    for (std::size_t g = 0; g < source.left_act.size(); ++g)
      if (f * source.left_act[g] != target.left_act[g] * f) return false;
  }
  if (check_right) {
    if (!source.right || !target.right) return false;
    for (std::size_t g = 0; g < source.right_act.size(); ++g)
      if (f * source.right_act[g] != target.right_act[g] * f) return false;
  }
  return true;
}

Report validate_mod_map(const ModMap& f) {
  Report rep("validate-mod-map");
  rep.add("commutes with declared actions",
          commutes_with_actions(f.source, f.target, f.map.matrix, f.linearity));
  return rep;
}

Report validate_balanced_form(const BalancedForm& bf) {
  Report rep("validate-balanced-form");
  std::size_t dp = bf.P.dim(), dq = bf.Q.dim();
  if (bf.middle) {
    bool balanced = true;
    for (std::size_t g = 0; g < bf.middle->dim(); ++g) {
      Vec a = unit_vec(bf.middle->dim(), g);
      for (std::size_t i = 0; i < dp && balanced; ++i)
        for (std::size_t j = 0; j < dq; ++j) {
          Vec lhs = bf.eval(bf.P.act_right(unit_vec(dp, i), a), unit_vec(dq, j));
          Vec rhs = bf.eval(unit_vec(dp, i), bf.Q.act_left(a, unit_vec(dq, j)));
          if (lhs != rhs) { balanced = false; break; }
        }
    }
    rep.add("balanced over middle algebra", balanced);
  }
  if (bf.P.left && bf.target.left) {
    bool ok = true;
    for (std::size_t g = 0; g < bf.P.left_act.size() && ok; ++g) {
      Vec a = unit_vec(bf.P.left_act.size(), g);
      for (std::size_t i = 0; i < dp && ok; ++i)
        for (std::size_t j = 0; j < dq; ++j) {
          Vec lhs = bf.eval(bf.P.act_left(a, unit_vec(dp, i)), unit_vec(dq, j));
          Vec rhs = bf.target.act_left(a, bf.eval(unit_vec(dp, i), unit_vec(dq, j)));
          if (lhs != rhs) { ok = false; break; }
        }
    }
    rep.add("left outer linearity", ok);
  }
  if (bf.Q.right && bf.target.right) {
    bool ok = true;
    for (std::size_t g = 0; g < bf.Q.right_act.size() && ok; ++g) {
      Vec a = unit_vec(bf.Q.right_act.size(), g);
      for (std::size_t i = 0; i < dp && ok; ++i)
        for (std::size_t j = 0; j < dq; ++j) {
          Vec lhs = bf.eval(unit_vec(dp, i), bf.Q.act_right(unit_vec(dq, j), a));
          Vec rhs = bf.target.act_right(bf.eval(unit_vec(dp, i), unit_vec(dq, j)), a);
          if (lhs != rhs) { ok = false; break; }
        }
    }
    rep.add("right outer linearity", ok);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// balanced tensor product

BalancedTensor tensor_over(const Bimodule& m, const AlgebraPtr& r, const Bimodule& n) {
  if (!m.right || !n.left) throw input_error("tensor_over: M needs a right and N a left action");
  if (m.right->dim() != r->dim() || n.left->dim() != r->dim())
    throw input_error("tensor_over: action algebra mismatch");
  const Field& f = r->field();
  Quotient q = chain_quotient(f, {m.dim(), n.dim()}, {ChainJunction{m.right_act, n.left_act}},
                              m.space.label + "(x)" + n.space.label);
  Bimodule out;
  out.space = q.space;
  out.left = m.left;
  out.right = n.right;
  Mat id_n = Mat::identity(f, n.dim());
  Mat id_m = Mat::identity(f, m.dim());
  for (std::size_t g = 0; g < (m.left ? m.left->dim() : 0); ++g)
    out.left_act.push_back(induce(q, m.left_act[g].kron(id_n), q));
  for (std::size_t g = 0; g < (n.right ? n.right->dim() : 0); ++g)
    out.right_act.push_back(induce(q, id_m.kron(n.right_act[g]), q));
  return BalancedTensor{std::move(q), std::move(out)};
}

Report tensor_square_comparison(const Bimodule& m, const AlgebraPtr& r, const Bimodule& n) {
  Report rep("tensor-square-comparison");
  if (!is_idempotent(*r).is_idempotent) {
    rep.add_unmet("R idempotent", "comparison only guaranteed for idempotent R");
    return rep;
  }
  FirmSquare s = firm_square(*r);
  auto s_ptr = std::make_shared<Algebra>(s.algebra);
  Bimodule ms = forget_left(m);
  ms.right = s_ptr;
  ms.right_act.clear();
  Bimodule ns = forget_right(n);
  ns.left = s_ptr;
  ns.left_act.clear();
  Mat mult(r->field(), r->dim(), r->dim() * r->dim());
  for (std::size_t i = 0; i < r->dim(); ++i)
    for (std::size_t j = 0; j < r->dim(); ++j) {
      const Vec& p = r->basis_product(i, j);
      for (std::size_t k = 0; k < r->dim(); ++k) mult.set(k, i * r->dim() + j, p[k]);
    }
  for (std::size_t a = 0; a < s.algebra.dim(); ++a) {
    Vec rr = mult.apply(s.carrier.section.matrix.col(a));
    ms.right_act.push_back(m.right_action(rr));
    ns.left_act.push_back(n.left_action(rr));
  }
  BalancedTensor over_r = tensor_over(forget_left(m), r, forget_right(n));
  BalancedTensor over_s = tensor_over(ms, s_ptr, ns);
  Mat flat_id = Mat::identity(r->field(), m.dim() * n.dim());
  Mat j1 = induce(over_r.carrier, flat_id, over_s.carrier);
  Mat j2 = induce(over_s.carrier, flat_id, over_r.carrier);
  rep.add("j2∘j1 = id", (j2 * j1).is_identity());
  rep.add("j1∘j2 = id", (j1 * j2).is_identity());
  return rep;
}

// ---------------------------------------------------------------------------
// hom

namespace {

// row-major flattening: constraints F·A = B·F  <=>  (I⊗Aᵀ − B⊗I)·vec(F) = 0
Mat commute_constraint(const Field& f, std::size_t dn, std::size_t dm, const Mat& a, const Mat& b) {
  Mat lhs = Mat::identity(f, dn).kron(a.transpose());
  Mat rhs = b.kron(Mat::identity(f, dm));
  return lhs - rhs;
}

}  // namespace

Mat unflatten(const Field& f, const Vec& v, std::size_t rows, std::size_t cols) {
  Mat m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, v[i * cols + j]);
  return m;
}

Vec flatten(const Mat& m) {
  Vec v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  return v;
}

HomResult hom(const Bimodule& m, const Bimodule& n, Side side) {
  const Field& f = m.field();
  std::size_t dm = m.dim(), dn = n.dim();
  BasedSpace flat{dn * dm, "Hom(" + m.space.label + "," + n.space.label + ")"};
  Mat sys(f, 0, dn * dm);
  if (side == Side::Right) {
    if (!m.right || !n.right || m.right->dim() != n.right->dim())
      throw input_error("hom: shared right algebra required");
    for (std::size_t g = 0; g < m.right_act.size(); ++g)
      sys = sys.vstack(commute_constraint(f, dn, dm, m.right_act[g], n.right_act[g]));
  } else {
    if (!m.left || !n.left || m.left->dim() != n.left->dim())
      throw input_error("hom: shared left algebra required");
    for (std::size_t g = 0; g < m.left_act.size(); ++g)
      sys = sys.vstack(commute_constraint(f, dn, dm, m.left_act[g], n.left_act[g]));
  }
  HomResult res;
  res.maps = kernel(LinMap(flat, BasedSpace{sys.rows(), ""}, sys));

  Bimodule& mod = res.module;
  mod.space = BasedSpace{res.maps.dim(), flat.label};
  auto in_coords = [&](const Mat& big) {
    Mat out(f, res.maps.dim(), res.maps.dim());
    for (std::size_t b = 0; b < res.maps.dim(); ++b) {
      Vec img = big.apply(res.maps.basis.row(b));
      Vec c = coords_in_rref(res.maps.basis, img);
      for (std::size_t i = 0; i < c.size(); ++i) out.set(i, b, c[i]);
    }
    return out;
  };
  if (side == Side::Right) {
    // (c·f)(x) = c·f(x) with c from N.left ; (f·b)(x) = f(b·x) with b from M.left
    if (n.left) {
      mod.left = n.left;
      for (std::size_t g = 0; g < n.left_act.size(); ++g)
        mod.left_act.push_back(in_coords(n.left_act[g].kron(Mat::identity(f, dm))));
    }
    if (m.left) {
      mod.right = m.left;
      for (std::size_t g = 0; g < m.left_act.size(); ++g)
        mod.right_act.push_back(in_coords(Mat::identity(f, dn).kron(m.left_act[g].transpose())));
    }
  } else {
    // (b·f)(x) = f(x·b) with b from M.right ; (f·c)(x) = f(x)·c with c from N.right
    if (m.right) {
      mod.left = m.right;
      for (std::size_t g = 0; g < m.right_act.size(); ++g)
        mod.left_act.push_back(in_coords(Mat::identity(f, dn).kron(m.right_act[g].transpose())));
    }
    if (n.right) {
      mod.right = n.right;
      for (std::size_t g = 0; g < n.right_act.size(); ++g)
        mod.right_act.push_back(in_coords(n.right_act[g].kron(Mat::identity(f, dm))));
    }
  }

  bool same_object = dm == dn &&
                     (side == Side::Right ? m.right_act == n.right_act : m.left_act == n.left_act);
  if (same_object) {
    // endomorphisms: composition as product
    SpanBuilder sb(f, dn * dm);
    for (std::size_t i = 0; i < res.maps.basis.rows(); ++i) sb.add(res.maps.basis.row(i));
    Algebra endo(f, res.maps.dim(), "End(" + m.space.label + ")");
    for (std::size_t a = 0; a < res.maps.dim(); ++a) {
      Mat fa = unflatten(f, res.maps.basis.row(a), dn, dm);
      for (std::size_t b = 0; b < res.maps.dim(); ++b) {
        Mat fb = unflatten(f, res.maps.basis.row(b), dn, dm);
        endo.set_product(a, b, coords_in_rref(res.maps.basis, flatten(fa * fb)));
      }
    }
    Vec id_flat = flatten(Mat::identity(f, dm));
    if (sb.contains(id_flat)) endo.set_unit(coords_in_rref(res.maps.basis, id_flat));
    res.endo = std::move(endo);
  }
  return res;
}

// ---------------------------------------------------------------------------
// firmness of modules

FirmnessReport module_firmness(const Bimodule& m, const AlgebraPtr& r) {
  if (!m.right || m.right->dim() != r->dim()) throw input_error("module_firmness: M must be right-R");
  const Field& f = r->field();
  FirmnessReport rep;
  rep.carrier = chain_quotient(f, {m.dim(), r->dim()},
                               {ChainJunction{m.right_act, r->left_regular()}},
                               m.space.label + "(x)R");
  Mat act_flat(f, m.dim(), m.dim() * r->dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t g = 0; g < r->dim(); ++g) {
      Vec v = m.right_act[g].col(i);
      for (std::size_t k = 0; k < m.dim(); ++k) act_flat.set(k, i * r->dim() + g, v[k]);
    }
  rep.mu = LinMap(rep.carrier.space, m.space, induce_to_plain(rep.carrier, act_flat));
  SpanBuilder mr(f, m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t g = 0; g < r->dim(); ++g) mr.add(m.right_act[g].col(i));
  rep.image_mr = Subspace{m.space, mr.basis()};
  rep.is_idempotent = rep.image_mr.dim() == m.dim();
  auto inv = try_inverse(rep.mu);
  rep.is_firm = inv.has_value();
  if (inv) rep.d = *inv;
  return rep;
}

// ---------------------------------------------------------------------------
// functor J

Bimodule functor_j(const Bimodule& m, const IdealWitness& r_in_a) {
  const Algebra& amb = *r_in_a.ambient;
  auto sub = std::make_shared<Algebra>(subalgebra_on(r_in_a.ambient, r_in_a.subspace, "R"));
  if (!m.right || m.right->dim() != sub->dim())
    throw input_error("functor_j: M must be a right module over the witness subalgebra");
  FirmnessReport fr = module_firmness(m, sub);
  if (!fr.is_firm) throw input_error("functor_j: module is not firm over R");
  const Field& f = amb.field();

  Mat act_flat(f, m.dim(), m.dim() * sub->dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t g = 0; g < sub->dim(); ++g) {
      Vec v = m.right_act[g].col(i);
      for (std::size_t k = 0; k < m.dim(); ++k) act_flat.set(k, i * sub->dim() + g, v[k]);
    }
  Bimodule out = m;
  out.right = r_in_a.ambient;
  out.right_act.clear();
  for (std::size_t g = 0; g < amb.dim(); ++g) {
    // T_a : R -> R, r -> r·a, on the witness basis
    Mat t(f, sub->dim(), sub->dim());
    for (std::size_t i = 0; i < sub->dim(); ++i) {
      Vec ra = amb.mul(r_in_a.subspace.basis.row(i), unit_vec(amb.dim(), g));
      if (!subspace_contains(r_in_a.subspace, ra))
        throw input_error("functor_j: witness is not a right ideal");
      Vec c = to_sub_coords(r_in_a.subspace, ra);
      for (std::size_t k = 0; k < sub->dim(); ++k) t.set(k, i, c[k]);
    }
    // m·a = μ(m^r ⊗ r·a)
    Mat step = act_flat * Mat::identity(f, m.dim()).kron(t) * fr.carrier.section.matrix;
    out.right_act.push_back(step * fr.d->matrix);
  }
  return out;
}

Report functor_j_roundtrip(const Bimodule& m, const IdealWitness& r_in_a) {
  Report rep("functor-j");
  Bimodule ext = functor_j(m, r_in_a);
  rep.absorb("extended module valid", validate_module(ext));
  bool restricts = true;
  for (std::size_t i = 0; i < r_in_a.subspace.basis.rows(); ++i) {
    Mat back = ext.right_action(r_in_a.subspace.basis.row(i));
    if (back != m.right_act[i]) restricts = false;
  }
  rep.add("restricting the A-action to R recovers M", restricts);
  return rep;
}

// ---------------------------------------------------------------------------

Report tensor_lemma_check(const Bimodule& m, const IdealWitness& r_in_a, const Bimodule& p) {
  Report rep("tensor-lemma");
  auto sub = std::make_shared<Algebra>(subalgebra_on(r_in_a.ambient, r_in_a.subspace, "R"));
  Bimodule m_r = restrict_right(forget_left(m), r_in_a, sub);
  Bimodule p_r = restrict_left(forget_right(p), r_in_a, sub);
  SpanBuilder mr(m.field(), m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t g = 0; g < sub->dim(); ++g) mr.add(m_r.right_act[g].col(i));
  if (mr.rank() != m.dim()) {
    rep.add_unmet("MR = M", "lemma hypotheses not satisfied");
    return rep;
  }
  rep.add("MR = M", true);
  BalancedTensor over_r = tensor_over(m_r, sub, p_r);
  BalancedTensor over_a = tensor_over(forget_left(m), m.right, forget_right(p));
  Mat cmp = induce(over_r.carrier, Mat::identity(m.field(), m.dim() * p.dim()), over_a.carrier);
  rep.add("canonical map M⊗_R P → M⊗_A P is an isomorphism",
          is_iso(LinMap(over_r.carrier.space, over_a.carrier.space, cmp)));
  return rep;
}

// ---------------------------------------------------------------------------
// projectivity / faithful flatness

namespace {

bool projective_right_unital(const Bimodule& m, const AlgebraPtr& a) {
  const Field& f = a->field();
  std::size_t n = m.dim(), da = a->dim();
  if (n == 0) return true;
  Mat pi(f, n, n * da);  // (a_i) -> Σ m_i·a_i, flat index (i, g)
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t g = 0; g < da; ++g) {
      Vec v = m.right_act[g].col(i);
      for (std::size_t k = 0; k < n; ++k) pi.set(k, i * da + g, v[k]);
    }
  std::size_t rows_s = n * da;
  Mat sys(f, 0, rows_s * n);
  Mat rhs(f, 0, 1);
  for (std::size_t g = 0; g < da; ++g) {
    Mat free_act = Mat::identity(f, n).kron(a->right_mult_basis(g));
    Mat c = commute_constraint(f, rows_s, n, m.right_act[g], free_act);
    sys = sys.vstack(c);
    rhs = rhs.vstack(Mat(f, c.rows(), 1));
  }
  sys = sys.vstack(pi.kron(Mat::identity(f, n)));  // vec(pi·s) = (pi⊗I)·vec(s)
  rhs = rhs.vstack(Mat::col_vector(f, flatten(Mat::identity(f, n))));
  return rref_solve(sys, rhs).has_value();
}

Bimodule as_right_module(const Bimodule& m, Side side) {
  if (side == Side::Right) return forget_left(m);
  Bimodule out;
  out.space = m.space;
  out.right = std::make_shared<Algebra>(opposite(*m.left));
  out.right_act = m.left_act;
  return out;
}

AlgebraPtr with_solved_unit(const AlgebraPtr& a) {
  auto u = a->solve_unit();
  if (!u) return nullptr;
  auto out = std::make_shared<Algebra>(*a);
  out->set_unit(*u);
  return out;
}

}  // namespace

bool is_projective(const Bimodule& m, Side side) {
  Bimodule rm = as_right_module(m, side);
  AlgebraPtr a = rm.right;
  if (!a->is_unital()) {
    if (AlgebraPtr withu = with_solved_unit(a)) {
      rm.right = withu;
      return projective_right_unital(rm, withu);
    }
    auto rhat = std::make_shared<Algebra>(dorroh(*a));
    Bimodule ext = dorroh_extend_right(rm, rhat);
    return projective_right_unital(ext, rhat);
  }
  return projective_right_unital(rm, a);
}

FlatnessReport is_faithfully_flat(const Bimodule& m, Side side) {
  FlatnessReport rep;
  Bimodule rm = as_right_module(m, side);
  if (!rm.field().is_rational())
    throw input_error("is_faithfully_flat: restricted to characteristic 0");
  AlgebraPtr a = rm.right;
  if (!a->is_unital()) {
    AlgebraPtr withu = with_solved_unit(a);
    if (!withu) {
      rep.note = "acting algebra has no unit; faithful flatness not decided at this scale";
      return rep;
    }
    a = withu;
    rm.right = withu;
  }
  rep.projective = projective_right_unital(rm, a);
  // trace ideal: span of φ(m) over right-linear φ : M -> A
  HomResult h = hom(rm, forget_left(regular_bimodule(a)), Side::Right);
  SpanBuilder tr(a->field(), a->dim());
  for (std::size_t b = 0; b < h.maps.dim(); ++b) {
    Mat phi = unflatten(a->field(), h.maps.basis.row(b), a->dim(), rm.dim());
    for (std::size_t i = 0; i < rm.dim(); ++i) tr.add(phi.col(i));
  }
  rep.trace_full = tr.rank() == a->dim();
  rep.verdict = (rep.projective && rep.trace_full) ? Verdict::Pass : Verdict::Fail;
  return rep;
}

// ---------------------------------------------------------------------------
// constructions

Bimodule regular_bimodule(const AlgebraPtr& a) {
  Bimodule m;
  m.left = a;
  m.right = a;
  m.space = a->space();
  m.left_act = a->left_regular();
  m.right_act = a->right_regular();
  return m;
}

Bimodule free_right_module(const AlgebraPtr& a, std::size_t n) {
  Bimodule m;
  m.right = a;
  m.space = BasedSpace{n * a->dim(), a->label() + "^" + std::to_string(n)};
  Mat id = Mat::identity(a->field(), n);
  for (const Mat& rg : a->right_regular()) m.right_act.push_back(id.kron(rg));
  return m;
}

Bimodule right_module(const AlgebraPtr& a, std::size_t dim, std::vector<Mat> acts,
                      const std::string& label) {
  Bimodule m;
  m.right = a;
  m.space = BasedSpace{dim, label};
  m.right_act = std::move(acts);
  if (m.right_act.size() != a->dim()) throw input_error("right_module: action count");
  return m;
}

Bimodule left_module(const AlgebraPtr& a, std::size_t dim, std::vector<Mat> acts,
                     const std::string& label) {
  Bimodule m;
  m.left = a;
  m.space = BasedSpace{dim, label};
  m.left_act = std::move(acts);
  if (m.left_act.size() != a->dim()) throw input_error("left_module: action count");
  return m;
}

Bimodule zero_right_action_module(const AlgebraPtr& a, std::size_t dim, const std::string& label) {
  std::vector<Mat> acts(a->dim(), Mat(a->field(), dim, dim));
  return right_module(a, dim, std::move(acts), label);
}

Bimodule dorroh_extend_right(const Bimodule& m, const AlgebraPtr& r_hat) {
  Bimodule out = m;
  out.right = r_hat;
  out.right_act.push_back(Mat::identity(m.field(), m.dim()));
  return out;
}

Bimodule restrict_right(const Bimodule& m, const IdealWitness& w, const AlgebraPtr& sub) {
  Bimodule out = m;
  out.right = sub;
  out.right_act.clear();
  for (std::size_t i = 0; i < w.subspace.basis.rows(); ++i)
    out.right_act.push_back(m.right_action(w.subspace.basis.row(i)));
  return out;
}

Bimodule restrict_left(const Bimodule& m, const IdealWitness& w, const AlgebraPtr& sub) {
  Bimodule out = m;
  out.left = sub;
  out.left_act.clear();
  for (std::size_t i = 0; i < w.subspace.basis.rows(); ++i)
    out.left_act.push_back(m.left_action(w.subspace.basis.row(i)));
  return out;
}

Bimodule direct_sum(const Bimodule& a, const Bimodule& b) {
  Bimodule out;
  out.space = BasedSpace{a.dim() + b.dim(), a.space.label + "+" + b.space.label};
  const Field& f = a.field();
  auto block = [&](const Mat& x, const Mat& y) {
    Mat m(f, x.rows() + y.rows(), x.cols() + y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
      for (std::size_t j = 0; j < x.cols(); ++j) m.set(i, j, x.at(i, j));
    for (std::size_t i = 0; i < y.rows(); ++i)
      for (std::size_t j = 0; j < y.cols(); ++j) m.set(x.rows() + i, x.cols() + j, y.at(i, j));
    return m;
  };
  if (a.left && b.left) {
    out.left = a.left;
    for (std::size_t g = 0; g < a.left_act.size(); ++g)
      out.left_act.push_back(block(a.left_act[g], b.left_act[g]));
  }
  if (a.right && b.right) {
    out.right = a.right;
    for (std::size_t g = 0; g < a.right_act.size(); ++g)
      out.right_act.push_back(block(a.right_act[g], b.right_act[g]));
  }
  return out;
}

Bimodule forget_left(const Bimodule& m) {
  Bimodule out = m;
  out.left = nullptr;
  out.left_act.clear();
  return out;
}

Bimodule forget_right(const Bimodule& m) {
  Bimodule out = m;
  out.right = nullptr;
  out.right_act.clear();
  return out;
}

}  // namespace corita
