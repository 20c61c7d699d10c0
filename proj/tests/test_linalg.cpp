#include <doctest.h>

#include <random>

#include "corita/linalg.hpp"

using namespace corita;

namespace {

const Field Q = Field::rationals();

Mat rand_mat(std::mt19937& rng, const Field& f, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> d(-3, 3);
  Mat m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, f.from_long(d(rng)));
  return m;
}

}  // namespace

TEST_CASE("rref_solve identity and free-variable conventions") {
  auto x = rref_solve(Mat::identity(Q, 2), Mat::of(Q, 2, 1, {3, 5}));
  REQUIRE(x.has_value());
  CHECK(*x == Mat::of(Q, 2, 1, {3, 5}));

  // pivot-then-zero free variable: [[1,1]]·x = 0 -> x = (0,0)
  auto y = rref_solve(Mat::of(Q, 1, 2, {1, 1}), Mat::of(Q, 1, 1, {0}));
  REQUIRE(y.has_value());
  CHECK(*y == Mat::of(Q, 2, 1, {0, 0}));

  // inconsistent
  auto z = rref_solve(Mat::of(Q, 2, 1, {1, 1}), Mat::of(Q, 2, 1, {1, 2}));
  CHECK(!z.has_value());

  CHECK_THROWS_AS(rref_solve(Mat::of(Q, 2, 1, {1, 1}), Mat::of(Q, 1, 1, {1})), input_error);
}

TEST_CASE("kernel and image") {
  BasedSpace d2{2, ""}, d3{3, ""};
  LinMap zero2(d2, d2, Mat(Q, 2, 2));
  CHECK(kernel(zero2).dim() == 2);
  CHECK(image(zero2).dim() == 0);

  LinMap id3 = identity_map(Q, d3);
  CHECK(kernel(id3).dim() == 0);
  CHECK(image(id3).dim() == 3);

  // hand rref: [[1,1],[2,2]] has kernel spanned by (1,-1), image dim 1
  LinMap f(d2, d2, Mat::of(Q, 2, 2, {1, 1, 2, 2}));
  Subspace k = kernel(f);
  REQUIRE(k.dim() == 1);
  CHECK(k.basis.at(0, 0) == Rat(1));
  CHECK(k.basis.at(0, 1) == Rat(-1));
  CHECK(image(f).dim() == 1);
}

TEST_CASE("tensor index convention") {
  BasedSpace u{2, "U"}, v{3, "V"};
  CHECK(tensor_space(u, v).dim == 6);
  CHECK(tensor_space(BasedSpace{0, ""}, BasedSpace{5, ""}).dim == 0);
  CHECK(tensor_index(1, 2, 4) == 6);  // basis pair (1,2) in 3⊗4
}

TEST_CASE("quotient_by") {
  BasedSpace v4{4, "V"};
  Quotient q0 = quotient_by(Q, v4, zero_subspace(Q, v4));
  CHECK(q0.space.dim == 4);
  CHECK(q0.projection.matrix.is_identity());

  Quotient qfull = quotient_by(Q, v4, full_space(Q, v4));
  CHECK(qfull.space.dim == 0);

  BasedSpace v2{2, "V"};
  Subspace rel = span_rows(v2, Mat::of(Q, 1, 2, {1, -1}));
  Quotient q = quotient_by(Q, v2, rel);
  REQUIRE(q.space.dim == 1);
  // both basis vectors land in the same class
  CHECK(q.projection.matrix.apply(unit_vec(2, 0)) == q.projection.matrix.apply(unit_vec(2, 1)));
  // section is a right inverse and its image complements the relations
  CHECK((q.projection.matrix * q.section.matrix).is_identity());
}

TEST_CASE("intersect, is_iso, inverse") {
  BasedSpace v3{3, ""};
  Subspace whole = full_space(Q, v3);
  CHECK(subspace_eq(intersect(whole, whole), whole));

  CHECK(is_iso(identity_map(Q, v3)));
  CHECK(!is_iso(LinMap(v3, v3, Mat(Q, 3, 3))));

  BasedSpace v1{1, ""};
  LinMap two(v1, v1, Mat::of(Q, 1, 1, {2}));
  CHECK(inverse(two).matrix.at(0, 0) == Rat(1, 2));
  CHECK_THROWS_AS(inverse(LinMap(v1, v1, Mat(Q, 1, 1))), input_error);

  Subspace s1 = span_rows(v3, Mat::of(Q, 2, 3, {1, 0, 0, 0, 1, 0}));
  Subspace s2 = span_rows(v3, Mat::of(Q, 2, 3, {0, 1, 0, 0, 0, 1}));
  Subspace meet = intersect(s1, s2);
  REQUIRE(meet.dim() == 1);
  CHECK(subspace_contains(meet, Vec{Rat(0), Rat(1), Rat(0)}));
}

TEST_CASE("property: solve returns an actual solution") {
  std::mt19937 rng(2026);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    Mat a = rand_mat(rng, Q, r, c);
    Mat x0 = rand_mat(rng, Q, c, 1);
    Mat b = a * x0;
    auto x = rref_solve(a, b);
    REQUIRE(x.has_value());
    CHECK(a * *x == b);
  }
}

TEST_CASE("property: rank-nullity") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    Mat m = rand_mat(rng, Q, r, c);
    LinMap f(BasedSpace{c, ""}, BasedSpace{r, ""}, m);
    CHECK(kernel(f).dim() + image(f).dim() == c);
  }
}

TEST_CASE("property: quotient projection/section and relations") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 1 + rng() % 6;
    std::size_t k = rng() % (n + 1);
    BasedSpace v{n, ""};
    Subspace rel = span_rows(v, rand_mat(rng, Q, k, n));
    Quotient q = quotient_by(Q, v, rel);
    CHECK(q.space.dim == n - rel.dim());
    CHECK((q.projection.matrix * q.section.matrix).is_identity());
    CHECK(subspace_eq(kernel(q.projection), rel));
    // image(section) ⊕ relations spans the ambient space
    Subspace img = image(q.section);
    CHECK(subspace_sum(img, rel).dim() == n);
    CHECK(intersect(img, rel).dim() == 0);
  }
}

TEST_CASE("prime field arithmetic") {
  Field f5 = Field::prime(5);
  CHECK(f5.add(Rat(3), Rat(4)) == Rat(2));
  CHECK(f5.inv(Rat(2)) == Rat(3));
  CHECK(f5.parse("7") == Rat(2));
  CHECK(f5.str(Rat(-1)) == "4");
  CHECK_THROWS_AS(Field::prime(6), input_error);

  Mat m = Mat::of(f5, 2, 2, {1, 2, 3, 4});
  LinMap g(BasedSpace{2, ""}, BasedSpace{2, ""}, m);
  CHECK(is_iso(g));  // det = 1*4-2*3 = -2 = 3 ≠ 0 mod 5
  CHECK(kernel(g).dim() == 0);
}

TEST_CASE("determinism: repeated runs give identical bases") {
  std::mt19937 rng(3);
  Mat m = rand_mat(rng, Q, 5, 7);
  LinMap f(BasedSpace{7, ""}, BasedSpace{5, ""}, m);
  Subspace k1 = kernel(f), k2 = kernel(f);
  CHECK(k1.basis == k2.basis);
  Subspace i1 = image(f), i2 = image(f);
  CHECK(i1.basis == i2.basis);
}

TEST_CASE("chain_quotient with no balancing is the plain tensor") {
  Quotient q = chain_quotient(Q, {2, 3}, {ChainJunction{{}, {}}});
  CHECK(q.space.dim == 6);
  CHECK(q.projection.matrix.is_identity());
}
