#include <doctest.h>

#include "helpers.hpp"
#include "msym/errors.hpp"
#include "msym/linalg.hpp"
#include "msym/young.hpp"
#include "oracles.hpp"

using namespace msym;
using namespace testing_util;

TEST_SUITE("core") {

TEST_CASE("rational parsing and formatting") {
  CHECK(format_rational(parse_rational("6/4")) == "3/2");
  CHECK(format_rational(parse_rational("-7")) == "-7/1");
  CHECK(format_rational(parse_rational("0/5")) == "0/1");
  CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
  CHECK_THROWS_AS(parse_rational("abc"), ValidationError);
  CHECK_THROWS_AS(parse_rational(""), ValidationError);
  CHECK(i_power(2) == GaussianRational(Rational(-1)));
  CHECK(i_power(-1) == GaussianRational(Rational(0), Rational(-1)));
}

TEST_CASE("exact rank, solve and kernel agree with a dense oracle") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> e(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
    SparseMatrix m(r, c);
    std::vector<std::vector<mpq_class>> dense(r, std::vector<mpq_class>(c));
    for (std::size_t j = 0; j < c; ++j) {
      std::map<std::size_t, Rational> col;
      for (std::size_t i = 0; i < r; ++i) {
        const int v = (rng() % 3 == 0) ? e(rng) : 0;
        if (v) col[i] = v;
        dense[i][j] = v;
      }
      m.columns[j] = to_sparse(col);
    }
    const std::size_t rk = oracle::rank_exact(dense);
    CHECK(rank(m) == rk);
    CHECK(bareiss_rank(m) == rk);
    const auto ker = kernel_basis(m);
    CHECK(ker.size() == c - rk);
    for (const auto& v : ker) {
      std::vector<mpq_class> img(r);
      for (const auto& [j, a] : v) {
        for (const auto& [i, b] : m.columns[j]) img[i] += a * b;
      }
      for (const auto& x : img) CHECK(sgn(x) == 0);
    }
    CHECK(independent_columns(m).size() == rk);
  }
}

TEST_CASE("dense inverse") {
  DenseMatrix a(2, 2);
  a(0, 0) = 2;
  a(0, 1) = 1;
  a(1, 0) = 1;
  a(1, 1) = 1;
  CHECK(a * a.inverse() == DenseMatrix::identity(2));
  DenseMatrix s(2, 2);
  s(0, 0) = 1;
  s(0, 1) = 2;
  s(1, 0) = 2;
  s(1, 1) = 4;
  CHECK_THROWS_AS(s.inverse(), ConsistencyError);
}

TEST_CASE("canonicalize examples") {
  auto t = canonicalize({{1, 0}}, 2);
  CHECK(t.blocks == BlockTuple{{0, 1}});
  CHECK(t.sign == -1);
  CHECK(canonicalize({{0, 0}}, 2).sign == 0);
  t = canonicalize({{2, 0, 1}}, 3);
  CHECK(t.blocks == BlockTuple{{0, 1, 2}});
  CHECK(t.sign == 1);
  CHECK_THROWS_AS(canonicalize({{0, 3}}, 3), DomainError);
}

TEST_CASE("canonicalize is sign consistent under block permutations") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    Block b{0, 1, 2, 3};
    std::shuffle(b.begin(), b.end(), rng);
    std::vector<int> perm(b.begin(), b.end());
    auto t = canonicalize({b}, 5);
    CHECK(t.sign == oracle::perm_sign(perm));
  }
}

TEST_CASE("shape validation") {
  CHECK_THROWS_AS(Shape(0, {1}).validate(), ValidationError);
  CHECK_THROWS_AS(Shape(3, {}).validate(), ValidationError);
  CHECK_THROWS_AS(Shape(3, {4}).validate(), ValidationError);
  CHECK_THROWS_AS(Shape(3, {1, 2}).require_young(), ShapeError);
  CHECK(Shape(5, {2, 1}).tuple_count() == 50);
}

TEST_CASE("projector ranks against the symmetrizer oracle") {
  CHECK(young_projector(Shape(5, {1, 1})).rank == oracle::young_symmetrizer_rank(5, {1, 1}));
  CHECK(young_projector(Shape(5, {1, 1})).rank == 15);
  CHECK(young_projector(Shape(5, {2, 1})).rank == oracle::young_symmetrizer_rank(5, {2, 1}));
  CHECK(young_projector(Shape(5, {2, 1})).rank == 40);
  CHECK(irrep_dimension(Shape(4, {1})) == 4);
  CHECK_THROWS_AS(young_projector(Shape(4, {1, 2})), ShapeError);
}

TEST_CASE("sandwich and equivariant projectors agree") {
  for (const auto& s : {Shape(3, {1, 1}), Shape(4, {2, 1}), Shape(3, {2, 1, 1}), Shape(4, {2, 2})}) {
    const auto a = sandwich_projector(s);
    const auto b = equivariant_projector(s);
    CHECK(a.rank == b.rank);
    bool same = true;
    for (std::size_t j = 0; j < a.matrix.cols; ++j) same = same && a.matrix.columns[j] == b.matrix.columns[j];
    CHECK(same);
  }
}

TEST_CASE("project examples") {
  MultiForm t(Shape(2, {1, 1}), rational(2));
  t.add_term({{0}, {1}}, constant(2, 1));
  MultiForm want(Shape(2, {1, 1}), rational(2));
  want.add_term({{0}, {1}}, constant(2, 1, 2));
  want.add_term({{1}, {0}}, constant(2, 1, 2));
  CHECK(project(t) == want);
  CHECK(project(want) == want);

  MultiForm s(Shape(3, {1, 1}), rational(3));
  s.add_term({{0}, {0}}, constant(3, 1));
  CHECK(project(s) == s);

  MultiForm other(Shape(3, {1}), rational(3));
  CHECK_THROWS_AS(project(other, young_projector(Shape(3, {1, 1}))), DomainError);
}

TEST_CASE("projection is idempotent on random forms") {
  std::mt19937_64 rng(5);
  for (const auto& s : {Shape(3, {1, 1}), Shape(4, {2, 1}), Shape(3, {1, 1, 1}), Shape(4, {2, 2})}) {
    for (auto d : {rational(s.D), box(s.D, 2), torus(s.D, 1)}) {
      const MultiForm t = random_multiform(s, d, rng);
      const MultiForm p = project(t);
      CHECK(project(p) == p);
      CHECK(is_principal(p));
    }
  }
}

TEST_CASE("hook content equals projector rank for small shapes") {
  for (int D = 1; D <= 4; ++D) {
    for (const auto& sig : std::vector<std::vector<int>>{{1}, {1, 1}, {2, 1}, {2, 2}, {1, 1, 1}}) {
      bool ok = true;
      for (int p : sig) ok = ok && p <= D;
      if (!ok) continue;
      const Shape s(D, sig);
      CHECK(young_projector(s).rank == oracle::hook_content(D, sig).get_ui());
    }
  }
}

}
