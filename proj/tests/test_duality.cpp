#include <doctest.h>

#include "msym/duality.hpp"
#include "msym/errors.hpp"

using namespace msym;

TEST_SUITE("duality") {

TEST_CASE("dual signatures") {
  auto d = dual_signatures(Shape(5, {1, 1}));
  REQUIRE(d.size() == 2);
  CHECK(d[0].signature == std::vector<int>{2, 1});
  CHECK(d[1].signature == std::vector<int>{2, 2});
  d = dual_signatures(Shape(4, {1}));
  REQUIRE(d.size() == 1);
  CHECK(d[0].signature == std::vector<int>{1});
  d = dual_signatures(Shape(6, {1, 1}));
  REQUIRE(d.size() == 2);
  CHECK(d[1].signature == std::vector<int>{3, 3});
  CHECK_THROWS_AS(dual_signatures(Shape(5, {2, 2})), PreconditionError);
}

TEST_CASE("encodings") {
  const auto e = build_encoding({Rational(0), Rational(2), Rational(1)}, 3);
  CHECK(e.stack.rank() == 3);
  CHECK(e.selected == std::vector<std::size_t>{0, 1});
  CHECK_THROWS_AS(build_encoding({Rational(0), Rational(0)}, 2), PreconditionError);
  const auto swap = build_encoding({Rational(1), Rational(0)}, {{Rational(3), Rational(0)}, {Rational(0), Rational(1)}});
  CHECK(swap.selected == std::vector<std::size_t>{1});
}

TEST_CASE("triangularize keeps the first row and zeroes the upper part") {
  DenseMatrix f(3, 3);
  f(0, 0) = 2;
  f(1, 0) = 1;
  f(1, 1) = 1;
  f(1, 2) = 3;
  f(2, 0) = 5;
  f(2, 1) = 4;
  f(2, 2) = 7;
  const DenseMatrix t = triangularize(f);
  CHECK(t(0, 0) == 2);
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = r + 1; c < 3; ++c) CHECK(sgn(t(r, c)) == 0);
  }
  CHECK(t.rank() == 3);
  DenseMatrix bad(2, 2);
  bad(0, 0) = 1;
  bad(0, 1) = 1;
  bad(1, 1) = 1;
  CHECK_THROWS_AS(triangularize(bad), PreconditionError);
}

TEST_CASE("self-dual vector field") {
  DualityOptions o;
  o.metric = Metric::minkowski(4);
  const DualityReport r = build_duality_maps(Shape(4, {1}), o);
  REQUIRE(r.duals.size() == 1);
  const auto& d = r.duals[0];
  CHECK(d.shape.signature == std::vector<int>{1});
  CHECK(d.commutes);
  CHECK(d.independent_route);
  CHECK(d.eta_field_independent);
  CHECK(d.inverse_roundtrip);
  CHECK(d.f.rank() == r.n);
  CHECK(sgn(d.eta) != 0);
}

TEST_CASE("charge scales rescale eta") {
  DualityOptions o;
  o.charge_scales = {Rational(-3, 2)};
  const DualityReport r = build_duality_maps(Shape(4, {1}), o);
  CHECK(r.duals[0].eta == Rational(-3, 2));
  CHECK(r.duals[0].eta_field_independent);
}

TEST_CASE("bi-form with two dual descriptions") {
  DualityOptions o;
  o.metric = Metric::minkowski(5);
  const DualityReport r = build_duality_maps(Shape(5, {1, 1}), o);
  REQUIRE(r.duals.size() == 2);
  CHECK(r.n > 0);
  for (const auto& d : r.duals) {
    CHECK(d.f.rank() == r.n);
    CHECK(d.commutes);
    CHECK(d.eta_field_independent);
    CHECK(d.restriction_unique);
    CHECK(d.inverse_roundtrip);
    for (std::size_t k = 0; k < d.sample_q0.size(); ++k) CHECK(d.sample_qi[k] == d.eta * d.sample_q0[k]);
  }
}

TEST_CASE("degree cap below N is rejected") {
  DualityOptions o;
  o.degree_cap = 1;
  CHECK_THROWS_AS(build_duality_maps(Shape(5, {1, 1}), o), ValidationError);
}

}
