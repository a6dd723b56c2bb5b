#include <doctest.h>

#include "msym/complexes.hpp"
#include "msym/errors.hpp"
#include "oracles.hpp"

using namespace msym;

TEST_SUITE("complexes") {

TEST_CASE("one-slot complex is the de Rham complex") {
  const ComplexSpec c = build_complex(3, 1, {});
  REQUIRE(c.nodes.size() == 4);
  for (int k = 0; k <= 3; ++k) CHECK(c.nodes[static_cast<std::size_t>(k)].signature == std::vector<int>{k});
  CHECK(c.edges == std::vector<int>{1, 1, 1});
}

TEST_CASE("augmented bi-form complex starts with the one-slot prefix") {
  const ComplexSpec c = build_complex(4, 2, {1});
  REQUIRE(c.nodes.size() == 5);
  CHECK(c.nodes[0].signature == std::vector<int>{0, 0});
  CHECK(c.nodes[1].signature == std::vector<int>{1, 0});
  CHECK(c.edges.front() == 1);
  for (std::size_t e = 1; e < c.edges.size(); ++e) CHECK(c.edges[e] == 2);
  CHECK(c.nodes.back().signature == std::vector<int>{4, 3});
  const ComplexSpec c0 = build_complex(3, 2, {0});
  CHECK(c0.nodes.back().signature == std::vector<int>{3, 3});
  CHECK_THROWS_AS(build_complex(2, 2, {3}), PreconditionError);
}

TEST_CASE("consecutive operators compose to zero") {
  for (const auto& spec : {build_complex(3, 2, {0}), build_complex(3, 2, {1}), build_complex(3, 3, {1, 1})}) {
    for (const auto& trunc : {Truncation::torus(1), Truncation::box(3)}) {
      for (std::size_t e = 0; e + 1 < spec.edges.size(); ++e) {
        const DeltaMatrix a = assemble_operator(spec, e, trunc);
        const DeltaMatrix b = assemble_operator(spec, e + 1, trunc);
        CHECK(multiply(b.matrix, a.matrix).is_zero());
      }
    }
  }
}

TEST_CASE("torus de Rham cohomology equals torus Betti numbers") {
  for (int D = 1; D <= 3; ++D) {
    CHECK(cohomology(build_complex(D, 1, {}), Truncation::torus(1)).h() == oracle::torus_betti(D));
    CHECK(de_rham_reference(D, Truncation::torus(1)) == oracle::torus_betti(D));
  }
}

TEST_CASE("zero-mode bookkeeping") {
  for (const auto& p : cohomology(build_complex(3, 1, {}), Truncation::torus(1)).positions) {
    CHECK(p.nonzero_h == 0);
    CHECK(p.zero_mode_h == p.h);
  }
}

TEST_CASE("block splitting agrees with the unsplit computation") {
  for (const auto& spec : {build_complex(2, 2, {0}), build_complex(2, 2, {1}), build_complex(2, 1, {})}) {
    const Truncation t = Truncation::torus(1);
    CHECK(cohomology(spec, t).h() == cohomology_unsplit(spec, t));
  }
}

TEST_CASE("box de Rham cohomology is concentrated in degree zero") {
  for (int D = 1; D <= 3; ++D) {
    std::vector<long> want(static_cast<std::size_t>(D + 1), 0);
    want[0] = 1;
    CHECK(cohomology(build_complex(D, 1, {}), Truncation::box(4)).h() == want);
  }
}

TEST_CASE("resource guard") {
  CHECK_THROWS_AS(truncated_dimension(build_complex(6, 2, {0}), Truncation::torus(3)), ResourceError);
  CHECK_THROWS_AS(cohomology(build_complex(6, 2, {0}), Truncation::torus(3)), ResourceError);
}

TEST_CASE("as-check bijection on the box") {
  const ASReport r = as_reduction(build_complex(4, 1, {}), 1, Truncation::box(2));
  CHECK(r.bijection);
  CHECK(r.rank == r.source_dimension);
  CHECK(r.source_dimension == r.target_dimension);
}

TEST_CASE("as-check gate names the torus zero-mode group") {
  try {
    as_reduction(build_complex(2, 1, {}), 1, Truncation::torus(1));
    FAIL("expected a precondition error");
  } catch (const PreconditionError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("H^{1}") != std::string::npos);
    CHECK(msg.find("(0,0)") != std::string::npos);
  }
  Truncation nz = Truncation::torus(1);
  nz.include_zero_mode = false;
  CHECK(as_reduction(build_complex(2, 1, {}), 1, nz).bijection);
}

}
