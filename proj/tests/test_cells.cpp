#include <doctest.h>

#include "checks.hpp"

using namespace steenrod;

namespace {

SimplexChain sx(const char* text) { return SimplexChain::basis(parse_simplex(text)); }
CubeChain cb(const char* text) { return CubeChain::basis(parse_cube(text)); }

template <class Cell>
CellTensor<Cell> tk(std::initializer_list<Cell> factors) {
  return CellTensor<Cell>::basis(TensorKey<Cell>{std::vector<Cell>(factors)});
}

Simplex S(const char* t) { return parse_simplex(t); }
Cube C(const char* t) { return parse_cube(t); }

}  // namespace

TEST_CASE("simplicial structure maps") {
  CHECK(cell_boundary(sx("[0,1]")) == sx("[1]") - sx("[0]"));
  CHECK(cell_boundary(sx("[0,1,2]")) == sx("[1,2]") - sx("[0,2]") + sx("[0,1]"));
  CHECK(coproduct_simplicial(sx("[0,1]")) == tk({S("[0]"), S("[0,1]")}) + tk({S("[0,1]"), S("[1]")}));
  CHECK(SimplexOps::product(S("[0]"), S("[1]")) == sx("[0,1]"));
  CHECK(SimplexOps::product(S("[1]"), S("[0]")) == sx("[0,1]").scaled(-1));
  CHECK(SimplexOps::product(S("[0,1]"), S("[1]")).empty());
  CHECK(counit_simplicial(sx("[3]")) == 1);
  CHECK(counit_simplicial(sx("[0,3]")) == 0);
  CHECK(simplices_of(4, 2).size() == 10);
}

TEST_CASE("cubical structure maps") {
  CHECK(cell_boundary(cb("[01][01]")) == cb("[1][01]") - cb("[0][01]") - cb("[01][1]") + cb("[01][0]"));
  CHECK(coproduct_cubical(cb("[0][01]")) == tk({C("[0][0]"), C("[0][01]")}) + tk({C("[0][01]"), C("[0][1]")}));
  CHECK(CubeOps::product(C("[1]"), C("[0]")) == cb("[01]").scaled(-1));
  CHECK(counit_cubical(cb("[01][1]")) == 0);
  CHECK(counit_cubical(cb("[0][1]")) == 1);
  CHECK(cubes_of(3, 1).size() == 12);
  CHECK(parse_cube("[01]1[01]") == parse_cube("[0,1][1][01]"));
}

TEST_CASE("chain bialgebra relations on small cells") {
  for (int n = 0; n <= 3; ++n) {
    CHECK(checks::m_relation_failures<SimplexOps>(n) == 0);
    CHECK(checks::m_relation_failures<CubeOps>(n) == 0);
  }
}

TEST_CASE("surjection evaluation examples") {
  CHECK(evaluate_surjection(Surjection{{1}}, sx("[0,1,2]")) == tk({S("[0,1,2]")}));
  CHECK(evaluate_surjection(Surjection{{1, 2}}, sx("[0,1]")) ==
        tk({S("[0]"), S("[0,1]")}) + tk({S("[0,1]"), S("[1]")}));
  CHECK(evaluate_surjection(Surjection{{1, 2, 1}}, sx("[0,1]")) == tk({S("[0,1]"), S("[0,1]")}));
  // cubical analogue of the cup-1 term on the interval
  CHECK(evaluate_surjection(Surjection{{1, 2, 1}}, cb("[01]")) == tk({C("[01]"), C("[01]")}));
  // too short a chain for the degree
  CHECK(evaluate_surjection(Surjection{{1, 2, 1, 2, 1}}, sx("[0,1]")).empty());
  CHECK_THROWS(evaluate_surjection(Surjection{{1, 2}}, sx("[0,1]") + sx("[0,1,2]")));
}

TEST_CASE("fast evaluation agrees with the reference composite") {
  for (int r = 1; r <= 3; ++r)
    for (const auto& s : checks::all_surjections(r, 6))
      for (int d = 0; d <= 4; ++d)
        for (const auto& c : simplices_of(4, d)) {
          INFO(to_string(s) << " on " << to_string(c));
          CHECK(evaluate_surjection(s, SimplexChain::basis(c)) == evaluate_surjection_reference(s, c));
        }
}

TEST_CASE("uniform evaluation is the degree filter of the full one") {
  const auto& psi = psi_sj(2, 1);
  for (int n = 2; n <= 5; ++n) {
    const auto full = evaluate_surjection(psi, SimplexChain::basis(top_simplex(n)));
    for (int k = 0; k <= n; ++k) {
      CellTensor<Simplex> filtered;
      for (const auto& [t, c] : full)
        if (std::all_of(t.factors.begin(), t.factors.end(), [&](const Simplex& f) { return degree(f) == k; }))
          filtered.add_term(t, c);
      CHECK(evaluate_surjection_uniform(psi, top_simplex(n), k) == filtered);
    }
  }
  const auto& psi3 = psi_sj(3, 2);
  const auto full = evaluate_surjection(psi3, CubeChain::basis(top_cube(3)));
  CellTensor<Cube> filtered;
  for (const auto& [t, c] : full)
    if (std::all_of(t.factors.begin(), t.factors.end(), [](const Cube& f) { return degree(f) == 1; }))
      filtered.add_term(t, c);
  CHECK(evaluate_surjection_uniform(psi3, top_cube(3), 1) == filtered);
}

TEST_CASE("boundary compatibility of the evaluation") {
  CHECK(checks::sl_failures<SimplexOps>(2, 5, 3) == 0);
  CHECK(checks::sl_failures<CubeOps>(2, 5, 2) == 0);
}
