#pragma once
// Printed reference data, transcribed verbatim: structure map tables and
// worked evaluations on standard simplices and cubes.

#include <string>
#include <vector>

#include "steenrod/barratt_eccles.hpp"
#include "steenrod/cells.hpp"
#include "steenrod/ops.hpp"
#include "steenrod/surjection.hpp"

namespace oracle {

struct TableCell {
  int r, n;
  std::vector<std::vector<int>> terms;  // every printed coefficient is +1
};

inline const std::vector<TableCell>& table_be() {
  static const std::vector<TableCell> t = {
      {2, 2, {{0, 1, 0}}},
      {2, 3, {{0, 1, 0, 1}}},
      {2, 4, {{0, 1, 0, 1, 0}}},
      {3, 2, {{0, 1, 2}, {0, 2, 0}}},
      {3, 3, {{0, 1, 2, 0}, {0, 1, 0, 1}}},
      {3, 4, {{0, 1, 2, 0, 1}, {0, 1, 2, 1, 2}, {0, 2, 0, 1, 2}, {0, 2, 0, 2, 0}}},
      {4, 2, {{0, 1, 2}, {0, 2, 3}, {0, 3, 0}}},
      {4, 3, {{0, 1, 2, 3}, {0, 1, 3, 0}, {0, 1, 0, 1}}},
      {4, 4,
       {{0, 1, 2, 3, 0}, {0, 1, 2, 0, 1}, {0, 1, 2, 1, 2}, {0, 2, 3, 0, 1}, {0, 2, 3, 1, 2}, {0, 2, 3, 2, 3},
        {0, 3, 0, 1, 2}, {0, 3, 0, 2, 3}, {0, 3, 0, 3, 0}}},
  };
  return t;
}

// (4,4) is printed only as a term count.
inline const std::vector<TableCell>& table_sj() {
  static const std::vector<TableCell> t = {
      {2, 2, {{1, 2, 1, 2}}},
      {2, 3, {{1, 2, 1, 2, 1}}},
      {2, 4, {{1, 2, 1, 2, 1, 2}}},
      {3, 2, {{1, 2, 3, 1, 2}, {1, 3, 1, 2, 3}, {1, 2, 3, 2, 3}}},
      {3, 3, {{1, 2, 3, 1, 2, 3}, {1, 2, 1, 2, 3, 1}, {1, 2, 3, 1, 3, 1}}},
      {3, 4,
       {{1, 2, 3, 1, 2, 3, 1}, {1, 2, 3, 2, 3, 1, 2}, {1, 2, 3, 1, 2, 1, 2}, {1, 3, 1, 2, 3, 1, 2},
        {1, 3, 1, 3, 1, 2, 3}, {1, 2, 3, 2, 3, 2, 3}, {1, 3, 1, 2, 3, 2, 3}}},
      {4, 2,
       {{1, 2, 3, 4, 1, 2}, {1, 3, 4, 1, 2, 3}, {1, 2, 3, 4, 2, 3}, {1, 4, 1, 2, 3, 4}, {1, 2, 4, 2, 3, 4},
        {1, 2, 3, 4, 3, 4}}},
      {4, 3,
       {{1, 2, 3, 4, 1, 2, 3}, {1, 2, 4, 1, 2, 3, 4}, {1, 2, 3, 4, 1, 3, 4}, {1, 2, 1, 2, 3, 4, 1},
        {1, 2, 3, 1, 3, 4, 1}, {1, 2, 3, 4, 1, 4, 1}}},
  };
  return t;
}
constexpr std::size_t sj_4_4_terms = 25;

inline steenrod::BarrattEcclesChain be_expected(const TableCell& cell) {
  steenrod::BarrattEcclesChain out;
  for (const auto& t : cell.terms) out += steenrod::be_from_exponents(cell.r, t);
  return out;
}

inline steenrod::SurjectionChain sj_expected(const TableCell& cell) {
  steenrod::SurjectionChain out;
  for (const auto& t : cell.terms) out += steenrod::surjection(t, cell.r);
  return out;
}

struct SignedTerm {
  int sign;
  std::vector<std::string> factors;
};

// A printed evaluation: the chain that x^{⊗p} is paired with to give
// P^s(x) or βP^s(x) on the top cell.
struct PrintedEvaluation {
  std::string name;
  steenrod::Geometry geometry;
  int p, s_upper, m, n;
  bool bockstein;
  std::vector<SignedTerm> terms;
};

template <class Cell>
steenrod::CellTensor<Cell> printed_chain(const PrintedEvaluation& ev) {
  steenrod::CellTensor<Cell> out;
  for (const auto& t : ev.terms) {
    steenrod::TensorKey<Cell> key;
    for (const auto& f : t.factors) {
      if constexpr (std::is_same_v<Cell, steenrod::Simplex>) key.factors.push_back(steenrod::parse_simplex(f));
      else key.factors.push_back(steenrod::parse_cube(f));  // letter form, e.g. [01]1[01]
    }
    out.add_term(key, t.sign);
  }
  return out;
}

inline const std::vector<PrintedEvaluation>& simplicial_examples() {
  using steenrod::Geometry;
  static const std::vector<PrintedEvaluation> v = {
      {"P1 on Delta4, p=2", Geometry::simplicial, 2, 1, 3, 4, false,
       {{1, {"[0,1,2,3]", "[0,1,3,4]"}},
        {1, {"[0,2,3,4]", "[0,1,2,4]"}},
        {1, {"[0,1,2,3]", "[1,2,3,4]"}},
        {1, {"[0,1,3,4]", "[1,2,3,4]"}}}},
      {"P2 on Delta7, p=2", Geometry::simplicial, 2, 2, 5, 7, false,
       {{1, {"[0,1,2,5,6,7]", "[0,1,2,3,4,5]"}}, {1, {"[0,1,2,3,6,7]", "[0,1,3,4,5,6]"}},
        {1, {"[0,1,2,3,4,7]", "[0,1,4,5,6,7]"}}, {1, {"[0,2,3,5,6,7]", "[0,1,2,3,4,5]"}},
        {1, {"[0,2,3,4,6,7]", "[0,1,2,4,5,6]"}}, {1, {"[0,2,3,4,5,7]", "[0,1,2,5,6,7]"}},
        {1, {"[0,3,4,5,6,7]", "[0,1,2,3,4,5]"}}, {1, {"[0,3,4,5,6,7]", "[0,1,2,3,5,6]"}},
        {1, {"[0,3,4,5,6,7]", "[0,1,2,3,6,7]"}}, {1, {"[0,1,2,3,6,7]", "[1,2,3,4,5,6]"}},
        {1, {"[0,1,2,3,4,7]", "[1,2,4,5,6,7]"}}, {1, {"[0,1,3,4,6,7]", "[1,2,3,4,5,6]"}},
        {1, {"[0,1,3,4,5,7]", "[1,2,3,5,6,7]"}}, {1, {"[0,1,4,5,6,7]", "[1,2,3,4,5,6]"}},
        {1, {"[0,1,4,5,6,7]", "[1,2,3,4,6,7]"}}, {1, {"[0,1,2,3,4,7]", "[2,3,4,5,6,7]"}},
        {1, {"[0,1,2,4,5,7]", "[2,3,4,5,6,7]"}}, {1, {"[0,1,2,5,6,7]", "[2,3,4,5,6,7]"}}}},
      {"betaP1 on Delta8, p=3", Geometry::simplicial, 3, 1, 3, 8, true,
       {{-1, {"[0,6,7,8]", "[0,1,2,3]", "[3,4,5,6]"}},
        {1, {"[0,1,7,8]", "[1,2,3,4]", "[4,5,6,7]"}},
        {-1, {"[0,1,2,8]", "[2,3,4,5]", "[5,6,7,8]"}}}},
      {"P1 on Delta7, p=3", Geometry::simplicial, 3, 1, 3, 7, false,
       {{-1, {"[0,3,4,5]", "[0,5,6,7]", "[0,1,2,3]"}}, {-1, {"[0,4,5,6]", "[0,1,6,7]", "[1,2,3,4]"}},
        {-1, {"[0,5,6,7]", "[0,1,2,7]", "[2,3,4,5]"}}, {-1, {"[0,1,4,5]", "[1,5,6,7]", "[1,2,3,4]"}},
        {1, {"[0,1,5,6]", "[1,2,6,7]", "[2,3,4,5]"}},  {-1, {"[0,1,6,7]", "[1,2,3,7]", "[3,4,5,6]"}},
        {-1, {"[0,1,2,5]", "[2,5,6,7]", "[2,3,4,5]"}}, {-1, {"[0,1,2,6]", "[2,3,6,7]", "[3,4,5,6]"}},
        {-1, {"[0,1,2,7]", "[2,3,4,7]", "[4,5,6,7]"}}, {1, {"[0,1,2,3]", "[3,4,5,6]", "[0,1,6,7]"}},
        {1, {"[0,2,3,4]", "[4,5,6,7]", "[0,1,2,7]"}},  {1, {"[0,1,2,3]", "[3,4,5,6]", "[1,2,6,7]"}},
        {-1, {"[0,1,3,4]", "[4,5,6,7]", "[1,2,3,7]"}}, {1, {"[0,1,2,3]", "[3,4,5,6]", "[2,3,6,7]"}},
        {1, {"[0,1,2,4]", "[4,5,6,7]", "[2,3,4,7]"}},  {1, {"[0,1,2,3]", "[3,4,5,6]", "[3,4,6,7]"}},
        {-1, {"[0,1,2,3]", "[3,5,6,7]", "[3,4,5,7]"}}, {1, {"[0,1,2,3]", "[3,4,5,6]", "[4,5,6,7]"}},
        {1, {"[0,1,2,3]", "[3,4,6,7]", "[4,5,6,7]"}}}},
  };
  return v;
}

inline const std::vector<PrintedEvaluation>& cubical_examples() {
  using steenrod::Geometry;
  static const std::vector<PrintedEvaluation> v = {
      {"P1 on Cube4, p=2", Geometry::cubical, 2, 1, 3, 4, false,
       {{1, {"[01]1[01][01]", "[01][01]0[01]"}}, {1, {"[01][01][01]0", "[01]0[01][01]"}},
        {1, {"[01][01][01]0", "1[01][01][01]"}}, {1, {"[01][01]1[01]", "[01]0[01][01]"}},
        {1, {"[01][01]1[01]", "1[01][01][01]"}}, {1, {"[01][01][01]0", "[01][01]1[01]"}},
        {1, {"[01][01]0[01]", "[01][01][01]1"}}, {1, {"[01]1[01][01]", "[01][01][01]1"}},
        {1, {"0[01][01][01]", "[01][01][01]1"}}, {1, {"0[01][01][01]", "[01][01]0[01]"}},
        {1, {"0[01][01][01]", "[01]1[01][01]"}}, {1, {"[01]0[01][01]", "1[01][01][01]"}}}},
      {"betaP0 on Cube2, p=3", Geometry::cubical, 3, 0, 1, 2, true,
       {{-1, {"[01]1", "[01]0", "1[01]"}},
        {-1, {"0[01]", "[01]0", "1[01]"}},
        {1, {"[01]1", "0[01]", "[01]1"}},
        {1, {"0[01]", "0[01]", "[01]1"}}}},
  };
  return v;
}

// Integral lift in (-p/2, p/2] of a scalar mod p.
inline steenrod::Coefficient symmetric(steenrod::Coefficient c, std::int64_t p) {
  c %= p;
  if (c < 0) c += p;
  return 2 * c > p ? c - p : c;
}

// The chain our construction pairs x^{⊗p} with for a printed example:
// scalar · eval(ψ(p)(e_i), top cell) restricted to factors of degree m.
template <class Cell>
steenrod::CellTensor<Cell> computed_chain(const PrintedEvaluation& ev) {
  const int q = -ev.m;
  const int s = -ev.s_upper;
  const int i = steenrod::steenrod_index(ev.p, s, q, ev.bockstein);
  const auto scalar = ev.p == 2 ? 1 : symmetric(steenrod::steenrod_scalar(ev.p, s, q), ev.p);
  return steenrod::power_element<Cell>(static_cast<int>(ev.p), i, ev.n, ev.m).scaled(scalar);
}

}  // namespace oracle
