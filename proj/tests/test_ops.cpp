#include <doctest.h>

#include "oracles.hpp"
#include "steenrod/space_io.hpp"

using namespace steenrod;

namespace {

Coefficient cup(const OperationContext& ctx, int r, int i, std::vector<SimplexCochain> cs, const char* chain) {
  return cup_r_i<Simplex>(ctx, r, i, cs, parse_simplex_chain(chain, ctx.ring));
}

}  // namespace

TEST_CASE("cup-(r,i) products") {
  const auto z = OperationContext::make(Geometry::simplicial, 2, 0);
  const auto x = parse_simplex_chain("3*[0,1]");
  const auto y = parse_simplex_chain("5*[1,2]");
  // Alexander-Whitney, carrying the pairing sign (-1)^{|[0,1]||y|}
  CHECK(cup(z, 2, 0, {x, y}, "[0,1,2]") == -15);
  CHECK(cup(z, 2, 0, {y, x}, "[0,1,2]") == 0);
  // x ∪_1 x on the interval is -x([0,1])^2 under the same sign
  CHECK(cup(z, 2, 1, {x, x}, "[0,1]") == -9);
  // beyond the chain's capacity
  const auto f3 = OperationContext::make(Geometry::simplicial, 2, 3);
  const auto u = parse_simplex_chain("[0,1]", f3.ring);
  CHECK(cup(f3, 3, 5, {u, u, u}, "[0,1]") == 0);
  CHECK_THROWS(cup(z, 3, 0, {x, y}, "[0,1,2]"));
  // linear in every slot
  CHECK(cup(z, 2, 0, {x + x, y}, "[0,1,2]") == 2 * cup(z, 2, 0, {x, y}, "[0,1,2]"));
  CHECK(cup(z, 2, 0, {x, y}, "[0,1,2] + [0,1,2]") == -30);
  CHECK_THROWS(OperationContext::make(Geometry::simplicial, 2, 4));

  const auto cz = OperationContext::make(Geometry::cubical, 2, 0);
  const std::vector<CubeCochain> cs = {parse_cube_chain("[01]0"), parse_cube_chain("1[01]")};
  CHECK(cup_r_i<Cube>(cz, 2, 0, cs, parse_cube_chain("[01][01]")) == -1);
}

TEST_CASE("nu and the operation indices") {
  CHECK(nu(3, 0) == 1);
  CHECK(nu(3, 2) == 2);
  CHECK(nu(5, 1) == 2);
  CHECK(nu(3, -1) == 2);
  CHECK_THROWS(nu(2, 1));
  // p = 2: i = s - q
  CHECK(steenrod_index(2, -1, -3, false) == 2);
  // odd p: i = (2s - q)(p - 1) - ε
  CHECK(steenrod_index(3, -1, -3, true) == 1);
  CHECK(steenrod_index(3, -1, -3, false) == 2);
  CHECK(steenrod_index(3, 0, -2, false) == 4);
  CHECK_THROWS(steenrod_index(2, 0, -1, true));
}

TEST_CASE("power maps D^p_i") {
  const auto ctx = OperationContext::make(Geometry::simplicial, 3, 2);
  const auto a = parse_simplex_chain("[0,1] + [1,2]", ctx.ring);
  CHECK(big_d<Simplex>(ctx, -1, a).empty());
  // D_0 is the cup square
  const auto d0 = big_d<Simplex>(ctx, 0, a);
  for (const auto& c : cells_in<Simplex>(3, 2)) {
    const std::vector<SimplexCochain> aa = {a, a};
    CHECK(d0.coefficient(c) == cup_r_i<Simplex>(ctx, 2, 0, aa, SimplexChain::basis(c).reduced(ctx.ring)));
  }
  // degree bookkeeping: p q + i in homological degree
  const auto ctx3 = OperationContext::make(Geometry::simplicial, 6, 3);
  const auto b = parse_simplex_chain("[0,1,2]", ctx3.ring);
  for (int i = 0; i <= 4; ++i) {
    const auto d = big_d<Simplex>(ctx3, i, b);
    if (!d.empty()) CHECK(cochain_degree(d) == 3 * -2 + i);
  }
}

TEST_CASE("operations require cocycles") {
  const auto ctx = OperationContext::make(Geometry::simplicial, 2, 2);
  const auto a = parse_simplex_chain("[0,1]", ctx.ring);
  CHECK_THROWS_AS(steenrod_P_upper<Simplex>(ctx, 0, a), NotCocycleError);
  const auto c3 = OperationContext::make(Geometry::simplicial, 2, 3);
  const auto closed = coboundary<Simplex>(c3, parse_simplex_chain("[0]", c3.ring));
  CHECK_NOTHROW(steenrod_P_upper<Simplex>(c3, 0, closed));
  CHECK_THROWS(steenrod_betaP_upper<Simplex>(ctx, 0, coboundary<Simplex>(ctx, parse_simplex_chain("[0]", ctx.ring))));
}

TEST_CASE("printed evaluations on standard cells") {
  for (const auto& ev : oracle::simplicial_examples()) {
    INFO(ev.name);
    const auto got = oracle::computed_chain<Simplex>(ev);
    const auto want = oracle::printed_chain<Simplex>(ev);
    CHECK(got.size() == ev.terms.size());
    CHECK(got.reduced(Ring::mod(ev.p)) == want.reduced(Ring::mod(ev.p)));
    if (ev.p != 2) CHECK(got == want);
  }
  for (const auto& ev : oracle::cubical_examples()) {
    INFO(ev.name);
    const auto got = oracle::computed_chain<Cube>(ev);
    const auto want = oracle::printed_chain<Cube>(ev);
    CHECK(got.size() == ev.terms.size());
    CHECK(got.reduced(Ring::mod(ev.p)) == want.reduced(Ring::mod(ev.p)));
    if (ev.p != 2) CHECK(got == want);
  }
}

TEST_CASE("operation value equals the pairing with the printed chain") {
  // βP^1 on Δ^8 at p = 3, for the cocycle δ([0,1,2]) + ... : any cochain of
  // degree -3 that is closed works; use a coboundary so it is automatically one.
  const auto ctx = OperationContext::make(Geometry::simplicial, 8, 3);
  auto a = coboundary<Simplex>(ctx, parse_simplex_chain("[0,1,2] + 2*[3,4,5] + [1,6,8]", ctx.ring));
  const auto& ev = oracle::simplicial_examples()[2];
  const auto value = steenrod_betaP_upper<Simplex>(ctx, 1, a).coefficient(top_simplex(8));
  const std::vector<SimplexCochain> aaa = {a, a, a};
  CHECK(value == dual_pairing<Simplex>(aaa, oracle::printed_chain<Simplex>(ev).reduced(ctx.ring)));
}
