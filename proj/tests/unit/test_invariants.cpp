#include <doctest.h>

#include <braidloom/codec.hpp>
#include <braidloom/errors.hpp>
#include <braidloom/invariants.hpp>

#include "oracles.hpp"

using namespace braidloom;

namespace {

BraidWord W(const char* s, int n) { return BraidWord::parse(s, n); }
TwoVarLaurent vz(int a, int b, std::int64_t c = 1) { return TwoVarLaurent::monomial({a, b}, c); }
OneVarLaurent A(int e, std::int64_t c = 1) { return OneVarLaurent::monomial({e}, c); }

OneVarLaurent invert_variable(const OneVarLaurent& p) {
  OneVarLaurent r;
  for (const auto& [e, c] : p.terms()) r.add_term({-e[0]}, c);
  return r;
}

}  // namespace

TEST_CASE("Laurent arithmetic") {
  const OneVarLaurent x = A(1), one(1);
  CHECK((x + one) * (x - one) == A(2) - one);
  CHECK((x + one).pow(3) == A(3) + A(2, 3) + A(1, 3) + one);
  CHECK((x - x).is_zero());
  CHECK(exact_divide(A(2) - one, x - one) == x + one);
  CHECK_THROWS_AS(exact_divide(A(2) + one, x - one), InvalidInput);
  CHECK((A(-2) - A(2, 3)).to_string({"A"}) == "-3*A^2 + A^-2");
  CHECK(TwoVarLaurent().to_string({"v", "z"}) == "0");
  CHECK_THROWS_AS(OneVarLaurent(INT64_MAX) + OneVarLaurent(1), ResourceLimit);
  CHECK((vz(1, -1) - vz(-1, -1)).degree_range(0) == std::pair{-1, 1});
}

TEST_CASE("closure_components and writhe") {
  CHECK(closure_components(W("1", 2)) == 1);
  CHECK(closure_components(BraidWord(4)) == 4);
  CHECK(closure_components(W("1 1", 2)) == 2);
  CHECK(closure_components(decode_int({-1362201})) == 1);
  CHECK(writhe(W("-1 -1 -1", 2)) == -3);
  CHECK(writhe(BraidWord(3)) == 0);
  for (int k = 0; k < 50; ++k) {
    const BraidWord w = oracle::random_word(oracle::uniform(1, 6), oracle::uniform(0, 12));
    CHECK(writhe(mirror(w)) == -writhe(w));
  }
}

TEST_CASE("Jones via bracket: golden values") {
  CHECK(jones_via_bracket(BraidWord(1)) == OneVarLaurent(1));
  CHECK(jones_via_bracket(W("1", 2)) == OneVarLaurent(1));
  // right-handed trefoil t + t^3 - t^4 with t = A^-4
  CHECK(jones_via_bracket(W("1 1 1", 2)) == A(-4) + A(-12) - A(-16));
  CHECK(jones_via_bracket(W("-1 -1 -1", 2)) == A(4) + A(12) - A(16));
  // figure eight t^-2 - t^-1 + 1 - t + t^2
  CHECK(jones_via_bracket(W("1 -2 1 -2", 3)) == A(8) - A(4) + OneVarLaurent(1) - A(-4) + A(-8));
  // two-component unlink: -A^2 - A^-2
  CHECK(jones_via_bracket(BraidWord(2)) == -(A(2) + A(-2)));
}

TEST_CASE("Jones via bracket: properties") {
  for (int k = 0; k < 60; ++k) {
    const int n = oracle::uniform(2, 5);
    const BraidWord w = oracle::random_word(n, oracle::uniform(0, 12));
    const OneVarLaurent j = jones_via_bracket(w);
    CHECK(jones_via_bracket(mirror(w)) == invert_variable(j));
    CHECK(jones_via_bracket(inv(w)) == j);
    CHECK(jones_via_bracket(oracle::random_rewrite(w)) == j);
  }
  Limits lim = current_limits();
  lim.jones_max_crossings = 4;
  set_limits(lim);
  CHECK_THROWS_AS(jones_via_bracket(W("1 1 1 1 1", 2)), ResourceLimit);
  lim.jones_max_crossings = Limits{}.jones_max_crossings;
  set_limits(lim);
}

TEST_CASE("HOMFLY: golden values") {
  CHECK(homfly(BraidWord(1)) == TwoVarLaurent(1));
  CHECK(homfly(W("1 2 3", 4)) == TwoVarLaurent(1));
  // two-component unlink (v^-1 - v) / z
  CHECK(homfly(BraidWord(2)) == vz(-1, -1) - vz(1, -1));
  const TwoVarLaurent right_trefoil = vz(2, 0, 2) - vz(4, 0) + vz(2, 2);
  CHECK(homfly(W("1 1 1", 2)) == right_trefoil);
  CHECK(homfly(W("-1 -1 -1", 2)) == vz(-2, 0, 2) - vz(-4, 0) + vz(-2, 2));
  CHECK(homfly_mirror(right_trefoil) == homfly(W("-1 -1 -1", 2)));
  // figure eight v^-2 - 1 + v^2 - z^2
  CHECK(homfly(W("1 -2 1 -2", 3)) == vz(-2, 0) - TwoVarLaurent(1) + vz(2, 0) - vz(0, 2));
  // Hopf link from sigma_1^2: skein with P0 = unknot, P- = unlink
  CHECK(homfly(W("1 1", 2)) == vz(2, 0) * (vz(-1, -1) - vz(1, -1)) + vz(1, 1));
}

TEST_CASE("HOMFLY: Markov invariance and skein relation") {
  for (int k = 0; k < 60; ++k) {
    const int n = oracle::uniform(2, 4);
    const BraidWord w = oracle::random_word(n, oracle::uniform(0, 10));
    const TwoVarLaurent p = homfly(w);
    const BraidWord g = oracle::random_word(n, oracle::uniform(0, 6));
    CHECK(homfly(g.inverse() * w * g) == p);
    CHECK(homfly(free_reduce(w)) == p);
    BraidWord r = w;
    for (int m = 0; m < 3; ++m) r = oracle::random_rewrite(r);
    CHECK(homfly(r) == p);
    for (int sign : {1, -1}) CHECK(homfly(w.embedded(n + 1) * BraidWord::generator(n + 1, n, sign)) == p);
    CHECK(homfly(mirror(w)) == homfly_mirror(p));
    CHECK(homfly(inv(w)) == p);
    CHECK(jones_from_homfly(p) == jones_via_bracket(w));

    // v^-1 P(a s b) - v P(a s^-1 b) = z P(a b)
    const int i = oracle::uniform(1, n - 1);
    const BraidWord a = oracle::random_word(n, oracle::uniform(0, 5));
    const BraidWord b = oracle::random_word(n, oracle::uniform(0, 5));
    const TwoVarLaurent plus = homfly(a * BraidWord::generator(n, i) * b);
    const TwoVarLaurent minus = homfly(a * BraidWord::generator(n, i, -1) * b);
    const TwoVarLaurent zero = homfly(a * b);
    CHECK(vz(-1, 0) * plus - vz(1, 0) * minus == vz(0, 1) * zero);
  }
}

TEST_CASE("HOMFLY caps") {
  CHECK_THROWS_AS(homfly(BraidWord(8)), ResourceLimit);
  CHECK_THROWS_AS(homfly(BraidWord(2, std::vector<int>(31, 1))), ResourceLimit);
}

TEST_CASE("MFW bound") {
  CHECK(mfw_bound(homfly(BraidWord(1))) == 1);
  CHECK(mfw_bound(homfly(decode_int({-5}))) == 2);
  CHECK(mfw_bound(homfly(decode_int({39}))) == 4);
  CHECK(mfw_bound(homfly(W("1 -2 1 -2", 3))) == 3);
}
