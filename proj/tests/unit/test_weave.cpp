#include <doctest.h>

#include <braidloom/errors.hpp>
#include <braidloom/invariants.hpp>
#include <braidloom/weave.hpp>

#include <algorithm>
#include <functional>

#include "oracles.hpp"

using namespace braidloom;

namespace {
BraidWord W(const char* s, int n) { return BraidWord::parse(s, n); }
AWord A(const char* s, int n) { return AWord::parse(s, n); }
}  // namespace

TEST_CASE("cycle_normalize examples") {
  const CycleNormalization id = cycle_normalize(Permutation::identity(3));
  CHECK(id.type == TypeVector({1, 1, 1}));
  CHECK(id.tau.is_identity());

  const Permutation p({2, 3, 1});  // 1 -> 2 -> 3 -> 1
  const CycleNormalization c = cycle_normalize(p);
  CHECK(c.type == TypeVector::single(3));
  CHECK(c.tau.inverse() * p * c.tau == Permutation({3, 1, 2}));

  const CycleNormalization d = cycle_normalize(Permutation({1, 3, 2}));
  CHECK(d.type == TypeVector({2, 1}));
}

TEST_CASE("cycle_normalize property") {
  for (int k = 0; k < 300; ++k) {
    const int n = oracle::uniform(1, 8);
    const Permutation p = permutation_of(oracle::random_word(n, oracle::uniform(0, 20)));
    const CycleNormalization c = cycle_normalize(p);
    CHECK(c.type.strands() == n);
    CHECK(c.tau.inverse() * p * c.tau == permutation_of(perm_braid(c.type)));
    std::vector<int> lengths = p.cycle_type();
    std::sort(lengths.rbegin(), lengths.rend());
    CHECK(c.type.parts() == lengths);
  }
}

TEST_CASE("WovenBraid construction") {
  const WovenBraid w(TypeVector::single(3), {{3, A("A[1,3]^-1", 3)}});
  CHECK(w.word() == W("1 2 2 -1 -1 -2", 3));
  CHECK(w.component(3) == A("A[1,3]^-1", 3));
  CHECK_THROWS_AS(WovenBraid(TypeVector::single(3), {{2, A("A[1,2]", 3)}}), InvalidInput);
  CHECK_THROWS_AS(WovenBraid(TypeVector::single(3), {{3, A("A[1,2]", 3)}}), InvalidInput);
  const WovenBraid v(TypeVector({2, 1}), {{2, A("A[1,2]", 3)}, {3, AWord(3)}});
  CHECK(v.components().size() == 1);
}

TEST_CASE("is_woven examples") {
  for (const char* t : {"4", "3,1,2", "1,1", "2,2"}) {
    const TypeVector type = TypeVector::parse(t);
    CHECK(is_woven(perm_braid(type), type));
  }
  CHECK(is_woven(W("1 2 2 -1 -1 -2", 3), TypeVector::single(3)));
  CHECK_FALSE(is_woven(W("1 1 2", 3), TypeVector::single(3)));
  // right permutation, but the pure part has a component at j = 2
  CHECK_FALSE(is_woven(W("1 2 1 1", 3), TypeVector::single(3)));
  const auto w = as_woven(W("1 2 2 -1 -1 -2", 3), TypeVector::single(3));
  REQUIRE(w.has_value());
  CHECK(w->component(3) == A("A[1,3]^-1", 3));
}

TEST_CASE("weave examples") {
  const WeaveResult r = weave(W("-1 -1 -1", 2));
  CHECK(r.woven.type() == TypeVector::single(2));
  CHECK(r.woven.component(2) == A("A[1,2]^-2", 2));
  CHECK(r.woven.word() == W("-1 -1 -1", 2));

  const BraidWord already = W("1 2 2 -1 -1 -2", 3);
  const WeaveResult s = weave(already);
  CHECK(is_woven(s.woven.word(), TypeVector::single(3)));
  CHECK(braids_equal(s.woven.word(), s.conjugator.inverse() * already * s.conjugator));

  const WeaveResult e = weave(BraidWord(4));
  CHECK(e.woven.type() == TypeVector({1, 1, 1, 1}));
  CHECK(e.woven.word().empty());
}

TEST_CASE("weave: wovenness, conjugacy, type") {
  for (int k = 0; k < 150; ++k) {
    const int n = oracle::uniform(1, 6);
    const BraidWord b = oracle::random_word(n, oracle::uniform(0, 14));
    const WeaveResult r = weave(b, true);
    const BraidWord w = r.woven.word();
    CHECK(is_woven(w, r.woven.type()));
    const BraidWord conj = r.conjugator.inverse() * b * r.conjugator;
    CHECK(braids_equal(w, conj));
    CHECK(oracle::burau_equal(w, conj));
    std::vector<int> lengths = permutation_of(b).cycle_type();
    std::sort(lengths.rbegin(), lengths.rend());
    CHECK(r.woven.type().parts() == lengths);
    for (const WeaveStep& st : r.steps)
      CHECK(std::all_of(st.not_free.begin(), st.not_free.end(), [&](int x) { return x > st.s; }));
  }
}

TEST_CASE("weaving a woven braid stays in its conjugacy class") {
  const oracle::LongHomfly cap;
  for (int k = 0; k < 40; ++k) {
    const int n = oracle::uniform(2, 4);
    const WovenBraid w = weave(oracle::random_word(n, oracle::uniform(0, 10))).woven;
    const WeaveResult again = weave(w.word());
    CHECK(again.woven.type() == w.type());
    CHECK(homfly(again.woven.word()) == homfly(w.word()));
    CHECK(braids_equal(again.woven.word(), again.conjugator.inverse() * w.word() * again.conjugator));
  }
}

TEST_CASE("inv preserves type-(n) wovenness") {
  for (int k = 0; k < 100; ++k) {
    const int n = oracle::uniform(2, 5);
    AWord beta(n);
    for (int m = oracle::uniform(0, 5); m > 0; --m) beta.append({oracle::uniform(1, n - 1), n, oracle::uniform(0, 1) ? 1 : -1});
    const WovenBraid w = WovenBraid::single(beta);
    CHECK(is_woven(inv(w.word()), TypeVector::single(n)));
  }
}
