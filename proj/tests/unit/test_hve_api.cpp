#include <doctest.h>

#include "fixtures.hpp"
#include "hve/api/pattern.hpp"
#include "hve/api/sealed.hpp"
#include "hve/core/error.hpp"

using namespace hve;

namespace {

// Direct reading of the definition, independent of predicate_eval.
bool definition(const std::vector<int>& sigma, const std::vector<int>& x) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sigma[i] >= 0 && sigma[i] != x[i]) return false;
  return true;
}

PatternVector pattern_of(const std::vector<int>& sigma) {
  std::vector<Slot> slots;
  for (int v : sigma) {
    if (v < 0)
      slots.emplace_back(Wildcard{});
    else
      slots.emplace_back(Scalar::from_u64(v));
  }
  return PatternVector(slots);
}

}  // namespace

TEST_SUITE("hve_api") {

TEST_CASE("predicate_eval basics") {
  const AttributeVector x = AttributeVector::from_integers(std::vector<std::uint64_t>{4, 5, 6});
  CHECK(predicate_eval(PatternVector::all_wildcards(3), x));
  CHECK(predicate_eval(PatternVector::exact(x), x));
  CHECK_FALSE(predicate_eval(PatternVector::exact(x).with(1, Scalar::from_u64(9)), x));
  CHECK(predicate_eval(PatternVector::exact(x).with(1, Wildcard{}), x));
  CHECK_THROWS_AS(predicate_eval(PatternVector::all_wildcards(2), x), UsageError);
  CHECK_THROWS_AS(predicate_eval(PatternVector::exact(x).with(0, Delegatable{}), x), UsageError);
}

TEST_CASE("predicate_eval agrees with the definition exhaustively for l=3 over {0,1,2}") {
  int cases = 0;
  for (int s = 0; s < 64; ++s) {
    const std::vector<int> sigma = {s % 4 - 1, s / 4 % 4 - 1, s / 16 - 1};
    for (int v = 0; v < 27; ++v) {
      const std::vector<int> xv = {v % 3, v / 3 % 3, v / 9};
      const AttributeVector x = AttributeVector::from_integers(
          std::vector<std::uint64_t>(xv.begin(), xv.end()));
      CHECK(predicate_eval(pattern_of(sigma), x) == definition(sigma, xv));
      ++cases;
    }
  }
  CHECK(cases == 64 * 27);
}

TEST_CASE("pattern parsing from strings") {
  const std::vector<std::string> text = {"alice", "*", "?"};
  const PatternVector p = PatternVector::from_strings(text);
  CHECK(p.is_fixed(0));
  CHECK(p.value(0) == attribute_scalar("alice"));
  CHECK(p.is_wildcard(1));
  CHECK(p.is_delegatable(2));
  CHECK(p.fixed_indices() == std::vector<std::size_t>{0});
  CHECK(p.delegatable_indices() == std::vector<std::size_t>{2});
  CHECK(p.delegatable_as_wildcard().is_wildcard(2));
  CHECK_THROWS_AS(p.value(1), UsageError);
  const std::vector<std::string> attrs = {"alice", "x", "y"};
  CHECK(AttributeVector::from_strings(attrs)[0] == attribute_scalar("alice"));
}

TEST_CASE("seal/open round trip") {
  auto rng = test::rng_for(30);
  for (std::size_t n : {0u, 1u, 100u, 5000u}) {
    const Bytes payload = test::random_bytes(rng, n);
    const Sealing s = seal(rng, payload);
    CHECK(s.sealed.payload_size() == n);
    CHECK(s.sealed.tag_len() == 16);
    const MatchResult r = open(s.mask, s.sealed);
    REQUIRE(r.is_match());
    CHECK(r.payload() == payload);
  }
}

TEST_CASE("open with a fresh mask never matches") {
  auto rng = test::rng_for(31);
  const Bytes payload = test::random_bytes(rng, 32);
  const Sealing s = seal(rng, payload);
  int false_accepts = 0;
  for (int i = 0; i < 1000; ++i)
    if (open(GT::random(rng), s.sealed).is_match()) ++false_accepts;
  CHECK(false_accepts == 0);
}

TEST_CASE("tampered blobs are rejected") {
  auto rng = test::rng_for(32);
  const Sealing s = seal(rng, test::random_bytes(rng, 20));
  for (std::size_t i = 0; i < s.sealed.blob.size(); ++i) {
    SealedPayload bad = s.sealed;
    bad.blob[i] ^= 0x01;
    CHECK_FALSE(open(s.mask, bad).is_match());
  }
  SealedPayload shortened{Bytes(s.sealed.blob.begin(), s.sealed.blob.begin() + 10)};
  CHECK_FALSE(open(s.mask, shortened).is_match());
}

TEST_CASE("payload size limit") {
  auto rng = test::rng_for(33);
  CHECK_THROWS_AS(seal(rng, Bytes(11), 10), UsageError);
  CHECK_NOTHROW(seal(rng, Bytes(10), 10));
  const GT mask = GT::random(rng);
  const SealedPayload sp = seal_with_mask(rng, mask, Bytes{1, 2, 3});
  CHECK(open(mask, sp).payload() == Bytes{1, 2, 3});
}

}  // TEST_SUITE
