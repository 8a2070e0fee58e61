#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "hve/core/codec.hpp"
#include "hve/core/error.hpp"
#include "hve/core/groups.hpp"

using namespace hve;

namespace {

bool less_than_order(const std::array<std::uint8_t, 32>& be) {
  const auto p = group_order_bytes();
  return std::lexicographical_compare(be.begin(), be.end(), p.begin(), p.end());
}

}  // namespace

TEST_SUITE("core_groups") {

TEST_CASE("group order is the BLS12-381 subgroup order") {
  const auto p = group_order_bytes();
  const std::string hex = Scalar::from_i64(-1).to_hex();
  CHECK(hex == "73eda753299d7d483339d80809a1d80553bda402fffe5bfeffffffff00000000");
  CHECK(p[0] == 0x73);  // 255-bit, so comfortably above 2^250
  CHECK(p[31] == 0x01);
}

TEST_CASE("scalar_random is deterministic under a fixed seed") {
  auto a = test::rng_for(0);
  auto b = test::rng_for(0);
  CHECK(Scalar::random(a) == Scalar::random(b));
  auto c = test::rng_for(1);
  auto d = test::rng_for(0);
  CHECK_FALSE(Scalar::random(c) == Scalar::random(d));
}

TEST_CASE("scalar_random stays in range and does not collide") {
  auto rng = test::rng_for(7);
  std::set<std::string> seen;
  for (int i = 0; i < 1000; ++i) {
    const Scalar s = Scalar::random(rng);
    CHECK(less_than_order(s.to_bytes()));
    seen.insert(s.to_hex());
  }
  CHECK(seen.size() == 1000);
}

TEST_CASE("scalar arithmetic") {
  auto rng = test::rng_for(2);
  const Scalar a = Scalar::random_nonzero(rng);
  const Scalar b = Scalar::random(rng);
  CHECK(a * a.inverse() == Scalar::one());
  CHECK((a + b) - b == a);
  CHECK(a + (-a) == Scalar::zero());
  CHECK(Scalar::from_u64(6) == Scalar::from_u64(2) * Scalar::from_u64(3));
  CHECK(Scalar::from_i64(-5) + Scalar::from_u64(5) == Scalar::zero());
  CHECK_THROWS_AS(Scalar::zero().inverse(), UsageError);
}

TEST_CASE("scalar canonical decode rejects values at or above the order") {
  const auto p = group_order_bytes();
  CHECK_THROWS_AS(Scalar::from_canonical(p), DecodeError);
  auto below = p;
  below[31] -= 1;
  CHECK(Scalar::from_canonical(below) == Scalar::from_i64(-1));
  CHECK(Scalar::from_bytes_reduced(p) == Scalar::zero());
}

TEST_CASE("hash_to_scalar") {
  const Scalar x = hash_to_scalar("abc", "tagA");
  CHECK(x == hash_to_scalar("abc", "tagA"));
  CHECK_FALSE(x == hash_to_scalar("abc", "tagB"));
  CHECK_FALSE(x == hash_to_scalar("abd", "tagA"));
  const Scalar e = hash_to_scalar("", "tagA");
  CHECK(less_than_order(e.to_bytes()));
  // Length prefix keeps (tag, data) splits apart.
  CHECK_FALSE(hash_to_scalar("bc", "a") == hash_to_scalar("c", "ab"));
}

TEST_CASE("pairing bilinearity with small exponents") {
  const G1 g = G1::generator();
  const G2 gh = G2::generator();
  CHECK(pair(g.pow(Scalar::from_u64(2)), gh.pow(Scalar::from_u64(3))) ==
        GT::generator().pow(Scalar::from_u64(6)));
  CHECK(pair(G1::identity(), gh).is_one());
  CHECK(pair(g, G2::identity()).is_one());
  CHECK_FALSE(GT::generator().is_one());
}

TEST_CASE("pairing bilinearity with random exponents") {
  auto rng = test::rng_for(3);
  for (int i = 0; i < 5; ++i) {
    const Scalar a = Scalar::random(rng), b = Scalar::random(rng);
    CHECK(pair(G1::generator().pow(a), G2::generator().pow(b)) == GT::generator().pow(a * b));
  }
}

TEST_CASE("pair_product equals the product of single pairings and is counted") {
  auto rng = test::rng_for(4);
  std::vector<G1> xs;
  std::vector<G2> ys;
  GT expect;
  for (int i = 0; i < 4; ++i) {
    xs.push_back(G1::generator().pow(Scalar::random(rng)));
    ys.push_back(G2::generator().pow(Scalar::random(rng)));
    expect *= pair(xs.back(), ys.back());
  }
  xs.push_back(G1::identity());
  ys.push_back(G2::generator());
  PairingCounter counter;
  CHECK(pair_product(xs, ys) == expect);
  CHECK(counter.count() == 5);
}

TEST_CASE("group laws") {
  auto rng = test::rng_for(5);
  const Scalar a = Scalar::random(rng), b = Scalar::random(rng);
  const G1 x = G1::generator().pow(a);
  const G2 y = G2::generator().pow(b);
  CHECK((x * x.inverse()).is_identity());
  CHECK((y * y.inverse()).is_identity());
  CHECK(x.pow(b) == G1::generator().pow(a * b));
  CHECK(x * G1::generator().pow(b) == G1::generator().pow(a + b));
  const GT t = GT::random(rng);
  CHECK((t * t.inverse()).is_one());
  CHECK(t.pow(a).pow(b) == t.pow(a * b));
  CHECK(t.pow(a) * t.pow(b) == t.pow(a + b));
  CHECK(t.pow(Scalar::zero()).is_one());
}

TEST_CASE("element serialization round trips") {
  auto rng = test::rng_for(6);
  for (int i = 0; i < 100; ++i) {
    const Scalar s = Scalar::random(rng);
    CHECK(Scalar::from_canonical(s.to_bytes()) == s);
    const G1 x = G1::generator().pow(s);
    const auto xb = x.serialize();
    CHECK(G1::deserialize(xb) == x);
    CHECK(G1::deserialize(xb).serialize() == xb);
    const G2 y = G2::generator().pow(s);
    CHECK(G2::deserialize(y.serialize()) == y);
    if (i < 20) {
      const GT t = GT::generator().pow(s);
      const Bytes tb = t.serialize();
      CHECK(GT::deserialize(tb) == t);
      CHECK(GT::deserialize(tb).serialize() == tb);
    }
  }
  CHECK(G1::deserialize(G1::identity().serialize()).is_identity());
  CHECK(G2::deserialize(G2::identity().serialize()).is_identity());
}

TEST_CASE("element deserialization rejects malformed encodings") {
  auto bad = G1::generator().serialize();
  bad[47] ^= 0x01;
  CHECK_THROWS_AS(G1::deserialize(bad), DecodeError);
  CHECK_THROWS_AS(G1::deserialize(std::span(bad).first(47)), DecodeError);
  auto bad2 = G2::generator().serialize();
  bad2[95] ^= 0x01;
  CHECK_THROWS_AS(G2::deserialize(bad2), DecodeError);
  Bytes gt = GT::generator().serialize();
  gt[575] ^= 0x01;
  CHECK_THROWS_AS(GT::deserialize(gt), DecodeError);
}

TEST_CASE("record container detects every single-byte flip") {
  auto rng = test::rng_for(8);
  codec::Writer w("TEST", 1);
  w.u32(7).scalar(Scalar::random(rng)).g1(G1::generator()).text("x");
  const Bytes rec = std::move(w).finish();
  {
    codec::Reader r(rec, "TEST");
    CHECK(r.u32() == 7);
  }
  for (std::size_t i = 0; i < rec.size(); ++i) {
    Bytes bad = rec;
    bad[i] ^= 0x5a;
    CHECK_THROWS_AS(codec::Reader(bad, "TEST"), DecodeError);
  }
}

TEST_CASE("record container reports unsupported versions distinctly") {
  codec::Writer w("TEST", 1);
  w.u32(1);
  Bytes rec = std::move(w).finish();
  rec[4] = 9;
  CHECK_THROWS_AS(codec::Reader(rec, "TEST"), UnsupportedVersionError);
  try {
    codec::Reader r(rec, "TEST");
  } catch (const UnsupportedVersionError& e) {
    CHECK(e.version() == 9);
  }
}

TEST_CASE("record container rejects truncation and wrong kinds") {
  codec::Writer w("TEST", 1);
  w.u32(1);
  Bytes rec = std::move(w).finish();
  for (std::size_t n = 0; n < rec.size(); ++n)
    CHECK_THROWS_AS(codec::Reader(std::span(rec).first(n), "TEST"), DecodeError);
  CHECK_THROWS_AS(codec::Reader(rec, "OTHER"), DecodeError);
  CHECK(codec::Reader::peek_kind(rec) == "TEST");
}

TEST_CASE("group suites") {
  const auto& a = GroupSuite::default_suite();
  CHECK(a.mode == SuiteMode::asymmetric);
  CHECK(&GroupSuite::by_id(a.id) == &a);
  CHECK(&GroupSuite::by_name(a.name) == &a);
  const auto& s = GroupSuite::bls12_381_symmetric();
  CHECK(s.mode == SuiteMode::symmetric);
  CHECK(s.symmetric_emulated);
  CHECK_FALSE(a.gt_generator().is_one());
  CHECK_THROWS_AS(GroupSuite::by_id(99), DecodeError);
  CHECK_THROWS_AS(GroupSuite::by_name("nope"), UsageError);
}

TEST_CASE("emulated symmetric elements") {
  auto rng = test::rng_for(9);
  const Scalar a = Scalar::random(rng), b = Scalar::random(rng);
  const SymElement x = SymElement::from_exponent(a);
  const SymElement y = SymElement::from_exponent(b);
  CHECK(x.consistent());
  CHECK(pair(x, y) == pair(y, x));
  CHECK(pair(x, y) == GT::generator().pow(a * b));
  SymElement broken = x;
  broken.g2 = broken.g2 * G2::generator();
  CHECK_FALSE(broken.consistent());
}

}  // TEST_SUITE
