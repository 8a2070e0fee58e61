#include <doctest.h>

#include "patterns.hpp"
#include "scheme_checks.hpp"
#include "hve/schemes/ll.hpp"

using namespace hve;
using test::attrs;
using test::kStar;
using test::pattern;

TEST_SUITE("scheme_ll") {

TEST_CASE("record sizes") {
  auto rng = test::rng_for(200);
  const auto kp = Ll3::setup(rng, 4);
  CHECK(kp.pk.group_element_count() == 6 * 4 + 21);
  const auto ct = Ll3::encrypt(rng, attrs({1, 2, 3, 4}), Bytes{1}, kp.pk);
  CHECK(ct.group_element_count() == 21);
  CHECK(ct.gt_element_count() == 1);
  for (const auto& sigma : {pattern({kStar, kStar, kStar, kStar}), pattern({1, 2, 3, 4}),
                            pattern({kStar, 2, kStar, kStar})})
    CHECK(Ll3::gen_token(rng, sigma, kp.sk, kp.pk).group_element_count() == 12);
}

TEST_CASE("twelve pairings for every l and s") {
  auto rng = test::rng_for(201);
  for (std::size_t l : {1u, 3u, 6u}) {
    const auto kp = Ll3::setup(rng, l);
    std::vector<std::uint64_t> xv(l, 1);
    const auto ct = Ll3::encrypt(rng, AttributeVector::from_integers(xv), Bytes{}, kp.pk);
    for (std::size_t s = 0; s <= l; ++s) {
      std::vector<int> p(l, kStar);
      for (std::size_t i = 0; i < s; ++i) p[i] = 1;
      const auto tk = Ll3::gen_token(rng, pattern(p), kp.sk, kp.pk);
      PairingCounter c;
      CHECK(Ll3::query(ct, tk, kp.pk).is_match());
      CHECK(c.count() == 12);
    }
  }
}

TEST_CASE("correctness and raw mode") {
  auto rng = test::rng_for(202);
  const auto kp = Ll3::setup(rng, 4);
  CHECK(test::correctness_trials<Ll3>(rng, kp, 40, true).failures == 0);
  CHECK(test::correctness_trials<Ll3>(rng, kp, 40, false).failures == 0);
  CHECK(test::raw_mode_trials<Ll3>(rng, kp, 20).failures == 0);
}

TEST_CASE("all-wildcard token") {
  auto rng = test::rng_for(203);
  const auto kp = Ll3::setup(rng, 2);
  const auto tk = Ll3::gen_token(rng, pattern({kStar, kStar}), kp.sk, kp.pk);
  CHECK(tk.indices.empty());
  const GT m = GT::random(rng);
  CHECK(Ll3::query_raw(Ll3::encrypt_raw(rng, attrs({7, 8}), m, kp.pk), tk, kp.pk) == m);
}

TEST_CASE("token exponent structure") {
  auto rng = test::rng_for(204);
  const auto [kp, td] = Ll3::setup_with_trapdoor(rng, 3);
  const auto sigma = pattern({2, kStar, 5});
  const auto rnd = Ll3::sample_token_randomness(rng);
  const auto tk = Ll3::gen_token_with(sigma, kp.sk, kp.pk, rnd);
  const Basis3 b = basis3_from_trapdoor(td.basis);
  const Side2& b12 = b.side2.b12;
  const Side2& b3 = b.side2.b3;
  const Scalar agg = td.u[0] * Scalar::from_u64(2) + td.h[0] + td.u[2] * Scalar::from_u64(5) + td.h[2];
  CHECK(tk.k1 == b12.pow(td.alpha + td.w1 * rnd.r1 + td.w2 * rnd.r2 + agg * rnd.r3) * b3.pow(rnd.y1));
  CHECK(tk.k2 == b12.pow(-(td.v * rnd.r1)) * b3.pow(rnd.y2));
  CHECK(tk.k3 == b12.pow(-(td.v * rnd.r2)) * b3.pow(rnd.y3));
  CHECK(tk.k4 == b12.pow(-(td.v * rnd.r3)) * b3.pow(rnd.y4));
}

TEST_CASE("blinding invariance on both sides") {
  auto rng = test::rng_for(205);
  const auto kp = Ll3::setup(rng, 3);
  auto tk = Ll3::gen_token(rng, pattern({1, kStar, 3}), kp.sk, kp.pk);
  auto ct = Ll3::encrypt_raw(rng, attrs({1, 2, 3}), GT::one(), kp.pk);
  const GT before = Ll3::query_raw(ct, tk, kp.pk);
  CHECK(before.is_one());
  const Side1& b2 = kp.pk.basis.b2;
  for (Side1* c : {&ct.c1, &ct.c2, &ct.c3, &ct.c4[0], &ct.c4[1], &ct.c4[2]})
    *c *= b2.pow(Scalar::random(rng));
  for (Side2* k : {&tk.k1, &tk.k2, &tk.k3, &tk.k4}) *k *= kp.pk.b3_hat.pow(Scalar::random(rng));
  CHECK(Ll3::query_raw(ct, tk, kp.pk) == before);
}

TEST_CASE("serialization") {
  auto rng = test::rng_for(206);
  const auto kp = Ll3::setup(rng, 2);
  const auto tk = Ll3::gen_token(rng, pattern({kStar, 4}), kp.sk, kp.pk);
  const auto ct = Ll3::encrypt(rng, attrs({3, 4}), Bytes{1, 2}, kp.pk);
  CHECK(Ll3::PublicKey::deserialize(kp.pk.serialize()) == kp.pk);
  CHECK(Ll3::SecretKey::deserialize(kp.sk.serialize()) == kp.sk);
  CHECK(Ll3::Token::deserialize(tk.serialize()) == tk);
  CHECK(Ll3::Ciphertext::deserialize(ct.serialize()) == ct);
  CHECK(test::undetected_flips<Ll3::Token>(tk.serialize()) == 0);
  CHECK(test::undetected_flips<Ll3::Ciphertext>(ct.serialize(), 11) == 0);
  CHECK_THROWS_AS(Ll3::PublicKey::deserialize(kp.sk.serialize()), DecodeError);
}

TEST_CASE("input validation") {
  auto rng = test::rng_for(207);
  const auto kp = Ll3::setup(rng, 2);
  CHECK_THROWS_AS(Ll3::gen_token(rng, pattern({1, test::kQuery}), kp.sk, kp.pk), UsageError);
  CHECK_THROWS_AS(Ll3::encrypt(rng, attrs({1}), Bytes{}, kp.pk), UsageError);
  CHECK_THROWS_AS(Ll3::setup(rng, 0), UsageError);
}

}  // TEST_SUITE
