#include <doctest.h>

#include "patterns.hpp"
#include "scheme_checks.hpp"
#include "hve/schemes/asym.hpp"

using namespace hve;
using test::attrs;
using test::kStar;
using test::pattern;

TEST_SUITE("scheme_asym") {

TEST_CASE("record sizes") {
  auto rng = test::rng_for(400);
  const auto kp = Asym1::setup(rng, 5);
  const auto ct = Asym1::encrypt(rng, attrs({1, 2, 3, 4, 5}), Bytes{1}, kp.pk);
  CHECK(ct.group_element_count() == 8);
  CHECK(ct.gt_element_count() == 1);
  const auto tk = Asym1::gen_token(rng, pattern({1, kStar, 3, kStar, kStar}), kp.sk, kp.pk);
  CHECK(tk.group_element_count() == 4);
  static_assert(std::is_same_v<decltype(Asym1::Token::k0), G2>);
  static_assert(std::is_same_v<decltype(Asym1::Ciphertext::c3)::value_type, G1>);
}

TEST_CASE("four pairings for every pattern") {
  auto rng = test::rng_for(401);
  const auto kp = Asym1::setup(rng, 4);
  const auto ct = Asym1::encrypt(rng, attrs({1, 1, 1, 1}), Bytes{}, kp.pk);
  for (int s = 0; s <= 4; ++s) {
    std::vector<int> p(4, kStar);
    for (int i = 0; i < s; ++i) p[i] = 1;
    const auto tk = Asym1::gen_token(rng, pattern(p), kp.sk, kp.pk);
    PairingCounter c;
    CHECK(Asym1::query(ct, tk, kp.pk).is_match());
    CHECK(c.count() == 4);
  }
}

TEST_CASE("correctness and raw mode") {
  auto rng = test::rng_for(402);
  const auto kp = Asym1::setup(rng, 4);
  CHECK(test::correctness_trials<Asym1>(rng, kp, 60, true).failures == 0);
  CHECK(test::correctness_trials<Asym1>(rng, kp, 60, false).failures == 0);
  CHECK(test::raw_mode_trials<Asym1>(rng, kp, 30).failures == 0);
}

TEST_CASE("raw identity e(C0,K0)^-1 e(C1,K1) e(C2,K2) e(C3,K3) = e(v^t, g^ab)^-1") {
  auto rng = test::rng_for(403);
  const auto kp = Asym1::setup(rng, 3);
  const Scalar t = Scalar::random(rng);
  const auto ct = Asym1::encrypt_raw_with(attrs({4, 5, 6}), GT::one(), kp.pk, {t});
  const auto tk = Asym1::gen_token(rng, pattern({4, kStar, 6}), kp.sk, kp.pk);
  const GT expect =
      pair(kp.pk.v.pow(t), G2::generator().pow(kp.sk.alpha * kp.sk.beta)).inverse();
  const G1 agg = ct.c3[0] * ct.c3[2];
  const GT got = pair(ct.c0, tk.k0).inverse() * pair(ct.c1, tk.k1) * pair(ct.c2, tk.k2) *
                 pair(agg, tk.k3);
  CHECK(got == expect);
  CHECK(Asym1::query_raw(ct, tk, kp.pk).is_one());
}

TEST_CASE("token exponent structure") {
  auto rng = test::rng_for(404);
  const auto kp = Asym1::setup(rng, 2);
  const auto rnd = Asym1::sample_token_randomness(rng);
  const auto tk = Asym1::gen_token_with(pattern({3, 9}), kp.sk, kp.pk, rnd);
  const auto& sk = kp.sk;
  const G2 gh = G2::generator();
  const G2 vh = gh.pow(sk.v);
  CHECK(tk.k1 == vh.pow(rnd.r1));
  CHECK(tk.k2 == vh.pow(rnd.r2));
  CHECK(tk.k3 == vh.pow(rnd.r3));
  const Scalar agg = sk.u[0] * Scalar::from_u64(3) + sk.h[0] + sk.u[1] * Scalar::from_u64(9) + sk.h[1];
  CHECK(tk.k0 == gh.pow(sk.alpha * sk.beta) * gh.pow(sk.w1).pow(rnd.r1) *
                     gh.pow(sk.w2).pow(rnd.r2) * gh.pow(agg).pow(rnd.r3));
  CHECK(kp.pk.omega == pair(kp.pk.v, gh).pow(sk.alpha * sk.beta));
}

TEST_CASE("all-wildcard token") {
  auto rng = test::rng_for(405);
  const auto kp = Asym1::setup(rng, 2);
  const auto tk = Asym1::gen_token(rng, pattern({kStar, kStar}), kp.sk, kp.pk);
  const GT m = GT::random(rng);
  CHECK(Asym1::query_raw(Asym1::encrypt_raw(rng, attrs({0, 1}), m, kp.pk), tk, kp.pk) == m);
}

TEST_CASE("requires an asymmetric suite") {
  auto rng = test::rng_for(406);
  CHECK_THROWS_AS(Asym1::setup(rng, 2, GroupSuite::bls12_381_symmetric()), UsageError);
  auto kp = Asym1::setup(rng, 2);
  kp.pk.suite_id = GroupSuite::bls12_381_symmetric().id;
  CHECK_THROWS_AS(Asym1::PublicKey::deserialize(kp.pk.serialize()), DecodeError);
}

TEST_CASE("serialization") {
  auto rng = test::rng_for(407);
  const auto kp = Asym1::setup(rng, 2);
  const auto tk = Asym1::gen_token(rng, pattern({kStar, 4}), kp.sk, kp.pk);
  const auto ct = Asym1::encrypt(rng, attrs({3, 4}), Bytes{1, 2}, kp.pk);
  CHECK(Asym1::PublicKey::deserialize(kp.pk.serialize()) == kp.pk);
  CHECK(Asym1::SecretKey::deserialize(kp.sk.serialize()) == kp.sk);
  CHECK(Asym1::Token::deserialize(tk.serialize()) == tk);
  CHECK(Asym1::Ciphertext::deserialize(ct.serialize()) == ct);
  CHECK(test::undetected_flips<Asym1::Token>(tk.serialize()) == 0);
  CHECK(test::undetected_flips<Asym1::Ciphertext>(ct.serialize(), 3) == 0);
  CHECK(test::undetected_flips<Asym1::SecretKey>(kp.sk.serialize()) == 0);
}

}  // TEST_SUITE
