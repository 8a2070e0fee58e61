#include <doctest.h>

#include "scheme_checks.hpp"
#include "hve/schemes/bw.hpp"

using namespace hve;

namespace {

PatternVector pattern(std::initializer_list<int> v) {
  std::vector<Slot> s;
  for (int x : v) {
    if (x < 0)
      s.emplace_back(Wildcard{});
    else
      s.emplace_back(Scalar::from_u64(x));
  }
  return PatternVector(s);
}

AttributeVector attrs(std::initializer_list<std::uint64_t> v) {
  return AttributeVector::from_integers(std::vector<std::uint64_t>(v));
}

}  // namespace

TEST_SUITE("scheme_bw") {

TEST_CASE("setup sizes and public key structure") {
  auto rng = test::rng_for(100);
  const auto [kp, td] = Bw2::setup_with_trapdoor(rng, 1);
  CHECK(kp.pk.group_element_count() == 14);
  for (std::size_t l = 1; l <= 4; ++l) {
    const auto k = Bw2::setup(rng, l);
    CHECK(k.pk.group_element_count() == 6 * l + 8);
  }
  const Basis2 b = basis2_from_trapdoor(td.basis);
  // Omega = e(V B2^-z_v, B12)^alpha
  CHECK(kp.pk.omega ==
        vec_pair(kp.pk.v * kp.pk.basis.b2.pow(-td.z_v), b.side2.b12).pow(td.alpha));
  CHECK(check_orthogonal(kp.pk.basis.b2, b.side2.b12));
  CHECK(kp.sk.v2 == b.side2.b12.pow(td.v));
  CHECK_THROWS_AS(Bw2::setup(rng, 0), UsageError);
}

TEST_CASE("token shape") {
  auto rng = test::rng_for(101);
  const auto kp = Bw2::setup(rng, 3);
  const auto all = Bw2::gen_token(rng, PatternVector::all_wildcards(3), kp.sk, kp.pk);
  CHECK(all.indices.empty());
  CHECK(all.group_element_count() == 2);
  CHECK(all.k1 == kp.sk.b12_alpha);
  const auto two = Bw2::gen_token(rng, pattern({1, -1, 2}), kp.sk, kp.pk);
  CHECK(two.indices == std::vector<std::size_t>{0, 2});
  CHECK(two.group_element_count() == 10);
  // Token components are orthogonal to B2.
  CHECK(check_orthogonal(kp.pk.basis.b2, two.k1));
  for (const auto& k : two.k2) CHECK(check_orthogonal(kp.pk.basis.b2, k));
  for (const auto& k : two.k3) CHECK(check_orthogonal(kp.pk.basis.b2, k));
}

TEST_CASE("token formula with fixed randomness") {
  auto rng = test::rng_for(102);
  const auto [kp, td] = Bw2::setup_with_trapdoor(rng, 2);
  const PatternVector sigma = pattern({3, -1});
  const auto rnd = Bw2::sample_token_randomness(rng, sigma);
  const auto tk = Bw2::gen_token_with(sigma, kp.sk, kp.pk, rnd);
  const Basis2 b = basis2_from_trapdoor(td.basis);
  // K1 = B12^(alpha + (3 u_0 + h_0) r1 + w_0 r2)
  const Scalar e1 =
      td.alpha + (Scalar::from_u64(3) * td.u[0] + td.h[0]) * rnd.r1[0] + td.w[0] * rnd.r2[0];
  CHECK(tk.k1 == b.side2.b12.pow(e1));
  CHECK(tk.k2[0] == b.side2.b12.pow(-(td.v * rnd.r1[0])));
  CHECK(tk.k3[0] == b.side2.b12.pow(-(td.v * rnd.r2[0])));
}

TEST_CASE("ciphertext shape and randomization") {
  auto rng = test::rng_for(103);
  const auto kp = Bw2::setup(rng, 3);
  const Bytes payload{1, 2, 3};
  const auto c1 = Bw2::encrypt(rng, attrs({0, 1, 2}), payload, kp.pk);
  const auto c2 = Bw2::encrypt(rng, attrs({0, 1, 2}), payload, kp.pk);
  CHECK(c1.group_element_count() == 14);
  CHECK(c1.gt_element_count() == 1);
  CHECK(c1.serialize() != c2.serialize());
  CHECK_THROWS_AS(Bw2::encrypt(rng, attrs({0, 1}), payload, kp.pk), UsageError);
}

TEST_CASE("raw mode with M = 1") {
  auto rng = test::rng_for(104);
  const auto kp = Bw2::setup(rng, 3);
  const auto ct = Bw2::encrypt_raw(rng, attrs({5, 6, 7}), GT::one(), kp.pk);
  const auto tk = Bw2::gen_token(rng, pattern({5, -1, 7}), kp.sk, kp.pk);
  CHECK(Bw2::query_raw(ct, tk, kp.pk).is_one());
  const auto bad = Bw2::gen_token(rng, pattern({5, -1, 8}), kp.sk, kp.pk);
  CHECK_FALSE(Bw2::query_raw(ct, bad, kp.pk).is_one());
}

TEST_CASE("correctness on random trials") {
  auto rng = test::rng_for(105);
  const auto kp = Bw2::setup(rng, 4);
  CHECK(test::correctness_trials<Bw2>(rng, kp, 40, true).failures == 0);
  CHECK(test::correctness_trials<Bw2>(rng, kp, 40, false).failures == 0);
  CHECK(test::raw_mode_trials<Bw2>(rng, kp, 20).failures == 0);
}

TEST_CASE("query pairing count is 4s+2") {
  auto rng = test::rng_for(106);
  const auto kp = Bw2::setup(rng, 4);
  const auto ct = Bw2::encrypt(rng, attrs({1, 2, 3, 4}), Bytes{9}, kp.pk);
  for (int s = 0; s <= 4; ++s) {
    std::vector<Slot> slots(4, Wildcard{});
    for (int i = 0; i < s; ++i) slots[i] = Scalar::from_u64(i + 1);
    const auto tk = Bw2::gen_token(rng, PatternVector(slots), kp.sk, kp.pk);
    PairingCounter c;
    CHECK(Bw2::query(ct, tk, kp.pk).is_match());
    CHECK(c.count() == static_cast<std::uint64_t>(4 * s + 2));
  }
}

TEST_CASE("B2 blinding invariance") {
  auto rng = test::rng_for(107);
  const auto kp = Bw2::setup(rng, 2);
  const auto tk = Bw2::gen_token(rng, pattern({1, 2}), kp.sk, kp.pk);
  auto ct = Bw2::encrypt_raw(rng, attrs({1, 2}), GT::one(), kp.pk);
  const GT before = Bw2::query_raw(ct, tk, kp.pk);
  ct.c1 *= kp.pk.basis.b2.pow(Scalar::random(rng));
  ct.c2[1] *= kp.pk.basis.b2.pow(Scalar::random(rng));
  ct.c3[0] *= kp.pk.basis.b2.pow(Scalar::random(rng));
  CHECK(Bw2::query_raw(ct, tk, kp.pk) == before);
  CHECK(before.is_one());
}

TEST_CASE("input validation") {
  auto rng = test::rng_for(108);
  const auto kp = Bw2::setup(rng, 2);
  CHECK_THROWS_AS(Bw2::gen_token(rng, pattern({1}), kp.sk, kp.pk), UsageError);
  CHECK_THROWS_AS(
      Bw2::gen_token(rng, pattern({1, 2}).with(0, Delegatable{}), kp.sk, kp.pk), UsageError);
  const auto other = Bw2::setup(rng, 3);
  const auto ct = Bw2::encrypt(rng, attrs({1, 2, 3}), Bytes{}, other.pk);
  const auto tk = Bw2::gen_token(rng, pattern({1, 2}), kp.sk, kp.pk);
  CHECK_THROWS_AS(Bw2::query(ct, tk, kp.pk), UsageError);
  auto raw = Bw2::encrypt_raw(rng, attrs({1, 2}), GT::one(), kp.pk);
  CHECK_THROWS_AS(Bw2::query(raw, tk, kp.pk), UsageError);
}

TEST_CASE("serialization round trips and rejects corruption") {
  auto rng = test::rng_for(109);
  const auto kp = Bw2::setup(rng, 2);
  const auto tk = Bw2::gen_token(rng, pattern({1, -1}), kp.sk, kp.pk);
  const auto ct = Bw2::encrypt(rng, attrs({1, 2}), Bytes{4, 5}, kp.pk);
  CHECK(Bw2::PublicKey::deserialize(kp.pk.serialize()) == kp.pk);
  CHECK(Bw2::SecretKey::deserialize(kp.sk.serialize()) == kp.sk);
  CHECK(Bw2::Token::deserialize(tk.serialize()) == tk);
  CHECK(Bw2::Ciphertext::deserialize(ct.serialize()) == ct);
  CHECK(Bw2::Ciphertext::deserialize(ct.serialize()).serialize() == ct.serialize());
  CHECK(test::undetected_flips<Bw2::Token>(tk.serialize()) == 0);
  CHECK(test::undetected_flips<Bw2::Ciphertext>(ct.serialize(), 7) == 0);
  CHECK_THROWS_AS(Bw2::Token::deserialize(ct.serialize()), DecodeError);
}

}  // TEST_SUITE
