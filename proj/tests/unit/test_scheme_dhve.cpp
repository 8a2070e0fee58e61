#include <doctest.h>

#include "delegation_checks.hpp"
#include "patterns.hpp"
#include "hve/schemes/dhve.hpp"

using namespace hve;
using test::attrs;
using test::kQuery;
using test::kStar;
using test::pattern;

TEST_SUITE("scheme_dhve") {

TEST_CASE("query pairing count is 3s+9") {
  auto rng = test::rng_for(300);
  const auto kp = Dhve3::setup(rng, 4);
  const auto ct = Dhve3::encrypt(rng, attrs({1, 1, 1, 1}), Bytes{}, kp.pk);
  for (int s = 0; s <= 4; ++s) {
    std::vector<int> p(4, kStar);
    for (int i = 0; i < s; ++i) p[i] = 1;
    const auto tk = Dhve3::gen_token(rng, pattern(p), kp.sk, kp.pk);
    PairingCounter c;
    CHECK(Dhve3::query(ct, tk, kp.pk).is_match());
    CHECK(c.count() == static_cast<std::uint64_t>(3 * s + 9));
  }
}

TEST_CASE("record sizes") {
  auto rng = test::rng_for(301);
  const auto kp = Dhve3::setup(rng, 3);
  const auto ct = Dhve3::encrypt(rng, attrs({1, 2, 3}), Bytes{}, kp.pk);
  CHECK(ct.group_element_count() == 18);
  const auto plain = Dhve3::gen_token(rng, pattern({1, kStar, 2}), kp.sk, kp.pk);
  CHECK(plain.delegations.empty());
  CHECK(plain.group_element_count() == 3 * (3 + 2));
  const auto del = Dhve3::gen_token(rng, pattern({1, kQuery, kStar}), kp.sk, kp.pk);
  REQUIRE(del.delegations.size() == 1);
  CHECK(del.delegations[0].j == 1);
  CHECK(del.delegations[0].idx4 == std::vector<std::size_t>{0, 1});
  CHECK(del.group_element_count() == 3 * (3 + 1) + 3 * (4 + 2));
}

TEST_CASE("correctness and raw mode without delegation") {
  auto rng = test::rng_for(302);
  const auto kp = Dhve3::setup(rng, 4);
  CHECK(test::correctness_trials<Dhve3>(rng, kp, 40, true).failures == 0);
  CHECK(test::correctness_trials<Dhve3>(rng, kp, 40, false).failures == 0);
  CHECK(test::raw_mode_trials<Dhve3>(rng, kp, 20).failures == 0);
}

TEST_CASE("'?' slots do not take part in matching") {
  auto rng = test::rng_for(303);
  const auto kp = Dhve3::setup(rng, 3);
  const auto tk = Dhve3::gen_token(rng, pattern({1, kQuery, kStar}), kp.sk, kp.pk);
  CHECK(Dhve3::query(Dhve3::encrypt(rng, attrs({1, 0, 0}), Bytes{5}, kp.pk), tk, kp.pk).is_match());
  CHECK(Dhve3::query(Dhve3::encrypt(rng, attrs({1, 1, 1}), Bytes{5}, kp.pk), tk, kp.pk).is_match());
  CHECK_FALSE(
      Dhve3::query(Dhve3::encrypt(rng, attrs({0, 1, 1}), Bytes{5}, kp.pk), tk, kp.pk).is_match());
}

TEST_CASE("delegate '?' to '*'") {
  auto rng = test::rng_for(304);
  const auto kp = Dhve3::setup(rng, 3);
  const auto [sigma, tk] = test::apply_steps(rng, kp, pattern({1, kQuery, kQuery}), {{1, -1}});
  CHECK(tk.indices == std::vector<std::size_t>{0});
  CHECK(tk.delegatable_indices() == std::vector<std::size_t>{2});
  const auto fresh = Dhve3::gen_token(rng, sigma, kp.sk, kp.pk);
  CHECK(test::delegation_agreement(rng, kp, tk, fresh, 40).failures == 0);
}

TEST_CASE("delegate '?' to a value") {
  auto rng = test::rng_for(305);
  const auto kp = Dhve3::setup(rng, 3);
  const auto [sigma, tk] = test::apply_steps(rng, kp, pattern({kQuery, 1, kQuery}), {{0, 0}});
  CHECK(tk.indices == std::vector<std::size_t>{0, 1});
  CHECK(tk.k4.size() == 2);
  CHECK(tk.find_delegation(0) == nullptr);
  REQUIRE(tk.find_delegation(2) != nullptr);
  CHECK(tk.find_delegation(2)->idx4 == std::vector<std::size_t>{0, 1, 2});
  const auto fresh = Dhve3::gen_token(rng, sigma, kp.sk, kp.pk);
  std::size_t matches = 0;
  CHECK(test::delegation_agreement(rng, kp, tk, fresh, 40, &matches).failures == 0);
  CHECK(matches > 0);
  CHECK(matches < 40);
}

TEST_CASE("two-step chains agree with fresh tokens") {
  auto rng = test::rng_for(306);
  const auto kp = Dhve3::setup(rng, 3);
  const std::vector<std::vector<test::Step>> paths = {
      {{0, 1}, {1, -1}}, {{0, 1}, {1, 0}}, {{0, -1}, {1, 1}}, {{0, -1}, {1, -1}}};
  for (const auto& path : paths) {
    const auto [sigma, tk] = test::apply_steps(rng, kp, pattern({kQuery, kQuery, 1}), path);
    CHECK_FALSE(sigma.has_delegatable());
    CHECK(tk.delegations.empty());
    const auto fresh = Dhve3::gen_token(rng, sigma, kp.sk, kp.pk);
    CHECK(test::delegation_agreement(rng, kp, tk, fresh, 30).failures == 0);
  }
}

TEST_CASE("delegated tokens satisfy the raw identity") {
  auto rng = test::rng_for(307);
  const auto kp = Dhve3::setup(rng, 3);
  const auto [sigma, tk] = test::apply_steps(rng, kp, pattern({kQuery, kQuery, kQuery}),
                                             {{2, 1}, {0, 0}});
  for (int i = 0; i < 5; ++i) {
    const GT m = GT::random(rng);
    const auto ct = Dhve3::encrypt_raw(rng, attrs({0, static_cast<std::uint64_t>(i), 1}), m, kp.pk);
    CHECK(Dhve3::query_raw(ct, tk, kp.pk) == m);
  }
}

TEST_CASE("delegate rejects malformed requests") {
  auto rng = test::rng_for(308);
  const auto kp = Dhve3::setup(rng, 3);
  const auto tk = Dhve3::gen_token(rng, pattern({1, kQuery, kQuery}), kp.sk, kp.pk);
  // Nothing fixed.
  CHECK_THROWS_AS(Dhve3::delegate(rng, pattern({1, kQuery, kQuery}), tk, kp.pk), UsageError);
  // Two slots at once.
  CHECK_THROWS_AS(Dhve3::delegate(rng, pattern({1, 0, kStar}), tk, kp.pk), UsageError);
  // Slot 0 is not delegatable.
  CHECK_THROWS_AS(Dhve3::delegate(rng, pattern({kStar, kQuery, kQuery}), tk, kp.pk), UsageError);
  CHECK_THROWS_AS(Dhve3::delegate(rng, pattern({1, 0}), tk, kp.pk), UsageError);
}

TEST_CASE("serialization with delegation components") {
  auto rng = test::rng_for(309);
  const auto kp = Dhve3::setup(rng, 3);
  const auto tk = Dhve3::gen_token(rng, pattern({kQuery, 2, kQuery}), kp.sk, kp.pk);
  const Bytes rec = tk.serialize();
  CHECK(Dhve3::Token::deserialize(rec) == tk);
  CHECK(test::undetected_flips<Dhve3::Token>(rec, 5) == 0);
  CHECK(Dhve3::PublicKey::deserialize(kp.pk.serialize()) == kp.pk);
  CHECK(Dhve3::SecretKey::deserialize(kp.sk.serialize()) == kp.sk);
  const auto ct = Dhve3::encrypt(rng, attrs({1, 2, 3}), Bytes{1}, kp.pk);
  CHECK(Dhve3::Ciphertext::deserialize(ct.serialize()) == ct);
  CHECK_THROWS_AS(Dhve3::Ciphertext::deserialize(ct.serialize_as("LL3.CT")), DecodeError);
}

}  // TEST_SUITE
