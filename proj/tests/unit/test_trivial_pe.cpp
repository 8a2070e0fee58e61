#include <doctest.h>

#include "fixtures.hpp"
#include "oracle_checks.hpp"
#include "patterns.hpp"
#include "hve/core/error.hpp"
#include "hve/pe/trivial.hpp"
#include "hve/schemes/ll.hpp"

using namespace hve;
using namespace hve::pe;

TEST_SUITE("trivial_pe") {

TEST_CASE("pke round trip and wrong key") {
  auto rng = test::rng_for(600);
  const auto a = pke_keygen(rng);
  const auto b = pke_keygen(rng);
  const Bytes msg = test::random_bytes(rng, 33);
  const auto ct = pke_encrypt(rng, a.pk, msg);
  REQUIRE(pke_decrypt(a.sk, ct).has_value());
  CHECK(*pke_decrypt(a.sk, ct) == msg);
  CHECK_FALSE(pke_decrypt(b.sk, ct).has_value());
}

TEST_CASE("all-wildcard family always matches") {
  auto rng = test::rng_for(601);
  const std::vector<PatternVector> family{PatternVector::all_wildcards(3)};
  const auto keys = tpe_setup(rng, family);
  for (int i = 0; i < 5; ++i) {
    const auto x = test::to_attributes(test::random_small_vector(rng, 3, 10));
    const Bytes payload = test::random_bytes(rng, 8);
    const auto ct = tpe_encrypt(rng, x, payload, keys.pk, family);
    CHECK(ct.size() == 1);
    const auto r = tpe_query(ct, tpe_gen_token(0, keys.sk));
    REQUIRE(r.is_match());
    CHECK(r.payload() == payload);
  }
}

TEST_CASE("exhaustive l=2 binary family agrees with predicate_eval") {
  auto rng = test::rng_for(602);
  const auto family = test::full_family(2, 2);
  REQUIRE(family.size() == 9);
  const auto keys = tpe_setup(rng, family);
  int checked = 0;
  for (std::uint64_t a = 0; a < 2; ++a)
    for (std::uint64_t b = 0; b < 2; ++b) {
      const auto x = test::to_attributes({a, b});
      const auto ct = tpe_encrypt(rng, x, Bytes{1, 2, 3}, keys.pk, family);
      CHECK(ct.size() == family.size());
      for (std::size_t j = 0; j < family.size(); ++j) {
        const auto r = tpe_query(ct, tpe_gen_token(j, keys.sk));
        CHECK(r.is_match() == predicate_eval(family[j], x));
        if (r) CHECK(r.payload() == Bytes{1, 2, 3});
        ++checked;
      }
    }
  CHECK(checked == 36);
}

TEST_CASE("empty payload is distinguished from bottom") {
  auto rng = test::rng_for(603);
  const std::vector<PatternVector> family{test::pattern({1, test::kStar})};
  const auto keys = tpe_setup(rng, family);
  const auto hit = tpe_encrypt(rng, test::attrs({1, 5}), Bytes{}, keys.pk, family);
  const auto miss = tpe_encrypt(rng, test::attrs({2, 5}), Bytes{}, keys.pk, family);
  const auto tk = tpe_gen_token(0, keys.sk);
  CHECK(tpe_query(hit, tk).is_match());
  CHECK(tpe_query(hit, tk).payload().empty());
  CHECK_FALSE(tpe_query(miss, tk).is_match());
}

TEST_CASE("errors") {
  auto rng = test::rng_for(604);
  CHECK_THROWS_AS(tpe_setup(rng, std::vector<PatternVector>{}), UsageError);
  const std::vector<PatternVector> family{PatternVector::all_wildcards(2)};
  const auto keys = tpe_setup(rng, family);
  CHECK_THROWS_AS(tpe_gen_token(1, keys.sk), UsageError);
  const auto ct = tpe_encrypt(rng, test::attrs({0, 0}), Bytes{9}, keys.pk, family);
  CHECK_THROWS_AS(tpe_query(ct, TrivialToken{3, Scalar::one()}), UsageError);
  const std::vector<PatternVector> two{family[0], family[0]};
  CHECK_THROWS_AS(tpe_encrypt(rng, test::attrs({0, 0}), Bytes{}, keys.pk, two), UsageError);
}

TEST_CASE("agreement with LL3 over 50 records") {
  auto rng = test::rng_for(605);
  const auto family = test::full_family(2, 3);
  const auto records = test::random_records(rng, 50, 2, 3);
  const auto kp = Ll3::setup(rng, 2);
  const auto oracle = test::trivial_matrix(rng, family, records);
  CHECK(oracle == test::plain_matrix(family, records));
  CHECK(test::scheme_matrix<Ll3>(rng, kp, family, records) == oracle);
}

}  // TEST_SUITE
