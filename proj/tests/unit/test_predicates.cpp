#include <doctest.h>

#include <algorithm>

#include "enumerate.hpp"
#include "fixtures.hpp"
#include "patterns.hpp"
#include "hve/core/error.hpp"
#include "hve/predicates/encodings.hpp"

using namespace hve;
using namespace hve::predicates;
using test::kStar;
using test::pattern;

namespace {

std::vector<std::uint64_t> ints_of(const AttributeVector& x) {
  std::vector<std::uint64_t> out;
  for (const Scalar& s : x.values()) out.push_back(s == Scalar::one() ? 1 : s.is_zero() ? 0 : 99);
  return out;
}

std::size_t fixed_count(const PatternVector& p) { return p.fixed_indices().size(); }

}  // namespace

TEST_SUITE("predicates") {

TEST_CASE("comparison token example") {
  const PatternVector t = encode_comparison_token({3, 1, {2}});
  CHECK(t == pattern({kStar, 1, kStar}));
  const PatternVector last = encode_comparison_token({3, 1, {3}});
  CHECK(last == pattern({kStar, kStar, 1}));
}

TEST_CASE("comparison ciphertext examples") {
  const std::uint64_t b2[] = {2};
  CHECK(ints_of(encode_comparison_ciphertext(3, 1, b2)) == std::vector<std::uint64_t>{0, 1, 1});
  const std::uint64_t b1[] = {1};
  CHECK(ints_of(encode_comparison_ciphertext(3, 1, b1)) == std::vector<std::uint64_t>{1, 1, 1});
  const std::uint64_t b0[] = {0};
  CHECK_THROWS_AS(encode_comparison_ciphertext(3, 1, b0), UsageError);
  CHECK_THROWS_AS(encode_comparison_token({3, 1, {4}}), UsageError);
  CHECK_THROWS_AS(encode_comparison_token({3, 2, {1}}), UsageError);
}

TEST_CASE("comparison encoding is exhaustively sound for n<=5, w<=3") {
  std::size_t cases = 0;
  for (std::size_t n = 1; n <= 5; ++n)
    for (std::size_t w = 1; w <= 3; ++w)
      test::for_each_value_vector(n, w, [&](const std::vector<std::uint64_t>& a) {
        const ComparisonSpec spec{n, w, a};
        const PatternVector tok = encode_comparison_token(spec);
        CHECK(fixed_count(tok) == w);
        CHECK(tok.size() == n * w);
        test::for_each_value_vector(n, w, [&](const std::vector<std::uint64_t>& b) {
          const bool enc = predicate_eval(tok, encode_comparison_ciphertext(n, w, b));
          if (enc != eval_comparison(spec, b)) FAIL("mismatch");
          ++cases;
        });
      });
  CHECK(cases > 20000);
}

TEST_CASE("ge encoding is exhaustively sound and mirrors <=") {
  for (std::size_t n = 1; n <= 5; ++n)
    for (std::size_t w = 1; w <= 2; ++w)
      test::for_each_value_vector(n, w, [&](const std::vector<std::uint64_t>& lo) {
        const PatternVector tok = encode_ge_token(n, w, lo);
        test::for_each_value_vector(n, w, [&](const std::vector<std::uint64_t>& b) {
          if (predicate_eval(tok, encode_ge_ciphertext(n, w, b)) != eval_ge(n, w, lo, b))
            FAIL("mismatch");
        });
      });
  // lo = 1 matches everything
  const std::uint64_t one[] = {1};
  for (std::uint64_t b = 1; b <= 4; ++b) {
    const std::uint64_t bv[] = {b};
    CHECK(predicate_eval(encode_ge_token(4, 1, one), encode_ge_ciphertext(4, 1, bv)));
  }
  // ge(n, b) == reverse(le(n, n+1-b)) blockwise
  for (std::size_t n = 1; n <= 5; ++n)
    test::for_each_value_vector(n, 2, [&](const std::vector<std::uint64_t>& b) {
      std::vector<std::uint64_t> m = b;
      for (auto& v : m) v = n + 1 - v;
      auto ge = ints_of(encode_ge_ciphertext(n, 2, b));
      auto le = ints_of(encode_comparison_ciphertext(n, 2, m));
      for (std::size_t i = 0; i < 2; ++i)
        std::reverse(le.begin() + i * n, le.begin() + (i + 1) * n);
      CHECK(ge == le);
    });
}

TEST_CASE("range encoding is exhaustively sound for n<=4, w<=2") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t w = 1; w <= 2; ++w)
      test::for_each_tuple<std::pair<std::uint64_t, std::uint64_t>>(
          test::all_intervals(n), w, [&](const auto& iv) {
            const RangeSpec spec{n, w, iv};
            const PatternVector tok = encode_range_token(spec);
            CHECK(tok.size() == 2 * n * w);
            test::for_each_value_vector(n, w, [&](const std::vector<std::uint64_t>& b) {
              const AttributeVector ct = encode_range_ciphertext(n, w, b);
              if (ct.size() != 2 * n * w) FAIL("length");
              if (predicate_eval(tok, ct) != eval_range(spec, b)) FAIL("mismatch");
            });
          });
}

TEST_CASE("range degenerate and full intervals") {
  const RangeSpec point{4, 1, {{3, 3}}};
  const RangeSpec full{4, 1, {{1, 4}}};
  for (std::uint64_t b = 1; b <= 4; ++b) {
    const std::uint64_t bv[] = {b};
    CHECK(predicate_eval(encode_range_token(point), encode_range_ciphertext(4, 1, bv)) == (b == 3));
    CHECK(predicate_eval(encode_range_token(full), encode_range_ciphertext(4, 1, bv)));
  }
  CHECK_THROWS_AS(encode_range_token({4, 1, {{3, 2}}}), UsageError);
}

TEST_CASE("subset encoding is exhaustively sound for n<=4, w<=2") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t w = 1; w <= 2; ++w)
      test::for_each_tuple<std::set<std::uint64_t>>(test::all_subsets(n), w, [&](const auto& sets) {
        const SubsetSpec spec{n, w, sets};
        const PatternVector tok = encode_subset_token(spec);
        std::size_t expect_fixed = 0;
        for (const auto& s : sets) expect_fixed += n - s.size();
        CHECK(fixed_count(tok) == expect_fixed);
        test::for_each_value_vector(n, w, [&](const std::vector<std::uint64_t>& b) {
          if (predicate_eval(tok, encode_subset_ciphertext(n, w, b)) != eval_subset(spec, b))
            FAIL("mismatch");
        });
      });
}

TEST_CASE("subset special cases") {
  const SubsetSpec all{3, 1, {{1, 2, 3}}};
  CHECK(encode_subset_token(all) == PatternVector::all_wildcards(3));
  const SubsetSpec none{3, 1, {{}}};
  CHECK(encode_subset_token(none) == pattern({0, 0, 0}));
  for (std::uint64_t b = 1; b <= 3; ++b) {
    const std::uint64_t bv[] = {b};
    CHECK_FALSE(predicate_eval(encode_subset_token(none), encode_subset_ciphertext(3, 1, bv)));
  }
}

TEST_CASE("equality is a passthrough") {
  auto rng = test::rng_for(500);
  for (int i = 0; i < 3; ++i) {
    const auto xv = test::random_small_vector(rng, 4, 5);
    const PatternVector p = test::matching_pattern(rng, xv);
    CHECK(encode_equality(p) == p);
  }
}

TEST_CASE("IPE encoding") {
  auto rng = test::rng_for(501);
  const auto x = test::attrs({3, 1, 4});
  const PatternVector match = pattern({3, kStar, 4});
  CHECK(ipe_inner_product(ipe_encode_token(match), ipe_encode_ciphertext(rng, x)).is_zero());
  const PatternVector all = PatternVector::all_wildcards(3);
  for (const Scalar& s : ipe_encode_token(all)) CHECK(s.is_zero());
  CHECK(ipe_inner_product(ipe_encode_token(all), ipe_encode_ciphertext(rng, x)).is_zero());
  const auto tok = ipe_encode_token(pattern({3, kStar, 5}));
  CHECK(tok.size() == 6);
  CHECK(tok[0] == Scalar::one());
  CHECK(tok[1] == Scalar::from_u64(3));
  int zeros = 0;
  for (int i = 0; i < 1000; ++i)
    if (ipe_inner_product(tok, ipe_encode_ciphertext(rng, x)).is_zero()) ++zeros;
  CHECK(zeros == 0);
  CHECK_THROWS_AS(ipe_inner_product(tok, std::vector<Scalar>(4)), UsageError);
}

TEST_CASE("IPE inner product equals the sum of r_i (sigma_i - x_i)") {
  auto rng = test::rng_for(502);
  const auto x = test::attrs({2, 7});
  const auto c = ipe_encode_ciphertext(rng, x);
  const auto t = ipe_encode_token(pattern({5, 7}));
  // r_i sits at odd positions
  CHECK(ipe_inner_product(t, c) == c[1] * (Scalar::from_u64(5) - Scalar::from_u64(2)));
}

}  // TEST_SUITE
