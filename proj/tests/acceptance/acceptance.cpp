// Acceptance suite: one PASS/FAIL line per criterion; exit status is the
// number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "delegation_checks.hpp"
#include "enumerate.hpp"
#include "fixtures.hpp"
#include "oracle_checks.hpp"
#include "scheme_checks.hpp"
#include "hve/predicates/encodings.hpp"
#include "hve/product/assumptions.hpp"
#include "hve/schemes/asym.hpp"
#include "hve/schemes/bw.hpp"
#include "hve/schemes/dhve.hpp"
#include "hve/schemes/ll.hpp"

using namespace hve;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail.clear();
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
  void note(const std::string& s) {
    if (!pass) return;
    if (!detail.empty()) detail += "; ";
    detail += s;
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  return buf;
}

template <class E>
std::size_t dims(const std::vector<E>& v) {
  std::size_t n = 0;
  for (const auto& e : v) n += e.dim();
  return n;
}

PatternVector first_s_fixed(const std::vector<std::uint64_t>& x, std::size_t s) {
  std::vector<Slot> slots(x.size(), Wildcard{});
  for (std::size_t i = 0; i < s; ++i) slots[i] = Scalar::from_u64(x[i]);
  return PatternVector(std::move(slots));
}

// ---- 1 -------------------------------------------------------------------

Outcome structural_counts() {
  Outcome o;
  auto rng = test::rng_for(1001);
  const auto t0 = Clock::now();
  std::size_t configs = 0;
  for (std::size_t l = 1; l <= 8; ++l) {
    const auto x = test::random_small_vector(rng, l, 5);
    const auto xa = test::to_attributes(x);
    const std::string tag = " at l=" + std::to_string(l);

    const auto bw = Bw2::setup(rng, l);
    const auto bct = Bw2::encrypt(rng, xa, Bytes{1}, bw.pk);
    const std::size_t bw_elems = bct.c1.dim() + dims(bct.c2) + dims(bct.c3);
    if (bw_elems != 4 * l + 2) o.fail("BW2 ciphertext has " + std::to_string(bw_elems) + tag);

    const auto ll = Ll3::setup(rng, l);
    const auto lct = Ll3::encrypt(rng, xa, Bytes{1}, ll.pk);
    const std::size_t ll_elems = lct.c1.dim() + lct.c2.dim() + lct.c3.dim() + dims(lct.c4);
    if (ll_elems != 3 * l + 9) o.fail("LL3 ciphertext has " + std::to_string(ll_elems) + tag);

    const auto dh = Dhve3::setup(rng, l);
    const auto dct = Dhve3::encrypt(rng, xa, Bytes{1}, dh.pk);

    for (std::size_t s = 0; s <= l; ++s) {
      const PatternVector sigma = first_s_fixed(x, s);
      const std::string at = " at l=" + std::to_string(l) + " s=" + std::to_string(s);
      {
        const auto tk = Bw2::gen_token(rng, sigma, bw.sk, bw.pk);
        const PairingCounter c;
        const bool ok = Bw2::query(bct, tk, bw.pk).is_match();
        if (!ok || c.count() != 4 * s + 2)
          o.fail("BW2 used " + std::to_string(c.count()) + " pairings" + at);
      }
      {
        const auto tk = Ll3::gen_token(rng, sigma, ll.sk, ll.pk);
        const PairingCounter c;
        const bool ok = Ll3::query(lct, tk, ll.pk).is_match();
        if (!ok || c.count() != 12) o.fail("LL3 used " + std::to_string(c.count()) + " pairings" + at);
      }
      {
        const auto tk = Dhve3::gen_token(rng, sigma, dh.sk, dh.pk);
        const PairingCounter c;
        const bool ok = Dhve3::query(dct, tk, dh.pk).is_match();
        if (!ok || c.count() != 3 * s + 9)
          o.fail("DHVE3 used " + std::to_string(c.count()) + " pairings" + at);
      }
      ++configs;
    }
  }
  const double secs = seconds_since(t0);
  if (secs >= 30.0) o.fail("took " + fmt(secs) + " s (limit 30 s)");
  o.note(std::to_string(configs) + " (l,s) configurations x 3 schemes in " + fmt(secs) + " s");
  return o;
}

// ---- 2 -------------------------------------------------------------------

Outcome short_token_counts() {
  Outcome o;
  static_assert(std::is_same_v<decltype(Asym1::Token::k0), G2>);
  static_assert(std::is_same_v<decltype(Asym1::Ciphertext::c0), G1>);
  static_assert(std::is_same_v<decltype(Asym1::Ciphertext::c3)::value_type, G1>);
  static_assert(std::is_same_v<decltype(Asym1::Ciphertext::c), GT>);
  auto rng = test::rng_for(1002);
  std::size_t configs = 0;
  for (std::size_t l = 1; l <= 8; ++l) {
    const auto x = test::random_small_vector(rng, l, 5);
    const auto kp = Asym1::setup(rng, l);
    const auto ct = Asym1::encrypt(rng, test::to_attributes(x), Bytes{2}, kp.pk);
    if (3 + ct.c3.size() != l + 3) o.fail("ciphertext size wrong at l=" + std::to_string(l));
    for (std::size_t s = 0; s <= l; ++s) {
      const auto tk = Asym1::gen_token(rng, first_s_fixed(x, s), kp.sk, kp.pk);
      if (tk.group_element_count() != 4) o.fail("token is not 4 elements");
      const PairingCounter c;
      const bool ok = Asym1::query(ct, tk, kp.pk).is_match();
      if (!ok || c.count() != 4)
        o.fail(std::to_string(c.count()) + " pairings at l=" + std::to_string(l) +
               " s=" + std::to_string(s));
      ++configs;
    }
  }
  o.note("token 4 x G2, ciphertext (l+3) x G1 + GT, 4 pairings over " + std::to_string(configs) +
         " configurations");
  return o;
}

// ---- 3, 4 ----------------------------------------------------------------

template <class S>
void correctness_for(Outcome& o, const char* name, std::uint64_t seed) {
  auto rng = test::rng_for(seed);
  const auto kp = S::setup(rng, 4);
  const auto t0 = Clock::now();
  const auto yes = test::correctness_trials<S>(rng, kp, 500, true);
  const auto no = test::correctness_trials<S>(rng, kp, 500, false);
  const double secs = seconds_since(t0);
  if (yes.failures || no.failures)
    o.fail(std::string(name) + ": " + std::to_string(yes.failures) + " missed matches, " +
           std::to_string(no.failures) + " false accepts");
  if (secs >= 120.0) o.fail(std::string(name) + " took " + fmt(secs) + " s");
  o.note(std::string(name) + " " + std::to_string(yes.trials) + "+" + std::to_string(no.trials) +
         " in " + fmt(secs) + " s");
}

Outcome correctness_suites() {
  Outcome o;
  correctness_for<Bw2>(o, "BW2", 1031);
  correctness_for<Ll3>(o, "LL3", 1032);
  correctness_for<Dhve3>(o, "DHVE3", 1033);
  correctness_for<Asym1>(o, "ASYM1", 1034);
  return o;
}

template <class S>
void raw_for(Outcome& o, const char* name, std::uint64_t seed) {
  auto rng = test::rng_for(seed);
  const auto kp = S::setup(rng, 5);
  const auto st = test::raw_mode_trials<S>(rng, kp, 100);
  if (st.failures) o.fail(std::string(name) + ": " + std::to_string(st.failures) + "/100 differ");
}

Outcome raw_mode() {
  Outcome o;
  raw_for<Bw2>(o, "BW2", 1041);
  raw_for<Ll3>(o, "LL3", 1042);
  raw_for<Dhve3>(o, "DHVE3", 1043);
  raw_for<Asym1>(o, "ASYM1", 1044);
  o.note("100 exact GT equalities per scheme");
  return o;
}

// ---- 5 -------------------------------------------------------------------

// Query outcome before and after blinding must agree, matching or not.
template <class S, class Blind>
std::size_t blinding_failures(RandomSource& rng, const typename S::KeyPair& kp, Blind blind) {
  std::size_t failures = 0;
  const std::size_t l = kp.pk.length();
  for (int t = 0; t < 100; ++t) {
    const auto xv = test::random_small_vector(rng, l, 3);
    const PatternVector sigma =
        t % 2 ? test::matching_pattern(rng, xv) : test::non_matching_pattern(rng, xv, 3);
    const Bytes payload = test::random_bytes(rng, 1 + test::uniform(rng, 20));
    auto ct = S::encrypt(rng, test::to_attributes(xv), payload, kp.pk);
    auto tk = S::gen_token(rng, sigma, kp.sk, kp.pk);
    const MatchResult before = S::query(ct, tk, kp.pk);
    blind(ct, tk);
    const MatchResult after = S::query(ct, tk, kp.pk);
    if (before.is_match() != after.is_match() || before.is_match() != predicate_eval(sigma, test::to_attributes(xv)) ||
        (after.is_match() && after.payload() != payload))
      ++failures;
  }
  return failures;
}

Outcome orthogonality_and_blinding() {
  Outcome o;
  auto rng = test::rng_for(1051);

  std::size_t bad_bases = 0;
  for (int i = 0; i < 100; ++i) {
    const Basis2 b = gen_basis2(rng);
    const bool ok2 = check_orthogonal(b.side1.b2, b.side2.b12) &&
                     check_orthogonal(b.side1.b12, b.side2.b2) &&
                     !check_orthogonal(b.side1.b11, b.side2.b12) &&
                     !check_orthogonal(b.side1.b12, b.side2.b11) &&
                     !check_orthogonal(b.side1.b11, b.side2.b2) &&
                     !check_orthogonal(b.side1.b2, b.side2.b11) &&
                     !check_orthogonal(b.side1.b12, b.side2.b12) &&
                     !check_orthogonal(b.side1.b2, b.side2.b2);
    const Basis3 c = gen_basis3(rng);
    const Side1* s1[] = {&c.side1.b11, &c.side1.b12, &c.side1.b2, &c.side1.b3};
    const Side2* s2[] = {&c.side2.b11, &c.side2.b12, &c.side2.b2, &c.side2.b3};
    // orthogonal pairs: {b11,b3}, {b12,b2}, {b2,b3}
    auto expected = [](int p, int q) {
      if (p > q) std::swap(p, q);
      return (p == 0 && q == 3) || (p == 1 && q == 2) || (p == 2 && q == 3);
    };
    bool ok3 = true;
    for (int p = 0; p < 4; ++p)
      for (int q = 0; q < 4; ++q)
        if (check_orthogonal(*s1[p], *s2[q]) != expected(p, q)) ok3 = false;
    if (!ok2 || !ok3) ++bad_bases;
  }
  if (bad_bases) o.fail(std::to_string(bad_bases) + "/100 basis pairs with wrong orthogonality");

  {
    const auto kp = Bw2::setup(rng, 3);
    const Side1 b2 = kp.pk.basis.b2;
    const auto f = blinding_failures<Bw2>(rng, kp, [&](Bw2::Ciphertext& ct, Bw2::Token&) {
      ct.c1 *= b2.pow(Scalar::random(rng));
      for (auto& c : ct.c2) c *= b2.pow(Scalar::random(rng));
      for (auto& c : ct.c3) c *= b2.pow(Scalar::random(rng));
    });
    if (f) o.fail("BW2 blinding changed " + std::to_string(f) + "/100 outcomes");
  }
  {
    const auto kp = Ll3::setup(rng, 3);
    const Side1 b2 = kp.pk.basis.b2;
    const Side2 b3 = kp.pk.b3_hat;
    const auto f = blinding_failures<Ll3>(rng, kp, [&](Ll3::Ciphertext& ct, Ll3::Token& tk) {
      for (Side1* c : {&ct.c1, &ct.c2, &ct.c3}) *c *= b2.pow(Scalar::random(rng));
      for (auto& c : ct.c4) c *= b2.pow(Scalar::random(rng));
      for (Side2* k : {&tk.k1, &tk.k2, &tk.k3, &tk.k4}) *k *= b3.pow(Scalar::random(rng));
    });
    if (f) o.fail("LL3 blinding changed " + std::to_string(f) + "/100 outcomes");
  }
  {
    const auto kp = Dhve3::setup(rng, 3);
    const Side1 b2 = kp.pk.basis.b2;
    const Side2 b3 = kp.pk.b3_hat;
    const auto f = blinding_failures<Dhve3>(rng, kp, [&](Dhve3::Ciphertext& ct, Dhve3::Token& tk) {
      for (Side1* c : {&ct.c1, &ct.c2, &ct.c3}) *c *= b2.pow(Scalar::random(rng));
      for (auto& c : ct.c4) c *= b2.pow(Scalar::random(rng));
      for (Side2* k : {&tk.k1, &tk.k2, &tk.k3}) *k *= b3.pow(Scalar::random(rng));
      for (auto& k : tk.k4) k *= b3.pow(Scalar::random(rng));
    });
    if (f) o.fail("DHVE3 blinding changed " + std::to_string(f) + "/100 outcomes");
  }
  o.note("100 bases of each dimension; 100 blinded trials each for BW2, LL3, DHVE3");
  return o;
}

// ---- 6 -------------------------------------------------------------------

std::size_t exhaustive_encoding_mismatches(std::size_t& cases) {
  using namespace predicates;
  std::size_t bad = 0;
  for (std::size_t n = 1; n <= 5; ++n)
    for (std::size_t w = 1; w <= 3; ++w)
      test::for_each_value_vector(n, w, [&](const std::vector<std::uint64_t>& a) {
        const ComparisonSpec spec{n, w, a};
        const PatternVector tok = encode_comparison_token(spec);
        test::for_each_value_vector(n, w, [&](const std::vector<std::uint64_t>& b) {
          ++cases;
          if (predicate_eval(tok, encode_comparison_ciphertext(n, w, b)) != eval_comparison(spec, b)) ++bad;
        });
      });
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t w = 1; w <= 2; ++w) {
      test::for_each_tuple<std::pair<std::uint64_t, std::uint64_t>>(
          test::all_intervals(n), w, [&](const auto& iv) {
            const RangeSpec spec{n, w, iv};
            const PatternVector tok = encode_range_token(spec);
            test::for_each_value_vector(n, w, [&](const std::vector<std::uint64_t>& b) {
              ++cases;
              if (predicate_eval(tok, encode_range_ciphertext(n, w, b)) != eval_range(spec, b)) ++bad;
            });
          });
      test::for_each_tuple<std::set<std::uint64_t>>(test::all_subsets(n), w, [&](const auto& sets) {
        const SubsetSpec spec{n, w, sets};
        const PatternVector tok = encode_subset_token(spec);
        test::for_each_value_vector(n, w, [&](const std::vector<std::uint64_t>& b) {
          ++cases;
          if (predicate_eval(tok, encode_subset_ciphertext(n, w, b)) != eval_subset(spec, b)) ++bad;
        });
      });
    }
  return bad;
}

struct EncodedTrial {
  PatternVector token;
  AttributeVector ciphertext;
  bool expect;
};

std::vector<std::uint64_t> draw_values(RandomSource& rng, std::size_t n, std::size_t w) {
  std::vector<std::uint64_t> v;
  for (std::size_t i = 0; i < w; ++i) v.push_back(1 + test::uniform(rng, n));
  return v;
}

EncodedTrial draw_encoded(RandomSource& rng, int family, std::size_t n, std::size_t w) {
  using namespace predicates;
  const auto b = draw_values(rng, n, w);
  if (family == 0) {
    const ComparisonSpec spec{n, w, draw_values(rng, n, w)};
    return {encode_comparison_token(spec), encode_comparison_ciphertext(n, w, b),
            eval_comparison(spec, b)};
  }
  if (family == 1) {
    RangeSpec spec{n, w, {}};
    for (std::size_t i = 0; i < w; ++i) {
      auto lo = 1 + test::uniform(rng, n), hi = 1 + test::uniform(rng, n);
      if (lo > hi) std::swap(lo, hi);
      spec.intervals.emplace_back(lo, hi);
    }
    return {encode_range_token(spec), encode_range_ciphertext(n, w, b), eval_range(spec, b)};
  }
  SubsetSpec spec{n, w, {}};
  for (std::size_t i = 0; i < w; ++i) {
    std::set<std::uint64_t> s;
    for (std::uint64_t v = 1; v <= n; ++v)
      if (test::uniform(rng, 2)) s.insert(v);
    spec.sets.push_back(std::move(s));
  }
  return {encode_subset_token(spec), encode_subset_ciphertext(n, w, b), eval_subset(spec, b)};
}

template <class S>
void encoded_end_to_end(Outcome& o, const char* name, std::uint64_t seed) {
  static constexpr const char* kFamilies[] = {"comparison", "range", "subset"};
  auto rng = test::rng_for(seed);
  for (int family = 0; family < 3; ++family) {
    const std::size_t n = 4, w = 2;
    const std::size_t l = family == 1 ? 2 * n * w : n * w;
    const auto kp = S::setup(rng, l);
    std::size_t failures = 0, matches = 0;
    for (int t = 0; t < 100; ++t) {
      const EncodedTrial tr = draw_encoded(rng, family, n, w);
      const Bytes payload = test::random_bytes(rng, 1 + test::uniform(rng, 24));
      const auto ct = S::encrypt(rng, tr.ciphertext, payload, kp.pk);
      const auto tk = S::gen_token(rng, tr.token, kp.sk, kp.pk);
      const MatchResult r = S::query(ct, tk, kp.pk);
      if (r.is_match() != tr.expect || (r.is_match() && r.payload() != payload)) ++failures;
      matches += tr.expect;
    }
    if (failures)
      o.fail(std::string(name) + " " + kFamilies[family] + ": " + std::to_string(failures) +
             "/100 disagree");
    if (matches == 0 || matches == 100)
      o.fail(std::string(name) + " " + kFamilies[family] + ": degenerate sample");
  }
}

Outcome encoding_equivalence() {
  Outcome o;
  std::size_t cases = 0;
  const std::size_t bad = exhaustive_encoding_mismatches(cases);
  if (bad) o.fail(std::to_string(bad) + " exhaustive encoding mismatches");
  encoded_end_to_end<Bw2>(o, "BW2", 1061);
  encoded_end_to_end<Ll3>(o, "LL3", 1062);
  encoded_end_to_end<Dhve3>(o, "DHVE3", 1063);
  encoded_end_to_end<Asym1>(o, "ASYM1", 1064);
  o.note(std::to_string(cases) + " exhaustive cases; 100 encrypted trials per family per scheme");
  return o;
}

// ---- 7 -------------------------------------------------------------------

Outcome delegation_equivalence() {
  Outcome o;
  auto rng = test::rng_for(1071);
  const auto kp = Dhve3::setup(rng, 3);
  const int choices[] = {0, 1, -1};  // value 0, value 1, '*'

  // Starting points: two open slots beside a fixed one, and beside a wildcard.
  const std::vector<PatternVector> starts = {
      PatternVector({Delegatable{}, Delegatable{}, Scalar::from_u64(1)}),
      PatternVector({Delegatable{}, Delegatable{}, Wildcard{}}),
  };
  std::size_t paths = 0, failed_paths = 0, total_matches = 0;
  for (const auto& start : starts) {
    std::vector<std::pair<AttributeVector, Bytes>> cts_plain;
    std::vector<Dhve3::Ciphertext> cts;
    for (int i = 0; i < 200; ++i) {
      const auto x = test::to_attributes(test::random_small_vector(rng, 3, 2));
      Bytes payload = test::random_bytes(rng, 1 + test::uniform(rng, 16));
      cts.push_back(Dhve3::encrypt(rng, x, payload, kp.pk));
      cts_plain.emplace_back(x, std::move(payload));
    }

    std::vector<std::vector<test::Step>> all;
    for (std::size_t k = 0; k < 2; ++k)
      for (int v : choices) {
        all.push_back({{k, v}});
        for (int v2 : choices) all.push_back({{k, v}, {1 - k, v2}});
      }

    for (const auto& path : all) {
      const auto [sigma, delegated] = test::apply_steps(rng, kp, start, path);
      const auto fresh = Dhve3::gen_token(rng, sigma, kp.sk, kp.pk);
      const PatternVector as_plain = sigma.delegatable_as_wildcard();
      std::size_t bad = 0;
      for (std::size_t i = 0; i < cts.size(); ++i) {
        const MatchResult a = Dhve3::query(cts[i], delegated, kp.pk);
        const MatchResult b = Dhve3::query(cts[i], fresh, kp.pk);
        const bool expect = predicate_eval(as_plain, cts_plain[i].first);
        if (a.is_match() != b.is_match() || a.is_match() != expect ||
            (a.is_match() && (a.payload() != cts_plain[i].second || b.payload() != a.payload())))
          ++bad;
        total_matches += a.is_match();
      }
      ++paths;
      if (bad) ++failed_paths;
    }
  }
  if (failed_paths) o.fail(std::to_string(failed_paths) + "/" + std::to_string(paths) + " paths disagree");
  if (total_matches == 0) o.fail("no matches sampled");
  o.note(std::to_string(paths) + " paths (single and two-step) x 200 ciphertexts");
  return o;
}

// ---- 8 -------------------------------------------------------------------

Outcome oracle_equivalence() {
  Outcome o;
  auto rng = test::rng_for(1081);
  const auto family = test::full_family(2, 3);
  if (family.size() != 16) o.fail("family has " + std::to_string(family.size()) + " patterns");
  const auto records = test::random_records(rng, 50, 2, 3);
  const auto oracle = test::trivial_matrix(rng, family, records);
  if (oracle != test::plain_matrix(family, records)) o.fail("trivial PE disagrees with predicate_eval");

  auto compare = [&](const char* name, const test::MatchMatrix& m) {
    std::size_t diff = 0;
    for (std::size_t r = 0; r < m.size(); ++r)
      for (std::size_t j = 0; j < m[r].size(); ++j) diff += m[r][j] != oracle[r][j];
    if (diff) o.fail(std::string(name) + ": " + std::to_string(diff) + " cells differ");
  };
  compare("BW2", test::scheme_matrix<Bw2>(rng, Bw2::setup(rng, 2), family, records));
  compare("LL3", test::scheme_matrix<Ll3>(rng, Ll3::setup(rng, 2), family, records));
  compare("DHVE3", test::scheme_matrix<Dhve3>(rng, Dhve3::setup(rng, 2), family, records));
  compare("ASYM1", test::scheme_matrix<Asym1>(rng, Asym1::setup(rng, 2), family, records));
  o.note("16 patterns x 50 records, 4 schemes");
  return o;
}

// ---- 9 -------------------------------------------------------------------

Outcome assumption_samplers() {
  Outcome o;
  auto rng = test::rng_for(1091);
  const GT e = GT::generator();
  const SymElement g = SymElement::generator();
  std::size_t bad = 0, undetected = 0, corruptions = 0;
  for (int i = 0; i < 20; ++i) {
    for (unsigned bit : {0u, 1u}) {
      const BdhSample s = sample_bdh(rng, bit);
      const auto& w = s.witness;
      if (!verify_bdh_wellformed(s.tuple)) ++bad;
      if (!(s.tuple.ga == SymElement::from_exponent(w.a)) ||
          !(s.tuple.gb == SymElement::from_exponent(w.b)) ||
          !(s.tuple.gc == SymElement::from_exponent(w.c)))
        ++bad;
      const GT want = bit == 0 ? e.pow(w.a * w.b * w.c) : e.pow(w.d);
      if (!(s.tuple.t == want)) ++bad;

      const P3dhSample p = sample_p3dh(rng, bit);
      const auto& t = p.tuple;
      const auto& v = p.witness;
      if (!verify_p3dh_wellformed(t)) ++bad;
      const SymElement f = SymElement::from_exponent(v.f_log);
      auto gf = [&](const Scalar& x, const Scalar& z) {
        return SymElement::from_exponent(x + v.f_log * z);
      };
      const bool rel = t.f == f && t.ga == SymElement::from_exponent(v.a) &&
                       t.fa == SymElement::from_exponent(v.f_log * v.a) &&
                       t.gb == SymElement::from_exponent(v.b) &&
                       t.fb == SymElement::from_exponent(v.f_log * v.b) &&
                       t.gab_fz1 == gf(v.a * v.b, v.z1) && t.gz1 == SymElement::from_exponent(v.z1) &&
                       t.gabc_fz2 == gf(v.a * v.b * v.c, v.z2) &&
                       t.gz2 == SymElement::from_exponent(v.z2) &&
                       t.t_first == gf(bit == 0 ? v.c : v.d, v.z3) &&
                       t.t_second == SymElement::from_exponent(v.z3);
      if (!rel) ++bad;
      if (!(pair(t.gab_fz1, g) == pair(t.ga, t.gb) * pair(t.f, t.gz1))) ++bad;

      // Inconsistent halves on any of the twelve components.
      for (std::size_t k = 0; k < 12; ++k)
        for (int half = 0; half < 2; ++half) {
          P3dhTuple c = t;
          SymElement& el = *c.components()[k];
          if (half == 0)
            el.g1 = el.g1 * G1::generator();
          else
            el.g2 = el.g2 * G2::generator();
          ++corruptions;
          if (verify_p3dh_wellformed(c)) ++undetected;
        }
      for (int half = 0; half < 2; ++half) {
        BdhTuple c = s.tuple;
        SymElement& el = half ? c.gb : c.ga;
        el.g1 = el.g1 * G1::generator();
        ++corruptions;
        if (verify_bdh_wellformed(c)) ++undetected;
      }
    }
  }
  if (bad) o.fail(std::to_string(bad) + " relation failures");
  if (undetected) o.fail(std::to_string(undetected) + "/" + std::to_string(corruptions) + " corruptions undetected");
  o.note("40 BDH + 40 P3DH samples; " + std::to_string(corruptions) + " corruptions all detected");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "structural counts BW2/LL3/DHVE3", structural_counts},
      {2, "short-token counts ASYM1", short_token_counts},
      {3, "correctness suites", correctness_suites},
      {4, "raw-mode algebra", raw_mode},
      {5, "orthogonality and blinding", orthogonality_and_blinding},
      {6, "encoding brute-force equivalence", encoding_equivalence},
      {7, "delegation functional equivalence", delegation_equivalence},
      {8, "oracle equivalence with trivial PE", oracle_equivalence},
      {9, "assumption samplers", assumption_samplers},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = Clock::now();
    Outcome r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r.fail(std::string("exception: ") + e.what());
    }
    std::printf("%s %d %s (%s) [%ss]\n", r.pass ? "PASS" : "FAIL", c.id, c.title, r.detail.c_str(),
                fmt(seconds_since(t0)).c_str());
    std::fflush(stdout);
    failed += !r.pass;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed;
}
