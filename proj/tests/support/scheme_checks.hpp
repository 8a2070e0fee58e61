#pragma once

// Scheme-generic trial loops shared by the unit and acceptance suites.

#include <cstddef>
#include <span>

#include "fixtures.hpp"
#include "hve/api/scheme.hpp"
#include "hve/core/error.hpp"

namespace hve::test {

struct TrialStats {
  std::size_t trials = 0;
  std::size_t failures = 0;
};

/// Random (x, sigma, payload) over a small alphabet; counts outcomes that
/// disagree with predicate_eval. `matching` selects which half is drawn.
template <HveScheme S>
TrialStats correctness_trials(RandomSource& rng, const typename S::KeyPair& kp, std::size_t n,
                              bool matching, std::uint64_t alphabet = 4) {
  TrialStats st;
  const std::size_t l = kp.pk.length();
  for (std::size_t k = 0; k < n; ++k) {
    const auto xv = random_small_vector(rng, l, alphabet);
    const AttributeVector x = to_attributes(xv);
    const PatternVector sigma =
        matching ? matching_pattern(rng, xv) : non_matching_pattern(rng, xv, alphabet);
    const Bytes payload = random_bytes(rng, uniform(rng, 64));
    const auto tk = S::gen_token(rng, sigma, kp.sk, kp.pk);
    const auto ct = S::encrypt(rng, x, payload, kp.pk);
    const MatchResult r = S::query(ct, tk, kp.pk);
    const bool expect = predicate_eval(sigma, x);
    ++st.trials;
    if (expect != matching) ++st.failures;  // generator bug, count it
    else if (expect && !(r.is_match() && r.payload() == payload)) ++st.failures;
    else if (!expect && r.is_match()) ++st.failures;
  }
  return st;
}

/// On a match the raw candidate equals the encrypted GT element exactly.
template <HveScheme S>
TrialStats raw_mode_trials(RandomSource& rng, const typename S::KeyPair& kp, std::size_t n) {
  TrialStats st;
  const std::size_t l = kp.pk.length();
  for (std::size_t k = 0; k < n; ++k) {
    const auto xv = random_small_vector(rng, l, 4);
    const PatternVector sigma = matching_pattern(rng, xv);
    const GT m = GT::random(rng);
    const auto tk = S::gen_token(rng, sigma, kp.sk, kp.pk);
    const auto ct = S::encrypt_raw(rng, to_attributes(xv), m, kp.pk);
    ++st.trials;
    if (!(S::query_raw(ct, tk, kp.pk) == m)) ++st.failures;
  }
  return st;
}

/// Every single-byte flip of a record must fail to decode.
template <class Record>
std::size_t undetected_flips(std::span<const std::uint8_t> bytes, std::size_t stride = 1) {
  std::size_t undetected = 0;
  Bytes copy(bytes.begin(), bytes.end());
  for (std::size_t i = 0; i < copy.size(); i += stride) {
    copy[i] ^= 0x20;
    try {
      (void)Record::deserialize(copy);
      ++undetected;
    } catch (const DecodeError&) {
    }
    copy[i] ^= 0x20;
  }
  return undetected;
}

}  // namespace hve::test
