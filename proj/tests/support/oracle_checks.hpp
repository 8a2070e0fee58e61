#pragma once

#include <vector>

#include "fixtures.hpp"
#include "hve/pe/trivial.hpp"

namespace hve::test {

using MatchMatrix = std::vector<std::vector<bool>>;  // [record][pattern]

/// Every pattern of length l over {0..alphabet-1, *}.
inline std::vector<PatternVector> full_family(std::size_t l, std::uint64_t alphabet) {
  std::vector<PatternVector> out;
  std::vector<std::uint64_t> digit(l, 0);
  for (;;) {
    std::vector<Slot> slots;
    for (auto d : digit)
      slots.push_back(d == alphabet ? Slot{Wildcard{}} : Slot{Scalar::from_u64(d)});
    out.emplace_back(std::move(slots));
    std::size_t i = 0;
    while (i < l && digit[i] == alphabet) digit[i++] = 0;
    if (i == l) return out;
    ++digit[i];
  }
}

struct OracleRecord {
  AttributeVector x;
  Bytes payload;
};

inline std::vector<OracleRecord> random_records(RandomSource& rng, std::size_t n, std::size_t l,
                                                std::uint64_t alphabet) {
  std::vector<OracleRecord> out;
  for (std::size_t i = 0; i < n; ++i)
    out.push_back({to_attributes(random_small_vector(rng, l, alphabet)),
                   random_bytes(rng, 1 + uniform(rng, 40))});
  return out;
}

/// Match matrix from the trivial construction; mismatched payloads count as a miss.
inline MatchMatrix trivial_matrix(RandomSource& rng, const std::vector<PatternVector>& family,
                                  const std::vector<OracleRecord>& records) {
  const auto keys = pe::tpe_setup(rng, family);
  MatchMatrix m;
  for (const auto& r : records) {
    const auto ct = pe::tpe_encrypt(rng, r.x, r.payload, keys.pk, family);
    std::vector<bool> row;
    for (std::size_t j = 0; j < family.size(); ++j) {
      const auto res = pe::tpe_query(ct, pe::tpe_gen_token(j, keys.sk));
      row.push_back(res && res.payload() == r.payload);
    }
    m.push_back(std::move(row));
  }
  return m;
}

template <class S>
MatchMatrix scheme_matrix(RandomSource& rng, const typename S::KeyPair& kp,
                          const std::vector<PatternVector>& family,
                          const std::vector<OracleRecord>& records) {
  std::vector<typename S::Token> tokens;
  for (const auto& p : family) tokens.push_back(S::gen_token(rng, p, kp.sk, kp.pk));
  MatchMatrix m;
  for (const auto& r : records) {
    const auto ct = S::encrypt(rng, r.x, r.payload, kp.pk);
    std::vector<bool> row;
    for (const auto& tk : tokens) {
      const auto res = S::query(ct, tk, kp.pk);
      row.push_back(res && res.payload() == r.payload);
    }
    m.push_back(std::move(row));
  }
  return m;
}

inline MatchMatrix plain_matrix(const std::vector<PatternVector>& family,
                                const std::vector<OracleRecord>& records) {
  MatchMatrix m;
  for (const auto& r : records) {
    std::vector<bool> row;
    for (const auto& p : family) row.push_back(predicate_eval(p, r.x));
    m.push_back(std::move(row));
  }
  return m;
}

}  // namespace hve::test
