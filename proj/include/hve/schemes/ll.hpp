#pragma once

// LL3: constant-size-token HVE over 3-dimensional bilinear product groups.
// One shared r3 aggregates every fixed slot, so tokens are four product
// elements and a query is four product pairings (12 base pairings) for any
// pattern.

#include "hve/schemes/conv3.hpp"

namespace hve {

struct Ll3 : SchemeOps<Ll3> {
  static constexpr std::string_view kSchemeId = "LL3";

  struct PublicKey : conv3::PublicKey {
    Bytes serialize() const { return serialize_as("LL3.PK"); }
    static PublicKey deserialize(std::span<const std::uint8_t> b) {
      return {deserialize_as(b, "LL3.PK")};
    }
  };

  struct SecretKey : conv3::SecretKey {
    Bytes serialize() const { return serialize_as("LL3.SK"); }
    static SecretKey deserialize(std::span<const std::uint8_t> b) {
      return {deserialize_as(b, "LL3.SK")};
    }
  };

  struct Ciphertext : conv3::Ciphertext {
    Bytes serialize() const { return serialize_as("LL3.CT"); }
    static Ciphertext deserialize(std::span<const std::uint8_t> b) {
      return {deserialize_as(b, "LL3.CT")};
    }
  };

  struct Token {
    std::uint8_t suite_id = 1;
    std::size_t l = 0;
    std::vector<std::size_t> indices;  // S
    Side2 k1, k2, k3, k4;

    std::size_t group_element_count() const { return 12; }
    Bytes serialize() const;
    static Token deserialize(std::span<const std::uint8_t> bytes);
    friend bool operator==(const Token&, const Token&) = default;
  };

  struct KeyPair {
    PublicKey pk;
    SecretKey sk;
  };

  using Trapdoor = conv3::Trapdoor;

  struct SetupResult {
    KeyPair keys;
    Trapdoor trapdoor;
  };

  struct TokenRandomness {
    Scalar r1, r2, r3;
    Scalar y1, y2, y3, y4;
  };

  using EncryptRandomness = conv3::EncryptRandomness;

  static KeyPair setup(RandomSource& rng, std::size_t l,
                       const GroupSuite& suite = GroupSuite::default_suite());
  static SetupResult setup_with_trapdoor(RandomSource& rng, std::size_t l,
                                         const GroupSuite& suite = GroupSuite::default_suite());
  static KeyPair keys_from_trapdoor(const Trapdoor& td, const GroupSuite& suite);

  static Token gen_token(RandomSource& rng, const PatternVector& sigma, const SecretKey& sk,
                         const PublicKey& pk);
  static TokenRandomness sample_token_randomness(RandomSource& rng);
  static Token gen_token_with(const PatternVector& sigma, const SecretKey& sk, const PublicKey& pk,
                              const TokenRandomness& rnd);

  static Ciphertext encrypt_raw(RandomSource& rng, const AttributeVector& x, const GT& m,
                                const PublicKey& pk);
  static Ciphertext encrypt_raw_with(const AttributeVector& x, const GT& m, const PublicKey& pk,
                                     const EncryptRandomness& rnd) {
    return {conv3::encrypt_raw_with(x, m, pk, rnd)};
  }

  /// C0 / (e(C1,K1) e(C2,K2) e(C3,K3) e(prod_{i in S} C4_i, K4)).
  static GT query_raw(const Ciphertext& ct, const Token& tk, const PublicKey& pk);
};

static_assert(HveScheme<Ll3>);

}  // namespace hve
