#pragma once

// DHVE3: delegatable HVE over 3-dimensional bilinear product groups.
//
// A token for a pattern with '?' slots carries, per delegatable index j, a
// zero-alpha "partial token" for the pattern S + {j}. Delegation fixes one
// '?' slot k at a time: to a value by folding the partial token for k into
// the decryption components (and into every other partial token), or to
// '*' by dropping the partial token for k.
//
// Tokens record the pattern shape (S and S_?) but not the fixed values.

#include "hve/schemes/conv3.hpp"

namespace hve {

struct Dhve3 : SchemeOps<Dhve3> {
  static constexpr std::string_view kSchemeId = "DHVE3";

  struct PublicKey : conv3::PublicKey {
    Bytes serialize() const { return serialize_as("DHVE3.PK"); }
    static PublicKey deserialize(std::span<const std::uint8_t> b) {
      return {deserialize_as(b, "DHVE3.PK")};
    }
  };

  struct SecretKey : conv3::SecretKey {
    Bytes serialize() const { return serialize_as("DHVE3.SK"); }
    static SecretKey deserialize(std::span<const std::uint8_t> b) {
      return {deserialize_as(b, "DHVE3.SK")};
    }
  };

  struct Ciphertext : conv3::Ciphertext {
    Bytes serialize() const { return serialize_as("DHVE3.CT"); }
    static Ciphertext deserialize(std::span<const std::uint8_t> b) {
      return {deserialize_as(b, "DHVE3.CT")};
    }
  };

  /// Delegation components for one '?' index j.
  struct Delegation {
    std::size_t j = 0;
    Side2 l1u, l1h, l2, l3;
    std::vector<std::size_t> idx4;  // S + {j}, ascending
    std::vector<Side2> l4;          // parallel to idx4

    friend bool operator==(const Delegation&, const Delegation&) = default;
  };

  struct Token {
    std::uint8_t suite_id = 1;
    std::size_t l = 0;
    std::vector<std::size_t> indices;  // S
    Side2 k1, k2, k3;
    std::vector<Side2> k4;  // parallel to indices
    std::vector<Delegation> delegations;  // ascending j

    std::vector<std::size_t> delegatable_indices() const;
    /// Pattern shape: fixed slots as 0, delegatable as '?', others '*'.
    PatternVector shape() const;
    const Delegation* find_delegation(std::size_t j) const;

    std::size_t group_element_count() const;
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

  static KeyPair setup(RandomSource& rng, std::size_t l,
                       const GroupSuite& suite = GroupSuite::default_suite());
  static SetupResult setup_with_trapdoor(RandomSource& rng, std::size_t l,
                                         const GroupSuite& suite = GroupSuite::default_suite());
  static KeyPair keys_from_trapdoor(const Trapdoor& td, const GroupSuite& suite);

  /// sigma may contain '?' slots.
  static Token gen_token(RandomSource& rng, const PatternVector& sigma, const SecretKey& sk,
                         const PublicKey& pk);

  /// sigma_new equals the token's shape except at exactly one '?' index,
  /// which it sets to a value or to '*'. Values at already fixed slots are
  /// not checked (the token does not record them).
  static Token delegate(RandomSource& rng, const PatternVector& sigma_new, const Token& tk,
                        const PublicKey& pk);

  static Ciphertext encrypt_raw(RandomSource& rng, const AttributeVector& x, const GT& m,
                                const PublicKey& pk);

  /// C0 / (e(C1,K1) e(C2,K2) e(C3,K3) prod_{i in S} e(C4_i,K4_i)); 3s+9 base pairings.
  static GT query_raw(const Ciphertext& ct, const Token& tk, const PublicKey& pk);
};

static_assert(HveScheme<Dhve3>);

}  // namespace hve
