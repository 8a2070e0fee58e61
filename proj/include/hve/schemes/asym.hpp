#pragma once

// ASYM1: short-token HVE in asymmetric (Type-3) prime-order groups. Plain
// group elements, no product groups: ciphertexts in G1, tokens of four G2
// elements, four pairings per query.

#include <optional>
#include <string_view>
#include <vector>

#include "hve/api/scheme.hpp"

namespace hve {

struct Asym1 : SchemeOps<Asym1> {
  static constexpr std::string_view kSchemeId = "ASYM1";

  struct PublicKey {
    std::uint8_t suite_id = 1;
    G1 v, w1, w2;
    std::vector<G1> u, h;
    GT omega;

    std::size_t length() const { return u.size(); }
    std::size_t group_element_count() const { return 3 + u.size() + h.size(); }
    Bytes serialize() const;
    static PublicKey deserialize(std::span<const std::uint8_t> bytes);
    friend bool operator==(const PublicKey&, const PublicKey&) = default;
  };

  /// The secret key is the exponent set itself.
  struct SecretKey {
    std::uint8_t suite_id = 1;
    Scalar v, w1, w2;
    std::vector<Scalar> u, h;
    Scalar alpha, beta;

    std::size_t length() const { return u.size(); }
    Bytes serialize() const;
    static SecretKey deserialize(std::span<const std::uint8_t> bytes);
    friend bool operator==(const SecretKey&, const SecretKey&) = default;
  };

  struct Token {
    std::uint8_t suite_id = 1;
    std::size_t l = 0;
    std::vector<std::size_t> indices;  // S
    G2 k0, k1, k2, k3;

    std::size_t group_element_count() const { return 4; }
    Bytes serialize() const;
    static Token deserialize(std::span<const std::uint8_t> bytes);
    friend bool operator==(const Token&, const Token&) = default;
  };

  struct Ciphertext {
    std::uint8_t suite_id = 1;
    GT c;
    G1 c0, c1, c2;
    std::vector<G1> c3;
    std::optional<SealedPayload> sealed;

    std::size_t length() const { return c3.size(); }
    /// l + 3
    std::size_t group_element_count() const { return 3 + c3.size(); }
    std::size_t gt_element_count() const { return 1; }
    Bytes serialize() const;
    static Ciphertext deserialize(std::span<const std::uint8_t> bytes);
    friend bool operator==(const Ciphertext&, const Ciphertext&) = default;
  };

  struct KeyPair {
    PublicKey pk;
    SecretKey sk;
  };

  struct TokenRandomness {
    Scalar r1, r2, r3;
  };

  struct EncryptRandomness {
    Scalar t;
  };

  /// Throws UsageError unless the suite is asymmetric.
  static KeyPair setup(RandomSource& rng, std::size_t l,
                       const GroupSuite& suite = GroupSuite::default_suite());
  static PublicKey public_key_from(const SecretKey& sk);

  static Token gen_token(RandomSource& rng, const PatternVector& sigma, const SecretKey& sk,
                         const PublicKey& pk);
  static TokenRandomness sample_token_randomness(RandomSource& rng);
  static Token gen_token_with(const PatternVector& sigma, const SecretKey& sk, const PublicKey& pk,
                              const TokenRandomness& rnd);

  static Ciphertext encrypt_raw(RandomSource& rng, const AttributeVector& x, const GT& m,
                                const PublicKey& pk);
  static Ciphertext encrypt_raw_with(const AttributeVector& x, const GT& m, const PublicKey& pk,
                                     const EncryptRandomness& rnd);

  /// C e(C0,K0)^-1 e(C1,K1) e(C2,K2) e(prod_{i in S} C3_i, K3); four pairings.
  static GT query_raw(const Ciphertext& ct, const Token& tk, const PublicKey& pk);
};

static_assert(HveScheme<Asym1>);

}  // namespace hve
