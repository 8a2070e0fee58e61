#pragma once

// BW2: Boneh-Waters HVE converted to 2-dimensional bilinear product groups.
//
// Ciphertext components live on side 1 and are blinded by powers of B2;
// token components live on side 2 inside span{B12}, which is orthogonal to
// b2, so the blinding vanishes in the pairing.

#include <optional>
#include <string_view>
#include <vector>

#include "hve/api/scheme.hpp"
#include "hve/product/product_group.hpp"

namespace hve {

struct Bw2 : SchemeOps<Bw2> {
  static constexpr std::string_view kSchemeId = "BW2";

  struct PublicKey {
    std::uint8_t suite_id = 1;
    Basis2Elements<G1> basis;
    Side1 v;
    std::vector<Side1> u, h, w;
    GT omega;

    std::size_t length() const { return u.size(); }
    /// 6l + 8 source-group elements (Omega excluded).
    std::size_t group_element_count() const;
    Bytes serialize() const;
    static PublicKey deserialize(std::span<const std::uint8_t> bytes);
    friend bool operator==(const PublicKey&, const PublicKey&) = default;
  };

  struct SecretKey {
    std::uint8_t suite_id = 1;
    Side2 v2;
    std::vector<Side2> u2, h2, w2;
    Side2 b12_alpha;

    std::size_t length() const { return u2.size(); }
    Bytes serialize() const;
    static SecretKey deserialize(std::span<const std::uint8_t> bytes);
    friend bool operator==(const SecretKey&, const SecretKey&) = default;
  };

  struct Token {
    std::uint8_t suite_id = 1;
    std::size_t l = 0;
    std::vector<std::size_t> indices;  // S
    Side2 k1;
    std::vector<Side2> k2, k3;  // parallel to indices

    std::size_t group_element_count() const { return 2 * (1 + k2.size() + k3.size()); }
    Bytes serialize() const;
    static Token deserialize(std::span<const std::uint8_t> bytes);
    friend bool operator==(const Token&, const Token&) = default;
  };

  struct Ciphertext {
    std::uint8_t suite_id = 1;
    GT c0;
    Side1 c1;
    std::vector<Side1> c2, c3;
    std::optional<SealedPayload> sealed;

    std::size_t length() const { return c2.size(); }
    std::size_t group_element_count() const { return 2 * (1 + c2.size() + c3.size()); }
    std::size_t gt_element_count() const { return 1; }
    Bytes serialize() const;
    static Ciphertext deserialize(std::span<const std::uint8_t> bytes);
    friend bool operator==(const Ciphertext&, const Ciphertext&) = default;
  };

  struct KeyPair {
    PublicKey pk;
    SecretKey sk;
  };

  /// Every secret exponent drawn by setup; test oracles only.
  struct Trapdoor {
    Basis2Trapdoor basis;
    Scalar v, alpha;
    std::vector<Scalar> u, h, w;
    Scalar z_v;
    std::vector<Scalar> z_u, z_h, z_w;
  };

  struct SetupResult {
    KeyPair keys;
    Trapdoor trapdoor;
  };

  struct TokenRandomness {
    std::vector<Scalar> r1, r2;  // parallel to S
  };

  struct EncryptRandomness {
    Scalar t, z1;
    std::vector<Scalar> z2, z3;
  };

  static KeyPair setup(RandomSource& rng, std::size_t l,
                       const GroupSuite& suite = GroupSuite::default_suite());
  static SetupResult setup_with_trapdoor(RandomSource& rng, std::size_t l,
                                         const GroupSuite& suite = GroupSuite::default_suite());
  static KeyPair keys_from_trapdoor(const Trapdoor& td, const GroupSuite& suite);

  static Token gen_token(RandomSource& rng, const PatternVector& sigma, const SecretKey& sk,
                         const PublicKey& pk);
  static TokenRandomness sample_token_randomness(RandomSource& rng, const PatternVector& sigma);
  static Token gen_token_with(const PatternVector& sigma, const SecretKey& sk, const PublicKey& pk,
                              const TokenRandomness& rnd);

  static Ciphertext encrypt_raw(RandomSource& rng, const AttributeVector& x, const GT& m,
                                const PublicKey& pk);
  static EncryptRandomness sample_encrypt_randomness(RandomSource& rng, std::size_t l);
  static Ciphertext encrypt_raw_with(const AttributeVector& x, const GT& m, const PublicKey& pk,
                                     const EncryptRandomness& rnd);

  /// C0 / (e(C1,K1) prod_{i in S} e(C2_i,K2_i) e(C3_i,K3_i)); 4s+2 base pairings.
  static GT query_raw(const Ciphertext& ct, const Token& tk, const PublicKey& pk);
};

static_assert(HveScheme<Bw2>);

}  // namespace hve
