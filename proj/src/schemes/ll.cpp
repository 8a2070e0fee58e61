#include "hve/schemes/ll.hpp"

namespace hve {

Bytes Ll3::Token::serialize() const {
  codec::Writer wr("LL3.TK", suite_id);
  wr.u32(static_cast<std::uint32_t>(l));
  detail::write_indices(wr, indices);
  write(wr, k1);
  write(wr, k2);
  write(wr, k3);
  write(wr, k4);
  return std::move(wr).finish();
}

Ll3::Token Ll3::Token::deserialize(std::span<const std::uint8_t> bytes) {
  codec::Reader r(bytes, "LL3.TK");
  Token tk;
  tk.suite_id = r.suite_id();
  tk.l = r.count(detail::kMaxLength);
  tk.indices = detail::read_indices(r, tk.l);
  tk.k1 = read_side2(r, 3);
  tk.k2 = read_side2(r, 3);
  tk.k3 = read_side2(r, 3);
  tk.k4 = read_side2(r, 3);
  r.expect_end();
  return tk;
}

Ll3::KeyPair Ll3::setup(RandomSource& rng, std::size_t l, const GroupSuite& suite) {
  return setup_with_trapdoor(rng, l, suite).keys;
}

Ll3::SetupResult Ll3::setup_with_trapdoor(RandomSource& rng, std::size_t l,
                                          const GroupSuite& suite) {
  Trapdoor td = conv3::sample_trapdoor(rng, l);
  KeyPair keys = keys_from_trapdoor(td, suite);
  return {std::move(keys), std::move(td)};
}

Ll3::KeyPair Ll3::keys_from_trapdoor(const Trapdoor& td, const GroupSuite& suite) {
  auto [pk, sk] = conv3::keys_from_trapdoor(td, suite);
  return {{std::move(pk)}, {std::move(sk)}};
}

Ll3::Token Ll3::gen_token(RandomSource& rng, const PatternVector& sigma, const SecretKey& sk,
                          const PublicKey& pk) {
  return gen_token_with(sigma, sk, pk, sample_token_randomness(rng));
}

Ll3::TokenRandomness Ll3::sample_token_randomness(RandomSource& rng) {
  TokenRandomness r;
  for (Scalar* s : {&r.r1, &r.r2, &r.r3, &r.y1, &r.y2, &r.y3, &r.y4}) *s = Scalar::random(rng);
  return r;
}

Ll3::Token Ll3::gen_token_with(const PatternVector& sigma, const SecretKey& sk,
                               const PublicKey& pk, const TokenRandomness& rnd) {
  detail::check_pattern(sigma, pk.length(), false);
  if (sk.length() != pk.length()) throw UsageError("LL3: key length mismatch");
  if (sk.suite_id != pk.suite_id) throw UsageError("records belong to different group suites");

  Token tk;
  tk.suite_id = pk.suite_id;
  tk.l = pk.length();
  tk.indices = sigma.fixed_indices();

  Side2 agg = Side2::identity(3);
  for (std::size_t i : tk.indices) agg *= sk.u2[i].pow(sigma.value(i)) * sk.h2[i];

  const Side2& b3 = sk.b3_hat;
  tk.k1 = sk.b12_alpha * sk.w21.pow(rnd.r1) * sk.w22.pow(rnd.r2) * agg.pow(rnd.r3) *
          b3.pow(rnd.y1);
  tk.k2 = sk.v2.pow(-rnd.r1) * b3.pow(rnd.y2);
  tk.k3 = sk.v2.pow(-rnd.r2) * b3.pow(rnd.y3);
  tk.k4 = sk.v2.pow(-rnd.r3) * b3.pow(rnd.y4);
  return tk;
}

Ll3::Ciphertext Ll3::encrypt_raw(RandomSource& rng, const AttributeVector& x, const GT& m,
                                 const PublicKey& pk) {
  return encrypt_raw_with(x, m, pk, conv3::sample_encrypt_randomness(rng, pk.length()));
}

GT Ll3::query_raw(const Ciphertext& ct, const Token& tk, const PublicKey& pk) {
  conv3::check_compatible(ct, pk);
  if (tk.suite_id != pk.suite_id) throw UsageError("records belong to different group suites");
  if (tk.l != pk.length()) throw UsageError("LL3: token length does not match the public key");

  Side1 agg = Side1::identity(3);
  for (std::size_t i : tk.indices) agg *= ct.c4[i];
  const Side1 lhs[] = {ct.c1, ct.c2, ct.c3, agg};
  const Side2 rhs[] = {tk.k1, tk.k2, tk.k3, tk.k4};
  return ct.c0 * vec_pair_product(lhs, rhs).inverse();
}

}  // namespace hve
