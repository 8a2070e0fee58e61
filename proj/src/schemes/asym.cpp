#include "hve/schemes/asym.hpp"

namespace hve {

namespace {

void require_asymmetric(std::uint8_t suite_id) {
  if (GroupSuite::by_id(suite_id).mode != SuiteMode::asymmetric)
    throw UsageError("ASYM1 requires an asymmetric group suite");
}

std::uint8_t asym_suite_from(const codec::Reader& r) {
  if (GroupSuite::by_id(r.suite_id()).mode != SuiteMode::asymmetric)
    throw DecodeError("ASYM1 record tagged with a non-asymmetric suite");
  return r.suite_id();
}

void check_suite(std::uint8_t a, std::uint8_t b) {
  if (a != b) throw UsageError("records belong to different group suites");
}

}  // namespace

Bytes Asym1::PublicKey::serialize() const {
  codec::Writer wr("ASYM1.PK", suite_id);
  wr.u32(static_cast<std::uint32_t>(length()));
  wr.g1(v).g1(w1).g1(w2);
  for (std::size_t i = 0; i < length(); ++i) wr.g1(u[i]).g1(h[i]);
  wr.gt(omega);
  return std::move(wr).finish();
}

Asym1::PublicKey Asym1::PublicKey::deserialize(std::span<const std::uint8_t> bytes) {
  codec::Reader r(bytes, "ASYM1.PK");
  PublicKey pk;
  pk.suite_id = asym_suite_from(r);
  const std::size_t l = r.count(detail::kMaxLength);
  if (l == 0) throw DecodeError("ASYM1 public key with zero length");
  pk.v = r.g1();
  pk.w1 = r.g1();
  pk.w2 = r.g1();
  for (std::size_t i = 0; i < l; ++i) {
    pk.u.push_back(r.g1());
    pk.h.push_back(r.g1());
  }
  pk.omega = r.gt();
  r.expect_end();
  return pk;
}

Bytes Asym1::SecretKey::serialize() const {
  codec::Writer wr("ASYM1.SK", suite_id);
  wr.u32(static_cast<std::uint32_t>(length()));
  wr.scalar(v).scalar(w1).scalar(w2);
  for (std::size_t i = 0; i < length(); ++i) wr.scalar(u[i]).scalar(h[i]);
  wr.scalar(alpha).scalar(beta);
  return std::move(wr).finish();
}

Asym1::SecretKey Asym1::SecretKey::deserialize(std::span<const std::uint8_t> bytes) {
  codec::Reader r(bytes, "ASYM1.SK");
  SecretKey sk;
  sk.suite_id = asym_suite_from(r);
  const std::size_t l = r.count(detail::kMaxLength);
  if (l == 0) throw DecodeError("ASYM1 secret key with zero length");
  sk.v = r.scalar();
  sk.w1 = r.scalar();
  sk.w2 = r.scalar();
  for (std::size_t i = 0; i < l; ++i) {
    sk.u.push_back(r.scalar());
    sk.h.push_back(r.scalar());
  }
  sk.alpha = r.scalar();
  sk.beta = r.scalar();
  r.expect_end();
  return sk;
}

Bytes Asym1::Token::serialize() const {
  codec::Writer wr("ASYM1.TK", suite_id);
  wr.u32(static_cast<std::uint32_t>(l));
  detail::write_indices(wr, indices);
  wr.g2(k0).g2(k1).g2(k2).g2(k3);
  return std::move(wr).finish();
}

Asym1::Token Asym1::Token::deserialize(std::span<const std::uint8_t> bytes) {
  codec::Reader r(bytes, "ASYM1.TK");
  Token tk;
  tk.suite_id = asym_suite_from(r);
  tk.l = r.count(detail::kMaxLength);
  tk.indices = detail::read_indices(r, tk.l);
  tk.k0 = r.g2();
  tk.k1 = r.g2();
  tk.k2 = r.g2();
  tk.k3 = r.g2();
  r.expect_end();
  return tk;
}

Bytes Asym1::Ciphertext::serialize() const {
  codec::Writer wr("ASYM1.CT", suite_id);
  wr.u32(static_cast<std::uint32_t>(length()));
  wr.gt(c).g1(c0).g1(c1).g1(c2);
  for (const G1& e : c3) wr.g1(e);
  detail::write_sealed(wr, sealed);
  return std::move(wr).finish();
}

Asym1::Ciphertext Asym1::Ciphertext::deserialize(std::span<const std::uint8_t> bytes) {
  codec::Reader r(bytes, "ASYM1.CT");
  Ciphertext ct;
  ct.suite_id = asym_suite_from(r);
  const std::size_t l = r.count(detail::kMaxLength);
  ct.c = r.gt();
  ct.c0 = r.g1();
  ct.c1 = r.g1();
  ct.c2 = r.g1();
  for (std::size_t i = 0; i < l; ++i) ct.c3.push_back(r.g1());
  ct.sealed = detail::read_sealed(r);
  r.expect_end();
  return ct;
}

Asym1::KeyPair Asym1::setup(RandomSource& rng, std::size_t l, const GroupSuite& suite) {
  if (suite.mode != SuiteMode::asymmetric)
    throw UsageError("ASYM1 requires an asymmetric group suite");
  if (l == 0) throw UsageError("ASYM1 setup: length must be at least 1");
  KeyPair kp;
  SecretKey& sk = kp.sk;
  sk.suite_id = suite.id;
  sk.v = Scalar::random_nonzero(rng);
  sk.w1 = Scalar::random(rng);
  sk.w2 = Scalar::random(rng);
  sk.u = detail::random_scalars(rng, l);
  sk.h = detail::random_scalars(rng, l);
  sk.alpha = Scalar::random(rng);
  sk.beta = Scalar::random(rng);
  kp.pk = public_key_from(sk);
  return kp;
}

Asym1::PublicKey Asym1::public_key_from(const SecretKey& sk) {
  require_asymmetric(sk.suite_id);
  const G1 g = G1::generator();
  PublicKey pk;
  pk.suite_id = sk.suite_id;
  pk.v = g.pow(sk.v);
  pk.w1 = g.pow(sk.w1);
  pk.w2 = g.pow(sk.w2);
  for (std::size_t i = 0; i < sk.length(); ++i) {
    pk.u.push_back(g.pow(sk.u[i]));
    pk.h.push_back(g.pow(sk.h[i]));
  }
  pk.omega = pair(pk.v, G2::generator()).pow(sk.alpha * sk.beta);
  return pk;
}

Asym1::Token Asym1::gen_token(RandomSource& rng, const PatternVector& sigma, const SecretKey& sk,
                              const PublicKey& pk) {
  return gen_token_with(sigma, sk, pk, sample_token_randomness(rng));
}

Asym1::TokenRandomness Asym1::sample_token_randomness(RandomSource& rng) {
  return {Scalar::random(rng), Scalar::random(rng), Scalar::random(rng)};
}

Asym1::Token Asym1::gen_token_with(const PatternVector& sigma, const SecretKey& sk,
                                   const PublicKey& pk, const TokenRandomness& rnd) {
  detail::check_pattern(sigma, pk.length(), false);
  if (sk.length() != pk.length()) throw UsageError("ASYM1: key length mismatch");
  check_suite(sk.suite_id, pk.suite_id);
  require_asymmetric(pk.suite_id);

  Token tk;
  tk.suite_id = pk.suite_id;
  tk.l = pk.length();
  tk.indices = sigma.fixed_indices();

  // Exponent of prod_{i in S} u_hat_i^sigma_i h_hat_i
  Scalar agg;
  for (std::size_t i : tk.indices) agg += sk.u[i] * sigma.value(i) + sk.h[i];

  const G2 gh = G2::generator();
  tk.k0 = gh.pow(sk.alpha * sk.beta + sk.w1 * rnd.r1 + sk.w2 * rnd.r2 + agg * rnd.r3);
  tk.k1 = gh.pow(sk.v * rnd.r1);
  tk.k2 = gh.pow(sk.v * rnd.r2);
  tk.k3 = gh.pow(sk.v * rnd.r3);
  return tk;
}

Asym1::Ciphertext Asym1::encrypt_raw(RandomSource& rng, const AttributeVector& x, const GT& m,
                                     const PublicKey& pk) {
  return encrypt_raw_with(x, m, pk, {Scalar::random(rng)});
}

Asym1::Ciphertext Asym1::encrypt_raw_with(const AttributeVector& x, const GT& m,
                                          const PublicKey& pk, const EncryptRandomness& rnd) {
  detail::check_attributes(x, pk.length());
  require_asymmetric(pk.suite_id);
  Ciphertext ct;
  ct.suite_id = pk.suite_id;
  ct.c = pk.omega.pow(rnd.t) * m;
  ct.c0 = pk.v.pow(rnd.t);
  ct.c1 = pk.w1.pow(rnd.t);
  ct.c2 = pk.w2.pow(rnd.t);
  for (std::size_t i = 0; i < pk.length(); ++i)
    ct.c3.push_back((pk.u[i].pow(x[i]) * pk.h[i]).pow(rnd.t));
  return ct;
}

GT Asym1::query_raw(const Ciphertext& ct, const Token& tk, const PublicKey& pk) {
  check_suite(ct.suite_id, pk.suite_id);
  check_suite(tk.suite_id, pk.suite_id);
  if (ct.length() != pk.length())
    throw UsageError("ASYM1: ciphertext length does not match the public key");
  if (tk.l != pk.length()) throw UsageError("ASYM1: token length does not match the public key");

  G1 agg;
  for (std::size_t i : tk.indices) agg *= ct.c3[i];
  const G1 lhs[] = {ct.c0.inverse(), ct.c1, ct.c2, agg};
  const G2 rhs[] = {tk.k0, tk.k1, tk.k2, tk.k3};
  return ct.c * pair_product(lhs, rhs);
}

}  // namespace hve
