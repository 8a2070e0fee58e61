#include "hve/schemes/bw.hpp"

namespace hve {

namespace {

void check_suite(std::uint8_t a, std::uint8_t b) {
  if (a != b) throw UsageError("records belong to different group suites");
}

}  // namespace

std::size_t Bw2::PublicKey::group_element_count() const {
  return 2 * (3 + 1 + u.size() + h.size() + w.size());
}

Bytes Bw2::PublicKey::serialize() const {
  codec::Writer wr("BW2.PK", suite_id);
  wr.u32(static_cast<std::uint32_t>(length()));
  write(wr, basis.b11);
  write(wr, basis.b12);
  write(wr, basis.b2);
  write(wr, v);
  for (std::size_t i = 0; i < length(); ++i) {
    write(wr, u[i]);
    write(wr, h[i]);
    write(wr, w[i]);
  }
  wr.gt(omega);
  return std::move(wr).finish();
}

Bw2::PublicKey Bw2::PublicKey::deserialize(std::span<const std::uint8_t> bytes) {
  codec::Reader r(bytes, "BW2.PK");
  PublicKey pk;
  pk.suite_id = r.suite_id();
  const std::size_t l = r.count(detail::kMaxLength);
  if (l == 0) throw DecodeError("BW2 public key with zero length");
  pk.basis.b11 = read_side1(r, 2);
  pk.basis.b12 = read_side1(r, 2);
  pk.basis.b2 = read_side1(r, 2);
  pk.v = read_side1(r, 2);
  for (std::size_t i = 0; i < l; ++i) {
    pk.u.push_back(read_side1(r, 2));
    pk.h.push_back(read_side1(r, 2));
    pk.w.push_back(read_side1(r, 2));
  }
  pk.omega = r.gt();
  r.expect_end();
  return pk;
}

Bytes Bw2::SecretKey::serialize() const {
  codec::Writer wr("BW2.SK", suite_id);
  wr.u32(static_cast<std::uint32_t>(length()));
  write(wr, v2);
  for (std::size_t i = 0; i < length(); ++i) {
    write(wr, u2[i]);
    write(wr, h2[i]);
    write(wr, w2[i]);
  }
  write(wr, b12_alpha);
  return std::move(wr).finish();
}

Bw2::SecretKey Bw2::SecretKey::deserialize(std::span<const std::uint8_t> bytes) {
  codec::Reader r(bytes, "BW2.SK");
  SecretKey sk;
  sk.suite_id = r.suite_id();
  const std::size_t l = r.count(detail::kMaxLength);
  if (l == 0) throw DecodeError("BW2 secret key with zero length");
  sk.v2 = read_side2(r, 2);
  for (std::size_t i = 0; i < l; ++i) {
    sk.u2.push_back(read_side2(r, 2));
    sk.h2.push_back(read_side2(r, 2));
    sk.w2.push_back(read_side2(r, 2));
  }
  sk.b12_alpha = read_side2(r, 2);
  r.expect_end();
  return sk;
}

Bytes Bw2::Token::serialize() const {
  codec::Writer wr("BW2.TK", suite_id);
  wr.u32(static_cast<std::uint32_t>(l));
  detail::write_indices(wr, indices);
  write(wr, k1);
  for (std::size_t n = 0; n < indices.size(); ++n) {
    write(wr, k2[n]);
    write(wr, k3[n]);
  }
  return std::move(wr).finish();
}

Bw2::Token Bw2::Token::deserialize(std::span<const std::uint8_t> bytes) {
  codec::Reader r(bytes, "BW2.TK");
  Token tk;
  tk.suite_id = r.suite_id();
  tk.l = r.count(detail::kMaxLength);
  tk.indices = detail::read_indices(r, tk.l);
  tk.k1 = read_side2(r, 2);
  for (std::size_t n = 0; n < tk.indices.size(); ++n) {
    tk.k2.push_back(read_side2(r, 2));
    tk.k3.push_back(read_side2(r, 2));
  }
  r.expect_end();
  return tk;
}

Bytes Bw2::Ciphertext::serialize() const {
  codec::Writer wr("BW2.CT", suite_id);
  wr.u32(static_cast<std::uint32_t>(length()));
  wr.gt(c0);
  write(wr, c1);
  for (std::size_t i = 0; i < length(); ++i) {
    write(wr, c2[i]);
    write(wr, c3[i]);
  }
  detail::write_sealed(wr, sealed);
  return std::move(wr).finish();
}

Bw2::Ciphertext Bw2::Ciphertext::deserialize(std::span<const std::uint8_t> bytes) {
  codec::Reader r(bytes, "BW2.CT");
  Ciphertext ct;
  ct.suite_id = r.suite_id();
  const std::size_t l = r.count(detail::kMaxLength);
  ct.c0 = r.gt();
  ct.c1 = read_side1(r, 2);
  for (std::size_t i = 0; i < l; ++i) {
    ct.c2.push_back(read_side1(r, 2));
    ct.c3.push_back(read_side1(r, 2));
  }
  ct.sealed = detail::read_sealed(r);
  r.expect_end();
  return ct;
}

Bw2::KeyPair Bw2::setup(RandomSource& rng, std::size_t l, const GroupSuite& suite) {
  return setup_with_trapdoor(rng, l, suite).keys;
}

Bw2::SetupResult Bw2::setup_with_trapdoor(RandomSource& rng, std::size_t l,
                                          const GroupSuite& suite) {
  if (l == 0) throw UsageError("BW2 setup: length must be at least 1");
  Trapdoor td;
  td.basis = gen_basis2(rng).trapdoor;
  td.v = Scalar::random(rng);
  td.alpha = Scalar::random(rng);
  td.u = detail::random_scalars(rng, l);
  td.h = detail::random_scalars(rng, l);
  td.w = detail::random_scalars(rng, l);
  td.z_v = Scalar::random(rng);
  td.z_u = detail::random_scalars(rng, l);
  td.z_h = detail::random_scalars(rng, l);
  td.z_w = detail::random_scalars(rng, l);
  KeyPair keys = keys_from_trapdoor(td, suite);
  return {std::move(keys), std::move(td)};
}

Bw2::KeyPair Bw2::keys_from_trapdoor(const Trapdoor& td, const GroupSuite& suite) {
  const std::size_t l = td.u.size();
  if (l == 0 || td.h.size() != l || td.w.size() != l || td.z_u.size() != l ||
      td.z_h.size() != l || td.z_w.size() != l)
    throw UsageError("BW2 trapdoor: inconsistent lengths");

  const Basis2 basis = basis2_from_trapdoor(td.basis);
  const auto& b1 = basis.side1;
  const auto& b2 = basis.side2;

  KeyPair kp;
  PublicKey& pk = kp.pk;
  SecretKey& sk = kp.sk;
  pk.suite_id = sk.suite_id = suite.id;
  pk.basis = b1;

  const Side1 v1 = b1.b11.pow(td.v);
  pk.v = v1 * b1.b2.pow(td.z_v);
  for (std::size_t i = 0; i < l; ++i) {
    pk.u.push_back(b1.b11.pow(td.u[i]) * b1.b2.pow(td.z_u[i]));
    pk.h.push_back(b1.b11.pow(td.h[i]) * b1.b2.pow(td.z_h[i]));
    pk.w.push_back(b1.b11.pow(td.w[i]) * b1.b2.pow(td.z_w[i]));
  }
  pk.omega = vec_pair(v1, b2.b12).pow(td.alpha);

  sk.v2 = b2.b12.pow(td.v);
  for (std::size_t i = 0; i < l; ++i) {
    sk.u2.push_back(b2.b12.pow(td.u[i]));
    sk.h2.push_back(b2.b12.pow(td.h[i]));
    sk.w2.push_back(b2.b12.pow(td.w[i]));
  }
  sk.b12_alpha = b2.b12.pow(td.alpha);
  return kp;
}

Bw2::Token Bw2::gen_token(RandomSource& rng, const PatternVector& sigma, const SecretKey& sk,
                          const PublicKey& pk) {
  return gen_token_with(sigma, sk, pk, sample_token_randomness(rng, sigma));
}

Bw2::TokenRandomness Bw2::sample_token_randomness(RandomSource& rng, const PatternVector& sigma) {
  const std::size_t s = sigma.fixed_indices().size();
  return {detail::random_scalars(rng, s), detail::random_scalars(rng, s)};
}

Bw2::Token Bw2::gen_token_with(const PatternVector& sigma, const SecretKey& sk,
                               const PublicKey& pk, const TokenRandomness& rnd) {
  detail::check_pattern(sigma, pk.length(), false);
  if (sk.length() != pk.length()) throw UsageError("BW2: key length mismatch");
  check_suite(sk.suite_id, pk.suite_id);

  Token tk;
  tk.suite_id = pk.suite_id;
  tk.l = pk.length();
  tk.indices = sigma.fixed_indices();
  if (rnd.r1.size() != tk.indices.size() || rnd.r2.size() != tk.indices.size())
    throw UsageError("BW2: token randomness does not match the pattern");

  tk.k1 = sk.b12_alpha;
  for (std::size_t n = 0; n < tk.indices.size(); ++n) {
    const std::size_t i = tk.indices[n];
    tk.k1 *= (sk.u2[i].pow(sigma.value(i)) * sk.h2[i]).pow(rnd.r1[n]) * sk.w2[i].pow(rnd.r2[n]);
    tk.k2.push_back(sk.v2.pow(-rnd.r1[n]));
    tk.k3.push_back(sk.v2.pow(-rnd.r2[n]));
  }
  return tk;
}

Bw2::Ciphertext Bw2::encrypt_raw(RandomSource& rng, const AttributeVector& x, const GT& m,
                                 const PublicKey& pk) {
  return encrypt_raw_with(x, m, pk, sample_encrypt_randomness(rng, pk.length()));
}

Bw2::EncryptRandomness Bw2::sample_encrypt_randomness(RandomSource& rng, std::size_t l) {
  EncryptRandomness rnd;
  rnd.t = Scalar::random(rng);
  rnd.z1 = Scalar::random(rng);
  rnd.z2 = detail::random_scalars(rng, l);
  rnd.z3 = detail::random_scalars(rng, l);
  return rnd;
}

Bw2::Ciphertext Bw2::encrypt_raw_with(const AttributeVector& x, const GT& m, const PublicKey& pk,
                                      const EncryptRandomness& rnd) {
  const std::size_t l = pk.length();
  detail::check_attributes(x, l);
  if (rnd.z2.size() != l || rnd.z3.size() != l)
    throw UsageError("BW2: encryption randomness does not match the key length");

  Ciphertext ct;
  ct.suite_id = pk.suite_id;
  ct.c0 = pk.omega.pow(rnd.t) * m;
  ct.c1 = pk.v.pow(rnd.t) * pk.basis.b2.pow(rnd.z1);
  for (std::size_t i = 0; i < l; ++i) {
    ct.c2.push_back((pk.u[i].pow(x[i]) * pk.h[i]).pow(rnd.t) * pk.basis.b2.pow(rnd.z2[i]));
    ct.c3.push_back(pk.w[i].pow(rnd.t) * pk.basis.b2.pow(rnd.z3[i]));
  }
  return ct;
}

GT Bw2::query_raw(const Ciphertext& ct, const Token& tk, const PublicKey& pk) {
  check_suite(ct.suite_id, pk.suite_id);
  check_suite(tk.suite_id, pk.suite_id);
  if (ct.length() != pk.length() || ct.c3.size() != pk.length())
    throw UsageError("BW2: ciphertext length does not match the public key");
  if (tk.l != pk.length()) throw UsageError("BW2: token length does not match the public key");
  if (tk.k2.size() != tk.indices.size() || tk.k3.size() != tk.indices.size())
    throw UsageError("BW2: malformed token");

  std::vector<Side1> lhs{ct.c1};
  std::vector<Side2> rhs{tk.k1};
  for (std::size_t n = 0; n < tk.indices.size(); ++n) {
    const std::size_t i = tk.indices[n];
    lhs.push_back(ct.c2[i]);
    rhs.push_back(tk.k2[n]);
    lhs.push_back(ct.c3[i]);
    rhs.push_back(tk.k3[n]);
  }
  return ct.c0 * vec_pair_product(lhs, rhs).inverse();
}

}  // namespace hve
