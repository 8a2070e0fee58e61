#include "hve/schemes/dhve.hpp"

#include <algorithm>

namespace hve {

namespace {

std::vector<std::size_t> with_index(std::vector<std::size_t> s, std::size_t j) {
  s.insert(std::lower_bound(s.begin(), s.end(), j), j);
  return s;
}

std::size_t position(const std::vector<std::size_t>& s, std::size_t i) {
  auto it = std::lower_bound(s.begin(), s.end(), i);
  if (it == s.end() || *it != i) throw UsageError("index not present");
  return static_cast<std::size_t>(it - s.begin());
}

}  // namespace

std::vector<std::size_t> Dhve3::Token::delegatable_indices() const {
  std::vector<std::size_t> out;
  for (const auto& d : delegations) out.push_back(d.j);
  return out;
}

PatternVector Dhve3::Token::shape() const {
  std::vector<Slot> slots(l, Wildcard{});
  for (std::size_t i : indices) slots[i] = Scalar::zero();
  for (const auto& d : delegations) slots[d.j] = Delegatable{};
  return PatternVector(std::move(slots));
}

const Dhve3::Delegation* Dhve3::Token::find_delegation(std::size_t j) const {
  for (const auto& d : delegations)
    if (d.j == j) return &d;
  return nullptr;
}

std::size_t Dhve3::Token::group_element_count() const {
  std::size_t n = 3 + k4.size();
  for (const auto& d : delegations) n += 4 + d.l4.size();
  return 3 * n;
}

Bytes Dhve3::Token::serialize() const {
  codec::Writer wr("DHVE3.TK", suite_id);
  wr.u32(static_cast<std::uint32_t>(l));
  detail::write_indices(wr, indices);
  write(wr, k1);
  write(wr, k2);
  write(wr, k3);
  for (const Side2& k : k4) write(wr, k);
  const std::vector<std::size_t> dj = delegatable_indices();
  detail::write_indices(wr, dj);
  for (const auto& d : delegations) {
    write(wr, d.l1u);
    write(wr, d.l1h);
    write(wr, d.l2);
    write(wr, d.l3);
    for (const Side2& e : d.l4) write(wr, e);
  }
  return std::move(wr).finish();
}

Dhve3::Token Dhve3::Token::deserialize(std::span<const std::uint8_t> bytes) {
  codec::Reader r(bytes, "DHVE3.TK");
  Token tk;
  tk.suite_id = r.suite_id();
  tk.l = r.count(detail::kMaxLength);
  tk.indices = detail::read_indices(r, tk.l);
  tk.k1 = read_side2(r, 3);
  tk.k2 = read_side2(r, 3);
  tk.k3 = read_side2(r, 3);
  for (std::size_t n = 0; n < tk.indices.size(); ++n) tk.k4.push_back(read_side2(r, 3));
  for (std::size_t j : detail::read_indices(r, tk.l)) {
    if (std::binary_search(tk.indices.begin(), tk.indices.end(), j))
      throw DecodeError("delegatable index is also fixed");
    Delegation d;
    d.j = j;
    d.l1u = read_side2(r, 3);
    d.l1h = read_side2(r, 3);
    d.l2 = read_side2(r, 3);
    d.l3 = read_side2(r, 3);
    d.idx4 = with_index(tk.indices, j);
    for (std::size_t n = 0; n < d.idx4.size(); ++n) d.l4.push_back(read_side2(r, 3));
    tk.delegations.push_back(std::move(d));
  }
  r.expect_end();
  return tk;
}

Dhve3::KeyPair Dhve3::setup(RandomSource& rng, std::size_t l, const GroupSuite& suite) {
  return setup_with_trapdoor(rng, l, suite).keys;
}

Dhve3::SetupResult Dhve3::setup_with_trapdoor(RandomSource& rng, std::size_t l,
                                              const GroupSuite& suite) {
  Trapdoor td = conv3::sample_trapdoor(rng, l);
  KeyPair keys = keys_from_trapdoor(td, suite);
  return {std::move(keys), std::move(td)};
}

Dhve3::KeyPair Dhve3::keys_from_trapdoor(const Trapdoor& td, const GroupSuite& suite) {
  auto [pk, sk] = conv3::keys_from_trapdoor(td, suite);
  return {{std::move(pk)}, {std::move(sk)}};
}

Dhve3::Token Dhve3::gen_token(RandomSource& rng, const PatternVector& sigma, const SecretKey& sk,
                              const PublicKey& pk) {
  detail::check_pattern(sigma, pk.length(), true);
  if (sk.length() != pk.length()) throw UsageError("DHVE3: key length mismatch");
  if (sk.suite_id != pk.suite_id) throw UsageError("records belong to different group suites");

  const Side2& b3 = sk.b3_hat;
  auto blind = [&](const Side2& x) { return x * b3.pow(Scalar::random(rng)); };

  Token tk;
  tk.suite_id = pk.suite_id;
  tk.l = pk.length();
  tk.indices = sigma.fixed_indices();

  // (u2_i^sigma_i h2_i) for i in S
  std::vector<Side2> slot_key;
  for (std::size_t i : tk.indices) slot_key.push_back(sk.u2[i].pow(sigma.value(i)) * sk.h2[i]);

  const Scalar r1 = Scalar::random(rng), r2 = Scalar::random(rng);
  Side2 k1 = sk.b12_alpha * sk.w21.pow(r1) * sk.w22.pow(r2);
  for (std::size_t n = 0; n < tk.indices.size(); ++n) {
    const Scalar r3 = Scalar::random(rng);
    k1 *= slot_key[n].pow(r3);
    tk.k4.push_back(blind(sk.v2.pow(-r3)));
  }
  tk.k1 = blind(k1);
  tk.k2 = blind(sk.v2.pow(-r1));
  tk.k3 = blind(sk.v2.pow(-r2));

  for (std::size_t j : sigma.delegatable_indices()) {
    Delegation d;
    d.j = j;
    d.idx4 = with_index(tk.indices, j);
    const Scalar s1 = Scalar::random(rng), s2 = Scalar::random(rng);
    Side2 l1h = sk.w21.pow(s1) * sk.w22.pow(s2);
    Scalar s3jj;
    std::size_t n = 0;  // walks S
    for (std::size_t i : d.idx4) {
      const Scalar s3 = Scalar::random(rng);
      if (i == j) {
        s3jj = s3;
      } else {
        l1h *= slot_key[n++].pow(s3);
      }
      d.l4.push_back(blind(sk.v2.pow(-s3)));
    }
    l1h *= sk.h2[j].pow(s3jj);
    d.l1u = blind(sk.u2[j].pow(s3jj));
    d.l1h = blind(l1h);
    d.l2 = blind(sk.v2.pow(-s1));
    d.l3 = blind(sk.v2.pow(-s2));
    tk.delegations.push_back(std::move(d));
  }
  return tk;
}

Dhve3::Token Dhve3::delegate(RandomSource& rng, const PatternVector& sigma_new, const Token& tk,
                             const PublicKey& pk) {
  if (tk.suite_id != pk.suite_id) throw UsageError("records belong to different group suites");
  if (tk.l != pk.length()) throw UsageError("DHVE3: token length does not match the public key");
  if (sigma_new.size() != tk.l)
    throw UsageError("delegate: pattern length " + std::to_string(sigma_new.size()) +
                     " != token length " + std::to_string(tk.l));

  // Locate the single '?' slot being fixed; every other slot keeps its kind.
  const PatternVector old_shape = tk.shape();
  std::optional<std::size_t> k;
  for (std::size_t i = 0; i < tk.l; ++i) {
    const bool same_kind = old_shape[i].index() == sigma_new[i].index();
    if (same_kind) continue;
    if (!old_shape.is_delegatable(i))
      throw UsageError("delegate: slot " + std::to_string(i) + " is not delegatable in the token");
    if (k) throw UsageError("delegate: pattern changes more than one slot");
    k = i;
  }
  if (!k) throw UsageError("delegate: pattern does not fix any delegatable slot");

  const Side2& b3 = pk.b3_hat;
  auto blind = [&](const Side2& x) { return x * b3.pow(Scalar::random(rng)); };

  Token out;
  out.suite_id = tk.suite_id;
  out.l = tk.l;

  if (sigma_new.is_wildcard(*k)) {
    out.indices = tk.indices;
    out.k1 = blind(tk.k1);
    out.k2 = blind(tk.k2);
    out.k3 = blind(tk.k3);
    for (const Side2& e : tk.k4) out.k4.push_back(blind(e));
    for (const auto& d : tk.delegations) {
      if (d.j == *k) continue;
      Delegation nd;
      nd.j = d.j;
      nd.idx4 = d.idx4;
      nd.l1u = blind(d.l1u);
      nd.l1h = blind(d.l1h);
      nd.l2 = blind(d.l2);
      nd.l3 = blind(d.l3);
      for (const Side2& e : d.l4) nd.l4.push_back(blind(e));
      out.delegations.push_back(std::move(nd));
    }
    return out;
  }

  const Delegation& dk = *tk.find_delegation(*k);
  const Scalar& sigma_k = sigma_new.value(*k);
  // Partial token for k specialized to sigma_k.
  const Side2 lk = dk.l1u.pow(sigma_k) * dk.l1h;
  const Scalar mu = Scalar::random(rng);

  out.indices = with_index(tk.indices, *k);
  out.k1 = blind(tk.k1 * lk.pow(mu));
  out.k2 = blind(tk.k2 * dk.l2.pow(mu));
  out.k3 = blind(tk.k3 * dk.l3.pow(mu));
  for (std::size_t i : out.indices) {
    const Side2 add = dk.l4[position(dk.idx4, i)].pow(mu);
    out.k4.push_back(blind(i == *k ? add : tk.k4[position(tk.indices, i)] * add));
  }

  // Every remaining partial token j becomes mu L_j + tau_j L_k, a partial
  // token for the enlarged fixed set.
  for (const auto& d : tk.delegations) {
    if (d.j == *k) continue;
    const Scalar tau = Scalar::random(rng);
    Delegation nd;
    nd.j = d.j;
    nd.idx4 = with_index(out.indices, d.j);
    nd.l1u = blind(d.l1u.pow(mu));
    nd.l1h = blind(d.l1h.pow(mu) * lk.pow(tau));
    nd.l2 = blind(d.l2.pow(mu) * dk.l2.pow(tau));
    nd.l3 = blind(d.l3.pow(mu) * dk.l3.pow(tau));
    for (std::size_t i : nd.idx4) {
      if (i == d.j) {
        nd.l4.push_back(blind(d.l4[position(d.idx4, i)].pow(mu)));
      } else if (i == *k) {
        nd.l4.push_back(blind(dk.l4[position(dk.idx4, *k)].pow(tau)));
      } else {
        nd.l4.push_back(
            blind(d.l4[position(d.idx4, i)].pow(mu) * dk.l4[position(dk.idx4, i)].pow(tau)));
      }
    }
    out.delegations.push_back(std::move(nd));
  }
  return out;
}

Dhve3::Ciphertext Dhve3::encrypt_raw(RandomSource& rng, const AttributeVector& x, const GT& m,
                                     const PublicKey& pk) {
  return {conv3::encrypt_raw_with(x, m, pk, conv3::sample_encrypt_randomness(rng, pk.length()))};
}

GT Dhve3::query_raw(const Ciphertext& ct, const Token& tk, const PublicKey& pk) {
  conv3::check_compatible(ct, pk);
  if (tk.suite_id != pk.suite_id) throw UsageError("records belong to different group suites");
  if (tk.l != pk.length()) throw UsageError("DHVE3: token length does not match the public key");
  if (tk.k4.size() != tk.indices.size()) throw UsageError("DHVE3: malformed token");

  std::vector<Side1> lhs{ct.c1, ct.c2, ct.c3};
  std::vector<Side2> rhs{tk.k1, tk.k2, tk.k3};
  for (std::size_t n = 0; n < tk.indices.size(); ++n) {
    lhs.push_back(ct.c4[tk.indices[n]]);
    rhs.push_back(tk.k4[n]);
  }
  return ct.c0 * vec_pair_product(lhs, rhs).inverse();
}

}  // namespace hve
