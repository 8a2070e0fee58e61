#include "hve/api/scheme.hpp"

namespace hve::detail {

void check_pattern(const PatternVector& sigma, std::size_t l, bool allow_delegatable) {
  if (sigma.size() != l)
    throw UsageError("pattern length " + std::to_string(sigma.size()) + " != scheme length " +
                     std::to_string(l));
  if (!allow_delegatable && sigma.has_delegatable())
    throw UsageError("delegatable '?' slots are only supported by the DHVE3 scheme");
}

void check_attributes(const AttributeVector& x, std::size_t l) {
  if (x.size() != l)
    throw UsageError("attribute vector length " + std::to_string(x.size()) +
                     " != scheme length " + std::to_string(l));
}

std::vector<Scalar> random_scalars(RandomSource& rng, std::size_t n) {
  std::vector<Scalar> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(Scalar::random(rng));
  return out;
}

void write_indices(codec::Writer& w, std::span<const std::size_t> idx) {
  w.u32(static_cast<std::uint32_t>(idx.size()));
  for (std::size_t i : idx) w.u32(static_cast<std::uint32_t>(i));
}

std::vector<std::size_t> read_indices(codec::Reader& r, std::size_t l) {
  const std::size_t n = r.count(l);
  std::vector<std::size_t> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t i = r.u32();
    if (i >= l) throw DecodeError("index out of range");
    if (!out.empty() && i <= out.back()) throw DecodeError("index set not strictly ascending");
    out.push_back(i);
  }
  return out;
}

void write_sealed(codec::Writer& w, const std::optional<SealedPayload>& sealed) {
  w.u32(sealed ? 1 : 0);
  if (sealed) w.bytes(sealed->blob);
}

std::optional<SealedPayload> read_sealed(codec::Reader& r) {
  const std::uint32_t flag = r.u32();
  if (flag > 1) throw DecodeError("bad sealed-payload flag");
  if (flag == 0) return std::nullopt;
  SealedPayload s{r.bytes()};
  if (s.blob.size() < kSealNonceBytes + kSealTagBytes) throw DecodeError("sealed payload too short");
  return s;
}

}  // namespace hve::detail
