#include "hve/predicates/encodings.hpp"

#include "hve/core/error.hpp"

namespace hve::predicates {

namespace {

void check_shape(std::size_t n, std::size_t w) {
  if (n == 0) throw UsageError("encoding domain size n must be at least 1");
  if (w == 0) throw UsageError("encoding width w must be at least 1");
}

void check_bound(std::size_t n, std::uint64_t v, const char* what) {
  if (v < 1 || v > n)
    throw UsageError(std::string(what) + " " + std::to_string(v) + " outside {1.." +
                     std::to_string(n) + "}");
}

std::vector<std::uint64_t> bits_le(std::size_t n, std::size_t w,
                                   std::span<const std::uint64_t> b) {
  check_values(n, w, b);
  std::vector<std::uint64_t> out(n * w, 0);
  for (std::size_t i = 1; i <= w; ++i)
    for (std::size_t j = 1; j <= n; ++j) out[position(n, i, j)] = j >= b[i - 1] ? 1 : 0;
  return out;
}

std::vector<std::uint64_t> bits_ge(std::size_t n, std::size_t w,
                                   std::span<const std::uint64_t> b) {
  check_values(n, w, b);
  std::vector<std::uint64_t> out(n * w, 0);
  for (std::size_t i = 1; i <= w; ++i)
    for (std::size_t j = 1; j <= n; ++j) out[position(n, i, j)] = j <= b[i - 1] ? 1 : 0;
  return out;
}

std::vector<Slot> one_hot_token(std::size_t n, std::size_t w, std::span<const std::uint64_t> at) {
  std::vector<Slot> slots(n * w, Wildcard{});
  for (std::size_t i = 1; i <= w; ++i) slots[position(n, i, at[i - 1])] = Scalar::one();
  return slots;
}

}  // namespace

void ComparisonSpec::validate() const {
  check_shape(n, w);
  if (a.size() != w) throw UsageError("comparison spec needs one bound per field");
  for (auto v : a) check_bound(n, v, "comparison bound");
}

void RangeSpec::validate() const {
  check_shape(n, w);
  if (intervals.size() != w) throw UsageError("range spec needs one interval per field");
  for (const auto& [lo, hi] : intervals) {
    check_bound(n, lo, "range lower bound");
    check_bound(n, hi, "range upper bound");
    if (lo > hi) throw UsageError("range interval is empty");
  }
}

void SubsetSpec::validate() const {
  check_shape(n, w);
  if (sets.size() != w) throw UsageError("subset spec needs one set per field");
  for (const auto& s : sets)
    for (auto v : s) check_bound(n, v, "subset element");
}

std::size_t position(std::size_t n, std::size_t i, std::size_t j) { return (i - 1) * n + (j - 1); }

void check_values(std::size_t n, std::size_t w, std::span<const std::uint64_t> b) {
  check_shape(n, w);
  if (b.size() != w)
    throw UsageError("expected " + std::to_string(w) + " values, got " + std::to_string(b.size()));
  for (auto v : b) check_bound(n, v, "value");
}

PatternVector encode_comparison_token(const ComparisonSpec& spec) {
  spec.validate();
  return PatternVector(one_hot_token(spec.n, spec.w, spec.a));
}

AttributeVector encode_comparison_ciphertext(std::size_t n, std::size_t w,
                                             std::span<const std::uint64_t> b) {
  return AttributeVector::from_integers(bits_le(n, w, b));
}

PatternVector encode_ge_token(std::size_t n, std::size_t w, std::span<const std::uint64_t> lo) {
  check_values(n, w, lo);
  return PatternVector(one_hot_token(n, w, lo));
}

AttributeVector encode_ge_ciphertext(std::size_t n, std::size_t w,
                                     std::span<const std::uint64_t> b) {
  return AttributeVector::from_integers(bits_ge(n, w, b));
}

PatternVector encode_range_token(const RangeSpec& spec) {
  spec.validate();
  std::vector<std::uint64_t> lo, hi;
  for (const auto& [l, h] : spec.intervals) {
    lo.push_back(l);
    hi.push_back(h);
  }
  std::vector<Slot> slots = one_hot_token(spec.n, spec.w, hi);
  std::vector<Slot> ge = one_hot_token(spec.n, spec.w, lo);
  slots.insert(slots.end(), ge.begin(), ge.end());
  return PatternVector(std::move(slots));
}

AttributeVector encode_range_ciphertext(std::size_t n, std::size_t w,
                                        std::span<const std::uint64_t> b) {
  std::vector<std::uint64_t> bits = bits_le(n, w, b);
  const std::vector<std::uint64_t> ge = bits_ge(n, w, b);
  bits.insert(bits.end(), ge.begin(), ge.end());
  return AttributeVector::from_integers(bits);
}

PatternVector encode_subset_token(const SubsetSpec& spec) {
  spec.validate();
  std::vector<Slot> slots(spec.n * spec.w, Wildcard{});
  for (std::size_t i = 1; i <= spec.w; ++i)
    for (std::size_t j = 1; j <= spec.n; ++j)
      if (!spec.sets[i - 1].contains(j)) slots[position(spec.n, i, j)] = Scalar::zero();
  return PatternVector(std::move(slots));
}

AttributeVector encode_subset_ciphertext(std::size_t n, std::size_t w,
                                         std::span<const std::uint64_t> b) {
  check_values(n, w, b);
  std::vector<std::uint64_t> bits(n * w, 0);
  for (std::size_t i = 1; i <= w; ++i) bits[position(n, i, b[i - 1])] = 1;
  return AttributeVector::from_integers(bits);
}

PatternVector encode_equality(const PatternVector& sigma) { return sigma; }

bool eval_comparison(const ComparisonSpec& spec, std::span<const std::uint64_t> b) {
  spec.validate();
  check_values(spec.n, spec.w, b);
  for (std::size_t i = 0; i < spec.w; ++i)
    if (b[i] > spec.a[i]) return false;
  return true;
}

bool eval_ge(std::size_t n, std::size_t w, std::span<const std::uint64_t> lo,
             std::span<const std::uint64_t> b) {
  check_values(n, w, lo);
  check_values(n, w, b);
  for (std::size_t i = 0; i < w; ++i)
    if (b[i] < lo[i]) return false;
  return true;
}

bool eval_range(const RangeSpec& spec, std::span<const std::uint64_t> b) {
  spec.validate();
  check_values(spec.n, spec.w, b);
  for (std::size_t i = 0; i < spec.w; ++i)
    if (b[i] < spec.intervals[i].first || b[i] > spec.intervals[i].second) return false;
  return true;
}

bool eval_subset(const SubsetSpec& spec, std::span<const std::uint64_t> b) {
  spec.validate();
  check_values(spec.n, spec.w, b);
  for (std::size_t i = 0; i < spec.w; ++i)
    if (!spec.sets[i].contains(b[i])) return false;
  return true;
}

std::vector<Scalar> ipe_encode_token(const PatternVector& sigma) {
  std::vector<Scalar> out;
  out.reserve(2 * sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (sigma.is_delegatable(i)) throw UsageError("IPE encoding: delegatable slot");
    if (sigma.is_fixed(i)) {
      out.push_back(Scalar::one());
      out.push_back(sigma.value(i));
    } else {
      out.push_back(Scalar::zero());
      out.push_back(Scalar::zero());
    }
  }
  return out;
}

std::vector<Scalar> ipe_encode_ciphertext(RandomSource& rng, const AttributeVector& x) {
  std::vector<Scalar> out;
  out.reserve(2 * x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Scalar r = Scalar::random(rng);
    out.push_back(-(r * x[i]));
    out.push_back(r);
  }
  return out;
}

Scalar ipe_inner_product(std::span<const Scalar> u, std::span<const Scalar> v) {
  if (u.size() != v.size()) throw UsageError("IPE inner product: length mismatch");
  Scalar acc;
  for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * v[i];
  return acc;
}

}  // namespace hve::predicates
