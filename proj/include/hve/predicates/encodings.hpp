#pragma once

// Encodings of conjunctive comparison, range and subset predicates into HVE
// vectors over the alphabet {0, 1}, plus the IPE vector encoding.
//
// A query over w fields with domain {1..n} becomes a vector of length n*w
// (2*n*w for ranges). Position (i, j), with 1-based field i and value j, is
// flattened to (i-1)*n + (j-1).

#include <cstdint>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "hve/api/pattern.hpp"

namespace hve::predicates {

/// Field i matches when b_i <= a_i.
struct ComparisonSpec {
  std::size_t n = 0;
  std::size_t w = 0;
  std::vector<std::uint64_t> a;

  void validate() const;
};

/// Field i matches when lo_i <= b_i <= hi_i.
struct RangeSpec {
  std::size_t n = 0;
  std::size_t w = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> intervals;

  void validate() const;
};

/// Field i matches when b_i is in A_i. An empty A_i never matches.
struct SubsetSpec {
  std::size_t n = 0;
  std::size_t w = 0;
  std::vector<std::set<std::uint64_t>> sets;

  void validate() const;
};

/// Flattened HVE index of (field i, value j), both 1-based.
std::size_t position(std::size_t n, std::size_t i, std::size_t j);

/// Throws UsageError unless every b_i is in {1..n} and |b| = w.
void check_values(std::size_t n, std::size_t w, std::span<const std::uint64_t> b);

// <= : token fixes (i, a_i) to 1; ciphertext (i, j) = 1 iff j >= b_i.
PatternVector encode_comparison_token(const ComparisonSpec& spec);
AttributeVector encode_comparison_ciphertext(std::size_t n, std::size_t w,
                                             std::span<const std::uint64_t> b);

// >= : token fixes (i, lo_i) to 1; ciphertext (i, j) = 1 iff j <= b_i.
PatternVector encode_ge_token(std::size_t n, std::size_t w, std::span<const std::uint64_t> lo);
AttributeVector encode_ge_ciphertext(std::size_t n, std::size_t w,
                                     std::span<const std::uint64_t> b);

// Range: the <= encoding of hi followed by the >= encoding of lo.
PatternVector encode_range_token(const RangeSpec& spec);
AttributeVector encode_range_ciphertext(std::size_t n, std::size_t w,
                                        std::span<const std::uint64_t> b);

// Subset: token (i, j) = 0 for j not in A_i, '*' otherwise; ciphertext is
// the indicator of b_i in each block.
PatternVector encode_subset_token(const SubsetSpec& spec);
AttributeVector encode_subset_ciphertext(std::size_t n, std::size_t w,
                                         std::span<const std::uint64_t> b);

/// Conjunctive equality is native to HVE.
PatternVector encode_equality(const PatternVector& sigma);

bool eval_comparison(const ComparisonSpec& spec, std::span<const std::uint64_t> b);
bool eval_ge(std::size_t n, std::size_t w, std::span<const std::uint64_t> lo,
             std::span<const std::uint64_t> b);
bool eval_range(const RangeSpec& spec, std::span<const std::uint64_t> b);
bool eval_subset(const SubsetSpec& spec, std::span<const std::uint64_t> b);

// IPE: sigma -> (1, sigma_i) per fixed slot, (0, 0) per wildcard;
// x -> (-r_i x_i, r_i) with fresh r_i. The inner product is
// sum over fixed i of r_i (sigma_i - x_i).
std::vector<Scalar> ipe_encode_token(const PatternVector& sigma);
std::vector<Scalar> ipe_encode_ciphertext(RandomSource& rng, const AttributeVector& x);
Scalar ipe_inner_product(std::span<const Scalar> u, std::span<const Scalar> v);

}  // namespace hve::predicates
