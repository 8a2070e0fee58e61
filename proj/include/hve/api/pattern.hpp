#pragma once

// Attribute vectors, token patterns and the HVE predicate
//   f_sigma(x) = 1  iff  for every i, sigma_i = * or sigma_i = x_i.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hve/core/groups.hpp"

namespace hve {

/// Attribute strings enter Z_p through this hash.
Scalar attribute_scalar(std::string_view attribute);

class AttributeVector {
 public:
  AttributeVector() = default;
  explicit AttributeVector(std::vector<Scalar> values);

  static AttributeVector from_strings(std::span<const std::string> attributes);
  /// Small integers mapped directly (encodings use {0, 1}).
  static AttributeVector from_integers(std::span<const std::uint64_t> values);

  std::size_t size() const { return values_.size(); }
  const Scalar& operator[](std::size_t i) const { return values_[i]; }
  std::span<const Scalar> values() const { return values_; }

  friend bool operator==(const AttributeVector&, const AttributeVector&) = default;

 private:
  std::vector<Scalar> values_;
};

struct Wildcard {
  friend bool operator==(Wildcard, Wildcard) { return true; }
};

/// '?' slot: may be fixed later by delegation (delegatable scheme only).
struct Delegatable {
  friend bool operator==(Delegatable, Delegatable) { return true; }
};

using Slot = std::variant<Scalar, Wildcard, Delegatable>;

class PatternVector {
 public:
  PatternVector() = default;
  explicit PatternVector(std::vector<Slot> slots);

  static PatternVector all_wildcards(std::size_t l);
  /// Every slot fixed to the corresponding attribute.
  static PatternVector exact(const AttributeVector& x);
  /// "*" -> wildcard, "?" -> delegatable, anything else hashed as a value.
  static PatternVector from_strings(std::span<const std::string> slots);

  std::size_t size() const { return slots_.size(); }
  const Slot& operator[](std::size_t i) const { return slots_[i]; }

  bool is_fixed(std::size_t i) const { return std::holds_alternative<Scalar>(slots_[i]); }
  bool is_wildcard(std::size_t i) const { return std::holds_alternative<Wildcard>(slots_[i]); }
  bool is_delegatable(std::size_t i) const { return std::holds_alternative<Delegatable>(slots_[i]); }
  const Scalar& value(std::size_t i) const;

  /// S: indexes of fixed slots, ascending.
  std::vector<std::size_t> fixed_indices() const;
  /// S_?: indexes of delegatable slots, ascending.
  std::vector<std::size_t> delegatable_indices() const;
  bool has_delegatable() const;

  /// Copy with slot i replaced.
  PatternVector with(std::size_t i, Slot slot) const;
  /// Copy with every delegatable slot read as a wildcard.
  PatternVector delegatable_as_wildcard() const;

  friend bool operator==(const PatternVector&, const PatternVector&) = default;

 private:
  std::vector<Slot> slots_;
};

/// Throws UsageError on length mismatch or a delegatable slot.
bool predicate_eval(const PatternVector& sigma, const AttributeVector& x);

}  // namespace hve
