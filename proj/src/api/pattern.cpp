#include "hve/api/pattern.hpp"

#include "hve/core/error.hpp"

namespace hve {

Scalar attribute_scalar(std::string_view attribute) {
  return hash_to_scalar(attribute, "hve/attribute/v1");
}

AttributeVector::AttributeVector(std::vector<Scalar> values) : values_(std::move(values)) {}

AttributeVector AttributeVector::from_strings(std::span<const std::string> attributes) {
  std::vector<Scalar> v;
  v.reserve(attributes.size());
  for (const auto& a : attributes) v.push_back(attribute_scalar(a));
  return AttributeVector(std::move(v));
}

AttributeVector AttributeVector::from_integers(std::span<const std::uint64_t> values) {
  std::vector<Scalar> v;
  v.reserve(values.size());
  for (auto a : values) v.push_back(Scalar::from_u64(a));
  return AttributeVector(std::move(v));
}

PatternVector::PatternVector(std::vector<Slot> slots) : slots_(std::move(slots)) {}

PatternVector PatternVector::all_wildcards(std::size_t l) {
  return PatternVector(std::vector<Slot>(l, Wildcard{}));
}

PatternVector PatternVector::exact(const AttributeVector& x) {
  std::vector<Slot> s(x.values().begin(), x.values().end());
  return PatternVector(std::move(s));
}

PatternVector PatternVector::from_strings(std::span<const std::string> slots) {
  std::vector<Slot> s;
  s.reserve(slots.size());
  for (const auto& text : slots) {
    if (text == "*")
      s.emplace_back(Wildcard{});
    else if (text == "?")
      s.emplace_back(Delegatable{});
    else
      s.emplace_back(attribute_scalar(text));
  }
  return PatternVector(std::move(s));
}

const Scalar& PatternVector::value(std::size_t i) const {
  if (!is_fixed(i)) throw UsageError("pattern slot " + std::to_string(i) + " is not fixed");
  return std::get<Scalar>(slots_[i]);
}

std::vector<std::size_t> PatternVector::fixed_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < slots_.size(); ++i)
    if (is_fixed(i)) out.push_back(i);
  return out;
}

std::vector<std::size_t> PatternVector::delegatable_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < slots_.size(); ++i)
    if (is_delegatable(i)) out.push_back(i);
  return out;
}

bool PatternVector::has_delegatable() const { return !delegatable_indices().empty(); }

PatternVector PatternVector::with(std::size_t i, Slot slot) const {
  if (i >= slots_.size()) throw UsageError("pattern index out of range");
  PatternVector out = *this;
  out.slots_[i] = std::move(slot);
  return out;
}

PatternVector PatternVector::delegatable_as_wildcard() const {
  PatternVector out = *this;
  for (auto& s : out.slots_)
    if (std::holds_alternative<Delegatable>(s)) s = Wildcard{};
  return out;
}

bool predicate_eval(const PatternVector& sigma, const AttributeVector& x) {
  if (sigma.size() != x.size())
    throw UsageError("predicate_eval: pattern length " + std::to_string(sigma.size()) +
                     " != attribute length " + std::to_string(x.size()));
  bool match = true;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (sigma.is_delegatable(i)) throw UsageError("predicate_eval: delegatable slot in pattern");
    if (sigma.is_fixed(i) && !(sigma.value(i) == x[i])) match = false;
  }
  return match;
}

}  // namespace hve
