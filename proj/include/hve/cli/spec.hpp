#pragma once

// Predicate spec text: one expression per field, separated by ';'.
//
//   =v        equal to v
//   *         anything
//   ?         left open for delegation (dhve3, unencoded only)
//   <=k, >=k  comparison against an integer in {1..n}
//   [lo,hi]   closed integer interval
//   in{a,b}   membership in a set of integers
//
// Which expressions are allowed depends on how the index encodes values.

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hve/api/pattern.hpp"
#include "hve/cli/meta.hpp"

namespace hve::cli {

struct ExprEq { std::string value; };
struct ExprAny {};
struct ExprOpen {};
struct ExprLe { std::uint64_t k; };
struct ExprGe { std::uint64_t k; };
struct ExprInterval { std::uint64_t lo, hi; };
struct ExprIn { std::set<std::uint64_t> values; };

using FieldExpr = std::variant<ExprEq, ExprAny, ExprOpen, ExprLe, ExprGe, ExprInterval, ExprIn>;

/// Throws UsageError on malformed text.
std::vector<FieldExpr> parse_spec(std::string_view text);
FieldExpr parse_field(std::string_view text);

/// Compiles parsed fields into the HVE pattern for `meta`.
PatternVector compile_spec(const std::vector<FieldExpr>& fields, const Meta& meta);
PatternVector compile_spec(std::string_view text, const Meta& meta);

/// Parses the attribute list for an unencoded record ("a,b,c").
AttributeVector parse_attributes(std::string_view text, const Meta& meta);
/// Parses and range-checks integer values for an encoded record ("3,7").
std::vector<std::uint64_t> parse_values(std::string_view text, const Meta& meta);
/// Encoded attribute vector for the values.
AttributeVector encode_values(std::span<const std::uint64_t> values, const Meta& meta);

std::vector<std::string> split(std::string_view text, char sep);

}  // namespace hve::cli
