#include "hve/cli/spec.hpp"

#include <charconv>

#include "hve/core/error.hpp"
#include "hve/predicates/encodings.hpp"

namespace hve::cli {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::uint64_t parse_int(std::string_view s, std::string_view context) {
  s = trim(s);
  std::uint64_t v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || p != s.data() + s.size())
    throw UsageError("expected an integer in " + std::string(context) + ", got '" +
                     std::string(s) + "'");
  return v;
}

std::string field_name(std::size_t i) { return "field " + std::to_string(i + 1); }

void check_in_domain(std::uint64_t v, const Meta& meta, std::size_t i) {
  if (v < 1 || v > meta.n)
    throw UsageError(field_name(i) + ": value " + std::to_string(v) + " outside domain {1.." +
                     std::to_string(meta.n) + "}");
}

// Integer interval an expression denotes on an encoded field.
std::pair<std::uint64_t, std::uint64_t> as_interval(const FieldExpr& e, const Meta& meta,
                                                    std::size_t i) {
  if (std::holds_alternative<ExprAny>(e)) return {1, meta.n};
  if (const auto* le = std::get_if<ExprLe>(&e)) {
    check_in_domain(le->k, meta, i);
    return {1, le->k};
  }
  if (const auto* ge = std::get_if<ExprGe>(&e)) {
    check_in_domain(ge->k, meta, i);
    return {ge->k, meta.n};
  }
  if (const auto* iv = std::get_if<ExprInterval>(&e)) {
    check_in_domain(iv->lo, meta, i);
    check_in_domain(iv->hi, meta, i);
    if (iv->lo > iv->hi) throw UsageError(field_name(i) + ": empty interval");
    return {iv->lo, iv->hi};
  }
  if (const auto* eq = std::get_if<ExprEq>(&e)) {
    const std::uint64_t v = parse_int(eq->value, field_name(i));
    check_in_domain(v, meta, i);
    return {v, v};
  }
  throw UsageError(field_name(i) + ": expression not supported by a " +
                   std::string(encoding_name(meta.encoding)) + " index");
}

std::set<std::uint64_t> as_set(const FieldExpr& e, const Meta& meta, std::size_t i) {
  if (const auto* in = std::get_if<ExprIn>(&e)) {
    for (auto v : in->values) check_in_domain(v, meta, i);
    return in->values;
  }
  const auto [lo, hi] = as_interval(e, meta, i);
  std::set<std::uint64_t> out;
  for (auto v = lo; v <= hi; ++v) out.insert(v);
  return out;
}

}  // namespace

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t depth = 0;
  std::string cur;
  for (char c : text) {
    if (c == '{' || c == '[') ++depth;
    if ((c == '}' || c == ']') && depth > 0) --depth;
    if (c == sep && depth == 0) {
      out.emplace_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.emplace_back(trim(cur));
  return out;
}

FieldExpr parse_field(std::string_view text) {
  const std::string_view t = trim(text);
  if (t.empty()) throw UsageError("empty field expression");
  if (t == "*") return ExprAny{};
  if (t == "?") return ExprOpen{};
  if (t.starts_with("<=")) return ExprLe{parse_int(t.substr(2), "'<='")};
  if (t.starts_with(">=")) return ExprGe{parse_int(t.substr(2), "'>='")};
  if (t.front() == '=') {
    const std::string_view v = trim(t.substr(1));
    if (v.empty()) throw UsageError("'=' needs a value");
    return ExprEq{std::string(v)};
  }
  if (t.front() == '[') {
    if (t.back() != ']') throw UsageError("unterminated interval '" + std::string(t) + "'");
    const auto parts = split(t.substr(1, t.size() - 2), ',');
    if (parts.size() != 2) throw UsageError("interval needs exactly two bounds");
    return ExprInterval{parse_int(parts[0], "interval"), parse_int(parts[1], "interval")};
  }
  if (t.starts_with("in{")) {
    if (t.back() != '}') throw UsageError("unterminated set '" + std::string(t) + "'");
    ExprIn in;
    const std::string_view body = trim(t.substr(3, t.size() - 4));
    if (!body.empty())
      for (const auto& p : split(body, ',')) in.values.insert(parse_int(p, "set"));
    return in;
  }
  throw UsageError("cannot parse field expression '" + std::string(t) + "'");
}

std::vector<FieldExpr> parse_spec(std::string_view text) {
  std::vector<FieldExpr> out;
  for (const auto& f : split(text, ';')) out.push_back(parse_field(f));
  return out;
}

PatternVector compile_spec(const std::vector<FieldExpr>& fields, const Meta& meta) {
  if (fields.size() != meta.fields())
    throw UsageError("spec has " + std::to_string(fields.size()) + " fields, index expects " +
                     std::to_string(meta.fields()));
  const std::size_t n = meta.n, w = meta.w;
  switch (meta.encoding) {
    case Encoding::none: {
      std::vector<Slot> slots;
      for (std::size_t i = 0; i < fields.size(); ++i) {
        const auto& e = fields[i];
        if (const auto* eq = std::get_if<ExprEq>(&e)) {
          slots.emplace_back(attribute_scalar(eq->value));
        } else if (std::holds_alternative<ExprAny>(e)) {
          slots.emplace_back(Wildcard{});
        } else if (std::holds_alternative<ExprOpen>(e)) {
          if (meta.scheme != SchemeKind::dhve3)
            throw UsageError(field_name(i) + ": '?' is only available with dhve3");
          slots.emplace_back(Delegatable{});
        } else {
          throw UsageError(field_name(i) +
                           ": comparisons need an index created with --encode");
        }
      }
      return PatternVector(std::move(slots));
    }
    case Encoding::cmp: {
      predicates::ComparisonSpec spec{n, w, {}};
      for (std::size_t i = 0; i < w; ++i) {
        const auto& e = fields[i];
        if (const auto* le = std::get_if<ExprLe>(&e)) {
          check_in_domain(le->k, meta, i);
          spec.a.push_back(le->k);
        } else if (std::holds_alternative<ExprAny>(e)) {
          spec.a.push_back(n);
        } else {
          throw UsageError(field_name(i) + ": a cmp index supports only '<=k' and '*'");
        }
      }
      return predicates::encode_comparison_token(spec);
    }
    case Encoding::range: {
      predicates::RangeSpec spec{n, w, {}};
      for (std::size_t i = 0; i < w; ++i) spec.intervals.push_back(as_interval(fields[i], meta, i));
      return predicates::encode_range_token(spec);
    }
    case Encoding::subset: {
      predicates::SubsetSpec spec{n, w, {}};
      for (std::size_t i = 0; i < w; ++i) spec.sets.push_back(as_set(fields[i], meta, i));
      return predicates::encode_subset_token(spec);
    }
  }
  throw UsageError("unknown encoding");
}

PatternVector compile_spec(std::string_view text, const Meta& meta) {
  return compile_spec(parse_spec(text), meta);
}

AttributeVector parse_attributes(std::string_view text, const Meta& meta) {
  if (meta.encoding != Encoding::none)
    throw UsageError("this index encodes integer values; use --values");
  const auto parts = split(text, ',');
  if (parts.size() != meta.l)
    throw UsageError("expected " + std::to_string(meta.l) + " attributes, got " +
                     std::to_string(parts.size()));
  return AttributeVector::from_strings(parts);
}

std::vector<std::uint64_t> parse_values(std::string_view text, const Meta& meta) {
  if (meta.encoding == Encoding::none)
    throw UsageError("this index stores plain attributes; use --attrs");
  std::vector<std::uint64_t> out;
  for (const auto& p : split(text, ',')) out.push_back(parse_int(p, "--values"));
  if (out.size() != meta.w)
    throw UsageError("expected " + std::to_string(meta.w) + " values, got " +
                     std::to_string(out.size()));
  for (std::size_t i = 0; i < out.size(); ++i) check_in_domain(out[i], meta, i);
  return out;
}

AttributeVector encode_values(std::span<const std::uint64_t> values, const Meta& meta) {
  switch (meta.encoding) {
    case Encoding::cmp: return predicates::encode_comparison_ciphertext(meta.n, meta.w, values);
    case Encoding::range: return predicates::encode_range_ciphertext(meta.n, meta.w, values);
    case Encoding::subset: return predicates::encode_subset_ciphertext(meta.n, meta.w, values);
    case Encoding::none: break;
  }
  throw UsageError("index has no value encoding");
}

}  // namespace hve::cli
