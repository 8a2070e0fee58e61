#include "hve/cli/meta.hpp"

#include "hve/core/error.hpp"

namespace hve::cli {

SchemeKind parse_scheme(std::string_view name) {
  if (name == "bw2") return SchemeKind::bw2;
  if (name == "ll3") return SchemeKind::ll3;
  if (name == "dhve3") return SchemeKind::dhve3;
  if (name == "asym1") return SchemeKind::asym1;
  throw UsageError("unknown scheme '" + std::string(name) + "' (expected bw2, ll3, dhve3, asym1)");
}

std::string_view scheme_name(SchemeKind s) {
  switch (s) {
    case SchemeKind::bw2: return "bw2";
    case SchemeKind::ll3: return "ll3";
    case SchemeKind::dhve3: return "dhve3";
    case SchemeKind::asym1: return "asym1";
  }
  return "?";
}

Encoding parse_encoding(std::string_view name) {
  if (name == "none" || name.empty()) return Encoding::none;
  if (name == "cmp") return Encoding::cmp;
  if (name == "range") return Encoding::range;
  if (name == "subset") return Encoding::subset;
  throw UsageError("unknown encoding '" + std::string(name) + "' (expected cmp, range, subset)");
}

std::string_view encoding_name(Encoding e) {
  switch (e) {
    case Encoding::none: return "none";
    case Encoding::cmp: return "cmp";
    case Encoding::range: return "range";
    case Encoding::subset: return "subset";
  }
  return "?";
}

std::uint32_t encoded_length(Encoding e, std::uint32_t n, std::uint32_t w) {
  if (e == Encoding::none) throw UsageError("no encoding selected");
  if (n == 0 || w == 0) throw UsageError("encoded domain and width must be positive");
  const std::uint64_t l = std::uint64_t{n} * w * (e == Encoding::range ? 2 : 1);
  if (l > detail::kMaxLength) throw UsageError("encoded vector length " + std::to_string(l) + " too large");
  return static_cast<std::uint32_t>(l);
}

void Meta::write(codec::Writer& out) const {
  out.text(scheme_name(scheme));
  out.u32(l);
  out.u32(static_cast<std::uint32_t>(encoding));
  out.u32(n);
  out.u32(w);
}

Meta Meta::read(codec::Reader& r) {
  Meta m;
  m.suite_id = r.suite_id();
  try {
    m.scheme = parse_scheme(r.text());
  } catch (const UsageError& e) {
    throw DecodeError(e.what());
  }
  m.l = r.u32();
  const std::uint32_t enc = r.u32();
  if (enc > static_cast<std::uint32_t>(Encoding::subset)) throw DecodeError("unknown encoding id");
  m.encoding = static_cast<Encoding>(enc);
  m.n = r.u32();
  m.w = r.u32();
  if (m.l == 0) throw DecodeError("vector length 0");
  if (m.encoding != Encoding::none) {
    std::uint32_t expect = 0;
    try {
      expect = encoded_length(m.encoding, m.n, m.w);
    } catch (const UsageError& e) {
      throw DecodeError(e.what());
    }
    if (expect != m.l) throw DecodeError("encoding metadata does not match vector length");
  }
  return m;
}

bool Meta::compatible(const Meta& o) const { return *this == o; }

std::string Meta::describe() const {
  std::string s = std::string(scheme_name(scheme)) + " l=" + std::to_string(l) +
                  " suite=" + std::to_string(suite_id);
  if (encoding != Encoding::none)
    s += " encoding=" + std::string(encoding_name(encoding)) + " n=" + std::to_string(n) +
         " w=" + std::to_string(w);
  return s;
}

}  // namespace hve::cli
