#pragma once

// Metadata shared by every file the command-line tool writes: which scheme,
// which suite, the vector length, and how plain values are encoded into it.

#include <cstdint>
#include <string>
#include <string_view>

#include "hve/core/codec.hpp"
#include "hve/schemes/asym.hpp"
#include "hve/schemes/bw.hpp"
#include "hve/schemes/dhve.hpp"
#include "hve/schemes/ll.hpp"

namespace hve::cli {

enum class SchemeKind : std::uint8_t { bw2 = 1, ll3 = 2, dhve3 = 3, asym1 = 4 };
enum class Encoding : std::uint8_t { none = 0, cmp = 1, range = 2, subset = 3 };

SchemeKind parse_scheme(std::string_view name);
std::string_view scheme_name(SchemeKind s);
Encoding parse_encoding(std::string_view name);
std::string_view encoding_name(Encoding e);

struct Meta {
  SchemeKind scheme = SchemeKind::bw2;
  std::uint8_t suite_id = 1;
  std::uint32_t l = 0;
  Encoding encoding = Encoding::none;
  std::uint32_t n = 0;  // domain size, encodings only
  std::uint32_t w = 0;  // field count, encodings only

  /// Number of user-visible fields: l, or w for encoded metadata.
  std::size_t fields() const { return encoding == Encoding::none ? l : w; }

  void write(codec::Writer& w) const;
  static Meta read(codec::Reader& r);

  /// Same scheme, suite, length and encoding.
  bool compatible(const Meta& o) const;
  std::string describe() const;

  friend bool operator==(const Meta&, const Meta&) = default;
};

/// Vector length an encoding needs for domain n and width w.
std::uint32_t encoded_length(Encoding e, std::uint32_t n, std::uint32_t w);

/// Calls f.template operator()<S>() for the scheme type behind `kind`.
template <class F>
decltype(auto) dispatch(SchemeKind kind, F&& f) {
  switch (kind) {
    case SchemeKind::bw2: return f.template operator()<Bw2>();
    case SchemeKind::ll3: return f.template operator()<Ll3>();
    case SchemeKind::dhve3: return f.template operator()<Dhve3>();
    case SchemeKind::asym1: return f.template operator()<Asym1>();
  }
  throw DecodeError("unknown scheme id");
}

}  // namespace hve::cli
