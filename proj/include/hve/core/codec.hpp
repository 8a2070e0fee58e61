#pragma once

// Versioned TLV container shared by every serialized record.
//
//   magic "HVER" | version u8 | suite id u8 | item* | checksum[16]
//   item := type u8 | length u32 (big-endian) | value
//
// The first item is always the record kind as text (e.g. "BW2.PK"). The
// checksum is BLAKE2b-128 over everything before it, so any corruption is a
// decode error rather than a silently different record.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "hve/core/groups.hpp"

namespace hve::codec {

inline constexpr std::array<std::uint8_t, 4> kMagic = {'H', 'V', 'E', 'R'};
inline constexpr std::uint8_t kVersion = 1;
inline constexpr std::size_t kChecksumBytes = 16;

enum class ItemType : std::uint8_t {
  u32 = 1,
  scalar = 2,
  g1 = 3,
  g2 = 4,
  gt = 5,
  bytes = 6,
  text = 7,
};

class Writer {
 public:
  Writer(std::string_view kind, std::uint8_t suite_id);

  Writer& u32(std::uint32_t v);
  Writer& scalar(const Scalar& s);
  Writer& g1(const G1& e);
  Writer& g2(const G2& e);
  Writer& gt(const GT& e);
  Writer& bytes(std::span<const std::uint8_t> b);
  Writer& text(std::string_view s);

  /// Appends the checksum and returns the finished record.
  Bytes finish() &&;

 private:
  void item(ItemType type, std::span<const std::uint8_t> value);

  Bytes buf_;
};

class Reader {
 public:
  /// Validates header and checksum, then the kind item.
  Reader(std::span<const std::uint8_t> record, std::string_view expected_kind);

  /// Kind of a record without consuming it. Validates the container.
  static std::string peek_kind(std::span<const std::uint8_t> record);

  std::uint8_t suite_id() const { return suite_id_; }
  const std::string& kind() const { return kind_; }

  std::uint32_t u32();
  Scalar scalar();
  G1 g1();
  G2 g2();
  GT gt();
  Bytes bytes();
  std::string text();

  /// Bounded count read, for list lengths.
  std::size_t count(std::size_t max);

  void expect_end() const;

 private:
  Reader(std::span<const std::uint8_t> record);
  std::span<const std::uint8_t> item(ItemType type);

  std::span<const std::uint8_t> body_;
  std::size_t pos_ = 0;
  std::uint8_t suite_id_ = 0;
  std::string kind_;
};

}  // namespace hve::codec
