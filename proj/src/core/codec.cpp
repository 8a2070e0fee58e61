#include "hve/core/codec.hpp"

#include <algorithm>

#include <sodium.h>

#include "hve/core/error.hpp"

namespace hve::codec {
namespace {

constexpr std::size_t kHeaderBytes = kMagic.size() + 2;

std::array<std::uint8_t, kChecksumBytes> checksum(std::span<const std::uint8_t> data) {
  std::array<std::uint8_t, kChecksumBytes> out;
  crypto_generichash(out.data(), out.size(), data.data(), data.size(), nullptr, 0);
  return out;
}

const char* type_name(ItemType t) {
  switch (t) {
    case ItemType::u32: return "u32";
    case ItemType::scalar: return "scalar";
    case ItemType::g1: return "G1";
    case ItemType::g2: return "G2";
    case ItemType::gt: return "GT";
    case ItemType::bytes: return "bytes";
    case ItemType::text: return "text";
  }
  return "?";
}

}  // namespace

Writer::Writer(std::string_view kind, std::uint8_t suite_id) {
  buf_.insert(buf_.end(), kMagic.begin(), kMagic.end());
  buf_.push_back(kVersion);
  buf_.push_back(suite_id);
  text(kind);
}

void Writer::item(ItemType type, std::span<const std::uint8_t> value) {
  if (value.size() > 0xffffffffu) throw UsageError("codec: item too large");
  buf_.push_back(static_cast<std::uint8_t>(type));
  const auto n = static_cast<std::uint32_t>(value.size());
  for (int shift = 24; shift >= 0; shift -= 8) buf_.push_back(static_cast<std::uint8_t>(n >> shift));
  buf_.insert(buf_.end(), value.begin(), value.end());
}

Writer& Writer::u32(std::uint32_t v) {
  const std::array<std::uint8_t, 4> b = {static_cast<std::uint8_t>(v >> 24),
                                         static_cast<std::uint8_t>(v >> 16),
                                         static_cast<std::uint8_t>(v >> 8),
                                         static_cast<std::uint8_t>(v)};
  item(ItemType::u32, b);
  return *this;
}

Writer& Writer::scalar(const Scalar& s) {
  item(ItemType::scalar, s.to_bytes());
  return *this;
}

Writer& Writer::g1(const G1& e) {
  item(ItemType::g1, e.serialize());
  return *this;
}

Writer& Writer::g2(const G2& e) {
  item(ItemType::g2, e.serialize());
  return *this;
}

Writer& Writer::gt(const GT& e) {
  item(ItemType::gt, e.serialize());
  return *this;
}

Writer& Writer::bytes(std::span<const std::uint8_t> b) {
  item(ItemType::bytes, b);
  return *this;
}

Writer& Writer::text(std::string_view s) {
  item(ItemType::text, std::span(reinterpret_cast<const std::uint8_t*>(s.data()), s.size()));
  return *this;
}

Bytes Writer::finish() && {
  const auto sum = checksum(buf_);
  buf_.insert(buf_.end(), sum.begin(), sum.end());
  return std::move(buf_);
}

Reader::Reader(std::span<const std::uint8_t> record) {
  if (record.size() < kHeaderBytes + kChecksumBytes) throw DecodeError("record truncated");
  if (!std::equal(kMagic.begin(), kMagic.end(), record.begin()))
    throw DecodeError("bad record magic");
  if (record[kMagic.size()] != kVersion) throw UnsupportedVersionError(record[kMagic.size()]);

  const auto signed_part = record.first(record.size() - kChecksumBytes);
  const auto sum = checksum(signed_part);
  if (!std::equal(sum.begin(), sum.end(), record.end() - kChecksumBytes))
    throw DecodeError("record checksum mismatch");

  suite_id_ = record[kMagic.size() + 1];
  GroupSuite::by_id(suite_id_);
  body_ = signed_part.subspan(kHeaderBytes);
  kind_ = text();
}

Reader::Reader(std::span<const std::uint8_t> record, std::string_view expected_kind)
    : Reader(record) {
  if (kind_ != expected_kind)
    throw DecodeError("expected record kind " + std::string(expected_kind) + ", found " + kind_);
}

std::string Reader::peek_kind(std::span<const std::uint8_t> record) { return Reader(record).kind_; }

std::span<const std::uint8_t> Reader::item(ItemType type) {
  if (body_.size() - pos_ < 5) throw DecodeError("record truncated");
  const auto found = static_cast<ItemType>(body_[pos_]);
  if (found != type)
    throw DecodeError(std::string("expected ") + type_name(type) + " item");
  std::uint32_t n = 0;
  for (int i = 1; i <= 4; ++i) n = (n << 8) | body_[pos_ + i];
  pos_ += 5;
  if (body_.size() - pos_ < n) throw DecodeError("record truncated");
  auto out = body_.subspan(pos_, n);
  pos_ += n;
  return out;
}

std::uint32_t Reader::u32() {
  const auto b = item(ItemType::u32);
  if (b.size() != 4) throw DecodeError("u32 item must be 4 bytes");
  return (std::uint32_t{b[0]} << 24) | (std::uint32_t{b[1]} << 16) | (std::uint32_t{b[2]} << 8) |
         std::uint32_t{b[3]};
}

Scalar Reader::scalar() { return Scalar::from_canonical(item(ItemType::scalar)); }
G1 Reader::g1() { return G1::deserialize(item(ItemType::g1)); }
G2 Reader::g2() { return G2::deserialize(item(ItemType::g2)); }
GT Reader::gt() { return GT::deserialize(item(ItemType::gt)); }

Bytes Reader::bytes() {
  const auto b = item(ItemType::bytes);
  return Bytes(b.begin(), b.end());
}

std::string Reader::text() {
  const auto b = item(ItemType::text);
  return std::string(b.begin(), b.end());
}

std::size_t Reader::count(std::size_t max) {
  const std::uint32_t n = u32();
  if (n > max) throw DecodeError("list length " + std::to_string(n) + " exceeds limit");
  return n;
}

void Reader::expect_end() const {
  if (pos_ != body_.size()) throw DecodeError("trailing bytes after record");
}

}  // namespace hve::codec
