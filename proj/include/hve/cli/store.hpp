#pragma once

// On-disk formats of the command-line tool. Every file body is a versioned
// TLV record; the index is a sequence of length-prefixed records.
//
//   key / token file:  TLV { kind, meta, [spec text], inner scheme record }
//   index file:        u32 len | header TLV | (u32 len | record TLV)*
//
// A record whose length prefix runs past end of file is a crash-truncated
// tail: it is reported and skipped, and removed by the next append.

#include <filesystem>
#include <string>
#include <vector>

#include "hve/cli/meta.hpp"

namespace hve::cli {

namespace fs = std::filesystem;

inline constexpr std::string_view kPkKind = "HVECTL.PK";
inline constexpr std::string_view kSkKind = "HVECTL.SK";
inline constexpr std::string_view kTokenKind = "HVECTL.TK";
inline constexpr std::string_view kIndexKind = "HVECTL.IDX";
inline constexpr std::string_view kRecordKind = "HVECTL.REC";

Bytes read_file(const fs::path& p);
/// Writes through a temporary file and rename.
void write_file(const fs::path& p, std::span<const std::uint8_t> data);

struct KeyFile {
  Meta meta;
  Bytes inner;  // scheme record

  Bytes serialize(std::string_view kind) const;
  static KeyFile deserialize(std::span<const std::uint8_t> bytes, std::string_view kind);
};

struct TokenFile {
  Meta meta;
  std::string spec;
  Bytes inner;

  Bytes serialize() const;
  static TokenFile deserialize(std::span<const std::uint8_t> bytes);
};

struct IndexRecord {
  std::string id;
  Bytes ciphertext;
};

struct IndexContents {
  Meta meta;
  std::vector<IndexRecord> records;
  bool truncated_tail = false;
  std::uint64_t valid_bytes = 0;  // offset after the last complete record
};

IndexContents parse_index(std::span<const std::uint8_t> bytes);
IndexContents read_index(const fs::path& p);

/// Appends one record under an exclusive lock. Creates the file with the
/// given metadata if absent; otherwise the metadata must match. Fails with
/// UsageError if the id is already present. Returns true if a truncated tail
/// was dropped first.
bool append_record(const fs::path& p, const Meta& meta, const IndexRecord& rec);

// Payload storage: small payloads travel inside the ciphertext; larger ones
// are encrypted under a fresh key into <index>.blobs/<hash> and the
// ciphertext carries the key and hash.

inline constexpr std::size_t kInlinePayloadLimit = std::size_t{64} * 1024;

fs::path blob_dir(const fs::path& index);

/// Returns the bytes to hand to the scheme.
Bytes store_payload(RandomSource& rng, const fs::path& index, std::span<const std::uint8_t> payload);
/// Inverse of store_payload. Throws DecodeError on a missing or altered blob.
Bytes load_payload(const fs::path& index, std::span<const std::uint8_t> stored);

}  // namespace hve::cli
