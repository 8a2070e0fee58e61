#pragma once

// The operations behind each hvectl subcommand. Argument parsing and exit
// codes live in the tool itself; everything here reports problems with
// UsageError (bad input) or DecodeError (bad or mismatched files).

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hve/cli/meta.hpp"
#include "hve/cli/store.hpp"

namespace hve::cli {

/// OS entropy, or a seeded generator in test mode.
std::unique_ptr<RandomSource> make_rng(std::optional<std::uint64_t> seed);

struct KeygenOptions {
  std::string scheme;
  std::uint32_t fields = 0;
  std::string encode;  // empty: plain attributes
  std::uint32_t domain = 0;
  std::uint32_t width = 0;
  std::string suite = "bls12-381";
  fs::path out_dir = ".";
};

struct KeygenResult {
  Meta meta;
  fs::path pk_path, sk_path;
};

KeygenResult keygen(RandomSource& rng, const KeygenOptions& o);

struct EncryptOptions {
  fs::path pk, index, payload_file;
  std::optional<std::string> attrs, values;
  std::optional<std::string> id;
  bool sidecar = false;  // test mode: log plaintext attributes next to the index
};

/// Returns the record id.
std::string encrypt(RandomSource& rng, const EncryptOptions& o,
                    std::vector<std::string>* warnings = nullptr);

struct TokenOptions {
  fs::path sk, pk, out;
  std::string spec;
};

Meta make_token(RandomSource& rng, const TokenOptions& o);

struct DelegateOptions {
  fs::path pk, token, out;
  std::string fix;  // "k=v" or "k=*", k 1-based
};

void delegate(RandomSource& rng, const DelegateOptions& o);

struct SearchOptions {
  fs::path pk, index, token;
  std::optional<fs::path> out_dir;  // decrypted payloads written here
  unsigned threads = 1;
};

struct SearchHit {
  std::string id;
  std::optional<fs::path> payload_path;
};

struct SearchResult {
  std::vector<SearchHit> hits;
  std::size_t scanned = 0;
  std::uint64_t pairings = 0;
  std::vector<std::string> warnings;
};

SearchResult search(const SearchOptions& o);

/// JSON description of any file the tool writes.
std::string inspect(const fs::path& p);

fs::path sidecar_path(const fs::path& index);

}  // namespace hve::cli
