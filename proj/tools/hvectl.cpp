#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hve/cli/commands.hpp"
#include "hve/core/error.hpp"

namespace {

enum Exit : int { kOk = 0, kUsage = 1, kCrypto = 2, kEmpty = 3 };

void warn(const std::vector<std::string>& ws) {
  for (const auto& w : ws) std::cerr << "hvectl: warning: " << w << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  using namespace hve::cli;

  CLI::App app{"Hidden vector encryption: keys, encrypted indexes, tokens and search"};
  app.require_subcommand(1);
  std::optional<std::uint64_t> seed;
  app.add_option("--seed", seed, "Deterministic randomness (testing only)");

  KeygenOptions kg;
  auto* keygen_cmd = app.add_subcommand("keygen", "Generate a key pair");
  keygen_cmd->add_option("--scheme", kg.scheme, "bw2, ll3, dhve3 or asym1")->required();
  keygen_cmd->add_option("--fields", kg.fields, "Attribute vector length");
  keygen_cmd->add_option("--encode", kg.encode, "Integer encoding: cmp, range or subset");
  keygen_cmd->add_option("--domain", kg.domain, "Encoded values range over 1..n");
  keygen_cmd->add_option("--width", kg.width, "Number of encoded fields");
  keygen_cmd->add_option("--suite", kg.suite, "Group suite (bls12-381, bls12-381-sym)");
  keygen_cmd->add_option("--out-dir", kg.out_dir, "Where pk.key and sk.key go")->required();

  EncryptOptions en;
  auto* encrypt_cmd = app.add_subcommand("encrypt", "Encrypt a record into an index");
  encrypt_cmd->add_option("--pk", en.pk)->required();
  encrypt_cmd->add_option("--index", en.index)->required();
  encrypt_cmd->add_option("--attrs", en.attrs, "Comma-separated attributes");
  encrypt_cmd->add_option("--values", en.values, "Comma-separated integers (encoded keys)");
  encrypt_cmd->add_option("--payload", en.payload_file, "File to attach")->required();
  encrypt_cmd->add_option("--id", en.id, "Record id (default: random)");
  encrypt_cmd->add_flag("--sidecar", en.sidecar, "Log plaintext attributes next to the index (testing only)");

  TokenOptions tk;
  auto* token_cmd = app.add_subcommand("token", "Issue a search token for a predicate");
  token_cmd->add_option("--sk", tk.sk)->required();
  token_cmd->add_option("--pk", tk.pk)->required();
  token_cmd->add_option("--spec", tk.spec, "Field expressions separated by ';'")->required();
  token_cmd->add_option("--out", tk.out)->required();

  DelegateOptions dl;
  auto* delegate_cmd = app.add_subcommand("delegate", "Fix one open field of a dhve3 token");
  delegate_cmd->add_option("--pk", dl.pk)->required();
  delegate_cmd->add_option("--token", dl.token)->required();
  delegate_cmd->add_option("--fix", dl.fix, "k=v or k=* (k counts from 1)")->required();
  delegate_cmd->add_option("--out", dl.out)->required();

  SearchOptions se;
  bool raw_count = false, fail_empty = false;
  std::optional<std::string> out_dir;
  auto* search_cmd = app.add_subcommand("search", "List records matching a token");
  search_cmd->add_option("--pk", se.pk)->required();
  search_cmd->add_option("--index", se.index)->required();
  search_cmd->add_option("--token", se.token)->required();
  search_cmd->add_option("--out-dir", out_dir, "Write matching payloads here");
  search_cmd->add_option("--threads", se.threads, "Parallel workers")->check(CLI::Range(1u, 256u));
  search_cmd->add_flag("--raw-count", raw_count, "Report pairings executed");
  search_cmd->add_flag("--fail-empty", fail_empty, "Exit 3 when nothing matches");

  std::string inspect_path;
  auto* inspect_cmd = app.add_subcommand("inspect", "Describe a key, token or index file as JSON");
  inspect_cmd->add_option("file", inspect_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    auto rng = make_rng(seed);
    if (*keygen_cmd) {
      const auto r = keygen(*rng, kg);
      std::cout << r.pk_path.string() << '\n' << r.sk_path.string() << '\n';
    } else if (*encrypt_cmd) {
      std::vector<std::string> warnings;
      const std::string id = encrypt(*rng, en, &warnings);
      warn(warnings);
      std::cout << id << '\n';
    } else if (*token_cmd) {
      make_token(*rng, tk);
    } else if (*delegate_cmd) {
      delegate(*rng, dl);
    } else if (*search_cmd) {
      if (out_dir) se.out_dir = *out_dir;
      const auto r = search(se);
      warn(r.warnings);
      for (const auto& h : r.hits) {
        std::cout << h.id;
        if (h.payload_path) std::cout << '\t' << h.payload_path->string();
        std::cout << '\n';
      }
      if (raw_count)
        std::cerr << "scanned " << r.scanned << " records, " << r.pairings << " pairings\n";
      if (fail_empty && r.hits.empty()) return kEmpty;
    } else if (*inspect_cmd) {
      std::cout << inspect(inspect_path) << '\n';
    }
  } catch (const hve::UsageError& e) {
    std::cerr << "hvectl: " << e.what() << '\n';
    return kUsage;
  } catch (const hve::Error& e) {
    std::cerr << "hvectl: " << e.what() << '\n';
    return kCrypto;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "hvectl: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}
