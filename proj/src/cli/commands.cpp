#include "hve/cli/commands.hpp"

#include <fstream>
#include <thread>

#include <json.hpp>

#include "hve/cli/spec.hpp"
#include "hve/core/error.hpp"

namespace hve::cli {
namespace {

using nlohmann::json;

KeyFile load_key(const fs::path& p, std::string_view kind) {
  return KeyFile::deserialize(read_file(p), kind);
}

std::string random_id(RandomSource& rng) {
  std::array<std::uint8_t, 8> b;
  rng.fill(b);
  static constexpr char digits[] = "0123456789abcdef";
  std::string s;
  for (auto c : b) {
    s += digits[c >> 4];
    s += digits[c & 15];
  }
  return s;
}

void check_pair(const Meta& a, const Meta& b, std::string_view what) {
  if (!a.compatible(b))
    throw UsageError(std::string(what) + " mismatch: " + a.describe() + " vs " + b.describe());
}

}  // namespace

std::unique_ptr<RandomSource> make_rng(std::optional<std::uint64_t> seed) {
  if (seed) return std::make_unique<DeterministicRandom>(*seed);
  return std::make_unique<OsRandom>();
}

fs::path sidecar_path(const fs::path& index) { return fs::path(index.string() + ".plain.jsonl"); }

KeygenResult keygen(RandomSource& rng, const KeygenOptions& o) {
  Meta meta;
  meta.scheme = parse_scheme(o.scheme);
  const GroupSuite& suite = GroupSuite::by_name(o.suite);
  meta.suite_id = suite.id;
  meta.encoding = parse_encoding(o.encode);
  if (meta.encoding == Encoding::none) {
    if (o.domain || o.width) throw UsageError("--domain/--width need --encode");
    if (o.fields == 0) throw UsageError("--fields must be at least 1");
    if (o.fields > detail::kMaxLength) throw UsageError("--fields too large");
    meta.l = o.fields;
  } else {
    meta.n = o.domain;
    meta.w = o.width;
    meta.l = encoded_length(meta.encoding, o.domain, o.width);
    if (o.fields && o.fields != meta.l)
      throw UsageError("--fields " + std::to_string(o.fields) + " conflicts with encoded length " +
                       std::to_string(meta.l));
  }

  KeyFile pk{meta, {}}, sk{meta, {}};
  dispatch(meta.scheme, [&]<class S>() {
    const auto kp = S::setup(rng, meta.l, suite);
    pk.inner = kp.pk.serialize();
    sk.inner = kp.sk.serialize();
  });

  fs::create_directories(o.out_dir);
  KeygenResult r{meta, o.out_dir / "pk.key", o.out_dir / "sk.key"};
  write_file(r.pk_path, pk.serialize(kPkKind));
  write_file(r.sk_path, sk.serialize(kSkKind));
  fs::permissions(r.sk_path, fs::perms::owner_read | fs::perms::owner_write,
                  fs::perm_options::replace);
  return r;
}

std::string encrypt(RandomSource& rng, const EncryptOptions& o, std::vector<std::string>* warnings) {
  const KeyFile pk = load_key(o.pk, kPkKind);
  const Meta& meta = pk.meta;

  AttributeVector x;
  json plain;
  if (meta.encoding == Encoding::none) {
    if (!o.attrs || o.values) throw UsageError("this key takes --attrs, not --values");
    x = parse_attributes(*o.attrs, meta);
    plain["attrs"] = split(*o.attrs, ',');
  } else {
    if (!o.values || o.attrs) throw UsageError("this key takes --values, not --attrs");
    const auto v = parse_values(*o.values, meta);
    x = encode_values(v, meta);
    plain["values"] = v;
  }

  const Bytes payload = read_file(o.payload_file);
  const Bytes stored = store_payload(rng, o.index, payload);

  IndexRecord rec;
  if (o.id) {
    if (o.id->empty()) throw UsageError("record id must not be empty");
    rec.id = *o.id;
  } else {
    rec.id = random_id(rng);
    if (fs::exists(o.index) && fs::file_size(o.index) > 0) {
      const auto idx = read_index(o.index);
      auto taken = [&](const std::string& id) {
        for (const auto& r : idx.records)
          if (r.id == id) return true;
        return false;
      };
      while (taken(rec.id)) rec.id = random_id(rng);
    }
  }

  rec.ciphertext = dispatch(meta.scheme, [&]<class S>() {
    const auto key = S::PublicKey::deserialize(pk.inner);
    return S::encrypt(rng, x, stored, key).serialize();
  });

  if (append_record(o.index, meta, rec) && warnings)
    warnings->push_back("dropped a truncated record at the end of " + o.index.string());

  if (o.sidecar) {
    plain["id"] = rec.id;
    std::ofstream side(sidecar_path(o.index), std::ios::app);
    if (!side) throw UsageError("cannot write sidecar for " + o.index.string());
    side << plain.dump() << '\n';
  }
  return rec.id;
}

Meta make_token(RandomSource& rng, const TokenOptions& o) {
  const KeyFile sk = load_key(o.sk, kSkKind);
  const KeyFile pk = load_key(o.pk, kPkKind);
  check_pair(sk.meta, pk.meta, "key");
  const PatternVector sigma = compile_spec(o.spec, pk.meta);

  TokenFile out{pk.meta, o.spec, {}};
  out.inner = dispatch(pk.meta.scheme, [&]<class S>() {
    const auto s = S::SecretKey::deserialize(sk.inner);
    const auto p = S::PublicKey::deserialize(pk.inner);
    return S::gen_token(rng, sigma, s, p).serialize();
  });
  write_file(o.out, out.serialize());
  return out.meta;
}

void delegate(RandomSource& rng, const DelegateOptions& o) {
  const TokenFile tf = TokenFile::deserialize(read_file(o.token));
  const KeyFile pk = load_key(o.pk, kPkKind);
  check_pair(tf.meta, pk.meta, "token/key");
  if (tf.meta.scheme != SchemeKind::dhve3)
    throw UsageError("delegation needs a dhve3 token, got " + std::string(scheme_name(tf.meta.scheme)));

  const auto eq = o.fix.find('=');
  if (eq == std::string::npos) throw UsageError("--fix expects k=v or k=*");
  const std::string ks = o.fix.substr(0, eq), vs = o.fix.substr(eq + 1);
  std::size_t k = 0;
  try {
    std::size_t used = 0;
    k = std::stoul(ks, &used);
    if (used != ks.size()) throw std::invalid_argument(ks);
  } catch (const std::exception&) {
    throw UsageError("--fix: bad field number '" + ks + "'");
  }
  if (k < 1 || k > tf.meta.l) throw UsageError("--fix: field " + ks + " out of range");
  if (vs.empty()) throw UsageError("--fix: missing value");

  const auto tk = Dhve3::Token::deserialize(tf.inner);
  const auto key = Dhve3::PublicKey::deserialize(pk.inner);
  const Slot slot = vs == "*" ? Slot{Wildcard{}} : Slot{attribute_scalar(vs)};
  const PatternVector sigma = tk.shape().with(k - 1, slot);
  const auto out_tk = Dhve3::delegate(rng, sigma, tk, key);

  auto fields = split(tf.spec, ';');
  if (fields.size() == tf.meta.l) fields[k - 1] = vs == "*" ? "*" : "=" + vs;
  std::string spec;
  for (std::size_t i = 0; i < fields.size(); ++i) spec += (i ? ";" : "") + fields[i];
  write_file(o.out, TokenFile{tf.meta, spec, out_tk.serialize()}.serialize());
}

SearchResult search(const SearchOptions& o) {
  const KeyFile pk = load_key(o.pk, kPkKind);
  const TokenFile tf = TokenFile::deserialize(read_file(o.token));
  const IndexContents idx = read_index(o.index);
  check_pair(tf.meta, pk.meta, "token/key");
  check_pair(idx.meta, pk.meta, "index/key");

  SearchResult res;
  if (idx.truncated_tail)
    res.warnings.push_back("skipping a truncated record at the end of " + o.index.string());
  res.scanned = idx.records.size();

  std::vector<std::optional<Bytes>> found(idx.records.size());
  const PairingCounter counter;
  dispatch(pk.meta.scheme, [&]<class S>() {
    const auto key = S::PublicKey::deserialize(pk.inner);
    const auto tk = S::Token::deserialize(tf.inner);
    std::vector<typename S::Ciphertext> cts;
    cts.reserve(idx.records.size());
    for (const auto& r : idx.records) cts.push_back(S::Ciphertext::deserialize(r.ciphertext));

    const std::size_t workers =
        std::max<std::size_t>(1, std::min<std::size_t>(o.threads, cts.size()));
    auto scan = [&](std::size_t first) {
      for (std::size_t i = first; i < cts.size(); i += workers) {
        const MatchResult m = S::query(cts[i], tk, key);
        if (m) found[i] = m.payload();
      }
    };
    if (workers == 1) {
      scan(0);
    } else {
      std::vector<std::jthread> pool;
      for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(scan, t);
    }
  });
  res.pairings = counter.count();

  if (o.out_dir) fs::create_directories(*o.out_dir);
  for (std::size_t i = 0; i < found.size(); ++i) {
    if (!found[i]) continue;
    SearchHit hit{idx.records[i].id, std::nullopt};
    if (o.out_dir) {
      const Bytes payload = load_payload(o.index, *found[i]);
      hit.payload_path = *o.out_dir / (hit.id + ".bin");
      write_file(*hit.payload_path, payload);
    }
    res.hits.push_back(std::move(hit));
  }
  return res;
}

std::string inspect(const fs::path& p) {
  const Bytes data = read_file(p);
  json j;
  j["file"] = p.string();

  auto describe = [&](const Meta& m) {
    j["scheme"] = scheme_name(m.scheme);
    j["suite"] = m.suite_id;
    j["l"] = m.l;
    j["encoding"] = encoding_name(m.encoding);
    if (m.encoding != Encoding::none) {
      j["n"] = m.n;
      j["w"] = m.w;
    }
  };

  std::string kind;
  try {
    kind = codec::Reader::peek_kind(data);
  } catch (const DecodeError&) {
    // not a bare record: try the index layout
    const IndexContents idx = parse_index(data);
    j["kind"] = "index";
    describe(idx.meta);
    j["records"] = idx.records.size();
    j["truncated_tail"] = idx.truncated_tail;
    std::vector<std::string> ids;
    for (const auto& r : idx.records) ids.push_back(r.id);
    j["ids"] = ids;
    return j.dump();
  }

  if (kind == kPkKind || kind == kSkKind) {
    const KeyFile k = KeyFile::deserialize(data, kind);
    j["kind"] = kind == kPkKind ? "public-key" : "secret-key";
    describe(k.meta);
    if (kind == kPkKind)
      j["group_elements"] = dispatch(k.meta.scheme, [&]<class S>() {
        return S::PublicKey::deserialize(k.inner).group_element_count();
      });
  } else if (kind == kTokenKind) {
    const TokenFile t = TokenFile::deserialize(data);
    j["kind"] = "token";
    describe(t.meta);
    j["spec"] = t.spec;
    j["group_elements"] = dispatch(t.meta.scheme, [&]<class S>() {
      return S::Token::deserialize(t.inner).group_element_count();
    });
  } else {
    throw DecodeError("not an hvectl file (record kind '" + kind + "')");
  }
  return j.dump();
}

}  // namespace hve::cli
