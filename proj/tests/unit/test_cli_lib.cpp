#include <doctest.h>

#include <fstream>

#include "enumerate.hpp"
#include "fixtures.hpp"
#include "patterns.hpp"
#include "hve/cli/commands.hpp"
#include "hve/cli/spec.hpp"
#include "hve/core/error.hpp"
#include "hve/predicates/encodings.hpp"

using namespace hve;
using namespace hve::cli;

namespace {

struct TempDir {
  fs::path path;
  explicit TempDir(std::string_view tag) {
    static int counter = 0;
    path = fs::temp_directory_path() /
           ("hve-cli-" + std::string(tag) + "-" + std::to_string(::getpid()) + "-" +
            std::to_string(counter++));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

Meta encoded(Encoding e, std::uint32_t n, std::uint32_t w) {
  Meta m;
  m.scheme = SchemeKind::ll3;
  m.encoding = e;
  m.n = n;
  m.w = w;
  m.l = encoded_length(e, n, w);
  return m;
}

Meta plain(SchemeKind s, std::uint32_t l) {
  Meta m;
  m.scheme = s;
  m.l = l;
  return m;
}

void write_bytes(const fs::path& p, const Bytes& b) {
  std::ofstream(p, std::ios::binary).write(reinterpret_cast<const char*>(b.data()),
                                           static_cast<std::streamsize>(b.size()));
}

}  // namespace

TEST_SUITE("cli_lib") {

TEST_CASE("field expressions parse") {
  CHECK(std::holds_alternative<ExprAny>(parse_field(" * ")));
  CHECK(std::holds_alternative<ExprOpen>(parse_field("?")));
  CHECK(std::get<ExprEq>(parse_field("=foo bar")).value == "foo bar");
  CHECK(std::get<ExprLe>(parse_field("<=5")).k == 5);
  CHECK(std::get<ExprGe>(parse_field(">= 2")).k == 2);
  const auto iv = std::get<ExprInterval>(parse_field("[2, 4]"));
  CHECK(iv.lo == 2);
  CHECK(iv.hi == 4);
  CHECK(std::get<ExprIn>(parse_field("in{3,1,3}")).values == std::set<std::uint64_t>{1, 3});
  CHECK(std::get<ExprIn>(parse_field("in{}")).values.empty());
  for (const char* bad : {"", "=", "<=x", "<=", "[1,2", "[1]", "in{1,", "in{a}", "5", "<=-1"})
    CHECK_THROWS_AS(parse_field(bad), UsageError);
}

TEST_CASE("spec splitting respects brackets") {
  const auto f = parse_spec("in{1,2};[1,3];*");
  REQUIRE(f.size() == 3);
  CHECK(std::holds_alternative<ExprIn>(f[0]));
  CHECK(std::holds_alternative<ExprInterval>(f[1]));
  CHECK(split("a,b,,c", ',') == std::vector<std::string>{"a", "b", "", "c"});
}

TEST_CASE("plain specs compile to equality patterns") {
  const Meta m = plain(SchemeKind::bw2, 3);
  const PatternVector p = compile_spec("=a;*;=c", m);
  CHECK(p.is_fixed(0));
  CHECK(p.value(0) == attribute_scalar("a"));
  CHECK(p.is_wildcard(1));
  CHECK(p.value(2) == attribute_scalar("c"));
  CHECK_THROWS_AS(compile_spec("=a;*", m), UsageError);
  CHECK_THROWS_AS(compile_spec("=a;?;*", m), UsageError);
  CHECK_THROWS_AS(compile_spec("=a;<=3;*", m), UsageError);
  CHECK(compile_spec("=a;?;*", plain(SchemeKind::dhve3, 3)).is_delegatable(1));
}

TEST_CASE("cmp specs agree with the plain evaluator") {
  const Meta m = encoded(Encoding::cmp, 4, 2);
  for (std::uint64_t a = 1; a <= 4; ++a)
    for (std::uint64_t b = 1; b <= 4; ++b) {
      const PatternVector p = compile_spec("<=" + std::to_string(a) + ";*", m);
      test::for_each_value_vector(4, 2, [&](const std::vector<std::uint64_t>& v) {
        CHECK(predicate_eval(p, encode_values(v, m)) == (v[0] <= a));
      });
      (void)b;
    }
  CHECK_THROWS_AS(compile_spec(">=2;*", m), UsageError);
  CHECK_THROWS_AS(compile_spec("<=5;*", m), UsageError);
  CHECK_THROWS_AS(compile_spec("<=0;*", m), UsageError);
}

TEST_CASE("range specs agree with the plain evaluator") {
  const Meta m = encoded(Encoding::range, 5, 1);
  const std::vector<std::pair<std::string, std::pair<std::uint64_t, std::uint64_t>>> cases = {
      {"<=3", {1, 3}}, {">=2", {2, 5}}, {"[2,4]", {2, 4}}, {"=3", {3, 3}}, {"*", {1, 5}}};
  for (const auto& [text, iv] : cases) {
    const PatternVector p = compile_spec(text, m);
    for (std::uint64_t v = 1; v <= 5; ++v) {
      const std::uint64_t vs[] = {v};
      CHECK(predicate_eval(p, encode_values(vs, m)) == (iv.first <= v && v <= iv.second));
    }
  }
  CHECK_THROWS_AS(compile_spec("[4,2]", m), UsageError);
  CHECK_THROWS_AS(compile_spec("in{1}", m), UsageError);
  CHECK_THROWS_AS(compile_spec("=x", m), UsageError);
}

TEST_CASE("subset specs agree with the plain evaluator") {
  const Meta m = encoded(Encoding::subset, 4, 2);
  const PatternVector p = compile_spec("in{1,3};>=3", m);
  test::for_each_value_vector(4, 2, [&](const std::vector<std::uint64_t>& v) {
    const bool expect = (v[0] == 1 || v[0] == 3) && v[1] >= 3;
    CHECK(predicate_eval(p, encode_values(v, m)) == expect);
  });
  CHECK_THROWS_AS(compile_spec("in{5};*", m), UsageError);
}

TEST_CASE("attribute and value parsing") {
  CHECK(parse_attributes("a,b", plain(SchemeKind::bw2, 2)) ==
        AttributeVector::from_strings(std::vector<std::string>{"a", "b"}));
  CHECK_THROWS_AS(parse_attributes("a", plain(SchemeKind::bw2, 2)), UsageError);
  const Meta m = encoded(Encoding::cmp, 10, 2);
  CHECK(m.l == 20);
  CHECK(parse_values("3,7", m) == std::vector<std::uint64_t>{3, 7});
  CHECK_THROWS_AS(parse_values("0,7", m), UsageError);
  CHECK_THROWS_AS(parse_values("3,11", m), UsageError);
  CHECK_THROWS_AS(parse_values("3", m), UsageError);
  CHECK_THROWS_AS(parse_values("3,7", plain(SchemeKind::bw2, 2)), UsageError);
  CHECK_THROWS_AS(parse_attributes("a,b", m), UsageError);
}

TEST_CASE("encoded lengths") {
  CHECK(encoded_length(Encoding::cmp, 10, 2) == 20);
  CHECK(encoded_length(Encoding::subset, 4, 3) == 12);
  CHECK(encoded_length(Encoding::range, 4, 3) == 24);
  CHECK_THROWS_AS(encoded_length(Encoding::cmp, 0, 2), UsageError);
  CHECK_THROWS_AS(encoded_length(Encoding::none, 3, 2), UsageError);
}

TEST_CASE("metadata round trip and validation") {
  const Meta m = encoded(Encoding::range, 3, 2);
  KeyFile k{m, Bytes{1, 2, 3}};
  const Bytes b = k.serialize(kPkKind);
  const KeyFile back = KeyFile::deserialize(b, kPkKind);
  CHECK(back.meta == m);
  CHECK(back.inner == Bytes{1, 2, 3});
  CHECK_THROWS_AS(KeyFile::deserialize(b, kSkKind), DecodeError);

  Meta bad = m;
  bad.l = 7;
  codec::Writer w(kPkKind, 1);
  bad.write(w);
  w.bytes(Bytes{});
  CHECK_THROWS_AS(KeyFile::deserialize(std::move(w).finish(), kPkKind), DecodeError);
}

TEST_CASE("index append, duplicate ids, mismatched metadata") {
  TempDir dir("index");
  const fs::path idx = dir.path / "idx";
  const Meta m = plain(SchemeKind::bw2, 2);
  CHECK_FALSE(append_record(idx, m, {"r1", Bytes{1}}));
  CHECK_FALSE(append_record(idx, m, {"r2", Bytes{2, 2}}));
  CHECK_THROWS_AS(append_record(idx, m, {"r1", Bytes{3}}), UsageError);
  CHECK_THROWS_AS(append_record(idx, plain(SchemeKind::ll3, 2), {"r3", Bytes{}}), UsageError);
  const auto c = read_index(idx);
  CHECK(c.meta == m);
  REQUIRE(c.records.size() == 2);
  CHECK(c.records[1].id == "r2");
  CHECK(c.records[1].ciphertext == Bytes{2, 2});
  CHECK_FALSE(c.truncated_tail);
}

TEST_CASE("every truncation of the final record is skipped, never misparsed") {
  TempDir dir("trunc");
  const fs::path idx = dir.path / "idx";
  const Meta m = plain(SchemeKind::bw2, 2);
  append_record(idx, m, {"keep", Bytes(50, 7)});
  const std::uint64_t good = fs::file_size(idx);
  append_record(idx, m, {"tail", Bytes(80, 9)});
  const Bytes full = read_file(idx);
  for (std::size_t cut = good + 1; cut < full.size(); ++cut) {
    const auto c = parse_index(std::span(full.data(), cut));
    REQUIRE(c.records.size() == 1);
    CHECK(c.records[0].id == "keep");
    CHECK(c.truncated_tail);
    CHECK(c.valid_bytes == good);
  }
  write_bytes(idx, Bytes(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(full.size() - 3)));
  CHECK(append_record(idx, m, {"next", Bytes{1}}));
  const auto c = read_index(idx);
  CHECK_FALSE(c.truncated_tail);
  REQUIRE(c.records.size() == 2);
  CHECK(c.records[1].id == "next");
}

TEST_CASE("corruption inside a complete record is a decode error") {
  TempDir dir("corrupt");
  const fs::path idx = dir.path / "idx";
  append_record(idx, plain(SchemeKind::bw2, 2), {"a", Bytes(20, 1)});
  Bytes full = read_file(idx);
  full[full.size() - 20] ^= 0x40;
  CHECK_THROWS_AS(parse_index(full), DecodeError);
  CHECK_THROWS_AS(parse_index(Bytes{0, 0}), DecodeError);
}

TEST_CASE("payload storage inline and by sidecar") {
  TempDir dir("payload");
  auto rng = test::rng_for(700);
  const fs::path idx = dir.path / "idx";
  const Bytes small = test::random_bytes(rng, 100);
  const Bytes at_limit = test::random_bytes(rng, kInlinePayloadLimit);
  const Bytes large = test::random_bytes(rng, kInlinePayloadLimit + 1);
  const Bytes s1 = store_payload(rng, idx, small);
  CHECK(s1.size() == small.size() + 1);
  CHECK(load_payload(idx, s1) == small);
  CHECK(store_payload(rng, idx, at_limit).size() == at_limit.size() + 1);
  CHECK_FALSE(fs::exists(blob_dir(idx)));
  const Bytes s2 = store_payload(rng, idx, large);
  CHECK(s2.size() < 100);
  CHECK(load_payload(idx, s2) == large);

  const fs::path blob = fs::directory_iterator(blob_dir(idx))->path();
  Bytes content = read_file(blob);
  content[40] ^= 1;
  write_bytes(blob, content);
  CHECK_THROWS_AS(load_payload(idx, s2), DecodeError);
  fs::remove(blob);
  CHECK_THROWS_AS(load_payload(idx, s2), DecodeError);
}

TEST_CASE("commands: keygen, encrypt, token, search, delegate") {
  TempDir dir("cmds");
  auto rng = test::rng_for(701);
  KeygenOptions kg;
  kg.scheme = "dhve3";
  kg.fields = 2;
  kg.out_dir = dir.path / "keys";
  const auto keys = keygen(rng, kg);
  CHECK(keys.meta.l == 2);

  const fs::path idx = dir.path / "idx";
  const fs::path payload = dir.path / "p";
  write_bytes(payload, Bytes{'h', 'i'});
  std::vector<std::string> ids;
  for (const char* a : {"x,1", "x,2", "y,1"}) {
    EncryptOptions en;
    en.pk = keys.pk_path;
    en.index = idx;
    en.payload_file = payload;
    en.attrs = a;
    en.sidecar = true;
    ids.push_back(encrypt(rng, en));
  }

  TokenOptions tk{keys.sk_path, keys.pk_path, dir.path / "t", "=x;?"};
  make_token(rng, tk);
  SearchOptions se{keys.pk_path, idx, dir.path / "t", dir.path / "out", 2};
  auto r = search(se);
  REQUIRE(r.hits.size() == 2);
  CHECK(r.hits[0].id == ids[0]);
  CHECK(r.hits[1].id == ids[1]);
  CHECK(read_file(*r.hits[0].payload_path) == Bytes{'h', 'i'});
  CHECK(r.pairings == 3 * (3 * 1 + 9));

  delegate(rng, {keys.pk_path, dir.path / "t", dir.path / "t2", "2=2"});
  se.token = dir.path / "t2";
  r = search(se);
  REQUIRE(r.hits.size() == 1);
  CHECK(r.hits[0].id == ids[1]);
  CHECK_THROWS_AS(delegate(rng, {keys.pk_path, dir.path / "t2", dir.path / "t3", "2=1"}), UsageError);
  CHECK_THROWS_AS(delegate(rng, {keys.pk_path, dir.path / "t", dir.path / "t3", "3=1"}), UsageError);
  CHECK_THROWS_AS(delegate(rng, {keys.pk_path, dir.path / "t", dir.path / "t3", "2"}), UsageError);

  CHECK(inspect(dir.path / "t2").find("\"spec\":\"=x;=2\"") != std::string::npos);
  CHECK(inspect(idx).find("\"records\":3") != std::string::npos);
  std::ifstream side(sidecar_path(idx));
  std::string line;
  int lines = 0;
  while (std::getline(side, line)) ++lines;
  CHECK(lines == 3);
}

TEST_CASE("commands reject mismatched inputs") {
  TempDir dir("mismatch");
  auto rng = test::rng_for(702);
  KeygenOptions kg;
  kg.scheme = "ll3";
  kg.fields = 2;
  kg.out_dir = dir.path / "a";
  const auto a = keygen(rng, kg);
  kg.fields = 3;
  kg.out_dir = dir.path / "b";
  const auto b = keygen(rng, kg);
  CHECK_THROWS_AS(make_token(rng, {a.sk_path, b.pk_path, dir.path / "t", "*;*"}), UsageError);
  make_token(rng, {a.sk_path, a.pk_path, dir.path / "t", "*;*"});
  CHECK_THROWS_AS(delegate(rng, {a.pk_path, dir.path / "t", dir.path / "t2", "1=a"}), UsageError);

  kg.fields = 0;
  CHECK_THROWS_AS(keygen(rng, kg), UsageError);
  kg.fields = 2;
  kg.scheme = "asym1";
  kg.suite = "bls12-381-sym";
  CHECK_THROWS_AS(keygen(rng, kg), UsageError);
  kg.scheme = "rsa";
  CHECK_THROWS_AS(keygen(rng, kg), UsageError);
}

}  // TEST_SUITE
