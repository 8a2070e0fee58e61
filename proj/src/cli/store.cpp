#include "hve/cli/store.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <fstream>
#include <iterator>
#include <set>

#include <sodium.h>

#include "hve/core/error.hpp"

namespace hve::cli {
namespace {

void put_u32(Bytes& out, std::uint32_t v) {
  for (int s = 24; s >= 0; s -= 8) out.push_back(static_cast<std::uint8_t>(v >> s));
}

std::uint32_t get_u32(const std::uint8_t* p) {
  return std::uint32_t{p[0]} << 24 | std::uint32_t{p[1]} << 16 | std::uint32_t{p[2]} << 8 | p[3];
}

Bytes header_record(const Meta& meta) {
  codec::Writer w(kIndexKind, meta.suite_id);
  meta.write(w);
  return std::move(w).finish();
}

Bytes framed(std::span<const std::uint8_t> rec) {
  Bytes out;
  put_u32(out, static_cast<std::uint32_t>(rec.size()));
  out.insert(out.end(), rec.begin(), rec.end());
  return out;
}

[[noreturn]] void io_fail(const std::string& what, const fs::path& p) {
  throw UsageError(what + " '" + p.string() + "': " + std::strerror(errno));
}

class FdLock {
 public:
  explicit FdLock(const fs::path& p) : path_(p) {
    fd_ = ::open(p.c_str(), O_RDWR | O_CREAT | O_CLOEXEC, 0644);
    if (fd_ < 0) io_fail("cannot open", p);
    if (::flock(fd_, LOCK_EX) != 0) io_fail("cannot lock", p);
  }
  ~FdLock() {
    if (fd_ >= 0) {
      ::flock(fd_, LOCK_UN);
      ::close(fd_);
    }
  }
  FdLock(const FdLock&) = delete;
  FdLock& operator=(const FdLock&) = delete;

  Bytes read_all() const {
    Bytes out;
    std::uint8_t buf[1 << 16];
    if (::lseek(fd_, 0, SEEK_SET) < 0) io_fail("cannot seek", path_);
    for (;;) {
      const ssize_t n = ::read(fd_, buf, sizeof buf);
      if (n < 0) io_fail("cannot read", path_);
      if (n == 0) return out;
      out.insert(out.end(), buf, buf + n);
    }
  }

  void truncate(std::uint64_t size) const {
    if (::ftruncate(fd_, static_cast<off_t>(size)) != 0) io_fail("cannot truncate", path_);
  }

  void append(std::span<const std::uint8_t> data) const {
    if (::lseek(fd_, 0, SEEK_END) < 0) io_fail("cannot seek", path_);
    std::size_t done = 0;
    while (done < data.size()) {
      const ssize_t n = ::write(fd_, data.data() + done, data.size() - done);
      if (n < 0) io_fail("cannot write", path_);
      done += static_cast<std::size_t>(n);
    }
    if (::fsync(fd_) != 0) io_fail("cannot sync", path_);
  }

 private:
  fs::path path_;
  int fd_ = -1;
};

std::string hex(std::span<const std::uint8_t> b) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string s;
  for (auto c : b) {
    s += digits[c >> 4];
    s += digits[c & 15];
  }
  return s;
}

}  // namespace

Bytes read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + p.string() + "'");
  return Bytes(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_file(const fs::path& p, std::span<const std::uint8_t> data) {
  const fs::path tmp = p.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw UsageError("cannot write '" + tmp.string() + "'");
    out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
    if (!out) throw UsageError("cannot write '" + tmp.string() + "'");
  }
  fs::rename(tmp, p);
}

Bytes KeyFile::serialize(std::string_view kind) const {
  codec::Writer w(kind, meta.suite_id);
  meta.write(w);
  w.bytes(inner);
  return std::move(w).finish();
}

KeyFile KeyFile::deserialize(std::span<const std::uint8_t> bytes, std::string_view kind) {
  codec::Reader r(bytes, kind);
  KeyFile k;
  k.meta = Meta::read(r);
  k.inner = r.bytes();
  r.expect_end();
  return k;
}

Bytes TokenFile::serialize() const {
  codec::Writer w(kTokenKind, meta.suite_id);
  meta.write(w);
  w.text(spec);
  w.bytes(inner);
  return std::move(w).finish();
}

TokenFile TokenFile::deserialize(std::span<const std::uint8_t> bytes) {
  codec::Reader r(bytes, kTokenKind);
  TokenFile t;
  t.meta = Meta::read(r);
  t.spec = r.text();
  t.inner = r.bytes();
  r.expect_end();
  return t;
}

IndexContents parse_index(std::span<const std::uint8_t> bytes) {
  IndexContents out;
  if (bytes.size() < 4) throw DecodeError("index file too short for a header");
  const std::uint32_t hlen = get_u32(bytes.data());
  if (hlen > bytes.size() - 4) throw DecodeError("index header truncated");
  {
    codec::Reader r(bytes.subspan(4, hlen), kIndexKind);
    out.meta = Meta::read(r);
    r.expect_end();
  }
  std::size_t pos = 4 + hlen;
  std::set<std::string> ids;
  while (pos < bytes.size()) {
    if (bytes.size() - pos < 4) {
      out.truncated_tail = true;
      break;
    }
    const std::uint32_t len = get_u32(bytes.data() + pos);
    if (len > bytes.size() - pos - 4) {
      out.truncated_tail = true;
      break;
    }
    codec::Reader r(bytes.subspan(pos + 4, len), kRecordKind);
    if (r.suite_id() != out.meta.suite_id) throw DecodeError("record suite differs from index");
    IndexRecord rec;
    rec.id = r.text();
    rec.ciphertext = r.bytes();
    r.expect_end();
    if (!ids.insert(rec.id).second) throw DecodeError("duplicate record id '" + rec.id + "'");
    out.records.push_back(std::move(rec));
    pos += 4 + len;
  }
  out.valid_bytes = pos;
  return out;
}

IndexContents read_index(const fs::path& p) {
  if (!fs::exists(p)) throw UsageError("index '" + p.string() + "' does not exist");
  return parse_index(read_file(p));
}

bool append_record(const fs::path& p, const Meta& meta, const IndexRecord& rec) {
  FdLock lock(p);
  const Bytes current = lock.read_all();
  bool dropped = false;
  if (current.empty()) {
    lock.append(framed(header_record(meta)));
  } else {
    const IndexContents idx = parse_index(current);
    if (!idx.meta.compatible(meta))
      throw UsageError("index holds " + idx.meta.describe() + ", key is " + meta.describe());
    for (const auto& r : idx.records)
      if (r.id == rec.id) throw UsageError("record id '" + rec.id + "' already present");
    if (idx.truncated_tail) {
      lock.truncate(idx.valid_bytes);
      dropped = true;
    }
  }
  codec::Writer w(kRecordKind, meta.suite_id);
  w.text(rec.id);
  w.bytes(rec.ciphertext);
  lock.append(framed(std::move(w).finish()));
  return dropped;
}

fs::path blob_dir(const fs::path& index) { return fs::path(index.string() + ".blobs"); }

namespace {

constexpr std::uint8_t kInline = 0;
constexpr std::uint8_t kBlob = 1;
constexpr std::size_t kKeyBytes = crypto_aead_xchacha20poly1305_ietf_KEYBYTES;
constexpr std::size_t kNonceBytes = crypto_aead_xchacha20poly1305_ietf_NPUBBYTES;
constexpr std::size_t kHashBytes = 32;

std::array<std::uint8_t, kHashBytes> blob_hash(std::span<const std::uint8_t> blob) {
  std::array<std::uint8_t, kHashBytes> h;
  crypto_generichash(h.data(), h.size(), blob.data(), blob.size(), nullptr, 0);
  return h;
}

}  // namespace

Bytes store_payload(RandomSource& rng, const fs::path& index, std::span<const std::uint8_t> payload) {
  Bytes out;
  if (payload.size() <= kInlinePayloadLimit) {
    out.push_back(kInline);
    out.insert(out.end(), payload.begin(), payload.end());
    return out;
  }
  std::array<std::uint8_t, kKeyBytes> key;
  rng.fill(key);
  Bytes blob(kNonceBytes + payload.size() + crypto_aead_xchacha20poly1305_ietf_ABYTES);
  rng.fill(std::span(blob.data(), kNonceBytes));
  unsigned long long clen = 0;
  crypto_aead_xchacha20poly1305_ietf_encrypt(blob.data() + kNonceBytes, &clen, payload.data(),
                                             payload.size(), nullptr, 0, nullptr, blob.data(),
                                             key.data());
  const auto h = blob_hash(blob);
  const fs::path dir = blob_dir(index);
  fs::create_directories(dir);
  const fs::path target = dir / hex(h);
  if (!fs::exists(target)) write_file(target, blob);

  out.push_back(kBlob);
  out.insert(out.end(), key.begin(), key.end());
  out.insert(out.end(), h.begin(), h.end());
  sodium_memzero(key.data(), key.size());
  return out;
}

Bytes load_payload(const fs::path& index, std::span<const std::uint8_t> stored) {
  if (stored.empty()) throw DecodeError("empty stored payload");
  if (stored[0] == kInline) return Bytes(stored.begin() + 1, stored.end());
  if (stored[0] != kBlob || stored.size() != 1 + kKeyBytes + kHashBytes)
    throw DecodeError("malformed payload reference");
  const auto key = stored.subspan(1, kKeyBytes);
  const auto want = stored.subspan(1 + kKeyBytes, kHashBytes);
  const fs::path target = blob_dir(index) / hex(want);
  if (!fs::exists(target)) throw DecodeError("payload blob '" + target.string() + "' is missing");
  const Bytes blob = read_file(target);
  const auto got = blob_hash(blob);
  if (!std::equal(got.begin(), got.end(), want.begin()) ||
      blob.size() < kNonceBytes + crypto_aead_xchacha20poly1305_ietf_ABYTES)
    throw DecodeError("payload blob '" + target.string() + "' is corrupted");
  Bytes plain(blob.size() - kNonceBytes - crypto_aead_xchacha20poly1305_ietf_ABYTES);
  unsigned long long plen = 0;
  if (crypto_aead_xchacha20poly1305_ietf_decrypt(plain.data(), &plen, nullptr,
                                                 blob.data() + kNonceBytes,
                                                 blob.size() - kNonceBytes, nullptr, 0,
                                                 blob.data(), key.data()) != 0)
    throw DecodeError("payload blob '" + target.string() + "' failed authentication");
  plain.resize(plen);
  return plain;
}

}  // namespace hve::cli
