#include "curio/crypto.hpp"

#include <openssl/evp.h>
#include <openssl/hmac.h>
#include <openssl/sha.h>

#include <algorithm>

#include "curio/error.hpp"

namespace curio {

namespace {

void put_u32(Bytes& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void put_u64(Bytes& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

class Reader {
 public:
  explicit Reader(const Bytes& data) : data_(data) {}

  std::uint8_t u8() {
    need(1);
    return data_[pos_++];
  }
  std::uint32_t u32() {
    need(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(data_[pos_++]) << (8 * i);
    return v;
  }
  Bytes take(std::size_t n) {
    need(n);
    Bytes out(data_.begin() + static_cast<std::ptrdiff_t>(pos_),
              data_.begin() + static_cast<std::ptrdiff_t>(pos_ + n));
    pos_ += n;
    return out;
  }
  bool done() const { return pos_ == data_.size(); }

 private:
  void need(std::size_t n) const {
    if (data_.size() - pos_ < n) throw Error(ErrorCode::kDecodeError, "truncated envelope");
  }
  const Bytes& data_;
  std::size_t pos_ = 0;
};

void put_doc_id(Bytes& out, const DocumentId& id) {
  put_u32(out, id.origin.value);
  put_u32(out, id.counter);
}

DocumentId read_doc_id(Reader& in) {
  DocumentId id;
  id.origin.value = in.u32();
  id.counter = in.u32();
  return id;
}

Bytes domain_bytes(std::string_view domain) {
  Bytes out(domain.begin(), domain.end());
  out.push_back(0);
  return out;
}

Bytes encode(const EnvelopeContent& inner) {
  Bytes out;
  const std::uint8_t flags = (inner.signature ? 1 : 0) | (inner.document ? 2 : 0);
  out.push_back(flags);
  if (inner.signature) {
    out.insert(out.end(), inner.signature->digest.begin(), inner.signature->digest.end());
    put_u32(out, inner.signature->signer.value);
    put_doc_id(out, inner.signature->doc_id);
  }
  if (inner.document) {
    const Document& d = *inner.document;
    put_doc_id(out, d.id());
    out.push_back(static_cast<std::uint8_t>(d.level()));
    put_u32(out, static_cast<std::uint32_t>(d.need_to_know().size()));
    for (PlayerId p : d.need_to_know()) put_u32(out, p.value);
    put_u32(out, static_cast<std::uint32_t>(d.content().size()));
    out.insert(out.end(), d.content().begin(), d.content().end());
  }
  return out;
}

EnvelopeContent decode(const Bytes& bytes) {
  Reader in(bytes);
  EnvelopeContent inner;
  const std::uint8_t flags = in.u8();
  if (flags & ~3u) throw Error(ErrorCode::kDecodeError, "bad envelope flags");
  if (flags & 1) {
    Signature sig;
    const Bytes digest = in.take(sig.digest.size());
    std::copy(digest.begin(), digest.end(), sig.digest.begin());
    sig.signer.value = in.u32();
    sig.doc_id = read_doc_id(in);
    inner.signature = sig;
  }
  if (flags & 2) {
    const DocumentId id = read_doc_id(in);
    const std::uint8_t level = in.u8();
    if (level > 2) throw Error(ErrorCode::kDecodeError, "bad clearance level");
    PlayerSet ntk;
    const std::uint32_t count = in.u32();
    for (std::uint32_t i = 0; i < count; ++i) ntk.insert(PlayerId{in.u32()});
    Bytes content = in.take(in.u32());
    inner.document = Document(id, std::move(content), static_cast<ClearanceLevel>(level), std::move(ntk));
  }
  if (!in.done()) throw Error(ErrorCode::kDecodeError, "trailing envelope bytes");
  return inner;
}

Digest seal_tag(PlayerId recipient) {
  Bytes data;
  put_u32(data, recipient.value);
  return sha256("curio/seal-tag", data);
}

// XOR with SHA-256(recipient, block) blocks. Applying it twice is identity.
void apply_mask(PlayerId recipient, Bytes::iterator first, Bytes::iterator last) {
  std::uint64_t block = 0;
  while (first != last) {
    Bytes seed;
    put_u32(seed, recipient.value);
    put_u64(seed, block++);
    const Digest pad = sha256("curio/seal-mask", seed);
    for (std::size_t i = 0; i < pad.size() && first != last; ++i, ++first) *first ^= pad[i];
  }
}

}  // namespace

std::string to_hex(const Digest& digest) {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(digest.size() * 2);
  for (std::uint8_t b : digest) {
    out.push_back(kHex[b >> 4]);
    out.push_back(kHex[b & 0xf]);
  }
  return out;
}

std::optional<Digest> digest_from_hex(std::string_view hex) {
  if (hex.size() != 64) return std::nullopt;
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    return -1;
  };
  Digest out{};
  for (std::size_t i = 0; i < out.size(); ++i) {
    const int hi = nibble(hex[2 * i]);
    const int lo = nibble(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) return std::nullopt;
    out[i] = static_cast<std::uint8_t>((hi << 4) | lo);
  }
  return out;
}

Digest sha256(std::string_view domain, const Bytes& data) {
  Bytes input = domain_bytes(domain);
  input.insert(input.end(), data.begin(), data.end());
  Digest out{};
  SHA256(input.data(), input.size(), out.data());
  return out;
}

SigningKey derive_key(std::uint64_t seed, PlayerId player) {
  Bytes data;
  put_u64(data, seed);
  put_u32(data, player.value);
  return SigningKey{player, sha256("curio/signing-key", data)};
}

Signature sign(const Document& doc, const SigningKey& key) {
  Bytes message;
  put_doc_id(message, doc.id());
  put_u64(message, doc.content().size());
  message.insert(message.end(), doc.content().begin(), doc.content().end());

  Signature sig;
  unsigned int len = 0;
  HMAC(EVP_sha256(), key.secret.data(), static_cast<int>(key.secret.size()), message.data(),
       message.size(), sig.digest.data(), &len);
  sig.signer = key.key_id;
  sig.doc_id = doc.id();
  return sig;
}

bool signatures_equal(const Signature& a, const Signature& b) noexcept {
  return a.digest == b.digest;
}

SealedEnvelope seal(const EnvelopeContent& inner, PlayerId recipient) {
  const Digest tag = seal_tag(recipient);
  SealedEnvelope env{recipient, Bytes(tag.begin(), tag.end())};
  const Bytes body = encode(inner);
  env.payload.insert(env.payload.end(), body.begin(), body.end());
  apply_mask(recipient, env.payload.begin() + static_cast<std::ptrdiff_t>(tag.size()), env.payload.end());
  return env;
}

EnvelopeContent open(const SealedEnvelope& envelope, PlayerId who) {
  if (who != envelope.recipient) {
    throw Error(ErrorCode::kNotRecipient, "player " + std::to_string(who.value) +
                                              " cannot open envelope for " +
                                              std::to_string(envelope.recipient.value));
  }
  const Digest tag = seal_tag(who);
  if (envelope.payload.size() < tag.size() ||
      !std::equal(tag.begin(), tag.end(), envelope.payload.begin())) {
    throw Error(ErrorCode::kDecodeError, "envelope tag mismatch");
  }
  Bytes body(envelope.payload.begin() + static_cast<std::ptrdiff_t>(tag.size()), envelope.payload.end());
  apply_mask(who, body.begin(), body.end());
  return decode(body);
}

}  // namespace curio
