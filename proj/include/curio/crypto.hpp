#pragma once

// Simulated, deterministic stand-ins for the signing and public-key steps of
// the transfer protocols. Signing is a keyed SHA-256 (HMAC) over the document
// id and content; sealing tags a payload with its recipient and masks it with
// a recipient-derived keystream. None of this resists a real adversary.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "curio/model.hpp"

namespace curio {

using Digest = std::array<std::uint8_t, 32>;

std::string to_hex(const Digest& digest);
std::optional<Digest> digest_from_hex(std::string_view hex);

struct SigningKey {
  PlayerId key_id;
  Digest secret{};
};

// Same (scenario seed, player) always yields the same key.
SigningKey derive_key(std::uint64_t seed, PlayerId player);

struct Signature {
  Digest digest{};
  PlayerId signer;
  DocumentId doc_id;

  friend auto operator<=>(const Signature&, const Signature&) = default;
};

Signature sign(const Document& doc, const SigningKey& key);

// Compares digests only. Takes no document, so it cannot look at content.
bool signatures_equal(const Signature& a, const Signature& b) noexcept;

// What travels inside an envelope: a blinded signature, a full document, or
// both.
struct EnvelopeContent {
  std::optional<Signature> signature;
  std::optional<Document> document;

  friend bool operator==(const EnvelopeContent&, const EnvelopeContent&) = default;
};

struct SealedEnvelope {
  PlayerId recipient;
  Bytes payload;

  friend bool operator==(const SealedEnvelope&, const SealedEnvelope&) = default;
};

SealedEnvelope seal(const EnvelopeContent& inner, PlayerId recipient);

// Throws Error(kNotRecipient) unless `who` is the addressed recipient.
EnvelopeContent open(const SealedEnvelope& envelope, PlayerId who);

// Plain SHA-256, exposed for tests and for deterministic content synthesis.
Digest sha256(std::string_view domain, const Bytes& data);

}  // namespace curio
