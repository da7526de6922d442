// Copyright (c) the ledgerbft authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "lbft/encoding.hpp"

namespace lbft {

inline constexpr size_t kDigestSize = 32;

struct Digest {
    std::array<uint8_t, kDigestSize> bytes{};

    auto operator<=>(const Digest&) const = default;
    bool is_zero() const {
        for (uint8_t b : bytes)
            if (b != 0) return false;
        return true;
    }
    BytesView view() const { return BytesView(bytes.data(), bytes.size()); }
    std::string hex() const;
    // First 8 bytes as a little-endian integer; used for hash-based selection.
    uint64_t prefix_u64() const {
        uint64_t v = 0;
        for (int i = 0; i < 8; i++) v |= static_cast<uint64_t>(bytes[i]) << (8 * i);
        return v;
    }
};

Digest hash(BytesView data);
Digest hash2(BytesView a, BytesView b);

// Streaming SHA-256 for larger inputs (checkpoint dumps, reports).
class HashWriter {
public:
    HashWriter();
    void update(BytesView data);
    void update_u64(uint64_t v);
    Digest finish();

private:
    std::array<uint8_t, 128> state_;
    bool open_ = false;
};

// Deterministic RNG for everything in the artifact; seeded by the harness,
// never by ambient entropy.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}
    uint64_t next();
    uint64_t next_below(uint64_t bound); // uniform in [0, bound)
    void fill(uint8_t* out, size_t n);
    Digest digest();

private:
    uint64_t state_;
};

// Derives independent per-actor seeds from a scenario seed.
uint64_t derive_seed(uint64_t root, uint64_t stream);

enum class SigScheme : uint8_t {
    Mock = 0,    // keyed-hash, deterministic, not unforgeable; for simulation
    Ed25519 = 1, // production scheme (libsodium)
};

inline constexpr size_t kPublicKeySize = 32;

struct PublicKey {
    SigScheme scheme = SigScheme::Mock;
    std::array<uint8_t, kPublicKeySize> bytes{};

    auto operator<=>(const PublicKey&) const = default;
    void encode(Encoder& e) const;
    static PublicKey decode(Decoder& d);
};

struct SecretKey {
    SigScheme scheme = SigScheme::Mock;
    Bytes bytes; // scheme-dependent length
};

struct KeyPair {
    PublicKey pub;
    SecretKey sec;
};

using Signature = Bytes;

KeyPair generate_keypair(SigScheme scheme, Rng& rng);
Signature sign(const SecretKey& sk, BytesView msg);
bool verify(const PublicKey& pk, BytesView msg, BytesView sig);

// Global operation counters, reset per run; used by the harness to assert
// signature-economy properties.
struct CryptoCounters {
    uint64_t sign_calls = 0;
    uint64_t verify_calls = 0;
};
CryptoCounters& crypto_counters();

struct Nonce {
    std::array<uint8_t, 32> value{};

    auto operator<=>(const Nonce&) const = default;
    BytesView view() const { return BytesView(value.data(), value.size()); }
    static Nonce random(Rng& rng);
};

Digest commit_nonce(const Nonce& n);
bool open_nonce(const Digest& commitment, const Nonce& n);

Digest digest_from_hex(std::string_view hex);

inline void encode_digest(Encoder& e, const Digest& d) {
    e.raw(d.view());
}
inline Digest decode_digest(Decoder& d) {
    Digest out;
    Bytes b = d.raw(kDigestSize);
    std::copy(b.begin(), b.end(), out.bytes.begin());
    return out;
}
inline void encode_nonce(Encoder& e, const Nonce& n) {
    e.raw(n.view());
}
inline Nonce decode_nonce(Decoder& d) {
    Nonce out;
    Bytes b = d.raw(32);
    std::copy(b.begin(), b.end(), out.value.begin());
    return out;
}

} // namespace lbft
