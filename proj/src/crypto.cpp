// Copyright (c) the ledgerbft authors.
// SPDX-License-Identifier: Apache-2.0
#include "lbft/crypto.hpp"

#include <sodium.h>

#include <cstring>
#include <stdexcept>

namespace lbft {

namespace {

void ensure_sodium() {
    static const int rc = sodium_init();
    if (rc < 0) throw std::runtime_error("sodium_init failed");
}

} // namespace

Digest hash(BytesView data) {
    ensure_sodium();
    Digest d;
    crypto_hash_sha256(d.bytes.data(), data.data(), data.size());
    return d;
}

Digest hash2(BytesView a, BytesView b) {
    ensure_sodium();
    crypto_hash_sha256_state st;
    crypto_hash_sha256_init(&st);
    crypto_hash_sha256_update(&st, a.data(), a.size());
    crypto_hash_sha256_update(&st, b.data(), b.size());
    Digest d;
    crypto_hash_sha256_final(&st, d.bytes.data());
    return d;
}

HashWriter::HashWriter() {
    ensure_sodium();
    static_assert(sizeof(crypto_hash_sha256_state) <= 128);
    auto* st = reinterpret_cast<crypto_hash_sha256_state*>(state_.data());
    crypto_hash_sha256_init(st);
    open_ = true;
}

void HashWriter::update(BytesView data) {
    auto* st = reinterpret_cast<crypto_hash_sha256_state*>(state_.data());
    crypto_hash_sha256_update(st, data.data(), data.size());
}

void HashWriter::update_u64(uint64_t v) {
    uint8_t b[8];
    for (int i = 0; i < 8; i++) b[i] = static_cast<uint8_t>(v >> (8 * i));
    update(BytesView(b, 8));
}

Digest HashWriter::finish() {
    auto* st = reinterpret_cast<crypto_hash_sha256_state*>(state_.data());
    Digest d;
    crypto_hash_sha256_final(st, d.bytes.data());
    open_ = false;
    return d;
}

std::string Digest::hex() const {
    static const char* k = "0123456789abcdef";
    std::string s;
    s.reserve(64);
    for (uint8_t b : bytes) {
        s.push_back(k[b >> 4]);
        s.push_back(k[b & 0xf]);
    }
    return s;
}

Digest digest_from_hex(std::string_view hex) {
    if (hex.size() != 64) throw std::invalid_argument("digest hex must be 64 chars");
    auto nib = [](char c) -> uint8_t {
        if (c >= '0' && c <= '9') return static_cast<uint8_t>(c - '0');
        if (c >= 'a' && c <= 'f') return static_cast<uint8_t>(c - 'a' + 10);
        if (c >= 'A' && c <= 'F') return static_cast<uint8_t>(c - 'A' + 10);
        throw std::invalid_argument("bad hex digit");
    };
    Digest d;
    for (size_t i = 0; i < 32; i++) d.bytes[i] = static_cast<uint8_t>((nib(hex[2 * i]) << 4) | nib(hex[2 * i + 1]));
    return d;
}

// splitmix64; full-period, good enough for simulation streams.
uint64_t Rng::next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

uint64_t Rng::next_below(uint64_t bound) {
    if (bound == 0) return 0;
    // Rejection sampling to avoid modulo bias.
    uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t v;
    do {
        v = next();
    } while (v >= limit);
    return v % bound;
}

void Rng::fill(uint8_t* out, size_t n) {
    size_t i = 0;
    while (i < n) {
        uint64_t v = next();
        for (int k = 0; k < 8 && i < n; k++, i++) out[i] = static_cast<uint8_t>(v >> (8 * k));
    }
}

Digest Rng::digest() {
    Digest d;
    fill(d.bytes.data(), d.bytes.size());
    return d;
}

uint64_t derive_seed(uint64_t root, uint64_t stream) {
    Rng r(root ^ (stream * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL));
    r.next();
    return r.next();
}

void PublicKey::encode(Encoder& e) const {
    e.u8(static_cast<uint8_t>(scheme));
    e.raw(BytesView(bytes.data(), bytes.size()));
}

PublicKey PublicKey::decode(Decoder& d) {
    PublicKey pk;
    uint8_t s = d.u8();
    if (s > 1) throw DecodeError("unknown signature scheme");
    pk.scheme = static_cast<SigScheme>(s);
    Bytes b = d.raw(kPublicKeySize);
    std::copy(b.begin(), b.end(), pk.bytes.begin());
    return pk;
}

CryptoCounters& crypto_counters() {
    static CryptoCounters counters;
    return counters;
}

namespace {

constexpr uint8_t kMockPkTag = 0x4b;

Digest mock_public(BytesView seed) {
    Encoder e;
    e.u8(kMockPkTag).raw(seed);
    return hash(e.data());
}

} // namespace

KeyPair generate_keypair(SigScheme scheme, Rng& rng) {
    KeyPair kp;
    kp.pub.scheme = scheme;
    kp.sec.scheme = scheme;
    std::array<uint8_t, 32> seed{};
    rng.fill(seed.data(), seed.size());
    if (scheme == SigScheme::Mock) {
        kp.sec.bytes.assign(seed.begin(), seed.end());
        kp.pub.bytes = mock_public(BytesView(seed.data(), seed.size())).bytes;
    } else {
        ensure_sodium();
        kp.sec.bytes.resize(crypto_sign_SECRETKEYBYTES);
        std::array<uint8_t, crypto_sign_PUBLICKEYBYTES> pk{};
        crypto_sign_seed_keypair(pk.data(), kp.sec.bytes.data(), seed.data());
        std::copy(pk.begin(), pk.end(), kp.pub.bytes.begin());
    }
    return kp;
}

Signature sign(const SecretKey& sk, BytesView msg) {
    crypto_counters().sign_calls++;
    if (sk.scheme == SigScheme::Mock) {
        // sig = H(pk || H(msg)): deterministic and verifiable from the public
        // key alone. Binds the message but is trivially forgeable; simulation
        // adversaries are scripted, not cryptanalytic.
        Digest pk = mock_public(BytesView(sk.bytes.data(), sk.bytes.size()));
        Digest m = hash(msg);
        Digest s = hash2(pk.view(), m.view());
        return Bytes(s.bytes.begin(), s.bytes.end());
    }
    ensure_sodium();
    Bytes sig(crypto_sign_BYTES);
    unsigned long long siglen = 0;
    crypto_sign_detached(sig.data(), &siglen, msg.data(), msg.size(), sk.bytes.data());
    sig.resize(siglen);
    return sig;
}

bool verify(const PublicKey& pk, BytesView msg, BytesView sig) {
    crypto_counters().verify_calls++;
    if (pk.scheme == SigScheme::Mock) {
        if (sig.size() != kDigestSize) return false;
        Digest m = hash(msg);
        Digest expect = hash2(BytesView(pk.bytes.data(), pk.bytes.size()), m.view());
        return std::memcmp(expect.bytes.data(), sig.data(), kDigestSize) == 0;
    }
    ensure_sodium();
    if (sig.size() != crypto_sign_BYTES) return false;
    return crypto_sign_verify_detached(sig.data(), msg.data(), msg.size(), pk.bytes.data()) == 0;
}

Nonce Nonce::random(Rng& rng) {
    Nonce n;
    rng.fill(n.value.data(), n.value.size());
    return n;
}

namespace {
constexpr uint8_t kNonceTag = 0x4e;
}

Digest commit_nonce(const Nonce& n) {
    Encoder e;
    e.u8(kNonceTag).raw(n.view());
    return hash(e.data());
}

bool open_nonce(const Digest& commitment, const Nonce& n) {
    return commit_nonce(n) == commitment;
}

} // namespace lbft
