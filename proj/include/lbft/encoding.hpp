// Copyright (c) the ledgerbft authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <cstring>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lbft {

using Bytes = std::vector<uint8_t>;
using BytesView = std::span<const uint8_t>;

inline Bytes to_bytes(std::string_view s) {
    return Bytes(s.begin(), s.end());
}

inline std::string to_string(BytesView b) {
    return std::string(b.begin(), b.end());
}

// Canonical encoding: little-endian fixed-width integers, u32
// length-prefixed byte strings, fixed field order. Signatures cover
// encodings, so encode/decode must be bijective.
class Encoder {
public:
    Encoder& u8(uint8_t v) {
        out_.push_back(v);
        return *this;
    }
    Encoder& u32(uint32_t v) {
        for (int i = 0; i < 4; i++) out_.push_back(static_cast<uint8_t>(v >> (8 * i)));
        return *this;
    }
    Encoder& u64(uint64_t v) {
        for (int i = 0; i < 8; i++) out_.push_back(static_cast<uint8_t>(v >> (8 * i)));
        return *this;
    }
    Encoder& i64(int64_t v) { return u64(static_cast<uint64_t>(v)); }
    // Raw fixed-width bytes, no length prefix.
    Encoder& raw(BytesView b) {
        out_.insert(out_.end(), b.begin(), b.end());
        return *this;
    }
    // Length-prefixed byte string.
    Encoder& bytes(BytesView b) {
        u32(static_cast<uint32_t>(b.size()));
        return raw(b);
    }
    Encoder& str(std::string_view s) {
        u32(static_cast<uint32_t>(s.size()));
        out_.insert(out_.end(), s.begin(), s.end());
        return *this;
    }

    const Bytes& data() const { return out_; }
    Bytes take() { return std::move(out_); }

private:
    Bytes out_;
};

struct DecodeError : std::runtime_error {
    explicit DecodeError(const std::string& what) : std::runtime_error(what) {}
};

class Decoder {
public:
    explicit Decoder(BytesView in) : in_(in) {}

    uint8_t u8() {
        need(1);
        return in_[pos_++];
    }
    uint32_t u32() {
        need(4);
        uint32_t v = 0;
        for (int i = 0; i < 4; i++) v |= static_cast<uint32_t>(in_[pos_++]) << (8 * i);
        return v;
    }
    uint64_t u64() {
        need(8);
        uint64_t v = 0;
        for (int i = 0; i < 8; i++) v |= static_cast<uint64_t>(in_[pos_++]) << (8 * i);
        return v;
    }
    int64_t i64() { return static_cast<int64_t>(u64()); }
    Bytes raw(size_t n) {
        need(n);
        Bytes b(in_.begin() + static_cast<ptrdiff_t>(pos_), in_.begin() + static_cast<ptrdiff_t>(pos_ + n));
        pos_ += n;
        return b;
    }
    Bytes bytes() {
        uint32_t n = u32();
        if (n > remaining()) throw DecodeError("byte string length exceeds input");
        return raw(n);
    }
    std::string str() {
        Bytes b = bytes();
        return std::string(b.begin(), b.end());
    }

    size_t remaining() const { return in_.size() - pos_; }
    bool done() const { return pos_ == in_.size(); }
    void expect_done() const {
        if (!done()) throw DecodeError("trailing bytes after decode");
    }

private:
    void need(size_t n) const {
        if (remaining() < n) throw DecodeError("input truncated");
    }
    BytesView in_;
    size_t pos_ = 0;
};

} // namespace lbft
