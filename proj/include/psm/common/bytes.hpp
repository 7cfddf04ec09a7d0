// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <cstring>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace psm {

using Bytes = std::vector<uint8_t>;

class SerializationError : public std::runtime_error {
public:
    explicit SerializationError(const std::string& what) : std::runtime_error(what) {}
};

/// Append-only little-endian byte sink.
class ByteWriter {
public:
    void u8(uint8_t v) { buf_.push_back(v); }
    void u32(uint32_t v) {
        for (int i = 0; i < 4; ++i) buf_.push_back(static_cast<uint8_t>(v >> (8 * i)));
    }
    void u64(uint64_t v) {
        for (int i = 0; i < 8; ++i) buf_.push_back(static_cast<uint8_t>(v >> (8 * i)));
    }
    void raw(const void* p, size_t n) {
        const auto* b = static_cast<const uint8_t*>(p);
        buf_.insert(buf_.end(), b, b + n);
    }
    void bytes(std::span<const uint8_t> b) { raw(b.data(), b.size()); }
    /// u32 length prefix followed by the payload.
    void blob(std::span<const uint8_t> b) {
        u32(static_cast<uint32_t>(b.size()));
        bytes(b);
    }
    void u64s(std::span<const uint64_t> v) {
        size_t off = buf_.size();
        buf_.resize(off + v.size() * 8);
        std::memcpy(buf_.data() + off, v.data(), v.size() * 8);  // little-endian host
    }

    const Bytes& data() const { return buf_; }
    Bytes take() { return std::move(buf_); }
    size_t size() const { return buf_.size(); }

private:
    Bytes buf_;
};

/// Bounds-checked little-endian byte source; throws SerializationError with
/// the offset of the failure.
class ByteReader {
public:
    explicit ByteReader(std::span<const uint8_t> b) : buf_(b) {}

    uint8_t u8() {
        need(1);
        return buf_[pos_++];
    }
    uint32_t u32() {
        need(4);
        uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= static_cast<uint32_t>(buf_[pos_ + i]) << (8 * i);
        pos_ += 4;
        return v;
    }
    uint64_t u64() {
        need(8);
        uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(buf_[pos_ + i]) << (8 * i);
        pos_ += 8;
        return v;
    }
    void raw(void* p, size_t n) {
        need(n);
        std::memcpy(p, buf_.data() + pos_, n);
        pos_ += n;
    }
    Bytes blob() {
        uint32_t n = u32();
        need(n);
        Bytes out(buf_.begin() + pos_, buf_.begin() + pos_ + n);
        pos_ += n;
        return out;
    }
    std::vector<uint64_t> u64s(size_t count) {
        need(count * 8);
        std::vector<uint64_t> v(count);
        std::memcpy(v.data(), buf_.data() + pos_, count * 8);
        pos_ += count * 8;
        return v;
    }

    size_t remaining() const { return buf_.size() - pos_; }
    size_t offset() const { return pos_; }
    void expect_end() const {
        if (pos_ != buf_.size())
            throw SerializationError("trailing bytes at offset " + std::to_string(pos_));
    }

private:
    void need(size_t n) const {
        if (buf_.size() - pos_ < n)
            throw SerializationError("truncated input at offset " + std::to_string(pos_));
    }
    std::span<const uint8_t> buf_;
    size_t pos_ = 0;
};

}  // namespace psm
