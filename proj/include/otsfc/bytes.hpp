#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace otsfc {

// Canonical byte serialization used for transcript export, byte-for-byte
// transcript comparison and histogram keys in the exact-enumeration audits.
// Integers are big-endian; bit sequences are packed MSB-first per byte.

inline void append_u8(std::vector<std::uint8_t>& out, std::uint8_t v) {
  out.push_back(v);
}

inline void append_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 24));
  out.push_back(static_cast<std::uint8_t>(v >> 16));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v));
}

inline void append_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
  append_u32(out, static_cast<std::uint32_t>(v >> 32));
  append_u32(out, static_cast<std::uint32_t>(v));
}

inline void append_bits(std::vector<std::uint8_t>& out,
                        std::span<const std::uint8_t> bits) {
  std::uint8_t acc = 0;
  int filled = 0;
  for (std::uint8_t b : bits) {
    acc = static_cast<std::uint8_t>((acc << 1) | (b & 1u));
    if (++filled == 8) {
      out.push_back(acc);
      acc = 0;
      filled = 0;
    }
  }
  if (filled > 0) out.push_back(static_cast<std::uint8_t>(acc << (8 - filled)));
}

inline std::string to_hex(std::span<const std::uint8_t> bytes) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string s;
  s.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    s.push_back(digits[b >> 4]);
    s.push_back(digits[b & 0xf]);
  }
  return s;
}

}  // namespace otsfc
