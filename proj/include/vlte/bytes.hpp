#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace vlte {

using Bytes = std::vector<uint8_t>;

inline void put_u16_be(Bytes& out, uint16_t v) {
  out.push_back(static_cast<uint8_t>(v >> 8));
  out.push_back(static_cast<uint8_t>(v & 0xFF));
}

inline void put_u32_be(Bytes& out, uint32_t v) {
  out.push_back(static_cast<uint8_t>(v >> 24));
  out.push_back(static_cast<uint8_t>((v >> 16) & 0xFF));
  out.push_back(static_cast<uint8_t>((v >> 8) & 0xFF));
  out.push_back(static_cast<uint8_t>(v & 0xFF));
}

inline uint16_t get_u16_be(const uint8_t* p) {
  return static_cast<uint16_t>((p[0] << 8) | p[1]);
}

inline uint32_t get_u32_be(const uint8_t* p) {
  return (static_cast<uint32_t>(p[0]) << 24) | (static_cast<uint32_t>(p[1]) << 16) |
         (static_cast<uint32_t>(p[2]) << 8) | static_cast<uint32_t>(p[3]);
}

inline uint64_t get_u64_be(const uint8_t* p) {
  uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v = (v << 8) | p[i];
  return v;
}

inline void put_u64_be(Bytes& out, uint64_t v) {
  for (int i = 7; i >= 0; --i) out.push_back(static_cast<uint8_t>((v >> (8 * i)) & 0xFF));
}

inline bool is_digit_string(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

// Two digits per octet, earlier digit in the high nibble, odd counts
// padded with a trailing 0xF nibble.
inline Bytes bcd_pack(const std::string& digits) {
  Bytes out;
  out.reserve((digits.size() + 1) / 2);
  for (size_t i = 0; i < digits.size(); i += 2) {
    uint8_t hi = static_cast<uint8_t>(digits[i] - '0');
    uint8_t lo = (i + 1 < digits.size()) ? static_cast<uint8_t>(digits[i + 1] - '0') : 0xF;
    out.push_back(static_cast<uint8_t>((hi << 4) | lo));
  }
  return out;
}

// Returns nullopt on an illegal nibble or a pad nibble anywhere but the
// final low position.
inline std::optional<std::string> bcd_unpack(const uint8_t* p, size_t n) {
  std::string out;
  out.reserve(n * 2);
  for (size_t i = 0; i < n; ++i) {
    uint8_t hi = p[i] >> 4;
    uint8_t lo = p[i] & 0x0F;
    if (hi > 9) return std::nullopt;
    out.push_back(static_cast<char>('0' + hi));
    if (lo == 0xF) {
      if (i + 1 != n) return std::nullopt;
      return out;
    }
    if (lo > 9) return std::nullopt;
    out.push_back(static_cast<char>('0' + lo));
  }
  return out;
}

std::string to_hex(const Bytes& b);
std::optional<Bytes> from_hex(const std::string& s);

}  // namespace vlte
