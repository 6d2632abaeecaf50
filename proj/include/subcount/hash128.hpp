//
// Project subcount - Copyright 2026 The subcount Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>

namespace subcount {

/// 128-bit value used for color-refinement colors and graph digests.
struct Hash128 {
  std::uint64_t hi = 0;
  std::uint64_t lo = 0;

  friend auto operator<=>(const Hash128&, const Hash128&) = default;

  std::string hex() const;
};

/// Streaming, platform-stable 128-bit hash. Not cryptographic.
///
/// Two 64-bit lanes absorb each word with different multipliers and are
/// cross-mixed at finalization, so results only depend on the word sequence.
class Hasher128 {
 public:
  explicit Hasher128(std::uint64_t seed = 0) noexcept
      : a_(0x9E3779B97F4A7C15ULL ^ seed), b_(0xC2B2AE3D27D4EB4FULL + seed) {}

  Hasher128& add(std::uint64_t word) noexcept {
    ++length_;
    a_ = rotl(a_ ^ mix(word + 0x165667B19E3779F9ULL), 27) * 0x9E3779B97F4A7C15ULL + 0x52DCE729;
    b_ = rotl(b_ ^ mix(word ^ 0x27D4EB2F165667C5ULL), 31) * 0xC2B2AE3D27D4EB4FULL + 0x38495AB5;
    return *this;
  }

  Hasher128& add(std::int64_t word) noexcept { return add(static_cast<std::uint64_t>(word)); }

  Hasher128& add(const Hash128& h) noexcept { return add(h.hi).add(h.lo); }

  Hasher128& add(std::span<const Hash128> hs) noexcept {
    add(static_cast<std::uint64_t>(hs.size()));
    for (const auto& h : hs) add(h);
    return *this;
  }

  Hash128 digest() const noexcept {
    std::uint64_t a = a_ ^ length_;
    std::uint64_t b = b_ ^ (length_ * 0x9E3779B97F4A7C15ULL);
    a += b;
    b += a;
    return {mix(a), mix(b ^ 0x94D049BB133111EBULL)};
  }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int r) noexcept {
    return (x << r) | (x >> (64 - r));
  }
  // Murmur3 fmix64 finalizer.
  static constexpr std::uint64_t mix(std::uint64_t k) noexcept {
    k ^= k >> 33;
    k *= 0xFF51AFD7ED558CCDULL;
    k ^= k >> 33;
    k *= 0xC4CEB9FE1A85EC53ULL;
    k ^= k >> 33;
    return k;
  }

  std::uint64_t a_;
  std::uint64_t b_;
  std::uint64_t length_ = 0;
};

}  // namespace subcount
