#pragma once

#include <cstdint>
#include <initializer_list>
#include <string_view>

namespace widthlab {

// 64-bit finalizer (splitmix64). Bijective, so distinct counters never collide.
std::uint64_t mix64(std::uint64_t z);

// Order-sensitive hash chain used to derive child seeds from
// (master seed, coordinates...). Stable across platforms and runs.
std::uint64_t derive_seed(std::initializer_list<std::uint64_t> parts);

// Stream label -> stream id (FNV-1a), so independently drawn objects get
// non-overlapping counter streams without manual id bookkeeping.
std::uint64_t stream_id(std::string_view label);

// Counter-based generator: every variate is a pure function of
// (seed, stream, index). No state advances, so values are reproducible
// independently of evaluation order.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream);
  CounterRng(std::uint64_t seed, std::string_view stream_label);

  std::uint64_t bits(std::uint64_t index) const;

  // Uniform on [0,1), 53-bit resolution.
  double uniform01(std::uint64_t index) const;

  // Uniform integer in [0, bound), bound >= 1. Fixed-point multiply; the
  // O(bound/2^64) bias is irrelevant at this scale and keeps consumption flat.
  std::uint64_t below(std::uint64_t index, std::uint64_t bound) const;

  // Standard normal via the trigonometric Box-Muller transform; variate k
  // consumes exactly uniforms 2k and 2k+1 of a dedicated substream.
  double gaussian(std::uint64_t index) const;

 private:
  std::uint64_t key_;
};

}  // namespace widthlab
