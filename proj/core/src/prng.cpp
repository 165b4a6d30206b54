#include "widthlab/prng.hpp"

#include <cmath>
#include <numbers>

namespace widthlab {

namespace {
constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
}

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::initializer_list<std::uint64_t> parts) {
  std::uint64_t h = 0x853c49e6748fea9bULL;
  for (std::uint64_t part : parts) {
    h = mix64(h + kGolden + part);
  }
  return h;
}

std::uint64_t stream_id(std::string_view label) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV offset basis
  for (unsigned char c : label) {
    h ^= c;
    h *= 0x100000001b3ULL;  // FNV prime
  }
  return h;
}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_(derive_seed({seed, stream})) {}

CounterRng::CounterRng(std::uint64_t seed, std::string_view stream_label)
    : CounterRng(seed, stream_id(stream_label)) {}

std::uint64_t CounterRng::bits(std::uint64_t index) const {
  return mix64(key_ + kGolden * (index + 1));
}

double CounterRng::uniform01(std::uint64_t index) const {
  return static_cast<double>(bits(index) >> 11) * 0x1.0p-53;
}

std::uint64_t CounterRng::below(std::uint64_t index, std::uint64_t bound) const {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(bits(index)) * bound) >> 64);
}

double CounterRng::gaussian(std::uint64_t index) const {
  // Separate substream so gaussian and uniform draws never alias.
  const std::uint64_t base = 2 * index;
  const std::uint64_t key = derive_seed({key_, stream_id("boxmuller")});
  const std::uint64_t b1 = mix64(key + kGolden * (base + 1));
  const std::uint64_t b2 = mix64(key + kGolden * (base + 2));
  // u1 in (0,1] keeps the log finite.
  const double u1 = (static_cast<double>(b1 >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = static_cast<double>(b2 >> 11) * 0x1.0p-53;
  const double r = std::sqrt(-2.0 * std::log(u1));
  return r * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace widthlab
