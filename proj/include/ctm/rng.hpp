#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace ctm {

namespace detail {
// splitmix64 finalizer; full-period bijective mixer on 64-bit state.
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}
}  // namespace detail

// Counter-style generator: the state is derived purely from (seed, stream), so the
// substream for a given sample index is identical no matter which worker draws it or
// in what order. Not cryptographic; meant for reproducible simulation.
class SampleRng {
 public:
  SampleRng(std::uint64_t seed, std::uint64_t stream) {
    state_ = detail::mix64(seed + 0x9e3779b97f4a7c15ULL);
    state_ = detail::mix64(state_ ^ (stream + 0xd1b54a32d192ed03ULL));
  }

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return detail::mix64(state_);
  }

  // Uniform on [0, 1), 53-bit resolution.
  double next_uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Standard normal via Box-Muller; the pair's second value is cached.
  double next_gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    // 1 - u lies in (0, 1], so the log is finite.
    double radius = std::sqrt(-2.0 * std::log(1.0 - next_uniform()));
    double angle = 2.0 * std::numbers::pi * next_uniform();
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

  // Real and imaginary parts independent standard normals.
  std::complex<double> next_complex_gaussian() {
    double re = next_gaussian();
    double im = next_gaussian();
    return {re, im};
  }

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace ctm
