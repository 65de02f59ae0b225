#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace eonsim {

// SplitMix64 (Steele, Lea, Flood 2014). Used only to derive substream seeds
// from the master seed.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

// One independent random stream: a 64-bit Mersenne Twister (std::mt19937_64,
// whose output sequence is fixed by the C++ standard) with the integer and
// real conversions spelled out here, since the std distributions are
// implementation-defined.
class Stream {
 public:
  explicit Stream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on the open interval (0, 1): 52 random bits, centered.
  double uniform_open() {
    return (static_cast<double>(next_u64() >> 12) + 0.5) * 0x1.0p-52;
  }

  // Exponential with the given rate, by inversion.
  double exponential(double rate) { return -std::log(uniform_open()) / rate; }

  // Uniform integer in [0, n), unbiased by rejection.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
      const std::uint64_t x = next_u64();
      if (x >= threshold) return x % n;
    }
  }

 private:
  std::mt19937_64 engine_;
};

// Substreams of one master seed. The draw order is part of the trace format:
//   arrivals    - one exponential inter-arrival gap per demand
//   holding     - one exponential holding time per demand
//   attributes  - per demand: ordered endpoint pair index, then bitrate
struct TraceStreams {
  Stream arrivals;
  Stream holding;
  Stream attributes;

  static TraceStreams from_seed(std::uint64_t master) {
    SplitMix64 sm(master);
    const auto a = sm.next();
    const auto h = sm.next();
    const auto d = sm.next();
    return TraceStreams{Stream(a), Stream(h), Stream(d)};
  }
};

}  // namespace eonsim
