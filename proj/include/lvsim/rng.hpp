#pragma once

#include <cmath>
#include <cstdint>
#include <cstring>
#include <random>
#include <string_view>
#include <vector>

namespace lvsim {

// 64-bit mixing step (splitmix64). Used for seed derivation so that results
// are reproducible across platforms and standard library versions.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t hash_str(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Independent named stream from a master seed ("topology", "traffic", ...).
inline std::uint64_t derive_stream(std::uint64_t master, std::string_view name) {
  return mix64(master ^ hash_str(name));
}

// Per-task seed for sweeps: stable in (base, scheduler, axis value, replication).
inline std::uint64_t derive_run_seed(std::uint64_t base, std::string_view scheduler,
                                     double axis_value, std::uint64_t replication) {
  std::uint64_t bits = 0;
  std::memcpy(&bits, &axis_value, sizeof(bits));
  std::uint64_t h = mix64(base);
  h = mix64(h ^ hash_str(scheduler));
  h = mix64(h ^ bits);
  h = mix64(h ^ replication);
  return h;
}

// mt19937_64 has a standardized output sequence; the distributions below are
// hand-rolled because the std:: ones are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // Uniform in [0, 1).
  double next_double() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, bound), bound > 0. Rejection sampling, unbiased.
  std::int64_t next_below(std::int64_t bound) {
    const std::uint64_t b = static_cast<std::uint64_t>(bound);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % b;
    std::uint64_t v;
    do {
      v = eng_();
    } while (v >= limit);
    return static_cast<std::int64_t>(v % b);
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  double exponential(double mean) {
    // next_double() < 1 so the log argument stays positive
    return -mean * std::log(1.0 - next_double());
  }

  bool bernoulli(double p) { return next_double() < p; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[static_cast<std::size_t>(next_below(static_cast<std::int64_t>(i)))]);
    }
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace lvsim
