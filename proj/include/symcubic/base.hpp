#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace symcubic {

enum class Errc {
  NotPrime,
  IncompatibleDegrees,
  ZeroPolynomial,
  ZeroInput,
  NotStable,
  EqualPoints,
  NotOnSurface,
  CurveInSurface,
  KnownNotContained,
  SamplingExhausted,
  NotGeneralPosition,
  ConstructionDegenerate,
  NotOnCurve,
  BadParametrization,
  ZeroCoefficient,
  WildDegree,
  FieldMismatch,
  InvalidArgument,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

// splitmix64. The stream is pinned by the algorithm, not the platform, so
// seeded runs replay bit-exactly everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, n), n > 0; rejection keeps it unbiased
  std::uint64_t below(std::uint64_t n) {
    std::uint64_t lim = ~0ULL - ~0ULL % n;
    std::uint64_t v;
    do {
      v = next();
    } while (v >= lim);
    return v % n;
  }

 private:
  std::uint64_t state_;
};

// Stable per-trial seed derivation: trial i of a campaign with master seed s
// replays in isolation as derive_seed(s, i).
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  Rng a(index + 0x51ED5EEDULL);
  Rng b(master ^ a.next());
  return b.next();
}

}  // namespace symcubic
