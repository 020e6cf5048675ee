#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilq {

using cplx = std::complex<double>;
using CVec = std::vector<cplx>;
using RVec = std::vector<double>;

inline constexpr double pi = 3.14159265358979323846;

/// Deterministic generator used for every random draw in the project.
/// Hand-rolled uniform/normal so results do not depend on the C++ library.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : s_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  std::uint64_t next_u64() {
    // xorshift64*
    s_ ^= s_ >> 12;
    s_ ^= s_ << 25;
    s_ ^= s_ >> 27;
    return s_ * 0x2545f4914f6cdd1dull;
  }

  double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform(), u2 = uniform();
    while (u1 <= 1e-300) u1 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * pi * u2);
    have_spare_ = true;
    return r * std::cos(2.0 * pi * u2);
  }

  cplx cnormal() {
    double a = normal(), b = normal();
    return {a, b};
  }

  /// integer in [0, m)
  std::uint64_t index(std::uint64_t m) { return next_u64() % m; }

private:
  std::uint64_t s_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

/// Fixed-precision float formatting (bit-stable report output).
std::string format_g17(double x);

} // namespace nilq
