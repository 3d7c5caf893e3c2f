#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "cslp/common.hpp"

namespace cslp {

// Philox4x32-10 counter-based generator. Chosen over std::mt19937 because the
// output for (seed, stream, counter) is fully specified and identical on every
// platform and thread count, which the reproducibility contract requires.
// Streams are derived by hashing a label into the key, so modules draw from
// independent substreams of one user-facing seed.
class Philox {
 public:
  Philox(std::uint64_t seed, std::uint64_t stream = 0)
      : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
        ctr_{0, 0, static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)} {}

  static Philox labeled(std::uint64_t seed, const std::string& label) {
    return Philox(seed, fnv1a64(label));
  }

  std::uint32_t next_u32() {
    if (have_ == 0) {
      block_ = round10(ctr_, key_);
      bump();
      have_ = 4;
    }
    return block_[4 - have_--];
  }

  std::uint64_t next_u64() {
    std::uint64_t hi = next_u32();
    return (hi << 32) | next_u32();
  }

  // Uniform in [0,1) with 53 random bits.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  // Uniform integer in [0, n). Unbiased via rejection.
  std::uint64_t uniform_int(std::uint64_t n) {
    if (n == 0) return 0;
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t v;
    do {
      v = next_u64();
    } while (v >= limit);
    return v % n;
  }

 private:
  using Ctr = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static std::uint32_t mulhi(std::uint32_t a, std::uint32_t b) {
    return static_cast<std::uint32_t>((std::uint64_t{a} * b) >> 32);
  }

  static Ctr round10(Ctr c, Key k) {
    constexpr std::uint32_t M0 = 0xD2511F53u, M1 = 0xCD9E8D57u;
    constexpr std::uint32_t W0 = 0x9E3779B9u, W1 = 0xBB67AE85u;
    for (int r = 0; r < 10; ++r) {
      std::uint32_t lo0 = M0 * c[0], hi0 = mulhi(M0, c[0]);
      std::uint32_t lo1 = M1 * c[2], hi1 = mulhi(M1, c[2]);
      c = Ctr{hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
      k[0] += W0;
      k[1] += W1;
    }
    return c;
  }

  void bump() {
    if (++ctr_[0] == 0) ++ctr_[1];
  }

  Key key_;
  Ctr ctr_;
  Ctr block_{};
  int have_ = 0;
};

}  // namespace cslp
