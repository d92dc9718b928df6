#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

namespace rsdca {

// Philox4x32-10 counter-based generator (Salmon et al., SC'11). Output is a
// pure function of (key, counter), so streams keyed by (seed, stream) are
// reproducible across platforms and independent of generation order.
class Philox {
 public:
  explicit Philox(uint64_t seed, uint64_t stream = 0) {
    key_[0] = static_cast<uint32_t>(seed);
    key_[1] = static_cast<uint32_t>(seed >> 32);
    ctr_ = {0, 0, static_cast<uint32_t>(stream),
            static_cast<uint32_t>(stream >> 32)};
  }

  uint32_t next_u32() {
    if (pos_ == 4) refill();
    return out_[pos_++];
  }

  uint64_t next_u64() {
    uint64_t lo = next_u32();
    return lo | (static_cast<uint64_t>(next_u32()) << 32);
  }

  // Uniform on [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller (second value cached).
  double next_gaussian() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    double u1 = next_double();
    while (u1 <= 0.0) u1 = next_double();
    double u2 = next_double();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * std::numbers::pi * u2;
    cached_ = r * std::sin(a);
    have_cached_ = true;
    return r * std::cos(a);
  }

  // Uniform integer in [0, bound) by rejection; bound must be positive.
  uint64_t next_below(uint64_t bound) {
    uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  static void round(std::array<uint32_t, 4>& c, std::array<uint32_t, 2>& k) {
    constexpr uint32_t m0 = 0xD2511F53, m1 = 0xCD9E8D57;
    uint64_t p0 = static_cast<uint64_t>(m0) * c[0];
    uint64_t p1 = static_cast<uint64_t>(m1) * c[2];
    std::array<uint32_t, 4> r;
    r[0] = static_cast<uint32_t>(p1 >> 32) ^ c[1] ^ k[0];
    r[1] = static_cast<uint32_t>(p1);
    r[2] = static_cast<uint32_t>(p0 >> 32) ^ c[3] ^ k[1];
    r[3] = static_cast<uint32_t>(p0);
    c = r;
    k[0] += 0x9E3779B9;
    k[1] += 0xBB67AE85;
  }

  void refill() {
    out_ = ctr_;
    std::array<uint32_t, 2> k = key_;
    for (int i = 0; i < 10; ++i) round(out_, k);
    if (++ctr_[0] == 0 && ++ctr_[1] == 0) ++ctr_[2];
    pos_ = 0;
  }

  std::array<uint32_t, 4> ctr_;
  std::array<uint32_t, 2> key_;
  std::array<uint32_t, 4> out_{};
  int pos_ = 4;
  double cached_ = 0.0;
  bool have_cached_ = false;
};

// Inverse-CDF sampling from a fixed discrete distribution.
class DiscreteSampler {
 public:
  DiscreteSampler() = default;  // empty; must be assigned before sampling

  explicit DiscreteSampler(std::span<const double> probs) {
    if (probs.empty()) throw std::invalid_argument("empty distribution");
    cum_.resize(probs.size());
    double acc = 0.0;
    for (size_t i = 0; i < probs.size(); ++i) {
      if (probs[i] < 0.0) throw std::invalid_argument("negative probability");
      acc += probs[i];
      cum_[i] = acc;
    }
    if (std::abs(acc - 1.0) > 1e-9)
      throw std::invalid_argument("probabilities sum to " + std::to_string(acc));
    cum_.back() = 1.0;
  }

  int sample(Philox& rng) const {
    if (cum_.empty()) throw std::logic_error("DiscreteSampler: empty");
    double u = rng.next_double();
    auto it = std::lower_bound(cum_.begin(), cum_.end(), u);
    if (it == cum_.end()) --it;
    return static_cast<int>(it - cum_.begin());
  }

  std::span<const double> cumulative() const { return cum_; }

 private:
  std::vector<double> cum_;
};

}  // namespace rsdca
