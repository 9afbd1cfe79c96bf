#ifndef BLOCKDESC_RNG_HPP
#define BLOCKDESC_RNG_HPP

#include <cstdint>
#include <random>

namespace blockdesc {

/// Seeded generator passed explicitly to every randomized step. Never global.
class Rng {
public:
  explicit Rng(std::uint64_t seed = 0) : eng_(seed) {}

  std::uint32_t below(std::uint32_t n) {
    // n == 0 is a caller bug; return 0 to keep callers total.
    if (n <= 1) return 0;
    std::uniform_int_distribution<std::uint32_t> dist(0, n - 1);
    return dist(eng_);
  }

  std::uint64_t raw() { return eng_(); }

  /// Derive an independent stream (per case / per retry).
  Rng fork() { return Rng(eng_() ^ 0x9e3779b97f4a7c15ULL); }

private:
  std::mt19937_64 eng_;
};

}  // namespace blockdesc

#endif
