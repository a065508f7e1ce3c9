#ifndef REMETA_RNG_HPP
#define REMETA_RNG_HPP

#include <cstdint>
#include <random>

namespace remeta {

// Random stream with self-contained distribution transforms so that a given
// stream state always yields the same draw sequence. Copying the object
// copies the full state, including the cached spare normal deviate.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // Uniform on [0, 1) with 53-bit resolution.
  double u01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * u01(); }

  long uniform_int(long lo, long hi);  // inclusive endpoints

  double normal();
  double normal(double mean, double sd) { return mean + sd * normal(); }

  double exponential(double rate);

  double gamma(double shape, double rate);

  double beta(double a, double b);

  int binomial(int m, double p);

 private:
  std::mt19937_64 eng_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Counter-style derivation of a stream seed from a (master, scenario, rep,
// chain) tuple. Distinct tuples give distinct, well-mixed seeds regardless
// of how work is scheduled across workers.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t scenario,
                          std::uint64_t rep, std::uint64_t chain);

inline Rng seed_stream(std::uint64_t master, std::uint64_t scenario,
                       std::uint64_t rep, std::uint64_t chain) {
  return Rng(derive_seed(master, scenario, rep, chain));
}

}  // namespace remeta

#endif  // REMETA_RNG_HPP
