#pragma once

#include <cstdint>
#include <string>

#include "cmpair/cm.hpp"
#include "cmpair/section.hpp"
#include "cmpair/trace_word.hpp"
#include "cmpair/types.hpp"

namespace cmpair {

/// splitmix64 stream. Self-contained so that seeded runs are byte-identical
/// across platforms (the standard distributions are not).
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  int uniform_int(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(next_u64() % static_cast<uint64_t>(hi - lo + 1));
  }

  /// Independent stream for one trial of a seeded suite.
  static Rng for_trial(uint64_t seed, uint64_t trial);

 private:
  uint64_t state_;
};

/// Raised when rejection sampling exhausts its resample budget.
struct SamplingExhausted : Error {
  using Error::Error;
};

Matrix random_matrix(Rng& rng, int n, double lo = -1.0, double hi = 1.0);
Matrix random_invertible(Rng& rng, int n, double max_cond = 1e3);
Matrix random_trace_free(Rng& rng, int n);

PhasePoint random_phase_point(Rng& rng, int n);

/// Entries i.i.d. uniform on [-1,1], resampled until membership in the open
/// set holds with margin `tol`. Throws SamplingExhausted after max_resamples.
PhasePoint random_point_in_M(Rng& rng, int n, double tol = 1e-5, int max_resamples = 10000);

SectionPoint random_section_point(Rng& rng, int n, double tol = 1e-5, int max_resamples = 10000);

/// Well-separated ordered particles whose embedded pair lies in the open set.
CMState random_cm_state(Rng& rng, int n, int max_resamples = 10000);

QPrimeData random_qprime(Rng& rng, int n);

std::string random_word(Rng& rng, int min_len, int max_len);
TraceExpr random_trace_expr(Rng& rng, int max_terms, int max_len);

}  // namespace cmpair
