#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "aperiodic/window.hpp"

namespace aperiodic {

/**
 * Exact count of distinct length-n factors (contiguous blocks) in the
 * window.  Refuses n > N/4: an undersampled count silently biases entropy
 * estimates downward.
 */
inline std::size_t word_complexity(const SequenceWindow& window, std::size_t n) {
  const std::size_t N = window.size();
  if (n < 1) throw std::invalid_argument("factor length must be >= 1");
  if (n > N / 4)
    throw std::invalid_argument("factor length exceeds N/4; window too short for a reliable count");
  const char* base = reinterpret_cast<const char*>(window.values().data());
  std::unordered_set<std::string_view> seen;
  seen.reserve(N);
  for (std::size_t i = 0; i + n <= N; ++i) seen.emplace(base + i, n);
  return seen.size();
}

struct EntropyPoint {
  std::size_t n = 0;
  std::size_t complexity = 0;  // p(n)
  double ratio = 0.0;          // log p(n) / n
  double increment = 0.0;      // log p(n) - log p(n-1)
  double proxy = 0.0;          // running minimum of the increments (monotone-corrected)
};

/**
 * Entropy proxy from factor counts.  The `ratio` column is log p(n)/n; the
 * `proxy` column is the increment estimator log p(n) - log p(n-1) with a
 * non-increasing correction applied, which converges much faster (it is 0
 * exactly once p stops growing, e.g. beyond the period of a periodic word)
 * and is the quantity the complexity CLI reports as the entropy estimate.
 * Natural logarithms throughout.
 */
inline std::vector<EntropyPoint> entropy_estimate(const SequenceWindow& window,
                                                  std::size_t n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  if (n_max > window.size() / 4)
    throw std::invalid_argument("n_max exceeds N/4; window too short");
  std::vector<EntropyPoint> out;
  out.reserve(n_max);
  double prev_log = 0.0;  // log p(0) = log 1
  double running_min = std::numeric_limits<double>::infinity();
  for (std::size_t n = 1; n <= n_max; ++n) {
    EntropyPoint pt;
    pt.n = n;
    pt.complexity = word_complexity(window, n);
    const double logp = std::log(static_cast<double>(pt.complexity));
    pt.ratio = logp / static_cast<double>(n);
    pt.increment = logp - prev_log;
    running_min = std::min(running_min, pt.increment);
    pt.proxy = running_min;
    prev_log = logp;
    out.push_back(pt);
  }
  return out;
}

}  // namespace aperiodic
