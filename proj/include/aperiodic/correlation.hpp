#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "aperiodic/fft.hpp"
#include "aperiodic/sequences.hpp"
#include "aperiodic/window.hpp"

namespace aperiodic {

/**
 * Windowed pair-correlation estimates gamma(n) = (1/(N-n)) sum_i s_i s_{i+n}.
 * Normalizing by N-n (not N) keeps every lag an unbiased window average.
 */
struct Autocorrelation {
  std::vector<double> values;  // index = lag, 0..max_lag
  std::size_t n = 0;           // sample size used

  std::size_t max_lag() const { return values.size() - 1; }
  double value(std::size_t lag) const { return values.at(lag); }
};

namespace detail {

inline std::vector<double> require_spins(const SequenceWindow& w) {
  if (!w.numeric())
    throw std::invalid_argument("autocorrelation needs a numeric window (alphabet with spin map)");
  return w.spins();
}

inline Autocorrelation autocorrelation_direct(std::span<const double> s, std::size_t max_lag) {
  const std::size_t N = s.size();
  Autocorrelation ac;
  ac.n = N;
  ac.values.resize(max_lag + 1);
  for (std::size_t lag = 0; lag <= max_lag; ++lag) {
    double sum = 0.0;
    for (std::size_t i = 0; i + lag < N; ++i) sum += s[i] * s[i + lag];
    ac.values[lag] = sum / static_cast<double>(N - lag);
  }
  return ac;
}

inline Autocorrelation autocorrelation_fft(std::span<const double> s, std::size_t max_lag) {
  const std::size_t N = s.size();
  const std::size_t P = next_pow2(N + max_lag + 1);
  std::vector<std::complex<double>> buf(P, 0.0);
  for (std::size_t i = 0; i < N; ++i) buf[i] = s[i];
  fft_inplace(buf, false);
  for (auto& x : buf) x = std::complex<double>(std::norm(x), 0.0);
  fft_inplace(buf, true);
  Autocorrelation ac;
  ac.n = N;
  ac.values.resize(max_lag + 1);
  for (std::size_t lag = 0; lag <= max_lag; ++lag)
    ac.values[lag] = buf[lag].real() / static_cast<double>(N - lag);
  return ac;
}

}  // namespace detail

/**
 * Estimates gamma(n) for n = 0..max_lag.  Uses direct summation for small
 * lag counts and an FFT correlation beyond 1000 lags; the two paths agree
 * to 1e-10 (tested), so the switch is purely a performance matter.
 */
inline Autocorrelation autocorrelation(const SequenceWindow& window, std::size_t max_lag) {
  const std::size_t N = window.size();
  if (max_lag > N / 10)
    throw std::invalid_argument("max_lag must be at most N/10 for a stable estimate");
  std::vector<double> s = detail::require_spins(window);
  if (max_lag > 1000) return detail::autocorrelation_fft(s, max_lag);
  return detail::autocorrelation_direct(s, max_lag);
}

/**
 * Exact autocorrelation of the +-1 Thue-Morse sequence, from the dyadic
 * recursion gamma(2n) = gamma(n), gamma(2n+1) = -(gamma(n)+gamma(n+1))/2
 * with gamma(0) = 1 (test oracle; exact rational arithmetic).  Evaluated on
 * adjacent pairs so the recursion depth is log2(n) with no memo state.
 */
namespace detail {
// (gamma(m), gamma(m+1)) of the Thue-Morse autocorrelation, exact.
inline std::pair<boost::rational<long long>, boost::rational<long long>> tm_gamma_pair(
    std::uint64_t m) {
  using Rat = boost::rational<long long>;
  if (m == 0) return {Rat(1), Rat(-1, 3)};  // gamma(1) solves g = -(1 + g)/2
  auto [g0, g1] = tm_gamma_pair(m / 2);
  Rat odd = -(g0 + g1) / 2;                  // gamma at 2*(m/2) + 1
  if (m % 2 == 0) return {g0, odd};          // (gamma(2k), gamma(2k+1))
  return {odd, g1};                          // (gamma(2k+1), gamma(2k+2)) with gamma(2k+2)=gamma(k+1)
}
}  // namespace detail

inline boost::rational<long long> tm_autocorrelation_oracle(std::uint64_t n) {
  if (n == 0) return boost::rational<long long>(1);
  return detail::tm_gamma_pair(n).first;
}

inline double tm_autocorrelation_oracle_value(std::uint64_t n) {
  return boost::rational_cast<double>(tm_autocorrelation_oracle(n));
}

/**
 * A bounded observable on length-w blocks.  The callable also receives the
 * absolute lattice index of the block start, so index-locked observables
 * (e.g. the dimer-start indicator) fit the same interface.
 */
struct ObservableSpec {
  std::size_t block_len = 1;
  std::string name;
  std::function<double(std::span<const Symbol>, std::int64_t)> fn;
};

inline ObservableSpec obs_one() {
  return {1, "one", [](std::span<const Symbol>, std::int64_t) { return 1.0; }};
}

inline ObservableSpec obs_spin(const Alphabet& alphabet) {
  if (!alphabet.has_spins()) throw std::invalid_argument("spin observable needs a spin map");
  std::vector<double> lut = *alphabet.spins();
  return {1, "spin",
          [lut](std::span<const Symbol> b, std::int64_t) { return lut[b[0]]; }};
}

inline ObservableSpec obs_indicator(const Alphabet& alphabet, const std::string& label) {
  Symbol target = alphabet.index(label);
  return {1, "indicator:" + label,
          [target](std::span<const Symbol> b, std::int64_t) { return b[0] == target ? 1.0 : 0.0; }};
}

/// Indicator of sites where an aligned dimer block starts.
inline ObservableSpec obs_dimer_start(DimerParity parity) {
  const std::int64_t want = parity == DimerParity::Even ? 0 : 1;
  return {1, std::string("dimer-start-") + to_string(parity),
          [want](std::span<const Symbol>, std::int64_t abs_index) {
            return (((abs_index % 2) + 2) % 2) == want ? 1.0 : 0.0;
          }};
}

/// Spatial (Birkhoff) average of the observable over all block positions.
inline double birkhoff_average(const SequenceWindow& window, const ObservableSpec& obs) {
  if (obs.block_len < 1 || obs.block_len > window.size())
    throw std::invalid_argument("observable block length out of range");
  const std::size_t count = window.size() - obs.block_len + 1;
  std::span<const Symbol> vals = window.values();
  double sum = 0.0;
  for (std::size_t i = 0; i < count; ++i)
    sum += obs.fn(vals.subspan(i, obs.block_len), window.offset() + static_cast<std::int64_t>(i));
  return sum / static_cast<double>(count);
}

}  // namespace aperiodic
