#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "aperiodic/alphabet.hpp"
#include "aperiodic/rng.hpp"
#include "aperiodic/window.hpp"

namespace aperiodic {

namespace detail {

using Int128 = __int128;
using UInt128 = unsigned __int128;

/// Exact floor of sqrt(v) for v >= 0.
inline Int128 isqrt128(Int128 v) {
  if (v < 0) throw std::invalid_argument("isqrt of negative value");
  if (v == 0) return 0;
  auto s = static_cast<Int128>(std::sqrt(static_cast<long double>(v)));
  while (s > 0 && s * s > v) --s;
  while ((s + 1) * (s + 1) <= v) ++s;
  return s;
}

/// Sign of T + B*sqrt(D) with D a positive non-square, exact.
inline int sign_plus_root(Int128 T, Int128 B, std::int64_t D) {
  if (B == 0) return T > 0 ? 1 : (T < 0 ? -1 : 0);
  if (T >= 0 && B > 0) return 1;
  if (T <= 0 && B < 0) return -1;
  // Opposite signs: compare T^2 against D*B^2 (both nonzero).
  Int128 t2 = T * T;
  Int128 db2 = static_cast<Int128>(D) * B * B;
  if (T > 0) return t2 > db2 ? 1 : (t2 < db2 ? -1 : 0);
  return t2 < db2 ? 1 : (t2 > db2 ? -1 : 0);
}

/// Exact floor((X + B*sqrt(D)) / C) with C > 0 and D non-square (or B == 0).
inline Int128 floor_quadratic(Int128 X, Int128 B, std::int64_t D, Int128 C) {
  auto floor_div = [](Int128 num, Int128 den) {
    Int128 q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
    return q;
  };
  if (B == 0) return floor_div(X, C);
  Int128 S = isqrt128(static_cast<Int128>(D) * B * B);
  // B*sqrt(D) lies strictly inside (S, S+1) for B > 0 and (-(S+1), -S) for B < 0.
  if (B > 0) return floor_div(X + S, C);
  return floor_div(X - S - 1, C);
}

}  // namespace detail

/**
 * A rotation number held exactly as (a + b*sqrt(D)) / c with integer a, b,
 * c > 0 and D a non-square positive integer (b = 0 gives a plain rational).
 * All Sturmian words are produced by integer arithmetic on this
 * representation, so floor-function evaluations are exact; doubles enter
 * only for display.  Generic doubles are quantized to a dyadic rational
 * with 2^40 denominator, which behaves irrationally for every window this
 * library can hold.
 */
struct RotationNumber {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 1;
  std::int64_t D = 5;
  bool quantized = false;  // produced by from_double; exempt from the periodic-flag rule

  double value() const {
    return (static_cast<double>(a) + static_cast<double>(b) * std::sqrt(static_cast<double>(D))) /
           static_cast<double>(c);
  }

  bool is_rational() const { return b == 0; }

  static RotationNumber rational(std::int64_t p, std::int64_t q) {
    if (q <= 0) throw std::invalid_argument("rational rotation number needs q > 0");
    return RotationNumber{p, 0, q, 5, false};
  }

  /// 2 - golden ratio = (3 - sqrt(5)) / 2, the Fibonacci rotation number.
  static RotationNumber golden() { return RotationNumber{3, -1, 2, 5, false}; }

  static RotationNumber quadratic(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t D) {
    if (c <= 0) throw std::invalid_argument("quadratic rotation number needs c > 0");
    std::int64_t r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(D))));
    if (D <= 0 || r * r == D) throw std::invalid_argument("D must be a positive non-square");
    return RotationNumber{a, b, c, D, false};
  }

  /// Quantizes x to p / 2^40.  Values indistinguishable from a small-denominator
  /// rational are rejected unless the caller really wants a periodic word.
  static RotationNumber from_double(double x) {
    const std::int64_t den = std::int64_t{1} << 40;
    auto p = static_cast<std::int64_t>(std::llround(x * static_cast<double>(den)));
    RotationNumber r{p, 0, den, 5, true};
    return r;
  }

  /// True when the value is (within 2^-40) a rational with denominator <= max_den.
  bool near_small_rational(std::int64_t max_den = 1024) const {
    if (!is_rational()) return false;
    double x = value();
    for (std::int64_t q = 1; q <= max_den; ++q) {
      double scaled = x * static_cast<double>(q);
      if (std::abs(scaled - std::llround(scaled)) < 1e-9 * static_cast<double>(q)) return true;
    }
    return false;
  }
};

/**
 * Parameters of a Sturmian (mechanical) word s_n = floor((n+1)a + b) - floor(na + b).
 * Rational alpha is allowed only with the explicit `periodic` flag; doubles
 * quantized by RotationNumber::from_double are treated as irrational to
 * working precision.
 */
struct SturmianParams {
  RotationNumber alpha = RotationNumber::golden();
  std::int64_t beta_num = 0;
  std::int64_t beta_den = 1;
  bool periodic = false;

  void validate() const {
    double av = alpha.value();
    if (!(av > 0.0 && av < 1.0)) throw std::invalid_argument("alpha must lie in (0,1)");
    if (beta_den <= 0 || beta_num < 0 || beta_num >= beta_den)
      throw std::invalid_argument("beta must lie in [0,1) as beta_num/beta_den");
    if (alpha.is_rational() && !alpha.quantized && !periodic)
      throw std::invalid_argument(
          "rational alpha generates a periodic word; pass the periodic flag to accept that");
    if (alpha.near_small_rational() && !alpha.quantized && !periodic)
      throw std::invalid_argument("alpha is rational to working precision; use the periodic flag");
  }
};

/**
 * Exact incremental generator of the mechanical word.  Maintains
 * R_n = frac(n*alpha + beta) = (A + B*sqrt(D)) / C in integers and emits
 * s_n = [R_n + alpha >= 1].
 */
class SturmianGenerator {
 public:
  SturmianGenerator(const SturmianParams& params, std::int64_t first_index)
      : D_(params.alpha.D) {
    params.validate();
    const auto a = static_cast<detail::Int128>(params.alpha.a);
    const auto b = static_cast<detail::Int128>(params.alpha.b);
    const auto c = static_cast<detail::Int128>(params.alpha.c);
    const auto p = static_cast<detail::Int128>(params.beta_num);
    const auto q = static_cast<detail::Int128>(params.beta_den);
    C_ = c * q;
    step_a_ = a * q;
    step_b_ = b * q;
    const auto n0 = static_cast<detail::Int128>(first_index);
    detail::Int128 X = n0 * step_a_ + p * c;
    B_ = n0 * step_b_;
    check_magnitude(B_ + step_b_);
    detail::Int128 K = detail::floor_quadratic(X, B_, D_, C_);
    A_ = X - K * C_;
  }

  /// Emits s_n for the current index n, then advances to n + 1.
  Symbol next() {
    A_ += step_a_;
    B_ += step_b_;
    check_magnitude(B_);
    int sgn = detail::sign_plus_root(A_ - C_, B_, D_);
    if (sgn >= 0) {
      // R + alpha >= 1: fractional part wrapped, emit 1.
      A_ -= C_;
      return 1;
    }
    return 0;
  }

 private:
  void check_magnitude(detail::Int128 B) const {
    const detail::Int128 limit = static_cast<detail::Int128>(4) * 1000000000 * 1000000000;  // 4e18
    if (B > limit || B < -limit)
      throw std::invalid_argument("sturmian window too long for this beta precision");
  }

  std::int64_t D_;
  detail::Int128 A_ = 0, B_ = 0, C_ = 1;
  detail::Int128 step_a_ = 0, step_b_ = 0;
};

/**
 * Mechanical word s_n = floor((n+1)alpha + beta) - floor(n alpha + beta) for
 * n = first_index .. first_index + N - 1, over the digit alphabet {0,1}.
 */
inline SequenceWindow sturmian_word(const SturmianParams& params, std::size_t N,
                                    std::int64_t first_index = 0) {
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  SturmianGenerator gen(params, first_index);
  std::vector<Symbol> vals(N);
  for (std::size_t i = 0; i < N; ++i) vals[i] = gen.next();
  Provenance prov;
  prov.generator = "sturmian";
  prov.params = {{"a", params.alpha.a},       {"b", params.alpha.b},
                 {"c", params.alpha.c},       {"D", params.alpha.D},
                 {"quantized", params.alpha.quantized},
                 {"beta_num", params.beta_num}, {"beta_den", params.beta_den},
                 {"periodic", params.periodic}, {"first_index", first_index},
                 {"N", N}};
  return SequenceWindow(Alphabet::binary_digits(), std::move(vals), first_index, std::move(prov));
}

// ---------------------------------------------------------------------------
// Automatic sequences evaluated directly from the index.
// ---------------------------------------------------------------------------

/// Rudin-Shapiro sign at index n >= 0: parity of the number of (possibly
/// overlapping) "11" blocks in the binary expansion.
inline int rudin_shapiro_sign(std::uint64_t n) {
  int pairs = std::popcount(n & (n >> 1));
  return (pairs & 1) ? -1 : +1;
}

inline SequenceWindow rudin_shapiro(std::size_t N, std::int64_t first_index = 0) {
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  if (first_index < 0) throw std::invalid_argument("rudin-shapiro indices start at 0");
  Alphabet a = Alphabet::plus_minus();
  std::vector<Symbol> vals(N);
  for (std::size_t i = 0; i < N; ++i) {
    auto n = static_cast<std::uint64_t>(first_index) + i;
    vals[i] = rudin_shapiro_sign(n) > 0 ? 0 : 1;
  }
  Provenance prov;
  prov.generator = "rudin-shapiro";
  prov.params = {{"first_index", first_index}, {"N", N}};
  return SequenceWindow(std::move(a), std::move(vals), first_index, std::move(prov));
}

/// Regular paperfolding digit for n >= 1: write n = 2^k * m with m odd;
/// the digit is 1 when m = 1 (mod 4) and 0 otherwise.
inline int paperfolding_digit(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("paperfolding is defined for n >= 1");
  std::uint64_t m = n >> std::countr_zero(n);
  return (m & 3u) == 1u ? 1 : 0;
}

/// Regular paperfolding sequence; window position i holds the digit for
/// n = shift + i + 1 (index 0 maps to n = 1).
inline SequenceWindow paperfolding(std::size_t N, std::int64_t shift = 0) {
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  if (shift < 0) throw std::invalid_argument("paperfolding shift must be >= 0");
  std::vector<Symbol> vals(N);
  for (std::size_t i = 0; i < N; ++i)
    vals[i] = static_cast<Symbol>(paperfolding_digit(static_cast<std::uint64_t>(shift) + i + 1));
  Provenance prov;
  prov.generator = "paperfolding";
  prov.params = {{"shift", shift}, {"N", N}};
  return SequenceWindow(Alphabet::binary_digits(), std::move(vals), shift, std::move(prov));
}

// ---------------------------------------------------------------------------
// Stochastic systems (seeded, bit-reproducible).
// ---------------------------------------------------------------------------

enum class DimerParity { Even, Odd };

inline const char* to_string(DimerParity p) { return p == DimerParity::Even ? "even" : "odd"; }

struct DimerParams {
  DimerParity parity = DimerParity::Even;
  std::uint64_t seed = 0;
};

/**
 * Random dimer configuration: each aligned block is (+1,-1) or (-1,+1) with
 * probability 1/2, independently.  Even parity puts blocks on [2n, 2n+1],
 * odd parity on [2n-1, 2n].  Block signs are a pure function of
 * (seed, block id), so any sub-window is reproducible.
 */
inline SequenceWindow dimer_sample(const DimerParams& params, std::size_t N,
                                   std::int64_t first_index = 0) {
  if (N < 1 || N % 2 != 0) throw std::invalid_argument("dimer windows need even N");
  Alphabet a = Alphabet::plus_minus();
  std::vector<Symbol> vals(N);
  for (std::size_t i = 0; i < N; ++i) {
    std::int64_t site = first_index + static_cast<std::int64_t>(i);
    // Block id containing `site`, and whether the site is the block's left half.
    std::int64_t block;
    bool left;
    if (params.parity == DimerParity::Even) {
      block = site >= 0 ? site / 2 : (site - 1) / 2;
      left = (site - 2 * block) == 0;
    } else {
      block = (site + 1) >= 0 ? (site + 1) / 2 : site / 2;
      left = (site - (2 * block - 1)) == 0;
    }
    std::uint64_t bits = derive_seed(params.seed, static_cast<std::uint64_t>(block + (1LL << 62)));
    bool left_plus = (bits & 1u) != 0;
    bool plus = left ? left_plus : !left_plus;
    vals[i] = plus ? 0 : 1;
  }
  Provenance prov;
  prov.generator = "dimer";
  prov.seed = params.seed;
  prov.params = {{"parity", to_string(params.parity)}, {"first_index", first_index}, {"N", N}};
  return SequenceWindow(std::move(a), std::move(vals), first_index, std::move(prov));
}

/// I.i.d. uniform +-1 window (control system).
inline SequenceWindow iid_spins(std::uint64_t seed, std::size_t N, std::int64_t first_index = 0) {
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  Alphabet a = Alphabet::plus_minus();
  std::vector<Symbol> vals(N);
  for (std::size_t i = 0; i < N; ++i) {
    std::uint64_t bits =
        derive_seed(seed, static_cast<std::uint64_t>(first_index + static_cast<std::int64_t>(i) + (1LL << 62)));
    vals[i] = (bits & 1u) ? 1 : 0;
  }
  Provenance prov;
  prov.generator = "iid";
  prov.seed = seed;
  prov.params = {{"first_index", first_index}, {"N", N}};
  return SequenceWindow(std::move(a), std::move(vals), first_index, std::move(prov));
}

}  // namespace aperiodic
