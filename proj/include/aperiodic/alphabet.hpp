#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace aperiodic {

using Symbol = std::uint8_t;

/**
 * Finite single-site symbol set, optionally equipped with a spin map.
 *
 * Symbols are stored as small integer indices everywhere; the spin map
 * translates a symbol into a real (usually +-1) value only at the numeric
 * boundary (correlations, spectra, overlaps).  Operations that need
 * numeric values reject alphabets without a spin map instead of inventing
 * an encoding, because the choice of weights changes the spectrum.
 */
class Alphabet {
 public:
  Alphabet(std::vector<std::string> symbols,
           std::optional<std::vector<double>> spins = std::nullopt)
      : symbols_(std::move(symbols)), spins_(std::move(spins)) {
    if (symbols_.size() < 2) throw std::invalid_argument("alphabet needs at least 2 symbols");
    if (symbols_.size() > 255) throw std::invalid_argument("alphabet too large");
    std::unordered_set<std::string> seen;
    for (const auto& s : symbols_) {
      if (!seen.insert(s).second) throw std::invalid_argument("duplicate symbol label: " + s);
    }
    if (spins_ && spins_->size() != symbols_.size())
      throw std::invalid_argument("spin map must cover every symbol");
  }

  std::size_t size() const { return symbols_.size(); }
  const std::string& label(Symbol s) const { return symbols_.at(s); }
  const std::vector<std::string>& labels() const { return symbols_; }

  Symbol index(const std::string& label) const {
    for (std::size_t i = 0; i < symbols_.size(); ++i)
      if (symbols_[i] == label) return static_cast<Symbol>(i);
    throw std::invalid_argument("unknown symbol label: " + label);
  }

  bool has_spins() const { return spins_.has_value(); }
  double spin(Symbol s) const {
    if (!spins_) throw std::invalid_argument("alphabet has no spin map");
    return (*spins_).at(s);
  }
  const std::vector<double>* spins() const { return spins_ ? &*spins_ : nullptr; }

  bool operator==(const Alphabet& o) const {
    return symbols_ == o.symbols_ && spins_ == o.spins_;
  }

  /// Two-symbol +-1 alphabet with labels "+", "-".
  static Alphabet plus_minus() {
    return Alphabet({"+", "-"}, std::vector<double>{+1.0, -1.0});
  }

  /// Binary digit alphabet {0,1} with spins (-1)^digit.
  static Alphabet binary_digits() {
    return Alphabet({"0", "1"}, std::vector<double>{+1.0, -1.0});
  }

  /// Two-letter alphabet {a,b} with spins a -> +1, b -> -1.
  static Alphabet ab() {
    return Alphabet({"a", "b"}, std::vector<double>{+1.0, -1.0});
  }

 private:
  std::vector<std::string> symbols_;
  std::optional<std::vector<double>> spins_;
};

}  // namespace aperiodic
