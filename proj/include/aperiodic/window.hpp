#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "aperiodic/alphabet.hpp"

namespace aperiodic {

/**
 * Record of how a window was produced: generator name, parameters and RNG
 * seed.  A provenance record is sufficient to regenerate the window
 * bit-exactly (see regenerate.hpp), which is what makes every experiment
 * in this library reproducible from its manifest.
 */
struct Provenance {
  std::string generator;
  nlohmann::json params = nlohmann::json::object();
  std::uint64_t seed = 0;

  nlohmann::json to_json() const {
    return {{"generator", generator}, {"params", params}, {"seed", seed}};
  }

  static Provenance from_json(const nlohmann::json& j) {
    Provenance p;
    p.generator = j.at("generator").get<std::string>();
    p.params = j.at("params");
    p.seed = j.at("seed").get<std::uint64_t>();
    return p;
  }
};

/**
 * A finite sample of a bi-infinite symbolic configuration.
 *
 * Immutable after construction; safe to share across threads.  `offset` is
 * the absolute index of the first entry, so window position i corresponds
 * to lattice site offset + i.
 */
class SequenceWindow {
 public:
  SequenceWindow(Alphabet alphabet, std::vector<Symbol> values, std::int64_t offset,
                 Provenance prov)
      : alphabet_(std::move(alphabet)),
        values_(std::move(values)),
        offset_(offset),
        prov_(std::move(prov)) {
    if (values_.empty()) throw std::invalid_argument("window must have at least one entry");
    for (Symbol v : values_)
      if (v >= alphabet_.size()) throw std::invalid_argument("window value outside alphabet");
  }

  std::size_t size() const { return values_.size(); }
  std::int64_t offset() const { return offset_; }
  const Alphabet& alphabet() const { return alphabet_; }
  const Provenance& provenance() const { return prov_; }

  Symbol symbol(std::size_t i) const { return values_[i]; }
  const std::string& label(std::size_t i) const { return alphabet_.label(values_[i]); }
  std::span<const Symbol> values() const { return values_; }

  bool numeric() const { return alphabet_.has_spins(); }

  double spin(std::size_t i) const { return alphabet_.spin(values_[i]); }

  /// Materializes the +-1 (or general real) spin values of the window.
  std::vector<double> spins() const {
    if (!alphabet_.has_spins())
      throw std::invalid_argument("window alphabet has no spin map; refusing to auto-encode");
    const std::vector<double>& lut = *alphabet_.spins();
    std::vector<double> out(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) out[i] = lut[values_[i]];
    return out;
  }

  /// Concatenated symbol labels (handy for short windows in tests and CLI output).
  std::string word() const {
    std::string w;
    for (Symbol v : values_) w += alphabet_.label(v);
    return w;
  }

  /// Contiguous sub-window of `len` values starting at position `start`.
  SequenceWindow slice(std::size_t start, std::size_t len, std::int64_t new_offset) const {
    if (start + len > values_.size()) throw std::invalid_argument("slice out of range");
    Provenance p;
    p.generator = "slice";
    p.params = {{"parent", prov_.to_json()},
                {"start", start},
                {"len", len},
                {"parent_offset", offset_},
                {"new_offset", new_offset}};
    std::vector<Symbol> vals(values_.begin() + static_cast<std::ptrdiff_t>(start),
                             values_.begin() + static_cast<std::ptrdiff_t>(start + len));
    return SequenceWindow(alphabet_, std::move(vals), new_offset, std::move(p));
  }

  bool same_values(const SequenceWindow& o) const {
    return values_ == o.values_ && offset_ == o.offset_ && alphabet_ == o.alphabet_;
  }

 private:
  Alphabet alphabet_;
  std::vector<Symbol> values_;
  std::int64_t offset_;
  Provenance prov_;
};

}  // namespace aperiodic
