#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "aperiodic/alphabet.hpp"
#include "aperiodic/sequences.hpp"
#include "aperiodic/window.hpp"

namespace aperiodic {

/**
 * Sliding-block code: maps every length-w block of the input to one output
 * symbol.  Table-backed codes throw (naming the offending block) when a
 * block without an image occurs; function-backed codes may also consult
 * the absolute lattice index, which is how index-locked observables such
 * as the dimer-start indicator are expressed.
 */
struct FactorMap {
  std::size_t block_len;
  Alphabet out_alphabet;
  std::string name;
  std::function<Symbol(std::span<const Symbol>, std::int64_t)> fn;

  static FactorMap from_table(std::size_t block_len, Alphabet in, Alphabet out,
                              const std::map<std::string, std::string>& table, std::string name) {
    std::map<std::vector<Symbol>, Symbol> compiled;
    for (const auto& [block, image] : table) {
      if (block.size() != block_len)
        throw std::invalid_argument("table block '" + block + "' has wrong length");
      std::vector<Symbol> key;
      for (char c : block) key.push_back(in.index(std::string(1, c)));
      compiled[key] = out.index(image);
    }
    auto lookup = [compiled, in](std::span<const Symbol> block, std::int64_t) -> Symbol {
      std::vector<Symbol> key(block.begin(), block.end());
      auto it = compiled.find(key);
      if (it == compiled.end()) {
        std::string labels;
        for (Symbol s : block) labels += in.label(s);
        throw std::invalid_argument("block '" + labels + "' has no image under the factor map");
      }
      return it->second;
    };
    return FactorMap{block_len, std::move(out), std::move(name), std::move(lookup)};
  }
};

/// Applies a sliding-block code; output has length N - block_len + 1 and
/// keeps the input offset (position i describes the block starting there).
inline SequenceWindow factor_map(const SequenceWindow& window, const FactorMap& code) {
  if (code.block_len < 1) throw std::invalid_argument("block length must be >= 1");
  if (code.block_len > window.size())
    throw std::invalid_argument("block length exceeds window length");
  const std::size_t out_len = window.size() - code.block_len + 1;
  std::vector<Symbol> out(out_len);
  std::span<const Symbol> vals = window.values();
  for (std::size_t i = 0; i < out_len; ++i) {
    out[i] = code.fn(vals.subspan(i, code.block_len),
                     window.offset() + static_cast<std::int64_t>(i));
  }
  Provenance prov;
  prov.generator = "factor";
  prov.params = {{"map", code.name}, {"parent", window.provenance().to_json()}};
  return SequenceWindow(code.out_alphabet, std::move(out), window.offset(), std::move(prov));
}

// ---------------------------------------------------------------------------
// Built-in codes.
// ---------------------------------------------------------------------------

/// Thue-Morse -> period-doubling: emit a where consecutive symbols differ, b
/// where they repeat.
inline FactorMap tm_to_period_doubling() {
  return FactorMap::from_table(2, Alphabet::binary_digits(), Alphabet::ab(),
                               {{"01", "a"}, {"10", "a"}, {"00", "b"}, {"11", "b"}},
                               "tm-to-pd");
}

inline FactorMap identity_code(const Alphabet& alphabet) {
  return FactorMap{1, alphabet, "identity",
                   [](std::span<const Symbol> block, std::int64_t) { return block[0]; }};
}

/// Indicator of dimer block starts: 1 on sites where an aligned block begins
/// (even sites for even parity, odd sites for odd parity), 0 elsewhere.
inline FactorMap dimer_start_code(DimerParity parity) {
  const std::int64_t want = parity == DimerParity::Even ? 0 : 1;
  return FactorMap{1, Alphabet::binary_digits(),
                   std::string("dimer-start-") + to_string(parity),
                   [want](std::span<const Symbol>, std::int64_t abs_index) -> Symbol {
                     std::int64_t r = ((abs_index % 2) + 2) % 2;
                     return r == want ? 1 : 0;
                   }};
}

}  // namespace aperiodic
