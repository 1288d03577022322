#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "aperiodic/alphabet.hpp"
#include "aperiodic/window.hpp"

namespace aperiodic {

/**
 * A substitution (rewriting rule) on a finite alphabet.  Iterating the rule
 * from a seed word generates self-similar infinite words; the built-in
 * systems (Thue-Morse, Fibonacci, period-doubling) are primitive, which is
 * checked at construction.
 */
struct SubstitutionSystem {
  Alphabet alphabet;
  std::vector<std::vector<Symbol>> rules;  // rules[s] = image word of symbol s
  std::string name;

  SubstitutionSystem(Alphabet a, std::vector<std::vector<Symbol>> r, std::string n)
      : alphabet(std::move(a)), rules(std::move(r)), name(std::move(n)) {
    if (rules.size() != alphabet.size())
      throw std::invalid_argument("substitution must define a rule for every symbol");
    for (const auto& img : rules) {
      if (img.empty()) throw std::invalid_argument("empty rule image in substitution " + name);
      for (Symbol s : img)
        if (s >= alphabet.size())
          throw std::invalid_argument("rule image uses symbol outside alphabet");
    }
  }

  /// Builds a system from label-level rules, e.g. {{"0","01"},{"1","10"}}.
  static SubstitutionSystem from_labels(Alphabet a,
                                        const std::vector<std::pair<std::string, std::string>>& r,
                                        std::string n) {
    std::vector<std::vector<Symbol>> rules(a.size());
    std::vector<bool> defined(a.size(), false);
    for (const auto& [lhs, rhs] : r) {
      Symbol s = a.index(lhs);
      std::vector<Symbol> img;
      for (char c : rhs) img.push_back(a.index(std::string(1, c)));
      rules[s] = std::move(img);
      defined[s] = true;
    }
    for (std::size_t s = 0; s < a.size(); ++s)
      if (!defined[s]) throw std::invalid_argument("missing rule for symbol " + a.label(static_cast<Symbol>(s)));
    return SubstitutionSystem(std::move(a), std::move(rules), std::move(n));
  }
};

/// True if some power of the substitution maps every symbol to a word
/// containing every symbol.
inline bool is_primitive(const SubstitutionSystem& sys) {
  const std::size_t q = sys.alphabet.size();
  // reach[i][j] = symbol j occurs in the current power's image of i
  std::vector<std::vector<bool>> reach(q, std::vector<bool>(q, false));
  for (std::size_t i = 0; i < q; ++i)
    for (Symbol s : sys.rules[i]) reach[i][s] = true;
  for (std::size_t step = 0; step + 1 < 2 * q * q; ++step) {
    bool all = true;
    for (std::size_t i = 0; i < q && all; ++i)
      for (std::size_t j = 0; j < q; ++j)
        if (!reach[i][j]) { all = false; break; }
    if (all) return true;
    std::vector<std::vector<bool>> next(q, std::vector<bool>(q, false));
    for (std::size_t i = 0; i < q; ++i)
      for (std::size_t k = 0; k < q; ++k)
        if (reach[i][k])
          for (Symbol s : sys.rules[k]) next[i][s] = true;
    reach.swap(next);
  }
  return false;
}

namespace detail {

inline std::vector<Symbol> parse_seed_word(const SubstitutionSystem& sys, const std::string& seed) {
  std::vector<Symbol> w;
  for (char c : seed) w.push_back(sys.alphabet.index(std::string(1, c)));
  return w;
}

inline bool grows_from(const SubstitutionSystem& sys, const std::vector<Symbol>& seed) {
  // A word can only grow if some symbol reachable from the seed has an
  // image of length > 1.
  std::vector<bool> reach(sys.alphabet.size(), false);
  std::vector<Symbol> stack(seed.begin(), seed.end());
  while (!stack.empty()) {
    Symbol s = stack.back();
    stack.pop_back();
    if (reach[s]) continue;
    reach[s] = true;
    for (Symbol t : sys.rules[s]) stack.push_back(t);
  }
  for (std::size_t s = 0; s < sys.alphabet.size(); ++s)
    if (reach[s] && sys.rules[s].size() > 1) return true;
  return false;
}

}  // namespace detail

/**
 * Prefix of length `target_len` of the limit word obtained by repeatedly
 * applying the rules to `seed_word`.  Deterministic.  Throws if the
 * substitution cannot grow a word of the requested length.
 */
inline SequenceWindow iterate_substitution(const SubstitutionSystem& sys,
                                           const std::string& seed_word,
                                           std::size_t target_len) {
  if (seed_word.empty()) throw std::invalid_argument("seed word must be nonempty");
  if (target_len < 1) throw std::invalid_argument("target_len must be >= 1");
  std::vector<Symbol> w = detail::parse_seed_word(sys, seed_word);

  if (w.size() < target_len && !detail::grows_from(sys, w)) {
    // Non-growing substitution: valid only if the seed is already a fixed
    // point long enough, which it is not here.
    std::vector<Symbol> once;
    for (Symbol s : w) once.insert(once.end(), sys.rules[s].begin(), sys.rules[s].end());
    throw std::invalid_argument("non-growing substitution '" + sys.name +
                                "': fixed point shorter than target length");
  }

  while (w.size() < target_len) {
    std::vector<Symbol> next;
    next.reserve(w.size() * 2);
    for (Symbol s : w) {
      const auto& img = sys.rules[s];
      next.insert(next.end(), img.begin(), img.end());
      if (next.size() >= target_len + 64) break;  // enough to truncate
    }
    w.swap(next);
  }
  w.resize(target_len);

  Provenance p;
  p.generator = sys.name;
  p.params = {{"seed_word", seed_word}, {"target_len", target_len}};
  return SequenceWindow(sys.alphabet, std::move(w), 0, std::move(p));
}

// ---------------------------------------------------------------------------
// Built-in primitive substitutions.  Spin conventions: digit alphabets map
// digit d to (-1)^d, letter alphabets map a -> +1, b -> -1.
// ---------------------------------------------------------------------------

inline SubstitutionSystem thue_morse() {
  auto sys = SubstitutionSystem::from_labels(Alphabet::binary_digits(),
                                             {{"0", "01"}, {"1", "10"}}, "thue-morse");
  if (!is_primitive(sys)) throw std::logic_error("thue-morse must be primitive");
  return sys;
}

inline SubstitutionSystem fibonacci() {
  auto sys = SubstitutionSystem::from_labels(Alphabet::ab(), {{"a", "ab"}, {"b", "a"}},
                                             "fibonacci");
  if (!is_primitive(sys)) throw std::logic_error("fibonacci must be primitive");
  return sys;
}

inline SubstitutionSystem period_doubling() {
  auto sys = SubstitutionSystem::from_labels(Alphabet::ab(), {{"a", "ab"}, {"b", "aa"}},
                                             "period-doubling");
  if (!is_primitive(sys)) throw std::logic_error("period-doubling must be primitive");
  return sys;
}

/// Default seed word (a fixed-point prolongable symbol) for a built-in system.
inline std::string default_seed_word(const SubstitutionSystem& sys) {
  // Pick a symbol whose image starts with itself, so prefixes stabilize.
  for (std::size_t s = 0; s < sys.alphabet.size(); ++s)
    if (!sys.rules[s].empty() && sys.rules[s][0] == s) return sys.alphabet.label(static_cast<Symbol>(s));
  return sys.alphabet.label(0);
}

}  // namespace aperiodic
