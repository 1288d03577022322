#pragma once

#include <stdexcept>
#include <string>

#include "aperiodic/factor.hpp"
#include "aperiodic/sequences.hpp"
#include "aperiodic/substitution.hpp"
#include "aperiodic/window.hpp"

namespace aperiodic {

inline SubstitutionSystem builtin_substitution(const std::string& name) {
  if (name == "thue-morse") return thue_morse();
  if (name == "fibonacci") return fibonacci();
  if (name == "period-doubling") return period_doubling();
  throw std::invalid_argument("unknown substitution system: " + name);
}

inline FactorMap builtin_factor_map(const std::string& name) {
  if (name == "tm-to-pd") return tm_to_period_doubling();
  if (name == "dimer-start-even") return dimer_start_code(DimerParity::Even);
  if (name == "dimer-start-odd") return dimer_start_code(DimerParity::Odd);
  throw std::invalid_argument("unknown factor map: " + name);
}

/**
 * Rebuilds a window bit-exactly from its provenance record.  Every named
 * generator in this library is covered, including slices and factor images
 * of generated windows (their provenance embeds the parent record).
 */
inline SequenceWindow regenerate(const Provenance& prov) {
  const std::string& g = prov.generator;
  const nlohmann::json& p = prov.params;
  if (g == "thue-morse" || g == "fibonacci" || g == "period-doubling") {
    return iterate_substitution(builtin_substitution(g), p.at("seed_word").get<std::string>(),
                                p.at("target_len").get<std::size_t>());
  }
  if (g == "sturmian") {
    SturmianParams sp;
    sp.alpha = RotationNumber{p.at("a").get<std::int64_t>(), p.at("b").get<std::int64_t>(),
                              p.at("c").get<std::int64_t>(), p.at("D").get<std::int64_t>(),
                              p.at("quantized").get<bool>()};
    sp.beta_num = p.at("beta_num").get<std::int64_t>();
    sp.beta_den = p.at("beta_den").get<std::int64_t>();
    sp.periodic = p.at("periodic").get<bool>();
    return sturmian_word(sp, p.at("N").get<std::size_t>(), p.at("first_index").get<std::int64_t>());
  }
  if (g == "rudin-shapiro")
    return rudin_shapiro(p.at("N").get<std::size_t>(), p.at("first_index").get<std::int64_t>());
  if (g == "paperfolding")
    return paperfolding(p.at("N").get<std::size_t>(), p.at("shift").get<std::int64_t>());
  if (g == "dimer") {
    DimerParams dp;
    dp.parity = p.at("parity").get<std::string>() == "even" ? DimerParity::Even : DimerParity::Odd;
    dp.seed = prov.seed;
    return dimer_sample(dp, p.at("N").get<std::size_t>(), p.at("first_index").get<std::int64_t>());
  }
  if (g == "iid")
    return iid_spins(prov.seed, p.at("N").get<std::size_t>(), p.at("first_index").get<std::int64_t>());
  if (g == "slice") {
    SequenceWindow parent = regenerate(Provenance::from_json(p.at("parent")));
    return parent.slice(p.at("start").get<std::size_t>(), p.at("len").get<std::size_t>(),
                        p.at("new_offset").get<std::int64_t>());
  }
  if (g == "factor") {
    SequenceWindow parent = regenerate(Provenance::from_json(p.at("parent")));
    return factor_map(parent, builtin_factor_map(p.at("map").get<std::string>()));
  }
  throw std::invalid_argument("cannot regenerate window from generator '" + g + "'");
}

}  // namespace aperiodic
