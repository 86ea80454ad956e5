#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "nsalg/analysis.hpp"
#include "nsalg/bmodule.hpp"
#include "nsalg/element.hpp"
#include "nsalg/induced.hpp"

namespace nsalg {

// Textual grammar (also what the printers emit):
//   generator: L(n) | G(p/2) | c
//   word:      generator ( '*'? generator )*      with optional '^k' powers
//   element:   ['-'] term ( ('+'|'-') term )*
//   term:      [rational '*'] word | rational
//   vector:    like element, with each word followed by '⊗' and a basis label

Generator parse_generator(std::string_view text);
std::vector<Generator> parse_word(std::string_view text);
Element parse_element(std::string_view text);
/// Needs the module for basis-label resolution.
IndVector parse_ind_vector(std::string_view text, const InducedModule& M);

nlohmann::json spec_to_json(const BModuleSpec& spec);
BModuleSpec spec_from_json(const nlohmann::json& j);

nlohmann::json whittaker_to_json(const WhittakerData& psi);
WhittakerData whittaker_from_json(const nlohmann::json& j);

nlohmann::json expvec_to_json(const ExpVec& v);
nlohmann::json oddexpvec_to_json(const OddExpVec& v);
nlohmann::json ind_vector_to_json(const IndVector& v, const InducedModule& M);

nlohmann::json validation_to_json(const ValidationReport& report);
nlohmann::json simplicity_to_json(const SimplicityReport& report, const InducedModule& M);
nlohmann::json trace_to_json(const ReductionTrace& trace, const InducedModule& M);
nlohmann::json singular_to_json(const SingularReport& report, const InducedModule& M);

BModuleSpec load_spec_file(const std::string& path);

} // namespace nsalg
