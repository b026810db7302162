#pragma once

#include "pinturan/auxiliary.hpp"
#include "pinturan/bounds.hpp"
#include "pinturan/construct.hpp"
#include "pinturan/oracle.hpp"
#include "pinturan/random_models.hpp"

#include <nlohmann/json.hpp>

namespace pinturan {

// Graphs inside JSON records are graph6 strings.

void to_json(nlohmann::json& j, const Rational& r);
void to_json(nlohmann::json& j, const BoundsReport& r);
void to_json(nlohmann::json& j, const Certificate& c);
void to_json(nlohmann::json& j, const ConstructionResult& r);
void to_json(nlohmann::json& j, const OracleResult& r);
void to_json(nlohmann::json& j, const WorstCaseRow& r);
void to_json(nlohmann::json& j, const WorstCaseResult& r);
void to_json(nlohmann::json& j, const SampleStats& s);

/// Sizes and degree histogram of the slice.
nlohmann::json slice_debug_json(const AuxSlice& slice);

} // namespace pinturan
