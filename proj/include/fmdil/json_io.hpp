#pragma once

#include <json.hpp>

#include "fmdil/cocycle.hpp"
#include "fmdil/dilation.hpp"
#include "fmdil/hcalc.hpp"

namespace fmdil {

using ordered_json = nlohmann::ordered_json;

// Report and debug-dump serialization. Keys are emitted in insertion order
// and maps are never reordered, so identical inputs give identical bytes.

ordered_json to_json(const PositiveDefiniteReport& rep);
ordered_json to_json(const CndReport& rep);
ordered_json to_json(const SchoenbergReport& rep);
ordered_json to_json(const Cocycle& c);
ordered_json to_json(const CocycleLawReport& rep);
ordered_json to_json(const NormIdentityReport& rep);
ordered_json to_json(const GaussExp& a);
ordered_json to_json(const CrossedElement& f);
ordered_json to_json(const MarkovSemigroupReport& rep);
ordered_json to_json(const DilationReport& rep);
ordered_json to_json(const WeightCompatReport& rep);
ordered_json to_json(const SectorialityEstimate& est);
ordered_json to_json(const NormEstimate& est);

}  // namespace fmdil
