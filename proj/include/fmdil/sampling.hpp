#pragma once

#include <random>

#include "fmdil/crossed.hpp"

namespace fmdil {

// Deterministic random elements for the property suites. Coefficients are
// standard complex normals; crossed-element frequencies are small integer
// combinations of the cocycle vectors, the combinations the construction
// itself produces.

GroupAlgebraElement random_group_element(const GroupPtr& g,
                                         std::mt19937_64& rng);

GaussExp random_gauss_exp(int dim, std::mt19937_64& rng, int max_terms = 3);

CrossedElement random_crossed_element(const GroupPtr& g, const CocyclePtr& c,
                                      std::mt19937_64& rng,
                                      int max_terms = 2);

}  // namespace fmdil
