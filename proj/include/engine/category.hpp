// Euler characteristics of finite categories from morphism-count matrices:
// a weighting k satisfies sum_b zeta(a,b) k(b) = 1 for every object a, a
// coweighting is the transposed analogue, and the Euler characteristic is
// the common total when both exist.
#pragma once

#include <optional>
#include <vector>

#include "engine/exactmat.hpp"

namespace engine {

struct CategoryData {
  RatMatrix hom;  // hom[a][b] = number of morphisms a -> b
};

std::optional<std::vector<BigRat>> category_weighting(const CategoryData& c);
std::optional<std::vector<BigRat>> category_coweighting(const CategoryData& c);

// Sum of a weighting; checks the coweighting gives the same total when
// both sides are solvable. nullopt when the zeta matrix is singular.
std::optional<BigRat> category_euler(const CategoryData& c);

}  // namespace engine
