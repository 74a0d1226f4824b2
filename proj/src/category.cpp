#include "engine/category.hpp"

namespace engine {

std::optional<std::vector<BigRat>> category_weighting(const CategoryData& c) {
  const int n = static_cast<int>(c.hom.size());
  std::vector<BigRat> ones(n, BigRat(1));
  return solve_linear(c.hom, ones);
}

std::optional<std::vector<BigRat>> category_coweighting(const CategoryData& c) {
  const int n = static_cast<int>(c.hom.size());
  std::vector<BigRat> ones(n, BigRat(1));
  return solve_linear_left(c.hom, ones);
}

std::optional<BigRat> category_euler(const CategoryData& c) {
  auto w = category_weighting(c);
  if (!w) return std::nullopt;
  BigRat total = 0;
  for (const auto& v : *w) total += v;
  auto cw = category_coweighting(c);
  internal_check(cw.has_value(),
                 "coweighting must exist whenever the weighting does");
  BigRat cototal = 0;
  for (const auto& v : *cw) cototal += v;
  internal_check(total == cototal, "weighting and coweighting totals differ");
  return total;
}

}  // namespace engine
