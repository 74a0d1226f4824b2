#include "engine/exactmat.hpp"

namespace engine {

std::optional<std::vector<BigRat>> solve_linear(RatMatrix a,
                                                std::vector<BigRat> b) {
  const int n = static_cast<int>(a.size());
  internal_check(static_cast<int>(b.size()) == n, "solve shape mismatch");
  for (const auto& row : a)
    internal_check(static_cast<int>(row.size()) == n, "solve needs square a");

  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (a[perm[r]][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == -1) return std::nullopt;
    std::swap(perm[col], perm[pivot]);
    const int pr = perm[col];
    for (int r = col + 1; r < n; ++r) {
      const int rr = perm[r];
      if (a[rr][col] == 0) continue;
      BigRat factor = a[rr][col] / a[pr][col];
      for (int c = col; c < n; ++c) a[rr][c] -= factor * a[pr][c];
      b[rr] -= factor * b[pr];
    }
  }
  std::vector<BigRat> x(n);
  for (int col = n - 1; col >= 0; --col) {
    const int pr = perm[col];
    BigRat s = b[pr];
    for (int c = col + 1; c < n; ++c) s -= a[pr][c] * x[c];
    x[col] = s / a[pr][col];
  }
  return x;
}

std::optional<std::vector<BigRat>> solve_linear_left(
    const RatMatrix& a, const std::vector<BigRat>& b) {
  const int n = static_cast<int>(a.size());
  RatMatrix t(n, std::vector<BigRat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = a[j][i];
  return solve_linear(std::move(t), b);
}

}  // namespace engine
