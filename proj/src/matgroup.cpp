#include "engine/matgroup.hpp"

#include <vector>

namespace engine {

namespace {

using Matrix = std::vector<std::vector<long long>>;

Matrix identity_matrix(int n) {
  Matrix m(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// Point k (0-based) encodes the nonzero vector with base-q value k + 1,
// most significant coordinate first.
std::vector<long long> decode(long long point, int n, long long q) {
  long long v = point + 1;
  std::vector<long long> vec(n);
  for (int i = n - 1; i >= 0; --i) {
    vec[i] = v % q;
    v /= q;
  }
  return vec;
}

long long encode(const std::vector<long long>& vec, long long q) {
  long long v = 0;
  for (long long c : vec) v = v * q + c;
  internal_check(v >= 1, "matrix sent nonzero vector to zero");
  return v - 1;
}

Permutation matrix_to_permutation(const Matrix& m, long long q) {
  const int n = static_cast<int>(m.size());
  long long points = 1;
  for (int i = 0; i < n; ++i) points *= q;
  points -= 1;
  std::vector<int> img(points);
  for (long long pt = 0; pt < points; ++pt) {
    std::vector<long long> v = decode(pt, n, q);
    std::vector<long long> w(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) w[i] = (w[i] + m[i][j] * v[j]) % q;
    img[pt] = static_cast<int>(encode(w, q));
  }
  return Permutation(std::move(img));
}

long long primitive_root(long long q) {
  for (long long a = 2; a < q; ++a) {
    long long x = a % q;
    long long ord = 1;
    while (x != 1) {
      x = x * a % q;
      ++ord;
    }
    if (ord == q - 1) return a;
  }
  internal_check(false, "no primitive root found");
  return 0;
}

PermutationGroup linear_group(int n, long long q, bool special) {
  check(n >= 1 && n <= 8, "matrix group rank out of range");
  check(is_prime(q), "matrix group field size must be prime");

  std::vector<Permutation> gens;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      Matrix t = identity_matrix(n);
      t[i][j] = 1;
      gens.push_back(matrix_to_permutation(t, q));
    }
  if (!special && q > 2) {
    Matrix d = identity_matrix(n);
    d[0][0] = primitive_root(q);
    gens.push_back(matrix_to_permutation(d, q));
  }

  long long points = 1;
  for (int i = 0; i < n; ++i) points *= q;
  PermutationGroup g =
      PermutationGroup::from_generators(static_cast<int>(points - 1),
                                        std::move(gens));

  BigInt expected = 1;
  BigInt qn = 1;
  for (int i = 0; i < n; ++i) qn *= static_cast<long>(q);
  BigInt qi = 1;
  for (int i = 0; i < n; ++i) {
    expected *= qn - qi;
    qi *= static_cast<long>(q);
  }
  if (special || q == 2) expected /= static_cast<long>(q - 1);
  internal_check(BigInt(static_cast<long>(g.order())) == expected,
                 "linear group order mismatch");
  return g;
}

}  // namespace

PermutationGroup general_linear_group(int n, long long q) {
  return linear_group(n, q, false);
}

PermutationGroup special_linear_group(int n, long long q) {
  return linear_group(n, q, true);
}

}  // namespace engine
