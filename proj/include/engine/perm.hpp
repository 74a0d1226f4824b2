// Permutations on {0, ..., degree-1} stored as image tables. Composition
// is left-to-right: (f * g)(x) = g(f(x)), matching the right-action
// convention x^g used for conjugation throughout.
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace engine {

class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int degree);

  // Parses disjoint-cycle text with 1-based points, e.g. "(1,2,3)(4,5)".
  // "()" and "" denote the identity. Points must lie in 1..degree.
  static Permutation parse_cycles(const std::string& text, int degree);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[x]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation operator*(const Permutation& other) const;

  // g^{-1} * (*this) * g, computed without forming g^{-1}.
  Permutation conjugated_by(const Permutation& g) const;

  long long order() const;

  // Disjoint cycles, 1-based, each cycle led by its least point, cycles
  // sorted by least point; fixed points omitted; identity prints "()".
  std::string to_cycle_string() const;

  bool operator==(const Permutation& other) const { return img_ == other.img_; }
  auto operator<=>(const Permutation& other) const {
    return img_ <=> other.img_;
  }

 private:
  std::vector<int> img_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const {
    std::size_t h = 1469598103934665603ull;
    for (int v : p.images()) {
      h ^= static_cast<std::size_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace engine
