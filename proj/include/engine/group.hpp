// Finite permutation groups materialized as full element tables. Elements
// are indexed by their position in the lexicographically sorted table;
// index 0 is always the identity. All higher layers speak in indices.
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "engine/numeric.hpp"
#include "engine/perm.hpp"

namespace engine {

// Runtime caps, overridable through environment variables.
long long element_cap();  // ENGINE_ELEMENT_CAP, default 1000000
long long family_cap();   // ENGINE_FAMILY_CAP, default 100000

struct ConjugacyClasses {
  std::vector<int> reps;              // least element index per class
  std::vector<long long> sizes;       // orbit sizes, same order as reps
  std::vector<long long> rep_orders;  // element orders of the reps
  std::vector<int> class_of;          // element index -> class number
};

class PermutationGroup {
 public:
  // Closes the generators under multiplication; throws EngineError when
  // the element count would exceed element_cap().
  static PermutationGroup from_generators(int degree,
                                          std::vector<Permutation> gens);

  int degree() const { return degree_; }
  long long order() const { return static_cast<long long>(elems_.size()); }
  const std::vector<Permutation>& elements() const { return elems_; }
  const Permutation& perm(int i) const { return elems_[i]; }
  const std::vector<int>& generator_indices() const { return gen_idx_; }

  // Index of p in the sorted table; throws InternalError when absent.
  int index_of(const Permutation& p) const;
  bool contains(const Permutation& p) const;

  int mul(int i, int j) const;     // index of elems_[i] * elems_[j]
  int inv(int i) const { return inv_[i]; }
  int conj(int x, int g) const;    // index of g^{-1} x g
  long long element_order(int i) const { return order_[i]; }
  int power(int x, long long e) const;

  const ConjugacyClasses& conjugacy_classes() const;

  // Conjugacy class of x as a sorted index list.
  std::vector<int> class_members(int x) const;

 private:
  int degree_ = 0;
  std::vector<Permutation> elems_;
  std::vector<int> gen_idx_;
  std::vector<int> inv_;
  std::vector<long long> order_;
  mutable std::optional<ConjugacyClasses> classes_;
};

// Number of p-singular elements (identity included): elements whose order
// is a power of p. Computed both by direct scan and from the cyclic
// p-subgroup census; the two counts must agree.
long long count_p_singular(const PermutationGroup& g, long long p);

// Number of pi-singular elements (identity included): elements whose order
// has every prime factor in pi.
long long count_pi_singular(const PermutationGroup& g,
                            const std::vector<long long>& pi);

}  // namespace engine
