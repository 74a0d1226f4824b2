#pragma once

#include <vector>

#include "engine/group.hpp"
#include "engine/numeric.hpp"

namespace engine {

// Weighting table for the poset of pi-subgroups of G.  Classes are sorted
// by (order descending, representative ascending), the same convention as
// the one-prime weighting tables; weights[a] = -chi~(H_a // S_G^pi) and the
// counts matrix is unit lower triangular in this ordering.
struct PiWeightingTable {
  std::vector<long long> primes;
  std::vector<long long> orders;
  std::vector<long long> lengths;
  std::vector<long long> normalizer_orders;
  std::vector<std::vector<long long>> counts;
  std::vector<BigInt> weights;
  long long pi_singular_count = 0;
};

// Solves the class-table system and independently recomputes every weight
// as a Mobius sum over the genuine overgroup members; the two must agree.
PiWeightingTable pi_weighting(const PermutationGroup& g,
                              const std::vector<long long>& primes);

struct PiGlobalReport {
  PiWeightingTable table;
  BigRat orbit_euler;  // |G_pi| / |G|
};

// Verifies the per-class affine identity, the member-weighted count of
// pi-singular elements, and the orbit-category Euler characteristic along
// the weighting, cyclic-coweighting, and skeleton zeta-solve routes.
PiGlobalReport pi_global_identity(const PermutationGroup& g,
                                  const std::vector<long long>& primes);

// -chi~ of the orbit category of proper subgroups of K: phi(|K|)/|K| when
// K is cyclic and 0 otherwise, cross-checked against the zeta solve on the
// proper-subgroup skeleton.
BigRat cyclic_orbit_coweight(const PermutationGroup& k);

struct HioRow {
  long long order = 0;
  long long norm_index = 0;     // |N_G(H):H|
  long long norm_index_pi = 0;  // pi-part of |N_G(H):H|
  BigInt weight = 0;
  BigInt quotient = 0;  // weight / norm_index_pi
};

struct HioReport {
  std::vector<long long> primes;
  std::vector<HioRow> rows;
};

// Asserts the pi-part of |N_G(H):H| divides -chi~(H // S_G^pi) for every
// class, after checking the Hall value and the vanishing criterion: a
// nonzero weight forces H to be a maximal pi-subgroup of the intersection
// of the normalizers of its strict pi-overgroups.
HioReport hio_divisibility(const PermutationGroup& g,
                           const std::vector<long long>& primes);

}  // namespace engine
