// Order complexes as explicit Delta-sets: chains by dimension, barycentric
// subdivision, orbit posets, and Euler characteristics of quotients by a
// group action. Quotient characteristics are computed both by counting
// chain orbits and by the Cauchy-Frobenius average over fixed subposets.
#pragma once

#include <vector>

#include "engine/numeric.hpp"
#include "engine/poset.hpp"

namespace engine {

// chains[d] lists the strictly increasing (d+1)-vertex chains.
struct DeltaSet {
  std::vector<std::vector<std::vector<int>>> chains;

  BigInt euler() const;  // alternating sum of simplex counts
  std::vector<long long> simplex_counts() const;
};

DeltaSet delta_set(int n, const LeqFn& leq);

// chi as the alternating chain count; independent of the vertex recursion
// used by poset_euler.
BigInt euler_characteristic_via_chains(int n, const LeqFn& leq);

// Barycentric subdivision: the poset of nonempty chains under subchain
// containment. Its order complex has the same Euler characteristic.
struct Subdivision {
  std::vector<std::vector<int>> chains;  // vertex lists, strictly increasing

  int size() const { return static_cast<int>(chains.size()); }
  bool leq(int a, int b) const;  // chain a is a subchain of chain b
};

Subdivision subdivision(int n, const LeqFn& leq);

// Vertex orbits under a group of poset automorphisms, each given as a
// vertex-index image vector.
struct OrbitPoset {
  std::vector<int> orbit_of;   // vertex -> orbit id
  std::vector<int> rep_of;     // orbit id -> least vertex
  std::vector<long long> orbit_size;

  int num_orbits() const { return static_cast<int>(rep_of.size()); }
};

OrbitPoset orbit_poset(int n, const std::vector<std::vector<int>>& auto_gens);

// counts[x][y] = #{t in orbit y : rep_x <= t}. The count is independent of
// the representative chosen in orbit x; a weighting on the orbits solves
// sum_y counts[x][y] k^y = 1 and pulls back to the vertex weighting.
std::vector<std::vector<long long>> orbit_successor_counts(
    int n, const LeqFn& leq, const OrbitPoset& op);

struct QuotientDeltaReport {
  std::vector<long long> orbit_simplex_counts;  // chain orbits per dimension
  BigInt euler;
};

// chi of the quotient Delta-set of the order complex under the action of
// a group whose every element's vertex action is listed (duplicates fine).
// The chain-orbit count and the average of fixed-subposet characteristics
// must agree.
QuotientDeltaReport quotient_delta_euler(
    int n, const LeqFn& leq,
    const std::vector<std::vector<int>>& element_actions);

}  // namespace engine
