// Order-complex combinatorics for finite posets: Euler characteristics via
// the signed chain recursion h[v] = 1 - sum_{u < v} h[u] (so that
// chi = sum_v h[v]), Moebius functions, and small subgroup lattices.
#pragma once

#include <functional>
#include <vector>

#include "engine/subgroup.hpp"

namespace engine {

using LeqFn = std::function<bool(int, int)>;  // reflexive partial order

// chi of the order complex (number of vertices minus 1-chains plus ...).
BigInt poset_euler(int n, const LeqFn& leq);

// chi - 1; the empty poset has reduced Euler characteristic -1.
BigInt poset_reduced_euler(int n, const LeqFn& leq);

// Specialization to subgroup lists ordered by inclusion.
BigInt reduced_euler_of_subgroup_list(const std::vector<std::vector<int>>& members);

// Moebius function mu[a][b] of the poset, zero unless a <= b.
std::vector<std::vector<long long>> mobius_matrix(int n, const LeqFn& leq);

// Every subgroup of k, as sorted parent-index vectors, sorted; intended for
// small k (the cost grows with the subgroup count times |k|).
std::vector<std::vector<int>> all_subgroups_of(const Subgroup& k);

// mu(1, k) over the full subgroup lattice of k.
long long mobius_bottom_top(const Subgroup& k);

// Number of r-tuples (b_1, ..., b_r) with <b_1, ..., b_r> = b, for abelian
// b, by Moebius inversion of |c|^r over the subgroup lattice of b.
long long generating_tuple_count(const Subgroup& b, int r);

}  // namespace engine
