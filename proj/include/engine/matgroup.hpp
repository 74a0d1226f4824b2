// GL(n, q) and SL(n, q) for prime q, realized as permutation groups acting
// on the q^n - 1 nonzero column vectors of F_q^n, ordered by their base-q
// value. Generated by elementary transvections, plus one determinant
// generator for GL when q > 2; the construction asserts the group order.
#pragma once

#include "engine/group.hpp"

namespace engine {

PermutationGroup general_linear_group(int n, long long q);
PermutationGroup special_linear_group(int n, long long q);

}  // namespace engine
