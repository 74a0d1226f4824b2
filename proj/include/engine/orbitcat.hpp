#pragma once

#include <optional>
#include <vector>

#include "engine/equivariant.hpp"
#include "engine/group.hpp"
#include "engine/numeric.hpp"

namespace engine {

// Euler characteristic of the orbit category on all p-subgroups, computed
// along four independent routes that must agree.
struct OrbitCategoryEuler {
  BigRat closed_form;   // |G_p| / |G|
  BigRat weighting;     // radical classes, -chi~ of the quotient poset
  BigRat coweighting;   // cyclic classes, (1 - 1/p)|C| / |G|
  BigRat zeta_solve;    // generic solve on the skeleton hom matrix
};

OrbitCategoryEuler orbit_category_euler(const PermutationGroup& g,
                                        long long p);

// Weighting table with the member-sum identity rechecked through the
// quotient-path weights; per-class affine rows verified on the way.
WeightingTable global_identity(const PermutationGroup& g, long long p);

// One summand of the decomposition of -|G_p| - chi~(S^{p+*}) over the
// nontrivial radical classes.
struct BridgeTerm {
  long long rep_order = 0;        // |H|
  long long quotient_order = 0;   // |N(H)/H|
  BigInt quotient_euler = 0;      // chi~ of the p-subgroup poset of N(H)/H
  BigInt value = 0;               // chi~/|N/H|_p * |G|/|N/H|_{p'}
};

struct BridgeReport {
  long long p_singular_count = 0;
  BigInt poset_reduced_euler = 0;
  std::vector<BridgeTerm> terms;
};

BridgeReport frobenius_brown_bridge(const PermutationGroup& g, long long p);

enum class OrbitVariant { centralized, transporter };

struct OrbitObjectClass {
  std::vector<int> rep;       // element indices in the acted-on group
  long long size = 0;         // objects isomorphic to the representative
  BigInt self_hom = 0;        // |hom(rep, rep)|
};

struct CentralizedOrbitEuler {
  bool defined = false;
  BigRat chi;
  std::vector<OrbitObjectClass> classes;
};

// Orbit-category variants on the A-invariant p-subgroups of the pair.
// The transporter variant always has chi = |C_G(A)_p| / |C_G(A)|; the
// centralized variant can leave chi undefined.
CentralizedOrbitEuler centralized_orbit_category_euler(const GroupPair& pr,
                                                       long long p,
                                                       OrbitVariant variant);

// chi of the subcategory of proper subgroups of an abelian p-group v that
// are invariant under the given generator images.  nullopt when the zeta
// system is singular.
std::optional<BigRat> centralized_interval_euler(
    const PermutationGroup& v, const std::vector<std::vector<int>>& autos);

}  // namespace engine
