// Equivariant invariants of the poset of nonidentity p-subgroups: the
// weighting over radical classes, higher equivariant Euler characteristics,
// Euler class functions with their Artin decompositions, the centralized
// fixed-point identities for a normalizing action, and ideal decompositions
// of the fixed-member poset.
#pragma once

#include <map>
#include <memory>
#include <vector>

#include "engine/exactmat.hpp"
#include "engine/families.hpp"
#include "engine/group.hpp"
#include "engine/poset.hpp"
#include "engine/subgroup.hpp"

namespace engine {

// The family of all p-subgroups of a group together with its radical part
// and memoized reduced Euler characteristics of fixed-member subposets.
// "Reduced Euler characteristic" always refers to the order complex of the
// nontrivial members; chi~ of fixed subposets is evaluated on the radical
// part, which is homotopy equivalent to the full poset, unless force_full
// is set.
class BrownPoset {
 public:
  BrownPoset(const PermutationGroup& g, long long p, bool force_full = false);

  const PermutationGroup& group() const { return *g_; }
  long long prime() const { return p_; }
  const SubgroupFamily& family() const { return full_; }
  const SubgroupFamily& radical_family() const { return radical_; }

  BigInt reduced_euler() const;

  // chi~ of the subposet of members normalized by every listed element.
  BigInt fixed_reduced_euler(const std::vector<int>& fixing_elems) const;

  // Same, for automorphisms given as element-index image vectors.
  BigInt fixed_reduced_euler_under(
      const std::vector<std::vector<int>>& autos) const;

 private:
  const PermutationGroup* g_;
  long long p_;
  bool force_full_;
  SubgroupFamily full_;
  SubgroupFamily radical_;
  mutable std::map<std::vector<int>, BigInt> fixed_memo_;  // key: fixed members
  mutable BigInt reduced_euler_ = 0;
  mutable bool reduced_euler_ready_ = false;
};

// Weighting of the nontrivial-member poset over the radical classes, rows
// sorted by descending order then ascending representative. Solving the
// unit-sum system, the normalizer-quotient formula, the Euler
// characteristic, and the p-singular count must all be consistent.
struct WeightingTable {
  std::vector<long long> orders;                // |K| per radical class
  std::vector<long long> lengths;               // class sizes
  std::vector<std::vector<long long>> counts;   // #{K in col class : row rep <= K}
  std::vector<BigInt> weights;                  // solved, integral
  std::vector<BigInt> quotient_weights;         // -chi~ of S_{N(K)/K}^{p+*}
  std::vector<long long> quotient_orders;       // |N_G(K)/K|
  BigInt poset_reduced_euler;
  long long p_singular_count;
};

WeightingTable brown_weighting(const BrownPoset& s);

// chi~(C_S(x)) for every conjugacy class of g, with the two forms of the
// identity of Webb: the reduced class sum vanishes and the unreduced sum
// weighted by class sizes returns |G|. Requires p | |G|.
struct WebbReport {
  std::vector<BigInt> fixed_reduced_euler;  // per conjugacy class
};

WebbReport webb_identity(const BrownPoset& s);

// Element conjugacy classes of a subgroup: (representative, class size).
std::vector<std::pair<int, long long>> element_classes(const Subgroup& w);

// |C_r(A)|: number of commuting r-tuples, by the centralizer recursion.
BigInt commuting_tuple_count(const Subgroup& a, int r);

// Shared-memo evaluator for the equivariant characteristics of s under the
// conjugation action of a subgroup a of the poset's group.
class EquivariantEvaluator {
 public:
  EquivariantEvaluator(const BrownPoset& s, Subgroup a);

  // chi~_r(S; A). Rational for r = 0, integral for r >= 1.
  BigRat chi_tilde_r(int r);

  // Value of the reduced Euler class function alpha~_r at the element x.
  // Rational for r = 1, integral for r >= 2 and zero off p-regular x.
  BigRat alpha_tilde_r(int r, int x);

  // alpha~_r on every conjugacy class of the group (a must be the full
  // group for the class function to be well defined).
  std::vector<BigRat> alpha_tilde_r_by_class(int r);

 private:
  BigRat value(int r, const std::vector<int>& b_closure);

  const BrownPoset* s_;
  Subgroup a_;
  std::map<std::pair<int, std::vector<int>>, BigRat> memo_;
};

// chi~_r(S; A) through the abelian-class formula: the sum of
// chi~(C_S(B)) phi_r(B) / |N_A(B)| over classes of p-regular abelian
// subgroups B of a.
BigRat chi_tilde_r_abelian(const BrownPoset& s, const Subgroup& a, int r);

// chi~_r(S, K) for every conjugacy class of subgroups K of the group, from
// the abelian-class decomposition with containment counts.
struct SubgroupChiTable {
  SubgroupFamily all;          // every subgroup class, ascending order
  std::vector<BigInt> chi;     // chi~_r(S, K) per class
};

SubgroupChiTable chi_r_for_subgroup(const BrownPoset& s, int r);

// <phi, |C_A|>: the inner product of a class function with the conjugation
// character is the plain sum of its class values.
BigRat inner_product_with_conjugation_character(
    const std::vector<BigRat>& class_values);

// Conjugacy classes of cyclic subgroups with the data needed to decompose
// class functions into induced characters 1_C^G: induced-character values,
// normalizer orders, and the integral weights
// (sum_{1 != x in C} |C_G(x)|) / |N_G(C)|.
struct ArtinClass {
  std::vector<int> subgroup;     // least cyclic subgroup in the class
  long long cyc_order = 0;
  long long normalizer_order = 0;
  BigInt weight = 0;
};

struct ArtinSystem {
  std::vector<ArtinClass> classes;      // sorted by (order, subgroup)
  std::vector<int> class_to_cyclic;     // element class -> cyclic class id
  RatMatrix induced;                    // induced[d][c] = 1_{C_c}^G at rep of d
};

ArtinSystem build_artin_system(const PermutationGroup& g);

// Decomposition alpha~_r = sum_C a~_r(C) 1_C^G / |N_G(C):C| over cyclic
// classes; coefficients are integral for r >= 2 and vanish on p-singular
// classes. Reconstructing chi~_r through the weights must agree with the
// recursive value.
struct ArtinDecomposition {
  std::vector<BigRat> alpha;          // alpha~_r per element class
  std::vector<BigInt> coefficients;   // a~_r per cyclic class
  BigInt chi_r;
};

ArtinDecomposition artin_decompose(const BrownPoset& s, const ArtinSystem& art,
                                   int r);

// A group together with a normalizing action: a and g are subgroups of a
// common parent with a normalizing g. Conjugation embeds a in Aut(g).
struct GroupPair {
  const PermutationGroup* parent = nullptr;
  Subgroup g;
  Subgroup a;
};

GroupPair make_group_pair(const PermutationGroup& parent,
                          const std::vector<int>& g_gens,
                          const std::vector<int>& a_gens);

// One row per N_G(A)-orbit of A-normalized radical p-subgroups.
struct CentralizedRow {
  std::vector<int> rep;            // member elements, in the acted-on group
  long long rep_order = 0;
  long long orbit_size = 0;
  BigInt weight = 0;               // -chi~ of the A-fixed quotient poset
  long long centralized_order = 0; // |C_K(A)|
};

// Verifies, and reports the data of, the three fixed-point identities:
// the weighted count of A-centralized p-singular elements, the per-orbit
// affine unit sums, and the divisibility of chi~ of the fixed poset by
// |C_G(A)|_p. Violations raise InternalError.
struct CentralizedReport {
  long long centralized_p_singular = 0;  // |C_G(A)_p|
  BigInt fixed_reduced_euler = 0;        // chi~(C_S(A))
  long long centralizer_p_part = 0;      // |C_G(A)|_p
  std::vector<CentralizedRow> rows;
};

CentralizedReport theorem1_verify(const GroupPair& pr, long long p);

// Reduced Euler characteristics of ideals in the poset of A-normalized
// members, one row per class of p-regular abelian subgroups A, ascending.
// Each row satisfies: the two adjunctions, the Mayer-Vietoris relation,
// the difference identity, the congruence of the two ideal
// characteristics mod |C_G(A)|_p, divisibility of both main columns by
// |C_G(A)|_p, and equality when every nonidentity radical subgroup meets
// the centralizer.
struct IdealRow {
  std::vector<int> a_rep;
  long long a_order = 0;
  BigInt chi_fixed = 0;              // chi~(C_S(A))
  BigInt chi_centralizer_brown = 0;  // chi~(S_{C_G(A)}^{p+*})
  BigInt chi_not_centralized = 0;    // chi~ {K : C_K(A) < K}
  BigInt chi_middle = 0;             // chi~ {K : 1 < C_K(A) < K}
  BigInt chi_commutator_full = 0;    // chi~ {K : [K,A] = K}
  BigInt chi_centralized_ideal = 0;  // chi~ {K : C_K(A) != 1}
  long long centralizer_p_part = 0;  // |C_G(A)|_p
  bool reduction_hypothesis = false; // C_K(A) != 1 for all radical K != 1
};

struct IdealTable {
  std::vector<IdealRow> rows;
};

IdealTable ideal_decomposition_table(const BrownPoset& s);

// Single row for a p-regular action given as a pair; a_rep holds parent
// element indices of the acting subgroup.
IdealRow ideal_decomposition(const GroupPair& pr, long long p);

}  // namespace engine
