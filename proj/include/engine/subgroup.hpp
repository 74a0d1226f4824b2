// Subgroups stored densely as sorted vectors of parent element indices,
// plus the operations on them the poset and category layers need:
// closures, normalizers, centralizers, cores, Sylow subgroups, quotients.
#pragma once

#include <vector>

#include "engine/group.hpp"

namespace engine {

struct Subgroup {
  const PermutationGroup* parent = nullptr;
  std::vector<int> elems;  // sorted, always contains 0

  long long order() const { return static_cast<long long>(elems.size()); }
  bool contains(int x) const;
  bool is_subset_of(const Subgroup& other) const;
  bool operator==(const Subgroup& other) const { return elems == other.elems; }
};

Subgroup trivial_subgroup(const PermutationGroup& g);
Subgroup full_subgroup(const PermutationGroup& g);
Subgroup make_subgroup(const PermutationGroup& g, std::vector<int> elems);

// Closure of the given element indices under multiplication. A positive
// max_order aborts (returning an empty-elems subgroup) once the closure
// would exceed it.
Subgroup subgroup_closure(const PermutationGroup& g,
                          const std::vector<int>& gen_idxs,
                          long long max_order = 0);

Subgroup conjugate_subgroup(const Subgroup& s, int g);

// Greedy small generating set: repeatedly adjoin the least element not yet
// generated. Deterministic.
std::vector<int> generating_set(const Subgroup& s);

// Sorted intersection.
Subgroup intersect(const Subgroup& a, const Subgroup& b);

// N_W(S) = {w in W : S^w = S}; W defaults to the full parent group.
Subgroup normalizer_in(const Subgroup& ambient, const Subgroup& s);
Subgroup normalizer(const Subgroup& s);

// Normalizer via the conjugation orbit of s and Schreier generators of the
// stabilizer; equals normalizer(s) but scales with |orbit|, not |G|.
Subgroup normalizer_via_orbit(const Subgroup& s);

// C_W(xs) = {w in W : wx = xw for all listed x}.
Subgroup centralizer_in(const Subgroup& ambient, const std::vector<int>& xs);

bool is_normal_in(const Subgroup& n, const Subgroup& p);
bool centralizes(const Subgroup& a, const Subgroup& b);

// [A, B]: subgroup generated by all commutators [a, b].
Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b);

// Sylow p-subgroup of s, grown by normalizer ascent; deterministic.
Subgroup sylow_subgroup(const Subgroup& s, long long p);

// O_p(s): intersection of all conjugates of a Sylow p-subgroup within s.
Subgroup p_core(const Subgroup& s, long long p);

// Largest power of p dividing |s|, etc.
long long subgroup_p_part(const Subgroup& s, long long p);

// Frattini subgroup of a group of prime-power order p^n: generated by all
// p-th powers and commutators, so k/frattini is elementary abelian.
Subgroup frattini_subgroup(const Subgroup& k);

// Quotient P/N realized as a permutation group acting on cosets.
// Coset i has canonical representative rep_of[i] = least parent index in
// the coset; project maps elements of P to quotient element indices.
struct QuotientGroup {
  PermutationGroup group;
  std::vector<int> rep_of;        // coset -> least parent element index
  std::vector<int> coset_of;      // parent element index -> coset (-1 off P)
  const PermutationGroup* parent = nullptr;

  int project(int parent_elem) const;

  // Index permutation q -> image of q under the automorphism induced by
  // conjugation by a (a must normalize both P and N).
  std::vector<int> induced_automorphism(int a) const;

  // Same, for a permutation not necessarily inside the parent group.
  std::vector<int> induced_automorphism_perm(const Permutation& pa) const;
};

QuotientGroup quotient_group(const Subgroup& p, const Subgroup& n);

// Conjugacy classes of s under its own conjugation action: least-index
// representatives with class sizes, ascending by representative.
struct SubgroupClass {
  int rep;
  long long size;
};
std::vector<SubgroupClass> subgroup_classes(const Subgroup& s);

// Number of elements of s whose order is a power of p (identity counts).
long long p_power_count_in(const Subgroup& s, long long p);

// The subgroup as a standalone permutation group on the parent's points,
// with elems_to_parent mapping its element indices back to parent indices.
struct StandaloneGroup {
  PermutationGroup group;
  std::vector<int> to_parent;  // its element index -> parent element index
};
StandaloneGroup subgroup_as_group(const Subgroup& s);

}  // namespace engine
