// Conjugation-closed families of p- or pi-subgroups of a finite group,
// fully materialized: every member, its class, the class representative
// (the least member), class sizes, normalizers of the representatives, and
// radical flags (H = O_p(N_G(H))). The Brown poset is the family minus the
// trivial member; the pi-poset keeps it.
#pragma once

#include <vector>

#include "engine/subgroup.hpp"

namespace engine {

struct SubgroupFamily {
  const PermutationGroup* G = nullptr;
  std::vector<long long> primes;  // enumeration prime set, ascending

  std::vector<std::vector<int>> members;  // sorted lexicographically
  std::vector<int> class_of;              // member -> class
  std::vector<int> rep_of;                // class -> member index (least member)
  std::vector<long long> class_size;
  std::vector<std::vector<int>> class_normalizer;  // elems of N_G(rep)
  std::vector<char> radical;  // p-families only; false for |primes| > 1

  int num_classes() const { return static_cast<int>(rep_of.size()); }
  long long member_count() const {
    return static_cast<long long>(members.size());
  }
  long long class_order(int c) const {
    return static_cast<long long>(members[rep_of[c]].size());
  }
  long long normalizer_order(int c) const {
    return static_cast<long long>(class_normalizer[c].size());
  }
  Subgroup member_subgroup(int m) const { return Subgroup{G, members[m]}; }
  Subgroup rep_subgroup(int c) const { return member_subgroup(rep_of[c]); }
  int trivial_class() const;  // class of the trivial subgroup
  int find_member(const std::vector<int>& elems) const;  // -1 when absent
};

// All p-subgroups of g, trivial subgroup included.
SubgroupFamily enumerate_p_subgroups(const PermutationGroup& g, long long p);

// All pi-subgroups, trivial included. Extension candidates run over the
// normalizer; Burnside solvability covers |pi| <= 2, and larger prime sets
// fall back to extension by arbitrary pi-elements.
SubgroupFamily enumerate_pi_subgroups(const PermutationGroup& g,
                                      std::vector<long long> pi);

// Classes of abelian subgroups whose order is coprime to every entry of
// avoid (pass {} for all abelian classes). Radical flags stay unset.
SubgroupFamily enumerate_abelian_subgroups(const PermutationGroup& g,
                                           const std::vector<long long>& avoid);

// Every subgroup of g; meant for small groups, since candidate extensions
// run over all elements rather than a normalizer.
SubgroupFamily enumerate_all_subgroups(const PermutationGroup& g);

struct AbelianClassInfo {
  std::vector<int> rep;            // least member, parent element indices
  long long class_size = 0;        // orbit length under conjugation in a
  long long normalizer_order = 0;  // |N_a(rep)|
};

// Classes, under conjugation inside a, of the abelian subgroups of a whose
// order is coprime to every entry of avoid; sorted by (order, rep).
std::vector<AbelianClassInfo> abelian_classes_in(
    const Subgroup& a, const std::vector<long long>& avoid);

// counts[a][b] = #{K in class b : rep_a <= K}.
std::vector<std::vector<long long>> class_inclusion_counts(
    const SubgroupFamily& f);

// Members H with H^x = H for every x in normalizing_elems.
std::vector<int> fixed_member_indices(const SubgroupFamily& f,
                                      const std::vector<int>& normalizing_elems);

// Members stable under each automorphism, given as element-index images.
std::vector<int> fixed_member_indices_under(
    const SubgroupFamily& f, const std::vector<std::vector<int>>& autos);

// The family restricted to members of radical classes (p-families).
SubgroupFamily radical_subfamily(const SubgroupFamily& f);

// Reduced Euler characteristic of the poset of nontrivial members among
// the given member indices (order complex, inclusion order).
BigInt reduced_euler_of_members(const SubgroupFamily& f,
                                const std::vector<int>& member_idxs);

// Reduced Euler characteristic of the whole nontrivial-member poset,
// computed class by class from the inclusion-count matrix.
BigInt reduced_euler_from_counts(const SubgroupFamily& f,
                                 const std::vector<std::vector<long long>>& counts);

}  // namespace engine
