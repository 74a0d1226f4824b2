#include "engine/equivariant.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace engine {

namespace {

bool is_p_power(long long n, long long p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

// Smallest generating data for the memoized fixed-poset lookups.
std::vector<int> closed_elems(const PermutationGroup& g,
                              const std::vector<int>& elems) {
  return subgroup_closure(g, elems).elems;
}

}  // namespace

BrownPoset::BrownPoset(const PermutationGroup& g, long long p, bool force_full)
    : g_(&g),
      p_(p),
      force_full_(force_full),
      full_(enumerate_p_subgroups(g, p)),
      radical_(radical_subfamily(full_)) {
  check(is_prime(p), "p-subgroup poset needs a prime");
}

BigInt BrownPoset::reduced_euler() const {
  if (!reduced_euler_ready_) {
    reduced_euler_ = reduced_euler_from_counts(full_, class_inclusion_counts(full_));
    reduced_euler_ready_ = true;
  }
  return reduced_euler_;
}

BigInt BrownPoset::fixed_reduced_euler(const std::vector<int>& fixing_elems) const {
  std::vector<int> key = closed_elems(*g_, fixing_elems);
  auto it = fixed_memo_.find(key);
  if (it != fixed_memo_.end()) return it->second;
  const SubgroupFamily& fam = force_full_ ? full_ : radical_;
  Subgroup b = make_subgroup(*g_, key);
  BigInt chi =
      reduced_euler_of_members(fam, fixed_member_indices(fam, generating_set(b)));
  fixed_memo_.emplace(std::move(key), chi);
  return chi;
}

BigInt BrownPoset::fixed_reduced_euler_under(
    const std::vector<std::vector<int>>& autos) const {
  const SubgroupFamily& fam = force_full_ ? full_ : radical_;
  return reduced_euler_of_members(fam, fixed_member_indices_under(fam, autos));
}

WeightingTable brown_weighting(const BrownPoset& s) {
  const PermutationGroup& g = s.group();
  const long long p = s.prime();
  const SubgroupFamily& rad = s.radical_family();
  const int nc = rad.num_classes();
  check(nc > 0, "empty radical family");

  // Rows by descending order, then ascending representative.
  std::vector<int> ids(nc);
  for (int c = 0; c < nc; ++c) ids[c] = c;
  std::sort(ids.begin(), ids.end(), [&](int a, int b) {
    if (rad.class_order(a) != rad.class_order(b))
      return rad.class_order(a) > rad.class_order(b);
    return rad.members[rad.rep_of[a]] < rad.members[rad.rep_of[b]];
  });

  auto raw_counts = class_inclusion_counts(rad);

  WeightingTable t;
  t.orders.resize(nc);
  t.lengths.resize(nc);
  t.counts.assign(nc, std::vector<long long>(nc, 0));
  for (int a = 0; a < nc; ++a) {
    t.orders[a] = rad.class_order(ids[a]);
    t.lengths[a] = rad.class_size[ids[a]];
    for (int b = 0; b < nc; ++b) t.counts[a][b] = raw_counts[ids[a]][ids[b]];
  }

  // The system is unit lower triangular in this ordering: a member of a
  // class later in the row order never contains the representative of an
  // earlier one.
  t.weights.assign(nc, 0);
  for (int a = 0; a < nc; ++a) {
    internal_check(t.counts[a][a] == 1, "inclusion count diagonal");
    BigInt acc = 1;
    for (int b = 0; b < a; ++b) acc -= big(t.counts[a][b]) * t.weights[b];
    for (int b = a + 1; b < nc; ++b)
      internal_check(t.counts[a][b] == 0, "inclusion count triangularity");
    t.weights[a] = acc;
  }

  t.poset_reduced_euler = s.reduced_euler();

  // Second path: each weight is -chi~ of the p-subgroup poset of N(K)/K.
  t.quotient_weights.assign(nc, 0);
  t.quotient_orders.assign(nc, 0);
  for (int a = 0; a < nc; ++a) {
    const int c = ids[a];
    Subgroup k = rad.rep_subgroup(c);
    Subgroup n = make_subgroup(g, rad.class_normalizer[c]);
    t.quotient_orders[a] = n.order() / k.order();
    if (k.order() == 1) {
      t.quotient_weights[a] = -t.poset_reduced_euler;
    } else {
      QuotientGroup q = quotient_group(n, k);
      BrownPoset qs(q.group, p);
      t.quotient_weights[a] = -qs.reduced_euler();
    }
    internal_check(t.quotient_weights[a] == t.weights[a],
                   "weighting paths disagree");
  }

  // chi(S^{p+*}) from the weighting, the trivial-class weight, and the
  // p-singular count.
  BigInt nontrivial_sum = 0;
  BigInt singular_sum = 0;
  bool has_trivial = false;
  for (int a = 0; a < nc; ++a) {
    BigInt term = big(t.lengths[a]) * t.weights[a];
    if (t.orders[a] > 1) nontrivial_sum += term;
    if (t.orders[a] == 1) {
      has_trivial = true;
      internal_check(t.weights[a] == -t.poset_reduced_euler,
                     "trivial-class weight");
    }
    singular_sum += term * big(t.orders[a]);
  }
  internal_check(nontrivial_sum == t.poset_reduced_euler + 1,
                 "weighting Euler characteristic");
  if (!has_trivial)
    internal_check(t.poset_reduced_euler == 0,
                   "nontrivial p-core forces a contractible poset");
  t.p_singular_count = count_p_singular(g, p);
  internal_check(singular_sum == big(t.p_singular_count),
                 "weighted p-singular count");
  return t;
}

WebbReport webb_identity(const BrownPoset& s) {
  const PermutationGroup& g = s.group();
  check(g.order() % s.prime() == 0, "identity needs p dividing the group order");
  const ConjugacyClasses& cc = g.conjugacy_classes();
  WebbReport r;
  BigInt reduced_sum = 0;
  BigInt unreduced_sum = 0;
  for (size_t i = 0; i < cc.reps.size(); ++i) {
    BigInt chi = s.fixed_reduced_euler({cc.reps[i]});
    r.fixed_reduced_euler.push_back(chi);
    reduced_sum += big(cc.sizes[i]) * chi;
    unreduced_sum += big(cc.sizes[i]) * (chi + 1);
  }
  internal_check(reduced_sum == 0, "reduced class sum");
  internal_check(unreduced_sum == big(g.order()), "unreduced class sum");
  return r;
}

std::vector<std::pair<int, long long>> element_classes(const Subgroup& w) {
  const PermutationGroup& g = *w.parent;
  std::vector<int> gens = generating_set(w);
  std::vector<char> seen(w.elems.size(), 0);
  auto pos = [&](int e) {
    return static_cast<int>(
        std::lower_bound(w.elems.begin(), w.elems.end(), e) - w.elems.begin());
  };
  std::vector<std::pair<int, long long>> out;
  for (size_t i = 0; i < w.elems.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> orbit{w.elems[i]};
    seen[i] = 1;
    long long sz = 0;
    while (!orbit.empty()) {
      int x = orbit.back();
      orbit.pop_back();
      ++sz;
      for (int a : gens) {
        int y = g.conj(x, a);
        int j = pos(y);
        if (!seen[j]) {
          seen[j] = 1;
          orbit.push_back(y);
        }
      }
    }
    out.emplace_back(w.elems[i], sz);
  }
  return out;
}

namespace {

BigInt commuting_tuple_count_memo(
    const Subgroup& a, int r,
    std::map<std::pair<int, std::vector<int>>, BigInt>& memo) {
  if (r == 0) return 1;
  if (r == 1) return big(a.order());
  auto key = std::make_pair(r, a.elems);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  BigInt total = 0;
  for (const auto& [x, sz] : element_classes(a)) {
    Subgroup c = centralizer_in(a, {x});
    total += big(sz) * commuting_tuple_count_memo(c, r - 1, memo);
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

BigInt commuting_tuple_count(const Subgroup& a, int r) {
  check(r >= 0, "tuple length must be nonnegative");
  std::map<std::pair<int, std::vector<int>>, BigInt> memo;
  return commuting_tuple_count_memo(a, r, memo);
}

EquivariantEvaluator::EquivariantEvaluator(const BrownPoset& s, Subgroup a)
    : s_(&s), a_(std::move(a)) {
  check(a_.parent == &s.group(), "action subgroup must live in the poset group");
}

BigRat EquivariantEvaluator::value(int r, const std::vector<int>& b_closure) {
  auto key = std::make_pair(r, b_closure);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  BigRat out = 0;
  const PermutationGroup& g = s_->group();
  // A subgroup with nontrivial p-core centralizes a contraction of its
  // fixed poset, so every branch below it vanishes.
  bool p_singular = static_cast<long long>(b_closure.size()) % s_->prime() == 0;
  if (p_singular) {
    out = 0;
  } else if (r == 0) {
    Subgroup cab = centralizer_in(a_, b_closure);
    out = make_rat(s_->fixed_reduced_euler(b_closure), big(cab.order()));
  } else {
    Subgroup cab = centralizer_in(a_, b_closure);
    for (const auto& [x, sz] : element_classes(cab)) {
      (void)sz;
      std::vector<int> next = b_closure;
      next.push_back(x);
      out += value(r - 1, subgroup_closure(g, next).elems);
    }
  }
  memo_.emplace(std::make_pair(r, b_closure), out);
  return out;
}

BigRat EquivariantEvaluator::chi_tilde_r(int r) {
  check(r >= 0, "characteristic index must be nonnegative");
  BigRat v = value(r, {0});
  if (r >= 1) internal_check(is_integer(v), "chi_r integrality");
  return v;
}

BigRat EquivariantEvaluator::alpha_tilde_r(int r, int x) {
  check(r >= 1, "class function index must be positive");
  BigRat v = value(r - 1, closed_elems(s_->group(), {x}));
  if (r >= 2) internal_check(is_integer(v), "alpha_r integrality");
  return v;
}

std::vector<BigRat> EquivariantEvaluator::alpha_tilde_r_by_class(int r) {
  check(a_.order() == s_->group().order(),
        "class function needs the full conjugation action");
  const ConjugacyClasses& cc = s_->group().conjugacy_classes();
  std::vector<BigRat> out;
  for (int rep : cc.reps) out.push_back(alpha_tilde_r(r, rep));
  // The class sum is chi~_r.
  BigRat total = 0;
  for (size_t i = 0; i < out.size(); ++i) total += out[i];
  internal_check(total == chi_tilde_r(r), "class sum of alpha_r");
  return out;
}

BigRat chi_tilde_r_abelian(const BrownPoset& s, const Subgroup& a, int r) {
  check(r >= 0, "characteristic index must be nonnegative");
  BigRat total = 0;
  for (const AbelianClassInfo& info :
       abelian_classes_in(a, {s.prime()})) {
    Subgroup b = make_subgroup(*a.parent, info.rep);
    long long phi = generating_tuple_count(b, r);
    if (phi == 0) continue;
    BigInt chi = s.fixed_reduced_euler(info.rep);
    total += make_rat(chi * big(phi), big(info.normalizer_order));
  }
  return total;
}

SubgroupChiTable chi_r_for_subgroup(const BrownPoset& s, int r) {
  check(r >= 1, "integral subgroup characteristics need r >= 1");
  const PermutationGroup& g = s.group();
  SubgroupChiTable t{enumerate_all_subgroups(g), {}};
  SubgroupFamily ab = enumerate_abelian_subgroups(g, {s.prime()});

  std::vector<BigInt> chi_b(ab.num_classes());
  std::vector<long long> phi_b(ab.num_classes());
  for (int c = 0; c < ab.num_classes(); ++c) {
    chi_b[c] = s.fixed_reduced_euler(ab.members[ab.rep_of[c]]);
    phi_b[c] = generating_tuple_count(ab.rep_subgroup(c), r);
  }

  for (int kc = 0; kc < t.all.num_classes(); ++kc) {
    const std::vector<int>& k = t.all.members[t.all.rep_of[kc]];
    // counts[c] = number of members of abelian class c inside K.
    std::vector<long long> counts(ab.num_classes(), 0);
    for (long long m = 0; m < ab.member_count(); ++m) {
      const std::vector<int>& b = ab.members[m];
      if (std::includes(k.begin(), k.end(), b.begin(), b.end()))
        ++counts[ab.class_of[m]];
    }
    BigInt acc = 0;
    for (int c = 0; c < ab.num_classes(); ++c)
      if (phi_b[c] != 0 && counts[c] != 0)
        acc += chi_b[c] * big(phi_b[c]) * big(counts[c]);
    BigRat v = make_rat(acc, big(static_cast<long long>(k.size())));
    internal_check(is_integer(v), "subgroup characteristic integrality");
    t.chi.push_back(rat_num(v));
  }
  internal_check(t.chi[t.all.trivial_class()] == s.reduced_euler(),
                 "trivial column");
  return t;
}

BigRat inner_product_with_conjugation_character(
    const std::vector<BigRat>& class_values) {
  BigRat total = 0;
  for (const BigRat& v : class_values) total += v;
  return total;
}

ArtinSystem build_artin_system(const PermutationGroup& g) {
  const ConjugacyClasses& cc = g.conjugacy_classes();
  const int ncl = static_cast<int>(cc.reps.size());

  // Canonical least conjugate of the cyclic subgroup generated by each
  // class representative.
  std::map<std::vector<int>, int> canon_id;
  std::vector<ArtinClass> classes;
  std::vector<int> class_to_cyclic(ncl, -1);
  for (int d = 0; d < ncl; ++d) {
    std::vector<int> cyc = subgroup_closure(g, {cc.reps[d]}).elems;
    std::set<std::vector<int>> orbit;
    std::vector<std::vector<int>> frontier{cyc};
    orbit.insert(cyc);
    while (!frontier.empty()) {
      std::vector<int> cur = frontier.back();
      frontier.pop_back();
      for (int a : g.generator_indices()) {
        std::vector<int> img(cur.size());
        for (size_t i = 0; i < cur.size(); ++i) img[i] = g.conj(cur[i], a);
        std::sort(img.begin(), img.end());
        if (orbit.insert(img).second) frontier.push_back(img);
      }
    }
    const std::vector<int>& least = *orbit.begin();
    auto it = canon_id.find(least);
    if (it == canon_id.end()) {
      ArtinClass ac;
      ac.subgroup = least;
      ac.cyc_order = static_cast<long long>(least.size());
      ac.normalizer_order = g.order() / static_cast<long long>(orbit.size());
      it = canon_id.emplace(least, static_cast<int>(classes.size())).first;
      classes.push_back(std::move(ac));
    }
    class_to_cyclic[d] = it->second;
  }

  // Deterministic order: ascending (order, least subgroup).
  std::vector<int> perm(classes.size());
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    if (classes[a].cyc_order != classes[b].cyc_order)
      return classes[a].cyc_order < classes[b].cyc_order;
    return classes[a].subgroup < classes[b].subgroup;
  });
  std::vector<int> rank(classes.size());
  for (size_t i = 0; i < perm.size(); ++i) rank[perm[i]] = static_cast<int>(i);

  ArtinSystem sys;
  for (int i : perm) sys.classes.push_back(std::move(classes[i]));
  sys.class_to_cyclic.resize(ncl);
  for (int d = 0; d < ncl; ++d) sys.class_to_cyclic[d] = rank[class_to_cyclic[d]];

  const int na = static_cast<int>(sys.classes.size());
  for (ArtinClass& ac : sys.classes) {
    // |N_G(C)| divides the centralizer-order sum over C, both with and
    // without the identity term.
    BigInt with_identity = 0;
    for (int x : ac.subgroup)
      with_identity += big(g.order() / cc.sizes[cc.class_of[x]]);
    BigInt without_identity = with_identity - big(g.order());
    BigRat w_full = make_rat(with_identity, big(ac.normalizer_order));
    BigRat w = make_rat(without_identity, big(ac.normalizer_order));
    internal_check(is_integer(w_full), "centralizer-sum divisibility");
    internal_check(is_integer(w) && rat_num(w) >= 0, "induced-character weight");
    ac.weight = rat_num(w);
  }

  sys.induced.assign(ncl, std::vector<BigRat>(na, BigRat(0)));
  for (int d = 0; d < ncl; ++d) {
    for (int c = 0; c < na; ++c) {
      long long hits = 0;
      for (int x : sys.classes[c].subgroup)
        if (cc.class_of[x] == d) ++hits;
      if (hits == 0) continue;
      BigRat v = make_rat(big(g.order() / cc.sizes[d]) * big(hits),
                          big(sys.classes[c].cyc_order));
      internal_check(is_integer(v), "induced character integrality");
      sys.induced[d][c] = v;
    }
  }
  return sys;
}

ArtinDecomposition artin_decompose(const BrownPoset& s, const ArtinSystem& art,
                                   int r) {
  check(r >= 2, "integral decomposition needs r >= 2");
  const PermutationGroup& g = s.group();
  const ConjugacyClasses& cc = g.conjugacy_classes();
  check(art.induced.size() == cc.reps.size(),
        "class function and system sizes disagree");
  const int ncl = static_cast<int>(cc.reps.size());
  const int na = static_cast<int>(art.classes.size());

  EquivariantEvaluator ev(s, full_subgroup(g));
  ArtinDecomposition out;
  out.alpha = ev.alpha_tilde_r_by_class(r);

  // alpha_r is constant on the classes of a cyclic subgroup and vanishes
  // on p-singular classes.
  std::vector<int> row_of(na, -1);
  for (int d = 0; d < ncl; ++d) {
    int c = art.class_to_cyclic[d];
    if (cc.rep_orders[d] == art.classes[c].cyc_order && row_of[c] < 0)
      row_of[c] = d;
    if (cc.rep_orders[d] % s.prime() == 0)
      internal_check(out.alpha[d] == 0, "support off p-regular classes");
  }
  for (int d = 0; d < ncl; ++d) {
    int c = art.class_to_cyclic[d];
    if (cc.rep_orders[d] == art.classes[c].cyc_order)
      internal_check(out.alpha[d] == out.alpha[row_of[c]],
                     "constancy on cyclic classes");
  }

  RatMatrix m(na, std::vector<BigRat>(na));
  std::vector<BigRat> rhs(na);
  for (int i = 0; i < na; ++i) {
    internal_check(row_of[i] >= 0, "cyclic class without generator class");
    for (int j = 0; j < na; ++j) m[i][j] = art.induced[row_of[i]][j];
    rhs[i] = out.alpha[row_of[i]];
  }
  auto sol = solve_linear(m, rhs);
  internal_check(sol.has_value(), "induced-character system is regular");

  out.coefficients.resize(na);
  for (int c = 0; c < na; ++c) {
    BigRat scaled = (*sol)[c] * make_rat(big(art.classes[c].normalizer_order),
                                         big(art.classes[c].cyc_order));
    internal_check(is_integer(scaled), "coefficient integrality");
    out.coefficients[c] = rat_num(scaled);
    if (art.classes[c].cyc_order % s.prime() == 0)
      internal_check(out.coefficients[c] == 0,
                     "support off p-regular cyclic classes");
  }

  // The decomposition must reproduce alpha_r on every class, not only on
  // the solve rows.
  for (int d = 0; d < ncl; ++d) {
    BigRat acc = 0;
    for (int c = 0; c < na; ++c) acc += (*sol)[c] * art.induced[d][c];
    internal_check(acc == out.alpha[d], "decomposition residual");
  }

  // Degree identity at the identity class when p divides |G|.
  if (g.order() % s.prime() == 0 && r == 2) {
    BigRat deg = 0;
    for (int c = 0; c < na; ++c)
      deg += make_rat(out.coefficients[c],
                      big(art.classes[c].normalizer_order));
    internal_check(deg == 0, "degree identity");
  }

  // chi~_r from the coefficients and the weights.
  BigInt chi = 0;
  for (int c = 0; c < na; ++c) chi += out.coefficients[c] * art.classes[c].weight;
  BigRat direct = ev.chi_tilde_r(r);
  internal_check(BigRat(chi) == direct, "weighted coefficient sum");
  out.chi_r = chi;
  return out;
}

GroupPair make_group_pair(const PermutationGroup& parent,
                          const std::vector<int>& g_gens,
                          const std::vector<int>& a_gens) {
  GroupPair pr;
  pr.parent = &parent;
  pr.g = subgroup_closure(parent, g_gens);
  pr.a = subgroup_closure(parent, a_gens);
  for (int a : generating_set(pr.a))
    for (int x : generating_set(pr.g))
      check(pr.g.contains(parent.conj(x, a)),
            "action subgroup must normalize the base subgroup");
  return pr;
}

CentralizedReport theorem1_verify(const GroupPair& pr, long long p) {
  check(is_prime(p), "fixed-point identities need a prime");
  const PermutationGroup& parent = *pr.parent;

  StandaloneGroup sg = subgroup_as_group(pr.g);
  const PermutationGroup& h = sg.group;
  std::vector<int> to_sg(parent.order(), -1);
  for (long long i = 0; i < h.order(); ++i)
    to_sg[sg.to_parent[i]] = static_cast<int>(i);

  std::vector<int> agens = generating_set(pr.a);
  std::vector<std::vector<int>> autos;
  for (int a : agens) {
    std::vector<int> img(h.order());
    for (long long i = 0; i < h.order(); ++i) {
      int y = parent.conj(sg.to_parent[i], a);
      internal_check(to_sg[y] >= 0, "action must normalize the base subgroup");
      img[i] = to_sg[y];
    }
    autos.push_back(std::move(img));
  }

  BrownPoset s(h, p);
  const SubgroupFamily& rad = s.radical_family();
  std::vector<int> fixed = fixed_member_indices_under(rad, autos);
  std::set<int> fixed_set(fixed.begin(), fixed.end());

  // N_G(A) acting on the invariant members by conjugation.
  std::vector<int> nga;
  for (int x : pr.g.elems) {
    bool ok = true;
    for (int a : agens)
      if (!pr.a.contains(parent.conj(a, x))) {
        ok = false;
        break;
      }
    if (ok) nga.push_back(x);
  }
  std::vector<int> ngens = generating_set(make_subgroup(parent, nga));

  std::map<int, int> orbit_of;  // fixed member -> row id
  CentralizedReport rep;
  for (int m0 : fixed) {
    if (orbit_of.count(m0)) continue;
    const int row = static_cast<int>(rep.rows.size());
    std::vector<int> frontier{m0};
    orbit_of[m0] = row;
    int least = m0;
    long long orb = 0;
    while (!frontier.empty()) {
      int m = frontier.back();
      frontier.pop_back();
      ++orb;
      least = std::min(least, m);
      for (int n : ngens) {
        std::vector<int> img(rad.members[m].size());
        for (size_t i = 0; i < img.size(); ++i)
          img[i] = to_sg[parent.conj(sg.to_parent[rad.members[m][i]], n)];
        std::sort(img.begin(), img.end());
        int mi = rad.find_member(img);
        internal_check(mi >= 0 && fixed_set.count(mi),
                       "normalizer orbit leaves the invariant members");
        if (!orbit_of.count(mi)) {
          orbit_of[mi] = row;
          frontier.push_back(mi);
        }
      }
    }
    CentralizedRow r;
    r.rep = rad.members[least];
    r.rep_order = static_cast<long long>(r.rep.size());
    r.orbit_size = orb;
    long long cent = 0;
    for (int e : r.rep) {
      bool fixed_pt = true;
      for (const auto& sigma : autos)
        if (sigma[e] != e) {
          fixed_pt = false;
          break;
        }
      if (fixed_pt) ++cent;
    }
    r.centralized_order = cent;
    rep.rows.push_back(std::move(r));
  }

  // Weight per row: -chi~ of the invariant members of the p-subgroup poset
  // of N(K)/K, for the action induced on the quotient.
  BigInt chi_fixed = reduced_euler_of_members(rad, fixed);
  for (CentralizedRow& r : rep.rows) {
    if (r.rep_order == static_cast<long long>(h.order())) {
      r.weight = 1;  // quotient poset is empty
      continue;
    }
    if (r.rep_order == 1) {
      r.weight = -chi_fixed;
      continue;
    }
    Subgroup k = make_subgroup(h, r.rep);
    Subgroup n = normalizer_via_orbit(k);
    QuotientGroup q = quotient_group(n, k);
    if (q.group.order() % p != 0) {
      r.weight = 1;
      continue;
    }
    std::vector<std::vector<int>> qautos;
    for (int a : agens)
      qautos.push_back(q.induced_automorphism_perm(parent.perm(a)));
    BrownPoset qs(q.group, p);
    r.weight = -qs.fixed_reduced_euler_under(qautos);
  }

  // Identity (1): the weighted count of invariant members recovers the
  // number of p-singular elements centralized by A.
  long long cgap = 0;
  for (int x : pr.g.elems) {
    if (!is_p_power(parent.element_order(x), p)) continue;
    bool cent = true;
    for (int a : agens)
      if (parent.conj(x, a) != x) {
        cent = false;
        break;
      }
    if (cent) ++cgap;
  }
  rep.centralized_p_singular = cgap;
  BigInt total = 0;
  for (const CentralizedRow& r : rep.rows)
    total += r.weight * big(r.centralized_order) * big(r.orbit_size);
  internal_check(total == big(cgap), "weighted centralized count");

  // Identity (0): the weights above each invariant member sum to one.
  for (const CentralizedRow& r : rep.rows) {
    BigInt affine = 0;
    for (int m : fixed) {
      const std::vector<int>& k = rad.members[m];
      if (std::includes(k.begin(), k.end(), r.rep.begin(), r.rep.end()))
        affine += rep.rows[orbit_of[m]].weight;
    }
    internal_check(affine == 1, "affine row sum");
  }

  // Identity (2): |C_G(A)|_p divides chi~ of the invariant poset.
  rep.fixed_reduced_euler = chi_fixed;
  Subgroup cga = centralizer_in(pr.g, agens);
  rep.centralizer_p_part = subgroup_p_part(cga, p);
  internal_check(chi_fixed % big(rep.centralizer_p_part) == 0,
                 "centralizer p-part divisibility");
  return rep;
}

namespace {

// Ideal data for one coprime action, given as generator images on element
// indices.  a_rep and a_order are left to the caller.
IdealRow ideal_row_for_action(const BrownPoset& s,
                              const std::vector<std::vector<int>>& autos) {
  const PermutationGroup& g = s.group();
  const long long p = s.prime();
  const SubgroupFamily& fam = s.family();
  const SubgroupFamily& rad = s.radical_family();
  IdealRow row;

  std::vector<int> fixed = fixed_member_indices_under(fam, autos);

  auto centralized_count = [&](const std::vector<int>& k) {
    long long c = 0;
    for (int e : k) {
      bool cent = true;
      for (const std::vector<int>& img : autos)
        if (img[e] != e) {
          cent = false;
          break;
        }
      if (cent) ++c;
    }
    return c;
  };

  std::vector<int> not_centralized, middle, centralized_ideal, pointwise,
      commutator_full;
  for (int m : fixed) {
    const std::vector<int>& k = fam.members[m];
    long long c = centralized_count(k);
    long long sz = static_cast<long long>(k.size());
    if (c < sz) not_centralized.push_back(m);
    if (c > 1 && c < sz) middle.push_back(m);
    if (c > 1) centralized_ideal.push_back(m);
    if (c == sz) pointwise.push_back(m);
    std::vector<int> comm_gens;
    for (int e : k)
      for (const std::vector<int>& img : autos)
        comm_gens.push_back(g.mul(g.inv(e), img[e]));
    if (subgroup_closure(g, comm_gens).order() == sz)
      commutator_full.push_back(m);
  }

  row.chi_fixed = reduced_euler_of_members(fam, fixed);
  internal_check(row.chi_fixed ==
                     reduced_euler_of_members(
                         rad, fixed_member_indices_under(rad, autos)),
                 "fixed poset against its radical part");
  row.chi_not_centralized = reduced_euler_of_members(fam, not_centralized);
  row.chi_middle = reduced_euler_of_members(fam, middle);
  row.chi_centralized_ideal = reduced_euler_of_members(fam, centralized_ideal);
  row.chi_commutator_full = reduced_euler_of_members(fam, commutator_full);
  BigInt chi_pointwise = reduced_euler_of_members(fam, pointwise);

  std::vector<int> cga_elems;
  for (long long e = 0; e < g.order(); ++e) {
    bool cent = true;
    for (const std::vector<int>& img : autos)
      if (img[e] != static_cast<int>(e)) {
        cent = false;
        break;
      }
    if (cent) cga_elems.push_back(static_cast<int>(e));
  }
  Subgroup cga = make_subgroup(g, cga_elems);
  StandaloneGroup sc = subgroup_as_group(cga);
  BrownPoset cb(sc.group, p);
  row.chi_centralizer_brown = cb.reduced_euler();
  internal_check(chi_pointwise == row.chi_centralizer_brown,
                 "pointwise-centralized members");

  row.centralizer_p_part = subgroup_p_part(cga, p);

  row.reduction_hypothesis = true;
  for (long long m = 0; m < rad.member_count(); ++m) {
    if (rad.members[m].size() == 1) continue;
    if (centralized_count(rad.members[m]) == 1) {
      row.reduction_hypothesis = false;
      break;
    }
  }

  internal_check(row.chi_fixed - row.chi_centralizer_brown ==
                     row.chi_not_centralized - row.chi_middle,
                 "difference identity");
  internal_check(row.chi_centralized_ideal == row.chi_centralizer_brown,
                 "centralized ideal adjunction");
  internal_check(row.chi_not_centralized == row.chi_commutator_full,
                 "commutator ideal adjunction");
  internal_check(
      row.chi_fixed == chi_pointwise + row.chi_commutator_full - row.chi_middle,
      "ideal decomposition of the fixed poset");
  internal_check((row.chi_not_centralized - row.chi_middle) %
                         big(row.centralizer_p_part) ==
                     0,
                 "ideal congruence");
  internal_check(row.chi_fixed % big(row.centralizer_p_part) == 0,
                 "fixed-poset divisibility");
  internal_check(row.chi_centralizer_brown % big(row.centralizer_p_part) == 0,
                 "centralizer-poset divisibility");
  if (row.reduction_hypothesis)
    internal_check(row.chi_fixed == row.chi_centralizer_brown,
                   "reduction to the centralizer");
  return row;
}

IdealRow ideal_row_trivial_action(const BrownPoset& s) {
  // Trivial action: every ideal is empty or everything.
  IdealRow row;
  row.chi_fixed = s.reduced_euler();
  row.chi_centralizer_brown = row.chi_fixed;
  row.chi_not_centralized = -1;
  row.chi_middle = -1;
  row.chi_commutator_full = -1;
  row.chi_centralized_ideal = row.chi_fixed;
  row.centralizer_p_part = p_part(s.group().order(), s.prime());
  row.reduction_hypothesis = true;
  internal_check(row.chi_fixed % big(row.centralizer_p_part) == 0,
                 "fixed-poset divisibility");
  return row;
}

}  // namespace

IdealTable ideal_decomposition_table(const BrownPoset& s) {
  const PermutationGroup& g = s.group();
  const long long p = s.prime();

  IdealTable t;
  for (const AbelianClassInfo& info :
       abelian_classes_in(full_subgroup(g), {p})) {
    IdealRow row;
    if (info.rep.size() == 1) {
      row = ideal_row_trivial_action(s);
    } else {
      Subgroup a = make_subgroup(g, info.rep);
      std::vector<std::vector<int>> autos;
      for (int x : generating_set(a)) {
        std::vector<int> img(g.order());
        for (long long e = 0; e < g.order(); ++e)
          img[e] = g.conj(static_cast<int>(e), x);
        autos.push_back(std::move(img));
      }
      row = ideal_row_for_action(s, autos);
    }
    row.a_rep = info.rep;
    row.a_order = static_cast<long long>(info.rep.size());
    t.rows.push_back(std::move(row));
  }
  return t;
}

IdealRow ideal_decomposition(const GroupPair& pr, long long p) {
  check(pr.a.order() % p != 0, "acting group must be p-regular");
  const PermutationGroup& parent = *pr.parent;
  StandaloneGroup sg = subgroup_as_group(pr.g);
  const PermutationGroup& h = sg.group;
  std::vector<long long> to_sg(parent.order(), -1);
  for (long long i = 0; i < h.order(); ++i) to_sg[sg.to_parent[i]] = i;

  BrownPoset s(h, p);
  std::vector<int> agens = generating_set(pr.a);
  IdealRow row;
  if (agens.empty()) {
    row = ideal_row_trivial_action(s);
  } else {
    std::vector<std::vector<int>> autos;
    for (int a : agens) {
      std::vector<int> img(h.order());
      for (long long i = 0; i < h.order(); ++i) {
        long long y = to_sg[parent.conj(sg.to_parent[i], a)];
        internal_check(y >= 0, "action must preserve the acted-on group");
        img[i] = static_cast<int>(y);
      }
      autos.push_back(std::move(img));
    }
    row = ideal_row_for_action(s, autos);
  }
  row.a_rep = pr.a.elems;
  row.a_order = pr.a.order();
  return row;
}

}  // namespace engine
