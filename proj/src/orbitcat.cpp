#include "engine/orbitcat.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "engine/category.hpp"
#include "engine/families.hpp"
#include "engine/poset.hpp"
#include "engine/subgroup.hpp"

namespace engine {

namespace {

bool is_p_power(long long n, long long p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

bool class_rep_is_cyclic(const PermutationGroup& g, const SubgroupFamily& f,
                         int c) {
  const std::vector<int>& k = f.members[f.rep_of[c]];
  const long long n = static_cast<long long>(k.size());
  for (int e : k)
    if (g.element_order(e) == n) return true;
  return false;
}

}  // namespace

OrbitCategoryEuler orbit_category_euler(const PermutationGroup& g,
                                        long long p) {
  BrownPoset s(g, p);
  const SubgroupFamily& fam = s.family();
  const int nc = fam.num_classes();
  OrbitCategoryEuler r;

  r.closed_form = make_rat(big(count_p_singular(g, p)), big(g.order()));

  // Radical-class weighting through the quotient posets.
  WeightingTable w = brown_weighting(s);
  BigRat wsum;
  for (size_t a = 0; a < w.orders.size(); ++a)
    wsum += make_rat(w.quotient_weights[a], big(w.quotient_orders[a]));
  r.weighting = wsum;

  // hom(rep_a, rep_b) = |N_G(rep_a, rep_b)| / |rep_b|, and the transporter
  // count factors as counts[a][b] |N_G(rep_b)|.
  auto counts = class_inclusion_counts(fam);
  RatMatrix hom(nc, std::vector<BigRat>(nc));
  for (int a = 0; a < nc; ++a) {
    for (int b = 0; b < nc; ++b) {
      BigInt num = big(counts[a][b]) * big(fam.normalizer_order(b));
      internal_check(num % big(fam.class_order(b)) == 0,
                     "hom count integrality");
      hom[a][b] = BigRat(num / big(fam.class_order(b)));
    }
  }

  // Cyclic coweighting, verified against the per-object conditions.
  std::vector<BigRat> cow(nc);
  for (int b = 0; b < nc; ++b) {
    if (fam.class_order(b) == 1)
      cow[b] = make_rat(big(1), big(g.order()));
    else if (class_rep_is_cyclic(g, fam, b))
      cow[b] = make_rat(big(p - 1) * big(fam.class_order(b)),
                        big(p) * big(g.order()));
  }
  for (int a = 0; a < nc; ++a) {
    BigRat lhs;
    for (int b = 0; b < nc; ++b) {
      if (cow[b] == 0) continue;
      lhs += BigRat(big(fam.class_size[b])) * cow[b] * hom[b][a];
    }
    internal_check(lhs == 1, "cyclic coweighting conditions");
  }
  BigRat csum;
  for (int b = 0; b < nc; ++b)
    csum += BigRat(big(fam.class_size[b])) * cow[b];
  r.coweighting = csum;

  std::optional<BigRat> ze = category_euler(CategoryData{hom});
  internal_check(ze.has_value(), "orbit category zeta system");
  r.zeta_solve = *ze;

  internal_check(r.weighting == r.closed_form, "weighting path");
  internal_check(r.coweighting == r.closed_form, "coweighting path");
  internal_check(r.zeta_solve == r.closed_form, "zeta-solve path");
  return r;
}

WeightingTable global_identity(const PermutationGroup& g, long long p) {
  BrownPoset s(g, p);
  WeightingTable t = brown_weighting(s);
  const int nc = static_cast<int>(t.orders.size());

  // Recheck the affine rows and the member count through the quotient-path
  // weights, independently of the solved ones.
  for (int a = 0; a < nc; ++a) {
    BigInt row = 0;
    for (int b = 0; b < nc; ++b)
      row += big(t.counts[a][b]) * t.quotient_weights[b];
    internal_check(row == 1, "affine row");
  }
  BigInt total = 0;
  for (int a = 0; a < nc; ++a)
    total += big(t.lengths[a]) * t.quotient_weights[a] * big(t.orders[a]);
  internal_check(total == big(t.p_singular_count), "weighted member count");
  return t;
}

BridgeReport frobenius_brown_bridge(const PermutationGroup& g, long long p) {
  check(is_prime(p), "bridge needs a prime");
  BrownPoset s(g, p);
  WeightingTable w = brown_weighting(s);

  BridgeReport r;
  r.p_singular_count = w.p_singular_count;
  r.poset_reduced_euler = w.poset_reduced_euler;
  const BigInt gp = big(p_part(g.order(), p));
  internal_check(big(r.p_singular_count) % gp == 0,
                 "p-part divides the p-singular count");
  internal_check(r.poset_reduced_euler % gp == 0,
                 "p-part divides the poset characteristic");

  BigInt total = big(r.p_singular_count) + r.poset_reduced_euler;
  for (size_t a = 0; a < w.orders.size(); ++a) {
    if (w.orders[a] == 1) continue;
    BridgeTerm t;
    t.rep_order = w.orders[a];
    t.quotient_order = w.quotient_orders[a];
    t.quotient_euler = -w.quotient_weights[a];
    const long long qp = p_part(t.quotient_order, p);
    const long long qpp = t.quotient_order / qp;
    internal_check(t.quotient_euler % big(qp) == 0, "term integrality");
    internal_check(g.order() % qpp == 0, "quotient p'-part divides |G|");
    const long long cofactor = g.order() / qpp;
    internal_check(big(cofactor) % gp == 0, "p-part divides the cofactor");
    t.value = (t.quotient_euler / big(qp)) * big(cofactor);
    total += t.value;
    r.terms.push_back(std::move(t));
  }
  internal_check(total == 0, "bridge identity");
  return r;
}

namespace {

struct ActedPair {
  StandaloneGroup sg;
  std::vector<int> agens;                // parent element indices
  std::vector<std::vector<int>> autos;   // generator images on sg elements
  std::vector<int> fixed;                // C_G(A) as sg element indices
};

ActedPair realize_pair(const GroupPair& pr) {
  ActedPair ap{subgroup_as_group(pr.g), generating_set(pr.a), {}, {}};
  const PermutationGroup& h = ap.sg.group;
  const PermutationGroup& parent = *pr.parent;
  std::vector<long long> to_sg(parent.order(), -1);
  for (long long i = 0; i < h.order(); ++i) to_sg[ap.sg.to_parent[i]] = i;
  for (int a : ap.agens) {
    std::vector<int> img(h.order());
    for (long long i = 0; i < h.order(); ++i) {
      long long y = to_sg[parent.conj(ap.sg.to_parent[i], a)];
      internal_check(y >= 0, "action must preserve the acted-on group");
      img[i] = static_cast<int>(y);
    }
    ap.autos.push_back(std::move(img));
  }
  for (long long e = 0; e < h.order(); ++e) {
    bool fix = true;
    for (const std::vector<int>& img : ap.autos)
      if (img[e] != static_cast<int>(e)) {
        fix = false;
        break;
      }
    if (fix) ap.fixed.push_back(static_cast<int>(e));
  }
  return ap;
}

}  // namespace

std::optional<BigRat> centralized_interval_euler(
    const PermutationGroup& v, const std::vector<std::vector<int>>& autos) {
  std::vector<std::vector<int>> objs;
  for (std::vector<int>& u : all_subgroups_of(full_subgroup(v))) {
    if (static_cast<long long>(u.size()) == v.order()) continue;
    bool invariant = true;
    for (const std::vector<int>& img : autos) {
      for (int e : u)
        if (!std::binary_search(u.begin(), u.end(), img[e])) {
          invariant = false;
          break;
        }
      if (!invariant) break;
    }
    if (invariant) objs.push_back(std::move(u));
  }
  std::sort(objs.begin(), objs.end());
  const int n = static_cast<int>(objs.size());
  if (n == 0) return BigRat(0);

  // hom(U1, U2) = |{x : [x, A] <= U2}| / |U2| when U1 <= U2.
  RatMatrix hom(n, std::vector<BigRat>(n));
  for (int j = 0; j < n; ++j) {
    long long fix = 0;
    for (long long x = 0; x < v.order(); ++x) {
      bool ok = true;
      for (const std::vector<int>& img : autos) {
        int c = v.mul(v.inv(static_cast<int>(x)), img[x]);
        if (!std::binary_search(objs[j].begin(), objs[j].end(), c)) {
          ok = false;
          break;
        }
      }
      if (ok) ++fix;
    }
    const long long sz = static_cast<long long>(objs[j].size());
    internal_check(fix % sz == 0, "interval hom integrality");
    for (int i = 0; i < n; ++i) {
      if (std::includes(objs[j].begin(), objs[j].end(), objs[i].begin(),
                        objs[i].end()))
        hom[i][j] = BigRat(big(fix / sz));
    }
  }
  return category_euler(CategoryData{hom});
}

CentralizedOrbitEuler centralized_orbit_category_euler(const GroupPair& pr,
                                                       long long p,
                                                       OrbitVariant variant) {
  check(is_prime(p), "orbit category needs a prime");
  ActedPair ap = realize_pair(pr);
  const PermutationGroup& h = ap.sg.group;
  const PermutationGroup& parent = *pr.parent;
  const long long ca_order = static_cast<long long>(ap.fixed.size());
  const bool p_regular = pr.a.order() % p != 0;

  BrownPoset s(h, p);
  const SubgroupFamily& fam = s.family();
  std::vector<int> objs = fixed_member_indices_under(fam, ap.autos);
  const int n = static_cast<int>(objs.size());
  internal_check(n > 0, "invariant object set");

  std::vector<const std::vector<int>*> mem(n);
  std::vector<std::vector<int>> gens(n);
  std::vector<long long> cfix(n, 0);  // |C_K(A)|
  for (int i = 0; i < n; ++i) {
    mem[i] = &fam.members[objs[i]];
    gens[i] = generating_set(fam.member_subgroup(objs[i]));
    for (int e : *mem[i])
      if (std::binary_search(ap.fixed.begin(), ap.fixed.end(), e)) ++cfix[i];
  }

  // Raw transporter counts.  cen asks [g, A] <= K, tra asks g in C_G(A);
  // free drops the H^g <= K condition entirely.
  std::vector<std::vector<long long>> cen_raw(n, std::vector<long long>(n, 0));
  std::vector<std::vector<long long>> tra_raw(n, std::vector<long long>(n, 0));
  std::vector<long long> free_raw(n, 0);
  const int na = static_cast<int>(ap.autos.size());
  std::vector<int> comm(na);
  for (long long gi = 0; gi < h.order(); ++gi) {
    const int gidx = static_cast<int>(gi);
    const int ginv = h.inv(gidx);
    bool central = true;
    for (int t = 0; t < na; ++t) {
      comm[t] = h.mul(ginv, ap.autos[t][gidx]);
      if (comm[t] != 0) central = false;
    }
    for (int j = 0; j < n; ++j) {
      bool comm_ok = true;
      for (int t = 0; t < na; ++t)
        if (!std::binary_search(mem[j]->begin(), mem[j]->end(), comm[t])) {
          comm_ok = false;
          break;
        }
      if (comm_ok) ++free_raw[j];
      if (!comm_ok && !central) continue;
      for (int i = 0; i < n; ++i) {
        bool maps = true;
        for (int e : gens[i])
          if (!std::binary_search(mem[j]->begin(), mem[j]->end(),
                                  h.conj(e, gidx))) {
            maps = false;
            break;
          }
        if (!maps) continue;
        if (comm_ok) ++cen_raw[i][j];
        if (central) ++tra_raw[i][j];
      }
    }
  }

  RatMatrix hom_cen(n, std::vector<BigRat>(n));
  RatMatrix hom_tra(n, std::vector<BigRat>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const long long ksz = static_cast<long long>(mem[j]->size());
      internal_check(cen_raw[i][j] % ksz == 0, "hom count integrality");
      hom_cen[i][j] = BigRat(big(cen_raw[i][j] / ksz));
      internal_check(tra_raw[i][j] % cfix[j] == 0, "hom count integrality");
      hom_tra[i][j] = BigRat(big(tra_raw[i][j] / cfix[j]));
      if (p_regular)
        internal_check(hom_cen[i][j] == hom_tra[i][j],
                       "variants agree on p-regular actions");
    }
  }
  const RatMatrix& hom = variant == OrbitVariant::centralized ? hom_cen
                                                              : hom_tra;
  const std::vector<std::vector<long long>>& raw =
      variant == OrbitVariant::centralized ? cen_raw : tra_raw;

  // Isomorphism classes: objects of equal order joined by any morphism.
  std::vector<int> cls(n, -1);
  std::vector<int> reps;
  for (int i = 0; i < n; ++i) {
    if (cls[i] != -1) continue;
    cls[i] = static_cast<int>(reps.size());
    for (int j = i + 1; j < n; ++j)
      if (mem[i]->size() == mem[j]->size() && raw[i][j] > 0) cls[j] = cls[i];
    reps.push_back(i);
  }
  const int m = static_cast<int>(reps.size());

  CentralizedOrbitEuler out;
  out.classes.resize(m);
  for (int c = 0; c < m; ++c) {
    out.classes[c].rep = *mem[reps[c]];
    out.classes[c].self_hom = rat_num(hom[reps[c]][reps[c]]);
  }
  for (int i = 0; i < n; ++i) ++out.classes[cls[i]].size;

  // Orbit-counting identities for the self-morphism counts.
  for (int c = 0; c < m; ++c) {
    const int i = reps[c];
    const long long ksz = static_cast<long long>(mem[i]->size());
    if (variant == OrbitVariant::centralized) {
      internal_check(big(out.classes[c].size) * big(cen_raw[i][i]) ==
                         big(free_raw[i]),
                     "class size against the free coset count");
      if (cfix[i] == ksz && std::gcd(ksz, pr.a.order()) == 1)
        internal_check(big(out.classes[c].size) * big(cen_raw[i][i]) ==
                           big(ca_order),
                       "centralized class size");
    } else {
      internal_check(big(out.classes[c].size) * big(tra_raw[i][i]) ==
                         big(ca_order),
                     "orbit-stabilizer for the class size");
    }
  }

  RatMatrix skel(m, std::vector<BigRat>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) skel[a][b] = hom[reps[a]][reps[b]];
  std::optional<BigRat> chi = category_euler(CategoryData{skel});
  out.defined = chi.has_value();
  if (out.defined) out.chi = *chi;

  // Radical-class weighting: -chi~ of the invariant part of the quotient
  // poset over the self-morphism count.
  {
    BigRat wsum;
    for (int c = 0; c < m; ++c) {
      const int i = reps[c];
      if (!fam.radical[fam.class_of[objs[i]]]) continue;
      BigInt numer;
      const long long ksz = static_cast<long long>(mem[i]->size());
      if (ksz == h.order()) {
        numer = 1;
      } else if (ksz == 1) {
        numer = -s.fixed_reduced_euler_under(ap.autos);
      } else {
        Subgroup k = fam.member_subgroup(objs[i]);
        Subgroup nrm = normalizer_via_orbit(k);
        QuotientGroup q = quotient_group(nrm, k);
        if (q.group.order() % p != 0) {
          numer = 1;
        } else {
          std::vector<std::vector<int>> qautos;
          for (int a : ap.agens)
            qautos.push_back(q.induced_automorphism_perm(parent.perm(a)));
          BrownPoset qs(q.group, p);
          numer = -qs.fixed_reduced_euler_under(qautos);
        }
      }
      wsum += make_rat(numer, out.classes[c].self_hom);
    }
    if (out.defined)
      internal_check(wsum == out.chi, "radical weighting path");
  }

  if (variant == OrbitVariant::transporter) {
    // The Euler characteristic is the p-singular density of C_G(A).
    long long singular = 0;
    for (int e : ap.fixed)
      if (is_p_power(h.element_order(e), p)) ++singular;
    BigRat density = make_rat(big(singular), big(ca_order));
    internal_check(out.defined, "transporter zeta system");
    internal_check(out.chi == density, "p-singular density");

    // Cyclic coweighting concentrated on centralized cyclic subgroups.
    std::vector<BigRat> cow(n);
    for (int i = 0; i < n; ++i) {
      const long long ksz = static_cast<long long>(mem[i]->size());
      if (ksz == 1)
        cow[i] = make_rat(big(1), big(ca_order));
      else if (cfix[i] == ksz) {
        bool cyclic = false;
        for (int e : *mem[i])
          if (h.element_order(e) == ksz) {
            cyclic = true;
            break;
          }
        if (cyclic)
          cow[i] = make_rat(big(p - 1) * big(ksz), big(p) * big(ca_order));
      }
    }
    for (int j = 0; j < n; ++j) {
      BigRat lhs;
      for (int i = 0; i < n; ++i) {
        if (cow[i] == 0) continue;
        lhs += cow[i] * hom[i][j];
      }
      internal_check(lhs == 1, "cyclic coweighting conditions");
    }
    BigRat csum;
    for (int i = 0; i < n; ++i) csum += cow[i];
    internal_check(csum == density, "cyclic coweighting total");
  } else if (p_regular) {
    // Frattini-quotient coweighting, per class; guarded by quotient size.
    // Only p-regular actions admit this coweighting: it needs every hom
    // coset to carry a fixed representative, which can fail otherwise.
    bool have_all = true;
    BigRat csum;
    for (int c = 0; c < m && have_all; ++c) {
      const int i = reps[c];
      const long long ksz = static_cast<long long>(mem[i]->size());
      BigRat k_class;
      if (ksz == 1) {
        k_class = make_rat(big(1), big(ca_order));
      } else {
        Subgroup k = fam.member_subgroup(objs[i]);
        QuotientGroup q = quotient_group(k, frattini_subgroup(k));
        if (q.group.order() > 256) {
          have_all = false;
          break;
        }
        std::vector<std::vector<int>> vautos;
        for (int a : ap.agens)
          vautos.push_back(q.induced_automorphism_perm(parent.perm(a)));
        std::optional<BigRat> vi = centralized_interval_euler(q.group, vautos);
        if (!vi.has_value()) {
          have_all = false;
          break;
        }
        internal_check(free_raw[i] % ksz == 0, "coset count integrality");
        k_class = (BigRat(1) - *vi) / BigRat(big(free_raw[i] / ksz));
      }
      csum += BigRat(big(out.classes[c].size)) * k_class;
    }
    if (have_all && out.defined)
      internal_check(csum == out.chi, "Frattini coweighting path");
  }
  return out;
}

}  // namespace engine
