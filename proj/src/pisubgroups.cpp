#include "engine/pisubgroups.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "engine/category.hpp"
#include "engine/families.hpp"
#include "engine/poset.hpp"
#include "engine/subgroup.hpp"

namespace engine {

namespace {

long long pi_part_of(long long n, const std::vector<long long>& primes) {
  long long r = 1;
  for (long long p : primes) r *= p_part(n, p);
  return r;
}

std::vector<long long> checked_primes(std::vector<long long> primes) {
  check(!primes.empty(), "pi must be a nonempty set of primes");
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (long long p : primes) check(is_prime(p), "pi must consist of primes");
  return primes;
}

// -chi~(H // S_G^pi) as the Mobius sum over the overgroup members of the
// representative, the representative itself included.
BigInt mobius_weight_at(const SubgroupFamily& f, int rep_member) {
  const std::vector<int>& h = f.members[rep_member];
  const long long hsz = static_cast<long long>(h.size());
  std::vector<int> overs;
  for (int m = 0; m < static_cast<int>(f.members.size()); ++m) {
    const std::vector<int>& k = f.members[m];
    const long long ksz = static_cast<long long>(k.size());
    if (ksz < hsz || ksz % hsz != 0) continue;
    if (hsz > 1 &&
        !std::includes(k.begin(), k.end(), h.begin(), h.end()))
      continue;
    overs.push_back(m);
  }
  std::stable_sort(overs.begin(), overs.end(), [&](int x, int y) {
    return f.members[x].size() < f.members[y].size();
  });
  internal_check(!overs.empty() && f.members[overs[0]] == h,
                 "overgroup family");

  std::vector<BigInt> mu(overs.size());
  mu[0] = 1;
  BigInt total = 1;
  for (size_t j = 1; j < overs.size(); ++j) {
    const std::vector<int>& kj = f.members[overs[j]];
    BigInt acc = 0;
    for (size_t i = 0; i < j; ++i) {
      if (mu[i] == 0) continue;
      const std::vector<int>& ki = f.members[overs[i]];
      if (ki.size() >= kj.size() || kj.size() % ki.size() != 0) continue;
      if (!std::includes(kj.begin(), kj.end(), ki.begin(), ki.end()))
        continue;
      acc += mu[i];
    }
    mu[j] = -acc;
    total += mu[j];
  }
  return total;
}

struct PiCore {
  SubgroupFamily family;
  std::vector<int> order_idx;  // table row -> family class id
  PiWeightingTable table;
};

PiCore build_pi_core(const PermutationGroup& g,
                     const std::vector<long long>& primes) {
  PiCore core;
  std::vector<long long> ps = checked_primes(primes);
  core.family = enumerate_pi_subgroups(g, ps);
  const SubgroupFamily& f = core.family;
  const int nc = f.num_classes();

  std::vector<int> idx(nc);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int x, int y) {
    if (f.class_order(x) != f.class_order(y))
      return f.class_order(x) > f.class_order(y);
    return f.rep_of[x] < f.rep_of[y];
  });
  core.order_idx = idx;

  std::vector<std::vector<long long>> raw = class_inclusion_counts(f);
  PiWeightingTable& t = core.table;
  t.primes = ps;
  t.orders.resize(nc);
  t.lengths.resize(nc);
  t.normalizer_orders.resize(nc);
  t.counts.assign(nc, std::vector<long long>(nc));
  t.weights.assign(nc, BigInt(0));
  for (int i = 0; i < nc; ++i) {
    t.orders[i] = f.class_order(idx[i]);
    t.lengths[i] = f.class_size[idx[i]];
    t.normalizer_orders[i] = f.normalizer_order(idx[i]);
    for (int j = 0; j < nc; ++j) t.counts[i][j] = raw[idx[i]][idx[j]];
  }
  for (int i = 0; i < nc; ++i) {
    internal_check(t.counts[i][i] == 1, "unit diagonal");
    for (int j = i + 1; j < nc; ++j)
      internal_check(t.counts[i][j] == 0, "triangular class table");
  }
  for (int i = 0; i < nc; ++i) {
    BigInt w = 1;
    for (int j = 0; j < i; ++j) w -= big(t.counts[i][j]) * t.weights[j];
    t.weights[i] = w;
  }
  for (int i = 0; i < nc; ++i) {
    BigInt m = mobius_weight_at(f, f.rep_of[idx[i]]);
    internal_check(m == t.weights[i], "Mobius weighting path");
  }
  t.pi_singular_count = count_pi_singular(g, ps);
  return core;
}

bool class_is_cyclic(const PermutationGroup& g, const SubgroupFamily& f,
                     int c) {
  const long long o = f.class_order(c);
  for (int e : f.members[f.rep_of[c]])
    if (g.element_order(e) == o) return true;
  return false;
}

}  // namespace

PiWeightingTable pi_weighting(const PermutationGroup& g,
                              const std::vector<long long>& primes) {
  return build_pi_core(g, primes).table;
}

PiGlobalReport pi_global_identity(const PermutationGroup& g,
                                  const std::vector<long long>& primes) {
  PiCore core = build_pi_core(g, primes);
  const PiWeightingTable& t = core.table;
  const int nc = static_cast<int>(t.orders.size());

  for (int i = 0; i < nc; ++i) {
    BigInt row = 0;
    for (int j = 0; j < nc; ++j) row += big(t.counts[i][j]) * t.weights[j];
    internal_check(row == 1, "affine overgroup identity");
  }

  BigInt total = 0;
  for (int i = 0; i < nc; ++i)
    total += big(t.lengths[i]) * t.weights[i] * big(t.orders[i]);
  internal_check(total == big(t.pi_singular_count), "pi-singular count");

  BigRat density = make_rat(big(t.pi_singular_count), big(g.order()));

  BigRat wsum;
  for (int i = 0; i < nc; ++i)
    wsum += make_rat(t.weights[i],
                     big(t.normalizer_orders[i] / t.orders[i]));
  internal_check(wsum == density, "orbit weighting route");

  BigRat csum;
  for (int i = 0; i < nc; ++i) {
    if (!class_is_cyclic(g, core.family, core.order_idx[i])) continue;
    csum += make_rat(big(t.lengths[i]) * big(euler_totient(t.orders[i])),
                     big(g.order()));
  }
  internal_check(csum == density, "cyclic coweighting route");

  CategoryData cat;
  cat.hom.assign(nc, std::vector<BigRat>(nc));
  for (int i = 0; i < nc; ++i)
    for (int j = 0; j < nc; ++j) {
      BigInt raw = big(t.counts[i][j]) * big(t.normalizer_orders[j]);
      internal_check(raw % big(t.orders[j]) == 0, "transporter count");
      cat.hom[i][j] = BigRat(raw / big(t.orders[j]));
    }
  std::optional<BigRat> ce = category_euler(cat);
  internal_check(ce.has_value(), "orbit category zeta system");
  internal_check(*ce == density, "orbit zeta route");

  PiGlobalReport out;
  out.table = std::move(core.table);
  out.orbit_euler = density;
  return out;
}

BigRat cyclic_orbit_coweight(const PermutationGroup& k) {
  const long long n = k.order();
  bool cyclic = false;
  for (int e = 0; e < n && !cyclic; ++e)
    if (k.element_order(e) == n) cyclic = true;
  BigRat val = cyclic ? make_rat(big(euler_totient(n)), big(n)) : BigRat(0);

  SubgroupFamily f = enumerate_all_subgroups(k);
  std::vector<std::vector<long long>> counts = class_inclusion_counts(f);
  std::vector<int> proper;
  for (int c = 0; c < f.num_classes(); ++c)
    if (f.class_order(c) < n) proper.push_back(c);

  BigRat chi;
  if (!proper.empty()) {
    const int m = static_cast<int>(proper.size());
    CategoryData cat;
    cat.hom.assign(m, std::vector<BigRat>(m));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        const int a = proper[i];
        const int b = proper[j];
        BigInt raw = big(counts[a][b]) * big(f.normalizer_order(b));
        internal_check(raw % big(f.class_order(b)) == 0, "transporter count");
        cat.hom[i][j] = BigRat(raw / big(f.class_order(b)));
      }
    std::optional<BigRat> ce = category_euler(cat);
    internal_check(ce.has_value(), "proper-subgroup orbit category");
    chi = *ce;
  }
  internal_check(val == BigRat(1) - chi, "cyclic coweight oracle");
  return val;
}

HioReport hio_divisibility(const PermutationGroup& g,
                           const std::vector<long long>& primes) {
  PiCore core = build_pi_core(g, primes);
  const SubgroupFamily& f = core.family;
  const PiWeightingTable& t = core.table;
  const int nc = static_cast<int>(t.orders.size());
  const long long hall_order = pi_part_of(g.order(), t.primes);

  HioReport out;
  out.primes = t.primes;
  out.rows.resize(nc);
  for (int i = 0; i < nc; ++i) {
    HioRow& row = out.rows[i];
    row.order = t.orders[i];
    row.norm_index = t.normalizer_orders[i] / t.orders[i];
    row.norm_index_pi = pi_part_of(row.norm_index, t.primes);
    row.weight = t.weights[i];
    internal_check(row.weight % big(row.norm_index_pi) == 0,
                   "pi-part divisibility");
    row.quotient = row.weight / big(row.norm_index_pi);

    if (row.order == hall_order) {
      internal_check(row.weight == 1, "Hall weight");
    } else if (row.weight != 0) {
      // Nonzero weight forces H to be a maximal pi-subgroup of the
      // intersection O of the normalizers of its strict pi-overgroups.
      // Once the pi-part of the partial intersection drops to |H| no
      // larger pi-subgroup fits inside O and maximality is certified;
      // otherwise the overgroups are tested against O directly.
      const std::vector<int>& h = f.members[f.rep_of[core.order_idx[i]]];
      std::vector<int> overs;
      for (int m = 0; m < static_cast<int>(f.members.size()); ++m) {
        const std::vector<int>& k = f.members[m];
        if (k.size() <= h.size() || k.size() % h.size() != 0) continue;
        if (h.size() > 1 &&
            !std::includes(k.begin(), k.end(), h.begin(), h.end()))
          continue;
        overs.push_back(m);
      }
      std::sort(overs.begin(), overs.end(), [&](int x, int y) {
        return f.members[x].size() > f.members[y].size();
      });
      Subgroup acc = full_subgroup(g);
      bool certified = false;
      for (int m : overs) {
        if (pi_part_of(acc.order(), t.primes) == row.order) {
          certified = true;
          break;
        }
        acc = intersect(acc, normalizer_via_orbit(f.member_subgroup(m)));
      }
      certified =
          certified || pi_part_of(acc.order(), t.primes) == row.order;
      if (!certified) {
        for (int m : overs) {
          const std::vector<int>& k = f.members[m];
          internal_check(!std::includes(acc.elems.begin(), acc.elems.end(),
                                        k.begin(), k.end()),
                         "vanishing criterion");
        }
      }
    }
  }
  return out;
}

}  // namespace engine
