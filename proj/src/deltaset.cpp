#include "engine/deltaset.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace engine {

BigInt DeltaSet::euler() const {
  BigInt chi = 0;
  for (std::size_t d = 0; d < chains.size(); ++d) {
    BigInt n = big(static_cast<long long>(chains[d].size()));
    chi += (d % 2 == 0) ? n : -n;
  }
  return chi;
}

std::vector<long long> DeltaSet::simplex_counts() const {
  std::vector<long long> out;
  for (const auto& level : chains)
    out.push_back(static_cast<long long>(level.size()));
  return out;
}

DeltaSet delta_set(int n, const LeqFn& leq) {
  DeltaSet ds;
  std::vector<std::vector<int>> cur;
  for (int v = 0; v < n; ++v) cur.push_back({v});
  while (!cur.empty()) {
    ds.chains.push_back(cur);
    std::vector<std::vector<int>> next;
    for (const auto& c : cur) {
      const int top = c.back();
      for (int v = 0; v < n; ++v) {
        if (v == top || !leq(top, v) || leq(v, top)) continue;
        std::vector<int> ext = c;
        ext.push_back(v);
        next.push_back(std::move(ext));
      }
    }
    cur = std::move(next);
  }
  return ds;
}

BigInt euler_characteristic_via_chains(int n, const LeqFn& leq) {
  return delta_set(n, leq).euler();
}

bool Subdivision::leq(int a, int b) const {
  const std::vector<int>& sa = chains[a];
  const std::vector<int>& sb = chains[b];
  if (sa.size() > sb.size()) return false;
  return std::includes(sb.begin(), sb.end(), sa.begin(), sa.end());
}

Subdivision subdivision(int n, const LeqFn& leq) {
  DeltaSet ds = delta_set(n, leq);
  Subdivision sd;
  for (const auto& level : ds.chains)
    for (const auto& c : level) {
      std::vector<int> verts = c;  // numeric order; the set determines the chain
      std::sort(verts.begin(), verts.end());
      sd.chains.push_back(std::move(verts));
    }
  std::sort(sd.chains.begin(), sd.chains.end());
  return sd;
}

OrbitPoset orbit_poset(int n, const std::vector<std::vector<int>>& auto_gens) {
  for (const auto& sigma : auto_gens)
    check(static_cast<int>(sigma.size()) == n, "automorphism size mismatch");
  OrbitPoset op;
  op.orbit_of.assign(n, -1);
  for (int v = 0; v < n; ++v) {
    if (op.orbit_of[v] >= 0) continue;
    const int id = op.num_orbits();
    std::vector<int> stack{v};
    op.orbit_of[v] = id;
    long long size = 0;
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      ++size;
      for (const auto& sigma : auto_gens) {
        int img = sigma[cur];
        if (op.orbit_of[img] < 0) {
          op.orbit_of[img] = id;
          stack.push_back(img);
        } else {
          internal_check(op.orbit_of[img] == id, "orbits must be disjoint");
        }
      }
    }
    op.rep_of.push_back(v);
    op.orbit_size.push_back(size);
  }
  return op;
}

std::vector<std::vector<long long>> orbit_successor_counts(
    int n, const LeqFn& leq, const OrbitPoset& op) {
  const int no = op.num_orbits();
  std::vector<std::vector<long long>> counts(no,
                                             std::vector<long long>(no, 0));
  for (int x = 0; x < no; ++x) {
    const int s = op.rep_of[x];
    for (int t = 0; t < n; ++t)
      if (leq(s, t)) ++counts[x][op.orbit_of[t]];
  }
  return counts;
}

namespace {

// Lexicographically least image of a strictly increasing chain over all
// listed vertex actions; image vertex sets are resorted, which preserves
// the chain because the actions are poset automorphisms.
std::vector<int> canonical_chain(
    const std::vector<int>& chain,
    const std::vector<std::vector<int>>& element_actions) {
  std::vector<int> best = chain;
  std::vector<int> img(chain.size());
  for (const auto& act : element_actions) {
    for (std::size_t i = 0; i < chain.size(); ++i) img[i] = act[chain[i]];
    std::sort(img.begin(), img.end());
    if (img < best) best = img;
  }
  return best;
}

}  // namespace

QuotientDeltaReport quotient_delta_euler(
    int n, const LeqFn& leq,
    const std::vector<std::vector<int>>& element_actions) {
  check(!element_actions.empty(), "action list must include the identity");

  DeltaSet ds = delta_set(n, leq);
  QuotientDeltaReport report;
  BigInt chi = 0;
  for (std::size_t d = 0; d < ds.chains.size(); ++d) {
    std::set<std::vector<int>> canon;
    for (const auto& c : ds.chains[d])
      canon.insert(canonical_chain(c, element_actions));
    const long long m = static_cast<long long>(canon.size());
    report.orbit_simplex_counts.push_back(m);
    chi += (d % 2 == 0) ? big(m) : -big(m);
  }
  report.euler = chi;

  // Cauchy-Frobenius check: a chain fixed setwise by an order automorphism
  // is fixed pointwise, so fixed chains live in the fixed vertex subposet.
  std::map<std::vector<int>, long long> weight;
  for (const auto& act : element_actions) ++weight[act];
  BigInt total = 0;
  for (const auto& [act, mult] : weight) {
    std::vector<int> fixed;
    for (int v = 0; v < n; ++v)
      if (act[v] == v) fixed.push_back(v);
    auto sub_leq = [&](int a, int b) { return leq(fixed[a], fixed[b]); };
    total +=
        big(mult) * poset_euler(static_cast<int>(fixed.size()), sub_leq);
  }
  const BigInt group_order = big(static_cast<long long>(element_actions.size()));
  internal_check(total == chi * group_order,
                 "chain-orbit count disagrees with the fixed-point average");
  return report;
}

}  // namespace engine
