#include "engine/poset.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace engine {

BigInt poset_euler(int n, const LeqFn& leq) {
  // h[v] = signed count of chains with maximum v; chains grouped by maximum.
  // Vertices are processed along a linear extension (ascending count of
  // elements strictly below) so every predecessor is settled first.
  std::vector<std::vector<int>> below(n);
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) {
    for (int u = 0; u < n; ++u)
      if (u != v && leq(u, v) && !leq(v, u)) below[v].push_back(u);
    order[v] = v;
  }
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return below[a].size() < below[b].size();
  });
  std::vector<BigInt> h(n);
  BigInt total = 0;
  for (int v : order) {
    BigInt s = 1;
    for (int u : below[v]) s -= h[u];
    h[v] = s;
    total += s;
  }
  return total;
}

BigInt poset_reduced_euler(int n, const LeqFn& leq) {
  return poset_euler(n, leq) - 1;
}

BigInt reduced_euler_of_subgroup_list(
    const std::vector<std::vector<int>>& members) {
  const int n = static_cast<int>(members.size());
  auto leq = [&](int a, int b) {
    return std::includes(members[b].begin(), members[b].end(),
                         members[a].begin(), members[a].end());
  };
  return poset_reduced_euler(n, leq);
}

std::vector<std::vector<long long>> mobius_matrix(int n, const LeqFn& leq) {
  // Process targets so that mu(a, b) = -sum_{a <= c < b} mu(a, c).
  std::vector<std::vector<long long>> mu(n, std::vector<long long>(n, 0));
  for (int a = 0; a < n; ++a) {
    std::vector<int> ups;
    for (int b = 0; b < n; ++b)
      if (leq(a, b)) ups.push_back(b);
    // Order ups by the number of poset elements below them so strictly
    // smaller interval members are settled first.
    std::vector<std::pair<int, int>> keyed;
    for (int b : ups) {
      int below = 0;
      for (int c : ups)
        if (c != b && leq(c, b)) ++below;
      keyed.emplace_back(below, b);
    }
    std::sort(keyed.begin(), keyed.end());
    for (auto [below, b] : keyed) {
      if (b == a) {
        mu[a][b] = 1;
        continue;
      }
      long long s = 0;
      for (int c : ups)
        if (c != b && leq(c, b)) s += mu[a][c];
      mu[a][b] = -s;
    }
  }
  return mu;
}

std::vector<std::vector<int>> all_subgroups_of(const Subgroup& k) {
  const PermutationGroup& g = *k.parent;
  std::set<std::vector<int>> found;
  std::deque<std::vector<int>> queue;
  found.insert({0});
  queue.push_back({0});
  while (!queue.empty()) {
    std::vector<int> h = std::move(queue.front());
    queue.pop_front();
    std::vector<int> gens = generating_set(Subgroup{&g, h});
    for (int x : k.elems) {
      if (std::binary_search(h.begin(), h.end(), x)) continue;
      gens.push_back(x);
      Subgroup m = subgroup_closure(g, gens);
      gens.pop_back();
      if (found.insert(m.elems).second) queue.push_back(std::move(m.elems));
    }
  }
  return std::vector<std::vector<int>>(found.begin(), found.end());
}

long long mobius_bottom_top(const Subgroup& k) {
  if (k.order() == 1) return 1;
  std::vector<std::vector<int>> subs = all_subgroups_of(k);
  const int n = static_cast<int>(subs.size());
  // mu(1, m) top-down by order: mu(1, 1) = 1, else -sum over proper subs.
  std::vector<int> order_sorted(n);
  for (int i = 0; i < n; ++i) order_sorted[i] = i;
  std::sort(order_sorted.begin(), order_sorted.end(), [&](int a, int b) {
    if (subs[a].size() != subs[b].size()) return subs[a].size() < subs[b].size();
    return subs[a] < subs[b];
  });
  std::vector<long long> mu(n, 0);
  for (int idx : order_sorted) {
    if (subs[idx].size() == 1) {
      mu[idx] = 1;
      continue;
    }
    long long s = 0;
    for (int j = 0; j < n; ++j) {
      if (j == idx || subs[j].size() > subs[idx].size()) continue;
      if (std::includes(subs[idx].begin(), subs[idx].end(), subs[j].begin(),
                        subs[j].end()))
        s += mu[j];
    }
    mu[idx] = -s;
  }
  for (int i = 0; i < n; ++i)
    if (subs[i].size() == k.elems.size()) return mu[i];
  throw InternalError("subgroup lattice lost its top element");
}

long long generating_tuple_count(const Subgroup& b, int r) {
  internal_check(r >= 0, "tuple length must be nonnegative");
  if (r == 0) return b.order() == 1 ? 1 : 0;
  std::vector<std::vector<int>> subs = all_subgroups_of(b);
  const int n = static_cast<int>(subs.size());
  auto leq = [&](int x, int y) {
    return std::includes(subs[y].begin(), subs[y].end(), subs[x].begin(),
                         subs[x].end());
  };
  std::vector<std::vector<long long>> mu = mobius_matrix(n, leq);
  int top = -1;
  for (int i = 0; i < n; ++i)
    if (subs[i].size() == b.elems.size()) top = i;
  internal_check(top >= 0, "lattice missing top");
  long long total = 0;
  for (int c = 0; c < n; ++c) {
    if (!leq(c, top)) continue;
    long long pw = 1;
    for (int j = 0; j < r; ++j) pw *= static_cast<long long>(subs[c].size());
    total += mu[c][top] * pw;
  }
  internal_check(total >= 0, "generating tuple count must be nonnegative");
  return total;
}

}  // namespace engine
