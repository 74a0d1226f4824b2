#include "engine/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <unordered_set>

namespace engine {

static long long env_cap(const char* name, long long dflt) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return dflt;
  return std::atoll(v);
}

long long element_cap() { return env_cap("ENGINE_ELEMENT_CAP", 1000000); }
long long family_cap() { return env_cap("ENGINE_FAMILY_CAP", 100000); }

PermutationGroup PermutationGroup::from_generators(
    int degree, std::vector<Permutation> gens) {
  check(degree >= 1, "degree must be positive");
  for (const auto& g : gens)
    check(g.degree() == degree, "generator degree mismatch");

  const long long cap = element_cap();
  std::unordered_set<Permutation, PermutationHash> seen;
  std::deque<Permutation> queue;
  const Permutation id = Permutation::identity(degree);
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    Permutation cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      Permutation next = cur * g;
      if (seen.insert(next).second) {
        check(static_cast<long long>(seen.size()) <= cap,
              "element enumeration exceeds ENGINE_ELEMENT_CAP");
        queue.push_back(std::move(next));
      }
    }
  }

  PermutationGroup out;
  out.degree_ = degree;
  out.elems_.assign(seen.begin(), seen.end());
  std::sort(out.elems_.begin(), out.elems_.end());

  const int n = static_cast<int>(out.elems_.size());
  out.inv_.resize(n);
  out.order_.resize(n);
  for (int i = 0; i < n; ++i) {
    out.inv_[i] = out.index_of(out.elems_[i].inverse());
    out.order_[i] = out.elems_[i].order();
  }
  for (const auto& g : gens) {
    int gi = out.index_of(g);
    if (gi != 0 &&
        std::find(out.gen_idx_.begin(), out.gen_idx_.end(), gi) ==
            out.gen_idx_.end())
      out.gen_idx_.push_back(gi);
  }
  internal_check(out.elems_[0].is_identity(), "identity not at index 0");
  return out;
}

int PermutationGroup::index_of(const Permutation& p) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), p);
  internal_check(it != elems_.end() && *it == p,
                 "element lookup outside group");
  return static_cast<int>(it - elems_.begin());
}

bool PermutationGroup::contains(const Permutation& p) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), p);
  return it != elems_.end() && *it == p;
}

int PermutationGroup::mul(int i, int j) const {
  return index_of(elems_[i] * elems_[j]);
}

int PermutationGroup::conj(int x, int g) const {
  return index_of(elems_[x].conjugated_by(elems_[g]));
}

int PermutationGroup::power(int x, long long e) const {
  long long n = element_order(x);
  e %= n;
  if (e < 0) e += n;
  int out = 0;
  for (long long k = 0; k < e; ++k) out = mul(out, x);
  return out;
}

const ConjugacyClasses& PermutationGroup::conjugacy_classes() const {
  if (classes_) return *classes_;
  ConjugacyClasses c;
  const int n = static_cast<int>(elems_.size());
  c.class_of.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    if (c.class_of[i] != -1) continue;
    const int cls = static_cast<int>(c.reps.size());
    c.reps.push_back(i);
    c.rep_orders.push_back(order_[i]);
    long long size = 0;
    std::deque<int> queue{i};
    c.class_of[i] = cls;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      ++size;
      for (int g : gen_idx_) {
        int y = conj(x, g);
        if (c.class_of[y] == -1) {
          c.class_of[y] = cls;
          queue.push_back(y);
        }
      }
    }
    c.sizes.push_back(size);
  }
  classes_ = std::move(c);
  return *classes_;
}

std::vector<int> PermutationGroup::class_members(int x) const {
  const auto& cc = conjugacy_classes();
  std::vector<int> out;
  const int cls = cc.class_of[x];
  for (int i = 0; i < static_cast<int>(elems_.size()); ++i)
    if (cc.class_of[i] == cls) out.push_back(i);
  return out;
}

long long count_p_singular(const PermutationGroup& g, long long p) {
  long long by_scan = 0;
  for (long long i = 0; i < g.order(); ++i) {
    long long n = g.element_order(static_cast<int>(i));
    while (n % p == 0) n /= p;
    if (n == 1) ++by_scan;
  }

  // Census route: |G_p| = 1 + sum over cyclic p-subgroups C != 1 of
  // (1 - 1/p)|C|, since each such C owns phi(|C|) generators.
  std::set<std::vector<int>> cyclics;
  for (long long i = 1; i < g.order(); ++i) {
    int x = static_cast<int>(i);
    long long n = g.element_order(x);
    while (n % p == 0) n /= p;
    if (n != 1) continue;
    std::vector<int> sub;
    int cur = 0;
    do {
      sub.push_back(cur);
      cur = g.mul(cur, x);
    } while (cur != 0);
    std::sort(sub.begin(), sub.end());
    cyclics.insert(std::move(sub));
  }
  long long by_census = 1;
  for (const auto& c : cyclics) {
    long long sz = static_cast<long long>(c.size());
    by_census += sz - sz / p;
  }
  internal_check(by_scan == by_census,
                 "p-power element count mismatch between scan and census");
  return by_scan;
}

long long count_pi_singular(const PermutationGroup& g,
                            const std::vector<long long>& pi) {
  long long n = 0;
  for (long long i = 0; i < g.order(); ++i)
    if (is_pi_number(g.element_order(static_cast<int>(i)), pi)) ++n;
  return n;
}

}  // namespace engine
