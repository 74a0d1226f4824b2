#include "engine/subgroup.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace engine {

bool Subgroup::contains(int x) const {
  return std::binary_search(elems.begin(), elems.end(), x);
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return std::includes(other.elems.begin(), other.elems.end(), elems.begin(),
                       elems.end());
}

Subgroup trivial_subgroup(const PermutationGroup& g) {
  return Subgroup{&g, {0}};
}

Subgroup full_subgroup(const PermutationGroup& g) {
  std::vector<int> all(g.order());
  for (int i = 0; i < static_cast<int>(g.order()); ++i) all[i] = i;
  return Subgroup{&g, std::move(all)};
}

Subgroup make_subgroup(const PermutationGroup& g, std::vector<int> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  internal_check(!elems.empty() && elems[0] == 0,
                 "subgroup must contain the identity");
  return Subgroup{&g, std::move(elems)};
}

Subgroup subgroup_closure(const PermutationGroup& g,
                          const std::vector<int>& gen_idxs,
                          long long max_order) {
  std::vector<char> in(g.order(), 0);
  in[0] = 1;
  std::vector<int> members{0};
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int s : gen_idxs) {
      int y = g.mul(x, s);
      if (!in[y]) {
        if (max_order > 0 &&
            static_cast<long long>(members.size()) >= max_order)
          return Subgroup{&g, {}};
        in[y] = 1;
        members.push_back(y);
        queue.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return Subgroup{&g, std::move(members)};
}

Subgroup conjugate_subgroup(const Subgroup& s, int g) {
  std::vector<int> out(s.elems.size());
  for (std::size_t i = 0; i < s.elems.size(); ++i)
    out[i] = s.parent->conj(s.elems[i], g);
  std::sort(out.begin(), out.end());
  return Subgroup{s.parent, std::move(out)};
}

std::vector<int> generating_set(const Subgroup& s) {
  std::vector<int> gens;
  Subgroup cur = trivial_subgroup(*s.parent);
  for (int x : s.elems) {
    if (cur.contains(x)) continue;
    gens.push_back(x);
    cur = subgroup_closure(*s.parent, gens);
    if (cur.order() == s.order()) break;
  }
  internal_check(cur == s, "generating_set closure mismatch");
  return gens;
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  internal_check(a.parent == b.parent, "intersect across parents");
  std::vector<int> out;
  std::set_intersection(a.elems.begin(), a.elems.end(), b.elems.begin(),
                        b.elems.end(), std::back_inserter(out));
  return Subgroup{a.parent, std::move(out)};
}

Subgroup normalizer_in(const Subgroup& ambient, const Subgroup& s) {
  const PermutationGroup& g = *s.parent;
  std::vector<int> gens = generating_set(s);
  std::vector<int> out;
  for (int w : ambient.elems) {
    bool ok = true;
    for (int h : gens) {
      if (!s.contains(g.conj(h, w))) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(w);
  }
  return Subgroup{s.parent, std::move(out)};
}

Subgroup normalizer(const Subgroup& s) {
  return normalizer_in(full_subgroup(*s.parent), s);
}

Subgroup normalizer_via_orbit(const Subgroup& s) {
  const PermutationGroup& g = *s.parent;
  std::map<std::vector<int>, int> node_id;
  std::vector<int> transversal;  // node -> t with s^t = node
  std::deque<int> queue;
  node_id.emplace(s.elems, 0);
  transversal.push_back(0);
  std::vector<const std::vector<int>*> node_elems{&node_id.begin()->first};
  queue.push_back(0);
  std::set<int> schreier;
  while (!queue.empty()) {
    int c = queue.front();
    queue.pop_front();
    for (int gi : g.generator_indices()) {
      std::vector<int> img(node_elems[c]->size());
      for (std::size_t i = 0; i < img.size(); ++i)
        img[i] = g.conj((*node_elems[c])[i], gi);
      std::sort(img.begin(), img.end());
      auto [it, fresh] =
          node_id.emplace(std::move(img), static_cast<int>(transversal.size()));
      int u = g.mul(transversal[c], gi);
      if (fresh) {
        transversal.push_back(u);
        node_elems.push_back(&it->first);
        queue.push_back(it->second);
      } else {
        schreier.insert(g.mul(u, g.inv(transversal[it->second])));
      }
    }
  }
  const long long orbit = static_cast<long long>(transversal.size());
  internal_check(g.order() % orbit == 0, "orbit size must divide group order");
  const long long target = g.order() / orbit;

  std::vector<int> stab_gens;
  Subgroup n = subgroup_closure(g, {});
  for (int sg : schreier) {
    if (n.contains(sg)) continue;
    stab_gens.push_back(sg);
    n = subgroup_closure(g, stab_gens);
    if (n.order() == target) break;
  }
  internal_check(n.order() == target, "Schreier normalizer has wrong order");
  return n;
}

Subgroup centralizer_in(const Subgroup& ambient, const std::vector<int>& xs) {
  const PermutationGroup& g = *ambient.parent;
  std::vector<int> out;
  for (int w : ambient.elems) {
    bool ok = true;
    for (int x : xs) {
      if (g.mul(w, x) != g.mul(x, w)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(w);
  }
  return Subgroup{ambient.parent, std::move(out)};
}

bool is_normal_in(const Subgroup& n, const Subgroup& p) {
  const PermutationGroup& g = *n.parent;
  std::vector<int> ngens = generating_set(n);
  std::vector<int> pgens = generating_set(p);
  for (int w : pgens)
    for (int h : ngens)
      if (!n.contains(g.conj(h, w))) return false;
  return true;
}

bool centralizes(const Subgroup& a, const Subgroup& b) {
  const PermutationGroup& g = *a.parent;
  for (int x : generating_set(a))
    for (int y : generating_set(b))
      if (g.mul(x, y) != g.mul(y, x)) return false;
  return true;
}

Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b) {
  const PermutationGroup& g = *a.parent;
  std::set<int> comms;
  for (int x : a.elems)
    for (int y : b.elems) {
      int c = g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y));
      if (c != 0) comms.insert(c);
    }
  return subgroup_closure(g, std::vector<int>(comms.begin(), comms.end()));
}

long long subgroup_p_part(const Subgroup& s, long long p) {
  return p_part(s.order(), p);
}

Subgroup frattini_subgroup(const Subgroup& k) {
  const PermutationGroup& g = *k.parent;
  auto facs = prime_factors(k.order());
  check(facs.size() <= 1, "frattini_subgroup needs prime-power order");
  if (facs.empty()) return k;
  const long long p = facs[0];
  std::set<int> gens;
  for (int x : k.elems) {
    int xp = g.power(x, p);
    if (xp != 0) gens.insert(xp);
  }
  Subgroup comm = commutator_subgroup(k, k);
  for (int c : comm.elems)
    if (c != 0) gens.insert(c);
  return subgroup_closure(g, std::vector<int>(gens.begin(), gens.end()));
}

Subgroup sylow_subgroup(const Subgroup& s, long long p) {
  const PermutationGroup& g = *s.parent;
  const long long target = p_part(s.order(), p);
  Subgroup cur = trivial_subgroup(g);
  std::vector<int> gens;
  while (cur.order() < target) {
    Subgroup n = normalizer_in(s, cur);
    int pick = -1;
    for (int x : n.elems) {
      if (cur.contains(x)) continue;
      if (cur.contains(g.power(x, p))) {
        pick = x;
        break;
      }
    }
    internal_check(pick != -1, "Sylow ascent found no p-element");
    gens.push_back(pick);
    cur = subgroup_closure(g, gens);
    internal_check(target % cur.order() == 0, "Sylow ascent left p-power order");
  }
  return cur;
}

Subgroup p_core(const Subgroup& s, long long p) {
  const PermutationGroup& g = *s.parent;
  Subgroup syl = sylow_subgroup(s, p);
  std::vector<int> sgens = generating_set(s);
  // Intersect the conjugation orbit of syl within s.
  std::set<std::vector<int>> seen{syl.elems};
  std::deque<std::vector<int>> queue{syl.elems};
  Subgroup core = syl;
  while (!queue.empty() && core.order() > 1) {
    std::vector<int> cur = std::move(queue.front());
    queue.pop_front();
    for (int w : sgens) {
      std::vector<int> img(cur.size());
      for (std::size_t i = 0; i < cur.size(); ++i) img[i] = g.conj(cur[i], w);
      std::sort(img.begin(), img.end());
      if (seen.insert(img).second) {
        core = intersect(core, Subgroup{&g, img});
        queue.push_back(std::move(img));
      }
    }
  }
  return core;
}

int QuotientGroup::project(int parent_elem) const {
  internal_check(coset_of[parent_elem] != -1, "project of element outside P");
  const int m = static_cast<int>(rep_of.size());
  std::vector<int> img(m);
  for (int c = 0; c < m; ++c)
    img[c] = coset_of[parent->mul(rep_of[c], parent_elem)];
  return group.index_of(Permutation(std::move(img)));
}

std::vector<int> QuotientGroup::induced_automorphism(int a) const {
  const int m = static_cast<int>(rep_of.size());
  std::vector<int> ca_img(m);
  for (int c = 0; c < m; ++c) {
    int y = parent->conj(rep_of[c], a);
    internal_check(coset_of[y] != -1, "automorphism source must normalize P");
    ca_img[c] = coset_of[y];
  }
  Permutation ca(std::move(ca_img));
  std::vector<int> out(group.order());
  for (int q = 0; q < static_cast<int>(group.order()); ++q)
    out[q] = group.index_of(group.perm(q).conjugated_by(ca));
  return out;
}

std::vector<int> QuotientGroup::induced_automorphism_perm(
    const Permutation& pa) const {
  const int m = static_cast<int>(rep_of.size());
  std::vector<int> ca_img(m);
  for (int c = 0; c < m; ++c) {
    int y = parent->index_of(parent->perm(rep_of[c]).conjugated_by(pa));
    internal_check(coset_of[y] != -1, "automorphism source must normalize P");
    ca_img[c] = coset_of[y];
  }
  Permutation ca(std::move(ca_img));
  std::vector<int> out(group.order());
  for (int q = 0; q < static_cast<int>(group.order()); ++q)
    out[q] = group.index_of(group.perm(q).conjugated_by(ca));
  return out;
}

std::vector<SubgroupClass> subgroup_classes(const Subgroup& s) {
  const PermutationGroup& g = *s.parent;
  const std::vector<int> gens = generating_set(s);
  std::set<int> seen;
  std::vector<SubgroupClass> out;
  for (int x : s.elems) {
    if (seen.count(x)) continue;
    std::vector<int> queue{x};
    seen.insert(x);
    long long size = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      ++size;
      for (int a : gens) {
        int y = g.conj(queue[head], a);
        if (seen.insert(y).second) queue.push_back(y);
      }
    }
    out.push_back({x, size});
  }
  return out;
}

long long p_power_count_in(const Subgroup& s, long long p) {
  const PermutationGroup& g = *s.parent;
  long long n = 0;
  for (int x : s.elems) {
    long long o = g.element_order(x);
    while (o % p == 0) o /= p;
    if (o == 1) ++n;
  }
  return n;
}

StandaloneGroup subgroup_as_group(const Subgroup& s) {
  const PermutationGroup& g = *s.parent;
  std::vector<Permutation> gens;
  for (int x : generating_set(s)) gens.push_back(g.perm(x));
  StandaloneGroup out{PermutationGroup::from_generators(g.degree(),
                                                        std::move(gens)),
                      {}};
  internal_check(out.group.order() == s.order(), "standalone order mismatch");
  out.to_parent.resize(s.elems.size());
  for (std::size_t i = 0; i < s.elems.size(); ++i)
    out.to_parent[i] = g.index_of(out.group.perm(static_cast<int>(i)));
  return out;
}

QuotientGroup quotient_group(const Subgroup& p, const Subgroup& n) {
  internal_check(p.parent == n.parent, "quotient across parents");
  internal_check(n.is_subset_of(p) && is_normal_in(n, p),
                 "quotient requires a normal subgroup");
  const PermutationGroup& g = *p.parent;
  QuotientGroup q;
  q.parent = &g;
  q.coset_of.assign(g.order(), -1);
  for (int x : p.elems) {
    if (q.coset_of[x] != -1) continue;
    const int c = static_cast<int>(q.rep_of.size());
    q.rep_of.push_back(x);
    for (int h : n.elems) q.coset_of[g.mul(h, x)] = c;
  }
  const int m = static_cast<int>(q.rep_of.size());
  check(static_cast<long long>(m) * m <= 50000000,
        "quotient group too large to materialize");
  std::vector<Permutation> qgens;
  for (int s : generating_set(p)) {
    std::vector<int> img(m);
    for (int c = 0; c < m; ++c) img[c] = q.coset_of[g.mul(q.rep_of[c], s)];
    qgens.emplace_back(std::move(img));
  }
  q.group = PermutationGroup::from_generators(std::max(m, 1), std::move(qgens));
  internal_check(q.group.order() == m, "quotient order mismatch");
  return q;
}

}  // namespace engine
