#include "engine/families.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "engine/poset.hpp"

namespace engine {

int SubgroupFamily::trivial_class() const {
  int m = find_member({0});
  internal_check(m >= 0, "family lacks the trivial subgroup");
  return class_of[m];
}

int SubgroupFamily::find_member(const std::vector<int>& elems) const {
  auto it = std::lower_bound(members.begin(), members.end(), elems);
  if (it == members.end() || *it != elems) return -1;
  return static_cast<int>(it - members.begin());
}

namespace {

struct ClassBuild {
  std::vector<int> rep;         // least member of the class
  std::vector<int> normalizer;  // elems of N_G(rep)
  long long size = 0;
};

// Expands the conjugation orbit of seed, recording every member, the least
// member, and N_G of the least member via Schreier generators.
ClassBuild expand_class(const PermutationGroup& g, std::vector<int> seed) {
  std::map<std::vector<int>, int> node_of;
  std::vector<int> transversal;
  std::deque<const std::vector<int>*> queue;
  auto seed_it = node_of.emplace(std::move(seed), 0).first;
  transversal.push_back(0);
  queue.push_back(&seed_it->first);
  std::set<int> schreier;
  while (!queue.empty()) {
    const std::vector<int>& cur = *queue.front();
    const int cur_id = node_of.at(cur);
    queue.pop_front();
    for (int gi : g.generator_indices()) {
      std::vector<int> img(cur.size());
      for (std::size_t i = 0; i < cur.size(); ++i) img[i] = g.conj(cur[i], gi);
      std::sort(img.begin(), img.end());
      int u = g.mul(transversal[cur_id], gi);
      auto [it, fresh] =
          node_of.emplace(std::move(img), static_cast<int>(transversal.size()));
      if (fresh) {
        transversal.push_back(u);
        queue.push_back(&it->first);
      } else {
        schreier.insert(g.mul(u, g.inv(transversal[it->second])));
      }
    }
  }
  const long long orbit = static_cast<long long>(node_of.size());
  internal_check(g.order() % orbit == 0, "subgroup orbit must divide order");
  const long long stab_order = g.order() / orbit;

  std::vector<int> stab_gens;
  Subgroup stab = subgroup_closure(g, {});
  for (int s : schreier) {
    if (stab.contains(s)) continue;
    stab_gens.push_back(s);
    stab = subgroup_closure(g, stab_gens);
    if (stab.order() == stab_order) break;
  }
  internal_check(stab.order() == stab_order,
                 "Schreier stabilizer has wrong order");

  ClassBuild out;
  auto least_it = node_of.begin();
  out.rep = least_it->first;
  out.size = orbit;
  Subgroup n = conjugate_subgroup(stab, transversal[least_it->second]);
  out.normalizer = std::move(n.elems);
  return out;
}

using CandidateFn =
    std::function<std::vector<std::vector<int>>(const ClassBuild&)>;

SubgroupFamily enumerate_family(const PermutationGroup& g,
                                std::vector<long long> primes,
                                const CandidateFn& candidates,
                                bool mark_radical) {
  const long long cap = family_cap();
  std::map<std::vector<int>, int> member_class;
  std::vector<ClassBuild> classes;
  std::deque<int> todo;

  auto register_subgroup = [&](std::vector<int> elems) {
    auto probe = member_class.find(elems);
    if (probe != member_class.end()) return;
    ClassBuild cb = expand_class(g, std::move(elems));
    const int id = static_cast<int>(classes.size());
    // Re-expand membership from the class build: every orbit member maps
    // to this class id.
    std::deque<std::vector<int>> q{cb.rep};
    member_class.emplace(cb.rep, id);
    while (!q.empty()) {
      std::vector<int> cur = std::move(q.front());
      q.pop_front();
      for (int gi : g.generator_indices()) {
        std::vector<int> img(cur.size());
        for (std::size_t i = 0; i < cur.size(); ++i)
          img[i] = g.conj(cur[i], gi);
        std::sort(img.begin(), img.end());
        if (member_class.emplace(img, id).second) q.push_back(std::move(img));
      }
    }
    check(static_cast<long long>(member_class.size()) <= cap,
          "family enumeration exceeds ENGINE_FAMILY_CAP");
    classes.push_back(std::move(cb));
    todo.push_back(id);
  };

  register_subgroup({0});
  while (!todo.empty()) {
    int c = todo.front();
    todo.pop_front();
    for (auto& k : candidates(classes[c])) register_subgroup(std::move(k));
  }

  // Deterministic class order: by order, then by least member.
  std::vector<int> perm(classes.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    if (classes[a].rep.size() != classes[b].rep.size())
      return classes[a].rep.size() < classes[b].rep.size();
    return classes[a].rep < classes[b].rep;
  });
  std::vector<int> new_id(classes.size());
  for (std::size_t i = 0; i < perm.size(); ++i) new_id[perm[i]] = static_cast<int>(i);

  SubgroupFamily f;
  f.G = &g;
  f.primes = std::move(primes);
  f.members.reserve(member_class.size());
  f.class_of.reserve(member_class.size());
  for (const auto& [elems, old_id] : member_class) {
    f.members.push_back(elems);
    f.class_of.push_back(new_id[old_id]);
  }
  f.rep_of.resize(classes.size());
  f.class_size.resize(classes.size());
  f.class_normalizer.resize(classes.size());
  f.radical.assign(classes.size(), 0);
  for (std::size_t old_id = 0; old_id < classes.size(); ++old_id) {
    const int id = new_id[old_id];
    int m = f.find_member(classes[old_id].rep);
    internal_check(m >= 0, "class representative missing from members");
    f.rep_of[id] = m;
    f.class_size[id] = classes[old_id].size;
    f.class_normalizer[id] = std::move(classes[old_id].normalizer);
    internal_check(
        f.class_size[id] * static_cast<long long>(f.class_normalizer[id].size()) ==
            g.order(),
        "orbit-stabilizer mismatch for subgroup class");
  }

  if (mark_radical) {
    const long long p = f.primes[0];
    for (int c = 0; c < f.num_classes(); ++c) {
      Subgroup n{&g, f.class_normalizer[c]};
      Subgroup core = p_core(n, p);
      f.radical[c] = core.elems == f.members[f.rep_of[c]] ? 1 : 0;
    }
  }
  return f;
}

bool order_is_pi(long long n, const std::vector<long long>& pi) {
  return is_pi_number(n, pi);
}

}  // namespace

SubgroupFamily enumerate_p_subgroups(const PermutationGroup& g, long long p) {
  check(is_prime(p), "p must be prime");
  auto candidates = [&g, p](const ClassBuild& cb) {
    std::vector<std::vector<int>> out;
    Subgroup h{&g, cb.rep};
    std::vector<int> gens = generating_set(h);
    for (int x : cb.normalizer) {
      if (h.contains(x)) continue;
      if (!h.contains(g.power(x, p))) continue;
      gens.push_back(x);
      out.push_back(subgroup_closure(g, gens).elems);
      gens.pop_back();
    }
    return out;
  };
  return enumerate_family(g, {p}, candidates, true);
}

SubgroupFamily enumerate_pi_subgroups(const PermutationGroup& g,
                                      std::vector<long long> pi) {
  std::sort(pi.begin(), pi.end());
  pi.erase(std::unique(pi.begin(), pi.end()), pi.end());
  check(!pi.empty(), "pi must be nonempty");
  for (long long p : pi) check(is_prime(p), "pi entries must be prime");

  long long pi_cap = 1;
  for (long long p : pi) pi_cap *= p_part(g.order(), p);

  // Groups whose order has at most two prime divisors are solvable, so a
  // cyclic-quotient chain reaches every pi-subgroup through normalizer
  // extensions. Larger prime sets extend by arbitrary pi-elements.
  const bool normalizer_route = pi.size() <= 2;
  auto candidates = [&g, pi, pi_cap, normalizer_route](const ClassBuild& cb) {
    std::vector<std::vector<int>> out;
    Subgroup h{&g, cb.rep};
    std::vector<int> gens = generating_set(h);
    auto consider = [&](int x) {
      if (h.contains(x)) return;
      if (!order_is_pi(g.element_order(x), pi)) return;
      gens.push_back(x);
      Subgroup k = subgroup_closure(g, gens, pi_cap);
      gens.pop_back();
      if (k.elems.empty()) return;  // closure aborted past the pi-part
      if (!order_is_pi(k.order(), pi)) return;
      out.push_back(std::move(k.elems));
    };
    if (normalizer_route) {
      for (int x : cb.normalizer) consider(x);
    } else {
      for (int x = 1; x < static_cast<int>(g.order()); ++x) consider(x);
    }
    return out;
  };
  return enumerate_family(g, std::move(pi), candidates, false);
}

SubgroupFamily enumerate_abelian_subgroups(const PermutationGroup& g,
                                           const std::vector<long long>& avoid) {
  auto coprime_ok = [&avoid](long long n) {
    for (long long p : avoid)
      if (n % p == 0) return false;
    return true;
  };
  auto candidates = [&g, coprime_ok](const ClassBuild& cb) {
    std::vector<std::vector<int>> out;
    Subgroup h{&g, cb.rep};
    std::vector<int> gens = generating_set(h);
    Subgroup cent = centralizer_in(full_subgroup(g), gens);
    for (int x : cent.elems) {
      if (h.contains(x)) continue;
      if (!coprime_ok(g.element_order(x))) continue;
      gens.push_back(x);
      Subgroup k = subgroup_closure(g, gens);
      gens.pop_back();
      out.push_back(std::move(k.elems));
    }
    return out;
  };
  std::vector<long long> primes;  // marker: not an order-closed prime family
  return enumerate_family(g, std::move(primes), candidates, false);
}

SubgroupFamily enumerate_all_subgroups(const PermutationGroup& g) {
  auto candidates = [&g](const ClassBuild& cb) {
    std::vector<std::vector<int>> out;
    Subgroup h{&g, cb.rep};
    std::vector<int> gens = generating_set(h);
    for (int x = 1; x < static_cast<int>(g.order()); ++x) {
      if (h.contains(x)) continue;
      gens.push_back(x);
      out.push_back(subgroup_closure(g, gens).elems);
      gens.pop_back();
    }
    return out;
  };
  std::vector<long long> primes;
  return enumerate_family(g, std::move(primes), candidates, false);
}

std::vector<AbelianClassInfo> abelian_classes_in(
    const Subgroup& a, const std::vector<long long>& avoid) {
  const PermutationGroup& g = *a.parent;
  const std::vector<int> agens = generating_set(a);
  auto coprime_ok = [&avoid](long long n) {
    for (long long p : avoid)
      if (n % p == 0) return false;
    return true;
  };

  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> todo;
  std::vector<AbelianClassInfo> out;

  auto register_subgroup = [&](std::vector<int> elems) {
    if (seen.count(elems)) return;
    // Orbit of elems under conjugation by a.
    std::deque<std::vector<int>> q{elems};
    seen.insert(std::move(elems));
    std::vector<int> least = q.front();
    long long orbit = 1;
    while (!q.empty()) {
      std::vector<int> cur = std::move(q.front());
      q.pop_front();
      for (int gi : agens) {
        std::vector<int> img(cur.size());
        for (std::size_t i = 0; i < cur.size(); ++i)
          img[i] = g.conj(cur[i], gi);
        std::sort(img.begin(), img.end());
        if (seen.insert(img).second) {
          ++orbit;
          if (img < least) least = img;
          q.push_back(std::move(img));
        }
      }
    }
    internal_check(a.order() % orbit == 0,
                   "abelian class orbit must divide the ambient order");
    AbelianClassInfo info;
    info.rep = least;
    info.class_size = orbit;
    info.normalizer_order = a.order() / orbit;
    out.push_back(std::move(info));
    todo.push_back(std::move(least));
  };

  register_subgroup({0});
  while (!todo.empty()) {
    std::vector<int> rep = std::move(todo.front());
    todo.pop_front();
    Subgroup h{&g, rep};
    std::vector<int> gens = generating_set(h);
    for (int x : a.elems) {
      if (h.contains(x)) continue;
      if (!coprime_ok(g.element_order(x))) continue;
      bool commutes = true;
      for (int e : rep) {
        if (g.mul(x, e) != g.mul(e, x)) {
          commutes = false;
          break;
        }
      }
      if (!commutes) continue;
      gens.push_back(x);
      std::vector<int> k = subgroup_closure(g, gens).elems;
      gens.pop_back();
      if (!coprime_ok(static_cast<long long>(k.size()))) continue;
      register_subgroup(std::move(k));
    }
  }

  std::sort(out.begin(), out.end(),
            [](const AbelianClassInfo& x, const AbelianClassInfo& y) {
              if (x.rep.size() != y.rep.size())
                return x.rep.size() < y.rep.size();
              return x.rep < y.rep;
            });
  return out;
}

std::vector<std::vector<long long>> class_inclusion_counts(
    const SubgroupFamily& f) {
  const int nc = f.num_classes();
  std::vector<std::vector<long long>> counts(nc,
                                             std::vector<long long>(nc, 0));
  std::vector<char> bits(f.G->order(), 0);
  for (long long m = 0; m < f.member_count(); ++m) {
    const std::vector<int>& k = f.members[m];
    for (int e : k) bits[e] = 1;
    const int kc = f.class_of[m];
    for (int a = 0; a < nc; ++a) {
      const std::vector<int>& rep = f.members[f.rep_of[a]];
      if (rep.size() > k.size() || k.size() % rep.size() != 0) continue;
      bool inside = true;
      for (int e : rep) {
        if (!bits[e]) {
          inside = false;
          break;
        }
      }
      if (inside) ++counts[a][kc];
    }
    for (int e : k) bits[e] = 0;
  }
  for (int a = 0; a < nc; ++a)
    internal_check(counts[a][a] == 1, "class must contain its rep exactly once");
  return counts;
}

std::vector<int> fixed_member_indices(const SubgroupFamily& f,
                                      const std::vector<int>& normalizing_elems) {
  std::vector<int> out;
  for (long long m = 0; m < f.member_count(); ++m) {
    const std::vector<int>& k = f.members[m];
    bool fixed = true;
    for (int a : normalizing_elems) {
      for (int e : k) {
        if (!std::binary_search(k.begin(), k.end(), f.G->conj(e, a))) {
          fixed = false;
          break;
        }
      }
      if (!fixed) break;
    }
    if (fixed) out.push_back(static_cast<int>(m));
  }
  return out;
}

std::vector<int> fixed_member_indices_under(
    const SubgroupFamily& f, const std::vector<std::vector<int>>& autos) {
  std::vector<int> out;
  for (long long m = 0; m < f.member_count(); ++m) {
    const std::vector<int>& k = f.members[m];
    bool fixed = true;
    for (const auto& sigma : autos) {
      for (int e : k) {
        if (!std::binary_search(k.begin(), k.end(), sigma[e])) {
          fixed = false;
          break;
        }
      }
      if (!fixed) break;
    }
    if (fixed) out.push_back(static_cast<int>(m));
  }
  return out;
}

SubgroupFamily radical_subfamily(const SubgroupFamily& f) {
  SubgroupFamily out;
  out.G = f.G;
  out.primes = f.primes;
  std::vector<int> keep_class(f.num_classes(), -1);
  int next = 0;
  for (int c = 0; c < f.num_classes(); ++c)
    if (f.radical[c]) keep_class[c] = next++;
  for (long long m = 0; m < f.member_count(); ++m) {
    int nc = keep_class[f.class_of[m]];
    if (nc < 0) continue;
    out.members.push_back(f.members[m]);
    out.class_of.push_back(nc);
  }
  out.rep_of.resize(next);
  out.class_size.resize(next);
  out.class_normalizer.resize(next);
  out.radical.assign(next, 1);
  for (int c = 0; c < f.num_classes(); ++c) {
    int nc = keep_class[c];
    if (nc < 0) continue;
    int m = out.find_member(f.members[f.rep_of[c]]);
    internal_check(m >= 0, "radical restriction lost a representative");
    out.rep_of[nc] = m;
    out.class_size[nc] = f.class_size[c];
    out.class_normalizer[nc] = f.class_normalizer[c];
  }
  return out;
}

BigInt reduced_euler_of_members(const SubgroupFamily& f,
                                const std::vector<int>& member_idxs) {
  std::vector<std::vector<int>> sel;
  for (int m : member_idxs)
    if (f.members[m].size() > 1) sel.push_back(f.members[m]);
  return reduced_euler_of_subgroup_list(sel);
}

BigInt reduced_euler_from_counts(
    const SubgroupFamily& f,
    const std::vector<std::vector<long long>>& counts) {
  const int nc = f.num_classes();
  std::vector<int> order_desc;
  for (int c = 0; c < nc; ++c)
    if (f.class_order(c) > 1) order_desc.push_back(c);
  std::sort(order_desc.begin(), order_desc.end(), [&](int a, int b) {
    return f.class_order(a) > f.class_order(b);
  });
  // u[a] = signed chain count over chains in the nontrivial member poset
  // starting at the class representative.
  std::vector<BigInt> u(nc, 0);
  for (int a : order_desc) {
    BigInt s = 1;
    for (int b : order_desc)
      if (f.class_order(b) > f.class_order(a)) s -= big(counts[a][b]) * u[b];
    u[a] = s;
  }
  BigInt chi = 0;
  for (int a : order_desc) chi += big(f.class_size[a]) * u[a];
  return chi - 1;
}

}  // namespace engine
