#include "engine/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "engine/matgroup.hpp"

namespace engine {

namespace {

std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char c : s)
    if (c != ' ' && c != '\t') out += c;
  return out;
}

bool parse_int_suffix(const std::string& name, const std::string& prefix,
                      long long* out) {
  if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0)
    return false;
  for (std::size_t i = prefix.size(); i < name.size(); ++i)
    if (name[i] < '0' || name[i] > '9') return false;
  *out = std::atoll(name.c_str() + prefix.size());
  return true;
}

bool parse_linear_name(const std::string& name, const std::string& prefix,
                       long long* n, long long* q) {
  // e.g. GL(3,2)
  if (name.compare(0, prefix.size(), prefix) != 0) return false;
  std::string rest = name.substr(prefix.size());
  if (rest.size() < 5 || rest.front() != '(' || rest.back() != ')') return false;
  rest = rest.substr(1, rest.size() - 2);
  auto comma = rest.find(',');
  if (comma == std::string::npos) return false;
  std::string a = rest.substr(0, comma), b = rest.substr(comma + 1);
  if (a.empty() || b.empty()) return false;
  for (char c : a + b)
    if (c < '0' || c > '9') return false;
  *n = std::atoll(a.c_str());
  *q = std::atoll(b.c_str());
  return true;
}

PermutationGroup symmetric_group(long long n) {
  check(n >= 1 && n <= 16, "symmetric group degree out of range");
  int deg = static_cast<int>(std::max<long long>(n, 1));
  std::vector<Permutation> gens;
  if (n >= 2) gens.push_back(Permutation::parse_cycles("(1,2)", deg));
  if (n >= 3) {
    std::string cyc = "(1";
    for (long long i = 2; i <= n; ++i) cyc += "," + std::to_string(i);
    cyc += ")";
    gens.push_back(Permutation::parse_cycles(cyc, deg));
  }
  return PermutationGroup::from_generators(deg, std::move(gens));
}

PermutationGroup alternating_group(long long n) {
  check(n >= 1 && n <= 16, "alternating group degree out of range");
  int deg = static_cast<int>(std::max<long long>(n, 1));
  std::vector<Permutation> gens;
  if (n >= 3) gens.push_back(Permutation::parse_cycles("(1,2,3)", deg));
  if (n >= 4) {
    std::string cyc;
    if (n % 2 == 1) {
      cyc = "(1";
      for (long long i = 2; i <= n; ++i) cyc += "," + std::to_string(i);
    } else {
      cyc = "(2";
      for (long long i = 3; i <= n; ++i) cyc += "," + std::to_string(i);
    }
    cyc += ")";
    gens.push_back(Permutation::parse_cycles(cyc, deg));
  }
  return PermutationGroup::from_generators(deg, std::move(gens));
}

PermutationGroup cyclic_group(long long n) {
  check(n >= 1 && n <= 1000, "cyclic group order out of range");
  if (n == 1) return PermutationGroup::from_generators(1, {});
  std::string cyc = "(1";
  for (long long i = 2; i <= n; ++i) cyc += "," + std::to_string(i);
  cyc += ")";
  return PermutationGroup::from_generators(
      static_cast<int>(n), {Permutation::parse_cycles(cyc, static_cast<int>(n))});
}

PermutationGroup dihedral_group(long long order) {
  check(order >= 4 && order % 2 == 0, "dihedral name takes the group order");
  long long m = order / 2;
  int deg = static_cast<int>(m);
  std::string cyc = "(1";
  for (long long i = 2; i <= m; ++i) cyc += "," + std::to_string(i);
  cyc += ")";
  // Reflection fixing point 1: i <-> m + 2 - i.
  std::string refl;
  for (long long i = 2; i <= m + 1 - i; ++i) {
    if (i == m + 2 - i) continue;
    refl += "(" + std::to_string(i) + "," + std::to_string(m + 2 - i) + ")";
  }
  if (refl.empty()) refl = "()";
  return PermutationGroup::from_generators(
      deg, {Permutation::parse_cycles(cyc, deg),
            Permutation::parse_cycles(refl, deg)});
}

std::string g_data_dir_override;

}  // namespace

PermutationGroup group_by_name(const std::string& raw) {
  const std::string name = strip_spaces(raw);
  check(!name.empty(), "empty group name");
  long long n = 0, q = 0;
  if (name == "M11") {
    std::vector<Permutation> gens{
        Permutation::parse_cycles("(1,2,3,4,5,6,7,8,9,10,11)", 11),
        Permutation::parse_cycles("(3,7,11,8)(4,10,5,6)", 11)};
    PermutationGroup g = PermutationGroup::from_generators(11, std::move(gens));
    internal_check(g.order() == 7920, "M11 order mismatch");
    return g;
  }
  if (name == "V4")
    return PermutationGroup::from_generators(
        4, {Permutation::parse_cycles("(1,2)(3,4)", 4),
            Permutation::parse_cycles("(1,3)(2,4)", 4)});
  if (name == "Q8") {
    PermutationGroup g = PermutationGroup::from_generators(
        8, {Permutation::parse_cycles("(1,2,3,4)(5,6,7,8)", 8),
            Permutation::parse_cycles("(1,5,3,7)(2,8,4,6)", 8)});
    internal_check(g.order() == 8, "Q8 order mismatch");
    return g;
  }
  if (parse_linear_name(name, "GL", &n, &q))
    return general_linear_group(static_cast<int>(n), q);
  if (parse_linear_name(name, "SL", &n, &q))
    return special_linear_group(static_cast<int>(n), q);
  if (parse_int_suffix(name, "S", &n)) return symmetric_group(n);
  if (parse_int_suffix(name, "A", &n)) return alternating_group(n);
  if (parse_int_suffix(name, "C", &n)) return cyclic_group(n);
  if (parse_int_suffix(name, "D", &n)) return dihedral_group(n);
  throw EngineError("unknown group name: " + raw);
}

std::vector<std::string> catalog_names() {
  return {"S<n>",     "A<n>", "C<n>", "D<2m>",    "V4",  "Q8",
          "M11",      "GL(n,q)",      "SL(n,q)"};
}

std::string data_dir() {
  if (!g_data_dir_override.empty()) return g_data_dir_override;
  const char* env = std::getenv("ENGINE_DATA_DIR");
  if (env != nullptr && *env != '\0') return env;
  return "data";
}

void set_data_dir(const std::string& dir) { g_data_dir_override = dir; }

std::optional<std::vector<long long>> character_degrees(
    const std::string& raw) {
  const std::string name = strip_spaces(raw);
  std::ifstream in(data_dir() + "/character_degrees.txt");
  if (!in) return std::nullopt;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string entry;
    long long order = 0, k = 0;
    ss >> entry >> order >> k;
    if (strip_spaces(entry) != name) continue;
    std::vector<long long> degs(k);
    long long sumsq = 0;
    for (long long i = 0; i < k; ++i) {
      ss >> degs[i];
      sumsq += degs[i] * degs[i];
    }
    check(static_cast<bool>(ss), "malformed character degree record");
    internal_check(sumsq == order, "degree squares must sum to the order");
    std::sort(degs.begin(), degs.end());
    return degs;
  }
  return std::nullopt;
}

std::optional<long long> full_defect_free_count(const std::string& name,
                                                long long p) {
  auto degs = character_degrees(name);
  if (!degs) return std::nullopt;
  PermutationGroup g = group_by_name(name);
  long long target = p_part(g.order(), p);
  long long count = 0;
  for (long long d : *degs)
    if (p_part(d, p) == target) ++count;
  return count;
}

std::optional<std::string> identify_catalog_group(const PermutationGroup& g) {
  // Candidate names with shipped degree data, paired with their orders so
  // mismatches skip construction.
  static const std::vector<std::pair<std::string, long long>> candidates = {
      {"S1", 1},      {"S2", 2},        {"S3", 6},       {"S4", 24},
      {"S5", 120},    {"S6", 720},      {"S7", 5040},    {"S8", 40320},
      {"A2", 1},      {"A3", 3},        {"A4", 12},      {"A5", 60},
      {"A6", 360},    {"A7", 2520},     {"A8", 20160},   {"GL(3,2)", 168},
      {"M11", 7920},  {"SL(3,3)", 5616}};
  auto profile = [](const PermutationGroup& h) {
    std::map<long long, long long> hist;
    for (long long i = 0; i < h.order(); ++i)
      ++hist[h.element_order(static_cast<int>(i))];
    bool abelian = true;
    for (int a : h.generator_indices()) {
      for (int b : h.generator_indices())
        if (h.mul(a, b) != h.mul(b, a)) {
          abelian = false;
          break;
        }
      if (!abelian) break;
    }
    return std::make_tuple(h.order(), hist,
                           h.conjugacy_classes().reps.size(), abelian);
  };
  auto target = profile(g);
  std::optional<std::string> found;
  for (const auto& [name, order] : candidates) {
    if (order != g.order()) continue;
    PermutationGroup cand = group_by_name(name);
    if (profile(cand) != target) continue;
    if (found) return std::nullopt;  // ambiguous
    found = name;
  }
  return found;
}

}  // namespace engine
