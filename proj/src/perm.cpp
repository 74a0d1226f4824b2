#include "engine/perm.hpp"

#include <algorithm>
#include <numeric>

#include "engine/numeric.hpp"

namespace engine {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    check(v >= 0 && v < degree() && !seen[v], "invalid permutation image table");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  Permutation p;
  p.img_ = std::move(img);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.img_.resize(img_.size());
  for (int i = 0; i < degree(); ++i) out.img_[img_[i]] = i;
  return out;
}

Permutation Permutation::operator*(const Permutation& other) const {
  Permutation out;
  out.img_.resize(img_.size());
  for (int i = 0; i < degree(); ++i) out.img_[i] = other.img_[img_[i]];
  return out;
}

Permutation Permutation::conjugated_by(const Permutation& g) const {
  // y = g^{-1} x g satisfies y(g(j)) = g(x(j)) for all j.
  Permutation out;
  out.img_.resize(img_.size());
  for (int j = 0; j < degree(); ++j) out.img_[g.img_[j]] = g.img_[img_[j]];
  return out;
}

long long Permutation::order() const {
  std::vector<char> seen(img_.size(), 0);
  long long ord = 1;
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    long long len = 0;
    for (int j = i; !seen[j]; j = img_[j]) {
      seen[j] = 1;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

Permutation Permutation::parse_cycles(const std::string& text, int degree) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  std::vector<char> used(degree, 0);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  if (i < text.size() && (text.compare(i, 2, "()") == 0 || text[i] == 'e')) {
    i += text[i] == 'e' ? 1 : 2;
    skip_ws();
    check(i == text.size(), "trailing text after identity permutation");
    return Permutation(std::move(img));
  }
  while (i < text.size()) {
    skip_ws();
    if (i == text.size()) break;
    check(text[i] == '(', "expected '(' in cycle notation");
    ++i;
    std::vector<int> cycle;
    while (true) {
      skip_ws();
      check(i < text.size() && text[i] >= '0' && text[i] <= '9',
            "expected point in cycle notation");
      int v = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      check(v >= 1 && v <= degree, "cycle point out of range 1..degree");
      check(!used[v - 1], "point repeated across cycles");
      used[v - 1] = 1;
      cycle.push_back(v - 1);
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      check(i < text.size() && text[i] == ')', "expected ',' or ')' in cycle");
      ++i;
      break;
    }
    check(cycle.size() >= 2, "cycles must have length >= 2");
    for (std::size_t k = 0; k < cycle.size(); ++k)
      img[cycle[k]] = cycle[(k + 1) % cycle.size()];
  }
  return Permutation(std::move(img));
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::vector<char> seen(img_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || img_[i] == i) {
      seen[i] = 1;
      continue;
    }
    out += '(';
    bool first = true;
    for (int j = i; !seen[j]; j = img_[j]) {
      seen[j] = 1;
      if (!first) out += ',';
      out += std::to_string(j + 1);
      first = false;
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

}  // namespace engine
