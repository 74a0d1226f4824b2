#include "engine/conjectures.hpp"

#include <algorithm>

#include "engine/catalog.hpp"
#include "engine/equivariant.hpp"
#include "engine/families.hpp"
#include "engine/poset.hpp"
#include "engine/subgroup.hpp"

namespace engine {

namespace {

// Integer polynomials as ascending coefficient vectors, zero = empty.
using Poly = std::vector<BigInt>;

void poly_trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, BigInt(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

void poly_add_scaled(Poly& a, const Poly& b, const BigInt& s, size_t shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, BigInt(0));
  for (size_t i = 0; i < b.size(); ++i) a[i + shift] += s * b[i];
  poly_trim(a);
}

// Exact quotient of monic-divisor division; a nonzero remainder aborts.
Poly poly_divide_exact(Poly num, const Poly& den) {
  internal_check(!den.empty() && den.back() == 1, "monic divisor");
  poly_trim(num);
  if (num.empty()) return {};
  internal_check(num.size() >= den.size(), "divisible degrees");
  Poly q(num.size() - den.size() + 1, BigInt(0));
  for (size_t i = q.size(); i-- > 0;) {
    BigInt c = num[i + den.size() - 1];
    q[i] = c;
    if (c == 0) continue;
    for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
  }
  for (const BigInt& c : num) internal_check(c == 0, "exact division");
  return q;
}

}  // namespace

long long z_p(const CharacterDegreeData& data, const PermutationGroup& g,
              long long p) {
  check(is_prime(p), "p must be prime");
  BigInt squares = 0;
  for (long long d : data.degrees) {
    check(d >= 1, "degrees are positive");
    squares += big(d) * big(d);
  }
  check(squares == big(g.order()), "degree data: sum of squares is |G|");
  check(static_cast<long long>(data.degrees.size()) ==
            static_cast<long long>(g.conjugacy_classes().reps.size()),
        "degree data: one degree per conjugacy class");
  const long long gp = p_part(g.order(), p);
  long long count = 0;
  for (long long d : data.degrees)
    if (d % gp == 0) ++count;
  return count;
}

KrcReport krc_check(const PermutationGroup& g, long long p,
                    const CharacterDegreeData& data) {
  check(g.order() % p == 0, "p must divide |G|");
  KrcReport out;
  out.prime = p;
  out.z_value = z_p(data, g, p);

  BrownPoset s(g, p);

  EquivariantEvaluator ev(s, full_subgroup(g));
  out.alpha = ev.alpha_tilde_r_by_class(2);
  BigRat sum01 = inner_product_with_conjugation_character(out.alpha);

  ArtinSystem art = build_artin_system(g);
  ArtinDecomposition dec = artin_decompose(s, art, 2);
  BigRat sum02;
  for (size_t c = 0; c < art.classes.size(); ++c) {
    if (art.classes[c].cyc_order % p == 0 && art.classes[c].cyc_order > 1)
      continue;
    sum02 += BigRat(dec.coefficients[c] * art.classes[c].weight);
  }

  SubgroupFamily ab = enumerate_abelian_subgroups(g, {p});
  BigRat sum03;
  for (int c = 0; c < ab.num_classes(); ++c) {
    KrcAbelianRow row;
    row.order = ab.class_order(c);
    row.length = ab.class_size[c];
    row.normalizer_order = ab.normalizer_order(c);
    row.chi_fixed = s.fixed_reduced_euler(ab.members[ab.rep_of[c]]);
    row.phi2 = big(generating_tuple_count(ab.rep_subgroup(c), 2));
    row.product = -row.chi_fixed * row.phi2 * big(row.length);
    sum03 += make_rat(row.chi_fixed * row.phi2, big(row.normalizer_order));
    out.abelian_rows.push_back(row);
  }

  internal_check(sum01 == sum02, "class-function vs Artin evaluation");
  internal_check(sum01 == sum03, "class-function vs abelian evaluation");
  internal_check(is_integer(sum01), "integral common value");
  out.class_sum = rat_num(sum01);
  out.artin_sum = rat_num(sum02);
  out.abelian_sum = rat_num(sum03);
  out.holds = out.class_sum == big(-out.z_value);
  return out;
}

AwcReport awc_assemble(const PermutationGroup& g, long long p) {
  check(is_prime(p), "p must be prime");
  AwcReport out;
  out.prime = p;
  const ConjugacyClasses& cls = g.conjugacy_classes();
  for (size_t c = 0; c < cls.reps.size(); ++c)
    if (cls.rep_orders[c] % p != 0) ++out.p_regular_classes;

  BrownPoset s(g, p);
  const SubgroupFamily& rad = s.radical_family();
  out.complete = true;
  long long total = 0;
  for (int c = 0; c < rad.num_classes(); ++c) {
    AwcTerm term;
    term.rep_order = rad.class_order(c);
    term.length = rad.class_size[c];
    Subgroup prep = rad.rep_subgroup(c);
    term.quotient_order = rad.normalizer_order(c) / term.rep_order;

    if (term.quotient_order == 1) {
      term.quotient_name = "1";
      term.z = 1;
    } else if (term.rep_order == 1) {
      // N_G(1)/1 = G itself.
      std::optional<std::string> name = identify_catalog_group(g);
      if (name) {
        std::optional<long long> zz = full_defect_free_count(*name, p);
        if (zz) {
          term.quotient_name = *name;
          term.z = *zz;
        }
      }
    } else {
      Subgroup norm = make_subgroup(g, rad.class_normalizer[c]);
      QuotientGroup q = quotient_group(norm, prep);
      if (q.group.order() % p != 0) {
        // Every irreducible degree is divisible by |Q|_p = 1.
        term.quotient_name = "p-regular quotient";
        term.z = static_cast<long long>(
            q.group.conjugacy_classes().reps.size());
      } else if (p_core(full_subgroup(q.group), p).order() > 1) {
        term.quotient_name = "nontrivial p-core";
        term.z = 0;
      } else {
        std::optional<std::string> name = identify_catalog_group(q.group);
        if (name) {
          std::optional<std::vector<long long>> deg =
              character_degrees(*name);
          if (deg) {
            CharacterDegreeData d{*name, *deg};
            term.quotient_name = *name;
            term.z = z_p(d, q.group, p);
          }
        }
      }
    }

    if (term.z)
      total += *term.z;
    else
      out.complete = false;
    out.terms.push_back(term);
  }
  if (out.complete) {
    out.total = total;
    out.holds = total == out.p_regular_classes;
  }
  return out;
}

std::vector<BigInt> artin_hasse_counts(long long p, long long n_max) {
  check(is_prime(p), "p must be prime");
  check(n_max >= 1 && n_max <= 400, "n_max out of range");
  // a_n = n! e_n where the e_n solve n e_n = sum_{p^k <= n} e_{n - p^k},
  // so a_n = sum_{p^k <= n} (n-1)...(n-p^k+1) a_{n-p^k} stays integral.
  std::vector<BigInt> a(n_max + 1);
  a[0] = 1;
  for (long long n = 1; n <= n_max; ++n) {
    BigInt sum = 0;
    for (long long q = 1; q <= n; q *= p) {
      BigInt falling = 1;
      for (long long t = n - 1; t > n - q; --t) falling *= big(t);
      sum += falling * a[n - q];
      if (q > n / p) break;
    }
    a[n] = sum;
    long long e = 0;
    for (long long q = p; q <= n; q *= p) {
      e += n / q;
      if (q > n / p) break;
    }
    BigInt ppow;
    mpz_pow_ui(ppow.get_mpz_t(), big(p).get_mpz_t(),
               static_cast<unsigned long>(e));
    internal_check(a[n] % ppow == 0, "p-part of n! divides the count");
  }
  return std::vector<BigInt>(a.begin() + 1, a.end());
}

GaussianReport gaussian_identities(long long m) {
  check(m >= 1 && m <= 12, "m out of range");
  // bfact[j] = [j]! with [k] = 1 + X + ... + X^{k-1}.
  std::vector<Poly> bfact(m + 1);
  bfact[0] = {BigInt(1)};
  for (long long k = 1; k <= m; ++k)
    bfact[k] = poly_mul(bfact[k - 1], Poly(k, BigInt(1)));

  Poly sum1, sum2;
  long long comps = 0;
  for (long long mask = 0; mask < (1LL << (m - 1)); ++mask) {
    std::vector<long long> parts;
    long long start = 0;
    for (long long cut = 0; cut < m - 1; ++cut)
      if (mask & (1LL << cut)) {
        parts.push_back(cut + 1 - start);
        start = cut + 1;
      }
    parts.push_back(m - start);
    ++comps;

    Poly multinomial = bfact[m];
    long long shift = 0;
    for (long long part : parts) {
      multinomial = poly_divide_exact(multinomial, bfact[part]);
      shift += part * (part - 1) / 2;
    }
    BigInt sign = parts.size() % 2 == 0 ? 1 : -1;
    poly_add_scaled(sum1, multinomial, sign, 0);
    poly_add_scaled(sum2, multinomial, sign,
                    static_cast<size_t>(shift));
  }

  GaussianReport out;
  out.m = m;
  out.exponent = m * (m - 1) / 2;
  out.compositions = comps;
  BigInt msign = m % 2 == 0 ? 1 : -1;
  Poly target1(out.exponent + 1, BigInt(0));
  target1[out.exponent] = msign;
  poly_trim(sum1);
  internal_check(sum1 == target1, "first Gaussian identity");
  Poly target2 = {msign};
  poly_trim(sum2);
  internal_check(sum2 == target2, "second Gaussian identity");
  out.first_identity = true;
  out.second_identity = true;
  return out;
}

}  // namespace engine
