#pragma once

#include <optional>
#include <string>
#include <vector>

#include "engine/group.hpp"
#include "engine/numeric.hpp"

namespace engine {

// Irreducible complex character degrees, ingested rather than computed.
// Valid data satisfies sum of squares = |G| and count = class number.
struct CharacterDegreeData {
  std::string group_name;
  std::vector<long long> degrees;
};

// Number of degrees divisible by the p-part of |G| (p-defect zero count).
// Rejects data violating the two validity identities.
long long z_p(const CharacterDegreeData& data, const PermutationGroup& g,
              long long p);

// One row of the abelian-class evaluation: a class of p-regular abelian
// subgroups A with chi~ of the A-fixed member poset, the generating-pair
// count, and the product -chi~ * phi_2 * length. The products sum to
// z_p |G| exactly when the check passes.
struct KrcAbelianRow {
  long long order = 0;
  long long length = 0;
  long long normalizer_order = 0;
  BigInt chi_fixed = 0;
  BigInt phi2 = 0;
  BigInt product = 0;
};

// The class-function sum, the Artin-coefficient sum over p-regular cyclic
// classes, and the abelian-class sum are three evaluations of the same
// integer; disagreement among them is an internal error, while the verdict
// only records whether that integer equals -z_p(G).
struct KrcReport {
  long long prime = 0;
  long long z_value = 0;
  BigInt class_sum = 0;                // per-element-class alpha~_2 total
  BigInt artin_sum = 0;                // weighted Artin coefficients
  BigInt abelian_sum = 0;              // abelian-class formula
  std::vector<BigRat> alpha;           // alpha~_2 per conjugacy class
  std::vector<KrcAbelianRow> abelian_rows;
  bool holds = false;
};

KrcReport krc_check(const PermutationGroup& g, long long p,
                    const CharacterDegreeData& data);

// One radical class summand of the weight count: the quotient N_G(P)/P
// with its defect-zero count when it can be supplied.
struct AwcTerm {
  long long rep_order = 0;
  long long length = 0;
  long long quotient_order = 0;
  std::string quotient_name;  // catalog name or a shortcut tag
  std::optional<long long> z;
};

// k_{p'}(G) against the sum of z_p(N_G(P)/P) over radical classes.
// Quotient degrees come from the catalog: trivial and p-regular quotients
// need none, quotients with a nontrivial p-core contribute zero, everything
// else must be identified; an unidentified quotient leaves the report
// incomplete rather than failing.
struct AwcReport {
  long long prime = 0;
  long long p_regular_classes = 0;
  std::vector<AwcTerm> terms;
  bool complete = false;
  std::optional<long long> total;
  std::optional<bool> holds;
};

AwcReport awc_assemble(const PermutationGroup& g, long long p);

// n! times the x^n coefficient of exp(sum_k x^{p^k} / p^k) for n = 1..n_max:
// the number of p-singular elements of the symmetric group S_n, identity
// included. Each count is divisible by the p-part of n!.
std::vector<BigInt> artin_hasse_counts(long long p, long long n_max);

// The two Gaussian-multinomial identities over ordered partitions of m,
// verified by exact polynomial arithmetic: (-1)^m sum (-1)^k multinomial
// equals X^C(m,2), and the variant carrying X^{sum C(m_i,2)} equals 1.
// Failure aborts, so a returned report always records both as verified.
struct GaussianReport {
  long long m = 0;
  long long exponent = 0;  // C(m,2)
  long long compositions = 0;
  bool first_identity = false;
  bool second_identity = false;
};

GaussianReport gaussian_identities(long long m);

}  // namespace engine
