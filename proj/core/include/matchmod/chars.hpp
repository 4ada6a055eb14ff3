#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "matchmod/fps.hpp"
#include "matchmod/partition.hpp"

namespace matchmod {

// Class function of Sym(degree) with exact integer values, dense over
// all cycle types.
struct CharacterVector {
  int degree = 0;
  std::map<Partition, std::int64_t> values;

  static CharacterVector zero(int degree);
  std::int64_t at(const Partition& rho) const;
  std::int64_t dimension() const;  // value at [1^d]
  CharacterVector& operator+=(const CharacterVector& o);
  bool operator==(const CharacterVector& o) const;

  // exact inner product (1/|G|) sum class_size * this * other
  std::int64_t inner(const CharacterVector& o) const;
  // partitions lambda with <this, chi^lambda> != 0
  std::vector<Partition> constituents() const;
};

// Murnaghan-Nakayama evaluation with a shared memo table.
class CharacterEvaluator {
public:
  std::int64_t mn_character(const Partition& lambda, const Partition& rho);
  CharacterVector irreducible(const Partition& lambda);

private:
  std::map<std::pair<std::vector<int>, std::vector<int>>, std::int64_t> memo_;
};

std::int64_t mn_character(const Partition& lambda, const Partition& rho);

CharacterVector trivial_character(int degree);
CharacterVector sign_character(int degree);

// Partitions of v with exactly m odd parts.
std::vector<Partition> lambda_set(int v, int m);
// Partitions of v whose conjugate has exactly u odd parts.
std::vector<Partition> lambda_conj_set(int v, int u);

// Character of the conjugation action of Sym(2n) on its fixed-point-
// free involutions, by direct fixed-point counting. 2n <= 10.
CharacterVector perm_character_xi(int two_n);

// phi_mu = sum of chi^lambda over even partitions of 2n whose conjugate
// has exactly 2s odd parts.
CharacterVector phi_mu(const MuLabel& mu);
std::vector<Partition> phi_mu_index_set(const MuLabel& mu);

// Induction from Sym(a) x Sym(b) to Sym(a+b) by class fusion:
// value at gamma = sum over multiset splittings gamma = alpha + beta of
// prod_j C(m_j, a_j) * chi_a(alpha) * chi_b(beta).
CharacterVector induce_character(const CharacterVector& chi_a, const CharacterVector& chi_b);

// Both sides of the twisted-induction identity: the induced character
// of Xi_{2n} # sgn_{2m} and the Lambda^{2m}_{2(n+m)} partition sum.
struct IrsResult {
  CharacterVector induced;
  CharacterVector partition_sum;
  bool equal = false;
};
IrsResult irs_character(int n, int m);

// Index set Lambda^0_{4t} cap Lambda'^0_{4t} is closed under
// conjugation (the character-level alternating twist).
bool alt_twist_check(int t);

// Constituents of phi_{(4t,2s)} appear in the induction of phi_{(4t,0)}
// from Sym(4t) x Sym(2s), and their conjugates have exactly 2s odd
// parts.
bool green_corollary_check(int t, int s);

}  // namespace matchmod
