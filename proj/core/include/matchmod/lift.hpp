#pragma once

#include <cstdint>
#include <vector>

#include "matchmod/gf2.hpp"
#include "matchmod/group.hpp"
#include "matchmod/module.hpp"
#include "matchmod/partition.hpp"

namespace matchmod {

// Dense matrix over Z/2^k, k <= 30.
class ZkMatrix {
public:
  ZkMatrix() = default;
  ZkMatrix(std::size_t rows, std::size_t cols, int k);
  static ZkMatrix identity(std::size_t n, int k);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int precision() const { return k_; }
  std::uint32_t mask() const { return mask_; }

  std::uint32_t get(std::size_t i, std::size_t j) const { return v_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, std::uint32_t x) { v_[i * cols_ + j] = x & mask_; }

  ZkMatrix operator*(const ZkMatrix& o) const;
  ZkMatrix operator+(const ZkMatrix& o) const;
  ZkMatrix operator-(const ZkMatrix& o) const;
  ZkMatrix scale(std::uint32_t c) const;
  bool operator==(const ZkMatrix& o) const;
  bool is_zero() const;

  Gf2Matrix mod2() const;

private:
  std::size_t rows_ = 0, cols_ = 0;
  int k_ = 0;
  std::uint32_t mask_ = 0;
  std::vector<std::uint32_t> v_;
};

// Newton lift of an idempotent of the orbit-matrix span: E = 3E^2-2E^3
// doubles the precision each step. The integer 0/1 seed is the orbit
// support pattern of e, so every iterate stays in the integer span of
// the commutant and commutes with the action. The iteration runs on
// orbit-basis coefficients (the integer span is closed under products,
// with integer structure constants), which is the same computation in
// a faithful small representation of the algebra.
ZkMatrix hensel_lift_idempotent(const Gf2Matrix& e, const EndAlgebraBasis& basis,
                                int precision);

// Sequential re-orthogonalization of lifted idempotents: conjugates
// E_i by (I - sum of the previous ones) and re-Newtons until the family
// is orthogonal mod 2^k; the last idempotent is replaced by
// I - sum(previous) so the family sums to the identity exactly.
void orthogonalize_idempotents(std::vector<ZkMatrix>& idempotents,
                               const EndAlgebraBasis& basis);

// Ordinary character of the lifted component: value at the class of g
// is trace(P_g * E) as a centered residue mod 2^k. Requires
// 2^k > 2*dimension.
std::int64_t lifted_character_value(const ZkMatrix& lifted, const GroupAction& action,
                                    const Permutation& class_rep, int component_dim);

// Canonical representative of the class with the given cycle type:
// consecutive cycles (1 2 .. a)(a+1 ..) ...
Permutation class_representative(const Partition& rho);

}  // namespace matchmod
