#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "matchmod/perm.hpp"

namespace matchmod {

// Raised when a computation exceeds a documented size cap.
class limit_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

constexpr std::uint64_t kDefaultClosureCap = 10'000'000;

// Process-wide closure cap, applied on top of per-call caps. Set once
// at startup (CLI --max-elements).
void set_closure_cap(std::uint64_t cap);
std::uint64_t closure_cap();

// Finitely generated subgroup of Sym(degree). The element list is
// computed on demand by deterministic breadth-first closure and cached;
// caching is internally synchronized.
class PermGroup {
public:
  PermGroup() : PermGroup(0, {}) {}
  PermGroup(int degree, std::vector<Permutation> generators);
  static PermGroup trivial(int degree);

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }

  const std::vector<Permutation>& elements(std::uint64_t cap = kDefaultClosureCap) const;
  std::uint64_t order(std::uint64_t cap = kDefaultClosureCap) const;
  bool contains(const Permutation& p, std::uint64_t cap = kDefaultClosureCap) const;

  // Orbits of the natural action on {1..degree}, each sorted, ordered by
  // smallest element.
  std::vector<std::vector<int>> orbits() const;

private:
  int degree_ = 0;
  std::vector<Permutation> gens_;
  struct Cache;
  std::shared_ptr<Cache> cache_;
};

// Full element list of <gens> by breadth-first closure, deterministic
// order (identity first). Throws limit_error past cap.
std::vector<Permutation> group_closure(const std::vector<Permutation>& gens,
                                       std::uint64_t cap = kDefaultClosureCap);

// Greedy reduction of an element list to a small generating set.
std::vector<Permutation> reduce_generators(const std::vector<Permutation>& elements,
                                           int degree);

// Iterated-wreath Sylow 2-subgroup of Sym(m) on {1..m}, assembled from
// the binary expansion of m. Order 2^(sum floor(m/2^j)).
PermGroup sylow2_sym(int m);

std::uint64_t sylow2_sym_order(int m);

// base^u . top on b*u points: u block copies of base plus top permuting
// the blocks. Order |base|^u * |top|.
PermGroup wreath_embed(const PermGroup& base, const PermGroup& top);

// A Sylow 2-subgroup of a small group given by its element list,
// grown by index-2 normalizer steps.
PermGroup sylow2_of(const std::vector<Permutation>& elements, int degree);

// All g in Sym(d) with x^g = x for every x in X. Brute force, d <= 8.
PermGroup centralizer_of_set(const std::vector<Permutation>& X, int degree);

// All g in Sym(d) with X^g = X as a set. Brute force, d <= 8.
PermGroup set_stabilizer(const std::vector<Permutation>& X, int degree);

// A finite G-set. Conjugation actions carry their points as
// permutations so that arbitrary same-degree elements can act; natural
// actions are index actions of the group on {1..degree}.
class GroupAction {
public:
  enum class Kind { Conjugation, Natural };

  static GroupAction conjugation(PermGroup group, std::vector<Permutation> points);
  static GroupAction natural(PermGroup group);

  Kind kind() const { return kind_; }
  const PermGroup& group() const { return group_; }
  int num_points() const { return n_points_; }
  const std::vector<Permutation>& points() const { return points_; }

  // Image of point index (0-based) under g.
  int act(const Permutation& g, int point_index) const;

  // Precomputed images per group generator: table()[k][p].
  const std::vector<std::vector<int>>& table() const { return table_; }

  // Orbit id per point under the acting group, by BFS from the lowest
  // unseen point.
  std::vector<int> point_orbit_ids() const;

private:
  Kind kind_ = Kind::Natural;
  PermGroup group_;
  std::vector<Permutation> points_;
  int n_points_ = 0;
  std::vector<std::vector<int>> table_;
  std::vector<std::pair<std::vector<int>, int>> index_;  // sorted images -> point index
  void build_table();
  int index_of(const Permutation& p) const;
};

// Points of the action fixed by every generator of the subgroup.
// Returns 0-based point indices.
std::vector<int> fixed_points(const PermGroup& subgroup, const GroupAction& action);

// All fixed-point-free involutions of Sym(2n) (perfect matchings of
// {1..2n}) with the conjugation action of Sym(2n). two_n even, <= 12.
GroupAction enumerate_fpf_involutions(int two_n);

// Generators {(1 2), (1 2 ... d)} of Sym(d); Sym(1) is trivial.
PermGroup symmetric_group(int d);

}  // namespace matchmod
