#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "matchmod/gf2.hpp"
#include "matchmod/group.hpp"

namespace matchmod {

// Permutation module over GF(2): basis = the points of a GroupAction,
// one permutation matrix per group generator.
struct PermModule {
  int dimension = 0;
  std::vector<Gf2Matrix> generator_matrices;

  static PermModule from_action(const GroupAction& action);
  bool commutes_with_action(const Gf2Matrix& m) const;
};

// Generator matrices of a subgroup on the same basis.
std::vector<Gf2Matrix> restrict_module(const GroupAction& action, const PermGroup& subgroup);

// Orbit basis of End_kG(k Omega): one 0/1 matrix per G-orbit on
// Omega x Omega. Orbit matrices have disjoint supports and sum to the
// all-ones matrix.
struct EndAlgebraBasis {
  std::vector<Gf2Matrix> orbit_matrices;
  std::vector<std::string> orbit_labels;
  std::size_t size() const { return orbit_matrices.size(); }
};

// Builds the orbit basis from a pair invariant that is constant on
// orbits and separates them. Stability under the generators is
// validated on a deterministic sample; failure throws.
EndAlgebraBasis end_algebra_basis(
    const GroupAction& action,
    const std::function<std::string(int, int)>& pair_invariant);

// Orbit basis computed directly by BFS on pairs; works for any action.
EndAlgebraBasis end_algebra_basis_from_orbits(const GroupAction& action);

// Fitting decomposition for theta commuting with the action: either
// nullopt (theta nilpotent or invertible) or complementary invariant
// subspaces (ker theta^N, im theta^N), dims summing to the dimension.
std::optional<std::pair<Gf2Matrix, Gf2Matrix>> fitting_split(const PermModule& module,
                                                             const Gf2Matrix& theta);

struct Component {
  Gf2Matrix idempotent;  // projection onto the summand, in the orbit span
  Gf2Matrix basis;       // rows spanning the summand
  int dimension = 0;
  // filled by the pipeline
  std::map<std::string, int> brauer_dims;
};

// Complete decomposition into indecomposables: recursively splits along
// elements of the full GF(2)-span of the orbit basis until every
// summand's restricted endomorphism algebra is local (every element
// nilpotent or invertible). Requires 2^(basis size) <= 1024.
std::vector<Component> decompose(const PermModule& module, const EndAlgebraBasis& basis);

// Expresses an idempotent of the commutant in the orbit basis
// (possible because orbit matrices have disjoint support).
std::vector<int> idempotent_orbit_coefficients(const Gf2Matrix& e,
                                               const EndAlgebraBasis& basis);

// Freeness test over a 2-group in characteristic 2:
// dim M == |P| * dim(M / rad M) with rad M spanned by (g-1)m.
bool is_projective_over_2group(const Gf2Matrix& subspace_basis,
                               const std::vector<Gf2Matrix>& p_generator_matrices,
                               std::uint64_t p_order);

// Q-fixed vectors of the subspace, as rows in ambient coordinates.
Gf2Matrix fixed_subspace(const Gf2Matrix& subspace_basis,
                         const std::vector<Gf2Matrix>& generator_matrices);

// Brauer quotient dimension of a summand of k Omega at a 2-subgroup Q.
//
// The trace route computes M^Q / sum_R Tr_R^Q(M^R) over the index-2
// maximal subgroups of Q (|Q| <= 32). The fixed-point route uses the
// canonical identification Br_Q(k Omega) = k[Fix_Omega(Q)]: the image
// of M^Q under restriction to the fixed-point coordinates. Both agree;
// the fixed-point route has no cap.
int brauer_quotient_dim_traces(const Gf2Matrix& subspace_basis, const PermGroup& Q,
                               const GroupAction& ambient);
int brauer_quotient_dim_fixed(const Gf2Matrix& subspace_basis, const PermGroup& Q,
                              const GroupAction& ambient);

// Fixed-point-route Brauer quotient together with the induced action of
// the chosen normalizer generators on its canonical basis.
struct BrauerQuotient {
  int dimension = 0;
  Gf2Matrix basis;  // rows in k[Fix_Omega(Q)] coordinates
  std::vector<Gf2Matrix> normalizer_action;
};
BrauerQuotient brauer_quotient(const Gf2Matrix& subspace_basis, const PermGroup& Q,
                               const GroupAction& ambient,
                               const std::vector<Permutation>& normalizer_gens = {});

// Decomposes the permutation module of the action and reports which
// components are projective over a Sylow 2-subgroup of the (small)
// acting group. Returns (dimension, is_projective) pairs.
std::vector<std::pair<int, bool>> projective_profile(const GroupAction& action);

}  // namespace matchmod
