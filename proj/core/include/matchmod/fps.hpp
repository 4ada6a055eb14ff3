#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "matchmod/group.hpp"
#include "matchmod/perm.hpp"

namespace matchmod {

// A candidate fixed point set: a finite set of involutions, each
// fixed-point-free on the common support. Stored in canonical form:
// support relabeled to {1..d}, members sorted. Two FPSets are
// equivalent when some relabeling maps one member set onto the other.
class FPSet {
public:
  // Canonicalizes: relabels the union of supports to {1..d}
  // order-preservingly and sorts members. Every member must be a
  // nonidentity involution moving every support point.
  static FPSet from_members(const std::vector<Permutation>& members);

  int degree() const { return degree_; }
  int size() const { return static_cast<int>(members_.size()); }
  const std::vector<Permutation>& members() const { return members_; }

  bool operator==(const FPSet& o) const {
    return degree_ == o.degree_ && members_ == o.members_;
  }
  bool operator<(const FPSet& o) const {
    if (degree_ != o.degree_) return degree_ < o.degree_;
    return members_ < o.members_;
  }

  // One member per line in cycle notation after the header line
  // "support=d members=m".
  std::string serialize() const;
  static FPSet deserialize(const std::string& text);

private:
  int degree_ = 0;
  std::vector<Permutation> members_;
};

// U = { (1 2) } and V, the three fixed-point-free involutions on
// {1..4}. V_i = diag_power(V, 2^i).
FPSet fps_U();
FPSet fps_V();
FPSet fps_V_i(int i);

// Disjoint-support product {x y' : x in X, y' in Y shifted}; the result
// is canonical with X on the low points.
FPSet star(const FPSet& X, const FPSet& Y);

// s disjoint copies of each single member multiplied together;
// |diag_power(X,s)| = |X|, degree s*d(X).
FPSet diag_power(const FPSet& X, int s);

// Relabeling equivalence (exists g with X^g = Y).
bool equivalent(const FPSet& X, const FPSet& Y);

struct FactorSlot {
  FPSet factor;             // canonical form of the restriction
  std::vector<int> points;  // support points inside the parent, ascending
  // iso[i] = parent point carrying factor point i+1
  std::vector<int> iso;
  int class_id = 0;  // slots with equivalent factors share an id
};

struct Factorization {
  std::vector<FactorSlot> slots;
  // (canonical factor, multiplicity), grouped by equivalence
  std::vector<std::pair<FPSet, int>> grouped;
};

// Finest product decomposition: partitions the support into parts such
// that X is the full product of its restrictions, each irreducible.
// Requires d(X) <= 16.
Factorization irreducible_factorization(const FPSet& X);

struct StabilizerData {
  PermGroup S;     // pointwise stabilizer (simultaneous centralizer) on {1..d}
  PermGroup Q;     // a Sylow 2-subgroup of S
  PermGroup N;     // set stabilizer on {1..d}
  PermGroup Nbar;  // faithful image of N/S on member indices {1..m}
  std::uint64_t S_order = 0;
  std::uint64_t N_order = 0;
  std::uint64_t Nbar_order = 0;
};

// Brute force for irreducible factors of degree <= 8; composite sets
// are assembled as direct products over coprime factors, with wreath
// closure over repeated factors, and irreducible diagonals of larger
// degree reduced to their base via the coherent block relabelings.
StabilizerData stabilizer_data(const FPSet& X);

// Fix_{Xi_{2n}}(Q_X) == X, with Q_X a Sylow 2-subgroup of the
// simultaneous centralizer of the members in Sym(2n). X must have
// support {1..2n}.
bool is_closed(const FPSet& X, int ambient_two_n);

// mu = (4t, 2s) with s + 2t = n; I is the set of 2-adic exponents of t.
struct MuLabel {
  int s = 0;
  int t = 0;
  std::set<int> I;
  int n = 0;

  int two_n() const { return 2 * n; }
  // composition entries (4t, 2s)
  int four_t() const { return 4 * t; }
  int two_s() const { return 2 * s; }
  std::string to_string() const;
};

// All (s,t) >= 0 with s + 2t = n, in ascending t; count floor(n/2)+1.
std::vector<MuLabel> enumerate_mu(int n);

// W_mu = (*_{i in I} V_i) * U^s, V-blocks in ascending i on the low
// points, U-block last; 3^|I| members on {1..2n}.
FPSet build_W(const MuLabel& mu);

struct VertexSpec {
  MuLabel mu;
  std::vector<Permutation> generators;  // on {1..2n}
  std::uint64_t order = 0;              // |P(2s)| * prod 4^(2^i) |P(2^i)|
  std::string factors;                  // e.g. "(H wr P(2)) x P(4)"
  PermGroup group() const;
};

// Explicit vertex Q_mu = P(2s) x prod_{i in I} (H wr P(2^i)), with the
// V-parts on the low points matching build_W.
VertexSpec vertex_spec(const MuLabel& mu);

// Whether k(V_i * V_i) over Nbar ~ Sym(3) wr Sym(2) has a projective
// component. i <= 1.
bool kappa_probe(int i);

}  // namespace matchmod
