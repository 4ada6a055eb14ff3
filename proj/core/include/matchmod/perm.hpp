#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "matchmod/partition.hpp"

namespace matchmod {

// Permutation of {1..d}, stored as the image sequence. Points are
// 1-based to match cycle notation.
class Permutation {
public:
  Permutation() = default;
  static Permutation identity(int degree);
  // images[i-1] is the image of point i; must be a bijection on {1..d}.
  explicit Permutation(std::vector<int> images);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[point - 1]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  std::vector<int> support() const;

  bool operator==(const Permutation& o) const { return images_ == o.images_; }
  bool operator<(const Permutation& o) const { return images_ < o.images_; }

private:
  std::vector<int> images_;
};

// (p . q)(x) = p(q(x)). Degrees must match.
Permutation compose(const Permutation& p, const Permutation& q);

// g^-1 x g; relabels the points of x by g^-1. Degrees must match.
Permutation conjugate(const Permutation& x, const Permutation& g);

// Multiset of cycle lengths (fixed points included), sorted descending.
Partition cycle_type(const Permutation& p);

// (-1)^(degree - #cycles)
int sign(const Permutation& p);

// Cycle notation: "(1 2)(3 4)", "()" for the identity. Parsing enforces
// the declared degree and rejects repeated points.
std::string to_cycle_string(const Permutation& p);
Permutation parse_permutation(const std::string& text, int degree);

struct PermHash {
  std::size_t operator()(const Permutation& p) const {
    std::size_t h = 1469598103934665603ull;
    for (int v : p.images()) {
      h ^= static_cast<std::size_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace matchmod
