#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace matchmod {

// Integer partition, parts weakly decreasing and positive. The empty
// partition is the unique partition of 0.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  int weight() const { return weight_; }
  int num_parts() const { return static_cast<int>(parts_.size()); }
  const std::vector<int>& parts() const { return parts_; }

  Partition conjugate() const;
  int odd_parts() const;

  // "4+2+2"; "0" for the empty partition.
  std::string to_string() const;

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }

private:
  std::vector<int> parts_;
  int weight_ = 0;
};

// All partitions of d in descending lexicographic order ([d] first,
// [1,...,1] last). partitions(0) = { empty }.
std::vector<Partition> partitions(int d);

// dim of the irreducible indexed by lambda, d!/prod(hooks).
std::int64_t hook_length_dimension(const Partition& lambda);

std::int64_t factorial(int n);

// |C_{Sym(d)}(g)| for g of cycle type rho: prod_j j^{m_j} m_j!.
std::int64_t centralizer_order(const Partition& rho);

// Conjugacy class combinatorics of Sym(d).
struct ClassData {
  int degree = 0;
  std::vector<Partition> cycle_types;
  std::vector<std::int64_t> class_sizes;
  std::vector<std::int64_t> centralizer_orders;

  static ClassData of_degree(int d);
  int index_of(const Partition& rho) const;
};

}  // namespace matchmod
