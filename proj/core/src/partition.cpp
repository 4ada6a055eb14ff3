#include "matchmod/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace matchmod {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
    weight_ += parts_[i];
  }
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return Partition();
  std::vector<int> conj(parts_[0], 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) conj[j]++;
  return Partition(std::move(conj));
}

int Partition::odd_parts() const {
  int c = 0;
  for (int p : parts_)
    if (p % 2 != 0) ++c;
  return c;
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += '+';
    s += std::to_string(parts_[i]);
  }
  return s;
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    gen_partitions(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions(int d) {
  if (d < 0) throw std::invalid_argument("partitions: negative weight");
  std::vector<Partition> out;
  std::vector<int> prefix;
  gen_partitions(d, d, prefix, out);
  if (d == 0) out = {Partition()};
  return out;
}

std::int64_t factorial(int n) {
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::int64_t hook_length_dimension(const Partition& lambda) {
  const auto& lam = lambda.parts();
  auto conj = lambda.conjugate().parts();
  // dim = d!/prod(hooks); divide greedily so intermediates stay small
  std::int64_t num = factorial(lambda.weight());
  for (std::size_t i = 0; i < lam.size(); ++i)
    for (int j = 0; j < lam[i]; ++j) {
      std::int64_t hook = lam[i] - (j + 1) + conj[j] - static_cast<int>(i + 1) + 1;
      num /= hook ? hook : 1;
      if (hook == 0) throw std::logic_error("zero hook length");
    }
  return num;
}

std::int64_t centralizer_order(const Partition& rho) {
  std::int64_t z = 1;
  int run = 0, prev = -1;
  for (int p : rho.parts()) {
    if (p == prev) {
      ++run;
    } else {
      prev = p;
      run = 1;
    }
    z *= static_cast<std::int64_t>(p) * run;
  }
  return z;
}

ClassData ClassData::of_degree(int d) {
  ClassData cd;
  cd.degree = d;
  cd.cycle_types = partitions(d);
  std::int64_t dfact = factorial(d);
  for (const auto& rho : cd.cycle_types) {
    std::int64_t z = centralizer_order(rho);
    cd.centralizer_orders.push_back(z);
    cd.class_sizes.push_back(dfact / z);
  }
  return cd;
}

int ClassData::index_of(const Partition& rho) const {
  for (std::size_t i = 0; i < cycle_types.size(); ++i)
    if (cycle_types[i] == rho) return static_cast<int>(i);
  throw std::invalid_argument("cycle type not of this degree");
}

}  // namespace matchmod
