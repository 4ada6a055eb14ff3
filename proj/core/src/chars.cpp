#include "matchmod/chars.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "matchmod/group.hpp"
#include "matchmod/lift.hpp"

namespace matchmod {

CharacterVector CharacterVector::zero(int degree) {
  CharacterVector v;
  v.degree = degree;
  for (const auto& rho : partitions(degree)) v.values[rho] = 0;
  return v;
}

std::int64_t CharacterVector::at(const Partition& rho) const {
  auto it = values.find(rho);
  if (it == values.end()) throw std::invalid_argument("cycle type of the wrong degree");
  return it->second;
}

std::int64_t CharacterVector::dimension() const {
  return at(Partition(std::vector<int>(degree, 1)));
}

CharacterVector& CharacterVector::operator+=(const CharacterVector& o) {
  if (degree != o.degree) throw std::invalid_argument("character degree mismatch");
  for (auto& [rho, v] : values) v += o.values.at(rho);
  return *this;
}

bool CharacterVector::operator==(const CharacterVector& o) const {
  return degree == o.degree && values == o.values;
}

std::int64_t CharacterVector::inner(const CharacterVector& o) const {
  if (degree != o.degree) throw std::invalid_argument("character degree mismatch");
  std::int64_t total = 0;
  std::int64_t dfact = factorial(degree);
  for (const auto& [rho, v] : values)
    total += (dfact / centralizer_order(rho)) * v * o.values.at(rho);
  if (total % dfact != 0) throw std::logic_error("non-integral inner product");
  return total / dfact;
}

std::vector<Partition> CharacterVector::constituents() const {
  std::vector<Partition> out;
  CharacterEvaluator eval;
  for (const auto& lambda : partitions(degree))
    if (inner(eval.irreducible(lambda)) != 0) out.push_back(lambda);
  return out;
}

std::int64_t CharacterEvaluator::mn_character(const Partition& lambda, const Partition& rho) {
  if (lambda.weight() != rho.weight())
    throw std::invalid_argument("mn_character: weight mismatch");
  if (lambda.weight() == 0) return 1;
  auto key = std::make_pair(lambda.parts(), rho.parts());
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  // remove a border strip of length rho[0]: in beta-set terms replace
  // some b by b-r; the strip height is the number of betas in between
  const int r = rho.parts()[0];
  std::vector<int> rest_parts(rho.parts().begin() + 1, rho.parts().end());
  Partition rest(rest_parts);

  const auto& lam = lambda.parts();
  const int len = lambda.num_parts();
  std::vector<int> beta(len);
  for (int i = 0; i < len; ++i) beta[i] = lam[i] + (len - 1 - i);  // strictly decreasing

  std::int64_t total = 0;
  for (int i = 0; i < len; ++i) {
    int target = beta[i] - r;
    if (target < 0) continue;
    bool occupied = false;
    int between = 0;
    for (int j = 0; j < len; ++j) {
      if (j == i) continue;
      if (beta[j] == target) occupied = true;
      if (beta[j] > target && beta[j] < beta[i]) ++between;
    }
    if (occupied) continue;
    std::vector<int> nb = beta;
    nb[i] = target;
    std::sort(nb.rbegin(), nb.rend());
    std::vector<int> parts;
    for (int j = 0; j < len; ++j) {
      int p = nb[j] - (len - 1 - j);
      if (p > 0) parts.push_back(p);
    }
    std::int64_t term = mn_character(Partition(parts), rest);
    total += (between % 2 == 0) ? term : -term;
  }
  memo_[key] = total;
  return total;
}

CharacterVector CharacterEvaluator::irreducible(const Partition& lambda) {
  CharacterVector v = CharacterVector::zero(lambda.weight());
  for (auto& [rho, val] : v.values) val = mn_character(lambda, rho);
  return v;
}

std::int64_t mn_character(const Partition& lambda, const Partition& rho) {
  CharacterEvaluator eval;
  return eval.mn_character(lambda, rho);
}

CharacterVector trivial_character(int degree) {
  CharacterVector v = CharacterVector::zero(degree);
  for (auto& [rho, val] : v.values) val = 1;
  return v;
}

CharacterVector sign_character(int degree) {
  CharacterVector v = CharacterVector::zero(degree);
  for (auto& [rho, val] : v.values)
    val = ((degree - rho.num_parts()) % 2 == 0) ? 1 : -1;
  return v;
}

std::vector<Partition> lambda_set(int v, int m) {
  std::vector<Partition> out;
  for (const auto& p : partitions(v))
    if (p.odd_parts() == m) out.push_back(p);
  return out;
}

std::vector<Partition> lambda_conj_set(int v, int u) {
  std::vector<Partition> out;
  for (const auto& p : partitions(v))
    if (p.conjugate().odd_parts() == u) out.push_back(p);
  return out;
}

CharacterVector perm_character_xi(int two_n) {
  if (two_n > 10) throw limit_error("perm_character_xi capped at degree 10");
  GroupAction xi = enumerate_fpf_involutions(two_n);
  CharacterVector v = CharacterVector::zero(two_n);
  for (auto& [rho, val] : v.values) {
    Permutation g = class_representative(rho);
    std::int64_t count = 0;
    for (const auto& x : xi.points())
      if (conjugate(x, g) == x) ++count;
    val = count;
  }
  return v;
}

std::vector<Partition> phi_mu_index_set(const MuLabel& mu) {
  std::vector<Partition> out;
  for (const auto& lambda : partitions(mu.two_n()))
    if (lambda.odd_parts() == 0 && lambda.conjugate().odd_parts() == mu.two_s())
      out.push_back(lambda);
  return out;
}

CharacterVector phi_mu(const MuLabel& mu) {
  CharacterVector v = CharacterVector::zero(mu.two_n());
  CharacterEvaluator eval;
  for (const auto& lambda : phi_mu_index_set(mu)) v += eval.irreducible(lambda);
  return v;
}

namespace {

std::int64_t binomial(int n, int k) {
  std::int64_t b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

struct PartMult {
  int part;
  int mult;
};

std::vector<PartMult> multiplicities(const Partition& p) {
  std::vector<PartMult> out;
  for (int v : p.parts()) {
    if (!out.empty() && out.back().part == v)
      out.back().mult++;
    else
      out.push_back({v, 1});
  }
  return out;
}

}  // namespace

CharacterVector induce_character(const CharacterVector& chi_a, const CharacterVector& chi_b) {
  const int a = chi_a.degree, b = chi_b.degree;
  CharacterVector out = CharacterVector::zero(a + b);
  if (b == 0) {
    for (auto& [gamma, val] : out.values) val = chi_a.at(gamma);
    return out;
  }
  if (a == 0) {
    for (auto& [gamma, val] : out.values) val = chi_b.at(gamma);
    return out;
  }
  for (auto& [gamma, val] : out.values) {
    auto mults = multiplicities(gamma);
    std::vector<int> take(mults.size(), 0);
    std::int64_t total = 0;
    // choose a_j of the m_j parts j for the Sym(a) side
    std::function<void(std::size_t, int, std::int64_t)> rec = [&](std::size_t idx,
                                                                  int weight,
                                                                  std::int64_t coeff) {
      if (weight > a) return;
      if (idx == mults.size()) {
        if (weight != a) return;
        std::vector<int> alpha, beta;
        for (std::size_t j = 0; j < mults.size(); ++j) {
          for (int c = 0; c < take[j]; ++c) alpha.push_back(mults[j].part);
          for (int c = 0; c < mults[j].mult - take[j]; ++c) beta.push_back(mults[j].part);
        }
        total += coeff * chi_a.at(Partition(alpha)) * chi_b.at(Partition(beta));
        return;
      }
      for (int c = 0; c <= mults[idx].mult; ++c) {
        take[idx] = c;
        rec(idx + 1, weight + c * mults[idx].part,
            coeff * binomial(mults[idx].mult, c));
      }
      take[idx] = 0;
    };
    rec(0, 0, 1);
    val = total;
  }
  return out;
}

IrsResult irs_character(int n, int m) {
  if (2 * (n + m) > 10) throw limit_error("irs_character capped at degree 10");
  IrsResult r;
  if (n == 0)
    r.induced = sign_character(2 * m);
  else if (m == 0)
    r.induced = perm_character_xi(2 * n);
  else
    r.induced = induce_character(perm_character_xi(2 * n), sign_character(2 * m));
  r.partition_sum = CharacterVector::zero(2 * (n + m));
  CharacterEvaluator eval;
  for (const auto& lambda : lambda_set(2 * (n + m), 2 * m))
    r.partition_sum += eval.irreducible(lambda);
  r.equal = r.induced == r.partition_sum;
  return r;
}

bool alt_twist_check(int t) {
  std::vector<Partition> index;
  for (const auto& p : partitions(4 * t))
    if (p.odd_parts() == 0 && p.conjugate().odd_parts() == 0) index.push_back(p);
  for (const auto& p : index)
    if (std::find(index.begin(), index.end(), p.conjugate()) == index.end()) return false;
  return true;
}

bool green_corollary_check(int t, int s) {
  MuLabel mu;
  mu.t = t;
  mu.s = s;
  mu.n = s + 2 * t;
  for (int bit = 0; bit < 30; ++bit)
    if (t & (1 << bit)) mu.I.insert(bit);
  std::vector<Partition> constituents = phi_mu_index_set(mu);
  for (const auto& lambda : constituents)
    if (lambda.conjugate().odd_parts() != 2 * s) return false;
  if (s == 0 || t == 0) return true;
  MuLabel nu = mu;
  nu.s = 0;
  nu.n = 2 * t;
  CharacterVector induced = induce_character(phi_mu(nu), trivial_character(2 * s));
  CharacterEvaluator eval;
  for (const auto& lambda : constituents)
    if (induced.inner(eval.irreducible(lambda)) <= 0) return false;
  return true;
}

}  // namespace matchmod
