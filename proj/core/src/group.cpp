#include "matchmod/group.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <map>
#include <numeric>
#include <unordered_set>

namespace matchmod {

namespace {
std::atomic<std::uint64_t> g_closure_cap{kDefaultClosureCap};
}

void set_closure_cap(std::uint64_t cap) { g_closure_cap.store(cap); }
std::uint64_t closure_cap() { return g_closure_cap.load(); }

struct PermGroup::Cache {
  std::mutex mu;
  std::vector<Permutation> elements;
  bool ready = false;
};

PermGroup::PermGroup(int degree, std::vector<Permutation> generators)
    : degree_(degree), gens_(std::move(generators)), cache_(std::make_shared<Cache>()) {
  for (const auto& g : gens_)
    if (g.degree() != degree_) throw std::invalid_argument("generator degree mismatch");
}

PermGroup PermGroup::trivial(int degree) { return PermGroup(degree, {}); }

const std::vector<Permutation>& PermGroup::elements(std::uint64_t cap) const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->ready) {
    cache_->elements = group_closure(gens_.empty()
                                         ? std::vector<Permutation>{Permutation::identity(degree_)}
                                         : gens_,
                                     cap);
    cache_->ready = true;
  }
  return cache_->elements;
}

std::uint64_t PermGroup::order(std::uint64_t cap) const { return elements(cap).size(); }

bool PermGroup::contains(const Permutation& p, std::uint64_t cap) const {
  const auto& els = elements(cap);
  return std::find(els.begin(), els.end(), p) != els.end();
}

std::vector<std::vector<int>> PermGroup::orbits() const {
  std::vector<int> orbit_id(degree_, -1);
  std::vector<std::vector<int>> out;
  for (int start = 1; start <= degree_; ++start) {
    if (orbit_id[start - 1] >= 0) continue;
    std::vector<int> orb{start};
    orbit_id[start - 1] = static_cast<int>(out.size());
    std::deque<int> queue{start};
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (const auto& g : gens_) {
        int y = g(x);
        if (orbit_id[y - 1] < 0) {
          orbit_id[y - 1] = orbit_id[start - 1];
          orb.push_back(y);
          queue.push_back(y);
        }
      }
    }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

std::vector<Permutation> group_closure(const std::vector<Permutation>& gens,
                                       std::uint64_t cap) {
  cap = std::min(cap, closure_cap());
  if (gens.empty()) throw std::invalid_argument("group_closure: no generators");
  int degree = gens[0].degree();
  for (const auto& g : gens)
    if (g.degree() != degree) throw std::invalid_argument("group_closure: degree mismatch");

  Permutation id = Permutation::identity(degree);
  std::unordered_set<Permutation, PermHash> seen{id};
  std::vector<Permutation> order{id};
  std::deque<Permutation> queue{id};
  while (!queue.empty()) {
    Permutation cur = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      Permutation next = compose(cur, g);
      if (seen.insert(next).second) {
        if (seen.size() > cap) throw limit_error("group closure exceeds cap");
        order.push_back(next);
        queue.push_back(next);
      }
    }
  }
  return order;
}

std::vector<Permutation> reduce_generators(const std::vector<Permutation>& elements,
                                           int degree) {
  std::vector<Permutation> gens;
  std::unordered_set<Permutation, PermHash> have{Permutation::identity(degree)};
  for (const auto& e : elements) {
    if (have.count(e)) continue;
    gens.push_back(e);
    auto closure = group_closure(gens);
    have = std::unordered_set<Permutation, PermHash>(closure.begin(), closure.end());
    if (have.size() == elements.size()) break;
  }
  return gens;
}

namespace {

// Transposition block swap: maps offset+i <-> offset+half+i for i < half.
Permutation half_swap(int degree, int offset, int half) {
  std::vector<int> im(degree);
  for (int i = 0; i < degree; ++i) im[i] = i + 1;
  for (int i = 0; i < half; ++i) {
    im[offset + i] = offset + half + i + 1;
    im[offset + half + i] = offset + i + 1;
  }
  return Permutation(std::move(im));
}

}  // namespace

PermGroup sylow2_sym(int m) {
  if (m < 1) throw std::invalid_argument("sylow2_sym: m >= 1 required");
  std::vector<Permutation> gens;
  int offset = 0;
  // largest power-of-two blocks first
  for (int bit = 30; bit >= 0; --bit) {
    if (!(m & (1 << bit))) continue;
    int block = 1 << bit;
    for (int half = 1; half < block; half *= 2)
      gens.push_back(half_swap(m, offset, half));
    offset += block;
  }
  return PermGroup(m, std::move(gens));
}

std::uint64_t sylow2_sym_order(int m) {
  int e = 0;
  for (int q = 2; q <= m; q *= 2) e += m / q;
  return std::uint64_t{1} << e;
}

PermGroup wreath_embed(const PermGroup& base, const PermGroup& top) {
  int b = base.degree(), u = top.degree();
  int degree = b * u;
  std::vector<Permutation> gens;
  for (int copy = 0; copy < u; ++copy)
    for (const auto& g : base.generators()) {
      std::vector<int> im(degree);
      for (int i = 0; i < degree; ++i) im[i] = i + 1;
      for (int i = 1; i <= b; ++i) im[copy * b + i - 1] = copy * b + g(i);
      gens.emplace_back(std::move(im));
    }
  for (const auto& t : top.generators()) {
    std::vector<int> im(degree);
    for (int copy = 1; copy <= u; ++copy)
      for (int i = 1; i <= b; ++i) im[(copy - 1) * b + i - 1] = (t(copy) - 1) * b + i;
    gens.emplace_back(std::move(im));
  }
  return PermGroup(degree, std::move(gens));
}

PermGroup sylow2_of(const std::vector<Permutation>& elements, int degree) {
  std::uint64_t two_part = 1;
  {
    std::uint64_t n = elements.size();
    while (n % 2 == 0) {
      two_part *= 2;
      n /= 2;
    }
  }
  std::vector<Permutation> gens;
  std::unordered_set<Permutation, PermHash> current{Permutation::identity(degree)};
  while (current.size() < two_part) {
    // extend by y with y^2 in P and y normalizing P
    bool found = false;
    for (const auto& y : elements) {
      if (current.count(y)) continue;
      if (!current.count(compose(y, y))) continue;
      Permutation yinv = y.inverse();
      bool normalizes = true;
      for (const auto& p : current) {
        if (!current.count(compose(compose(yinv, p), y))) {
          normalizes = false;
          break;
        }
      }
      if (!normalizes) continue;
      gens.push_back(y);
      auto closure = group_closure(gens);
      current = std::unordered_set<Permutation, PermHash>(closure.begin(), closure.end());
      found = true;
      break;
    }
    if (!found) throw std::logic_error("sylow2_of: no extending element found");
  }
  return PermGroup(degree, std::move(gens));
}

namespace {

template <typename Pred>
PermGroup brute_force_subgroup(int degree, Pred keep) {
  if (degree > 8) throw limit_error("brute-force stabilizer capped at degree 8");
  std::vector<int> im(degree);
  std::iota(im.begin(), im.end(), 1);
  std::vector<Permutation> found;
  do {
    Permutation g{std::vector<int>(im)};
    if (keep(g)) found.push_back(std::move(g));
  } while (std::next_permutation(im.begin(), im.end()));
  std::sort(found.begin(), found.end());
  return PermGroup(degree, reduce_generators(found, degree));
}

}  // namespace

PermGroup centralizer_of_set(const std::vector<Permutation>& X, int degree) {
  return brute_force_subgroup(degree, [&](const Permutation& g) {
    for (const auto& x : X)
      if (!(conjugate(x, g) == x)) return false;
    return true;
  });
}

PermGroup set_stabilizer(const std::vector<Permutation>& X, int degree) {
  std::vector<Permutation> sorted = X;
  std::sort(sorted.begin(), sorted.end());
  return brute_force_subgroup(degree, [&](const Permutation& g) {
    for (const auto& x : X) {
      Permutation img = conjugate(x, g);
      if (!std::binary_search(sorted.begin(), sorted.end(), img)) return false;
    }
    return true;
  });
}

GroupAction GroupAction::conjugation(PermGroup group, std::vector<Permutation> points) {
  GroupAction a;
  a.kind_ = Kind::Conjugation;
  a.group_ = std::move(group);
  a.points_ = std::move(points);
  a.n_points_ = static_cast<int>(a.points_.size());
  for (int i = 0; i < a.n_points_; ++i)
    a.index_.emplace_back(a.points_[i].images(), i);
  std::sort(a.index_.begin(), a.index_.end());
  a.build_table();
  return a;
}

GroupAction GroupAction::natural(PermGroup group) {
  GroupAction a;
  a.kind_ = Kind::Natural;
  a.n_points_ = group.degree();
  a.group_ = std::move(group);
  a.build_table();
  return a;
}

int GroupAction::index_of(const Permutation& p) const {
  auto it = std::lower_bound(index_.begin(), index_.end(),
                             std::make_pair(p.images(), -1));
  if (it == index_.end() || it->first != p.images())
    throw std::invalid_argument("point not in action");
  return it->second;
}

int GroupAction::act(const Permutation& g, int point_index) const {
  if (kind_ == Kind::Natural) {
    if (g.degree() != n_points_) throw std::invalid_argument("act: degree mismatch");
    return g(point_index + 1) - 1;
  }
  return index_of(conjugate(points_[point_index], g));
}

void GroupAction::build_table() {
  table_.clear();
  for (const auto& g : group_.generators()) {
    std::vector<int> row(n_points_);
    for (int p = 0; p < n_points_; ++p) row[p] = act(g, p);
    table_.push_back(std::move(row));
  }
}

std::vector<int> GroupAction::point_orbit_ids() const {
  std::vector<int> id(n_points_, -1);
  int next = 0;
  for (int start = 0; start < n_points_; ++start) {
    if (id[start] >= 0) continue;
    id[start] = next;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (const auto& row : table_)
        if (id[row[x]] < 0) {
          id[row[x]] = next;
          queue.push_back(row[x]);
        }
    }
    ++next;
  }
  return id;
}

std::vector<int> fixed_points(const PermGroup& subgroup, const GroupAction& action) {
  std::vector<int> fixed;
  for (int p = 0; p < action.num_points(); ++p) {
    bool ok = true;
    for (const auto& g : subgroup.generators())
      if (action.act(g, p) != p) {
        ok = false;
        break;
      }
    if (ok) fixed.push_back(p);
  }
  return fixed;
}

namespace {

void gen_matchings(std::vector<int>& partner, int two_n,
                   std::vector<Permutation>& out) {
  int first = -1;
  for (int i = 0; i < two_n; ++i)
    if (partner[i] == 0) {
      first = i;
      break;
    }
  if (first < 0) {
    out.emplace_back(std::vector<int>(partner));
    return;
  }
  for (int j = first + 1; j < two_n; ++j) {
    if (partner[j] != 0) continue;
    partner[first] = j + 1;
    partner[j] = first + 1;
    gen_matchings(partner, two_n, out);
    partner[first] = 0;
    partner[j] = 0;
  }
}

}  // namespace

GroupAction enumerate_fpf_involutions(int two_n) {
  if (two_n <= 0 || two_n % 2 != 0)
    throw std::invalid_argument("enumerate_fpf_involutions: even positive degree required");
  if (two_n > 12) throw limit_error("enumerate_fpf_involutions capped at degree 12");
  std::vector<int> partner(two_n, 0);
  std::vector<Permutation> points;
  gen_matchings(partner, two_n, points);
  return GroupAction::conjugation(symmetric_group(two_n), std::move(points));
}

PermGroup symmetric_group(int d) {
  if (d < 1) throw std::invalid_argument("symmetric_group: d >= 1");
  if (d == 1) return PermGroup::trivial(1);
  std::vector<Permutation> gens;
  {
    std::vector<int> im(d);
    std::iota(im.begin(), im.end(), 1);
    std::swap(im[0], im[1]);
    gens.emplace_back(std::move(im));
  }
  if (d > 2) {
    std::vector<int> im(d);
    for (int i = 0; i < d; ++i) im[i] = (i + 1) % d + 1;
    gens.emplace_back(std::move(im));
  }
  return PermGroup(d, std::move(gens));
}

}  // namespace matchmod
