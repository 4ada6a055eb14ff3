#include "matchmod/fps.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "matchmod/module.hpp"

namespace matchmod {

namespace {

// x restricted to points (ascending), as a permutation of {1..|points|}.
Permutation restrict_to_points(const Permutation& x, const std::vector<int>& points) {
  std::map<int, int> pos;
  for (std::size_t i = 0; i < points.size(); ++i) pos[points[i]] = static_cast<int>(i + 1);
  std::vector<int> im(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    auto it = pos.find(x(points[i]));
    if (it == pos.end()) throw std::logic_error("restriction: member leaves the part");
    im[i] = it->second;
  }
  return Permutation(std::move(im));
}

// Permutation of {1..degree} acting as g on the embedded points:
// emb[p-1] -> emb[g(p)-1].
Permutation embed_perm(const Permutation& g, const std::vector<int>& emb, int degree) {
  std::vector<int> im(degree);
  std::iota(im.begin(), im.end(), 1);
  for (int p = 1; p <= g.degree(); ++p) im[emb[p - 1] - 1] = emb[g(p) - 1];
  return Permutation(std::move(im));
}

Permutation shift_perm(const Permutation& p, int shift, int degree) {
  std::vector<int> im(degree);
  std::iota(im.begin(), im.end(), 1);
  for (int i = 1; i <= p.degree(); ++i) im[shift + i - 1] = shift + p(i);
  return Permutation(std::move(im));
}

}  // namespace

FPSet FPSet::from_members(const std::vector<Permutation>& members) {
  if (members.empty()) throw std::invalid_argument("FPSet: empty member list");
  std::vector<int> support;
  {
    std::vector<char> moved(members[0].degree() + 1, 0);
    for (const auto& m : members) {
      if (m.degree() != members[0].degree())
        throw std::invalid_argument("FPSet: member degree mismatch");
      for (int s : m.support()) moved[s] = 1;
    }
    for (int p = 1; p < static_cast<int>(moved.size()); ++p)
      if (moved[p]) support.push_back(p);
  }
  if (support.empty()) throw std::invalid_argument("FPSet: identity is not a member");

  FPSet out;
  out.degree_ = static_cast<int>(support.size());
  for (const auto& m : members) {
    if (!compose(m, m).is_identity())
      throw std::invalid_argument("FPSet: member is not an involution");
    Permutation r = restrict_to_points(m, support);
    if (static_cast<int>(r.support().size()) != out.degree_)
      throw std::invalid_argument("FPSet: member is not fixed-point-free on the support");
    out.members_.push_back(std::move(r));
  }
  std::sort(out.members_.begin(), out.members_.end());
  out.members_.erase(std::unique(out.members_.begin(), out.members_.end()),
                     out.members_.end());
  return out;
}

std::string FPSet::serialize() const {
  std::ostringstream os;
  os << "support=" << degree_ << " members=" << members_.size() << "\n";
  for (const auto& m : members_) os << to_cycle_string(m) << "\n";
  return os.str();
}

FPSet FPSet::deserialize(const std::string& text) {
  std::istringstream is(text);
  std::string header;
  std::getline(is, header);
  int d = 0, m = 0;
  if (std::sscanf(header.c_str(), "support=%d members=%d", &d, &m) != 2)
    throw std::invalid_argument("FPSet: bad header line");
  std::vector<Permutation> members;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    members.push_back(parse_permutation(line, d));
  }
  if (static_cast<int>(members.size()) != m)
    throw std::invalid_argument("FPSet: member count does not match header");
  return from_members(members);
}

FPSet fps_U() { return FPSet::from_members({parse_permutation("(1 2)", 2)}); }

FPSet fps_V() {
  return FPSet::from_members({parse_permutation("(1 2)(3 4)", 4),
                              parse_permutation("(1 3)(2 4)", 4),
                              parse_permutation("(1 4)(2 3)", 4)});
}

FPSet fps_V_i(int i) {
  if (i < 0) throw std::invalid_argument("V_i: i >= 0");
  return diag_power(fps_V(), 1 << i);
}

FPSet star(const FPSet& X, const FPSet& Y) {
  int d = X.degree() + Y.degree();
  std::vector<Permutation> members;
  for (const auto& x : X.members())
    for (const auto& y : Y.members()) {
      std::vector<int> im(d);
      for (int i = 1; i <= X.degree(); ++i) im[i - 1] = x(i);
      for (int i = 1; i <= Y.degree(); ++i) im[X.degree() + i - 1] = X.degree() + y(i);
      members.emplace_back(std::move(im));
    }
  return FPSet::from_members(members);
}

FPSet diag_power(const FPSet& X, int s) {
  if (s < 1) throw std::invalid_argument("diag_power: s >= 1");
  int d = X.degree() * s;
  std::vector<Permutation> members;
  for (const auto& x : X.members()) {
    std::vector<int> im(d);
    for (int copy = 0; copy < s; ++copy)
      for (int i = 1; i <= X.degree(); ++i)
        im[copy * X.degree() + i - 1] = copy * X.degree() + x(i);
    members.emplace_back(std::move(im));
  }
  return FPSet::from_members(members);
}

namespace {

// Witness bijection g on {1..d} with X^g = Y, or nullopt.
std::optional<std::vector<int>> find_equivalence(const FPSet& X, const FPSet& Y) {
  if (X.degree() != Y.degree() || X.size() != Y.size()) return std::nullopt;
  const int d = X.degree();

  auto pair_counts = [d](const FPSet& S) {
    std::vector<std::vector<int>> cnt(d + 1, std::vector<int>(d + 1, 0));
    for (const auto& m : S.members())
      for (int a = 1; a <= d; ++a) cnt[a][m(a)]++;
    return cnt;
  };
  auto cnt_x = pair_counts(X), cnt_y = pair_counts(Y);

  auto row_profile = [d](const std::vector<std::vector<int>>& cnt, int a) {
    std::vector<int> row(cnt[a].begin() + 1, cnt[a].end());
    std::sort(row.begin(), row.end());
    return row;
  };

  std::vector<int> sigma(d + 1, 0);
  std::vector<char> used(d + 1, 0);
  std::vector<Permutation> y_sorted = Y.members();

  std::function<bool(int)> dfs = [&](int a) -> bool {
    if (a > d) {
      std::vector<Permutation> mapped;
      Permutation g(std::vector<int>(sigma.begin() + 1, sigma.end()));
      // X^g relabels x-cycles by g: (a b) -> (g(a) g(b))
      Permutation ginv = g.inverse();
      for (const auto& x : X.members()) mapped.push_back(conjugate(x, ginv));
      std::sort(mapped.begin(), mapped.end());
      return mapped == y_sorted;
    }
    for (int b = 1; b <= d; ++b) {
      if (used[b]) continue;
      if (row_profile(cnt_x, a) != row_profile(cnt_y, b)) continue;
      bool ok = true;
      for (int a2 = 1; a2 < a && ok; ++a2)
        if (cnt_x[a][a2] != cnt_y[b][sigma[a2]]) ok = false;
      if (!ok) continue;
      sigma[a] = b;
      used[b] = 1;
      if (dfs(a + 1)) return true;
      used[b] = 0;
      sigma[a] = 0;
    }
    return false;
  };
  if (!dfs(1)) return std::nullopt;
  return std::vector<int>(sigma.begin() + 1, sigma.end());
}

}  // namespace

bool equivalent(const FPSet& X, const FPSet& Y) {
  return find_equivalence(X, Y).has_value();
}

Factorization irreducible_factorization(const FPSet& X) {
  if (X.degree() > 16) throw limit_error("irreducible_factorization capped at degree 16");

  PermGroup gen(X.degree(), X.members());
  std::vector<std::vector<int>> blocks = gen.orbits();
  const int nb = static_cast<int>(blocks.size());

  auto points_of = [&](unsigned mask) {
    std::vector<int> pts;
    for (int b = 0; b < nb; ++b)
      if (mask & (1u << b)) pts.insert(pts.end(), blocks[b].begin(), blocks[b].end());
    std::sort(pts.begin(), pts.end());
    return pts;
  };
  auto distinct_restrictions = [&](const std::vector<int>& pts) {
    std::vector<Permutation> rs;
    for (const auto& m : X.members()) rs.push_back(restrict_to_points(m, pts));
    std::sort(rs.begin(), rs.end());
    rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
    return rs;
  };

  // finest split: recursively peel off a factor across block subsets;
  // a part splits when its restriction set is the full product of the
  // two sides' restriction sets
  std::vector<unsigned> parts;
  std::function<void(unsigned)> split_rec = [&](unsigned mask) {
    int k = __builtin_popcount(mask);
    if (k > 1) {
      std::size_t part_size = distinct_restrictions(points_of(mask)).size();
      std::vector<int> bits;
      for (int b = 0; b < nb; ++b)
        if (mask & (1u << b)) bits.push_back(b);
      // subsets of the blocks in mask, smallest first, not containing all
      for (unsigned sub = 1; sub < (1u << k) - 1; ++sub) {
        unsigned s_mask = 0;
        for (int j = 0; j < k; ++j)
          if (sub & (1u << j)) s_mask |= 1u << bits[j];
        unsigned c_mask = mask & ~s_mask;
        auto rs = distinct_restrictions(points_of(s_mask));
        auto rc = distinct_restrictions(points_of(c_mask));
        if (rs.size() * rc.size() == part_size) {
          split_rec(s_mask);
          split_rec(c_mask);
          return;
        }
      }
    }
    parts.push_back(mask);
  };
  split_rec((1u << nb) - 1);
  std::sort(parts.begin(), parts.end(), [&](unsigned a, unsigned b) {
    return points_of(a) < points_of(b);
  });

  Factorization out;
  for (unsigned mask : parts) {
    FactorSlot slot;
    slot.points = points_of(mask);
    slot.iso = slot.points;
    slot.factor = FPSet::from_members(distinct_restrictions(slot.points));
    out.slots.push_back(std::move(slot));
  }
  // group equivalent factors
  for (auto& slot : out.slots) {
    int id = -1;
    for (std::size_t c = 0; c < out.grouped.size(); ++c)
      if (equivalent(out.grouped[c].first, slot.factor)) {
        id = static_cast<int>(c);
        break;
      }
    if (id < 0) {
      id = static_cast<int>(out.grouped.size());
      out.grouped.emplace_back(slot.factor, 0);
    }
    slot.class_id = id;
    out.grouped[id].second++;
  }
  return out;
}

namespace {

struct IrreducibleData {
  std::vector<Permutation> s_gens, n_gens, q_gens;  // on {1..d}
  std::uint64_t s_order = 0, n_order = 0;
};

IrreducibleData irreducible_stabilizers(const FPSet& Y);

// Coherent relabeling tau: block0 -> block, with x(tau(a)) = tau(x(a))
// for every member x; found by BFS propagation from a root choice.
std::optional<std::vector<int>> coherent_block_iso(const FPSet& Y,
                                                   const std::vector<int>& block0,
                                                   const std::vector<int>& block) {
  std::map<int, int> idx0;
  for (std::size_t i = 0; i < block0.size(); ++i) idx0[block0[i]] = static_cast<int>(i);
  for (int root_image : block) {
    std::map<int, int> tau;  // block0 point -> block point
    std::deque<int> queue;
    tau[block0[0]] = root_image;
    queue.push_back(block0[0]);
    bool ok = true;
    while (!queue.empty() && ok) {
      int a = queue.front();
      queue.pop_front();
      for (const auto& x : Y.members()) {
        int a2 = x(a);
        int b2 = x(tau[a]);
        auto it = tau.find(a2);
        if (it == tau.end()) {
          tau[a2] = b2;
          queue.push_back(a2);
        } else if (it->second != b2) {
          ok = false;
          break;
        }
      }
    }
    if (!ok || tau.size() != block0.size()) continue;
    // bijectivity onto block
    std::vector<int> image;
    for (auto& [a, b] : tau) image.push_back(b);
    std::sort(image.begin(), image.end());
    if (image != block) continue;
    std::vector<int> out(block0.size());
    for (auto& [a, b] : tau) out[idx0.at(a)] = b;
    return out;
  }
  return std::nullopt;
}

// Diagonal reduction of an irreducible set whose group orbits split the
// support into equally-patterned blocks.
std::optional<IrreducibleData> diagonal_stabilizers(const FPSet& Y) {
  PermGroup gen(Y.degree(), Y.members());
  std::vector<std::vector<int>> blocks = gen.orbits();
  const int nb = static_cast<int>(blocks.size());
  if (nb < 2) return std::nullopt;
  for (const auto& b : blocks)
    if (b.size() != blocks[0].size()) return std::nullopt;

  std::vector<Permutation> base_members;
  for (const auto& m : Y.members()) base_members.push_back(restrict_to_points(m, blocks[0]));
  {
    auto sorted = base_members;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.size() != static_cast<std::size_t>(Y.size())) return std::nullopt;
  }
  FPSet base = FPSet::from_members(base_members);

  std::vector<std::vector<int>> embs;  // embs[l][p-1] = support point of base point p
  embs.push_back(blocks[0]);
  for (int l = 1; l < nb; ++l) {
    auto tau = coherent_block_iso(Y, blocks[0], blocks[l]);
    if (!tau) return std::nullopt;
    embs.push_back(*tau);
  }

  IrreducibleData base_data = irreducible_stabilizers(base);
  IrreducibleData out;
  const int d = Y.degree();
  for (int l = 0; l < nb; ++l) {
    for (const auto& g : base_data.s_gens) out.s_gens.push_back(embed_perm(g, embs[l], d));
    for (const auto& g : base_data.q_gens) out.q_gens.push_back(embed_perm(g, embs[l], d));
  }
  // block transpositions are in S: diagonal members look the same
  // through every coherent iso
  std::vector<Permutation> swaps;
  for (int l = 0; l + 1 < nb; ++l) {
    std::vector<int> im(d);
    std::iota(im.begin(), im.end(), 1);
    for (std::size_t p = 0; p < blocks[0].size(); ++p) {
      im[embs[l][p] - 1] = embs[l + 1][p];
      im[embs[l + 1][p] - 1] = embs[l][p];
    }
    swaps.emplace_back(std::move(im));
  }
  for (const auto& s : swaps) out.s_gens.push_back(s);
  // Sylow part of the block permutations
  PermGroup block_sylow = sylow2_sym(nb);
  for (const auto& w : block_sylow.generators()) {
    std::vector<int> im(d);
    std::iota(im.begin(), im.end(), 1);
    for (int l = 1; l <= nb; ++l)
      for (std::size_t p = 0; p < blocks[0].size(); ++p)
        im[embs[l - 1][p] - 1] = embs[w(l) - 1][p];
    out.q_gens.emplace_back(std::move(im));
  }
  out.n_gens = out.s_gens;
  for (const auto& h : base_data.n_gens) {
    // h applied simultaneously in every block
    std::vector<int> im(d);
    std::iota(im.begin(), im.end(), 1);
    for (int l = 0; l < nb; ++l)
      for (int p = 1; p <= base.degree(); ++p) im[embs[l][p - 1] - 1] = embs[l][h(p) - 1];
    out.n_gens.emplace_back(std::move(im));
  }
  std::uint64_t nbar0 = base_data.n_order / base_data.s_order;
  std::uint64_t b_fact = 1;
  for (int i = 2; i <= nb; ++i) b_fact *= i;
  out.s_order = b_fact;
  for (int l = 0; l < nb; ++l) out.s_order *= base_data.s_order;
  out.n_order = out.s_order * nbar0;
  return out;
}

IrreducibleData irreducible_stabilizers(const FPSet& Y) {
  // diagonal sets reduce to their base block; transitive irreducibles
  // of degree <= 8 are brute-forced
  auto diag = diagonal_stabilizers(Y);
  if (diag) return *diag;
  if (Y.degree() > 8)
    throw limit_error("irreducible factor too large for brute-force stabilizers");
  IrreducibleData out;
  PermGroup s = centralizer_of_set(Y.members(), Y.degree());
  PermGroup n = set_stabilizer(Y.members(), Y.degree());
  PermGroup q = sylow2_of(s.elements(), Y.degree());
  out.s_gens = s.generators();
  out.n_gens = n.generators();
  out.q_gens = q.generators();
  out.s_order = s.order();
  out.n_order = n.order();
  return out;
}

}  // namespace

StabilizerData stabilizer_data(const FPSet& X) {
  Factorization f = irreducible_factorization(X);
  const int d = X.degree();

  // per-class data and per-slot embeddings rep -> parent support
  std::vector<IrreducibleData> class_data(f.grouped.size());
  std::vector<std::vector<std::vector<int>>> class_embs(f.grouped.size());
  for (std::size_t c = 0; c < f.grouped.size(); ++c)
    class_data[c] = irreducible_stabilizers(f.grouped[c].first);
  for (const auto& slot : f.slots) {
    const FPSet& rep = f.grouped[slot.class_id].first;
    std::optional<std::vector<int>> rho;
    if (class_embs[slot.class_id].empty() && rep == slot.factor) {
      rho = std::vector<int>(rep.degree());
      std::iota(rho->begin(), rho->end(), 1);
    } else {
      rho = find_equivalence(rep, slot.factor);
      if (!rho) throw std::logic_error("slot factor lost its equivalence witness");
    }
    std::vector<int> emb(rep.degree());
    for (int p = 1; p <= rep.degree(); ++p) emb[p - 1] = slot.iso[(*rho)[p - 1] - 1];
    class_embs[slot.class_id].push_back(std::move(emb));
  }

  std::vector<Permutation> s_gens, n_gens, q_gens;
  std::uint64_t s_order = 1, n_order = 1;
  for (std::size_t c = 0; c < f.grouped.size(); ++c) {
    const auto& embs = class_embs[c];
    const auto& data = class_data[c];
    const int mult = static_cast<int>(embs.size());
    const bool singleton = f.grouped[c].first.size() == 1;
    for (const auto& emb : embs) {
      for (const auto& g : data.s_gens) s_gens.push_back(embed_perm(g, emb, d));
      for (const auto& g : data.n_gens) n_gens.push_back(embed_perm(g, emb, d));
      if (!singleton)
        for (const auto& g : data.q_gens) q_gens.push_back(embed_perm(g, emb, d));
    }
    std::vector<Permutation> swaps;
    for (int l = 0; l + 1 < mult; ++l) {
      std::vector<int> im(d);
      std::iota(im.begin(), im.end(), 1);
      for (std::size_t p = 0; p < embs[l].size(); ++p) {
        im[embs[l][p] - 1] = embs[l + 1][p];
        im[embs[l + 1][p] - 1] = embs[l][p];
      }
      swaps.emplace_back(std::move(im));
    }
    for (const auto& s : swaps) {
      n_gens.push_back(s);
      if (singleton) s_gens.push_back(s);
    }
    if (singleton) {
      for (const auto& emb : embs)
        for (const auto& g : data.q_gens) q_gens.push_back(embed_perm(g, emb, d));
      if (mult > 1) {
        PermGroup slot_sylow = sylow2_sym(mult);
        for (const auto& w : slot_sylow.generators()) {
          std::vector<int> im(d);
          std::iota(im.begin(), im.end(), 1);
          for (int l = 1; l <= mult; ++l)
            for (std::size_t p = 0; p < embs[0].size(); ++p)
              im[embs[l - 1][p] - 1] = embs[w(l) - 1][p];
          q_gens.emplace_back(std::move(im));
        }
      }
    }
    std::uint64_t mult_fact = 1;
    for (int i = 2; i <= mult; ++i) mult_fact *= i;
    for (int l = 0; l < mult; ++l) {
      s_order *= data.s_order;
      n_order *= data.n_order;
    }
    n_order *= mult_fact;
    if (singleton) s_order *= mult_fact;
  }

  for (const auto* gens : {&s_gens, &q_gens})
    for (const auto& g : *gens)
      for (const auto& x : X.members())
        if (!(conjugate(x, g) == x))
          throw std::logic_error("assembled stabilizer generator does not centralize X");

  StabilizerData out;
  out.S = PermGroup(d, s_gens);
  out.N = PermGroup(d, n_gens);
  out.Q = PermGroup(d, q_gens);
  out.S_order = s_order;
  out.N_order = n_order;

  // faithful image of N on member indices
  const auto& members = X.members();
  std::vector<Permutation> bar_gens;
  for (const auto& g : n_gens) {
    std::vector<int> im(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
      Permutation moved = conjugate(members[i], g);
      auto it = std::lower_bound(members.begin(), members.end(), moved);
      if (it == members.end() || !(*it == moved))
        throw std::logic_error("set stabilizer generator does not preserve the member set");
      im[i] = static_cast<int>(it - members.begin()) + 1;
    }
    Permutation bar(std::move(im));
    if (!bar.is_identity()) bar_gens.push_back(std::move(bar));
  }
  std::sort(bar_gens.begin(), bar_gens.end());
  bar_gens.erase(std::unique(bar_gens.begin(), bar_gens.end()), bar_gens.end());
  out.Nbar = PermGroup(static_cast<int>(members.size()), bar_gens);
  out.Nbar_order = n_order / s_order;
  return out;
}

bool is_closed(const FPSet& X, int ambient_two_n) {
  if (X.degree() != ambient_two_n)
    throw std::invalid_argument("is_closed: support must be {1..2n}");
  StabilizerData sd = stabilizer_data(X);
  GroupAction xi = enumerate_fpf_involutions(ambient_two_n);
  std::vector<int> fixed = fixed_points(sd.Q, xi);
  std::vector<Permutation> fixed_perms;
  for (int idx : fixed) fixed_perms.push_back(xi.points()[idx]);
  std::sort(fixed_perms.begin(), fixed_perms.end());
  return fixed_perms == X.members();
}

std::string MuLabel::to_string() const {
  return "(" + std::to_string(four_t()) + "," + std::to_string(two_s()) + ")";
}

std::vector<MuLabel> enumerate_mu(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_mu: n >= 1");
  std::vector<MuLabel> out;
  for (int t = 0; 2 * t <= n; ++t) {
    MuLabel mu;
    mu.n = n;
    mu.t = t;
    mu.s = n - 2 * t;
    for (int bit = 0; bit < 30; ++bit)
      if (t & (1 << bit)) mu.I.insert(bit);
    out.push_back(std::move(mu));
  }
  return out;
}

FPSet build_W(const MuLabel& mu) {
  std::optional<FPSet> w;
  for (int i : mu.I) {
    FPSet v = fps_V_i(i);
    w = w ? star(*w, v) : v;
  }
  if (mu.s > 0) {
    std::vector<int> im(2 * mu.s);
    for (int j = 0; j < mu.s; ++j) {
      im[2 * j] = 2 * j + 2;
      im[2 * j + 1] = 2 * j + 1;
    }
    FPSet u_power = FPSet::from_members({Permutation(std::move(im))});
    w = w ? star(*w, u_power) : u_power;
  }
  if (!w) throw std::invalid_argument("build_W: s = 0 and I empty");
  return *w;
}

VertexSpec vertex_spec(const MuLabel& mu) {
  VertexSpec spec;
  spec.mu = mu;
  const int two_n = mu.two_n();
  spec.order = 1;
  std::vector<std::string> factor_names;
  if (mu.s > 0) {
    factor_names.push_back("P(" + std::to_string(2 * mu.s) + ")");
    spec.order *= sylow2_sym_order(2 * mu.s);
  }
  int offset = 0;
  std::vector<Permutation> gens;
  PermGroup klein(4, {parse_permutation("(1 2)(3 4)", 4), parse_permutation("(1 3)(2 4)", 4)});
  for (int i : mu.I) {
    int copies = 1 << i;
    PermGroup wr = wreath_embed(klein, sylow2_sym(copies));
    for (const auto& g : wr.generators()) gens.push_back(shift_perm(g, offset, two_n));
    factor_names.push_back("(H wr P(" + std::to_string(copies) + "))");
    std::uint64_t part = sylow2_sym_order(copies);
    for (int c = 0; c < copies; ++c) part *= 4;
    spec.order *= part;
    offset += 4 * copies;
  }
  if (mu.s > 0) {
    PermGroup u_sylow = sylow2_sym(2 * mu.s);
    for (const auto& g : u_sylow.generators()) gens.push_back(shift_perm(g, offset, two_n));
  }
  spec.generators = std::move(gens);
  // symbolic form with the U part printed first
  if (mu.s > 0) {
    std::string s = factor_names[0];
    for (std::size_t i = 1; i < factor_names.size(); ++i) s += " x " + factor_names[i];
    spec.factors = s;
  } else {
    std::string s;
    for (std::size_t i = 0; i < factor_names.size(); ++i)
      s += (i ? " x " : "") + factor_names[i];
    spec.factors = s;
  }
  return spec;
}

PermGroup VertexSpec::group() const { return PermGroup(mu.two_n(), generators); }

bool kappa_probe(int i) {
  if (i < 0 || i > 1) throw limit_error("kappa_probe supports i <= 1");
  FPSet square = star(fps_V_i(i), fps_V_i(i));
  StabilizerData sd = stabilizer_data(square);
  GroupAction action = GroupAction::natural(sd.Nbar);
  for (const auto& [dim, projective] : projective_profile(action))
    if (projective) return true;
  return false;
}

}  // namespace matchmod
