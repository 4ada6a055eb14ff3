#include "matchmod/module.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <stdexcept>

namespace matchmod {

PermModule PermModule::from_action(const GroupAction& action) {
  PermModule m;
  m.dimension = action.num_points();
  for (const auto& row : action.table()) {
    Gf2Matrix p(m.dimension, m.dimension);
    for (int x = 0; x < m.dimension; ++x) p.set(x, row[x], true);
    m.generator_matrices.push_back(std::move(p));
  }
  return m;
}

bool PermModule::commutes_with_action(const Gf2Matrix& m) const {
  for (const auto& g : generator_matrices)
    if (!(g * m == m * g)) return false;
  return true;
}

std::vector<Gf2Matrix> restrict_module(const GroupAction& action, const PermGroup& subgroup) {
  std::vector<Gf2Matrix> mats;
  int n = action.num_points();
  for (const auto& g : subgroup.generators()) {
    Gf2Matrix p(n, n);
    for (int x = 0; x < n; ++x) p.set(x, action.act(g, x), true);
    mats.push_back(std::move(p));
  }
  if (mats.empty()) mats.push_back(Gf2Matrix::identity(n));
  return mats;
}

EndAlgebraBasis end_algebra_basis(
    const GroupAction& action,
    const std::function<std::string(int, int)>& pair_invariant) {
  int n = action.num_points();
  std::map<std::string, Gf2Matrix> mats;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      std::string label = pair_invariant(x, y);
      auto it = mats.find(label);
      if (it == mats.end()) it = mats.emplace(label, Gf2Matrix(n, n)).first;
      it->second.set(x, y, true);
    }

  // G-stability of the invariant, sampled deterministically
  std::mt19937_64 rng(0x5eed);
  const auto& table = action.table();
  if (!table.empty()) {
    for (int trial = 0; trial < 64; ++trial) {
      int x = static_cast<int>(rng() % n), y = static_cast<int>(rng() % n);
      const auto& row = table[rng() % table.size()];
      if (pair_invariant(x, y) != pair_invariant(row[x], row[y]))
        throw std::invalid_argument("pair invariant is not G-stable");
    }
  }

  EndAlgebraBasis basis;
  for (auto& [label, mat] : mats) {
    basis.orbit_labels.push_back(label);
    basis.orbit_matrices.push_back(std::move(mat));
  }
  return basis;
}

EndAlgebraBasis end_algebra_basis_from_orbits(const GroupAction& action) {
  int n = action.num_points();
  const auto& table = action.table();
  std::vector<int> orbit(static_cast<std::size_t>(n) * n, -1);
  int next = 0;
  for (int start = 0; start < n * n; ++start) {
    if (orbit[start] >= 0) continue;
    orbit[start] = next;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      int cur = queue.front();
      queue.pop_front();
      int x = cur / n, y = cur % n;
      for (const auto& row : table) {
        int img = row[x] * n + row[y];
        if (orbit[img] < 0) {
          orbit[img] = next;
          queue.push_back(img);
        }
      }
    }
    ++next;
  }
  EndAlgebraBasis basis;
  for (int c = 0; c < next; ++c) {
    basis.orbit_matrices.emplace_back(n, n);
    basis.orbit_labels.push_back("orbit" + std::to_string(c));
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      basis.orbit_matrices[orbit[x * n + y]].set(x, y, true);
  return basis;
}

namespace {

// Stable power of theta: square until the rank stops dropping.
Gf2Matrix stable_power(const Gf2Matrix& theta) {
  Gf2Matrix f = theta;
  std::size_t r = f.rank();
  for (;;) {
    Gf2Matrix f2 = f * f;
    std::size_t r2 = f2.rank();
    if (r2 == r) return f;
    f = std::move(f2);
    r = r2;
  }
}

// Projection onto im(f) along ker(f) for f with stable rank.
Gf2Matrix fitting_projection(const Gf2Matrix& f) {
  Gf2Matrix im = f.row_space_basis();
  Gf2Matrix ker = f.left_nullspace();
  Gf2Matrix t = im.stack(ker);
  auto tinv = t.inverse();
  if (!tinv) throw std::logic_error("fitting: im + ker is not a direct sum");
  Gf2Matrix im_padded(t.rows(), t.cols());
  for (std::size_t i = 0; i < im.rows(); ++i) im_padded.xor_row(i, im, i);
  return (*tinv) * im_padded;
}

}  // namespace

std::optional<std::pair<Gf2Matrix, Gf2Matrix>> fitting_split(const PermModule& module,
                                                             const Gf2Matrix& theta) {
  if (!module.commutes_with_action(theta))
    throw std::invalid_argument("fitting_split: theta does not commute with the action");
  Gf2Matrix f = stable_power(theta);
  std::size_t r = f.rank();
  if (r == 0 || r == static_cast<std::size_t>(module.dimension)) return std::nullopt;
  return std::make_pair(f.left_nullspace(), f.row_space_basis());
}

std::vector<Component> decompose(const PermModule& module, const EndAlgebraBasis& basis) {
  if (basis.size() > 10) throw limit_error("endomorphism algebra span too large to enumerate");
  const std::size_t n = static_cast<std::size_t>(module.dimension);
  const std::size_t span = std::size_t{1} << basis.size();

  std::vector<Gf2Matrix> finished;
  std::deque<Gf2Matrix> pending{Gf2Matrix::identity(n)};

  while (!pending.empty()) {
    Gf2Matrix e = std::move(pending.front());
    pending.pop_front();
    std::size_t rank_e = e.rank();

    // left products e*M_c, reused across the span scan
    std::vector<Gf2Matrix> left;
    left.reserve(basis.size());
    for (const auto& mc : basis.orbit_matrices) left.push_back(e * mc);

    bool split = false;
    for (std::size_t mask = 1; mask < span && !split; ++mask) {
      Gf2Matrix ea(n, n);
      for (std::size_t c = 0; c < basis.size(); ++c)
        if (mask & (std::size_t{1} << c)) ea = ea + left[c];
      Gf2Matrix b = ea * e;
      if (b.is_zero()) continue;
      std::size_t rank_b = b.rank();
      if (rank_b == rank_e) continue;  // unit of e End e
      Gf2Matrix f = stable_power(b);
      if (f.rank() == 0) continue;  // nilpotent
      // b is neither a unit nor nilpotent: refine e through the
      // Fitting projection of f
      Gf2Matrix pi = fitting_projection(f);
      pending.push_back(pi);
      pending.push_back(e + pi);  // e - pi over GF(2)
      split = true;
    }
    if (!split) finished.push_back(std::move(e));
  }

  std::vector<Component> out;
  for (auto& e : finished) {
    Component c;
    c.basis = e.row_space_basis();
    c.dimension = static_cast<int>(c.basis.rows());
    c.idempotent = std::move(e);
    out.push_back(std::move(c));
  }
  std::stable_sort(out.begin(), out.end(), [](const Component& a, const Component& b) {
    return a.dimension > b.dimension;
  });
  return out;
}

std::vector<int> idempotent_orbit_coefficients(const Gf2Matrix& e,
                                               const EndAlgebraBasis& basis) {
  std::vector<int> coeffs;
  Gf2Matrix recon(e.rows(), e.cols());
  for (const auto& mc : basis.orbit_matrices) {
    // sample one cell of the orbit
    bool coeff = false;
    bool sampled = false;
    for (std::size_t i = 0; i < mc.rows() && !sampled; ++i)
      for (std::size_t j = 0; j < mc.cols() && !sampled; ++j)
        if (mc.get(i, j)) {
          coeff = e.get(i, j);
          sampled = true;
        }
    coeffs.push_back(coeff ? 1 : 0);
    if (coeff) recon = recon + mc;
  }
  if (!(recon == e))
    throw std::invalid_argument("idempotent does not lie in the orbit span");
  return coeffs;
}

Gf2Matrix fixed_subspace(const Gf2Matrix& subspace_basis,
                         const std::vector<Gf2Matrix>& generator_matrices) {
  std::size_t r = subspace_basis.rows();
  if (r == 0) return subspace_basis;
  std::optional<Gf2Matrix> wide;
  for (const auto& p : generator_matrices) {
    Gf2Matrix moved = subspace_basis * p + subspace_basis;
    wide = wide ? wide->augment(moved) : moved;
  }
  if (!wide) return subspace_basis;
  Gf2Matrix coeffs = wide->left_nullspace();
  return (coeffs * subspace_basis).row_space_basis();
}

bool is_projective_over_2group(const Gf2Matrix& subspace_basis,
                               const std::vector<Gf2Matrix>& p_generator_matrices,
                               std::uint64_t p_order) {
  std::size_t dim = subspace_basis.rows();
  if (dim == 0) return false;
  if (dim % p_order != 0) return false;
  std::optional<Gf2Matrix> rad;
  for (const auto& p : p_generator_matrices) {
    Gf2Matrix rows = subspace_basis * p + subspace_basis;
    rad = rad ? rad->stack(rows) : rows;
  }
  std::size_t rad_dim = rad ? rad->rank() : 0;
  return dim == p_order * (dim - rad_dim);
}

namespace {

// Index-2 subgroups of a small 2-group via its Frattini quotient,
// together with one coset representative outside each.
std::vector<std::pair<std::vector<Permutation>, Permutation>> maximal_subgroups(
    const PermGroup& Q) {
  const auto& els = Q.elements();
  int degree = Q.degree();
  if (els.size() == 1) return {};
  // Frattini subgroup of a 2-group: generated by squares and commutators
  std::vector<Permutation> frattini_gens{Permutation::identity(degree)};
  for (const auto& a : els) frattini_gens.push_back(compose(a, a));
  for (const auto& a : els)
    for (const auto& b : els)
      frattini_gens.push_back(
          compose(compose(a.inverse(), b.inverse()), compose(a, b)));
  auto phi = group_closure(frattini_gens);
  std::sort(phi.begin(), phi.end());

  // elementary abelian quotient basis
  std::vector<Permutation> basis;
  std::vector<Permutation> reachable = phi;  // closure of phi and chosen basis
  std::sort(reachable.begin(), reachable.end());
  for (const auto& e : els) {
    if (std::binary_search(reachable.begin(), reachable.end(), e)) continue;
    basis.push_back(e);
    std::vector<Permutation> gens = basis;
    for (const auto& f : phi) gens.push_back(f);
    reachable = group_closure(gens);
    std::sort(reachable.begin(), reachable.end());
    if (reachable.size() == els.size()) break;
  }
  int r = static_cast<int>(basis.size());

  // coordinates of each element in the quotient, by matching against
  // all 2^r basis products
  std::map<Permutation, unsigned> coord;
  for (unsigned x = 0; x < (1u << r); ++x) {
    Permutation prod = Permutation::identity(degree);
    for (int i = 0; i < r; ++i)
      if (x & (1u << i)) prod = compose(prod, basis[i]);
    for (const auto& f : phi) coord[compose(prod, f)] = x;
  }

  std::vector<std::pair<std::vector<Permutation>, Permutation>> out;
  for (unsigned functional = 1; functional < (1u << r); ++functional) {
    std::vector<Permutation> sub;
    std::optional<Permutation> rep;
    for (const auto& e : els) {
      if (__builtin_popcount(coord.at(e) & functional) % 2 == 0)
        sub.push_back(e);
      else if (!rep)
        rep = e;
    }
    out.emplace_back(std::move(sub), *rep);
  }
  return out;
}

}  // namespace

int brauer_quotient_dim_traces(const Gf2Matrix& subspace_basis, const PermGroup& Q,
                               const GroupAction& ambient) {
  if (Q.order() > 32) throw limit_error("trace-route Brauer quotient capped at |Q| = 32");
  Gf2Matrix mq = fixed_subspace(subspace_basis, restrict_module(ambient, Q));
  std::optional<Gf2Matrix> traces;
  for (const auto& [sub_elements, rep] : maximal_subgroups(Q)) {
    PermGroup r_group(Q.degree(), reduce_generators(sub_elements, Q.degree()));
    Gf2Matrix mr = fixed_subspace(subspace_basis, restrict_module(ambient, r_group));
    // index-2 relative trace: m + m*rep
    Gf2Matrix rep_mat = restrict_module(ambient, PermGroup(Q.degree(), {rep}))[0];
    Gf2Matrix rows = mr * rep_mat + mr;
    traces = traces ? traces->stack(rows) : rows;
  }
  std::size_t trace_rank = 0;
  if (traces) {
    trace_rank = traces->rank();
    if (mq.stack(*traces).rank() != mq.rows())
      throw std::logic_error("trace image escapes the fixed subspace");
  }
  return static_cast<int>(mq.rows() - trace_rank);
}

int brauer_quotient_dim_fixed(const Gf2Matrix& subspace_basis, const PermGroup& Q,
                              const GroupAction& ambient) {
  Gf2Matrix mq = fixed_subspace(subspace_basis, restrict_module(ambient, Q));
  std::vector<int> fixed_cols = fixed_points(Q, ambient);
  if (fixed_cols.empty()) return 0;
  return static_cast<int>(mq.select_columns(fixed_cols).rank());
}

BrauerQuotient brauer_quotient(const Gf2Matrix& subspace_basis, const PermGroup& Q,
                               const GroupAction& ambient,
                               const std::vector<Permutation>& normalizer_gens) {
  BrauerQuotient out;
  Gf2Matrix mq = fixed_subspace(subspace_basis, restrict_module(ambient, Q));
  std::vector<int> fixed_cols = fixed_points(Q, ambient);
  if (fixed_cols.empty()) {
    out.basis = Gf2Matrix(0, 0);
    return out;
  }
  out.basis = mq.select_columns(fixed_cols).row_space_basis();
  out.dimension = static_cast<int>(out.basis.rows());

  // pivot columns of the rref basis, for coordinate extraction
  std::vector<std::size_t> pivots;
  for (std::size_t i = 0; i < out.basis.rows(); ++i)
    for (std::size_t j = 0; j < out.basis.cols(); ++j)
      if (out.basis.get(i, j)) {
        pivots.push_back(j);
        break;
      }

  for (const auto& g : normalizer_gens) {
    // g must permute the fixed points
    Gf2Matrix perm(fixed_cols.size(), fixed_cols.size());
    for (std::size_t i = 0; i < fixed_cols.size(); ++i) {
      int image = ambient.act(g, fixed_cols[i]);
      auto it = std::lower_bound(fixed_cols.begin(), fixed_cols.end(), image);
      if (it == fixed_cols.end() || *it != image)
        throw std::invalid_argument("generator does not normalize the fixed point set");
      perm.set(i, static_cast<std::size_t>(it - fixed_cols.begin()), true);
    }
    Gf2Matrix moved = out.basis * perm;
    Gf2Matrix induced(out.basis.rows(), out.basis.rows());
    for (std::size_t i = 0; i < moved.rows(); ++i)
      for (std::size_t r = 0; r < pivots.size(); ++r)
        if (moved.get(i, pivots[r])) {
          induced.set(i, r, true);
          moved.xor_row(i, out.basis, r);
        }
    for (std::size_t i = 0; i < moved.rows(); ++i)
      if (!moved.row_is_zero(i))
        throw std::invalid_argument("generator does not stabilize the quotient");
    out.normalizer_action.push_back(std::move(induced));
  }
  return out;
}

std::vector<std::pair<int, bool>> projective_profile(const GroupAction& action) {
  PermModule module = PermModule::from_action(action);
  EndAlgebraBasis basis = end_algebra_basis_from_orbits(action);
  std::vector<Component> comps = decompose(module, basis);

  const auto& els = action.group().elements();
  PermGroup sylow = sylow2_of(els, action.group().degree());
  std::vector<Gf2Matrix> mats = restrict_module(action, sylow);
  std::uint64_t order = sylow.order();

  std::vector<std::pair<int, bool>> out;
  for (const auto& c : comps)
    out.emplace_back(c.dimension, is_projective_over_2group(c.basis, mats, order));
  return out;
}

}  // namespace matchmod
