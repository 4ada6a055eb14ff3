#include "matchmod/lift.hpp"

#include <stdexcept>

namespace matchmod {

ZkMatrix::ZkMatrix(std::size_t rows, std::size_t cols, int k)
    : rows_(rows), cols_(cols), k_(k), v_(rows * cols, 0) {
  if (k < 1 || k > 30) throw std::invalid_argument("precision must be in [1,30]");
  mask_ = (std::uint32_t{1} << k) - 1;
}

ZkMatrix ZkMatrix::identity(std::size_t n, int k) {
  ZkMatrix m(n, n, k);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

ZkMatrix ZkMatrix::operator*(const ZkMatrix& o) const {
  if (cols_ != o.rows_ || k_ != o.k_) throw std::invalid_argument("zk multiply: mismatch");
  ZkMatrix out(rows_, o.cols_, k_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t l = 0; l < cols_; ++l) {
      std::uint64_t a = v_[i * cols_ + l];
      if (!a) continue;
      const std::uint32_t* src = &o.v_[l * o.cols_];
      std::uint32_t* dst = &out.v_[i * o.cols_];
      for (std::size_t j = 0; j < o.cols_; ++j)
        dst[j] = static_cast<std::uint32_t>(dst[j] + a * src[j]) & mask_;
    }
  return out;
}

ZkMatrix ZkMatrix::operator+(const ZkMatrix& o) const {
  ZkMatrix out = *this;
  for (std::size_t i = 0; i < v_.size(); ++i) out.v_[i] = (out.v_[i] + o.v_[i]) & mask_;
  return out;
}

ZkMatrix ZkMatrix::operator-(const ZkMatrix& o) const {
  ZkMatrix out = *this;
  for (std::size_t i = 0; i < v_.size(); ++i) out.v_[i] = (out.v_[i] - o.v_[i]) & mask_;
  return out;
}

ZkMatrix ZkMatrix::scale(std::uint32_t c) const {
  ZkMatrix out = *this;
  for (auto& x : out.v_) x = static_cast<std::uint32_t>(std::uint64_t{x} * c) & mask_;
  return out;
}

bool ZkMatrix::operator==(const ZkMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && k_ == o.k_ && v_ == o.v_;
}

bool ZkMatrix::is_zero() const {
  for (auto x : v_)
    if (x) return false;
  return true;
}

Gf2Matrix ZkMatrix::mod2() const {
  Gf2Matrix g(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (get(i, j) & 1) g.set(i, j, true);
  return g;
}

namespace {

// The orbit matrices span a ring with integer structure constants
// (M_i M_j)[x][y] counts two-step paths, constant on orbits. Working
// on coefficient vectors mod 2^k is the same arithmetic as on the full
// matrices, in a representation of dimension |basis|.
struct OrbitAlgebra {
  int k = 0;
  std::uint32_t mask = 0;
  std::size_t dim = 0;
  std::vector<std::pair<std::size_t, std::size_t>> rep_cells;
  std::vector<std::vector<std::vector<std::uint32_t>>> sc;  // sc[i][j][l]
  std::vector<std::uint32_t> identity;

  OrbitAlgebra(const EndAlgebraBasis& basis, int precision) {
    k = precision;
    mask = (std::uint32_t{1} << k) - 1;
    dim = basis.size();
    for (const auto& mc : basis.orbit_matrices) {
      bool found = false;
      for (std::size_t i = 0; i < mc.rows() && !found; ++i)
        for (std::size_t j = 0; j < mc.cols() && !found; ++j)
          if (mc.get(i, j)) {
            rep_cells.emplace_back(i, j);
            found = true;
          }
      if (!found) throw std::invalid_argument("empty orbit matrix");
    }
    identity.assign(dim, 0);
    for (std::size_t l = 0; l < dim; ++l)
      if (rep_cells[l].first == rep_cells[l].second) identity[l] = 1;
    sc.assign(dim, std::vector<std::vector<std::uint32_t>>(
                       dim, std::vector<std::uint32_t>(dim, 0)));
    std::size_t n = basis.orbit_matrices[0].rows();
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t l = 0; l < dim; ++l) {
          auto [x, y] = rep_cells[l];
          std::uint64_t count = 0;
          for (std::size_t z = 0; z < n; ++z)
            if (basis.orbit_matrices[i].get(x, z) && basis.orbit_matrices[j].get(z, y))
              ++count;
          sc[i][j][l] = static_cast<std::uint32_t>(count) & mask;
        }
  }

  std::vector<std::uint32_t> mult(const std::vector<std::uint32_t>& u,
                                  const std::vector<std::uint32_t>& v) const {
    std::vector<std::uint32_t> w(dim, 0);
    for (std::size_t i = 0; i < dim; ++i) {
      if (!u[i]) continue;
      for (std::size_t j = 0; j < dim; ++j) {
        if (!v[j]) continue;
        std::uint64_t uv = std::uint64_t{u[i]} * v[j];
        for (std::size_t l = 0; l < dim; ++l)
          w[l] = static_cast<std::uint32_t>(w[l] + uv * sc[i][j][l]) & mask;
      }
    }
    return w;
  }

  std::vector<std::uint32_t> newton(const std::vector<std::uint32_t>& u) const {
    auto u2 = mult(u, u);
    auto u3 = mult(u2, u);
    std::vector<std::uint32_t> w(dim);
    for (std::size_t l = 0; l < dim; ++l) w[l] = (3 * u2[l] - 2 * u3[l]) & mask;
    return w;
  }

  bool is_idempotent(const std::vector<std::uint32_t>& u) const {
    return mult(u, u) == u;
  }

  std::vector<std::uint32_t> coefficients_of(const ZkMatrix& e) const {
    std::vector<std::uint32_t> u(dim);
    for (std::size_t l = 0; l < dim; ++l)
      u[l] = e.get(rep_cells[l].first, rep_cells[l].second);
    return u;
  }

  ZkMatrix reconstruct(const std::vector<std::uint32_t>& u,
                       const EndAlgebraBasis& basis) const {
    std::size_t n = basis.orbit_matrices[0].rows();
    ZkMatrix out(n, n, k);
    for (std::size_t l = 0; l < dim; ++l) {
      if (!u[l]) continue;
      const Gf2Matrix& mc = basis.orbit_matrices[l];
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (mc.get(i, j)) out.set(i, j, u[l]);
    }
    return out;
  }
};

}  // namespace

ZkMatrix hensel_lift_idempotent(const Gf2Matrix& e, const EndAlgebraBasis& basis,
                                int precision) {
  if (!((e * e) == e)) throw std::invalid_argument("hensel lift: input is not idempotent");
  // validates that e lies in the orbit span and gives the 0/1 seed
  std::vector<int> coeffs = idempotent_orbit_coefficients(e, basis);
  OrbitAlgebra algebra(basis, precision);
  std::vector<std::uint32_t> u(coeffs.begin(), coeffs.end());
  int steps = 0;
  while ((1 << steps) < precision) ++steps;
  for (int s = 0; s < steps; ++s) u = algebra.newton(u);
  if (!algebra.is_idempotent(u)) throw std::logic_error("hensel lift did not converge");
  return algebra.reconstruct(u, basis);
}

void orthogonalize_idempotents(std::vector<ZkMatrix>& idempotents,
                               const EndAlgebraBasis& basis) {
  if (idempotents.empty()) return;
  const int k = idempotents[0].precision();
  OrbitAlgebra algebra(basis, k);
  std::vector<std::vector<std::uint32_t>> us;
  for (const auto& e : idempotents) {
    auto u = algebra.coefficients_of(e);
    if (!(algebra.reconstruct(u, basis) == e))
      throw std::invalid_argument("idempotent does not lie in the orbit span");
    us.push_back(std::move(u));
  }

  std::vector<std::uint32_t> sum(algebra.dim, 0);
  auto minus = [&](const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> w(algebra.dim);
    for (std::size_t l = 0; l < algebra.dim; ++l) w[l] = (a[l] - b[l]) & algebra.mask;
    return w;
  };
  auto is_zero = [](const std::vector<std::uint32_t>& a) {
    for (auto x : a)
      if (x) return false;
    return true;
  };
  for (std::size_t i = 0; i + 1 < us.size(); ++i) {
    auto& u = us[i];
    auto complement = minus(algebra.identity, sum);
    for (int iter = 0;; ++iter) {
      if (iter == 64) throw std::logic_error("idempotent orthogonalization stalled");
      u = algebra.mult(algebra.mult(complement, u), complement);
      for (int s = 0; s < 8 && !algebra.is_idempotent(u); ++s) u = algebra.newton(u);
      if (!algebra.is_idempotent(u))
        throw std::logic_error("orthogonalization left the idempotent locus");
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        ok = is_zero(algebra.mult(us[j], u)) && is_zero(algebra.mult(u, us[j]));
      if (ok) break;
    }
    for (std::size_t l = 0; l < algebra.dim; ++l) sum[l] = (sum[l] + u[l]) & algebra.mask;
  }
  us.back() = minus(algebra.identity, sum);
  if (!algebra.is_idempotent(us.back()))
    throw std::logic_error("complement idempotent is not idempotent");
  for (std::size_t i = 0; i < us.size(); ++i)
    idempotents[i] = algebra.reconstruct(us[i], basis);
}

std::int64_t lifted_character_value(const ZkMatrix& lifted, const GroupAction& action,
                                    const Permutation& class_rep, int component_dim) {
  const int k = lifted.precision();
  if ((std::int64_t{1} << k) <= 2 * component_dim)
    throw std::invalid_argument("lifting precision too small for unambiguous traces");
  // trace(P_g * E) = sum_x E[g.x][x]
  std::uint64_t trace = 0;
  const std::uint32_t mask = lifted.mask();
  for (int x = 0; x < action.num_points(); ++x)
    trace += lifted.get(static_cast<std::size_t>(action.act(class_rep, x)),
                        static_cast<std::size_t>(x));
  std::int64_t centered = static_cast<std::int64_t>(trace & mask);
  if (centered > (std::int64_t{1} << (k - 1))) centered -= std::int64_t{1} << k;
  return centered;
}

Permutation class_representative(const Partition& rho) {
  int d = rho.weight();
  std::vector<int> im(d);
  int offset = 0;
  for (int part : rho.parts()) {
    for (int i = 0; i < part; ++i) im[offset + i] = offset + (i + 1) % part + 1;
    offset += part;
  }
  return Permutation(std::move(im));
}

}  // namespace matchmod
