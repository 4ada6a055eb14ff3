#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <set>

#include "doctest.h"
#include "matchmod/fps.hpp"
#include "matchmod/gf2.hpp"
#include "matchmod/lift.hpp"
#include "matchmod/module.hpp"

using namespace matchmod;

namespace {

Permutation p(const std::string& s, int d) { return parse_permutation(s, d); }

Gf2Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  Gf2Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (rng() & 1) m.set(i, j, true);
  return m;
}

// orbit count of G on Omega x Omega by union-find over generator moves
int brute_pair_orbits(const GroupAction& action) {
  int n = action.num_points();
  std::vector<int> parent(n * n);
  for (int i = 0; i < n * n; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (const auto& row : action.table()) {
        int a = find(x * n + y), b = find(row[x] * n + row[y]);
        if (a != b) parent[a] = b;
      }
  std::set<int> roots;
  for (int i = 0; i < n * n; ++i) roots.insert(find(i));
  return static_cast<int>(roots.size());
}

EndAlgebraBasis xi_basis(const GroupAction& xi) {
  const auto& pts = xi.points();
  return end_algebra_basis(xi, [&pts](int x, int y) {
    return cycle_type(compose(pts[x], pts[y])).to_string();
  });
}

}  // namespace

TEST_CASE("rank examples and elimination properties") {
  CHECK(Gf2Matrix::identity(3).rank() == 3);
  CHECK(Gf2Matrix(4, 5).rank() == 0);
  CHECK(Gf2Matrix::ones(3, 3).rank() == 1);

  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 40; ++trial) {
    Gf2Matrix a = random_matrix(rng, 1 + rng() % 30, 1 + rng() % 30);
    CHECK(a.rank() == a.rref().rank());
    CHECK(a.rref().rref() == a.rref());
    CHECK(a.rank() == a.transpose().rank());
  }
}

TEST_CASE("multiplication, inverse and nullspace") {
  std::mt19937_64 rng(321);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t n = 1 + rng() % 20;
    Gf2Matrix a = random_matrix(rng, n, n), b = random_matrix(rng, n, n),
              c = random_matrix(rng, n, n);
    CHECK((a * b) * c == a * (b * c));
    auto inv = a.inverse();
    if (inv) {
      CHECK(a.rank() == n);
      CHECK(*inv * a == Gf2Matrix::identity(n));
      CHECK(a * *inv == Gf2Matrix::identity(n));
    } else {
      CHECK(a.rank() < n);
    }
    Gf2Matrix ns = a.left_nullspace();
    CHECK(ns.rows() == n - a.rank());
    if (ns.rows() > 0) CHECK((ns * a).is_zero());
  }
}

TEST_CASE("orbit basis of End(k Xi)") {
  GroupAction xi4 = enumerate_fpf_involutions(4);
  EndAlgebraBasis b4 = xi_basis(xi4);
  REQUIRE(b4.size() == 2);
  bool has_identity = false;
  for (const auto& m : b4.orbit_matrices)
    if (m == Gf2Matrix::identity(3)) has_identity = true;
  CHECK(has_identity);

  GroupAction xi8 = enumerate_fpf_involutions(8);
  EndAlgebraBasis b8 = xi_basis(xi8);
  CHECK(b8.size() == 5);  // p(4)
  CHECK(b8.orbit_matrices[0].rows() == 105);

  // orbit matrices partition Omega x Omega and commute with the action
  for (int two_n : {4, 6, 8}) {
    GroupAction xi = enumerate_fpf_involutions(two_n);
    EndAlgebraBasis basis = xi_basis(xi);
    CHECK(static_cast<int>(basis.size()) == brute_pair_orbits(xi));
    Gf2Matrix sum(xi.num_points(), xi.num_points());
    for (const auto& m : basis.orbit_matrices) sum = sum + m;
    CHECK(sum == Gf2Matrix::ones(xi.num_points(), xi.num_points()));
    PermModule mod = PermModule::from_action(xi);
    for (const auto& m : basis.orbit_matrices) CHECK(mod.commutes_with_action(m));
  }

  // a non-invariant labeling is rejected
  CHECK_THROWS_AS(end_algebra_basis(xi4, [](int x, int y) {
                    return std::to_string(x * 3 + y);
                  }),
                  std::invalid_argument);
}

TEST_CASE("generator matrices satisfy sampled relations") {
  GroupAction xi6 = enumerate_fpf_involutions(6);
  PermModule mod = PermModule::from_action(xi6);
  const auto& gens = xi6.group().generators();
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t a = rng() % gens.size(), b = rng() % gens.size();
    Permutation word = compose(gens[a], gens[b]);
    Gf2Matrix direct(xi6.num_points(), xi6.num_points());
    for (int x = 0; x < xi6.num_points(); ++x) direct.set(x, xi6.act(word, x), true);
    CHECK(mod.generator_matrices[a] * mod.generator_matrices[b] == direct);
  }
}

TEST_CASE("final summands have local endomorphism algebras") {
  GroupAction xi6 = enumerate_fpf_involutions(6);
  PermModule mod = PermModule::from_action(xi6);
  EndAlgebraBasis basis = xi_basis(xi6);
  for (const auto& comp : decompose(mod, basis)) {
    std::size_t rank_e = comp.idempotent.rank();
    for (unsigned mask = 1; mask < (1u << basis.size()); ++mask) {
      Gf2Matrix a(15, 15);
      for (std::size_t c = 0; c < basis.size(); ++c)
        if (mask & (1u << c)) a = a + basis.orbit_matrices[c];
      Gf2Matrix b = comp.idempotent * a * comp.idempotent;
      bool invertible = b.rank() == rank_e;
      Gf2Matrix power = b;
      for (int doubling = 0; doubling < 5; ++doubling) power = power * power;
      bool nilpotent = power.is_zero();
      CHECK((invertible || nilpotent));
    }
  }
}

TEST_CASE("span enumeration bound is enforced") {
  // a trivial group on 4 points has 16 pair orbits, past the 2^10 span cap
  GroupAction free4 = GroupAction::natural(PermGroup::trivial(4));
  EndAlgebraBasis basis = end_algebra_basis_from_orbits(free4);
  CHECK(basis.size() == 16);
  CHECK_THROWS_AS(decompose(PermModule::from_action(free4), basis), limit_error);
}

TEST_CASE("fitting splits") {
  GroupAction xi4 = enumerate_fpf_involutions(4);
  PermModule mod = PermModule::from_action(xi4);

  CHECK_FALSE(fitting_split(mod, Gf2Matrix::identity(3)).has_value());

  auto split = fitting_split(mod, Gf2Matrix::ones(3, 3));
  REQUIRE(split.has_value());
  CHECK(split->first.rows() + split->second.rows() == 3);
  CHECK(split->second.rows() == 1);

  // a nilpotent commuting map on the regular C2-module
  GroupAction c2 = GroupAction::natural(PermGroup(2, {p("(1 2)", 2)}));
  PermModule reg = PermModule::from_action(c2);
  CHECK_FALSE(fitting_split(reg, Gf2Matrix::ones(2, 2)).has_value());

  CHECK_THROWS_AS(fitting_split(mod, [&] {
                    Gf2Matrix bad(3, 3);
                    bad.set(0, 1, true);
                    return bad;
                  }()),
                  std::invalid_argument);
}

TEST_CASE("decomposition of k Xi_4, k Xi_6, k Xi_8") {
  auto dims_of = [](int n) {
    GroupAction xi = enumerate_fpf_involutions(2 * n);
    auto comps = decompose(PermModule::from_action(xi), xi_basis(xi));
    std::vector<int> dims;
    for (const auto& c : comps) dims.push_back(c.dimension);
    std::sort(dims.rbegin(), dims.rend());
    return dims;
  };
  CHECK(dims_of(2) == std::vector<int>{2, 1});
  CHECK(dims_of(3) == std::vector<int>{14, 1});
  CHECK(dims_of(4) == std::vector<int>{76, 28, 1});

  // hook-length oracle for the same dimensions
  auto phi_dim = [](int n, int two_s) {
    std::int64_t total = 0;
    for (const auto& lambda : partitions(2 * n))
      if (lambda.odd_parts() == 0 && lambda.conjugate().odd_parts() == two_s)
        total += hook_length_dimension(lambda);
    return total;
  };
  CHECK(phi_dim(3, 2) == 14);
  CHECK(phi_dim(4, 4) == 76);
  CHECK(phi_dim(4, 0) == 28);

  // idempotent algebra laws
  GroupAction xi6 = enumerate_fpf_involutions(6);
  auto comps = decompose(PermModule::from_action(xi6), xi_basis(xi6));
  Gf2Matrix sum(15, 15);
  int dim_total = 0;
  for (const auto& c : comps) {
    CHECK(c.idempotent * c.idempotent == c.idempotent);
    sum = sum + c.idempotent;
    dim_total += c.dimension;
  }
  CHECK(sum == Gf2Matrix::identity(15));
  CHECK(dim_total == 15);
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (std::size_t j = 0; j < comps.size(); ++j)
      if (i != j) CHECK((comps[i].idempotent * comps[j].idempotent).is_zero());
}

TEST_CASE("component count matches the idempotent count of the commutant") {
  // the commutant of k Xi_{2n} is commutative, so it contains exactly
  // 2^(number of indecomposable summands) idempotents; counting them by
  // enumeration is independent of the splitting recursion
  for (int n = 2; n <= 4; ++n) {
    GroupAction xi = enumerate_fpf_involutions(2 * n);
    EndAlgebraBasis basis = xi_basis(xi);
    std::size_t dim = static_cast<std::size_t>(xi.num_points());
    std::size_t idempotents = 0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << basis.size()); ++mask) {
      Gf2Matrix a(dim, dim);
      for (std::size_t c = 0; c < basis.size(); ++c)
        if (mask & (std::size_t{1} << c)) a = a + basis.orbit_matrices[c];
      if (a * a == a) ++idempotents;
    }
    auto comps = decompose(PermModule::from_action(xi), basis);
    CHECK(idempotents == (std::size_t{1} << comps.size()));
  }
}

TEST_CASE("module restriction") {
  GroupAction xi4 = enumerate_fpf_involutions(4);
  auto to_trivial = restrict_module(xi4, PermGroup::trivial(4));
  REQUIRE(to_trivial.size() == 1);
  CHECK(to_trivial[0] == Gf2Matrix::identity(3));
  auto to_self = restrict_module(xi4, xi4.group());
  PermModule mod = PermModule::from_action(xi4);
  for (std::size_t i = 0; i < to_self.size(); ++i)
    CHECK(to_self[i] == mod.generator_matrices[i]);
  CHECK(to_self[0].rows() == 3);
}

TEST_CASE("projectivity over 2-groups") {
  // regular module of C2 is free
  GroupAction c2 = GroupAction::natural(PermGroup(2, {p("(1 2)", 2)}));
  PermModule reg = PermModule::from_action(c2);
  CHECK(is_projective_over_2group(Gf2Matrix::identity(2), reg.generator_matrices, 2));
  // trivial module of C2 is not
  Gf2Matrix triv(1, 2);
  triv.set(0, 0, true);
  triv.set(0, 1, true);
  CHECK_FALSE(is_projective_over_2group(triv, reg.generator_matrices, 2));
  // E over the order-2 image of Sym(4) on Xi_4
  GroupAction xi4 = enumerate_fpf_involutions(4);
  auto comps = decompose(PermModule::from_action(xi4), xi_basis(xi4));
  const Component* e_comp = nullptr;
  for (const auto& c : comps)
    if (c.dimension == 2) e_comp = &c;
  REQUIRE(e_comp != nullptr);
  auto mats = restrict_module(xi4, PermGroup(4, {p("(3 4)", 4)}));
  CHECK(is_projective_over_2group(e_comp->basis, mats, 2));
}

TEST_CASE("brauer quotients on k Xi_4") {
  GroupAction xi4 = enumerate_fpf_involutions(4);
  auto comps = decompose(PermModule::from_action(xi4), xi_basis(xi4));
  const Component* triv = nullptr;
  const Component* e_comp = nullptr;
  for (const auto& c : comps) (c.dimension == 1 ? triv : e_comp) = &c;
  REQUIRE(triv);
  REQUIRE(e_comp);

  PermGroup klein(4, {p("(1 2)(3 4)", 4), p("(1 3)(2 4)", 4)});
  PermGroup d8 = sylow2_sym(4);

  CHECK(brauer_quotient_dim_fixed(triv->basis, d8, xi4) == 1);
  CHECK(brauer_quotient_dim_fixed(e_comp->basis, klein, xi4) == 2);
  CHECK(brauer_quotient_dim_fixed(e_comp->basis, d8, xi4) == 0);

  CHECK(brauer_quotient_dim_traces(triv->basis, d8, xi4) == 1);
  CHECK(brauer_quotient_dim_traces(e_comp->basis, klein, xi4) == 2);
  CHECK(brauer_quotient_dim_traces(e_comp->basis, d8, xi4) == 0);
}

TEST_CASE("brauer quotient with normalizer action") {
  GroupAction xi4 = enumerate_fpf_involutions(4);
  auto comps = decompose(PermModule::from_action(xi4), xi_basis(xi4));
  const Component* triv = nullptr;
  const Component* e_comp = nullptr;
  for (const auto& c : comps) (c.dimension == 1 ? triv : e_comp) = &c;

  PermGroup klein(4, {p("(1 2)(3 4)", 4), p("(1 3)(2 4)", 4)});
  // the Klein group is normal, so any Sym(4) generators normalize it
  std::vector<Permutation> norm{p("(1 2)", 4), p("(1 2 3 4)", 4)};
  BrauerQuotient bq = brauer_quotient(e_comp->basis, klein, xi4, norm);
  CHECK(bq.dimension == 2);
  REQUIRE(bq.normalizer_action.size() == 2);
  // the induced action on the 2-dimensional quotient generates the
  // order-6 quotient group Sym(4)/H
  auto closure_size = [&] {
    std::vector<Gf2Matrix> seen{Gf2Matrix::identity(2)};
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t i = 0; i < seen.size(); ++i)
        for (const auto& g : bq.normalizer_action) {
          Gf2Matrix next = seen[i] * g;
          if (std::find(seen.begin(), seen.end(), next) == seen.end()) {
            seen.push_back(next);
            grew = true;
          }
        }
    }
    return seen.size();
  };
  CHECK(closure_size() == 6);

  PermGroup d8 = sylow2_sym(4);
  BrauerQuotient bq_triv = brauer_quotient(triv->basis, d8, xi4, {});
  CHECK(bq_triv.dimension == 1);
  CHECK(brauer_quotient(e_comp->basis, d8, xi4, {}).dimension == 0);
}

TEST_CASE("trace route agrees with the fixed-point route") {
  for (int n : {2, 3}) {
    GroupAction xi = enumerate_fpf_involutions(2 * n);
    auto comps = decompose(PermModule::from_action(xi), xi_basis(xi));
    for (const auto& mu : enumerate_mu(n)) {
      VertexSpec spec = vertex_spec(mu);
      if (spec.order > 32) continue;
      PermGroup q = spec.group();
      for (const auto& c : comps)
        CHECK(brauer_quotient_dim_traces(c.basis, q, xi) ==
              brauer_quotient_dim_fixed(c.basis, q, xi));
    }
  }
}

TEST_CASE("hensel lifting of idempotents") {
  GroupAction xi4 = enumerate_fpf_involutions(4);
  EndAlgebraBasis basis = xi_basis(xi4);

  ZkMatrix id_lift = hensel_lift_idempotent(Gf2Matrix::identity(3), basis, 16);
  CHECK(id_lift == ZkMatrix::identity(3, 16));

  auto comps = decompose(PermModule::from_action(xi4), basis);
  std::vector<ZkMatrix> lifted;
  for (const auto& c : comps) {
    ZkMatrix e = hensel_lift_idempotent(c.idempotent, basis, 16);
    CHECK(e * e == e);
    CHECK(e.mod2() == c.idempotent);
    lifted.push_back(std::move(e));
  }
  orthogonalize_idempotents(lifted, basis);
  ZkMatrix sum(3, 3, 16);
  for (const auto& e : lifted) {
    CHECK(e * e == e);
    sum = sum + e;
  }
  CHECK(sum == ZkMatrix::identity(3, 16));
  CHECK((lifted[0] * lifted[1]).is_zero());
  CHECK((lifted[1] * lifted[0]).is_zero());

  Gf2Matrix not_idem(3, 3);
  not_idem.set(0, 1, true);
  CHECK_THROWS_AS(hensel_lift_idempotent(not_idem, basis, 16), std::invalid_argument);
}

TEST_CASE("lifted characters of k Xi_4") {
  GroupAction xi4 = enumerate_fpf_involutions(4);
  EndAlgebraBasis basis = xi_basis(xi4);
  auto comps = decompose(PermModule::from_action(xi4), basis);
  std::vector<ZkMatrix> lifted;
  for (const auto& c : comps) lifted.push_back(hensel_lift_idempotent(c.idempotent, basis, 16));
  orthogonalize_idempotents(lifted, basis);

  std::map<Partition, std::int64_t> expected_e{
      {Partition({1, 1, 1, 1}), 2}, {Partition({2, 1, 1}), 0}, {Partition({2, 2}), 2},
      {Partition({3, 1}), -1},      {Partition({4}), 0}};
  for (std::size_t i = 0; i < comps.size(); ++i) {
    for (const auto& rho : partitions(4)) {
      std::int64_t v = lifted_character_value(lifted[i], xi4, class_representative(rho),
                                              comps[i].dimension);
      if (comps[i].dimension == 1) CHECK(v == 1);
      if (comps[i].dimension == 2) CHECK(v == expected_e[rho]);
    }
  }
  // character values sum to the permutation character
  for (const auto& rho : partitions(4)) {
    std::int64_t total = 0;
    Permutation g = class_representative(rho);
    for (std::size_t i = 0; i < comps.size(); ++i)
      total += lifted_character_value(lifted[i], xi4, g, comps[i].dimension);
    std::int64_t fixed = 0;
    for (const auto& x : xi4.points())
      if (conjugate(x, g) == x) ++fixed;
    CHECK(total == fixed);
  }

  CHECK_THROWS_AS(lifted_character_value(lifted[0], xi4, Permutation::identity(4), 40000),
                  std::invalid_argument);
}
