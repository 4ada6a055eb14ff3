#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "matchmod/group.hpp"
#include "matchmod/perm.hpp"

using namespace matchmod;

namespace {

Permutation p(const std::string& s, int d) { return parse_permutation(s, d); }

Permutation random_perm(std::mt19937_64& rng, int d) {
  std::vector<int> im(d);
  for (int i = 0; i < d; ++i) im[i] = i + 1;
  for (int i = d - 1; i > 0; --i)
    std::swap(im[i], im[rng() % (i + 1)]);
  return Permutation(std::move(im));
}

// independent oracle: (2n-1)!! by the product formula
std::uint64_t double_factorial(int two_n) {
  std::uint64_t v = 1;
  for (int k = two_n - 1; k >= 1; k -= 2) v *= k;
  return v;
}

// independent oracle: 2-adic valuation of m!
int two_valuation_factorial(int m) {
  int v = 0;
  for (int i = 2; i <= m; ++i)
    for (int x = i; x % 2 == 0; x /= 2) ++v;
  return v;
}

}  // namespace

TEST_CASE("compose basics") {
  CHECK(compose(p("(1 2)", 2), p("(1 2)", 2)).is_identity());
  CHECK(compose(p("(1 2 3)", 3), p("(1 2)", 3)) == p("(1 3)", 3));
  Permutation q = p("(1 4)(2 3)", 4);
  CHECK(compose(q, Permutation::identity(4)) == q);
  CHECK_THROWS_AS(compose(p("(1 2)", 2), p("(1 2)", 3)), std::invalid_argument);
}

TEST_CASE("composition laws on random triples") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    int d = 2 + rng() % 8;
    Permutation a = random_perm(rng, d), b = random_perm(rng, d), c = random_perm(rng, d);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    CHECK(compose(a, a.inverse()).is_identity());
  }
}

TEST_CASE("conjugation relabels cycles") {
  CHECK(conjugate(p("(1 2)", 2), p("(1 2)", 2)) == p("(1 2)", 2));
  CHECK(conjugate(p("(1 2)(3 4)", 4), p("(2 3)", 4)) == p("(1 3)(2 4)", 4));
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    int d = 2 + rng() % 8;
    Permutation x = random_perm(rng, d), g = random_perm(rng, d), h = random_perm(rng, d);
    CHECK(cycle_type(conjugate(x, g)) == cycle_type(x));
    CHECK(conjugate(x, compose(g, h)) == conjugate(conjugate(x, g), h));
  }
}

TEST_CASE("cycle type and sign") {
  CHECK(cycle_type(Permutation::identity(4)) == Partition({1, 1, 1, 1}));
  CHECK(cycle_type(p("(1 2)(3 4)", 4)) == Partition({2, 2}));
  CHECK(cycle_type(p("(1 2 3)(4 5)", 6)) == Partition({3, 2, 1}));
  CHECK(sign(Permutation::identity(3)) == 1);
  CHECK(sign(p("(1 2)", 2)) == -1);
  CHECK(sign(p("(1 2)(3 4)", 4)) == 1);
}

TEST_CASE("cycle notation round trip") {
  for (const char* s : {"()", "(1 2)", "(1 2)(3 4)", "(1 3 5)(2 4)"}) {
    Permutation q = p(s, 6);
    CHECK(parse_permutation(to_cycle_string(q), 6) == q);
  }
  CHECK_THROWS_AS(p("(1 1)", 2), std::invalid_argument);
  CHECK_THROWS_AS(p("(1 2)(2 3)", 3), std::invalid_argument);
  CHECK_THROWS_AS(p("(1 9)", 4), std::invalid_argument);
}

TEST_CASE("group closure") {
  auto c2 = group_closure({p("(1 2)", 2)});
  REQUIRE(c2.size() == 2);
  CHECK(c2[0].is_identity());
  CHECK(c2[1] == p("(1 2)", 2));

  CHECK(group_closure({p("(1 2)", 3), p("(1 2 3)", 3)}).size() == 6);

  auto klein = group_closure({p("(1 2)(3 4)", 4), p("(1 3)(2 4)", 4)});
  REQUIRE(klein.size() == 4);
  for (const auto& g : klein) CHECK(compose(g, g).is_identity());

  CHECK_THROWS_AS(group_closure({p("(1 2 3)", 3)}, 2), limit_error);
}

TEST_CASE("sylow 2-subgroups of symmetric groups") {
  CHECK(sylow2_sym(2).order() == 2);
  PermGroup p4 = sylow2_sym(4);
  REQUIRE(p4.order() == 8);
  // dihedral signature: five involutions, two elements of order 4
  int involutions = 0, order4 = 0;
  for (const auto& g : p4.elements()) {
    if (!g.is_identity() && compose(g, g).is_identity()) ++involutions;
    if (!compose(g, g).is_identity() && compose(compose(g, g), compose(g, g)).is_identity())
      ++order4;
  }
  CHECK(involutions == 5);
  CHECK(order4 == 2);
  CHECK(sylow2_sym(8).order() == 128);
  for (int m = 1; m <= 10; ++m) {
    CHECK(sylow2_sym_order(m) == (std::uint64_t{1} << two_valuation_factorial(m)));
    if (m <= 9) CHECK(sylow2_sym(m).order() == sylow2_sym_order(m));
  }
}

TEST_CASE("wreath embedding") {
  PermGroup klein(4, {p("(1 2)(3 4)", 4), p("(1 3)(2 4)", 4)});
  PermGroup w = wreath_embed(klein, sylow2_sym(2));
  CHECK(w.degree() == 8);
  CHECK(w.order() == 32);

  PermGroup top(3, {p("(1 2 3)", 3)});
  PermGroup base_trivial = wreath_embed(PermGroup::trivial(2), top);
  CHECK(base_trivial.degree() == 6);
  CHECK(base_trivial.order() == top.order());

  CHECK(wreath_embed(symmetric_group(2), PermGroup::trivial(1)).order() == 2);
}

TEST_CASE("fpf involution enumeration") {
  CHECK(enumerate_fpf_involutions(2).num_points() == 1);
  GroupAction xi4 = enumerate_fpf_involutions(4);
  REQUIRE(xi4.num_points() == 3);
  std::vector<Permutation> expect{p("(1 2)(3 4)", 4), p("(1 3)(2 4)", 4), p("(1 4)(2 3)", 4)};
  for (const auto& e : expect)
    CHECK(std::find(xi4.points().begin(), xi4.points().end(), e) != xi4.points().end());
  CHECK(enumerate_fpf_involutions(8).num_points() == 105);
  for (int two_n = 2; two_n <= 10; two_n += 2) {
    GroupAction xi = enumerate_fpf_involutions(two_n);
    CHECK(xi.num_points() == static_cast<int>(double_factorial(two_n)));
    // conjugation is transitive
    auto ids = xi.point_orbit_ids();
    for (int id : ids) CHECK(id == 0);
  }
  CHECK(enumerate_fpf_involutions(12).num_points() == 10395);
  CHECK_THROWS_AS(enumerate_fpf_involutions(3), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_fpf_involutions(14), limit_error);
}

TEST_CASE("action tables are permutations and compose correctly") {
  GroupAction xi = enumerate_fpf_involutions(6);
  for (const auto& row : xi.table()) {
    std::vector<char> seen(row.size(), 0);
    for (int v : row) {
      CHECK(!seen[v]);
      seen[v] = 1;
    }
  }
  std::mt19937_64 rng(3);
  const auto& gens = xi.group().generators();
  for (int trial = 0; trial < 30; ++trial) {
    const auto& g = gens[rng() % gens.size()];
    const auto& h = gens[rng() % gens.size()];
    int pt = static_cast<int>(rng() % xi.num_points());
    CHECK(xi.act(compose(g, h), pt) == xi.act(h, xi.act(g, pt)));
  }
}

TEST_CASE("fixed points of subgroups on Xi_4") {
  GroupAction xi4 = enumerate_fpf_involutions(4);
  PermGroup klein(4, {p("(1 2)(3 4)", 4), p("(1 3)(2 4)", 4)});
  CHECK(fixed_points(klein, xi4).size() == 3);

  PermGroup d8 = sylow2_sym(4);
  auto fixed = fixed_points(d8, xi4);
  REQUIRE(fixed.size() == 1);
  CHECK(xi4.points()[fixed[0]] == p("(1 2)(3 4)", 4));

  CHECK(fixed_points(PermGroup::trivial(4), xi4).size() == 3);
}

TEST_CASE("fixed set is stable under the normalizer") {
  GroupAction xi4 = enumerate_fpf_involutions(4);
  PermGroup klein(4, {p("(1 2)(3 4)", 4), p("(1 3)(2 4)", 4)});
  auto fixed = fixed_points(klein, xi4);
  std::vector<Permutation> fixed_perms;
  for (int i : fixed) fixed_perms.push_back(xi4.points()[i]);
  std::sort(fixed_perms.begin(), fixed_perms.end());
  // the Klein subgroup is normal, so every g normalizes it
  PermGroup s4 = symmetric_group(4);
  for (const auto& g : s4.elements()) {
    std::vector<Permutation> image;
    for (const auto& x : fixed_perms) image.push_back(conjugate(x, g));
    std::sort(image.begin(), image.end());
    CHECK(image == fixed_perms);
  }
}

TEST_CASE("brute-force centralizers and set stabilizers") {
  CHECK(centralizer_of_set({p("(1 2)", 2)}, 2).order() == 2);

  std::vector<Permutation> xi4{p("(1 2)(3 4)", 4), p("(1 3)(2 4)", 4), p("(1 4)(2 3)", 4)};
  PermGroup cent = centralizer_of_set(xi4, 4);
  CHECK(cent.order() == 4);
  for (const auto& g : cent.elements()) CHECK(compose(g, g).is_identity());

  CHECK(centralizer_of_set({}, 3).order() == 6);

  CHECK(set_stabilizer(xi4, 4).order() == 24);
  CHECK(set_stabilizer({p("(1 2)", 2)}, 2).order() == 2);

  // pointwise stabilizer is contained in the setwise one
  PermGroup n = set_stabilizer(xi4, 4);
  for (const auto& g : cent.elements()) CHECK(n.contains(g));

  CHECK_THROWS_AS(centralizer_of_set({p("(1 2)", 9)}, 9), limit_error);
}

TEST_CASE("sylow2_of small groups") {
  PermGroup s4 = symmetric_group(4);
  PermGroup syl = sylow2_of(s4.elements(), 4);
  CHECK(syl.order() == 8);
  PermGroup s3 = symmetric_group(3);
  CHECK(sylow2_of(s3.elements(), 3).order() == 2);
  CHECK(sylow2_of({Permutation::identity(2)}, 2).order() == 1);
}
