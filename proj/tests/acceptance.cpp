// Acceptance suite: runs each verification criterion over its full
// range and prints one pass/fail line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "matchmod/chars.hpp"
#include "matchmod/fps.hpp"
#include "matchmod/gf2.hpp"
#include "matchmod/lift.hpp"
#include "matchmod/module.hpp"
#include "matchmod/pipeline.hpp"

using namespace matchmod;

namespace {

int failures = 0;

void criterion(int number, const std::string& title,
               const std::function<std::pair<bool, std::string>()>& body) {
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string detail;
  try {
    auto [res, det] = body();
    ok = res;
    detail = det;
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  if (!ok) ++failures;
  std::printf("[%s] %2d. %s (%lld ms)%s%s\n", ok ? "PASS" : "FAIL", number, title.c_str(),
              static_cast<long long>(ms), detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
}

EndAlgebraBasis xi_basis(const GroupAction& xi) {
  const auto& pts = xi.points();
  return end_algebra_basis(xi, [&pts](int x, int y) {
    return cycle_type(compose(pts[x], pts[y])).to_string();
  });
}

struct RawDecomposition {
  GroupAction action;
  std::vector<Component> components;
};

std::map<int, RawDecomposition> g_raw;

const RawDecomposition& raw_decomposition(int n) {
  auto it = g_raw.find(n);
  if (it != g_raw.end()) return it->second;
  GroupAction xi = enumerate_fpf_involutions(2 * n);
  auto comps = decompose(PermModule::from_action(xi), xi_basis(xi));
  return g_raw.emplace(n, RawDecomposition{std::move(xi), std::move(comps)}).first->second;
}

std::map<int, DecompositionReport> g_reports;

const DecompositionReport& full_report(int n) {
  auto it = g_reports.find(n);
  if (it != g_reports.end()) return it->second;
  return g_reports.emplace(n, cmd_decompose(n)).first->second;
}

}  // namespace

int main() {
  criterion(1, "component count = floor(n/2)+1 for n = 2..5", [] {
    std::ostringstream detail;
    for (int n = 2; n <= 5; ++n) {
      const auto& raw = raw_decomposition(n);
      std::size_t expect = static_cast<std::size_t>(n / 2) + 1;
      if (raw.components.size() != expect)
        return std::make_pair(false, "wrong count at n=" + std::to_string(n));
      detail << "n=" << n << ":" << raw.components.size() << " ";
    }
    return std::make_pair(true, detail.str());
  });

  criterion(2, "k Xi_4 = 1 + E with dims {1,2}, E projective over C2", [] {
    const auto& raw = raw_decomposition(2);
    std::vector<int> dims;
    for (const auto& c : raw.components) dims.push_back(c.dimension);
    std::sort(dims.begin(), dims.end());
    if (dims != std::vector<int>{1, 2}) return std::make_pair(false, std::string("bad dims"));
    const Component* e_comp = nullptr;
    for (const auto& c : raw.components)
      if (c.dimension == 2) e_comp = &c;
    auto mats = restrict_module(raw.action, PermGroup(4, {parse_permutation("(3 4)", 4)}));
    bool proj = is_projective_over_2group(e_comp->basis, mats, 2);
    return std::make_pair(proj, std::string(proj ? "" : "E not projective over C2"));
  });

  criterion(3, "no component projective over Sylow-2 of Sym(2n), n <= 5", [] {
    for (int n = 2; n <= 5; ++n) {
      const auto& raw = raw_decomposition(n);
      PermGroup sylow = sylow2_sym(2 * n);
      auto mats = restrict_module(raw.action, sylow);
      std::uint64_t order = sylow2_sym_order(2 * n);
      for (const auto& c : raw.components)
        if (is_projective_over_2group(c.basis, mats, order))
          return std::make_pair(false, "projective component at n=" + std::to_string(n));
    }
    return std::make_pair(true, std::string());
  });

  criterion(4, "permutation character = sum over even partitions, 2n <= 10", [] {
    for (int n = 1; n <= 5; ++n) {
      CharacterVector direct = perm_character_xi(2 * n);
      CharacterVector sum = CharacterVector::zero(2 * n);
      CharacterEvaluator eval;
      for (const auto& lambda : lambda_set(2 * n, 0)) sum += eval.irreducible(lambda);
      if (!(direct == sum))
        return std::make_pair(false, "mismatch at 2n=" + std::to_string(2 * n));
    }
    return std::make_pair(true, std::string());
  });

  criterion(5, "twisted induction identity for all 2(n+m) <= 8", [] {
    int cases = 0;
    for (int total = 1; 2 * total <= 8; ++total)
      for (int n = 0; n <= total; ++n) {
        if (!irs_character(n, total - n).equal)
          return std::make_pair(false, "mismatch at (" + std::to_string(n) + "," +
                                           std::to_string(total - n) + ")");
        ++cases;
      }
    return std::make_pair(true, std::to_string(cases) + " (n,m) pairs");
  });

  criterion(6, "lifted component characters equal phi_mu, n <= 4, mod 2^16", [] {
    for (int n = 2; n <= 4; ++n) {
      const auto& rep = full_report(n);
      if (!rep.all_matched)
        return std::make_pair(false, "unmatched component at n=" + std::to_string(n));
      std::set<std::string> mus;
      for (const auto& c : rep.components) mus.insert(c.mu);
      if (mus.size() != rep.components.size())
        return std::make_pair(false, "duplicate mu assignment at n=" + std::to_string(n));
      // values must agree with phi_mu on every class
      for (const auto& row : cmd_characters(n)) {
        bool seen = false;
        for (const auto& c : rep.components)
          if (c.mu == row.mu.to_string()) {
            seen = true;
            if (c.character != row.values)
              return std::make_pair(false, "character mismatch at mu=" + c.mu);
          }
        if (!seen) return std::make_pair(false, "mu with no component: " + row.mu.to_string());
      }
    }
    return std::make_pair(true, std::string());
  });

  criterion(7, "Broue correspondence: unique projective in kW, unique component per Q_mu", [] {
    for (int n = 1; n <= 4; ++n) {
      std::vector<MuLabel> mus = enumerate_mu(n);
      for (const auto& mu : mus) {
        FPSet w = build_W(mu);
        StabilizerData sd = stabilizer_data(w);
        int projective_count = 0, projective_dim = 0;
        for (const auto& [dim, proj] : projective_profile(GroupAction::natural(sd.Nbar)))
          if (proj) {
            ++projective_count;
            projective_dim = dim;
          }
        int t = static_cast<int>(mu.I.size());
        if (projective_count != 1 || projective_dim != (1 << t))
          return std::make_pair(false, "wrong projective profile of kW at mu=" + mu.to_string());
      }
      if (n < 2) continue;
      const auto& rep = full_report(n);
      std::map<std::string, std::uint64_t> orders;
      for (const auto& mu : mus) orders[mu.to_string()] = vertex_spec(mu).order;
      for (const auto& mu : mus) {
        std::string key = mu.to_string();
        int hits = 0;
        const ComponentReport* hit = nullptr;
        for (const auto& c : rep.components) {
          if (c.brauer_dims.at(key) == 0) continue;
          bool vanishes_above = true;
          for (const auto& [other, dim] : c.brauer_dims)
            if (orders.at(other) > orders.at(key) && dim != 0) vanishes_above = false;
          if (vanishes_above) {
            ++hits;
            hit = &c;
          }
        }
        if (hits != 1 || hit->mu != key)
          return std::make_pair(false, "vertex not certified at mu=" + key);
      }
      if (!rep.trace_route_agrees)
        return std::make_pair(false, std::string("Brauer trace route disagrees"));
    }
    return std::make_pair(true, std::string());
  });

  criterion(8, "vertex orders, Alt containment, closure, pairwise distinction", [] {
    for (int n = 1; n <= 5; ++n) {
      GroupAction xi = enumerate_fpf_involutions(2 * n);
      auto mus = enumerate_mu(n);
      std::vector<FPSet> ws;
      for (const auto& mu : mus) {
        VertexSpec spec = vertex_spec(mu);
        std::uint64_t formula = sylow2_sym_order(2 * mu.s);
        for (int i : mu.I) {
          std::uint64_t part = sylow2_sym_order(1 << i);
          for (int c = 0; c < (1 << i); ++c) part *= 4;
          formula *= part;
        }
        if (spec.order != formula || spec.group().order() != formula)
          return std::make_pair(false, "order formula fails at mu=" + mu.to_string());
        bool even = true;
        for (const auto& g : spec.generators)
          if (sign(g) < 0) even = false;
        if (even != (mu.s == 0))
          return std::make_pair(false, "Alt containment fails at mu=" + mu.to_string());
        FPSet w = build_W(mu);
        if (!is_closed(w, 2 * n))
          return std::make_pair(false, "W not closed at mu=" + mu.to_string());
        std::vector<Permutation> fixed;
        for (int idx : fixed_points(spec.group(), xi)) fixed.push_back(xi.points()[idx]);
        std::sort(fixed.begin(), fixed.end());
        if (!(fixed == w.members()))
          return std::make_pair(false, "Fix(Q_mu) != W at mu=" + mu.to_string());
        ws.push_back(std::move(w));
      }
      for (std::size_t a = 0; a < ws.size(); ++a)
        for (std::size_t b = a + 1; b < ws.size(); ++b)
          if (equivalent(ws[a], ws[b]))
            return std::make_pair(false, "equivalent W pair at n=" + std::to_string(n));
    }
    return std::make_pair(true, std::string());
  });

  criterion(9, "alternating-twist index sets conjugation-closed, 4t <= 10", [] {
    for (int t = 0; 4 * t <= 10; ++t)
      if (!alt_twist_check(t))
        return std::make_pair(false, "fails at t=" + std::to_string(t));
    return std::make_pair(true, std::string("t = 0, 1, 2"));
  });

  criterion(10, "k(V*V) over Sym(3) wr Sym(2) has no projective component", [] {
    bool has = kappa_probe(0);
    return std::make_pair(!has, std::string(has ? "projective component found"
                                                : "no projective component (recorded)"));
  });

  criterion(11, "property suites: gf2, idempotents, MN vs hooks, orthogonality", [] {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 30; ++trial) {
      std::size_t r = 1 + rng() % 24, c = 1 + rng() % 24;
      Gf2Matrix a(r, c);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
          if (rng() & 1) a.set(i, j, true);
      if (a.rank() != a.rref().rank())
        return std::make_pair(false, std::string("rank/rref mismatch"));
      if (!(a.rref().rref() == a.rref()))
        return std::make_pair(false, std::string("rref not idempotent"));
    }
    {
      const auto& raw = raw_decomposition(2);
      Gf2Matrix sum(3, 3);
      for (const auto& c : raw.components) {
        if (!(c.idempotent * c.idempotent == c.idempotent))
          return std::make_pair(false, std::string("projection not idempotent"));
        sum = sum + c.idempotent;
      }
      if (!(sum == Gf2Matrix::identity(3)))
        return std::make_pair(false, std::string("idempotents do not sum to identity"));
    }
    {
      CharacterEvaluator eval;
      for (int d = 1; d <= 10; ++d) {
        Partition id_class(std::vector<int>(d, 1));
        for (const auto& lambda : partitions(d))
          if (eval.mn_character(lambda, id_class) != hook_length_dimension(lambda))
            return std::make_pair(false, std::string("MN dimension != hook dimension"));
      }
    }
    for (int d = 2; d <= 8; ++d) {
      CharacterEvaluator eval;
      auto types = partitions(d);
      for (std::size_t a = 0; a < types.size(); ++a)
        for (std::size_t b = a; b < types.size(); ++b) {
          std::int64_t dot = 0;
          for (const auto& lambda : types)
            dot += eval.mn_character(lambda, types[a]) * eval.mn_character(lambda, types[b]);
          if (dot != (a == b ? centralizer_order(types[a]) : 0))
            return std::make_pair(false, std::string("orthogonality fails"));
        }
    }
    return std::make_pair(true, std::string());
  });

  std::printf("acceptance: %s (%d failing criteria)\n", failures == 0 ? "PASS" : "FAIL",
              failures);
  return failures == 0 ? 0 : 1;
}
