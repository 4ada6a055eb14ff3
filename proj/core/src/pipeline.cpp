#include "matchmod/pipeline.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "matchmod/lift.hpp"

namespace matchmod {

namespace {

using nlohmann::json;

struct DecomposeArtifacts {
  GroupAction action;
  EndAlgebraBasis basis;
  std::vector<Component> components;
  std::vector<std::map<Partition, std::int64_t>> characters;
  std::vector<MuLabel> mus;
  std::vector<VertexSpec> specs;
  std::vector<int> matched_mu;            // per component, -1 if unmatched
  std::vector<std::vector<int>> brauer;   // [component][mu]
  bool trace_agrees = true;
};

GroupAction xi_action(int n) { return enumerate_fpf_involutions(2 * n); }

EndAlgebraBasis xi_end_basis(const GroupAction& action) {
  const auto& pts = action.points();
  return end_algebra_basis(action, [&pts](int x, int y) {
    return cycle_type(compose(pts[x], pts[y])).to_string();
  });
}

DecomposeArtifacts run_decompose(int n, const PipelineOptions& opts) {
  DecomposeArtifacts art{xi_action(n), {}, {}, {}, {}, {}, {}, {}, true};
  art.basis = xi_end_basis(art.action);
  PermModule module = PermModule::from_action(art.action);
  art.components = decompose(module, art.basis);

  std::vector<ZkMatrix> lifted;
  for (const auto& c : art.components)
    lifted.push_back(hensel_lift_idempotent(c.idempotent, art.basis, opts.precision));
  orthogonalize_idempotents(lifted, art.basis);
  for (std::size_t i = 0; i < lifted.size(); ++i)
    if (!(lifted[i].mod2() == art.components[i].idempotent))
      throw std::logic_error("lifted idempotent does not reduce to its mod-2 seed");

  ClassData cd = ClassData::of_degree(2 * n);
  for (std::size_t i = 0; i < art.components.size(); ++i) {
    std::map<Partition, std::int64_t> chi;
    for (const auto& rho : cd.cycle_types)
      chi[rho] = lifted_character_value(lifted[i], art.action, class_representative(rho),
                                        art.components[i].dimension);
    art.characters.push_back(std::move(chi));
  }

  art.mus = enumerate_mu(n);
  for (const auto& mu : art.mus) art.specs.push_back(vertex_spec(mu));
  art.matched_mu.assign(art.components.size(), -1);
  for (std::size_t m = 0; m < art.mus.size(); ++m) {
    CharacterVector phi = phi_mu(art.mus[m]);
    for (std::size_t i = 0; i < art.components.size(); ++i)
      if (art.characters[i] == phi.values) {
        if (art.matched_mu[i] != -1) throw std::logic_error("component matches two mu labels");
        art.matched_mu[i] = static_cast<int>(m);
      }
  }

  for (std::size_t i = 0; i < art.components.size(); ++i) {
    std::vector<int> dims;
    for (std::size_t m = 0; m < art.mus.size(); ++m) {
      PermGroup q = art.specs[m].group();
      int dim = brauer_quotient_dim_fixed(art.components[i].basis, q, art.action);
      if (art.specs[m].order <= 32) {
        int via_traces =
            brauer_quotient_dim_traces(art.components[i].basis, q, art.action);
        if (via_traces != dim) art.trace_agrees = false;
      }
      dims.push_back(dim);
    }
    art.brauer.push_back(std::move(dims));
  }
  return art;
}

DecompositionReport to_report(int n, const DecomposeArtifacts& art) {
  DecompositionReport rep;
  rep.n = n;
  rep.trace_route_agrees = art.trace_agrees;
  rep.all_matched = true;

  // rows in mu order, unmatched components appended by dimension
  std::vector<std::size_t> order;
  for (std::size_t m = 0; m < art.mus.size(); ++m)
    for (std::size_t i = 0; i < art.components.size(); ++i)
      if (art.matched_mu[i] == static_cast<int>(m)) order.push_back(i);
  for (std::size_t i = 0; i < art.components.size(); ++i)
    if (art.matched_mu[i] < 0) {
      order.push_back(i);
      rep.all_matched = false;
    }

  for (std::size_t i : order) {
    ComponentReport c;
    c.dimension = art.components[i].dimension;
    c.matched = art.matched_mu[i] >= 0;
    if (c.matched) {
      const auto& mu = art.mus[art.matched_mu[i]];
      const auto& spec = art.specs[art.matched_mu[i]];
      c.mu = mu.to_string();
      c.vertex_order = spec.order;
      c.vertex_factors = spec.factors;
      for (const auto& g : spec.generators) c.vertex_generators.push_back(to_cycle_string(g));
      for (const auto& lambda : phi_mu_index_set(mu))
        c.phi_constituents.push_back(lambda.to_string());
    }
    for (std::size_t m = 0; m < art.mus.size(); ++m)
      c.brauer_dims[art.mus[m].to_string()] = art.brauer[i][m];
    for (const auto& [rho, val] : art.characters[i]) c.character[rho.to_string()] = val;
    rep.components.push_back(std::move(c));
  }
  return rep;
}

void validate_n(int n, int lo, int hi) {
  if (n < lo || n > hi)
    throw std::invalid_argument("n out of range [" + std::to_string(lo) + "," +
                                std::to_string(hi) + "]");
}

}  // namespace

std::vector<EnumerationRow> cmd_enumerate(int n) {
  validate_n(n, 1, 5);
  std::vector<EnumerationRow> rows;
  for (const auto& mu : enumerate_mu(n)) {
    EnumerationRow row;
    row.mu = mu;
    FPSet w = build_W(mu);
    row.member_count = w.size();
    row.degree = w.degree();
    VertexSpec spec = vertex_spec(mu);
    row.vertex_order = spec.order;
    row.vertex_factors = spec.factors;
    for (const auto& g : spec.generators) row.vertex_generators.push_back(to_cycle_string(g));
    rows.push_back(std::move(row));
  }
  return rows;
}

DecompositionReport cmd_decompose(int n, const PipelineOptions& opts) {
  validate_n(n, 2, 5);
  return to_report(n, run_decompose(n, opts));
}

std::vector<CharacterRow> cmd_characters(int n, const std::optional<MuLabel>& only) {
  validate_n(n, 1, 5);
  std::vector<CharacterRow> rows;
  for (const auto& mu : enumerate_mu(n)) {
    if (only && (only->s != mu.s || only->t != mu.t)) continue;
    CharacterRow row;
    row.mu = mu;
    CharacterVector phi = phi_mu(mu);
    row.dimension = phi.dimension();
    for (const auto& lambda : phi_mu_index_set(mu))
      row.constituents.push_back(lambda.to_string());
    for (const auto& [rho, val] : phi.values) row.values[rho.to_string()] = val;
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::invalid_argument("mu label does not belong to this n");
  return rows;
}

namespace {

struct Checker {
  VerificationReport* report;
  void run(const std::string& name, bool applicable, const std::string& skip_reason,
           const std::function<std::pair<bool, std::string>()>& body) {
    CheckResult r;
    r.name = name;
    if (!applicable) {
      r.status = "skipped";
      r.detail = skip_reason;
    } else {
      try {
        auto [ok, detail] = body();
        r.status = ok ? "pass" : "fail";
        r.detail = detail;
      } catch (const std::exception& e) {
        r.status = "fail";
        r.detail = std::string("exception: ") + e.what();
      }
    }
    report->checks.push_back(std::move(r));
  }
};

std::pair<bool, std::string> property_suite_body(int n) {
  std::ostringstream detail;
  bool ok = true;

  // GF(2) elimination round-trips on seeded samples
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 20 && ok; ++trial) {
    std::size_t r = 1 + rng() % 24, c = 1 + rng() % 24;
    Gf2Matrix a(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (rng() & 1) a.set(i, j, true);
    if (a.rank() != a.rref().rank()) ok = false;
    if (!(a.rref().rref() == a.rref())) ok = false;
  }
  if (!ok) detail << "gf2 round-trip failed; ";

  // idempotent algebra laws on the degree-4 base case
  {
    GroupAction xi = enumerate_fpf_involutions(4);
    auto comps = decompose(PermModule::from_action(xi), xi_end_basis(xi));
    Gf2Matrix sum(3, 3);
    for (const auto& c : comps) {
      if (!(c.idempotent * c.idempotent == c.idempotent)) ok = false;
      sum = sum + c.idempotent;
    }
    for (std::size_t i = 0; i < comps.size(); ++i)
      for (std::size_t j = 0; j < comps.size(); ++j)
        if (i != j && !(comps[i].idempotent * comps[j].idempotent).is_zero()) ok = false;
    if (!(sum == Gf2Matrix::identity(3))) ok = false;
    if (!ok) detail << "idempotent laws failed; ";
  }

  // MN dimension == hook-length dimension at degree 2n
  {
    CharacterEvaluator eval;
    Partition id_class(std::vector<int>(2 * n, 1));
    for (const auto& lambda : partitions(2 * n))
      if (eval.mn_character(lambda, id_class) != hook_length_dimension(lambda)) {
        ok = false;
        detail << "MN/hook mismatch at " << lambda.to_string() << "; ";
        break;
      }
  }

  // column orthogonality and sum of squared dimensions, degree <= 8
  {
    int d = std::min(2 * n, 8);
    CharacterEvaluator eval;
    auto types = partitions(d);
    std::vector<std::vector<std::int64_t>> table;
    for (const auto& lambda : types) {
      std::vector<std::int64_t> row;
      for (const auto& rho : types) row.push_back(eval.mn_character(lambda, rho));
      table.push_back(std::move(row));
    }
    for (std::size_t a = 0; a < types.size() && ok; ++a)
      for (std::size_t b = 0; b < types.size() && ok; ++b) {
        std::int64_t dot = 0;
        for (std::size_t l = 0; l < types.size(); ++l) dot += table[l][a] * table[l][b];
        std::int64_t expect = (a == b) ? centralizer_order(types[a]) : 0;
        if (dot != expect) {
          ok = false;
          detail << "column orthogonality failed; ";
        }
      }
    std::int64_t sq = 0;
    Partition id_class(std::vector<int>(d, 1));
    for (const auto& lambda : types) {
      std::int64_t dim = eval.mn_character(lambda, id_class);
      sq += dim * dim;
    }
    if (sq != factorial(d)) {
      ok = false;
      detail << "sum of squared dims != d!; ";
    }
  }

  return {ok, ok ? "gf2 round-trips, idempotent laws, MN=hook, orthogonality" : detail.str()};
}

}  // namespace

bool VerificationReport::all_passed() const {
  for (const auto& c : checks)
    if (c.status == "fail") return false;
  return true;
}

VerificationReport cmd_verify(int n, const PipelineOptions& opts) {
  validate_n(n, 1, 5);
  VerificationReport report;
  report.n = n;
  Checker checker{&report};

  std::optional<DecomposeArtifacts> art;
  std::string decompose_error;
  bool want_decompose = !opts.skip_decompose && n >= 2;
  if (want_decompose) {
    try {
      art = run_decompose(n, opts);
      report.components = to_report(n, *art).components;
    } catch (const std::exception& e) {
      decompose_error = e.what();
    }
  }
  auto need_art = [&](const std::function<std::pair<bool, std::string>()>& body) {
    return [&, body]() -> std::pair<bool, std::string> {
      if (!art) return {false, "decomposition unavailable: " + decompose_error};
      return body();
    };
  };

  checker.run("component_count", want_decompose, "needs decomposition (n >= 2)",
              need_art([&]() -> std::pair<bool, std::string> {
                std::size_t expect = static_cast<std::size_t>(n / 2) + 1;
                bool ok = art->components.size() == expect;
                std::ostringstream d;
                d << art->components.size() << " components, expected " << expect;
                return {ok, d.str()};
              }));

  checker.run("base_case", want_decompose && n == 2, "runs at n = 2 only",
              need_art([&]() -> std::pair<bool, std::string> {
                std::vector<int> dims;
                for (const auto& c : art->components) dims.push_back(c.dimension);
                std::sort(dims.begin(), dims.end());
                if (dims != std::vector<int>{1, 2}) return {false, "dimensions are not {1,2}"};
                // E is projective over an order-2 subgroup of the
                // Sym(3) image acting on Xi_4
                const Component* e_comp = nullptr;
                for (const auto& c : art->components)
                  if (c.dimension == 2) e_comp = &c;
                PermGroup p(4, {parse_permutation("(3 4)", 4)});
                bool proj = is_projective_over_2group(
                    e_comp->basis, restrict_module(art->action, p), 2);
                return {proj, proj ? "k Xi_4 = 1 + E, E projective over C2" : "E not projective"};
              }));

  checker.run("murray_no_projective", want_decompose, "needs decomposition (n >= 2)",
              need_art([&]() -> std::pair<bool, std::string> {
                PermGroup sylow = sylow2_sym(2 * n);
                auto mats = restrict_module(art->action, sylow);
                std::uint64_t order = sylow2_sym_order(2 * n);
                for (const auto& c : art->components)
                  if (is_projective_over_2group(c.basis, mats, order))
                    return {false, "a component is projective over the full Sylow 2-subgroup"};
                return {true, "no projective components over P(" + std::to_string(2 * n) + ")"};
              }));

  checker.run("perm_character_identity", true, "", [&]() -> std::pair<bool, std::string> {
    CharacterVector direct = perm_character_xi(2 * n);
    CharacterVector sum = CharacterVector::zero(2 * n);
    CharacterEvaluator eval;
    for (const auto& lambda : lambda_set(2 * n, 0)) sum += eval.irreducible(lambda);
    bool ok = direct == sum;
    return {ok, ok ? "fixed-point counts match the even-partition sum" : "identity fails"};
  });

  checker.run("irs_identity", 2 * n <= 8, "degree exceeds the identity's tested range",
              [&]() -> std::pair<bool, std::string> {
                for (int a = 0; a <= n; ++a) {
                  IrsResult r = irs_character(a, n - a);
                  if (!r.equal)
                    return {false, "mismatch at (n,m)=(" + std::to_string(a) + "," +
                                       std::to_string(n - a) + ")"};
                }
                return {true, "induced side equals partition-sum side for all splittings"};
              });

  std::string no_decompose_reason = opts.skip_decompose ? "skipped by flag"
                                    : n < 2              ? "needs decomposition (n >= 2)"
                                                         : "criterion range is n <= 4";
  checker.run("component_characters", want_decompose && n <= 4, no_decompose_reason,
              need_art([&]() -> std::pair<bool, std::string> {
                std::vector<int> seen(art->mus.size(), 0);
                for (std::size_t i = 0; i < art->components.size(); ++i) {
                  if (art->matched_mu[i] < 0) return {false, "unmatched component character"};
                  seen[art->matched_mu[i]]++;
                }
                for (int count : seen)
                  if (count != 1) return {false, "mu label not matched exactly once"};
                return {true, "each lifted character equals phi_mu for exactly one mu"};
              }));

  checker.run("broue_correspondence", want_decompose && n <= 4, no_decompose_reason,
              need_art([&]() -> std::pair<bool, std::string> {
                for (std::size_t m = 0; m < art->mus.size(); ++m) {
                  const MuLabel& mu = art->mus[m];
                  FPSet w = build_W(mu);
                  StabilizerData sd = stabilizer_data(w);
                  auto profile = projective_profile(GroupAction::natural(sd.Nbar));
                  int projective_count = 0, projective_dim = 0, total = 0;
                  for (const auto& [dim, proj] : profile) {
                    total += dim;
                    if (proj) {
                      ++projective_count;
                      projective_dim = dim;
                    }
                  }
                  int t = static_cast<int>(mu.I.size());
                  if (projective_count != 1 || projective_dim != (1 << t) ||
                      total != w.size())
                    return {false, "k W over Nbar has wrong projective profile at mu=" +
                                       mu.to_string()};
                  // exactly one component is maximal-nonvanishing at Q_mu
                  int hits = 0, hit_index = -1;
                  for (std::size_t i = 0; i < art->components.size(); ++i) {
                    if (art->brauer[i][m] == 0) continue;
                    bool vanishing_above = true;
                    for (std::size_t m2 = 0; m2 < art->mus.size(); ++m2)
                      if (art->specs[m2].order > art->specs[m].order &&
                          art->brauer[i][m2] != 0)
                        vanishing_above = false;
                    if (vanishing_above) {
                      ++hits;
                      hit_index = static_cast<int>(i);
                    }
                  }
                  if (hits != 1 || art->matched_mu[hit_index] != static_cast<int>(m))
                    return {false, "Brauer quotient support does not single out mu=" +
                                       mu.to_string()};
                }
                if (!art->trace_agrees)
                  return {false, "trace-route and fixed-point-route Brauer dims disagree"};
                return {true, "unique projective in k W and unique component per vertex"};
              }));

  checker.run("vertex_structure", true, "", [&]() -> std::pair<bool, std::string> {
    auto mus = enumerate_mu(n);
    if (mus.size() != static_cast<std::size_t>(n / 2) + 1)
      return {false, "wrong number of mu labels"};
    std::vector<FPSet> ws;
    std::vector<int> orbit2_counts;
    GroupAction xi = xi_action(n);
    for (const auto& mu : mus) {
      FPSet w = build_W(mu);
      VertexSpec spec = vertex_spec(mu);
      std::uint64_t formula = sylow2_sym_order(2 * mu.s);
      for (int i : mu.I) {
        std::uint64_t part = sylow2_sym_order(1 << i);
        for (int c = 0; c < (1 << i); ++c) part *= 4;
        formula *= part;
      }
      if (spec.order != formula) return {false, "vertex order formula mismatch"};
      PermGroup q = spec.group();
      if (q.order() != spec.order) return {false, "vertex generator closure != order"};
      bool all_even = true;
      for (const auto& g : spec.generators)
        if (sign(g) < 0) all_even = false;
      if (all_even != (mu.s == 0)) return {false, "Alt containment fails iff-s=0"};
      for (const auto& g : spec.generators)
        for (const auto& x : w.members())
          if (!(conjugate(x, g) == x)) return {false, "vertex does not centralize W"};
      // Fix(Q_mu) recovers W exactly
      std::vector<Permutation> fixed;
      for (int idx : fixed_points(q, xi)) fixed.push_back(xi.points()[idx]);
      std::sort(fixed.begin(), fixed.end());
      if (!(fixed == w.members())) return {false, "Fix(Q_mu) != W_mu"};
      if (!is_closed(w, 2 * n)) return {false, "W_mu is not closed"};
      int twos = 0;
      for (const auto& orb : PermGroup(w.degree(), w.members()).orbits())
        if (orb.size() == 2) ++twos;
      if (twos != mu.s) return {false, "size-2 orbit count != s"};
      orbit2_counts.push_back(twos);
      ws.push_back(std::move(w));
    }
    for (std::size_t a = 0; a < ws.size(); ++a)
      for (std::size_t b = a + 1; b < ws.size(); ++b) {
        if (orbit2_counts[a] == orbit2_counts[b])
          return {false, "orbit invariant fails to separate mu labels"};
        if (equivalent(ws[a], ws[b])) return {false, "distinct W_mu are equivalent"};
      }
    return {true, "orders, parity, closure and pairwise distinction all hold"};
  });

  checker.run("alt_twist", true, "", [&]() -> std::pair<bool, std::string> {
    for (int t = 0; t <= n / 2; ++t)
      if (!alt_twist_check(t)) return {false, "index set not conjugation-closed at t=" +
                                                  std::to_string(t)};
    return {true, "index sets closed under conjugation"};
  });

  checker.run("kappa_probe", true, "", [&]() -> std::pair<bool, std::string> {
    bool square_has_projective = kappa_probe(0);
    StabilizerData sd = stabilizer_data(fps_V());
    bool natural_has_projective = false;
    for (const auto& [dim, proj] : projective_profile(GroupAction::natural(sd.Nbar)))
      if (proj) natural_has_projective = true;
    std::string detail = std::string("k(V*V) projective component: ") +
                         (square_has_projective ? "yes" : "no") +
                         "; natural module projective component: " +
                         (natural_has_projective ? "yes" : "no");
    return {!square_has_projective && natural_has_projective, detail};
  });

  checker.run("property_suite", true, "", [&] { return property_suite_body(n); });

  return report;
}

// ---------------------------------------------------------------- rendering

namespace {

std::string mu_long(const MuLabel& mu) {
  std::string s = mu.to_string() + " s=" + std::to_string(mu.s) +
                  " t=" + std::to_string(mu.t) + " I={";
  bool first = true;
  for (int i : mu.I) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

}  // namespace

std::string render_text(const std::vector<EnumerationRow>& rows) {
  std::ostringstream os;
  os << "mu labels: " << rows.size() << "\n";
  for (const auto& r : rows) {
    os << "mu=" << mu_long(r.mu) << "  W: " << r.member_count << " member"
       << (r.member_count == 1 ? "" : "s") << " on " << r.degree
       << " points  vertex order " << r.vertex_order << "  factors " << r.vertex_factors
       << "\n";
    os << "  vertex generators:";
    for (const auto& g : r.vertex_generators) os << " " << g;
    os << "\n";
  }
  return os.str();
}

namespace {

// class-ordered rendering of a cycle-type-keyed value map
void render_values(std::ostringstream& os, int degree,
                   const std::map<std::string, std::int64_t>& values) {
  for (const auto& rho : partitions(degree)) {
    auto it = values.find(rho.to_string());
    if (it != values.end()) os << " " << it->first << ":" << it->second;
  }
}

}  // namespace

std::string render_text(const DecompositionReport& report) {
  std::ostringstream os;
  os << "decomposition of k Xi_" << 2 * report.n << ": " << report.components.size()
     << " components\n";
  for (const auto& c : report.components) {
    os << "component mu=" << c.mu << " dim=" << c.dimension;
    if (c.matched) os << " vertex order " << c.vertex_order << " factors " << c.vertex_factors;
    os << "\n  brauer dims:";
    for (const auto& [mu, dim] : c.brauer_dims) os << " " << mu << ":" << dim;
    os << "\n  phi constituents:";
    for (const auto& l : c.phi_constituents) os << " [" << l << "]";
    os << "\n  character:";
    render_values(os, 2 * report.n, c.character);
    os << "\n";
  }
  os << "all components matched: " << (report.all_matched ? "yes" : "no") << "\n";
  return os.str();
}

std::string render_text(const std::vector<CharacterRow>& rows, int n) {
  std::ostringstream os;
  os << "phi characters for 2n=" << 2 * n << "\n";
  for (const auto& r : rows) {
    os << "phi" << r.mu.to_string() << " dim=" << r.dimension << " constituents:";
    for (const auto& c : r.constituents) os << " [" << c << "]";
    os << "\n  values:";
    render_values(os, 2 * n, r.values);
    os << "\n";
  }
  return os.str();
}

std::string render_text(const VerificationReport& report) {
  std::ostringstream os;
  os << "verification for n=" << report.n << "\n";
  for (const auto& c : report.checks) {
    os << "[" << (c.status == "pass" ? "PASS" : c.status == "fail" ? "FAIL" : "SKIP") << "] "
       << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << "\n";
  }
  os << "overall: " << (report.all_passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

namespace {

json component_json(const ComponentReport& c) {
  json j;
  j["dimension"] = c.dimension;
  j["mu"] = c.mu;
  j["matched"] = c.matched;
  j["vertex_order"] = c.vertex_order;
  j["vertex_factors"] = c.vertex_factors;
  j["vertex_generators"] = c.vertex_generators;
  j["brauer_dims"] = c.brauer_dims;
  j["character"] = c.character;
  j["phi_constituents"] = c.phi_constituents;
  return j;
}

}  // namespace

std::string render_json(const std::vector<EnumerationRow>& rows, int n) {
  json j;
  j["schema"] = 1;
  j["command"] = "enumerate";
  j["n"] = n;
  j["labels"] = json::array();
  for (const auto& r : rows) {
    json row;
    row["mu"] = r.mu.to_string();
    row["s"] = r.mu.s;
    row["t"] = r.mu.t;
    row["I"] = std::vector<int>(r.mu.I.begin(), r.mu.I.end());
    row["members"] = r.member_count;
    row["degree"] = r.degree;
    row["vertex_order"] = r.vertex_order;
    row["vertex_factors"] = r.vertex_factors;
    row["vertex_generators"] = r.vertex_generators;
    j["labels"].push_back(row);
  }
  return j.dump(2) + "\n";
}

std::string render_json(const DecompositionReport& report) {
  json j;
  j["schema"] = 1;
  j["command"] = "decompose";
  j["n"] = report.n;
  j["all_matched"] = report.all_matched;
  j["trace_route_agrees"] = report.trace_route_agrees;
  j["components"] = json::array();
  for (const auto& c : report.components) j["components"].push_back(component_json(c));
  return j.dump(2) + "\n";
}

std::string render_json(const std::vector<CharacterRow>& rows, int n) {
  json j;
  j["schema"] = 1;
  j["command"] = "characters";
  j["n"] = n;
  j["rows"] = json::array();
  for (const auto& r : rows) {
    json row;
    row["mu"] = r.mu.to_string();
    row["dimension"] = r.dimension;
    row["constituents"] = r.constituents;
    row["values"] = r.values;
    j["rows"].push_back(row);
  }
  return j.dump(2) + "\n";
}

std::string render_json(const VerificationReport& report) {
  json j;
  j["schema"] = 1;
  j["command"] = "verify";
  j["n"] = report.n;
  j["overall"] = report.all_passed() ? "pass" : "fail";
  j["checks"] = json::array();
  for (const auto& c : report.checks) {
    json row;
    row["name"] = c.name;
    row["status"] = c.status;
    row["detail"] = c.detail;
    j["checks"].push_back(row);
  }
  j["components"] = json::array();
  for (const auto& c : report.components) j["components"].push_back(component_json(c));
  return j.dump(2) + "\n";
}

}  // namespace matchmod
