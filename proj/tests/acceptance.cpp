// Acceptance suite: one PASS/FAIL line per criterion. All comparisons are
// exact equalities in Q(zeta_n); the numeric tolerance is zero.
//
// HENNINGS_GRID=small restricts the cyclic grid to l <= 4 for quick runs;
// the default (full) covers k in {1,2,3}, l in {1..6}, d in {0..l-1}.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hennings/builtin.hpp"
#include "hennings/invariant.hpp"
#include "hennings/verify.hpp"

using namespace hennings;
using namespace hennings::moves;

namespace {

constexpr long kTolerance = 0;  // exact arithmetic: values must be identical
constexpr std::size_t kFuzzTriples = 240;
constexpr std::uint32_t kFuzzSeed = 20261016;

struct Case {
  std::string name;
  CyclicParams p;  // unused for kac-paljutkin
  bool kac = false;
  HopfGAlgebra h;
  IntegralData in;
};

std::vector<Case> build_grid(bool full) {
  std::vector<Case> out;
  const std::size_t max_l = full ? 6 : 4;
  for (std::size_t k = 1; k <= 3; ++k)
    for (std::size_t l = 1; l <= max_l; ++l)
      for (std::size_t d = 0; d < l; ++d) {
        auto h = build_cyclic({k, l, d});
        auto in = solve_integrals(h);
        std::ostringstream name;
        name << "cyclic:k=" << k << ",l=" << l << ",d=" << d;
        out.push_back({name.str(), {k, l, d}, false, std::move(h), std::move(in)});
      }
  return out;
}

Case build_kac() {
  auto h = build_kac_paljutkin();
  auto in = solve_integrals(h);
  return {"kac-paljutkin", {}, true, std::move(h), std::move(in)};
}

CycloScalar frac(long p, long q) { return CycloScalar(Rational(p, q)); }
CycloScalar omega(std::size_t l, long e) { return CycloScalar::zeta(static_cast<unsigned>(l), e); }

/// Collects the first failure message of a criterion.
struct Outcome {
  std::size_t checks = 0;
  std::string failure;
  void expect(bool ok, const std::function<std::string()>& what) {
    ++checks;
    if (!ok && failure.empty()) failure = what();
  }
};

// --- closed forms for the cyclic family ---------------------------------

CycloScalar cp2_oracle(std::size_t l, std::size_t d) {
  CycloScalar s;
  for (std::size_t i = 0; i < l; ++i) s += omega(l, static_cast<long>(d * i * i));
  return s * frac(1, static_cast<long>(l));
}

/// (3 + (-1)^{l/g}) / 2 with g = gcd(l, d): 2 when l/g is even, else 1.
long parity_factor(std::size_t l, std::size_t d) { return (l / std::gcd(l, d)) % 2 == 0 ? 2 : 1; }

CycloScalar s2xs2_oracle(std::size_t l, std::size_t d) {
  return frac(static_cast<long>(std::gcd(l, d)) * parity_factor(l, d), static_cast<long>(l));
}

CycloScalar torus_oracle(std::size_t l, std::size_t d) {
  return CycloScalar(static_cast<long>(l * std::gcd(l, d)) * parity_factor(l, d));
}

// --- idempotent oracle ----------------------------------------------------

/// E_a = (1/l) sum_i w^{-ia} g^{ik}, written in the grade-1 basis directly.
GradedVector idempotent(const HopfGAlgebra& h, std::size_t l, std::size_t a) {
  GradedVector out{h.group().identity(), {}};
  for (std::size_t i = 0; i < l; ++i)
    add_entry(out.entries, i, frac(1, static_cast<long>(l)) * omega(l, -static_cast<long>(i * a)));
  return out;
}

/// sum_{i,j} w^{c ij} E_i (x) E_j
GradedTensor diagonal_form(const HopfGAlgebra& h, std::size_t l, long c) {
  const GroupElement one = h.group().identity();
  GradedTensor out{{one, one}, {}};
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) {
      const auto t = tensor_product(as_tensor(idempotent(h, l, i)), as_tensor(idempotent(h, l, j)));
      const auto w = omega(l, c * static_cast<long>(i * j));
      for (const auto& [idx, v] : t.entries) add_entry(out.entries, idx, v * w);
    }
  return out;
}

// --- criteria -------------------------------------------------------------

Outcome axioms(const std::vector<Case>& all) {
  Outcome o;
  for (const auto& c : all) {
    const auto r = verify_axioms(c.h);
    o.expect(r.all_passed(), [&] { return c.name + "\n" + format_report(r); });
  }
  return o;
}

Outcome integrals(const std::vector<Case>& all) {
  Outcome o;
  for (const auto& c : all) {
    const auto& g = c.h.group();
    const std::size_t dim = c.kac ? 8 : c.p.l;
    const CycloScalar coeff = frac(1, static_cast<long>(dim));
    o.expect(c.in.normalized, [&] { return c.name + ": not normalised"; });
    for (const auto a : g.elements()) {
      GradedVector expected{a, {}};
      for (std::size_t i = 0; i < dim; ++i) add_entry(expected.entries, i, coeff);
      o.expect(c.in.at(a) == expected, [&] { return c.name + ": Lambda_" + g.name(a) + " = " + format_vector(c.in.at(a).entries); });
    }
    const SparseVec lambda{{0, CycloScalar(static_cast<long>(dim))}};
    o.expect(c.in.lambda == lambda, [&] { return c.name + ": lambda = " + format_vector(c.in.lambda); });
  }
  return o;
}

InvariantValue trivial_value(const Case& c, const KirbyDiagram& d) {
  const auto& g = c.h.group();
  return evaluate(c.h, c.in, color(d, g, GroupHom{std::vector<GroupElement>(d.dotted.size(), g.identity())}));
}

Outcome cp2(const std::vector<Case>& grid) {
  Outcome o;
  const auto d = builtin_diagram("cp2"), dbar = builtin_diagram("cp2bar");
  for (const auto& c : grid) {
    const auto v = trivial_value(c, d).value;
    o.expect(v == cp2_oracle(c.p.l, c.p.d), [&] { return c.name + ": cp2 = " + v.to_string(); });
    const auto vb = trivial_value(c, dbar).value;
    o.expect(vb == v.conj(), [&] { return c.name + ": cp2bar = " + vb.to_string(); });
  }
  const Case l2 = {"l=2", {1, 2, 1}, false, build_cyclic({1, 2, 1}), {}};
  const Case l3 = {"l=3", {1, 3, 1}, false, build_cyclic({1, 3, 1}), {}};
  for (const Case* c : {&l2, &l3}) {
    const Case filled{c->name, c->p, false, c->h, solve_integrals(c->h)};
    const auto v = trivial_value(filled, d).value;
    const CycloScalar want = c->p.l == 2 ? CycloScalar(0) : frac(1, 3) * (CycloScalar(1) + CycloScalar(2) * omega(3, 1));
    o.expect(v == want, [&] { return c->name + ": cp2 = " + v.to_string(); });
  }
  return o;
}

Outcome s2xs2(const std::vector<Case>& grid) {
  Outcome o;
  const auto d = builtin_diagram("s2xs2");
  for (const auto& c : grid) {
    const auto v = trivial_value(c, d).value;
    o.expect(v == s2xs2_oracle(c.p.l, c.p.d), [&] { return c.name + ": s2xs2 = " + v.to_string(); });
  }
  return o;
}

Outcome s1xs3(const std::vector<Case>& grid) {
  Outcome o;
  const auto d = builtin_diagram("s1xs3");
  for (const auto& c : grid) {
    const CycloScalar l(static_cast<long>(c.p.l));
    for (const auto a : c.h.group().elements()) {
      const auto v = evaluate(c.h, c.in, color(d, c.h.group(), GroupHom{{a}})).value;
      o.expect(v == l, [&] { return c.name + ": color " + c.h.group().name(a) + " gives " + v.to_string(); });
    }
    const auto s = evaluate_summed(c.h, c.in, d);
    o.expect(s.total == CycloScalar(static_cast<long>(c.p.k * c.p.l)), [&] { return c.name + ": sum = " + s.total.to_string(); });
  }
  return o;
}

Outcome torus(const std::vector<Case>& grid) {
  Outcome o;
  const auto d = builtin_diagram("s1xs1xs2");
  for (const auto& c : grid) {
    const auto want = torus_oracle(c.p.l, c.p.d);
    const auto s = evaluate_summed(c.h, c.in, d);
    o.expect(s.homs.size() == c.p.k * c.p.k, [&] { return c.name + ": wrong number of connections"; });
    for (const auto& v : s.values)
      o.expect(v.value == want, [&] { return c.name + ": connection value " + v.value.to_string(); });
    const auto k2 = CycloScalar(static_cast<long>(c.p.k * c.p.k));
    o.expect(s.total == k2 * want, [&] { return c.name + ": sum = " + s.total.to_string(); });
  }
  return o;
}

Outcome fuzz(const std::vector<Case>& grid, const Case& kac) {
  Outcome o;
  std::mt19937 rng(kFuzzSeed);
  const auto names = builtin_diagram_names();
  std::size_t conjugations = 0;
  for (std::size_t t = 0; t < kFuzzTriples; ++t) {
    // every fourth triple is a Kac-Paljutkin global conjugation
    const bool conj = t % 4 == 0;
    const Case& c = (conj || rng() % 5 == 0) ? kac : grid[rng() % grid.size()];
    const auto& g = c.h.group();
    const auto d = builtin_diagram(names[rng() % names.size()]);
    const auto homs = enumerate_homs(fundamental_presentation(d), g);
    const auto cd = color(d, g, homs[rng() % homs.size()]);
    MoveSpec m;
    if (conj) {
      m = GlobalConjugate{GroupElement{1 + rng() % (g.order() - 1)}};
      ++conjugations;
    } else {
      const auto options = enumerate_moves(g, cd);
      if (options.empty()) {
        o.expect(false, [&] { return c.name + ": no applicable move"; });
        continue;
      }
      m = options[rng() % options.size()];
    }
    const auto before = evaluate(c.h, c.in, cd).value;
    const auto after = evaluate(c.h, c.in, apply_move(g, cd, m)).value;
    o.expect(before == after, [&] {
      return c.name + " " + describe(m, g) + ": " + before.to_string() + " vs " + after.to_string();
    });
  }
  o.expect(conjugations > 0, [] { return std::string("no global conjugation sampled"); });
  return o;
}

Outcome orientation(const std::vector<Case>& all) {
  Outcome o;
  for (const auto& c : all) {
    const auto& g = c.h.group();
    for (const auto& name : builtin_diagram_names()) {
      const auto d = builtin_diagram(name);
      for (const auto& hom : enumerate_homs(fundamental_presentation(d), g)) {
        const auto cd = color(d, g, hom);
        const auto v = evaluate(c.h, c.in, cd).value;
        for (std::size_t comp = 0; comp < d.undotted.size(); ++comp) {
          const auto r = evaluate(c.h, c.in, reorient(cd, comp)).value;
          o.expect(r == v, [&] { return c.name + " " + name + ": reorienting component " + std::to_string(comp); });
          for (std::size_t s = 1; s < d.undotted[comp].events.size(); ++s) {
            const auto w = evaluate(c.h, c.in, rotate(cd, comp, s)).value;
            o.expect(w == v, [&] { return c.name + " " + name + ": rotating component " + std::to_string(comp); });
          }
        }
      }
    }
  }
  return o;
}

Outcome connected_sums(const std::vector<Case>& grid) {
  Outcome o;
  const auto names = builtin_diagram_names();
  for (const auto& c : grid) {
    if (c.p.k != 2 && c.p.k != 3) continue;
    const auto& g = c.h.group();
    for (const auto& na : names)
      for (const auto& nb : names) {
        const auto da = builtin_diagram(na), db = builtin_diagram(nb);
        for (const auto& ha : enumerate_homs(fundamental_presentation(da), g))
          for (const auto& hb : enumerate_homs(fundamental_presentation(db), g)) {
            const auto r = connected_sum_check(c.h, c.in, da, db, ha, hb);
            o.expect(r.equal && r.combined.value == r.a.value * r.b.value,
                     [&] { return c.name + " " + na + " # " + nb + ": " + r.combined.value.to_string(); });
          }
      }
  }
  return o;
}

Outcome oracle(const std::vector<Case>& grid) {
  Outcome o;
  for (const auto& c : grid) {
    const auto& h = c.h;
    const std::size_t l = c.p.l;
    const long d = static_cast<long>(c.p.d);
    const GroupElement one = h.group().identity();
    GradedVector total = h.zero(one);
    for (std::size_t a = 0; a < l; ++a) {
      const auto ea = idempotent(h, l, a);
      total = add(total, ea);
      o.expect(eval_lambda(h, c.in, ea) == CycloScalar(1), [&] { return c.name + ": lambda(E_a) != 1"; });
      o.expect(apply_antipode(h, ea) == idempotent(h, l, (l - a) % l), [&] { return c.name + ": S(E_a) != E_-a"; });
      for (std::size_t b = 0; b < l; ++b) {
        const auto eb = idempotent(h, l, b);
        o.expect(graded_multiply(h, ea, eb) == (a == b ? ea : h.zero(one)), [&] { return c.name + ": E_a E_b"; });
        const auto lv = eval_lambda(h, c.in, graded_multiply(h, ea, eb));
        o.expect(lv == CycloScalar(a == b ? 1 : 0), [&] { return c.name + ": lambda(E_a E_b)"; });
      }
    }
    o.expect(total == h.unit(), [&] { return c.name + ": sum of E_a != 1"; });
    const auto r = h.rmatrix();
    o.expect(r == diagonal_form(h, l, d), [&] { return c.name + ": R_d = " + format_tensor(r.entries); });
    const auto r21r = tensor_multiply(h, permute_factors(r, {1, 0}), r);
    o.expect(r21r == diagonal_form(h, l, 2 * d), [&] { return c.name + ": R21 R = " + format_tensor(r21r.entries); });
    // lambda(u) = sum_a w^{-d a^2}, the unnormalised cp2bar bracket
    CycloScalar lu;
    for (std::size_t a = 0; a < l; ++a) lu += omega(l, -d * static_cast<long>(a * a));
    o.expect(eval_lambda(h, c.in, drinfeld_element(h).u) == lu, [&] { return c.name + ": lambda(u)"; });
  }
  return o;
}

Outcome ribbon(const std::vector<Case>& all) {
  Outcome o;
  for (const auto& c : all) {
    const auto& h = c.h;
    const GroupElement one = h.group().identity();
    DrinfeldData dr;
    try {
      dr = drinfeld_element(h);
    } catch (const AlgebraError& e) {
      o.expect(false, [&] { return c.name + ": " + e.what(); });
      continue;
    }
    o.expect(graded_multiply(h, dr.u, dr.u_inverse) == h.unit() && graded_multiply(h, dr.u_inverse, dr.u) == h.unit(),
             [&] { return c.name + ": u not invertible"; });
    o.expect(apply_antipode(h, dr.u) == dr.u, [&] { return c.name + ": S(u) != u"; });
    for (std::size_t i = 0; i < h.dim(one); ++i) {
      const auto x = h.basis(one, i);
      o.expect(graded_multiply(h, dr.u, x) == graded_multiply(h, x, dr.u), [&] { return c.name + ": u not central"; });
    }
  }
  return o;
}

}  // namespace

int main() {
  const char* env = std::getenv("HENNINGS_GRID");
  const bool full = env == nullptr || std::string(env) != "small";
  const auto grid = build_grid(full);
  const auto kac = build_kac();
  std::vector<Case> all = grid;
  all.push_back(kac);

  std::cout << "grid: " << (full ? "full" : "small") << ", " << grid.size() << " cyclic algebras + kac-paljutkin"
            << ", tolerance " << kTolerance << " (exact)\n";

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"axiom suite", [&] { return axioms(all); }},
      {"integral reproduction", [&] { return integrals(all); }},
      {"cp2 closed form and mirror", [&] { return cp2(grid); }},
      {"s2xs2 closed form", [&] { return s2xs2(grid); }},
      {"s1xs3 per color and summed", [&] { return s1xs3(grid); }},
      {"s1xs1xs2 per connection and summed", [&] { return torus(grid); }},
      {"move-invariance fuzzing", [&] { return fuzz(grid, kac); }},
      {"orientation and start-point independence", [&] { return orientation(all); }},
      {"connected-sum multiplicativity", [&] { return connected_sums(grid); }},
      {"idempotent oracle cross-check", [&] { return oracle(grid); }},
      {"ribbon certification", [&] { return ribbon(all); }},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.failure = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = o.failure.empty();
    failed += pass ? 0 : 1;
    std::cout << (pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << "  (" << o.checks
              << " checks, " << std::fixed;
    std::cout.precision(1);
    std::cout << secs << " s)\n";
    if (!pass) std::cout << "      " << o.failure << "\n";
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
