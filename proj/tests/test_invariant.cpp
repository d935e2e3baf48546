#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "hennings/builtin.hpp"
#include "hennings/invariant.hpp"

using namespace hennings;
using namespace hennings::moves;

namespace {

CycloScalar frac(long p, long q) { return CycloScalar(Rational(p, q)); }

struct Fixture {
  HopfGAlgebra h;
  IntegralData in;
  explicit Fixture(HopfGAlgebra alg) : h(std::move(alg)), in(solve_integrals(h)) {}
  InvariantValue eval(const KirbyDiagram& d, std::vector<GroupElement> colors) const {
    return evaluate(h, in, color(d, h.group(), GroupHom{std::move(colors)}));
  }
  InvariantValue trivial(const KirbyDiagram& d) const {
    return eval(d, std::vector<GroupElement>(d.dotted.size(), h.group().identity()));
  }
};

/// The cyclic algebra with its group enlarged by a factor Z_2 whose extra
/// grades are zero dimensional.
HopfGAlgebra with_empty_grades(const HopfGAlgebra& base) {
  const HopfGAlgebraData& b = base.data();
  HopfGAlgebraData d;
  d.group = cyclic_group(2);
  d.conductor = b.conductor;
  d.dims = {b.dims[0], 0};
  d.product = {b.product[0], {}, {}, {}};
  d.unit = b.unit;
  d.coproduct = {b.coproduct[0], {}};
  d.counit = {b.counit[0], {}};
  d.antipode = {b.antipode[0], {}};
  d.crossing = {b.crossing[0], {}, b.crossing[0], {}};
  d.rmatrix = b.rmatrix;
  return HopfGAlgebra(d);
}

CycloScalar cp2_closed_form(long l, long d) {
  CycloScalar s;
  for (long i = 0; i < l; ++i) s += CycloScalar::zeta(static_cast<unsigned>(l), d * i * i);
  return s * frac(1, l);
}

}  // namespace

TEST(Evaluate, EmptyDiagramIsOne) {
  for (const auto& p : std::vector<CyclicParams>{{1, 1, 0}, {2, 3, 1}, {3, 4, 2}}) {
    const Fixture f(build_cyclic(p));
    const auto v = f.trivial(builtin_diagram("s4"));
    EXPECT_EQ(v.value, CycloScalar(1));
    EXPECT_EQ(v.exponent, 0);
  }
}

TEST(Evaluate, Cp2) {
  const Fixture f(build_cyclic({1, 3, 1}));
  const auto v = f.trivial(builtin_diagram("cp2"));
  EXPECT_EQ(v.value, frac(1, 3) * (CycloScalar(1) + CycloScalar(2) * CycloScalar::zeta(3)));
  EXPECT_EQ(v.exponent, -1);
  EXPECT_EQ(v.value, v.bracket * frac(1, 3));
  EXPECT_EQ(Fixture(build_cyclic({1, 2, 1})).trivial(builtin_diagram("cp2")).value, CycloScalar(0));
}

TEST(Evaluate, Cp2ClosedFormAndMirror) {
  for (long l = 1; l <= 6; ++l)
    for (long d = 0; d < l; ++d) {
      const Fixture f(build_cyclic({2, static_cast<std::size_t>(l), static_cast<std::size_t>(d)}));
      const auto v = f.trivial(builtin_diagram("cp2")).value;
      EXPECT_EQ(v, cp2_closed_form(l, d)) << l << " " << d;
      EXPECT_EQ(f.trivial(builtin_diagram("cp2bar")).value, v.conj()) << l << " " << d;
    }
}

TEST(Evaluate, S2xS2) {
  const Fixture f(build_cyclic({1, 3, 1}));
  EXPECT_EQ(f.trivial(builtin_diagram("s2xs2")).value, frac(1, 3));
}

TEST(Evaluate, S1xS3) {
  const Fixture f(build_cyclic({2, 3, 1}));
  for (const auto a : f.h.group().elements()) EXPECT_EQ(f.eval(builtin_diagram("s1xs3"), {a}).value, CycloScalar(3));
  const auto s = evaluate_summed(f.h, f.in, builtin_diagram("s1xs3"));
  EXPECT_EQ(s.total, CycloScalar(6));
  EXPECT_EQ(s.homs.size(), 2u);
}

TEST(Evaluate, S1xS1xS2Summed) {
  const Fixture f(build_cyclic({2, 3, 1}));
  const auto s = evaluate_summed(f.h, f.in, builtin_diagram("s1xs1xs2"));
  EXPECT_EQ(s.total, CycloScalar(12));
  ASSERT_EQ(s.values.size(), 4u);
  for (const auto& v : s.values) EXPECT_EQ(v.value, CycloScalar(3));
}

TEST(Evaluate, SimplyConnectedSumEqualsTrivial) {
  const Fixture f(build_kac_paljutkin());
  const auto s = evaluate_summed(f.h, f.in, builtin_diagram("cp2"));
  ASSERT_EQ(s.homs.size(), 1u);
  EXPECT_EQ(s.total, f.trivial(builtin_diagram("cp2")).value);
}

TEST(Evaluate, UnnormalizedIntegralsRejected) {
  Fixture f(build_cyclic({1, 3, 1}));
  f.in.normalized = false;
  EXPECT_THROW(f.trivial(builtin_diagram("cp2")), EvaluationError);
}

TEST(Evaluate, ZeroDimensionalGradeKillsTheValue) {
  const Fixture f(with_empty_grades(build_cyclic({1, 3, 1})));
  EXPECT_EQ(f.eval(builtin_diagram("s1xs3"), {GroupElement{1}}).value, CycloScalar(0));
  EXPECT_EQ(f.eval(builtin_diagram("s1xs3"), {GroupElement{0}}).value, CycloScalar(3));
  EXPECT_EQ(evaluate_summed(f.h, f.in, builtin_diagram("s1xs3")).total, CycloScalar(3));
}

TEST(Evaluate, ParallelCableMatchesCoproductOracle) {
  // two parallel strands through one dot, the second running upward
  KirbyDiagram d;
  d.dotted = {{0, {{0, 0}, {1, 0}}}};
  d.undotted = {{0, {DotPassage{0, Direction::Down}}}, {1, {DotPassage{0, Direction::Up}}}};
  for (auto alg : {build_cyclic({2, 4, 1}), build_kac_paljutkin()}) {
    const Fixture f(std::move(alg));
    const GroupElement one = f.h.group().identity();
    const auto t = antipode_on_factor(f.h, apply_coproduct_power(f.h, f.in.at(one), 2), 1);
    CycloScalar oracle;
    for (const auto& [idx, c] : t.entries) {
      oracle += c * eval_lambda(f.h, f.in, f.h.basis(one, idx[0])) * eval_lambda(f.h, f.in, f.h.basis(one, idx[1]));
    }
    oracle /= CycloScalar(static_cast<long>(f.h.dim(one)));
    EXPECT_EQ(f.trivial(d).value, oracle);
  }
}

TEST(Invariance, ReorientAndRotate) {
  for (auto alg : {build_cyclic({2, 3, 1}), build_cyclic({1, 4, 1}), build_kac_paljutkin()}) {
    const Fixture f(std::move(alg));
    for (const auto& name : builtin_diagram_names()) {
      const auto d = builtin_diagram(name);
      for (const auto& hom : enumerate_homs(fundamental_presentation(d), f.h.group())) {
        const auto cd = color(d, f.h.group(), hom);
        const auto v = evaluate(f.h, f.in, cd).value;
        for (std::size_t c = 0; c < d.undotted.size(); ++c) {
          EXPECT_EQ(evaluate(f.h, f.in, reorient(cd, c)).value, v) << name;
          for (std::size_t s = 1; s < d.undotted[c].events.size(); ++s)
            EXPECT_EQ(evaluate(f.h, f.in, rotate(cd, c, s)).value, v) << name;
        }
      }
    }
  }
}

TEST(Invariance, ConnectedSums) {
  const Fixture f(build_cyclic({2, 3, 1}));
  const auto cp2 = builtin_diagram("cp2");
  const auto r = connected_sum_check(f.h, f.in, cp2, cp2, {}, {});
  EXPECT_TRUE(r.equal);
  EXPECT_EQ(r.combined.value, r.a.value * r.b.value);
  const auto t = builtin_diagram("s1xs1xs2");
  const GroupHom hom{{GroupElement{1}, GroupElement{0}}};
  const auto r2 = connected_sum_check(f.h, f.in, t, builtin_diagram("s4"), hom, {});
  EXPECT_TRUE(r2.equal);
  EXPECT_EQ(r2.combined.value, f.eval(t, hom.images).value);
  const auto s13 = builtin_diagram("s1xs3");
  for (const auto a : f.h.group().elements())
    for (const auto b : f.h.group().elements()) {
      const auto r3 = connected_sum_check(f.h, f.in, s13, s13, GroupHom{{a}}, GroupHom{{b}});
      EXPECT_TRUE(r3.equal);
      EXPECT_EQ(r3.combined.value, CycloScalar(9));
    }
}

TEST(Invariance, GlobalConjugateKacPaljutkin) {
  const Fixture f(build_kac_paljutkin());
  const auto& g = f.h.group();
  for (const auto& name : {"s1xs3", "s1xs1xs2"}) {
    const auto d = builtin_diagram(name);
    for (const auto& hom : enumerate_homs(fundamental_presentation(d), g)) {
      const auto cd = color(d, g, hom);
      for (const auto b : g.elements())
        EXPECT_EQ(evaluate(f.h, f.in, apply_move(g, cd, GlobalConjugate{b})).value, evaluate(f.h, f.in, cd).value);
    }
  }
}

TEST(Invariance, R3OnBraidClosure) {
  for (auto alg : {build_cyclic({1, 3, 1}), build_cyclic({1, 4, 3}), build_kac_paljutkin()}) {
    const Fixture f(std::move(alg));
    for (const auto& word : std::vector<std::vector<int>>{{1, 2, 1}, {-1, -2, -1}, {1, -2, -1}, {2, 1, -2}}) {
      const auto d = braid_closure(3, word);
      const auto cd = color(d, f.h.group(), {});
      const auto v = evaluate(f.h, f.in, cd).value;
      for (const auto& m : enumerate_moves(f.h.group(), cd)) {
        if (!std::holds_alternative<R3>(m)) continue;
        EXPECT_EQ(evaluate(f.h, f.in, apply_move(f.h.group(), cd, m)).value, v);
      }
    }
  }
}

TEST(Invariance, RandomMoveWalks) {
  std::mt19937 rng(20261016);
  for (auto alg : {build_cyclic({2, 3, 1}), build_cyclic({1, 2, 1}), build_kac_paljutkin()}) {
    const Fixture f(std::move(alg));
    const auto& g = f.h.group();
    for (const auto& name : builtin_diagram_names()) {
      const auto d = builtin_diagram(name);
      const auto homs = enumerate_homs(fundamental_presentation(d), g);
      ColoredDiagram cd = color(d, g, homs[rng() % homs.size()]);
      const auto v = evaluate(f.h, f.in, cd).value;
      for (int step = 0; step < 3; ++step) {
        const auto options = enumerate_moves(g, cd);
        ASSERT_FALSE(options.empty());
        const auto& m = options[rng() % options.size()];
        cd = apply_move(g, cd, m);
        EXPECT_EQ(evaluate(f.h, f.in, cd).value, v) << name << " step " << step << " " << describe(m, g);
      }
    }
  }
}
