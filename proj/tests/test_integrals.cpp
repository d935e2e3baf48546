#include <gtest/gtest.h>

#include "hennings/builtin.hpp"
#include "hennings/integrals.hpp"

using namespace hennings;

namespace {

CycloScalar frac(long p, long q) { return CycloScalar(Rational(p, q)); }

/// E_a = (1/l) sum_i w^{-ia} g^{ik} in the grade-1 basis of the cyclic family.
GradedVector idempotent(const HopfGAlgebra& h, std::size_t l, long a) {
  GradedVector out{h.group().identity(), {}};
  for (std::size_t i = 0; i < l; ++i) {
    add_entry(out.entries, i, frac(1, static_cast<long>(l)) * CycloScalar::zeta(static_cast<unsigned>(l), -static_cast<long>(i) * a));
  }
  return out;
}

/// Sweedler's four dimensional algebra: basis g^a x^b at index a + 2b.
HopfGAlgebra sweedler() {
  HopfGAlgebraData d;
  d.group = cyclic_group(1);
  d.conductor = 1;
  d.dims = {4};
  d.product.assign(1, std::vector<SparseVec>(16));
  for (std::size_t u = 0; u < 4; ++u)
    for (std::size_t v = 0; v < 4; ++v) {
      const std::size_t a = u & 1, b = u >> 1, c = v & 1, e = v >> 1;
      if (b + e >= 2) continue;
      d.product[0][u * 4 + v] = {{((a + c) & 1) + 2 * (b + e), CycloScalar((b && c) ? -1 : 1)}};
    }
  d.unit = {{0, CycloScalar(1)}};
  d.coproduct = {{{{{0, 0}, CycloScalar(1)}},
                  {{{1, 1}, CycloScalar(1)}},
                  {{{2, 0}, CycloScalar(1)}, {{1, 2}, CycloScalar(1)}},
                  {{{3, 1}, CycloScalar(1)}, {{0, 3}, CycloScalar(1)}}}};
  d.counit = {{CycloScalar(1), CycloScalar(1), CycloScalar(), CycloScalar()}};
  d.antipode = {{{{0, CycloScalar(1)}}, {{1, CycloScalar(1)}}, {{3, CycloScalar(-1)}}, {{2, CycloScalar(1)}}}};
  d.crossing = {{{{0, CycloScalar(1)}}, {{1, CycloScalar(1)}}, {{2, CycloScalar(1)}}, {{3, CycloScalar(1)}}}};
  d.rmatrix = {{{0, 0}, CycloScalar(1)}};
  return HopfGAlgebra(d);
}

std::vector<CyclicParams> small_grid() { return {{1, 1, 0}, {1, 3, 1}, {2, 3, 1}, {3, 4, 2}, {2, 5, 0}, {2, 6, 4}}; }

}  // namespace

TEST(Integrals, CyclicFamily) {
  for (const auto& p : small_grid()) {
    const auto h = build_cyclic(p);
    const auto in = solve_integrals(h);
    EXPECT_TRUE(in.normalized);
    for (const auto a : h.group().elements()) {
      GradedVector expected{a, {}};
      for (std::size_t i = 0; i < p.l; ++i) add_entry(expected.entries, i, frac(1, static_cast<long>(p.l)));
      EXPECT_EQ(in.at(a), expected);
    }
    EXPECT_EQ(in.lambda, (SparseVec{{0, CycloScalar(static_cast<long>(p.l))}}));
    EXPECT_EQ(check_integral_laws(h, in), "");
  }
}

TEST(Integrals, KacPaljutkin) {
  const auto h = build_kac_paljutkin();
  const auto in = solve_integrals(h);
  for (const auto a : h.group().elements()) {
    GradedVector expected{a, {}};
    for (std::size_t i = 0; i < 8; ++i) add_entry(expected.entries, i, frac(1, 8));
    EXPECT_EQ(in.at(a), expected);
  }
  EXPECT_EQ(in.lambda, (SparseVec{{0, CycloScalar(8)}}));
}

TEST(Integrals, AntipodeSwapsIntegrals) {
  std::vector<HopfGAlgebra> hs;
  for (const auto& p : small_grid()) hs.push_back(build_cyclic(p));
  hs.push_back(build_kac_paljutkin());
  for (const auto& h : hs) {
    const auto in = solve_integrals(h);
    for (const auto a : h.group().elements()) EXPECT_EQ(apply_antipode(h, in.at(a)), in.at(h.group().inv(a)));
  }
}

TEST(Integrals, LambdaProperties) {
  std::vector<HopfGAlgebra> hs;
  for (const auto& p : small_grid()) hs.push_back(build_cyclic(p));
  hs.push_back(build_kac_paljutkin());
  for (const auto& h : hs) {
    const auto& g = h.group();
    const auto in = solve_integrals(h);
    const GroupElement one = g.identity();
    // lambda(Lambda_1) = 1 = eps(Lambda_1) and dim H_1 = lambda(1) eps(Lambda_1)
    EXPECT_EQ(eval_lambda(h, in, in.at(one)), CycloScalar(1));
    EXPECT_EQ(eval_counit(h, in.at(one)), CycloScalar(1));
    EXPECT_EQ(eval_lambda(h, in, h.unit()) * eval_counit(h, in.at(one)), CycloScalar(static_cast<long>(h.dim(one))));
    for (std::size_t i = 0; i < h.dim(one); ++i) {
      const auto x = h.basis(one, i);
      EXPECT_EQ(eval_lambda(h, in, apply_antipode(h, x)), eval_lambda(h, in, x));
      for (const auto b : g.elements()) EXPECT_EQ(eval_lambda(h, in, apply_crossing(h, b, x)), eval_lambda(h, in, x));
    }
    for (const auto a : g.elements()) {
      for (const auto b : g.elements()) EXPECT_EQ(apply_crossing(h, b, in.at(a)), in.at(g.conjugate(b, a)));
      for (std::size_t i = 0; i < h.dim(a); ++i)
        for (std::size_t j = 0; j < h.dim(g.inv(a)); ++j) {
          const auto x = h.basis(a, i), y = h.basis(g.inv(a), j);
          EXPECT_EQ(eval_lambda(h, in, graded_multiply(h, x, y)), eval_lambda(h, in, graded_multiply(h, y, x)));
        }
    }
  }
}

TEST(Integrals, LambdaRequiresGradeOne) {
  const auto h = build_cyclic({2, 3, 1});
  const auto in = solve_integrals(h);
  EXPECT_THROW(eval_lambda(h, in, h.basis({1}, 0)), AlgebraError);
}

TEST(Integrals, NonUnimodularAlgebraRejected) {
  const auto h = sweedler();
  EXPECT_THROW(solve_integrals(h), AlgebraError);
}

TEST(Idempotents, CyclicIdentities) {
  for (const auto& p : small_grid()) {
    const auto h = build_cyclic(p);
    const auto in = solve_integrals(h);
    const long l = static_cast<long>(p.l);
    GradedVector total = h.zero(h.group().identity());
    for (long a = 0; a < l; ++a) {
      const auto ea = idempotent(h, p.l, a);
      total = add(total, ea);
      EXPECT_EQ(eval_lambda(h, in, ea), CycloScalar(1));
      EXPECT_EQ(apply_antipode(h, ea), idempotent(h, p.l, (l - a) % l));
      for (long b = 0; b < l; ++b) {
        EXPECT_EQ(graded_multiply(h, ea, idempotent(h, p.l, b)), a == b ? ea : h.zero(h.group().identity()));
      }
    }
    EXPECT_EQ(total, h.unit());
  }
}

TEST(Drinfeld, TrivialRMatrixGivesUnit) {
  for (const auto& p : std::vector<CyclicParams>{{1, 3, 0}, {2, 4, 0}}) {
    const auto h = build_cyclic(p);
    const auto dr = drinfeld_element(h);
    EXPECT_EQ(dr.u, h.unit());
    EXPECT_EQ(dr.u_inverse, h.unit());
  }
}

TEST(Drinfeld, CyclicMatchesIdempotentForm) {
  // u = sum_a w^{-d a^2} E_a
  for (const auto& p : std::vector<CyclicParams>{{1, 3, 1}, {2, 3, 1}, {1, 4, 1}, {3, 5, 2}, {1, 6, 3}}) {
    const auto h = build_cyclic(p);
    const long l = static_cast<long>(p.l), d = static_cast<long>(p.d);
    GradedVector expected = h.zero(h.group().identity());
    for (long a = 0; a < l; ++a)
      expected = add(expected, scale(idempotent(h, p.l, a), CycloScalar::zeta(static_cast<unsigned>(l), -d * a * a)));
    const auto dr = drinfeld_element(h);
    EXPECT_EQ(dr.u, expected);
    EXPECT_EQ(graded_multiply(h, dr.u, dr.u_inverse), h.unit());
  }
}

TEST(Drinfeld, KacPaljutkinCertified) {
  const auto h = build_kac_paljutkin();
  const auto dr = drinfeld_element(h);
  EXPECT_EQ(eval_counit(h, dr.u), CycloScalar(1));
  EXPECT_EQ(apply_antipode(h, dr.u), dr.u);
  for (std::size_t i = 0; i < 8; ++i) {
    const auto x = h.basis(h.group().identity(), i);
    EXPECT_EQ(graded_multiply(h, dr.u, x), graded_multiply(h, x, dr.u));
  }
}
