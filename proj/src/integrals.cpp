#include "hennings/integrals.hpp"

#include "hennings/linalg.hpp"

namespace hennings {

namespace {

GradedVector from_dense(GroupElement a, const std::vector<CycloScalar>& v) {
  GradedVector out{a, {}};
  for (std::size_t i = 0; i < v.size(); ++i) add_entry(out.entries, i, v[i]);
  return out;
}

// Rows expressing y Lam = eps(y) Lam and Lam y = eps(y) Lam for every basis y
// of H_1, with Lam an unknown element of H_a.
Matrix one_sided_system(const HopfGAlgebra& h, GroupElement a) {
  const GroupElement one = h.group().identity();
  const std::size_t n = h.dim(a);
  Matrix rows;
  for (std::size_t y = 0; y < h.dim(one); ++y) {
    const CycloScalar eps = h.counit_basis(one, y);
    for (int side = 0; side < 2; ++side) {
      Matrix block(n, std::vector<CycloScalar>(n));
      for (std::size_t j = 0; j < n; ++j) {
        const SparseVec& p = side == 0 ? h.mul_basis(one, a, y, j) : h.mul_basis(a, one, j, y);
        for (const auto& [m, c] : p) block[m][j] += c;
        block[j][j] -= eps;
      }
      for (auto& r : block) rows.push_back(std::move(r));
    }
  }
  return rows;
}

}  // namespace

std::string check_integral_laws(const HopfGAlgebra& h, const IntegralData& in) {
  const FiniteGroup& g = h.group();
  for (const auto a : g.elements()) {
    for (const auto b : g.elements()) {
      for (std::size_t i = 0; i < h.dim(a); ++i) {
        const auto x = h.basis(a, i);
        const auto target = scale(in.at(g.mul(a, b)), h.counit_basis(a, i));
        const std::string w = "e" + std::to_string(i) + "@" + g.name(a);
        if (graded_multiply(h, x, in.at(b)) != target) {
          return "left law fails for x = " + w + ", beta = " + g.name(b);
        }
        const auto target_r = scale(in.at(g.mul(b, a)), h.counit_basis(a, i));
        if (graded_multiply(h, in.at(b), x) != target_r) {
          return "right law fails for alpha = " + g.name(b) + ", y = " + w;
        }
      }
    }
  }
  return {};
}

IntegralData solve_integrals(const HopfGAlgebra& h) {
  const FiniteGroup& g = h.group();
  const GroupElement one = g.identity();
  const std::size_t n1 = h.dim(one);

  const auto lam_basis = nullspace(one_sided_system(h, one), n1);
  if (lam_basis.size() != 1) {
    throw AlgebraError("two-sided integral space of H_1 has dimension " + std::to_string(lam_basis.size()) +
                       ", expected 1");
  }
  GradedVector lam1 = from_dense(one, lam_basis[0]);
  const CycloScalar eps1 = eval_counit(h, lam1);
  if (eps1.is_zero()) {
    throw AlgebraError("integral of H_1 cannot be normalised: eps_1(Lambda_1) = 0");
  }
  lam1 = scale(lam1, eps1.inverse());

  IntegralData out;
  out.Lambda.resize(g.order());
  for (const auto a : g.elements()) {
    out.Lambda[a.index] = h.zero(a);
    if (h.dim(a) == 0) continue;
    if (a == one) {
      out.Lambda[a.index] = lam1;
      continue;
    }
    bool done = false;
    for (std::size_t i = 0; i < h.dim(a) && !done; ++i) {
      const CycloScalar e = h.counit_basis(a, i);
      if (e.is_zero()) continue;
      out.Lambda[a.index] = scale(graded_multiply(h, h.basis(a, i), lam1), e.inverse());
      done = true;
    }
    if (!done) {
      const auto sol = nullspace(one_sided_system(h, a), h.dim(a));
      if (sol.size() != 1) {
        throw AlgebraError("integral space in grade " + g.name(a) + " has dimension " + std::to_string(sol.size()) +
                           ", expected 1");
      }
      GradedVector v = from_dense(a, sol[0]);
      const CycloScalar ea = eval_counit(h, v);
      if (ea.is_zero()) throw AlgebraError("cannot normalise the integral in grade " + g.name(a));
      out.Lambda[a.index] = scale(v, ea.inverse());
    }
  }

  // (id (x) lambda) Delta(x) = lambda(x) 1 and (lambda (x) id) Delta(x) = lambda(x) 1.
  Matrix rows;
  for (std::size_t x = 0; x < n1; ++x) {
    for (int side = 0; side < 2; ++side) {
      Matrix block(n1, std::vector<CycloScalar>(n1));
      for (const auto& [pair, c] : h.coproduct_basis(one, x)) {
        const std::size_t kept = side == 0 ? pair[0] : pair[1];
        const std::size_t fed = side == 0 ? pair[1] : pair[0];
        block[kept][fed] += c;
      }
      for (const auto& [m, c] : h.unit().entries) block[m][x] -= c;
      for (auto& r : block) rows.push_back(std::move(r));
    }
  }
  const auto dual = nullspace(std::move(rows), n1);
  if (dual.size() != 1) {
    throw AlgebraError("integral space of H_1^* has dimension " + std::to_string(dual.size()) + ", expected 1");
  }
  CycloScalar at_lam;
  for (const auto& [i, c] : lam1.entries) at_lam += c * dual[0][i];
  if (at_lam.is_zero()) throw AlgebraError("lambda(Lambda_1) = 0; integrals cannot be normalised");
  const CycloScalar inv = at_lam.inverse();
  for (std::size_t i = 0; i < n1; ++i) add_entry(out.lambda, i, dual[0][i] * inv);
  out.normalized = true;

  const std::string bad = check_integral_laws(h, out);
  if (!bad.empty()) throw AlgebraError("G-integral verification failed: " + bad);
  return out;
}

CycloScalar eval_lambda(const HopfGAlgebra& h, const IntegralData& in, const GradedVector& x) {
  if (!h.group().is_identity(x.grade)) {
    throw AlgebraError("lambda applied to an element of grade " + h.group().name(x.grade) + " instead of 1");
  }
  CycloScalar out;
  for (const auto& [i, c] : x.entries) {
    auto it = in.lambda.find(i);
    if (it != in.lambda.end()) out += c * it->second;
  }
  return out;
}

DrinfeldData drinfeld_element(const HopfGAlgebra& h) {
  const GroupElement one = h.group().identity();
  const GradedTensor r = h.rmatrix();
  GradedVector u = h.zero(one);
  GradedVector ui = h.zero(one);
  for (const auto& [idx, c] : r.entries) {
    const auto a = h.basis(one, idx[0]);
    const auto b = h.basis(one, idx[1]);
    axpy(u.entries, c, graded_multiply(h, apply_antipode(h, b), a).entries);
    axpy(ui.entries, c, graded_multiply(h, b, apply_antipode(h, apply_antipode(h, a))).entries);
  }
  auto fail = [](const std::string& what) { throw AlgebraError("ribbon certification failed: " + what); };
  const auto unit = h.unit();
  if (graded_multiply(h, u, ui) != unit || graded_multiply(h, ui, u) != unit) fail("u u^{-1} = 1");
  for (std::size_t i = 0; i < h.dim(one); ++i) {
    const auto x = h.basis(one, i);
    if (graded_multiply(h, u, x) != graded_multiply(h, x, u)) fail("u central (e" + std::to_string(i) + ")");
  }
  if (apply_antipode(h, u) != u) fail("S(u) = u");
  if (eval_counit(h, u) != CycloScalar(1)) fail("eps(u) = 1");
  const auto r21r = tensor_multiply(h, permute_factors(r, {1, 0}), r);
  if (tensor_multiply(h, apply_coproduct_power(h, u, 2), r21r) != tensor_product(as_tensor(u), as_tensor(u))) {
    fail("Delta(u) R21 R = u (x) u");
  }
  return {u, ui};
}

}  // namespace hennings
