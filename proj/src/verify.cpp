#include "hennings/verify.hpp"

#include <sstream>

namespace hennings {

namespace {

std::string render(const CycloScalar& c) { return c.to_string(); }
std::string render(const GradedVector& v) { return format_vector(v.entries); }
std::string render(const GradedTensor& t) { return format_tensor(t.entries); }

class Check {
 public:
  explicit Check(std::string name) { result_.name = std::move(name); }

  bool failed() const { return !result_.passed; }

  template <typename T>
  void expect(const T& lhs, const T& rhs, const std::string& where) {
    if (failed() || lhs == rhs) return;
    result_.passed = false;
    result_.witness = where + ": lhs = " + render(lhs) + ", rhs = " + render(rhs);
  }

  AxiomResult result() const { return result_; }

 private:
  AxiomResult result_;
};

class Verifier {
 public:
  explicit Verifier(const HopfGAlgebra& h) : h_(h), g_(h.group()) {}

  AxiomReport run() {
    AxiomReport report;
    auto add = [&](const Check& c) { report.results.push_back(c.result()); };
    add(hg1());
    add(hg2());
    add(hg3());
    add(hg4());
    add(hg5());
    add(hg6());
    add(hg7());
    add(hg8());
    add(hg9());
    add(involutive());
    add(chg1());
    add(chg2());
    add(chg3());
    add(chg4());
    add(qhg1());
    add(qhg2());
    add(qhg3());
    add(qhg4());
    add(qyb());
    add(r_inverse());
    return report;
  }

 private:
  std::string nm(GroupElement a) const { return g_.name(a); }
  GradedVector e(GroupElement a, std::size_t i) const { return h_.basis(a, i); }
  GradedTensor delta(GroupElement a, std::size_t i) const { return {{a, a}, h_.coproduct_basis(a, i)}; }
  GradedTensor unit2() const { return tensor_product(as_tensor(h_.unit()), as_tensor(h_.unit())); }
  GradedTensor r12() const { return tensor_product(h_.rmatrix(), as_tensor(h_.unit())); }
  GradedTensor r23() const { return tensor_product(as_tensor(h_.unit()), h_.rmatrix()); }
  GradedTensor r13() const { return permute_factors(r12(), {0, 2, 1}); }

  Check hg1() const {
    Check c("HG1");
    for (auto a : g_.elements())
      for (auto b : g_.elements())
        for (auto d : g_.elements())
          for (std::size_t i = 0; i < h_.dim(a) && !c.failed(); ++i)
            for (std::size_t j = 0; j < h_.dim(b); ++j)
              for (std::size_t k = 0; k < h_.dim(d); ++k) {
                const auto lhs = graded_multiply(h_, graded_multiply(h_, e(a, i), e(b, j)), e(d, k));
                const auto rhs = graded_multiply(h_, e(a, i), graded_multiply(h_, e(b, j), e(d, k)));
                c.expect(lhs, rhs,
                         "(e" + std::to_string(i) + "@" + nm(a) + " * e" + std::to_string(j) + "@" + nm(b) + ") * e" +
                             std::to_string(k) + "@" + nm(d));
              }
    return c;
  }

  Check hg2() const {
    Check c("HG2");
    for (auto a : g_.elements())
      for (std::size_t i = 0; i < h_.dim(a); ++i) {
        const std::string w = "e" + std::to_string(i) + "@" + nm(a);
        c.expect(graded_multiply(h_, h_.unit(), e(a, i)), e(a, i), "1 * " + w);
        c.expect(graded_multiply(h_, e(a, i), h_.unit()), e(a, i), w + " * 1");
      }
    return c;
  }

  Check hg3() const {
    Check c("HG3");
    for (auto a : g_.elements())
      for (std::size_t i = 0; i < h_.dim(a); ++i) {
        const auto t = delta(a, i);
        c.expect(coproduct_on_factor(h_, t, 0), coproduct_on_factor(h_, t, 1),
                 "coassociativity at e" + std::to_string(i) + "@" + nm(a));
      }
    return c;
  }

  Check hg4() const {
    Check c("HG4");
    for (auto a : g_.elements())
      for (std::size_t i = 0; i < h_.dim(a); ++i) {
        const auto t = delta(a, i);
        const std::string w = "e" + std::to_string(i) + "@" + nm(a);
        c.expect(counit_on_factor(h_, t, 0), as_tensor(e(a, i)), "(eps (x) id) Delta " + w);
        c.expect(counit_on_factor(h_, t, 1), as_tensor(e(a, i)), "(id (x) eps) Delta " + w);
      }
    return c;
  }

  Check hg5() const {
    Check c("HG5");
    for (auto a : g_.elements())
      for (auto b : g_.elements())
        for (std::size_t i = 0; i < h_.dim(a) && !c.failed(); ++i)
          for (std::size_t j = 0; j < h_.dim(b); ++j) {
            const auto lhs = apply_coproduct_power(h_, graded_multiply(h_, e(a, i), e(b, j)), 2);
            const auto rhs = tensor_multiply(h_, delta(a, i), delta(b, j));
            c.expect(lhs, rhs, "Delta(e" + std::to_string(i) + "@" + nm(a) + " * e" + std::to_string(j) + "@" + nm(b) + ")");
          }
    return c;
  }

  Check hg6() const {
    Check c("HG6");
    for (auto a : g_.elements())
      for (auto b : g_.elements())
        for (std::size_t i = 0; i < h_.dim(a); ++i)
          for (std::size_t j = 0; j < h_.dim(b); ++j) {
            c.expect(eval_counit(h_, graded_multiply(h_, e(a, i), e(b, j))),
                     h_.counit_basis(a, i) * h_.counit_basis(b, j),
                     "eps(e" + std::to_string(i) + "@" + nm(a) + " * e" + std::to_string(j) + "@" + nm(b) + ")");
          }
    return c;
  }

  Check hg7() const {
    Check c("HG7");
    c.expect(apply_coproduct_power(h_, h_.unit(), 2), unit2(), "Delta(1)");
    return c;
  }

  Check hg8() const {
    Check c("HG8");
    c.expect(eval_counit(h_, h_.unit()), CycloScalar(1), "eps(1)");
    return c;
  }

  Check hg9() const {
    Check c("HG9");
    for (auto a : g_.elements())
      for (std::size_t i = 0; i < h_.dim(a); ++i) {
        const auto t = delta(a, i);
        const auto rhs = as_tensor(scale(h_.unit(), h_.counit_basis(a, i)));
        const std::string w = "e" + std::to_string(i) + "@" + nm(a);
        c.expect(multiply_adjacent(h_, antipode_on_factor(h_, t, 0), 0), rhs, "S(x(1)) x(2) at " + w);
        c.expect(multiply_adjacent(h_, antipode_on_factor(h_, t, 1), 0), rhs, "x(1) S(x(2)) at " + w);
      }
    return c;
  }

  Check involutive() const {
    Check c("involutive");
    for (auto a : g_.elements())
      for (std::size_t i = 0; i < h_.dim(a); ++i) {
        c.expect(apply_antipode(h_, apply_antipode(h_, e(a, i))), e(a, i),
                 "S(S(e" + std::to_string(i) + "@" + nm(a) + "))");
      }
    return c;
  }

  Check chg1() const {
    Check c("CHG1");
    for (auto b : g_.elements())
      for (auto a : g_.elements())
        for (std::size_t i = 0; i < h_.dim(a); ++i) {
          const std::string w = "phi_" + nm(b) + "(e" + std::to_string(i) + "@" + nm(a) + ")";
          const auto x = e(a, i);
          const auto fx = apply_crossing(h_, b, x);
          const auto lhs = crossing_on_factor(h_, b, crossing_on_factor(h_, b, delta(a, i), 0), 1);
          c.expect(lhs, apply_coproduct_power(h_, fx, 2), "coproduct of " + w);
          c.expect(eval_counit(h_, fx), h_.counit_basis(a, i), "counit of " + w);
          c.expect(apply_crossing(h_, g_.inv(b), fx), x, "inverse crossing after " + w);
        }
    return c;
  }

  Check chg2() const {
    Check c("CHG2");
    for (auto b : g_.elements())
      for (auto a : g_.elements())
        for (auto d : g_.elements())
          for (std::size_t i = 0; i < h_.dim(a) && !c.failed(); ++i)
            for (std::size_t j = 0; j < h_.dim(d); ++j) {
              const auto x = e(a, i);
              const auto y = e(d, j);
              c.expect(graded_multiply(h_, apply_crossing(h_, b, x), apply_crossing(h_, b, y)),
                       apply_crossing(h_, b, graded_multiply(h_, x, y)),
                       "phi_" + nm(b) + " on e" + std::to_string(i) + "@" + nm(a) + " * e" + std::to_string(j) + "@" +
                           nm(d));
            }
    return c;
  }

  Check chg3() const {
    Check c("CHG3");
    for (auto b : g_.elements()) c.expect(apply_crossing(h_, b, h_.unit()), h_.unit(), "phi_" + nm(b) + "(1)");
    return c;
  }

  Check chg4() const {
    Check c("CHG4");
    for (auto a : g_.elements())
      for (std::size_t i = 0; i < h_.dim(a); ++i)
        c.expect(apply_crossing(h_, g_.identity(), e(a, i)), e(a, i),
                 "phi_1(e" + std::to_string(i) + "@" + nm(a) + ")");
    for (auto b : g_.elements())
      for (auto b2 : g_.elements())
        for (auto a : g_.elements())
          for (std::size_t i = 0; i < h_.dim(a); ++i) {
            const auto x = e(a, i);
            c.expect(apply_crossing(h_, g_.mul(b, b2), x), apply_crossing(h_, b, apply_crossing(h_, b2, x)),
                     "phi_{" + nm(b) + " " + nm(b2) + "}(e" + std::to_string(i) + "@" + nm(a) + ")");
          }
    return c;
  }

  Check qhg1() const {
    Check c("QHG1");
    c.expect(coproduct_on_factor(h_, h_.rmatrix(), 0), tensor_multiply(h_, r13(), r23()), "(Delta (x) id)(R)");
    return c;
  }

  Check qhg2() const {
    Check c("QHG2");
    c.expect(coproduct_on_factor(h_, h_.rmatrix(), 1), tensor_multiply(h_, r13(), r12()), "(id (x) Delta)(R)");
    return c;
  }

  Check qhg3() const {
    Check c("QHG3");
    const auto r = h_.rmatrix();
    for (auto a : g_.elements())
      for (std::size_t i = 0; i < h_.dim(a); ++i) {
        const auto t = delta(a, i);
        c.expect(tensor_multiply(h_, r, t), tensor_multiply(h_, permute_factors(t, {1, 0}), r),
                 "R Delta(e" + std::to_string(i) + "@" + nm(a) + ")");
      }
    return c;
  }

  Check qhg4() const {
    Check c("QHG4");
    const auto r = h_.rmatrix();
    for (auto b : g_.elements())
      c.expect(crossing_on_factor(h_, b, crossing_on_factor(h_, b, r, 0), 1), r, "(phi_" + nm(b) + " (x) phi)(R)");
    return c;
  }

  Check qyb() const {
    Check c("QYB");
    const auto lhs = tensor_multiply(h_, tensor_multiply(h_, r12(), r13()), r23());
    const auto rhs = tensor_multiply(h_, tensor_multiply(h_, r23(), r13()), r12());
    c.expect(lhs, rhs, "R12 R13 R23");
    return c;
  }

  Check r_inverse() const {
    Check c("R-inverse");
    const auto r = h_.rmatrix();
    const auto ri = h_.rmatrix_inverse();
    c.expect(tensor_multiply(h_, ri, r), unit2(), "(S (x) id)(R) R");
    c.expect(tensor_multiply(h_, r, ri), unit2(), "R (S (x) id)(R)");
    return c;
  }

  const HopfGAlgebra& h_;
  const FiniteGroup& g_;
};

}  // namespace

bool AxiomReport::all_passed() const {
  for (const auto& r : results) {
    if (!r.passed) return false;
  }
  return true;
}

const AxiomResult* AxiomReport::find(const std::string& name) const {
  for (const auto& r : results) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

AxiomReport verify_axioms(const HopfGAlgebra& h) { return Verifier(h).run(); }

std::string format_report(const AxiomReport& report) {
  std::ostringstream os;
  for (const auto& r : report.results) {
    os << (r.passed ? "pass " : "FAIL ") << r.name;
    if (!r.passed) os << "  " << r.witness;
    os << "\n";
  }
  return os.str();
}

}  // namespace hennings
