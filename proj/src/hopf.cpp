#include "hennings/hopf.hpp"

#include <functional>
#include <set>
#include <sstream>

namespace hennings {

void add_entry(SparseVec& acc, std::size_t index, const CycloScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc.try_emplace(index, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

void add_entry(SparseTensor& acc, const IndexTuple& index, const CycloScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc.try_emplace(index, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

void axpy(SparseVec& acc, const CycloScalar& c, const SparseVec& v) {
  if (c.is_zero()) return;
  for (const auto& [i, x] : v) add_entry(acc, i, c * x);
}

std::string format_vector(const SparseVec& v) {
  if (v.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : v) {
    os << (first ? "" : " + ") << "(" << c << ")e" << i;
    first = false;
  }
  return os.str();
}

std::string format_tensor(const SparseTensor& t) {
  if (t.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, c] : t) {
    os << (first ? "" : " + ") << "(" << c << ")e";
    for (std::size_t f = 0; f < idx.size(); ++f) os << (f ? "," : "") << idx[f];
    first = false;
  }
  return os.str();
}

namespace {

void strip_zeros(SparseVec& v) { std::erase_if(v, [](const auto& kv) { return kv.second.is_zero(); }); }
void strip_zeros(SparseTensor& t) { std::erase_if(t, [](const auto& kv) { return kv.second.is_zero(); }); }

void check_scalar(const CycloScalar& c, unsigned conductor, const std::string& where) {
  if (conductor % c.conductor() != 0) {
    throw AlgebraError(where + ": scalar " + c.to_string() + " lies outside Q(zeta_" + std::to_string(conductor) +
                       ")");
  }
}

void check_vec(const SparseVec& v, std::size_t dim, unsigned conductor, const std::string& where) {
  for (const auto& [i, c] : v) {
    if (i >= dim) {
      throw AlgebraError(where + ": basis index " + std::to_string(i) + " out of range (dim " + std::to_string(dim) +
                         ")");
    }
    check_scalar(c, conductor, where);
  }
}

void check_tensor(const SparseTensor& t, const std::vector<std::size_t>& dims, unsigned conductor,
                  const std::string& where) {
  for (const auto& [idx, c] : t) {
    if (idx.size() != dims.size()) {
      throw AlgebraError(where + ": tensor entry has arity " + std::to_string(idx.size()) + ", expected " +
                         std::to_string(dims.size()));
    }
    for (std::size_t f = 0; f < idx.size(); ++f) {
      if (idx[f] >= dims[f]) {
        throw AlgebraError(where + ": index " + std::to_string(idx[f]) + " out of range in factor " +
                           std::to_string(f));
      }
    }
    check_scalar(c, conductor, where);
  }
}

template <typename T>
void check_size(const std::vector<T>& v, std::size_t n, const std::string& what) {
  if (v.size() != n) {
    throw AlgebraError(what + " has " + std::to_string(v.size()) + " entries, expected " + std::to_string(n));
  }
}

std::string grade_label(const FiniteGroup& g, GroupElement a) { return "grade " + g.name(a); }

// Applies a basis-level linear map to one factor of a tensor.
GradedTensor map_factor(const GradedTensor& t, std::size_t factor, GroupElement target,
                        const std::function<const SparseVec&(std::size_t)>& image) {
  GradedTensor out{t.grades, {}};
  out.grades.at(factor) = target;
  for (const auto& [idx, c] : t.entries) {
    for (const auto& [j, d] : image(idx[factor])) {
      IndexTuple k = idx;
      k[factor] = j;
      add_entry(out.entries, k, c * d);
    }
  }
  return out;
}

}  // namespace

HopfGAlgebra::HopfGAlgebra(HopfGAlgebraData data) : data_(std::move(data)) {
  const FiniteGroup& g = data_.group;
  const std::size_t n = g.order();
  const unsigned cond = data_.conductor;
  if (cond == 0) throw AlgebraError("conductor must be positive");
  check_size(data_.dims, n, "dims");
  const GroupElement one = g.identity();
  if (dim(one) == 0) throw AlgebraError("the identity grade H_1 must be nonzero");

  check_size(data_.product, n * n, "product");
  for (const GroupElement a : g.elements()) {
    for (const GroupElement b : g.elements()) {
      auto& block = data_.product[a.index * n + b.index];
      const std::string where = "product (" + g.name(a) + ", " + g.name(b) + ")";
      check_size(block, dim(a) * dim(b), where);
      for (auto& v : block) {
        strip_zeros(v);
        check_vec(v, dim(g.mul(a, b)), cond, where);
      }
    }
  }
  strip_zeros(data_.unit);
  check_vec(data_.unit, dim(one), cond, "unit");

  check_size(data_.coproduct, n, "coproduct");
  check_size(data_.counit, n, "counit");
  check_size(data_.antipode, n, "antipode");
  for (const GroupElement a : g.elements()) {
    const std::string lbl = grade_label(g, a);
    check_size(data_.coproduct[a.index], dim(a), "coproduct " + lbl);
    for (auto& t : data_.coproduct[a.index]) {
      strip_zeros(t);
      check_tensor(t, {dim(a), dim(a)}, cond, "coproduct " + lbl);
    }
    check_size(data_.counit[a.index], dim(a), "counit " + lbl);
    for (const auto& c : data_.counit[a.index]) check_scalar(c, cond, "counit " + lbl);
    check_size(data_.antipode[a.index], dim(a), "antipode " + lbl);
    for (auto& v : data_.antipode[a.index]) {
      strip_zeros(v);
      check_vec(v, dim(g.inv(a)), cond, "antipode " + lbl);
    }
  }

  check_size(data_.crossing, n * n, "crossing");
  for (const GroupElement b : g.elements()) {
    for (const GroupElement a : g.elements()) {
      auto& block = data_.crossing[b.index * n + a.index];
      const std::string where = "crossing (" + g.name(b) + ", " + g.name(a) + ")";
      check_size(block, dim(a), where);
      for (auto& v : block) {
        strip_zeros(v);
        check_vec(v, dim(g.conjugate(b, a)), cond, where);
      }
    }
  }
  strip_zeros(data_.rmatrix);
  check_tensor(data_.rmatrix, {dim(one), dim(one)}, cond, "rmatrix");

  for (const GroupElement a : support()) {
    if (dim(g.inv(a)) == 0) {
      throw AlgebraError("support is not a subgroup: H_" + g.name(a) + " is nonzero but its inverse grade is zero");
    }
    for (const GroupElement b : support()) {
      if (dim(g.mul(a, b)) == 0) {
        throw AlgebraError("support is not a subgroup: H_" + g.name(a) + " and H_" + g.name(b) +
                           " are nonzero but their product grade is zero");
      }
    }
  }
}

std::vector<GroupElement> HopfGAlgebra::support() const {
  std::vector<GroupElement> out;
  for (const GroupElement a : group().elements()) {
    if (dim(a) > 0) out.push_back(a);
  }
  return out;
}

GradedVector HopfGAlgebra::basis(GroupElement a, std::size_t i) const {
  if (i >= dim(a)) throw AlgebraError("basis index out of range");
  return {a, {{i, CycloScalar(1)}}};
}

GradedTensor HopfGAlgebra::rmatrix() const {
  const GroupElement one = group().identity();
  return {{one, one}, data_.rmatrix};
}

GradedTensor HopfGAlgebra::rmatrix_inverse() const { return antipode_on_factor(*this, rmatrix(), 0); }

GradedVector graded_multiply(const HopfGAlgebra& h, const GradedVector& x, const GradedVector& y) {
  GradedVector out{h.group().mul(x.grade, y.grade), {}};
  for (const auto& [i, a] : x.entries) {
    for (const auto& [j, b] : y.entries) axpy(out.entries, a * b, h.mul_basis(x.grade, y.grade, i, j));
  }
  return out;
}

GradedVector apply_antipode(const HopfGAlgebra& h, const GradedVector& x) {
  GradedVector out{h.group().inv(x.grade), {}};
  for (const auto& [i, a] : x.entries) axpy(out.entries, a, h.antipode_basis(x.grade, i));
  return out;
}

GradedVector apply_crossing(const HopfGAlgebra& h, GroupElement by, const GradedVector& x) {
  GradedVector out{h.group().conjugate(by, x.grade), {}};
  for (const auto& [i, a] : x.entries) axpy(out.entries, a, h.crossing_basis(by, x.grade, i));
  return out;
}

CycloScalar eval_counit(const HopfGAlgebra& h, const GradedVector& x) {
  CycloScalar out;
  for (const auto& [i, a] : x.entries) out += a * h.counit_basis(x.grade, i);
  return out;
}

GradedTensor apply_coproduct_power(const HopfGAlgebra& h, const GradedVector& x, std::size_t k) {
  if (k == 0) throw AlgebraError("coproduct power needs at least one tensor factor");
  GradedTensor t = as_tensor(x);
  // Coassociativity: splitting the last factor repeatedly gives the same result
  // as any other bracketing.
  for (std::size_t f = 1; f < k; ++f) t = coproduct_on_factor(h, t, f - 1);
  return t;
}

GradedVector scale(const GradedVector& x, const CycloScalar& c) {
  GradedVector out{x.grade, {}};
  axpy(out.entries, c, x.entries);
  return out;
}

GradedVector add(const GradedVector& x, const GradedVector& y) {
  if (x.grade != y.grade) throw AlgebraError("cannot add vectors of different grades");
  GradedVector out = x;
  axpy(out.entries, CycloScalar(1), y.entries);
  return out;
}

GradedTensor as_tensor(const GradedVector& x) {
  GradedTensor t{{x.grade}, {}};
  for (const auto& [i, c] : x.entries) t.entries.emplace(IndexTuple{i}, c);
  return t;
}

GradedTensor tensor_product(const GradedTensor& a, const GradedTensor& b) {
  GradedTensor out{a.grades, {}};
  out.grades.insert(out.grades.end(), b.grades.begin(), b.grades.end());
  for (const auto& [ia, ca] : a.entries) {
    for (const auto& [ib, cb] : b.entries) {
      IndexTuple k = ia;
      k.insert(k.end(), ib.begin(), ib.end());
      add_entry(out.entries, k, ca * cb);
    }
  }
  return out;
}

GradedTensor permute_factors(const GradedTensor& t, const std::vector<std::size_t>& perm) {
  if (perm.size() != t.arity()) throw AlgebraError("permutation size does not match tensor arity");
  GradedTensor out;
  out.grades.resize(perm.size());
  for (std::size_t f = 0; f < perm.size(); ++f) out.grades[f] = t.grades.at(perm[f]);
  for (const auto& [idx, c] : t.entries) {
    IndexTuple k(perm.size());
    for (std::size_t f = 0; f < perm.size(); ++f) k[f] = idx[perm[f]];
    out.entries.emplace(std::move(k), c);
  }
  return out;
}

GradedTensor tensor_multiply(const HopfGAlgebra& h, const GradedTensor& a, const GradedTensor& b) {
  if (a.arity() != b.arity()) throw AlgebraError("tensor arities differ in factorwise product");
  const std::size_t n = a.arity();
  GradedTensor out;
  out.grades.resize(n);
  for (std::size_t f = 0; f < n; ++f) out.grades[f] = h.group().mul(a.grades[f], b.grades[f]);
  for (const auto& [ia, ca] : a.entries) {
    for (const auto& [ib, cb] : b.entries) {
      // expand the product of elementary tensors factor by factor
      SparseTensor partial{{IndexTuple{}, ca * cb}};
      for (std::size_t f = 0; f < n; ++f) {
        const SparseVec& prod = h.mul_basis(a.grades[f], b.grades[f], ia[f], ib[f]);
        SparseTensor next;
        for (const auto& [k, c] : partial) {
          for (const auto& [j, d] : prod) {
            IndexTuple kk = k;
            kk.push_back(j);
            add_entry(next, kk, c * d);
          }
        }
        partial = std::move(next);
        if (partial.empty()) break;
      }
      for (const auto& [k, c] : partial) add_entry(out.entries, k, c);
    }
  }
  return out;
}

GradedTensor antipode_on_factor(const HopfGAlgebra& h, const GradedTensor& t, std::size_t factor) {
  const GroupElement a = t.grades.at(factor);
  return map_factor(t, factor, h.group().inv(a), [&](std::size_t i) -> const SparseVec& { return h.antipode_basis(a, i); });
}

GradedTensor crossing_on_factor(const HopfGAlgebra& h, GroupElement by, const GradedTensor& t, std::size_t factor) {
  const GroupElement a = t.grades.at(factor);
  return map_factor(t, factor, h.group().conjugate(by, a),
                    [&](std::size_t i) -> const SparseVec& { return h.crossing_basis(by, a, i); });
}

GradedTensor coproduct_on_factor(const HopfGAlgebra& h, const GradedTensor& t, std::size_t factor) {
  const GroupElement a = t.grades.at(factor);
  GradedTensor out{t.grades, {}};
  out.grades.insert(out.grades.begin() + static_cast<long>(factor) + 1, a);
  for (const auto& [idx, c] : t.entries) {
    for (const auto& [pair, d] : h.coproduct_basis(a, idx[factor])) {
      IndexTuple k = idx;
      k[factor] = pair[0];
      k.insert(k.begin() + static_cast<long>(factor) + 1, pair[1]);
      add_entry(out.entries, k, c * d);
    }
  }
  return out;
}

GradedTensor counit_on_factor(const HopfGAlgebra& h, const GradedTensor& t, std::size_t factor) {
  const GroupElement a = t.grades.at(factor);
  GradedTensor out{t.grades, {}};
  out.grades.erase(out.grades.begin() + static_cast<long>(factor));
  for (const auto& [idx, c] : t.entries) {
    IndexTuple k = idx;
    k.erase(k.begin() + static_cast<long>(factor));
    add_entry(out.entries, k, c * h.counit_basis(a, idx[factor]));
  }
  return out;
}

GradedTensor multiply_adjacent(const HopfGAlgebra& h, const GradedTensor& t, std::size_t factor) {
  const GroupElement a = t.grades.at(factor);
  const GroupElement b = t.grades.at(factor + 1);
  GradedTensor out{t.grades, {}};
  out.grades[factor] = h.group().mul(a, b);
  out.grades.erase(out.grades.begin() + static_cast<long>(factor) + 1);
  for (const auto& [idx, c] : t.entries) {
    for (const auto& [j, d] : h.mul_basis(a, b, idx[factor], idx[factor + 1])) {
      IndexTuple k = idx;
      k[factor] = j;
      k.erase(k.begin() + static_cast<long>(factor) + 1);
      add_entry(out.entries, k, c * d);
    }
  }
  return out;
}

GradedTensor scale(const GradedTensor& t, const CycloScalar& c) {
  GradedTensor out{t.grades, {}};
  if (c.is_zero()) return out;
  for (const auto& [idx, x] : t.entries) out.entries.emplace(idx, x * c);
  return out;
}

}  // namespace hennings
