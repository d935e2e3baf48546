// Finite type Hopf G-algebras stored as structure constants.
//
// Every grade H_alpha carries a fixed basis 0..dim-1. Structure maps are
// stored densely indexed by basis tuples and sparsely valued: each basis
// tuple maps to a sparse vector (or tensor) over exact cyclotomic scalars.
#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hennings/cyclo.hpp"
#include "hennings/group.hpp"

namespace hennings {

/// Structural problems with algebra data, and grading mismatches.
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using IndexTuple = std::vector<std::size_t>;
/// basis index -> coefficient; zero coefficients are never stored.
using SparseVec = std::map<std::size_t, CycloScalar>;
/// basis tuple -> coefficient; zero coefficients are never stored.
using SparseTensor = std::map<IndexTuple, CycloScalar>;

/// Adds c * v into acc, dropping entries that cancel.
void axpy(SparseVec& acc, const CycloScalar& c, const SparseVec& v);
void add_entry(SparseVec& acc, std::size_t index, const CycloScalar& c);
void add_entry(SparseTensor& acc, const IndexTuple& index, const CycloScalar& c);

struct GradedVector {
  GroupElement grade;
  SparseVec entries;
  friend bool operator==(const GradedVector&, const GradedVector&) = default;
};

struct GradedTensor {
  std::vector<GroupElement> grades;
  SparseTensor entries;
  std::size_t arity() const { return grades.size(); }
  friend bool operator==(const GradedTensor&, const GradedTensor&) = default;
};

std::string format_vector(const SparseVec& v);
std::string format_tensor(const SparseTensor& t);

/// Raw structure constants. Indexing conventions, with n = |G|:
///   product[a*n + b][i*dim(b) + j]  = e_i * e_j        in H_{ab}
///   coproduct[a][i]                 = Delta_a(e_i)      in H_a (x) H_a
///   counit[a][i]                    = eps_a(e_i)
///   antipode[a][i]                  = S_a(e_i)          in H_{a^-1}
///   crossing[b*n + a][i]            = phi_b^a(e_i)      in H_{b a b^-1}
///   rmatrix                         = R                 in H_1 (x) H_1
struct HopfGAlgebraData {
  FiniteGroup group = cyclic_group(1);
  unsigned conductor = 1;
  std::vector<std::size_t> dims;
  std::vector<std::vector<SparseVec>> product;
  SparseVec unit;
  std::vector<std::vector<SparseTensor>> coproduct;
  std::vector<std::vector<CycloScalar>> counit;
  std::vector<std::vector<SparseVec>> antipode;
  std::vector<std::vector<SparseVec>> crossing;
  SparseTensor rmatrix;
  friend bool operator==(const HopfGAlgebraData&, const HopfGAlgebraData&) = default;
};

class HopfGAlgebra {
 public:
  /// Checks shapes, index ranges, conductor membership of every scalar, and
  /// that the grades of nonzero dimension form a subgroup. Throws AlgebraError.
  explicit HopfGAlgebra(HopfGAlgebraData data);

  const HopfGAlgebraData& data() const { return data_; }
  const FiniteGroup& group() const { return data_.group; }
  unsigned conductor() const { return data_.conductor; }
  std::size_t dim(GroupElement a) const { return data_.dims[a.index]; }
  /// Grades with nonzero dimension.
  std::vector<GroupElement> support() const;

  const SparseVec& mul_basis(GroupElement a, GroupElement b, std::size_t i, std::size_t j) const {
    return data_.product[a.index * order() + b.index][i * dim(b) + j];
  }
  const SparseTensor& coproduct_basis(GroupElement a, std::size_t i) const { return data_.coproduct[a.index][i]; }
  const CycloScalar& counit_basis(GroupElement a, std::size_t i) const { return data_.counit[a.index][i]; }
  const SparseVec& antipode_basis(GroupElement a, std::size_t i) const { return data_.antipode[a.index][i]; }
  const SparseVec& crossing_basis(GroupElement by, GroupElement a, std::size_t i) const {
    return data_.crossing[by.index * order() + a.index][i];
  }

  GradedVector unit() const { return {group().identity(), data_.unit}; }
  GradedVector basis(GroupElement a, std::size_t i) const;
  GradedVector zero(GroupElement a) const { return {a, {}}; }
  GradedTensor rmatrix() const;
  /// (S_1 (x) id)(R), the inverse of R.
  GradedTensor rmatrix_inverse() const;

 private:
  std::size_t order() const { return data_.group.order(); }
  HopfGAlgebraData data_;
};

// --- structure maps on vectors -------------------------------------------

GradedVector graded_multiply(const HopfGAlgebra& h, const GradedVector& x, const GradedVector& y);
GradedVector apply_antipode(const HopfGAlgebra& h, const GradedVector& x);
GradedVector apply_crossing(const HopfGAlgebra& h, GroupElement by, const GradedVector& x);
CycloScalar eval_counit(const HopfGAlgebra& h, const GradedVector& x);
/// Iterated coproduct with k tensor factors; k = 1 returns x as a 1-tensor.
GradedTensor apply_coproduct_power(const HopfGAlgebra& h, const GradedVector& x, std::size_t k);

GradedVector scale(const GradedVector& x, const CycloScalar& c);
GradedVector add(const GradedVector& x, const GradedVector& y);

// --- tensor utilities ----------------------------------------------------

GradedTensor as_tensor(const GradedVector& x);
GradedTensor tensor_product(const GradedTensor& a, const GradedTensor& b);
/// Factor f of the result is factor perm[f] of t.
GradedTensor permute_factors(const GradedTensor& t, const std::vector<std::size_t>& perm);
/// Factorwise product (a_1 b_1) (x) ... (x) (a_n b_n).
GradedTensor tensor_multiply(const HopfGAlgebra& h, const GradedTensor& a, const GradedTensor& b);
GradedTensor antipode_on_factor(const HopfGAlgebra& h, const GradedTensor& t, std::size_t factor);
GradedTensor crossing_on_factor(const HopfGAlgebra& h, GroupElement by, const GradedTensor& t, std::size_t factor);
/// Replaces factor f by its coproduct (arity grows by one).
GradedTensor coproduct_on_factor(const HopfGAlgebra& h, const GradedTensor& t, std::size_t factor);
/// Applies the counit to factor f (arity shrinks by one).
GradedTensor counit_on_factor(const HopfGAlgebra& h, const GradedTensor& t, std::size_t factor);
/// Multiplies factors f and f+1 together (arity shrinks by one).
GradedTensor multiply_adjacent(const HopfGAlgebra& h, const GradedTensor& t, std::size_t factor);
GradedTensor scale(const GradedTensor& t, const CycloScalar& c);

}  // namespace hennings
