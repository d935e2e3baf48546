// Finite groups given by multiplication tables, finitely presented groups,
// and enumeration of homomorphisms from a presentation into a finite group.
#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hennings {

class GroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Index of an element in a FiniteGroup's table.
struct GroupElement {
  std::size_t index = 0;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

class FiniteGroup {
 public:
  /// Validates the table (entries in range, associativity, identity,
  /// inverses) and throws GroupError naming the first violation.
  static FiniteGroup from_table(std::vector<std::vector<std::size_t>> table,
                                std::vector<std::string> names = {});

  std::size_t order() const { return order_; }
  GroupElement identity() const { return {identity_}; }
  GroupElement mul(GroupElement a, GroupElement b) const { return {table_[a.index * order_ + b.index]}; }
  GroupElement inv(GroupElement a) const { return {inverses_[a.index]}; }
  GroupElement conjugate(GroupElement by, GroupElement a) const { return mul(mul(by, a), inv(by)); }
  GroupElement pow(GroupElement a, long n) const;
  std::size_t element_order(GroupElement a) const;
  bool is_identity(GroupElement a) const { return a.index == identity_; }
  bool is_abelian() const;

  const std::string& name(GroupElement a) const { return names_[a.index]; }
  const std::vector<std::string>& names() const { return names_; }
  /// Element with the given name, or with the given decimal index.
  GroupElement parse_element(const std::string& token) const;

  std::vector<GroupElement> elements() const;
  std::vector<std::vector<std::size_t>> table() const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.order_ == b.order_ && a.table_ == b.table_ && a.names_ == b.names_;
  }

 private:
  FiniteGroup() = default;

  std::size_t order_ = 0;
  std::size_t identity_ = 0;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> inverses_;
  std::vector<std::string> names_;
};

/// Z_k with elements a^0 .. a^{k-1}.
FiniteGroup cyclic_group(std::size_t k);
/// G x H; the element (g, h) has index g * |H| + h.
FiniteGroup product_group(const FiniteGroup& g, const FiniteGroup& h);
/// Symmetric group on n letters, elements in lexicographic order of
/// permutations (index 0 is the identity).
FiniteGroup symmetric_group(std::size_t n);

/// Named constructors: "cyclic:4", "symmetric:3",
/// "product:cyclic:2,cyclic:2".
FiniteGroup parse_group_name(const std::string& text);

// --- presentations -------------------------------------------------------

struct Letter {
  std::size_t generator = 0;
  bool inverse = false;
  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

struct Presentation {
  std::size_t num_generators = 0;
  std::vector<Word> relations;
  friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// "s1 s2 s1^-1 s2^-1"; the empty word renders as "1".
std::string format_word(const Word& w);
std::string format_presentation(const Presentation& p);

/// Images of the generators of a presentation.
struct GroupHom {
  std::vector<GroupElement> images;
  friend bool operator==(const GroupHom&, const GroupHom&) = default;
};

GroupElement evaluate_word(const FiniteGroup& g, const std::vector<GroupElement>& images, const Word& w);
bool satisfies(const FiniteGroup& g, const Presentation& p, const GroupHom& hom);

/// All homomorphisms, in lexicographic order of the image tuples
/// (generator 0 most significant).
std::vector<GroupHom> enumerate_homs(const Presentation& p, const FiniteGroup& g);

}  // namespace hennings
