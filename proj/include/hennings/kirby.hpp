// Combinatorial Kirby diagrams: dotted circles (1-handles) and undotted
// framed components (2-handles), their fundamental group presentations,
// G-colorings and a rewrite engine for the diagram moves.
#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "hennings/group.hpp"

namespace hennings {

class KirbyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by color() when a homomorphism violates a relation.
class ColoringError : public KirbyError {
 public:
  using KirbyError::KirbyError;
};

/// Raised by apply_move() when the named site does not match the pattern.
class MoveNotApplicable : public KirbyError {
 public:
  using KirbyError::KirbyError;
};

enum class Direction { Down, Up };
enum class Role { Over, Under };
enum class Sign { Positive, Negative };

inline Direction flip(Direction d) { return d == Direction::Down ? Direction::Up : Direction::Down; }
inline Role flip(Role r) { return r == Role::Over ? Role::Under : Role::Over; }
inline Sign flip(Sign s) { return s == Sign::Positive ? Sign::Negative : Sign::Positive; }

struct DotPassage {
  std::size_t dot = 0;
  Direction dir = Direction::Down;
  friend bool operator==(const DotPassage&, const DotPassage&) = default;
};

struct CrossingEnd {
  std::size_t crossing = 0;
  Role role = Role::Over;
  friend bool operator==(const CrossingEnd&, const CrossingEnd&) = default;
};

using Event = std::variant<DotPassage, CrossingEnd>;

struct PassageRef {
  std::size_t component = 0;
  std::size_t position = 0;
  friend bool operator==(const PassageRef&, const PassageRef&) = default;
};

struct DottedComponent {
  std::size_t id = 0;
  /// Left to right across the spanning disk.
  std::vector<PassageRef> passages;
  friend bool operator==(const DottedComponent&, const DottedComponent&) = default;
};

struct UndottedComponent {
  std::size_t id = 0;
  /// Cyclic traversal order along the chosen orientation.
  std::vector<Event> events;
  friend bool operator==(const UndottedComponent&, const UndottedComponent&) = default;
};

struct Crossing {
  std::size_t id = 0;
  Sign sign = Sign::Positive;
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct KirbyDiagram {
  std::vector<DottedComponent> dotted;
  std::vector<UndottedComponent> undotted;
  std::vector<Crossing> crossings;
  std::size_t h3 = 0;
  std::size_t h4 = 0;
  friend bool operator==(const KirbyDiagram&, const KirbyDiagram&) = default;
};

struct ValidationReport {
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

/// Referential integrity: dense ids, every crossing used once as Over and
/// once as Under, every dot passage listed exactly once by its own dot.
ValidationReport validate(const KirbyDiagram& d);

/// One generator per dot; one relation per undotted component recording s_i
/// for a Down passage and s_i^-1 for an Up passage.
Presentation fundamental_presentation(const KirbyDiagram& d);

struct ColoredDiagram {
  KirbyDiagram diagram;
  /// colors[i] is the color of dot i.
  std::vector<GroupElement> colors;
  friend bool operator==(const ColoredDiagram&, const ColoredDiagram&) = default;
};

/// Throws ColoringError naming the first undotted component whose relation
/// does not evaluate to the identity.
ColoredDiagram color(const KirbyDiagram& d, const FiniteGroup& g, const GroupHom& hom);

/// Reverses the orientation of one undotted component: events reversed,
/// Down and Up swapped, and the sign of every crossing with a different
/// component flipped. Self-crossings keep their sign.
ColoredDiagram reorient(const ColoredDiagram& cd, std::size_t component);

/// Moves the first `shift` events of a component to its end.
ColoredDiagram rotate(const ColoredDiagram& cd, std::size_t component, std::size_t shift);

/// Side by side placement; ids of b are shifted past those of a.
KirbyDiagram disjoint_union(const KirbyDiagram& a, const KirbyDiagram& b);
ColoredDiagram disjoint_union(const ColoredDiagram& a, const ColoredDiagram& b);
GroupHom disjoint_union(const GroupHom& a, const GroupHom& b);

/// cp2, cp2bar, s2xs2, s1xs3, s1xs1xs2, s4 and connected-sum:A,B.
KirbyDiagram builtin_diagram(const std::string& name);
bool is_builtin_diagram_name(const std::string& name);
std::vector<std::string> builtin_diagram_names();

/// Closure of a braid on `strands` strands. Letter +i (1-based) is a positive
/// crossing of positions i and i+1, letter -i a negative one.
KirbyDiagram braid_closure(std::size_t strands, const std::vector<int>& word);

// --- moves ---------------------------------------------------------------

namespace moves {

/// I-2: two crossings of opposite signs where one strand passes over
/// another twice. Positions are insertion points in the original lists.
struct R2Insert {
  std::size_t over_component = 0;
  std::size_t over_position = 0;
  std::size_t under_component = 0;
  std::size_t under_position = 0;
  Sign first_sign = Sign::Positive;
  bool parallel = true;
};
struct R2Remove {
  std::size_t first = 0;
  std::size_t second = 0;
};
/// I-3: slide a strand across the crossing of two others.
struct R3 {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t c = 0;
};
/// I-5: a curl whose two ends are adjacent changes which end is on top; it
/// may also travel to another point of its component.
struct CurlTransfer {
  std::size_t crossing = 0;
  std::optional<std::size_t> to_position;
};
/// II-1: a finger of a strand pushed through a dot, or its removal.
struct FingerInsert {
  std::size_t component = 0;
  std::size_t position = 0;
  std::size_t dot = 0;
  std::size_t dot_position = 0;
  Direction first = Direction::Down;
  bool first_left = true;
};
struct FingerRemove {
  std::size_t component = 0;
  std::size_t position = 0;
};
/// II-5: turn a dot upside down; its color is inverted.
struct DotReverse {
  std::size_t dot = 0;
};
/// II-6: a small dot whose strands all run through a block of a large dot
/// moves to the other side of it; its color is conjugated.
struct DotSlide {
  std::size_t small = 0;
  std::size_t large = 0;
};
/// III-1: slide the 1-handle `moving` over the 1-handle `over`.
struct HandleSlide {
  std::size_t moving = 0;
  std::size_t over = 0;
  std::size_t position = 0;
};
struct HandleUnslide {
  std::size_t moving = 0;
  std::size_t over = 0;
};
/// III-4: a dot with a single unknotted strand through it.
struct CancelPairInsert {
  Direction dir = Direction::Down;
};
struct CancelPairDelete {
  std::size_t dot = 0;
};
/// III-5: a split unknot cancelling against a 3-handle.
struct UnknotInsert {};
struct UnknotDelete {
  std::size_t component = 0;
};
/// Replace every color a by b a b^-1.
struct GlobalConjugate {
  GroupElement by;
};
struct Reorient {
  std::size_t component = 0;
};
struct Rotate {
  std::size_t component = 0;
  std::size_t shift = 0;
};

}  // namespace moves

using MoveSpec =
    std::variant<moves::R2Insert, moves::R2Remove, moves::R3, moves::CurlTransfer, moves::FingerInsert,
                 moves::FingerRemove, moves::DotReverse, moves::DotSlide, moves::HandleSlide, moves::HandleUnslide,
                 moves::CancelPairInsert, moves::CancelPairDelete, moves::UnknotInsert, moves::UnknotDelete,
                 moves::GlobalConjugate, moves::Reorient, moves::Rotate>;

/// Short label such as "I-2" or "GlobalConjugate".
std::string move_name(const MoveSpec& m);
/// Human readable form including parameters.
std::string describe(const MoveSpec& m, const FiniteGroup& g);

/// Rewrites the diagram; throws MoveNotApplicable on a pattern mismatch.
/// Surviving dots, components and crossings keep their relative order;
/// new ones are appended.
ColoredDiagram apply_move(const FiniteGroup& g, const ColoredDiagram& cd, const MoveSpec& m);

/// Every applicable removal and local move, plus insertion moves at every
/// site, in a fixed order. Used by the invariance fuzzers.
std::vector<MoveSpec> enumerate_moves(const FiniteGroup& g, const ColoredDiagram& cd);

}  // namespace hennings
