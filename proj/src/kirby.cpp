#include "hennings/kirby.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

namespace hennings {

namespace {

std::string str(std::size_t x) { return std::to_string(x); }

}  // namespace

ValidationReport validate(const KirbyDiagram& d) {
  ValidationReport rep;
  auto problem = [&](std::string s) { rep.problems.push_back(std::move(s)); };
  for (std::size_t i = 0; i < d.dotted.size(); ++i)
    if (d.dotted[i].id != i) problem("dotted component at index " + str(i) + " has id " + str(d.dotted[i].id));
  for (std::size_t i = 0; i < d.undotted.size(); ++i)
    if (d.undotted[i].id != i) problem("undotted component at index " + str(i) + " has id " + str(d.undotted[i].id));
  for (std::size_t i = 0; i < d.crossings.size(); ++i)
    if (d.crossings[i].id != i) problem("crossing at index " + str(i) + " has id " + str(d.crossings[i].id));

  std::vector<int> over(d.crossings.size(), 0), under(d.crossings.size(), 0);
  // (component, position) -> how often a dot lists it
  std::map<std::pair<std::size_t, std::size_t>, int> listed;
  for (const auto& c : d.undotted) {
    for (std::size_t p = 0; p < c.events.size(); ++p) {
      const std::string where = "component " + str(c.id) + " event " + str(p);
      if (const auto* e = std::get_if<CrossingEnd>(&c.events[p])) {
        if (e->crossing >= d.crossings.size()) {
          problem(where + " names unknown crossing " + str(e->crossing));
          continue;
        }
        (e->role == Role::Over ? over : under)[e->crossing]++;
      } else {
        const auto& dp = std::get<DotPassage>(c.events[p]);
        if (dp.dot >= d.dotted.size()) problem(where + " names unknown dot " + str(dp.dot));
        listed[{c.id, p}] = 0;
      }
    }
  }
  for (std::size_t x = 0; x < d.crossings.size(); ++x) {
    if (over[x] != 1) problem("crossing " + str(x) + " has " + str(over[x]) + " over ends, expected 1");
    if (under[x] != 1) problem("crossing " + str(x) + " has " + str(under[x]) + " under ends, expected 1");
  }
  for (const auto& dot : d.dotted) {
    for (const auto& ref : dot.passages) {
      const std::string where = "dot " + str(dot.id) + " passage (" + str(ref.component) + ", " + str(ref.position) + ")";
      if (ref.component >= d.undotted.size() || ref.position >= d.undotted[ref.component].events.size()) {
        problem(where + " is out of range");
        continue;
      }
      const auto* dp = std::get_if<DotPassage>(&d.undotted[ref.component].events[ref.position]);
      if (dp == nullptr) {
        problem(where + " refers to a crossing end");
        continue;
      }
      if (dp->dot != dot.id) problem(where + " refers to a passage of dot " + str(dp->dot));
      listed[{ref.component, ref.position}]++;
    }
  }
  for (const auto& [key, count] : listed) {
    if (count != 1) {
      problem("dot passage at component " + str(key.first) + " event " + str(key.second) + " is listed " +
              str(static_cast<std::size_t>(count)) + " times by its dot, expected once");
    }
  }
  return rep;
}

Presentation fundamental_presentation(const KirbyDiagram& d) {
  Presentation p;
  p.num_generators = d.dotted.size();
  for (const auto& c : d.undotted) {
    Word w;
    for (const auto& e : c.events) {
      if (const auto* dp = std::get_if<DotPassage>(&e)) w.push_back({dp->dot, dp->dir == Direction::Up});
    }
    p.relations.push_back(std::move(w));
  }
  return p;
}

ColoredDiagram color(const KirbyDiagram& d, const FiniteGroup& g, const GroupHom& hom) {
  if (hom.images.size() != d.dotted.size()) {
    throw ColoringError("coloring has " + str(hom.images.size()) + " colors for " + str(d.dotted.size()) + " dots");
  }
  for (const auto& a : hom.images) {
    if (a.index >= g.order()) throw ColoringError("color index " + str(a.index) + " is not a group element");
  }
  const Presentation p = fundamental_presentation(d);
  for (std::size_t c = 0; c < p.relations.size(); ++c) {
    const GroupElement v = evaluate_word(g, hom.images, p.relations[c]);
    if (!g.is_identity(v)) {
      throw ColoringError("relation of undotted component " + str(c) + " (" + format_word(p.relations[c]) +
                          ") evaluates to " + g.name(v) + " instead of the identity");
    }
  }
  return {d, hom.images};
}

namespace {

// Editable form: every event carries a uid so that dot passage lists survive
// insertions and deletions.
struct Ev {
  bool is_dot = false;
  std::size_t target = 0;
  Direction dir = Direction::Down;
  Role role = Role::Over;
  std::size_t uid = 0;
};

struct Loc {
  std::size_t comp;
  std::size_t pos;
};

struct Work {
  std::vector<std::vector<Ev>> comps;
  std::vector<bool> comp_alive;
  std::vector<std::vector<std::size_t>> dots;
  std::vector<bool> dot_alive;
  std::vector<Sign> signs;
  std::vector<bool> crossing_alive;
  std::vector<GroupElement> colors;
  std::size_t h3 = 0, h4 = 0;
  std::size_t next_uid = 0;

  static Work from(const ColoredDiagram& cd) {
    const KirbyDiagram& d = cd.diagram;
    Work w;
    w.h3 = d.h3;
    w.h4 = d.h4;
    w.colors = cd.colors;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> uid_at;
    for (const auto& c : d.undotted) {
      std::vector<Ev> evs;
      for (std::size_t p = 0; p < c.events.size(); ++p) {
        Ev ev;
        ev.uid = w.next_uid++;
        if (const auto* dp = std::get_if<DotPassage>(&c.events[p])) {
          ev.is_dot = true;
          ev.target = dp->dot;
          ev.dir = dp->dir;
        } else {
          const auto& ce = std::get<CrossingEnd>(c.events[p]);
          ev.target = ce.crossing;
          ev.role = ce.role;
        }
        uid_at[{c.id, p}] = ev.uid;
        evs.push_back(ev);
      }
      w.comps.push_back(std::move(evs));
    }
    w.comp_alive.assign(w.comps.size(), true);
    for (const auto& dot : d.dotted) {
      std::vector<std::size_t> list;
      for (const auto& ref : dot.passages) list.push_back(uid_at.at({ref.component, ref.position}));
      w.dots.push_back(std::move(list));
    }
    w.dot_alive.assign(w.dots.size(), true);
    for (const auto& x : d.crossings) w.signs.push_back(x.sign);
    w.crossing_alive.assign(w.signs.size(), true);
    return w;
  }

  ColoredDiagram finish() const {
    std::vector<std::size_t> comp_id(comps.size()), dot_id(dots.size()), cross_id(signs.size());
    KirbyDiagram d;
    d.h3 = h3;
    d.h4 = h4;
    ColoredDiagram out;
    for (std::size_t x = 0; x < signs.size(); ++x) {
      if (!crossing_alive[x]) continue;
      cross_id[x] = d.crossings.size();
      d.crossings.push_back({d.crossings.size(), signs[x]});
    }
    for (std::size_t i = 0; i < dots.size(); ++i) {
      if (!dot_alive[i]) continue;
      dot_id[i] = out.colors.size();
      out.colors.push_back(colors[i]);
    }
    std::map<std::size_t, PassageRef> where;
    for (std::size_t c = 0; c < comps.size(); ++c) {
      if (!comp_alive[c]) continue;
      comp_id[c] = d.undotted.size();
      UndottedComponent uc{d.undotted.size(), {}};
      for (std::size_t p = 0; p < comps[c].size(); ++p) {
        const Ev& ev = comps[c][p];
        if (ev.is_dot) {
          uc.events.emplace_back(DotPassage{dot_id[ev.target], ev.dir});
          where[ev.uid] = {uc.id, p};
        } else {
          uc.events.emplace_back(CrossingEnd{cross_id[ev.target], ev.role});
        }
      }
      d.undotted.push_back(std::move(uc));
    }
    for (std::size_t i = 0; i < dots.size(); ++i) {
      if (!dot_alive[i]) continue;
      DottedComponent dc{d.dotted.size(), {}};
      for (const auto uid : dots[i]) dc.passages.push_back(where.at(uid));
      d.dotted.push_back(std::move(dc));
    }
    out.diagram = std::move(d);
    return out;
  }

  Loc find(std::size_t uid) const {
    for (std::size_t c = 0; c < comps.size(); ++c) {
      if (!comp_alive[c]) continue;
      for (std::size_t p = 0; p < comps[c].size(); ++p)
        if (comps[c][p].uid == uid) return {c, p};
    }
    throw std::logic_error("event uid not found");
  }
  const Ev& at(Loc l) const { return comps[l.comp][l.pos]; }
  Ev& at(Loc l) { return comps[l.comp][l.pos]; }

  Loc crossing_end(std::size_t x, Role r) const {
    for (std::size_t c = 0; c < comps.size(); ++c) {
      if (!comp_alive[c]) continue;
      for (std::size_t p = 0; p < comps[c].size(); ++p) {
        const Ev& ev = comps[c][p];
        if (!ev.is_dot && ev.target == x && ev.role == r) return {c, p};
      }
    }
    throw std::logic_error("crossing end not found");
  }

  // Cyclic successor on the same component.
  Loc next(Loc l) const { return {l.comp, (l.pos + 1) % comps[l.comp].size()}; }
  Loc prev(Loc l) const {
    const std::size_t n = comps[l.comp].size();
    return {l.comp, (l.pos + n - 1) % n};
  }
  // b immediately follows a along the component.
  bool follows(Loc a, Loc b) const {
    if (a.comp != b.comp || comps[a.comp].size() < 2) return false;
    return next(a).pos == b.pos && a.pos != b.pos;
  }

  std::size_t dot_index(std::size_t dot, std::size_t uid) const {
    const auto& list = dots[dot];
    return static_cast<std::size_t>(std::find(list.begin(), list.end(), uid) - list.begin());
  }

  Ev make_dot(std::size_t dot, Direction dir) {
    Ev ev;
    ev.is_dot = true;
    ev.target = dot;
    ev.dir = dir;
    ev.uid = next_uid++;
    return ev;
  }
  Ev make_end(std::size_t crossing, Role role) {
    Ev ev;
    ev.target = crossing;
    ev.role = role;
    ev.uid = next_uid++;
    return ev;
  }

  // Inserts before the event with uid `anchor`, or at the end of `comp` when
  // anchor is npos.
  void insert_before(std::size_t comp, std::size_t anchor, const std::vector<Ev>& evs) {
    auto& list = comps[comp];
    auto it = list.end();
    if (anchor != npos) {
      it = std::find_if(list.begin(), list.end(), [&](const Ev& e) { return e.uid == anchor; });
    }
    list.insert(it, evs.begin(), evs.end());
  }

  void erase_uids(const std::set<std::size_t>& uids) {
    for (std::size_t c = 0; c < comps.size(); ++c)
      std::erase_if(comps[c], [&](const Ev& e) { return uids.count(e.uid) > 0; });
    for (auto& list : dots) std::erase_if(list, [&](std::size_t u) { return uids.count(u) > 0; });
  }

  std::size_t anchor_at(std::size_t comp, std::size_t pos) const {
    if (pos > comps[comp].size()) throw MoveNotApplicable("insertion position " + str(pos) + " is out of range");
    return pos == comps[comp].size() ? npos : comps[comp][pos].uid;
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

std::size_t alive_index(const std::vector<bool>& alive, std::size_t i, const char* what) {
  if (i >= alive.size() || !alive[i]) throw MoveNotApplicable(std::string("unknown ") + what + " " + str(i));
  return i;
}

}  // namespace

ColoredDiagram reorient(const ColoredDiagram& cd, std::size_t component) {
  const KirbyDiagram& d = cd.diagram;
  if (component >= d.undotted.size()) throw KirbyError("unknown undotted component " + str(component));
  Work w = Work::from(cd);
  auto& evs = w.comps[component];
  std::reverse(evs.begin(), evs.end());
  std::map<std::size_t, int> ends_here;
  for (auto& ev : evs) {
    if (ev.is_dot) {
      ev.dir = flip(ev.dir);
    } else {
      ends_here[ev.target]++;
    }
  }
  for (const auto& [x, count] : ends_here) {
    if (count == 1) w.signs[x] = flip(w.signs[x]);
  }
  return w.finish();
}

ColoredDiagram rotate(const ColoredDiagram& cd, std::size_t component, std::size_t shift) {
  if (component >= cd.diagram.undotted.size()) throw KirbyError("unknown undotted component " + str(component));
  Work w = Work::from(cd);
  auto& evs = w.comps[component];
  if (!evs.empty()) std::rotate(evs.begin(), evs.begin() + static_cast<long>(shift % evs.size()), evs.end());
  return w.finish();
}

KirbyDiagram disjoint_union(const KirbyDiagram& a, const KirbyDiagram& b) {
  KirbyDiagram out = a;
  const std::size_t nd = a.dotted.size(), nu = a.undotted.size(), nx = a.crossings.size();
  for (auto dot : b.dotted) {
    dot.id += nd;
    for (auto& ref : dot.passages) ref.component += nu;
    out.dotted.push_back(std::move(dot));
  }
  for (auto comp : b.undotted) {
    comp.id += nu;
    for (auto& e : comp.events) {
      if (auto* dp = std::get_if<DotPassage>(&e)) {
        dp->dot += nd;
      } else {
        std::get<CrossingEnd>(e).crossing += nx;
      }
    }
    out.undotted.push_back(std::move(comp));
  }
  for (auto x : b.crossings) {
    x.id += nx;
    out.crossings.push_back(x);
  }
  out.h3 = a.h3 + b.h3;
  // one 4-handle survives a connected sum
  out.h4 = std::max(a.h4, b.h4);
  return out;
}

ColoredDiagram disjoint_union(const ColoredDiagram& a, const ColoredDiagram& b) {
  ColoredDiagram out{disjoint_union(a.diagram, b.diagram), a.colors};
  out.colors.insert(out.colors.end(), b.colors.begin(), b.colors.end());
  return out;
}

GroupHom disjoint_union(const GroupHom& a, const GroupHom& b) {
  GroupHom out = a;
  out.images.insert(out.images.end(), b.images.begin(), b.images.end());
  return out;
}

namespace {

Event over(std::size_t x) { return CrossingEnd{x, Role::Over}; }
Event under(std::size_t x) { return CrossingEnd{x, Role::Under}; }
Event down(std::size_t dot) { return DotPassage{dot, Direction::Down}; }
Event up(std::size_t dot) { return DotPassage{dot, Direction::Up}; }

KirbyDiagram make_cp2(Sign s) {
  KirbyDiagram d;
  d.undotted = {{0, {over(0), under(0)}}};
  d.crossings = {{0, s}};
  d.h4 = 1;
  return d;
}

}  // namespace

std::vector<std::string> builtin_diagram_names() { return {"cp2", "cp2bar", "s2xs2", "s1xs3", "s1xs1xs2", "s4"}; }

bool is_builtin_diagram_name(const std::string& name) {
  const auto names = builtin_diagram_names();
  return std::find(names.begin(), names.end(), name) != names.end() || name.rfind("connected-sum:", 0) == 0;
}

KirbyDiagram builtin_diagram(const std::string& name) {
  if (name == "cp2") return make_cp2(Sign::Positive);
  if (name == "cp2bar") return make_cp2(Sign::Negative);
  if (name == "s2xs2") {
    KirbyDiagram d;
    d.undotted = {{0, {under(0), over(1)}}, {1, {over(0), under(1)}}};
    d.crossings = {{0, Sign::Positive}, {1, Sign::Positive}};
    d.h4 = 1;
    return d;
  }
  if (name == "s1xs3") {
    KirbyDiagram d;
    d.dotted = {{0, {}}};
    d.h3 = 1;
    d.h4 = 1;
    return d;
  }
  if (name == "s1xs1xs2") {
    KirbyDiagram d;
    d.undotted = {{0, {down(0), under(0), over(1), down(1), up(0), up(1)}}, {1, {over(0), under(1)}}};
    d.dotted = {{0, {{0, 0}, {0, 4}}}, {1, {{0, 5}, {0, 3}}}};
    d.crossings = {{0, Sign::Positive}, {1, Sign::Positive}};
    d.h3 = 2;
    d.h4 = 1;
    return d;
  }
  if (name == "s4") {
    KirbyDiagram d;
    d.h4 = 1;
    return d;
  }
  if (name.rfind("connected-sum:", 0) == 0) {
    const std::string rest = name.substr(14);
    // split at the first comma not inside a nested connected-sum argument
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if (rest[i] != ',') continue;
      const std::string left = rest.substr(0, i), right = rest.substr(i + 1);
      if (is_builtin_diagram_name(left) && is_builtin_diagram_name(right)) {
        try {
          return disjoint_union(builtin_diagram(left), builtin_diagram(right));
        } catch (const KirbyError&) {
          continue;
        }
      }
    }
    throw KirbyError("bad connected-sum name \"" + name + "\"");
  }
  throw KirbyError("unknown builtin diagram \"" + name + "\"");
}

KirbyDiagram braid_closure(std::size_t strands, const std::vector<int>& word) {
  if (strands == 0) throw KirbyError("a braid needs at least one strand");
  for (const int letter : word) {
    if (letter == 0 || static_cast<std::size_t>(std::abs(letter)) >= strands) {
      throw KirbyError("braid letter " + std::to_string(letter) + " out of range");
    }
  }
  KirbyDiagram d;
  d.h4 = 1;
  for (std::size_t t = 0; t < word.size(); ++t) d.crossings.push_back({t, word[t] > 0 ? Sign::Positive : Sign::Negative});
  std::vector<bool> seen(strands, false);
  for (std::size_t start = 0; start < strands; ++start) {
    if (seen[start]) continue;
    UndottedComponent comp{d.undotted.size(), {}};
    std::size_t top = start;
    while (!seen[top]) {
      seen[top] = true;
      std::size_t pos = top;
      for (std::size_t t = 0; t < word.size(); ++t) {
        const std::size_t i = static_cast<std::size_t>(std::abs(word[t])) - 1;
        if (pos != i && pos != i + 1) continue;
        // strands run downward; a positive letter carries the strand from
        // position i+1 over the one from position i
        const bool from_right = pos == i + 1;
        const bool is_over = (word[t] > 0) == from_right;
        comp.events.push_back(is_over ? over(t) : under(t));
        pos = from_right ? i : i + 1;
      }
      top = pos;
    }
    d.undotted.push_back(std::move(comp));
  }
  return d;
}

// --- moves ---------------------------------------------------------------

std::string move_name(const MoveSpec& m) {
  static const std::array<const char*, 17> names = {
      "I-2",  "I-2",   "I-3",   "I-5",   "II-1",  "II-1",  "II-5",  "II-6",           "III-1",
      "III-1", "III-4", "III-4", "III-5", "III-5", "GlobalConjugate", "Reorient", "Rotate"};
  return names.at(m.index());
}

std::string describe(const MoveSpec& m, const FiniteGroup& g) {
  std::ostringstream os;
  std::visit(
      [&](const auto& mv) {
        using T = std::decay_t<decltype(mv)>;
        if constexpr (std::is_same_v<T, moves::R2Insert>) {
          os << "I-2 insert over (" << mv.over_component << ", " << mv.over_position << ") under ("
             << mv.under_component << ", " << mv.under_position << ") first "
             << (mv.first_sign == Sign::Positive ? "+" : "-") << (mv.parallel ? " parallel" : " antiparallel");
        } else if constexpr (std::is_same_v<T, moves::R2Remove>) {
          os << "I-2 remove crossings " << mv.first << ", " << mv.second;
        } else if constexpr (std::is_same_v<T, moves::R3>) {
          os << "I-3 crossings " << mv.a << ", " << mv.b << ", " << mv.c;
        } else if constexpr (std::is_same_v<T, moves::CurlTransfer>) {
          os << "I-5 crossing " << mv.crossing;
          if (mv.to_position) os << " to " << *mv.to_position;
        } else if constexpr (std::is_same_v<T, moves::FingerInsert>) {
          os << "II-1 insert at (" << mv.component << ", " << mv.position << ") through dot " << mv.dot << " at "
             << mv.dot_position << (mv.first == Direction::Down ? " down" : " up")
             << (mv.first_left ? " left" : " right");
        } else if constexpr (std::is_same_v<T, moves::FingerRemove>) {
          os << "II-1 remove at (" << mv.component << ", " << mv.position << ")";
        } else if constexpr (std::is_same_v<T, moves::DotReverse>) {
          os << "II-5 dot " << mv.dot;
        } else if constexpr (std::is_same_v<T, moves::DotSlide>) {
          os << "II-6 dot " << mv.small << " across dot " << mv.large;
        } else if constexpr (std::is_same_v<T, moves::HandleSlide>) {
          os << "III-1 slide dot " << mv.moving << " over dot " << mv.over << " at " << mv.position;
        } else if constexpr (std::is_same_v<T, moves::HandleUnslide>) {
          os << "III-1 unslide dot " << mv.moving << " from dot " << mv.over;
        } else if constexpr (std::is_same_v<T, moves::CancelPairInsert>) {
          os << "III-4 insert" << (mv.dir == Direction::Down ? " down" : " up");
        } else if constexpr (std::is_same_v<T, moves::CancelPairDelete>) {
          os << "III-4 delete dot " << mv.dot;
        } else if constexpr (std::is_same_v<T, moves::UnknotInsert>) {
          os << "III-5 insert";
        } else if constexpr (std::is_same_v<T, moves::UnknotDelete>) {
          os << "III-5 delete component " << mv.component;
        } else if constexpr (std::is_same_v<T, moves::GlobalConjugate>) {
          os << "GlobalConjugate by " << g.name(mv.by);
        } else if constexpr (std::is_same_v<T, moves::Reorient>) {
          os << "Reorient component " << mv.component;
        } else {
          os << "Rotate component " << mv.component << " by " << mv.shift;
        }
      },
      m);
  return os.str();
}

namespace {

using namespace moves;

void apply(Work& w, const R2Insert& m) {
  alive_index(w.comp_alive, m.over_component, "component");
  alive_index(w.comp_alive, m.under_component, "component");
  const std::size_t oa = w.anchor_at(m.over_component, m.over_position);
  const std::size_t ua = w.anchor_at(m.under_component, m.under_position);
  const std::size_t x = w.signs.size(), y = x + 1;
  w.signs.push_back(m.first_sign);
  w.signs.push_back(flip(m.first_sign));
  w.crossing_alive.push_back(true);
  w.crossing_alive.push_back(true);
  w.insert_before(m.over_component, oa, {w.make_end(x, Role::Over), w.make_end(y, Role::Over)});
  if (m.parallel) {
    w.insert_before(m.under_component, ua, {w.make_end(x, Role::Under), w.make_end(y, Role::Under)});
  } else {
    w.insert_before(m.under_component, ua, {w.make_end(y, Role::Under), w.make_end(x, Role::Under)});
  }
}

void apply(Work& w, const R2Remove& m) {
  std::size_t x = alive_index(w.crossing_alive, m.first, "crossing");
  std::size_t y = alive_index(w.crossing_alive, m.second, "crossing");
  if (x == y) throw MoveNotApplicable("I-2 needs two distinct crossings");
  if (w.signs[x] == w.signs[y]) throw MoveNotApplicable("I-2 crossings " + str(x) + ", " + str(y) + " have equal signs");
  Loc ox = w.crossing_end(x, Role::Over), oy = w.crossing_end(y, Role::Over);
  if (!w.follows(ox, oy)) {
    if (!w.follows(oy, ox)) throw MoveNotApplicable("I-2 over ends of " + str(x) + ", " + str(y) + " are not adjacent");
    std::swap(x, y);
    std::swap(ox, oy);
  }
  const Loc ux = w.crossing_end(x, Role::Under), uy = w.crossing_end(y, Role::Under);
  if (!w.follows(ux, uy) && !w.follows(uy, ux)) {
    throw MoveNotApplicable("I-2 under ends of " + str(x) + ", " + str(y) + " are not adjacent");
  }
  w.erase_uids({w.at(ox).uid, w.at(oy).uid, w.at(ux).uid, w.at(uy).uid});
  w.crossing_alive[x] = false;
  w.crossing_alive[y] = false;
}

// Strand of a Reidemeister III triangle: two adjacent events, `first` before
// `second` along the orientation.
struct Strand {
  Loc first;
  Loc second;
};

bool adjacent_pair(const Work& w, Loc a, Loc b, std::vector<Strand>& options) {
  options.clear();
  if (w.follows(a, b)) options.push_back({a, b});
  if (w.follows(b, a)) options.push_back({b, a});
  return !options.empty();
}

void apply(Work& w, const R3& m) {
  const std::array<std::size_t, 3> ids = {alive_index(w.crossing_alive, m.a, "crossing"),
                                          alive_index(w.crossing_alive, m.b, "crossing"),
                                          alive_index(w.crossing_alive, m.c, "crossing")};
  if (ids[0] == ids[1] || ids[1] == ids[2] || ids[0] == ids[2]) throw MoveNotApplicable("I-3 needs three distinct crossings");
  std::array<std::size_t, 3> perm = {0, 1, 2};
  do {
    // tm: top over middle, tb: top over bottom, mb: middle over bottom
    const std::size_t tm = ids[perm[0]], tb = ids[perm[1]], mb = ids[perm[2]];
    std::vector<Strand> top, mid, bot;
    if (!adjacent_pair(w, w.crossing_end(tm, Role::Over), w.crossing_end(tb, Role::Over), top)) continue;
    if (!adjacent_pair(w, w.crossing_end(tm, Role::Under), w.crossing_end(mb, Role::Over), mid)) continue;
    if (!adjacent_pair(w, w.crossing_end(tb, Role::Under), w.crossing_end(mb, Role::Under), bot)) continue;
    // heights: top 2, middle 1, bottom 0; crossing between strands by height pair
    auto crossing_of = [&](int h1, int h2) {
      const int lo = std::min(h1, h2), hi = std::max(h1, h2);
      if (hi == 2 && lo == 1) return tm;
      if (hi == 2 && lo == 0) return tb;
      return mb;
    };
    auto sign_value = [&](std::size_t x) { return w.signs[x] == Sign::Positive ? 1 : -1; };
    for (const auto& st : top)
      for (const auto& sm : mid)
        for (const auto& sb : bot) {
          const std::array<const Strand*, 3> by_height = {&sb, &sm, &st};
          bool realizable = false;
          for (const auto& order : {std::array<int, 3>{2, 1, 0}, std::array<int, 3>{2, 0, 1}}) {
            for (int mask = 0; mask < 8 && !realizable; ++mask) {
              std::array<int, 3> o{};
              for (int s = 0; s < 3; ++s) o[s] = (mask >> s) & 1 ? 1 : -1;
              bool ok = true;
              for (int a = 0; a < 3 && ok; ++a) {
                const int b = (a + 1) % 3, prev = (a + 2) % 3;
                // vertex V_a joins sides a and a+1
                const std::size_t va = crossing_of(order[a], order[b]);
                const int predicted = (order[a] > order[b] ? 1 : -1) * o[a] * o[b];
                if (predicted != sign_value(va)) ok = false;
                const std::size_t first = o[a] == 1 ? crossing_of(order[prev], order[a]) : va;
                const Strand& s = *by_height[order[a]];
                if (w.at(s.first).target != first) ok = false;
              }
              realizable = ok;
            }
            if (realizable) break;
          }
          if (!realizable) continue;
          for (const Strand* s : by_height) std::swap(w.at(s->first), w.at(s->second));
          return;
        }
  } while (std::next_permutation(perm.begin(), perm.end()));
  throw MoveNotApplicable("crossings " + str(m.a) + ", " + str(m.b) + ", " + str(m.c) +
                          " do not bound a Reidemeister III triangle");
}

void apply(Work& w, const CurlTransfer& m) {
  const std::size_t x = alive_index(w.crossing_alive, m.crossing, "crossing");
  Loc o = w.crossing_end(x, Role::Over), u = w.crossing_end(x, Role::Under);
  Loc first = o, second = u;
  if (!w.follows(o, u)) {
    if (!w.follows(u, o)) throw MoveNotApplicable("I-5 crossing " + str(x) + " is not a curl");
    first = u;
    second = o;
  }
  std::swap(w.at(first).role, w.at(second).role);
  if (!m.to_position) return;
  const std::size_t comp = first.comp;
  const Ev a = w.at(first), b = w.at(second);
  w.erase_uids({a.uid, b.uid});
  if (*m.to_position > w.comps[comp].size()) throw MoveNotApplicable("I-5 target position out of range");
  w.comps[comp].insert(w.comps[comp].begin() + static_cast<long>(*m.to_position), {a, b});
}

void apply(Work& w, const FingerInsert& m) {
  alive_index(w.comp_alive, m.component, "component");
  alive_index(w.dot_alive, m.dot, "dot");
  if (m.dot_position > w.dots[m.dot].size()) throw MoveNotApplicable("II-1 dot position out of range");
  const std::size_t anchor = w.anchor_at(m.component, m.position);
  const Ev e1 = w.make_dot(m.dot, m.first), e2 = w.make_dot(m.dot, flip(m.first));
  w.insert_before(m.component, anchor, {e1, e2});
  auto& list = w.dots[m.dot];
  const std::vector<std::size_t> block = m.first_left ? std::vector{e1.uid, e2.uid} : std::vector{e2.uid, e1.uid};
  list.insert(list.begin() + static_cast<long>(m.dot_position), block.begin(), block.end());
}

void apply(Work& w, const FingerRemove& m) {
  alive_index(w.comp_alive, m.component, "component");
  const auto& evs = w.comps[m.component];
  if (evs.size() < 2 || m.position >= evs.size()) throw MoveNotApplicable("II-1 position out of range");
  const Loc a{m.component, m.position}, b = w.next(a);
  const Ev &ea = w.at(a), &eb = w.at(b);
  if (!ea.is_dot || !eb.is_dot || ea.target != eb.target || ea.dir == eb.dir) {
    throw MoveNotApplicable("II-1 events are not opposite passages through one dot");
  }
  const std::size_t ia = w.dot_index(ea.target, ea.uid), ib = w.dot_index(eb.target, eb.uid);
  if (ia + 1 != ib && ib + 1 != ia) throw MoveNotApplicable("II-1 passages are not adjacent on the dot");
  w.erase_uids({ea.uid, eb.uid});
}

void apply(Work& w, const FiniteGroup& g, const DotReverse& m) {
  const std::size_t d = alive_index(w.dot_alive, m.dot, "dot");
  auto& list = w.dots[d];
  std::reverse(list.begin(), list.end());
  for (const auto uid : list) {
    Ev& ev = w.at(w.find(uid));
    ev.dir = flip(ev.dir);
  }
  w.colors[d] = g.inv(w.colors[d]);
}

// For each passage of dot x, the neighbouring passage through dot y that the
// pattern requires, or nothing when the pattern fails. `x_first` selects
// Down strands meeting x before y (and Up strands meeting y before x).
std::optional<std::vector<std::size_t>> paired_passages(const Work& w, std::size_t x, std::size_t y, bool x_first) {
  std::vector<std::size_t> out;
  for (const auto uid : w.dots[x]) {
    const Loc l = w.find(uid);
    const Ev& ev = w.at(l);
    if (w.comps[l.comp].size() < 2) return std::nullopt;
    const bool look_next = (ev.dir == Direction::Down) == x_first;
    const Loc n = look_next ? w.next(l) : w.prev(l);
    const Ev& other = w.at(n);
    if (!other.is_dot || other.target != y || other.dir != ev.dir) return std::nullopt;
    out.push_back(other.uid);
  }
  return out;
}

// Position of the contiguous block `uids` inside dot y's list, in order.
std::optional<std::size_t> block_start(const Work& w, std::size_t y, const std::vector<std::size_t>& uids) {
  if (uids.empty()) return std::nullopt;
  const auto& list = w.dots[y];
  const std::size_t s = w.dot_index(y, uids[0]);
  if (s + uids.size() > list.size()) return std::nullopt;
  for (std::size_t j = 0; j < uids.size(); ++j)
    if (list[s + j] != uids[j]) return std::nullopt;
  return s;
}

void apply(Work& w, const FiniteGroup& g, const DotSlide& m) {
  const std::size_t x = alive_index(w.dot_alive, m.small, "dot"), y = alive_index(w.dot_alive, m.large, "dot");
  if (x == y) throw MoveNotApplicable("II-6 needs two distinct dots");
  if (w.dots[x].empty()) throw MoveNotApplicable("II-6 dot " + str(x) + " has no passages");
  for (const bool x_first : {true, false}) {
    const auto ys = paired_passages(w, x, y, x_first);
    if (!ys || !block_start(w, y, *ys)) continue;
    for (std::size_t j = 0; j < ys->size(); ++j) {
      const Loc a = w.find(w.dots[x][j]), b = w.find((*ys)[j]);
      std::swap(w.at(a), w.at(b));
    }
    const GroupElement a = w.colors[x], b = w.colors[y];
    w.colors[x] = x_first ? g.mul(g.mul(g.inv(b), a), b) : g.mul(g.mul(b, a), g.inv(b));
    return;
  }
  throw MoveNotApplicable("II-6 strands of dot " + str(x) + " do not run through a block of dot " + str(y));
}

void apply(Work& w, const FiniteGroup& g, const HandleSlide& m) {
  const std::size_t x = alive_index(w.dot_alive, m.moving, "dot"), y = alive_index(w.dot_alive, m.over, "dot");
  if (x == y) throw MoveNotApplicable("III-1 needs two distinct dots");
  if (m.position > w.dots[y].size()) throw MoveNotApplicable("III-1 position out of range");
  std::vector<std::size_t> block;
  for (const auto uid : w.dots[x]) {
    const Loc l = w.find(uid);
    const Ev ev = w.at(l);
    const Ev fresh = w.make_dot(y, ev.dir);
    auto& evs = w.comps[l.comp];
    evs.insert(evs.begin() + static_cast<long>(ev.dir == Direction::Down ? l.pos + 1 : l.pos), fresh);
    block.push_back(fresh.uid);
  }
  auto& list = w.dots[y];
  list.insert(list.begin() + static_cast<long>(m.position), block.begin(), block.end());
  w.colors[x] = g.mul(w.colors[x], g.inv(w.colors[y]));
}

void apply(Work& w, const FiniteGroup& g, const HandleUnslide& m) {
  const std::size_t x = alive_index(w.dot_alive, m.moving, "dot"), y = alive_index(w.dot_alive, m.over, "dot");
  if (x == y) throw MoveNotApplicable("III-1 needs two distinct dots");
  const auto ys = paired_passages(w, x, y, true);
  if (!ys || (!ys->empty() && !block_start(w, y, *ys))) {
    throw MoveNotApplicable("III-1 dot " + str(x) + " is not slid over dot " + str(y));
  }
  w.erase_uids(std::set<std::size_t>(ys->begin(), ys->end()));
  w.colors[x] = g.mul(w.colors[x], w.colors[y]);
}

void apply(Work& w, const FiniteGroup& g, const CancelPairInsert& m) {
  const std::size_t dot = w.dots.size();
  w.dots.emplace_back();
  w.dot_alive.push_back(true);
  w.colors.push_back(g.identity());
  const Ev ev = w.make_dot(dot, m.dir);
  w.comps.push_back({ev});
  w.comp_alive.push_back(true);
  w.dots[dot].push_back(ev.uid);
}

void apply(Work& w, const FiniteGroup& g, const CancelPairDelete& m) {
  const std::size_t dot = alive_index(w.dot_alive, m.dot, "dot");
  if (w.dots[dot].size() != 1) throw MoveNotApplicable("III-4 dot " + str(dot) + " must have exactly one passage");
  const Loc l = w.find(w.dots[dot][0]);
  if (w.comps[l.comp].size() != 1) throw MoveNotApplicable("III-4 strand through dot " + str(dot) + " is not a lone unknot");
  if (!g.is_identity(w.colors[dot])) throw MoveNotApplicable("III-4 dot " + str(dot) + " is not colored by the identity");
  w.comps[l.comp].clear();
  w.comp_alive[l.comp] = false;
  w.dots[dot].clear();
  w.dot_alive[dot] = false;
}

void apply(Work& w, const UnknotInsert&) {
  w.comps.emplace_back();
  w.comp_alive.push_back(true);
  ++w.h3;
}

void apply(Work& w, const UnknotDelete& m) {
  const std::size_t c = alive_index(w.comp_alive, m.component, "component");
  if (!w.comps[c].empty()) throw MoveNotApplicable("III-5 component " + str(c) + " is not a split unknot");
  if (w.h3 == 0) throw MoveNotApplicable("III-5 needs a 3-handle to cancel against");
  w.comp_alive[c] = false;
  --w.h3;
}

}  // namespace

ColoredDiagram apply_move(const FiniteGroup& g, const ColoredDiagram& cd, const MoveSpec& m) {
  if (const auto* r = std::get_if<Reorient>(&m)) {
    if (r->component >= cd.diagram.undotted.size()) throw MoveNotApplicable("unknown component " + str(r->component));
    return reorient(cd, r->component);
  }
  if (const auto* r = std::get_if<Rotate>(&m)) {
    if (r->component >= cd.diagram.undotted.size()) throw MoveNotApplicable("unknown component " + str(r->component));
    return rotate(cd, r->component, r->shift);
  }
  if (const auto* c = std::get_if<GlobalConjugate>(&m)) {
    if (c->by.index >= g.order()) throw MoveNotApplicable("conjugating element is not in the group");
    ColoredDiagram out = cd;
    for (auto& a : out.colors) a = g.conjugate(c->by, a);
    return out;
  }
  Work w = Work::from(cd);
  std::visit(
      [&](const auto& mv) {
        using T = std::decay_t<decltype(mv)>;
        if constexpr (std::is_same_v<T, DotReverse> || std::is_same_v<T, DotSlide> || std::is_same_v<T, HandleSlide> ||
                      std::is_same_v<T, HandleUnslide> || std::is_same_v<T, CancelPairInsert> ||
                      std::is_same_v<T, CancelPairDelete>) {
          apply(w, g, mv);
        } else if constexpr (std::is_same_v<T, GlobalConjugate> || std::is_same_v<T, Reorient> ||
                             std::is_same_v<T, Rotate>) {
          // handled above
        } else {
          apply(w, mv);
        }
      },
      m);
  ColoredDiagram out = w.finish();
  const ValidationReport rep = validate(out.diagram);
  if (!rep.ok()) throw std::logic_error("move produced an invalid diagram: " + rep.problems.front());
  color(out.diagram, g, GroupHom{out.colors});
  return out;
}

std::vector<MoveSpec> enumerate_moves(const FiniteGroup& g, const ColoredDiagram& cd) {
  const KirbyDiagram& d = cd.diagram;
  std::vector<MoveSpec> candidates;
  const std::size_t nc = d.undotted.size(), nd = d.dotted.size(), nx = d.crossings.size();
  for (std::size_t a = 0; a < nc; ++a)
    for (std::size_t pa = 0; pa <= d.undotted[a].events.size(); ++pa)
      for (std::size_t b = 0; b < nc; ++b)
        for (std::size_t pb = 0; pb <= d.undotted[b].events.size(); ++pb)
          for (const Sign s : {Sign::Positive, Sign::Negative})
            for (const bool par : {true, false}) candidates.push_back(R2Insert{a, pa, b, pb, s, par});
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t y = x + 1; y < nx; ++y) candidates.push_back(R2Remove{x, y});
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t y = x + 1; y < nx; ++y)
      for (std::size_t z = y + 1; z < nx; ++z) candidates.push_back(R3{x, y, z});
  for (std::size_t x = 0; x < nx; ++x) {
    candidates.push_back(CurlTransfer{x, std::nullopt});
    for (std::size_t c = 0; c < nc; ++c) {
      const std::size_t n = d.undotted[c].events.size();
      for (std::size_t p = 0; n >= 2 && p + 2 <= n; ++p) candidates.push_back(CurlTransfer{x, p});
    }
  }
  for (std::size_t c = 0; c < nc; ++c)
    for (std::size_t p = 0; p <= d.undotted[c].events.size(); ++p)
      for (std::size_t dot = 0; dot < nd; ++dot)
        for (std::size_t q = 0; q <= d.dotted[dot].passages.size(); ++q)
          for (const Direction dir : {Direction::Down, Direction::Up})
            for (const bool left : {true, false}) candidates.push_back(FingerInsert{c, p, dot, q, dir, left});
  for (std::size_t c = 0; c < nc; ++c)
    for (std::size_t p = 0; p < d.undotted[c].events.size(); ++p) candidates.push_back(FingerRemove{c, p});
  for (std::size_t dot = 0; dot < nd; ++dot) candidates.push_back(DotReverse{dot});
  for (std::size_t x = 0; x < nd; ++x)
    for (std::size_t y = 0; y < nd; ++y) {
      if (x == y) continue;
      candidates.push_back(DotSlide{x, y});
      for (std::size_t q = 0; q <= d.dotted[y].passages.size(); ++q) candidates.push_back(HandleSlide{x, y, q});
      candidates.push_back(HandleUnslide{x, y});
    }
  candidates.push_back(CancelPairInsert{Direction::Down});
  candidates.push_back(CancelPairInsert{Direction::Up});
  for (std::size_t dot = 0; dot < nd; ++dot) candidates.push_back(CancelPairDelete{dot});
  candidates.push_back(UnknotInsert{});
  for (std::size_t c = 0; c < nc; ++c) candidates.push_back(UnknotDelete{c});
  for (const auto b : g.elements()) candidates.push_back(GlobalConjugate{b});
  for (std::size_t c = 0; c < nc; ++c) {
    candidates.push_back(Reorient{c});
    for (std::size_t s = 1; s < d.undotted[c].events.size(); ++s) candidates.push_back(Rotate{c, s});
  }

  std::vector<MoveSpec> out;
  for (auto& m : candidates) {
    try {
      apply_move(g, cd, m);
      out.push_back(std::move(m));
    } catch (const MoveNotApplicable&) {
    }
  }
  return out;
}

}  // namespace hennings
