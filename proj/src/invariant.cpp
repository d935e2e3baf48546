#include "hennings/invariant.hpp"

#include <map>
#include <tuple>

namespace hennings {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

struct Source {
  std::vector<GroupElement> grades;
  std::vector<std::pair<IndexTuple, CycloScalar>> terms;
};

struct Slot {
  std::size_t source;
  std::size_t factor;
};

// Running product basis index of the current component (kNone before the
// first slot) and the still unconsumed factors of every opened source.
struct Key {
  std::size_t cur = kNone;
  std::map<std::size_t, IndexTuple> open;
  friend bool operator<(const Key& a, const Key& b) { return std::tie(a.cur, a.open) < std::tie(b.cur, b.open); }
};

using States = std::map<Key, CycloScalar>;

void accumulate(States& states, Key key, const CycloScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = states.try_emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) states.erase(it);
  }
}

CycloScalar power(const CycloScalar& x, long e) {
  CycloScalar out(1);
  const CycloScalar base = e < 0 ? x.inverse() : x;
  for (long i = 0; i < std::abs(e); ++i) out *= base;
  return out;
}

}  // namespace

InvariantValue evaluate(const HopfGAlgebra& h, const IntegralData& in, const ColoredDiagram& cd) {
  if (!in.normalized) throw EvaluationError("integrals are not normalised");
  const KirbyDiagram& d = cd.diagram;
  const FiniteGroup& g = h.group();
  const ValidationReport rep = validate(d);
  if (!rep.ok()) throw KirbyError("invalid diagram: " + rep.problems.front());
  if (cd.colors.size() != d.dotted.size()) throw EvaluationError("coloring does not match the dotted components");
  const GroupElement one = g.identity();

  InvariantValue result;
  result.exponent = static_cast<long>(d.dotted.size()) - static_cast<long>(d.undotted.size());
  const CycloScalar dim1(static_cast<long>(h.dim(one)));

  std::vector<Source> sources;
  // slot_of[component][position]
  std::vector<std::vector<Slot>> slot_of(d.undotted.size());
  for (std::size_t c = 0; c < d.undotted.size(); ++c) slot_of[c].resize(d.undotted[c].events.size(), {kNone, 0});

  for (std::size_t i = 0; i < d.dotted.size(); ++i) {
    const GroupElement a = cd.colors[i];
    if (h.dim(a) == 0) return result;  // Lambda_a = 0 kills every term
    const auto& passages = d.dotted[i].passages;
    if (passages.empty()) {
      if (eval_counit(h, in.at(a)) != CycloScalar(1)) {
        throw EvaluationError("eps(Lambda_" + g.name(a) + ") differs from 1");
      }
      continue;
    }
    GradedTensor t = apply_coproduct_power(h, in.at(a), passages.size());
    for (std::size_t q = 0; q < passages.size(); ++q) {
      const auto& dp = std::get<DotPassage>(d.undotted[passages[q].component].events[passages[q].position]);
      if (dp.dir == Direction::Up) t = antipode_on_factor(h, t, q);
      slot_of[passages[q].component][passages[q].position] = {sources.size(), q};
    }
    sources.push_back({t.grades, {t.entries.begin(), t.entries.end()}});
  }
  const GradedTensor r = h.rmatrix(), rinv = h.rmatrix_inverse();
  std::vector<std::size_t> crossing_source(d.crossings.size());
  for (const auto& x : d.crossings) {
    const GradedTensor& t = x.sign == Sign::Positive ? r : rinv;
    crossing_source[x.id] = sources.size();
    sources.push_back({t.grades, {t.entries.begin(), t.entries.end()}});
  }
  for (std::size_t c = 0; c < d.undotted.size(); ++c)
    for (std::size_t p = 0; p < d.undotted[c].events.size(); ++p)
      if (const auto* e = std::get_if<CrossingEnd>(&d.undotted[c].events[p]))
        slot_of[c][p] = {crossing_source[e->crossing], e->role == Role::Over ? 0u : 1u};

  States states;
  states.emplace(Key{}, CycloScalar(1));
  for (std::size_t c = 0; c < d.undotted.size() && !states.empty(); ++c) {
    if (slot_of[c].empty()) {
      const CycloScalar l1 = eval_lambda(h, in, h.unit());
      for (auto& [key, coef] : states) coef *= l1;
      continue;
    }
    GroupElement grade = one;
    bool started = false;
    for (const Slot& slot : slot_of[c]) {
      const Source& src = sources[slot.source];
      const GroupElement gs = src.grades[slot.factor];
      States next;
      for (const auto& [key, coef] : states) {
        auto step = [&](Key k, std::size_t val, const CycloScalar& cf) {
          if (k.cur == kNone) {
            k.cur = val;
            accumulate(next, std::move(k), cf);
            return;
          }
          for (const auto& [j, m] : h.mul_basis(grade, gs, k.cur, val)) {
            Key k2 = k;
            k2.cur = j;
            accumulate(next, std::move(k2), cf * m);
          }
        };
        auto it = key.open.find(slot.source);
        if (it == key.open.end()) {
          for (const auto& [idx, tc] : src.terms) {
            Key k = key;
            IndexTuple rest = idx;
            rest[slot.factor] = kNone;
            bool done = true;
            for (const auto v : rest) done = done && v == kNone;
            if (!done) k.open.emplace(slot.source, std::move(rest));
            step(std::move(k), idx[slot.factor], coef * tc);
          }
        } else {
          Key k = key;
          IndexTuple& rest = k.open.at(slot.source);
          const std::size_t val = rest[slot.factor];
          rest[slot.factor] = kNone;
          bool done = true;
          for (const auto v : rest) done = done && v == kNone;
          if (done) k.open.erase(slot.source);
          step(std::move(k), val, coef);
        }
      }
      states = std::move(next);
      grade = started ? g.mul(grade, gs) : gs;
      started = true;
    }
    if (!g.is_identity(grade)) {
      throw EvaluationError("grades along undotted component " + std::to_string(c) + " multiply to " +
                            g.name(grade) + " instead of 1");
    }
    States closed;
    for (const auto& [key, coef] : states) {
      const auto it = in.lambda.find(key.cur);
      if (it == in.lambda.end()) continue;
      Key k = key;
      k.cur = kNone;
      accumulate(closed, std::move(k), coef * it->second);
    }
    states = std::move(closed);
  }

  CycloScalar bracket;
  for (const auto& [key, coef] : states) {
    if (!key.open.empty()) throw EvaluationError("a tensor factor was never assigned to a slot");
    bracket += coef;
  }
  result.bracket = bracket;
  result.value = power(dim1, result.exponent) * bracket;
  return result;
}

SummedValue evaluate_summed(const HopfGAlgebra& h, const IntegralData& in, const KirbyDiagram& d) {
  SummedValue out;
  out.homs = enumerate_homs(fundamental_presentation(d), h.group());
  for (const auto& hom : out.homs) {
    out.values.push_back(evaluate(h, in, color(d, h.group(), hom)));
    out.total += out.values.back().value;
  }
  return out;
}

ConnectedSumReport connected_sum_check(const HopfGAlgebra& h, const IntegralData& in, const KirbyDiagram& da,
                                       const KirbyDiagram& db, const GroupHom& hom_a, const GroupHom& hom_b) {
  const FiniteGroup& g = h.group();
  ConnectedSumReport rep;
  rep.a = evaluate(h, in, color(da, g, hom_a));
  rep.b = evaluate(h, in, color(db, g, hom_b));
  rep.combined = evaluate(h, in, color(disjoint_union(da, db), g, disjoint_union(hom_a, hom_b)));
  rep.equal = rep.combined.value == rep.a.value * rep.b.value;
  return rep;
}

}  // namespace hennings
