#include "hennings/io.hpp"

#include <fstream>
#include <sstream>

namespace hennings {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw IoError(path + ": " + what); }

const Json& field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, "missing field \"" + key + "\"");
  return *it;
}

std::size_t as_index(const Json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 0) fail(path, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

const Json& as_array(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

CycloScalar as_scalar(const Json& j, unsigned conductor, const std::string& path) {
  if (j.is_number_integer()) return CycloScalar(j.get<long>());
  if (!j.is_string()) fail(path, "expected a scalar literal string");
  try {
    return CycloScalar::parse(j.get<std::string>(), conductor);
  } catch (const ArithmeticError& e) {
    fail(path, e.what());
  }
}

GroupElement as_element(const Json& j, const FiniteGroup& g, const std::string& path) {
  if (j.is_number_integer()) {
    const std::size_t i = as_index(j, path);
    if (i >= g.order()) fail(path, "group element index out of range");
    return {i};
  }
  if (!j.is_string()) fail(path, "expected a group element (index or name)");
  try {
    return g.parse_element(j.get<std::string>());
  } catch (const GroupError& e) {
    fail(path, e.what());
  }
}

// [t, "c", t, "c", ...]
SparseVec vec_from(const Json& j, unsigned conductor, const std::string& path) {
  as_array(j, path);
  if (j.size() % 2 != 0) fail(path, "expected alternating index and scalar entries");
  SparseVec out;
  for (std::size_t i = 0; i < j.size(); i += 2) {
    add_entry(out, as_index(j[i], at(path, i)), as_scalar(j[i + 1], conductor, at(path, i + 1)));
  }
  return out;
}

// [t1, t2, "c", ...]
SparseTensor tensor2_from(const Json& j, unsigned conductor, const std::string& path) {
  as_array(j, path);
  if (j.size() % 3 != 0) fail(path, "expected triples of two indices and a scalar");
  SparseTensor out;
  for (std::size_t i = 0; i < j.size(); i += 3) {
    add_entry(out, IndexTuple{as_index(j[i], at(path, i)), as_index(j[i + 1], at(path, i + 1))},
              as_scalar(j[i + 2], conductor, at(path, i + 2)));
  }
  return out;
}

}  // namespace

Json vector_to_json(const SparseVec& v) {
  Json out = Json::array();
  for (const auto& [i, c] : v) {
    out.push_back(i);
    out.push_back(c.to_literal());
  }
  return out;
}

Json tensor_to_json(const SparseTensor& t) {
  Json out = Json::array();
  for (const auto& [idx, c] : t) {
    for (const std::size_t i : idx) out.push_back(i);
    out.push_back(c.to_literal());
  }
  return out;
}

namespace {

void check_range(std::size_t i, std::size_t n, const std::string& path) {
  if (i >= n) fail(path, "index " + std::to_string(i) + " out of range (size " + std::to_string(n) + ")");
}

}  // namespace

Json group_to_json(const FiniteGroup& g) { return {{"order", g.order()}, {"table", g.table()}, {"names", g.names()}}; }

FiniteGroup group_from_json(const Json& j) {
  try {
    if (j.is_string()) return parse_group_name(j.get<std::string>());
    const std::size_t n = as_index(field(j, "order", "group"), "group.order");
    const Json& tj = as_array(field(j, "table", "group"), "group.table");
    std::vector<std::vector<std::size_t>> table;
    for (std::size_t r = 0; r < tj.size(); ++r) {
      const Json& row = as_array(tj[r], at("group.table", r));
      std::vector<std::size_t> out;
      for (std::size_t c = 0; c < row.size(); ++c) out.push_back(as_index(row[c], at(at("group.table", r), c)));
      table.push_back(std::move(out));
    }
    if (table.size() != n) fail("group.table", "has " + std::to_string(table.size()) + " rows but order is " + std::to_string(n));
    std::vector<std::string> names;
    if (j.contains("names")) {
      const Json& nj = as_array(j["names"], "group.names");
      for (std::size_t i = 0; i < nj.size(); ++i) {
        if (!nj[i].is_string()) fail(at("group.names", i), "expected a string");
        names.push_back(nj[i].get<std::string>());
      }
    }
    return FiniteGroup::from_table(std::move(table), std::move(names));
  } catch (const GroupError& e) {
    throw IoError(std::string("group: ") + e.what());
  }
}

Json algebra_to_json(const HopfGAlgebra& h) {
  const FiniteGroup& g = h.group();
  Json j;
  j["conductor"] = h.conductor();
  j["group"] = group_to_json(g);
  j["dims"] = h.data().dims;
  Json product = Json::array(), coproduct = Json::array(), counit = Json::array(), antipode = Json::array(),
       crossing = Json::array();
  for (const auto a : g.elements()) {
    for (const auto b : g.elements()) {
      for (std::size_t i = 0; i < h.dim(a); ++i)
        for (std::size_t k = 0; k < h.dim(b); ++k) {
          const SparseVec& v = h.mul_basis(a, b, i, k);
          if (!v.empty()) product.push_back({a.index, b.index, i, k, vector_to_json(v)});
        }
    }
    for (std::size_t i = 0; i < h.dim(a); ++i) {
      if (!h.coproduct_basis(a, i).empty()) coproduct.push_back({a.index, i, tensor_to_json(h.coproduct_basis(a, i))});
      if (!h.counit_basis(a, i).is_zero()) counit.push_back({a.index, i, h.counit_basis(a, i).to_literal()});
      if (!h.antipode_basis(a, i).empty()) antipode.push_back({a.index, i, vector_to_json(h.antipode_basis(a, i))});
    }
  }
  for (const auto b : g.elements())
    for (const auto a : g.elements())
      for (std::size_t i = 0; i < h.dim(a); ++i) {
        const SparseVec& v = h.crossing_basis(b, a, i);
        if (!v.empty()) crossing.push_back({b.index, a.index, i, vector_to_json(v)});
      }
  j["product"] = product;
  j["unit"] = vector_to_json(h.data().unit);
  j["coproduct"] = coproduct;
  j["counit"] = counit;
  j["antipode"] = antipode;
  j["crossing"] = crossing;
  j["rmatrix"] = tensor_to_json(h.data().rmatrix);
  return j;
}

HopfGAlgebra algebra_from_json(const Json& j) {
  HopfGAlgebraData data;
  const Json& cj = field(j, "conductor", "algebra");
  data.conductor = static_cast<unsigned>(as_index(cj, "conductor"));
  if (data.conductor == 0) fail("conductor", "must be positive");
  data.group = group_from_json(field(j, "group", "algebra"));
  const FiniteGroup& g = data.group;
  const std::size_t n = g.order();
  const unsigned cond = data.conductor;
  const Json& dj = as_array(field(j, "dims", "algebra"), "dims");
  if (dj.size() != n) fail("dims", "expected " + std::to_string(n) + " entries, one per group element");
  for (std::size_t a = 0; a < n; ++a) data.dims.push_back(as_index(dj[a], at("dims", a)));
  auto dim = [&](GroupElement a) { return data.dims[a.index]; };

  data.product.resize(n * n);
  for (const auto a : g.elements())
    for (const auto b : g.elements()) data.product[a.index * n + b.index].resize(dim(a) * dim(b));
  data.coproduct.resize(n);
  data.counit.resize(n);
  data.antipode.resize(n);
  for (const auto a : g.elements()) {
    data.coproduct[a.index].resize(dim(a));
    data.counit[a.index].resize(dim(a));
    data.antipode[a.index].resize(dim(a));
  }
  data.crossing.resize(n * n);
  for (const auto b : g.elements())
    for (const auto a : g.elements()) data.crossing[b.index * n + a.index].resize(dim(a));

  auto blocks = [&](const char* key) -> const Json& {
    static const Json empty = Json::array();
    return j.contains(key) ? as_array(j[key], key) : empty;
  };
  {
    const Json& pj = blocks("product");
    for (std::size_t r = 0; r < pj.size(); ++r) {
      const std::string path = at("product", r);
      const Json& e = as_array(pj[r], path);
      if (e.size() != 5) fail(path, "expected [alpha, beta, i, j, entries]");
      const GroupElement a = as_element(e[0], g, at(path, 0)), b = as_element(e[1], g, at(path, 1));
      const std::size_t i = as_index(e[2], at(path, 2)), k = as_index(e[3], at(path, 3));
      check_range(i, dim(a), at(path, 2));
      check_range(k, dim(b), at(path, 3));
      data.product[a.index * n + b.index][i * dim(b) + k] = vec_from(e[4], cond, at(path, 4));
    }
  }
  data.unit = vec_from(field(j, "unit", "algebra"), cond, "unit");
  {
    const Json& pj = blocks("coproduct");
    for (std::size_t r = 0; r < pj.size(); ++r) {
      const std::string path = at("coproduct", r);
      const Json& e = as_array(pj[r], path);
      if (e.size() != 3) fail(path, "expected [alpha, i, entries]");
      const GroupElement a = as_element(e[0], g, at(path, 0));
      const std::size_t i = as_index(e[1], at(path, 1));
      check_range(i, dim(a), at(path, 1));
      data.coproduct[a.index][i] = tensor2_from(e[2], cond, at(path, 2));
    }
  }
  {
    const Json& pj = blocks("counit");
    for (std::size_t r = 0; r < pj.size(); ++r) {
      const std::string path = at("counit", r);
      const Json& e = as_array(pj[r], path);
      if (e.size() != 3) fail(path, "expected [alpha, i, scalar]");
      const GroupElement a = as_element(e[0], g, at(path, 0));
      const std::size_t i = as_index(e[1], at(path, 1));
      check_range(i, dim(a), at(path, 1));
      data.counit[a.index][i] = as_scalar(e[2], cond, at(path, 2));
    }
  }
  {
    const Json& pj = blocks("antipode");
    for (std::size_t r = 0; r < pj.size(); ++r) {
      const std::string path = at("antipode", r);
      const Json& e = as_array(pj[r], path);
      if (e.size() != 3) fail(path, "expected [alpha, i, entries]");
      const GroupElement a = as_element(e[0], g, at(path, 0));
      const std::size_t i = as_index(e[1], at(path, 1));
      check_range(i, dim(a), at(path, 1));
      data.antipode[a.index][i] = vec_from(e[2], cond, at(path, 2));
    }
  }
  {
    const Json& pj = blocks("crossing");
    for (std::size_t r = 0; r < pj.size(); ++r) {
      const std::string path = at("crossing", r);
      const Json& e = as_array(pj[r], path);
      if (e.size() != 4) fail(path, "expected [beta, alpha, i, entries]");
      const GroupElement b = as_element(e[0], g, at(path, 0)), a = as_element(e[1], g, at(path, 1));
      const std::size_t i = as_index(e[2], at(path, 2));
      check_range(i, dim(a), at(path, 2));
      data.crossing[b.index * n + a.index][i] = vec_from(e[3], cond, at(path, 3));
    }
  }
  data.rmatrix = tensor2_from(field(j, "rmatrix", "algebra"), cond, "rmatrix");
  try {
    return HopfGAlgebra(std::move(data));
  } catch (const AlgebraError& e) {
    throw IoError(std::string("algebra: ") + e.what());
  }
}

Json diagram_to_json(const KirbyDiagram& d) {
  Json j;
  Json dotted = Json::array(), undotted = Json::array(), crossings = Json::array();
  for (const auto& dot : d.dotted) {
    Json passages = Json::array();
    for (const auto& ref : dot.passages) passages.push_back({ref.component, ref.position});
    dotted.push_back({{"id", dot.id}, {"passages", passages}});
  }
  for (const auto& comp : d.undotted) {
    Json events = Json::array();
    for (const auto& e : comp.events) {
      if (const auto* dp = std::get_if<DotPassage>(&e)) {
        events.push_back({{"dot", dp->dot}, {"dir", dp->dir == Direction::Down ? "down" : "up"}});
      } else {
        const auto& ce = std::get<CrossingEnd>(e);
        events.push_back({{"crossing", ce.crossing}, {"role", ce.role == Role::Over ? "over" : "under"}});
      }
    }
    undotted.push_back({{"id", comp.id}, {"events", events}});
  }
  for (const auto& x : d.crossings) crossings.push_back({{"id", x.id}, {"sign", x.sign == Sign::Positive ? "+" : "-"}});
  j["dotted"] = dotted;
  j["undotted"] = undotted;
  j["crossings"] = crossings;
  j["h3"] = d.h3;
  j["h4"] = d.h4;
  return j;
}

KirbyDiagram diagram_from_json(const Json& j) {
  KirbyDiagram d;
  if (!j.is_object()) fail("diagram", "expected an object");
  auto list = [&](const char* key) -> const Json& {
    static const Json empty = Json::array();
    return j.contains(key) ? as_array(j[key], key) : empty;
  };
  const Json& dj = list("dotted");
  for (std::size_t i = 0; i < dj.size(); ++i) {
    const std::string path = at("dotted", i);
    DottedComponent dot{as_index(field(dj[i], "id", path), path + ".id"), {}};
    const Json& pj = as_array(field(dj[i], "passages", path), path + ".passages");
    for (std::size_t k = 0; k < pj.size(); ++k) {
      const std::string pp = at(path + ".passages", k);
      const Json& ref = as_array(pj[k], pp);
      if (ref.size() != 2) fail(pp, "expected [undotted_id, event_position]");
      dot.passages.push_back({as_index(ref[0], at(pp, 0)), as_index(ref[1], at(pp, 1))});
    }
    d.dotted.push_back(std::move(dot));
  }
  const Json& uj = list("undotted");
  for (std::size_t i = 0; i < uj.size(); ++i) {
    const std::string path = at("undotted", i);
    UndottedComponent comp{as_index(field(uj[i], "id", path), path + ".id"), {}};
    const Json& ej = as_array(field(uj[i], "events", path), path + ".events");
    for (std::size_t k = 0; k < ej.size(); ++k) {
      const std::string ep = at(path + ".events", k);
      const Json& e = ej[k];
      if (!e.is_object()) fail(ep, "expected an event object");
      if (e.contains("dot")) {
        const Json& dir = field(e, "dir", ep);
        if (dir != "down" && dir != "up") fail(ep + ".dir", "expected \"down\" or \"up\"");
        comp.events.emplace_back(DotPassage{as_index(e["dot"], ep + ".dot"), dir == "down" ? Direction::Down : Direction::Up});
      } else if (e.contains("crossing")) {
        const Json& role = field(e, "role", ep);
        if (role != "over" && role != "under") fail(ep + ".role", "expected \"over\" or \"under\"");
        comp.events.emplace_back(
            CrossingEnd{as_index(e["crossing"], ep + ".crossing"), role == "over" ? Role::Over : Role::Under});
      } else {
        fail(ep, "event needs a \"dot\" or a \"crossing\" field");
      }
    }
    d.undotted.push_back(std::move(comp));
  }
  const Json& xj = list("crossings");
  for (std::size_t i = 0; i < xj.size(); ++i) {
    const std::string path = at("crossings", i);
    const Json& s = field(xj[i], "sign", path);
    if (s != "+" && s != "-") fail(path + ".sign", "expected \"+\" or \"-\"");
    d.crossings.push_back({as_index(field(xj[i], "id", path), path + ".id"), s == "+" ? Sign::Positive : Sign::Negative});
  }
  d.h3 = j.contains("h3") ? as_index(j["h3"], "h3") : 0;
  d.h4 = j.contains("h4") ? as_index(j["h4"], "h4") : 0;
  const ValidationReport rep = validate(d);
  if (!rep.ok()) fail("diagram", rep.problems.front());
  return d;
}

namespace {

const char* dir_name(Direction d) { return d == Direction::Down ? "down" : "up"; }
const char* sign_name(Sign s) { return s == Sign::Positive ? "+" : "-"; }

Direction dir_from(const Json& j, const std::string& path) {
  if (j == "down") return Direction::Down;
  if (j == "up") return Direction::Up;
  fail(path, "expected \"down\" or \"up\"");
}

Sign sign_from(const Json& j, const std::string& path) {
  if (j == "+") return Sign::Positive;
  if (j == "-") return Sign::Negative;
  fail(path, "expected \"+\" or \"-\"");
}

bool bool_from(const Json& j, const std::string& path) {
  if (!j.is_boolean()) fail(path, "expected true or false");
  return j.get<bool>();
}

}  // namespace

Json move_to_json(const MoveSpec& m, const FiniteGroup& g) {
  Json j;
  std::visit(
      [&](const auto& mv) {
        using T = std::decay_t<decltype(mv)>;
        using namespace moves;
        if constexpr (std::is_same_v<T, R2Insert>) {
          j = {{"type", "r2-insert"},          {"over_component", mv.over_component},
               {"over_position", mv.over_position}, {"under_component", mv.under_component},
               {"under_position", mv.under_position}, {"first_sign", sign_name(mv.first_sign)},
               {"parallel", mv.parallel}};
        } else if constexpr (std::is_same_v<T, R2Remove>) {
          j = {{"type", "r2-remove"}, {"first", mv.first}, {"second", mv.second}};
        } else if constexpr (std::is_same_v<T, R3>) {
          j = {{"type", "r3"}, {"crossings", {mv.a, mv.b, mv.c}}};
        } else if constexpr (std::is_same_v<T, CurlTransfer>) {
          j = {{"type", "curl-transfer"}, {"crossing", mv.crossing}};
          if (mv.to_position) j["to_position"] = *mv.to_position;
        } else if constexpr (std::is_same_v<T, FingerInsert>) {
          j = {{"type", "finger-insert"}, {"component", mv.component},     {"position", mv.position},
               {"dot", mv.dot},           {"dot_position", mv.dot_position}, {"first", dir_name(mv.first)},
               {"first_left", mv.first_left}};
        } else if constexpr (std::is_same_v<T, FingerRemove>) {
          j = {{"type", "finger-remove"}, {"component", mv.component}, {"position", mv.position}};
        } else if constexpr (std::is_same_v<T, DotReverse>) {
          j = {{"type", "dot-reverse"}, {"dot", mv.dot}};
        } else if constexpr (std::is_same_v<T, DotSlide>) {
          j = {{"type", "dot-slide"}, {"small", mv.small}, {"large", mv.large}};
        } else if constexpr (std::is_same_v<T, HandleSlide>) {
          j = {{"type", "handle-slide"}, {"moving", mv.moving}, {"over", mv.over}, {"position", mv.position}};
        } else if constexpr (std::is_same_v<T, HandleUnslide>) {
          j = {{"type", "handle-unslide"}, {"moving", mv.moving}, {"over", mv.over}};
        } else if constexpr (std::is_same_v<T, CancelPairInsert>) {
          j = {{"type", "cancel-pair-insert"}, {"dir", dir_name(mv.dir)}};
        } else if constexpr (std::is_same_v<T, CancelPairDelete>) {
          j = {{"type", "cancel-pair-delete"}, {"dot", mv.dot}};
        } else if constexpr (std::is_same_v<T, UnknotInsert>) {
          j = {{"type", "unknot-insert"}};
        } else if constexpr (std::is_same_v<T, UnknotDelete>) {
          j = {{"type", "unknot-delete"}, {"component", mv.component}};
        } else if constexpr (std::is_same_v<T, GlobalConjugate>) {
          j = {{"type", "global-conjugate"}, {"by", g.name(mv.by)}};
        } else if constexpr (std::is_same_v<T, Reorient>) {
          j = {{"type", "reorient"}, {"component", mv.component}};
        } else {
          j = {{"type", "rotate"}, {"component", mv.component}, {"shift", mv.shift}};
        }
      },
      m);
  return j;
}

MoveSpec move_from_json(const Json& j, const FiniteGroup& g) {
  using namespace moves;
  const std::string path = "move";
  const Json& tj = field(j, "type", path);
  if (!tj.is_string()) fail(path + ".type", "expected a string");
  const std::string type = tj.get<std::string>();
  auto idx = [&](const char* key) { return as_index(field(j, key, path), path + "." + key); };
  if (type == "r2-insert") {
    return R2Insert{idx("over_component"), idx("over_position"), idx("under_component"), idx("under_position"),
                    sign_from(field(j, "first_sign", path), path + ".first_sign"),
                    bool_from(field(j, "parallel", path), path + ".parallel")};
  }
  if (type == "r2-remove") return R2Remove{idx("first"), idx("second")};
  if (type == "r3") {
    const Json& c = as_array(field(j, "crossings", path), path + ".crossings");
    if (c.size() != 3) fail(path + ".crossings", "expected three crossing ids");
    return R3{as_index(c[0], path + ".crossings[0]"), as_index(c[1], path + ".crossings[1]"),
              as_index(c[2], path + ".crossings[2]")};
  }
  if (type == "curl-transfer") {
    CurlTransfer m{idx("crossing"), std::nullopt};
    if (j.contains("to_position")) m.to_position = idx("to_position");
    return m;
  }
  if (type == "finger-insert") {
    return FingerInsert{idx("component"), idx("position"), idx("dot"), idx("dot_position"),
                        dir_from(field(j, "first", path), path + ".first"),
                        bool_from(field(j, "first_left", path), path + ".first_left")};
  }
  if (type == "finger-remove") return FingerRemove{idx("component"), idx("position")};
  if (type == "dot-reverse") return DotReverse{idx("dot")};
  if (type == "dot-slide") return DotSlide{idx("small"), idx("large")};
  if (type == "handle-slide") return HandleSlide{idx("moving"), idx("over"), idx("position")};
  if (type == "handle-unslide") return HandleUnslide{idx("moving"), idx("over")};
  if (type == "cancel-pair-insert") return CancelPairInsert{dir_from(field(j, "dir", path), path + ".dir")};
  if (type == "cancel-pair-delete") return CancelPairDelete{idx("dot")};
  if (type == "unknot-insert") return UnknotInsert{};
  if (type == "unknot-delete") return UnknotDelete{idx("component")};
  if (type == "global-conjugate") return GlobalConjugate{as_element(field(j, "by", path), g, path + ".by")};
  if (type == "reorient") return Reorient{idx("component")};
  if (type == "rotate") return Rotate{idx("component"), idx("shift")};
  fail(path + ".type", "unknown move type \"" + type + "\"");
}

std::vector<MoveSpec> moves_from_json(const Json& j, const FiniteGroup& g) {
  const Json& steps = j.is_object() ? as_array(field(j, "steps", "script"), "steps") : as_array(j, "script");
  std::vector<MoveSpec> out;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    try {
      out.push_back(move_from_json(steps[i], g));
    } catch (const IoError& e) {
      throw IoError("step " + std::to_string(i) + ": " + e.what());
    }
  }
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError(path + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw IoError(path + ": " + e.what());
  }
}

}  // namespace hennings
