#include "hennings/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hennings {

namespace {

std::string triple(std::size_t a, std::size_t b, std::size_t c) {
  std::ostringstream os;
  os << "(" << a << ", " << b << ", " << c << ")";
  return os.str();
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<std::size_t>> table, std::vector<std::string> names) {
  const std::size_t n = table.size();
  if (n == 0) throw GroupError("group table is empty");
  FiniteGroup g;
  g.order_ = n;
  g.table_.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) {
      throw GroupError("group table row " + std::to_string(a) + " has " + std::to_string(table[a].size()) +
                       " entries, expected " + std::to_string(n));
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b] >= n) {
        throw GroupError("group table entry (" + std::to_string(a) + ", " + std::to_string(b) + ") = " +
                         std::to_string(table[a][b]) + " is out of range");
      }
      g.table_.push_back(table[a][b]);
    }
  }
  auto at = [&](std::size_t a, std::size_t b) { return g.table_[a * n + b]; };

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (at(at(a, b), c) != at(a, at(b, c))) {
          throw GroupError("associativity fails at triple " + triple(a, b, c));
        }
      }
    }
  }

  std::size_t id = n;
  for (std::size_t e = 0; e < n && id == n; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = at(e, a) == a && at(a, e) == a;
    if (ok) id = e;
  }
  if (id == n) throw GroupError("group table has no identity element");
  g.identity_ = id;

  g.inverses_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (at(a, b) == id && at(b, a) == id) {
        g.inverses_[a] = b;
        break;
      }
    }
    if (g.inverses_[a] == n) throw GroupError("element " + std::to_string(a) + " has no inverse");
  }

  if (names.empty()) {
    for (std::size_t a = 0; a < n; ++a) names.push_back(std::to_string(a));
  }
  if (names.size() != n) throw GroupError("expected " + std::to_string(n) + " element names");
  g.names_ = std::move(names);
  return g;
}

GroupElement FiniteGroup::pow(GroupElement a, long n) const {
  GroupElement base = n < 0 ? inv(a) : a;
  GroupElement out = identity();
  for (long i = 0; i < std::abs(n); ++i) out = mul(out, base);
  return out;
}

std::size_t FiniteGroup::element_order(GroupElement a) const {
  std::size_t k = 1;
  GroupElement x = a;
  while (!is_identity(x)) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order_; ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      if (table_[a * order_ + b] != table_[b * order_ + a]) return false;
    }
  }
  return true;
}

GroupElement FiniteGroup::parse_element(const std::string& token) const {
  for (std::size_t a = 0; a < order_; ++a) {
    if (names_[a] == token) return {a};
  }
  std::size_t used = 0;
  unsigned long idx = 0;
  try {
    idx = std::stoul(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != token.size() || idx >= order_) {
    throw GroupError("unknown group element \"" + token + "\"");
  }
  return {idx};
}

std::vector<GroupElement> FiniteGroup::elements() const {
  std::vector<GroupElement> out(order_);
  for (std::size_t a = 0; a < order_; ++a) out[a] = {a};
  return out;
}

std::vector<std::vector<std::size_t>> FiniteGroup::table() const {
  std::vector<std::vector<std::size_t>> out(order_);
  for (std::size_t a = 0; a < order_; ++a) {
    out[a].assign(table_.begin() + static_cast<long>(a * order_), table_.begin() + static_cast<long>((a + 1) * order_));
  }
  return out;
}

FiniteGroup cyclic_group(std::size_t k) {
  if (k == 0) throw GroupError("cyclic group order must be positive");
  std::vector<std::vector<std::size_t>> table(k, std::vector<std::size_t>(k));
  std::vector<std::string> names;
  for (std::size_t a = 0; a < k; ++a) {
    names.push_back("a^" + std::to_string(a));
    for (std::size_t b = 0; b < k; ++b) table[a][b] = (a + b) % k;
  }
  return FiniteGroup::from_table(std::move(table), std::move(names));
}

FiniteGroup product_group(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t n = g.order() * h.order();
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  std::vector<std::string> names(n);
  for (std::size_t a = 0; a < n; ++a) {
    GroupElement ga{a / h.order()}, ha{a % h.order()};
    names[a] = "(" + g.name(ga) + "," + h.name(ha) + ")";
    for (std::size_t b = 0; b < n; ++b) {
      GroupElement gb{b / h.order()}, hb{b % h.order()};
      table[a][b] = g.mul(ga, gb).index * h.order() + h.mul(ha, hb).index;
    }
  }
  return FiniteGroup::from_table(std::move(table), std::move(names));
}

FiniteGroup symmetric_group(std::size_t n) {
  if (n == 0) throw GroupError("symmetric group needs at least one letter");
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  auto index_of = [&](const std::vector<std::size_t>& q) {
    return static_cast<std::size_t>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  const std::size_t m = perms.size();
  std::vector<std::vector<std::size_t>> table(m, std::vector<std::size_t>(m));
  std::vector<std::string> names(m);
  for (std::size_t a = 0; a < m; ++a) {
    std::string nm = "[";
    for (std::size_t i = 0; i < n; ++i) nm += (i ? " " : "") + std::to_string(perms[a][i]);
    names[a] = nm + "]";
    for (std::size_t b = 0; b < m; ++b) {
      // (a*b)(i) = a(b(i))
      std::vector<std::size_t> q(n);
      for (std::size_t i = 0; i < n; ++i) q[i] = perms[a][perms[b][i]];
      table[a][b] = index_of(q);
    }
  }
  return FiniteGroup::from_table(std::move(table), std::move(names));
}

FiniteGroup parse_group_name(const std::string& text) {
  auto number_after = [&](const std::string& prefix) {
    const std::string rest = text.substr(prefix.size());
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(rest, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != rest.size()) throw GroupError("bad group name \"" + text + "\"");
    return static_cast<std::size_t>(v);
  };
  if (text.rfind("cyclic:", 0) == 0) return cyclic_group(number_after("cyclic:"));
  if (text.rfind("symmetric:", 0) == 0) return symmetric_group(number_after("symmetric:"));
  if (text.rfind("product:", 0) == 0) {
    const std::string rest = text.substr(8);
    const auto comma = rest.find(',');
    if (comma == std::string::npos) throw GroupError("product group needs two factors: \"" + text + "\"");
    return product_group(parse_group_name(rest.substr(0, comma)), parse_group_name(rest.substr(comma + 1)));
  }
  throw GroupError("unknown group name \"" + text + "\"");
}

std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += " ";
    out += "s" + std::to_string(w[i].generator + 1);
    if (w[i].inverse) out += "^-1";
  }
  return out;
}

std::string format_presentation(const Presentation& p) {
  std::string out = "<";
  for (std::size_t i = 0; i < p.num_generators; ++i) out += (i ? ", s" : "s") + std::to_string(i + 1);
  out += " | ";
  for (std::size_t i = 0; i < p.relations.size(); ++i) out += (i ? ", " : "") + format_word(p.relations[i]);
  return out + ">";
}

GroupElement evaluate_word(const FiniteGroup& g, const std::vector<GroupElement>& images, const Word& w) {
  GroupElement acc = g.identity();
  for (const auto& letter : w) {
    const GroupElement x = images.at(letter.generator);
    acc = g.mul(acc, letter.inverse ? g.inv(x) : x);
  }
  return acc;
}

bool satisfies(const FiniteGroup& g, const Presentation& p, const GroupHom& hom) {
  if (hom.images.size() != p.num_generators) return false;
  return std::all_of(p.relations.begin(), p.relations.end(),
                     [&](const Word& w) { return g.is_identity(evaluate_word(g, hom.images, w)); });
}

std::vector<GroupHom> enumerate_homs(const Presentation& p, const FiniteGroup& g) {
  const std::size_t m = p.num_generators;
  // A relation can be checked once every generator it mentions is assigned.
  std::vector<std::vector<const Word*>> ready(m + 1);
  for (const auto& w : p.relations) {
    std::size_t needed = 0;
    for (const auto& letter : w) needed = std::max(needed, letter.generator + 1);
    ready[needed].push_back(&w);
  }
  std::vector<GroupHom> out;
  std::vector<GroupElement> images(m);
  auto ok_at = [&](std::size_t depth) {
    return std::all_of(ready[depth].begin(), ready[depth].end(),
                       [&](const Word* w) { return g.is_identity(evaluate_word(g, images, *w)); });
  };
  if (!ok_at(0)) return out;
  auto recurse = [&](auto&& self, std::size_t depth) -> void {
    if (depth == m) {
      out.push_back(GroupHom{images});
      return;
    }
    for (std::size_t a = 0; a < g.order(); ++a) {
      images[depth] = {a};
      if (ok_at(depth + 1)) self(self, depth + 1);
    }
  };
  recurse(recurse, 0);
  return out;
}

}  // namespace hennings
