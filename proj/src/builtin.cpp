#include "hennings/builtin.hpp"

#include <array>
#include <map>
#include <regex>

namespace hennings {

HopfGAlgebra build_cyclic(const CyclicParams& p) {
  if (p.k == 0 || p.l == 0) throw AlgebraError("cyclic algebra needs k, l >= 1");
  if (p.d >= p.l) {
    throw AlgebraError("cyclic algebra parameter d = " + std::to_string(p.d) + " must lie in [0, " +
                       std::to_string(p.l) + ")");
  }
  const std::size_t k = p.k, l = p.l, m = k * l;
  HopfGAlgebraData data;
  data.group = cyclic_group(k);
  data.conductor = static_cast<unsigned>(l);
  data.dims.assign(k, l);
  auto split = [&](std::size_t e) { return std::pair{e % k, e / k}; };

  data.product.resize(k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      auto& block = data.product[a * k + b];
      block.resize(l * l);
      for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j) {
          const auto [grade, idx] = split((i * k + a + j * k + b) % m);
          (void)grade;
          block[i * l + j] = {{idx, CycloScalar(1)}};
        }
    }
  data.unit = {{0, CycloScalar(1)}};
  data.coproduct.resize(k);
  data.counit.resize(k);
  data.antipode.resize(k);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t i = 0; i < l; ++i) {
      data.coproduct[a].push_back({{IndexTuple{i, i}, CycloScalar(1)}});
      data.counit[a].push_back(CycloScalar(1));
      const auto [grade, idx] = split((m - (i * k + a)) % m);
      (void)grade;
      data.antipode[a].push_back({{idx, CycloScalar(1)}});
    }
  }
  data.crossing.resize(k * k);
  for (auto& block : data.crossing) {
    for (std::size_t i = 0; i < l; ++i) block.push_back({{i, CycloScalar(1)}});
  }
  const CycloScalar inv_l(Rational(1, static_cast<long>(l)));
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) {
      const auto w = CycloScalar::zeta(static_cast<unsigned>(l), -static_cast<long>(i * j)) * inv_l;
      add_entry(data.rmatrix, IndexTuple{i, (p.d * j) % l}, w);
    }
  return HopfGAlgebra(std::move(data));
}

namespace {

// Elements of H_8 as rational combinations of the eight monomials.
using H8 = std::array<Rational, 8>;

constexpr std::size_t mono(std::size_t a, std::size_t b, std::size_t c) { return (a & 1) + 2 * (b & 1) + 4 * c; }

H8 basis8(std::size_t i) {
  H8 v{};
  v[i] = 1;
  return v;
}

H8 mul_mono(std::size_t u, std::size_t v) {
  std::size_t a1 = u & 1, b1 = (u >> 1) & 1, c1 = u >> 2;
  std::size_t a2 = v & 1, b2 = (v >> 1) & 1, c2 = v >> 2;
  // z x^e y^f = x^f y^e z
  if (c1) std::swap(a2, b2);
  const std::size_t a = a1 ^ a2, b = b1 ^ b2;
  H8 out{};
  if (c1 + c2 < 2) {
    out[mono(a, b, c1 + c2)] = 1;
    return out;
  }
  // z^2 = (1 + x + y - xy) / 2
  const Rational half(1, 2);
  out[mono(a, b, 0)] += half;
  out[mono(a ^ 1, b, 0)] += half;
  out[mono(a, b ^ 1, 0)] += half;
  out[mono(a ^ 1, b ^ 1, 0)] -= half;
  return out;
}

H8 mul8(const H8& x, const H8& y) {
  H8 out{};
  for (std::size_t i = 0; i < 8; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < 8; ++j) {
      if (y[j] == 0) continue;
      const H8 p = mul_mono(i, j);
      for (std::size_t t = 0; t < 8; ++t) out[t] += x[i] * y[j] * p[t];
    }
  }
  return out;
}

using H8x8 = std::map<std::pair<std::size_t, std::size_t>, Rational>;

H8x8 mul88(const H8x8& x, const H8x8& y) {
  H8x8 out;
  for (const auto& [p, c] : x)
    for (const auto& [q, d] : y) {
      const H8 l = mul_mono(p.first, q.first);
      const H8 r = mul_mono(p.second, q.second);
      for (std::size_t s = 0; s < 8; ++s) {
        if (l[s] == 0) continue;
        for (std::size_t t = 0; t < 8; ++t) {
          if (r[t] != 0) out[{s, t}] += c * d * l[s] * r[t];
        }
      }
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

H8x8 coproduct8(std::size_t u) {
  const std::size_t a = u & 1, b = (u >> 1) & 1, c = u >> 2;
  const std::size_t g = mono(a, b, 0);
  H8x8 out{{{g, g}, Rational(1)}};
  if (c) {
    const Rational half(1, 2);
    const std::size_t z = mono(0, 0, 1), xz = mono(1, 0, 1), yz = mono(0, 1, 1);
    // (1 (x) 1 + 1 (x) x + y (x) 1 - y (x) x)(z (x) z) / 2
    const H8x8 dz{{{z, z}, half}, {{z, xz}, half}, {{yz, z}, half}, {{yz, xz}, -half}};
    out = mul88(out, dz);
  }
  return out;
}

std::size_t antipode8(std::size_t u) {
  const std::size_t a = u & 1, b = (u >> 1) & 1, c = u >> 2;
  return c ? mono(b, a, 1) : u;
}

// The automorphism mu = conjugation by x.
std::size_t mu8(std::size_t u) {
  const std::size_t a = u & 1, b = (u >> 1) & 1, c = u >> 2;
  return c ? mono(a ^ 1, b ^ 1, 1) : u;
}

std::size_t act(std::size_t g, std::size_t u) { return g ? mu8(u) : u; }

SparseVec to_sparse(const H8& v) {
  SparseVec out;
  for (std::size_t i = 0; i < 8; ++i) add_entry(out, i, CycloScalar(v[i]));
  return out;
}

}  // namespace

HopfGAlgebra build_kac_paljutkin() {
  HopfGAlgebraData data;
  data.group = FiniteGroup::from_table({{0, 1}, {1, 0}}, {"1", "mu"});
  data.conductor = 4;
  data.dims = {8, 8};
  data.product.resize(4);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j)
          data.product[a * 2 + b].push_back(to_sparse(mul8(basis8(i), basis8(act(a, j)))));
  data.unit = {{0, CycloScalar(1)}};
  data.coproduct.resize(2);
  data.counit.resize(2);
  data.antipode.resize(2);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t i = 0; i < 8; ++i) {
      SparseTensor t;
      for (const auto& [pq, c] : coproduct8(i)) add_entry(t, IndexTuple{pq.first, pq.second}, CycloScalar(c));
      data.coproduct[a].push_back(std::move(t));
      data.counit[a].push_back(CycloScalar(1));
      // mu is its own inverse
      data.antipode[a].push_back({{act(a, antipode8(i)), CycloScalar(1)}});
    }
  data.crossing.resize(4);
  for (std::size_t b = 0; b < 2; ++b)
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t i = 0; i < 8; ++i) data.crossing[b * 2 + a].push_back({{act(b, i), CycloScalar(1)}});
  const CycloScalar half(Rational(1, 2));
  const std::size_t one = mono(0, 0, 0), x = mono(1, 0, 0), y = mono(0, 1, 0);
  add_entry(data.rmatrix, IndexTuple{one, one}, half);
  add_entry(data.rmatrix, IndexTuple{x, one}, half);
  add_entry(data.rmatrix, IndexTuple{one, y}, half);
  add_entry(data.rmatrix, IndexTuple{x, y}, -half);
  return HopfGAlgebra(std::move(data));
}

bool is_builtin_algebra_name(const std::string& name) {
  return name == "kac-paljutkin" || name.rfind("cyclic:", 0) == 0;
}

HopfGAlgebra parse_builtin_algebra(const std::string& name) {
  if (name == "kac-paljutkin") return build_kac_paljutkin();
  static const std::regex re(R"(cyclic:k=(\d+),l=(\d+),d=(\d+))");
  std::smatch m;
  if (std::regex_match(name, m, re)) {
    try {
      return build_cyclic({std::stoul(m[1]), std::stoul(m[2]), std::stoul(m[3])});
    } catch (const std::out_of_range&) {
      throw AlgebraError("cyclic parameters out of range in \"" + name + "\"");
    }
  }
  throw AlgebraError("unknown builtin algebra \"" + name + "\"");
}

}  // namespace hennings
