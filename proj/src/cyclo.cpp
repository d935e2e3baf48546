#include "hennings/cyclo.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <iomanip>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace hennings {

namespace {

struct CyclotomicField {
  unsigned n = 1;
  unsigned phi = 1;
  std::vector<long> poly;
  // reduction[e] = x^e mod Phi_n as sparse integer coefficients, for 0 <= e < n.
  std::vector<std::vector<std::pair<unsigned, long>>> reduction;
};

std::vector<mpz_class> divide_monic(const std::vector<mpz_class>& num, const std::vector<long>& den) {
  std::vector<mpz_class> rem = num;
  const std::size_t dd = den.size() - 1;
  std::vector<mpz_class> quot(num.size() - dd);
  for (std::size_t i = num.size(); i-- > dd;) {
    mpz_class c = rem[i];
    quot[i - dd] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= c * den[j];
  }
  for (std::size_t i = 0; i < dd; ++i) {
    if (rem[i] != 0) throw ArithmeticError("cyclotomic division left a remainder");
  }
  return quot;
}

long to_long(const mpz_class& v) {
  if (!v.fits_slong_p()) throw ArithmeticError("cyclotomic coefficient exceeds machine range");
  return v.get_si();
}

std::unique_ptr<CyclotomicField> build_field(unsigned n) {
  auto field = std::make_unique<CyclotomicField>();
  field->n = n;
  field->poly = cyclotomic_polynomial(n);
  field->phi = static_cast<unsigned>(field->poly.size() - 1);
  const unsigned phi = field->phi;
  std::vector<mpz_class> cur(phi, 0);
  cur[0] = 1;
  field->reduction.resize(n);
  for (unsigned e = 0; e < n; ++e) {
    auto& row = field->reduction[e];
    for (unsigned r = 0; r < phi; ++r) {
      if (cur[r] != 0) row.emplace_back(r, to_long(cur[r]));
    }
    // multiply by x and reduce with the monic Phi_n
    mpz_class top = cur[phi - 1];
    for (unsigned r = phi - 1; r > 0; --r) cur[r] = cur[r - 1];
    cur[0] = 0;
    if (top != 0) {
      for (unsigned r = 0; r < phi; ++r) cur[r] -= top * field->poly[r];
    }
  }
  return field;
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

const CyclotomicField& field(unsigned n) {
  static std::map<unsigned, std::unique_ptr<CyclotomicField>> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;
  }
  auto built = build_field(n);
  std::lock_guard<std::mutex> lock(cache_mutex());
  auto [it, inserted] = cache.emplace(n, std::move(built));
  return *it->second;
}

unsigned lcm_conductor(unsigned a, unsigned b) { return std::lcm(a, b); }

}  // namespace

const std::vector<long>& cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw ArithmeticError("conductor must be positive");
  static std::map<unsigned, std::vector<long>> cache;
  static std::recursive_mutex m;
  std::lock_guard<std::recursive_mutex> lock(m);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::vector<mpz_class> poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d == 0) poly = divide_monic(poly, cyclotomic_polynomial(d));
  }
  std::vector<long> out;
  out.reserve(poly.size());
  for (const auto& c : poly) out.push_back(to_long(c));
  return cache.emplace(n, std::move(out)).first->second;
}

unsigned euler_phi(unsigned n) {
  return static_cast<unsigned>(cyclotomic_polynomial(n).size() - 1);
}

CycloScalar::CycloScalar(long value) : CycloScalar(Rational(value), 1) {}

CycloScalar::CycloScalar(Rational value, unsigned conductor) : conductor_(conductor) {
  if (conductor == 0) throw ArithmeticError("conductor must be positive");
  value.canonicalize();
  if (value != 0) terms_.emplace_back(0u, std::move(value));
}

CycloScalar CycloScalar::zeta(unsigned n, long e) {
  if (n == 0) throw ArithmeticError("conductor must be positive");
  const auto& f = field(n);
  long r = e % static_cast<long>(n);
  if (r < 0) r += n;
  std::vector<Term> terms;
  for (const auto& [exp, c] : f.reduction[static_cast<unsigned>(r)]) terms.emplace_back(exp, Rational(c));
  return CycloScalar(n, std::move(terms));
}

bool CycloScalar::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
}

Rational CycloScalar::rational() const {
  if (!is_rational()) throw ArithmeticError("scalar " + to_string() + " is not rational");
  return terms_.empty() ? Rational(0) : terms_[0].second;
}

std::vector<Rational> CycloScalar::dense() const {
  std::vector<Rational> out(field(conductor_).phi, 0);
  for (const auto& [e, c] : terms_) out[e] = c;
  return out;
}

CycloScalar CycloScalar::from_dense(unsigned conductor, const std::vector<Rational>& dense) {
  std::vector<Term> terms;
  for (unsigned e = 0; e < dense.size(); ++e) {
    if (dense[e] != 0) terms.emplace_back(e, dense[e]);
  }
  return CycloScalar(conductor, std::move(terms));
}

CycloScalar CycloScalar::embed(unsigned m) const {
  if (m == 0 || m % conductor_ != 0) {
    throw ArithmeticError("cannot embed Q(zeta_" + std::to_string(conductor_) + ") into Q(zeta_" +
                          std::to_string(m) + ")");
  }
  if (m == conductor_) return *this;
  const auto& f = field(m);
  const unsigned step = m / conductor_;
  std::vector<Rational> acc(f.phi, 0);
  for (const auto& [e, c] : terms_) {
    for (const auto& [r, k] : f.reduction[(e * step) % m]) acc[r] += c * k;
  }
  return from_dense(m, acc);
}

CycloScalar CycloScalar::conj() const {
  const auto& f = field(conductor_);
  std::vector<Rational> acc(f.phi, 0);
  for (const auto& [e, c] : terms_) {
    for (const auto& [r, k] : f.reduction[(conductor_ - e) % conductor_]) acc[r] += c * k;
  }
  return from_dense(conductor_, acc);
}

CycloScalar CycloScalar::operator-() const {
  CycloScalar out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

CycloScalar& CycloScalar::operator+=(const CycloScalar& rhs) {
  if (rhs.terms_.empty()) {
    if (rhs.conductor_ != conductor_) *this = embed(lcm_conductor(conductor_, rhs.conductor_));
    return *this;
  }
  const unsigned m = lcm_conductor(conductor_, rhs.conductor_);
  const CycloScalar a = embed(m);
  const CycloScalar b = rhs.embed(m);
  std::vector<Term> merged;
  merged.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  while (i != a.terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
      merged.push_back(*i++);
    } else if (i == a.terms_.end() || j->first < i->first) {
      merged.push_back(*j++);
    } else {
      Rational s = i->second + j->second;
      if (s != 0) merged.emplace_back(i->first, std::move(s));
      ++i;
      ++j;
    }
  }
  conductor_ = m;
  terms_ = std::move(merged);
  return *this;
}

CycloScalar& CycloScalar::operator-=(const CycloScalar& rhs) { return *this += -rhs; }

CycloScalar& CycloScalar::operator*=(const CycloScalar& rhs) {
  const unsigned m = lcm_conductor(conductor_, rhs.conductor_);
  if (terms_.empty() || rhs.terms_.empty()) {
    conductor_ = m;
    terms_.clear();
    return *this;
  }
  if (rhs.is_rational()) {
    if (m != conductor_) *this = embed(m);
    for (auto& t : terms_) t.second *= rhs.terms_[0].second;
    return *this;
  }
  if (is_rational()) {
    Rational s = terms_[0].second;
    *this = rhs.embed(m);
    for (auto& t : terms_) t.second *= s;
    return *this;
  }
  const CycloScalar a = embed(m);
  const CycloScalar b = rhs.embed(m);
  const auto& f = field(m);
  std::vector<Rational> acc(f.phi, 0);
  Rational prod;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      prod = ca * cb;
      for (const auto& [r, k] : f.reduction[(ea + eb) % m]) acc[r] += prod * k;
    }
  }
  *this = from_dense(m, acc);
  return *this;
}

CycloScalar CycloScalar::inverse() const {
  if (terms_.empty()) throw ArithmeticError("division by zero");
  if (is_rational()) return CycloScalar(1 / terms_[0].second, conductor_);
  // Solve (multiplication by this) * x = 1 over Q.
  const unsigned phi = field(conductor_).phi;
  std::vector<std::vector<Rational>> mat(phi, std::vector<Rational>(phi + 1, 0));
  for (unsigned j = 0; j < phi; ++j) {
    const auto col = (*this * zeta(conductor_, j)).dense();
    for (unsigned i = 0; i < phi; ++i) mat[i][j] = col[i];
  }
  mat[0][phi] = 1;
  for (unsigned c = 0; c < phi; ++c) {
    unsigned p = c;
    while (p < phi && mat[p][c] == 0) ++p;
    if (p == phi) throw ArithmeticError("singular multiplication map in Q(zeta_n)");
    std::swap(mat[p], mat[c]);
    const Rational pivot = mat[c][c];
    for (unsigned k = c; k <= phi; ++k) mat[c][k] /= pivot;
    for (unsigned r = 0; r < phi; ++r) {
      if (r == c || mat[r][c] == 0) continue;
      const Rational factor = mat[r][c];
      for (unsigned k = c; k <= phi; ++k) mat[r][k] -= factor * mat[c][k];
    }
  }
  std::vector<Rational> sol(phi);
  for (unsigned i = 0; i < phi; ++i) sol[i] = mat[i][phi];
  return from_dense(conductor_, sol);
}

CycloScalar& CycloScalar::operator/=(const CycloScalar& rhs) { return *this *= rhs.inverse(); }

bool operator==(const CycloScalar& a, const CycloScalar& b) {
  if (a.conductor_ == b.conductor_) return a.terms_ == b.terms_;
  if (a.terms_.empty() || b.terms_.empty()) return a.terms_.empty() && b.terms_.empty();
  const unsigned m = lcm_conductor(a.conductor_, b.conductor_);
  return a.embed(m).terms_ == b.embed(m).terms_;
}

namespace {

std::string render(const std::vector<CycloScalar::Term>& terms, const std::string& symbol) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << symbol << "^" << e;
    }
  }
  return os.str();
}

}  // namespace

std::string CycloScalar::to_string() const { return render(terms_, "z"); }

std::string CycloScalar::to_literal() const { return render(terms_, "zeta"); }

CycloScalar CycloScalar::parse(const std::string& text, unsigned conductor) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> ArithmeticError {
    return ArithmeticError("bad scalar literal \"" + text + "\" at offset " + std::to_string(pos) + ": " + why);
  };
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&](bool allow_sign) {
    std::size_t start = pos;
    if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) throw fail("expected digits");
    return text.substr(start, pos - start);
  };
  auto read_symbol = [&]() -> bool {
    if (text.compare(pos, 4, "zeta") == 0) {
      pos += 4;
      return true;
    }
    if (pos < text.size() && text[pos] == 'z') {
      ++pos;
      return true;
    }
    return false;
  };

  CycloScalar total(Rational(0), conductor);
  skip();
  if (pos == text.size()) throw fail("empty literal");
  bool first = true;
  while (true) {
    skip();
    if (pos == text.size()) break;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
      negative = text[pos] == '-';
      ++pos;
      skip();
    } else if (!first) {
      throw fail("expected '+' or '-'");
    }
    first = false;
    Rational coeff(1);
    long exponent = 0;
    if (!read_symbol()) {
      std::string num = read_int(false);
      std::string den = "1";
      if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = read_int(false);
      }
      if (mpz_class(den) == 0) throw fail("zero denominator");
      coeff = Rational(mpz_class(num), mpz_class(den));
      coeff.canonicalize();
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip();
        if (!read_symbol()) throw fail("expected zeta after '*'");
        exponent = 1;
      } else {
        exponent = 0;
      }
    } else {
      exponent = 1;
    }
    if (exponent == 1) {
      skip();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        skip();
        exponent = std::stol(read_int(true));
      }
    }
    if (negative) coeff = -coeff;
    total += CycloScalar(coeff, conductor) * zeta(conductor, exponent);
  }
  return total.embed(conductor);
}

std::complex<double> CycloScalar::to_complex() const {
  std::complex<double> z(0.0, 0.0);
  const double two_pi = 2.0 * std::acos(-1.0);
  for (const auto& [e, c] : terms_) {
    const double angle = two_pi * e / conductor_;
    z += c.get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return z;
}

std::ostream& operator<<(std::ostream& os, const CycloScalar& x) { return os << x.to_string(); }

std::string to_decimal(const CycloScalar& x) {
  const auto z = x.to_complex();
  auto clean = [](double v) { return std::abs(v) < 5e-13 ? 0.0 : v; };
  std::ostringstream os;
  os << std::setprecision(12) << clean(z.real());
  const double im = clean(z.imag());
  if (im != 0.0) os << (im < 0 ? " - " : " + ") << std::abs(im) << "i";
  return os.str();
}

}  // namespace hennings
