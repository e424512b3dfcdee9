#include "grothkit/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace grothkit {

std::string VarId::name() const {
  switch (cls) {
    case VarClass::Beta:
      return "b";
    case VarClass::X:
      return "x" + std::to_string(index);
    case VarClass::Y:
      return "y" + std::to_string(index);
    case VarClass::Z:
      return "z" + std::to_string(index);
  }
  return "?";
}

std::optional<VarId> VarId::parse_name(std::string_view s) {
  if (s == "b") return beta();
  if (s.size() < 2) return std::nullopt;
  VarClass cls;
  switch (s[0]) {
    case 'x':
      cls = VarClass::X;
      break;
    case 'y':
      cls = VarClass::Y;
      break;
    case 'z':
      cls = VarClass::Z;
      break;
    default:
      return std::nullopt;
  }
  uint32_t idx = 0;
  for (size_t i = 1; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return std::nullopt;
    idx = idx * 10 + static_cast<uint32_t>(s[i] - '0');
  }
  if (idx == 0) return std::nullopt;
  return VarId{cls, idx};
}

Monomial Monomial::var(VarId v, uint32_t exp) {
  Monomial m;
  if (exp > 0) m.factors_.push_back({v.code(), exp});
  return m;
}

uint64_t Monomial::degree() const {
  uint64_t d = 0;
  for (const auto& [v, e] : factors_) d += e;
  return d;
}

uint32_t Monomial::exponent(VarId v) const {
  for (const auto& [c, e] : factors_)
    if (c == v.code()) return e;
  return 0;
}

Monomial Monomial::times(const Monomial& o) const {
  Monomial r;
  r.factors_.reserve(factors_.size() + o.factors_.size());
  size_t i = 0, j = 0;
  while (i < factors_.size() || j < o.factors_.size()) {
    if (j == o.factors_.size() ||
        (i < factors_.size() && factors_[i].first < o.factors_[j].first)) {
      r.factors_.push_back(factors_[i++]);
    } else if (i == factors_.size() || o.factors_[j].first < factors_[i].first) {
      r.factors_.push_back(o.factors_[j++]);
    } else {
      r.factors_.push_back({factors_[i].first, factors_[i].second + o.factors_[j].second});
      ++i;
      ++j;
    }
  }
  return r;
}

bool Monomial::term_less(const Monomial& a, const Monomial& b) {
  uint64_t da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  size_t i = 0, j = 0;
  while (i < a.factors_.size() && j < b.factors_.size()) {
    if (a.factors_[i].first != b.factors_[j].first) {
      // the monomial holding the earlier variable has a positive exponent
      // where the other has zero, so it sorts first
      return a.factors_[i].first < b.factors_[j].first;
    }
    if (a.factors_[i].second != b.factors_[j].second)
      return a.factors_[i].second > b.factors_[j].second;
    ++i;
    ++j;
  }
  return i < a.factors_.size();
}

std::string Monomial::str() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [code, exp] : factors_) {
    if (!out.empty()) out += "*";
    VarId v{static_cast<VarClass>(code >> 28), code & 0x0fffffffu};
    out += v.name();
    if (exp > 1) out += "^" + std::to_string(exp);
  }
  return out;
}

Poly Poly::constant(BigInt c) { return term(Monomial(), std::move(c)); }

Poly Poly::term(Monomial m, BigInt c) {
  Poly p;
  if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
  return p;
}

bool Poly::is_one() const {
  return terms_.size() == 1 && terms_[0].first.is_constant() && terms_[0].second.is_one();
}

BigInt Poly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), m,
      [](const auto& t, const Monomial& key) { return Monomial::term_less(t.first, key); });
  if (it != terms_.end() && it->first == m) return it->second;
  return BigInt();
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  std::vector<std::pair<Monomial, BigInt>> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() ||
        (i < terms_.size() && Monomial::term_less(terms_[i].first, o.terms_[j].first))) {
      merged.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() ||
               Monomial::term_less(o.terms_[j].first, terms_[i].first)) {
      merged.push_back(o.terms_[j++]);
    } else {
      BigInt c = terms_[i].second + o.terms_[j].second;
      if (!c.is_zero()) merged.push_back({std::move(terms_[i].first), std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Poly Poly::negated() const {
  Poly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator-=(const Poly& o) { return *this += o.negated(); }

Poly Poly::times_monomial(const Monomial& m) const {
  Poly r = *this;
  for (auto& [mm, c] : r.terms_) mm = mm.times(m);
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  // multiply by the sparser side term-by-term
  const Poly& big = a.terms_.size() >= b.terms_.size() ? a : b;
  const Poly& small = a.terms_.size() >= b.terms_.size() ? b : a;
  for (const auto& [m, c] : small.terms_) {
    Poly piece = big.times_monomial(m);
    for (auto& [mm, cc] : piece.terms_) cc = cc * c;
    r += piece;
  }
  return r;
}

Poly Poly::substitute(const std::map<VarId, Poly>& assignment) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    Monomial rest;
    Poly factor = Poly::constant(c);
    for (const auto& [code, exp] : m.factors_) {
      VarId v{static_cast<VarClass>(code >> 28), code & 0x0fffffffu};
      auto it = assignment.find(v);
      if (it == assignment.end()) {
        rest = rest.times(Monomial::var(v, exp));
      } else {
        for (uint32_t e = 0; e < exp; ++e) factor *= it->second;
        if (factor.is_zero()) break;
      }
    }
    out += factor.times_monomial(rest);
  }
  return out;
}

Poly Poly::at_beta_zero() const {
  return substitute({{VarId::beta(), Poly::zero()}});
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    BigInt abs = c.sign() < 0 ? -c : c;
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    if (m.is_constant()) {
      out += abs.str();
    } else {
      if (!abs.is_one()) out += abs.str() + "*";
      out += m.str();
    }
  }
  return out;
}

namespace {

struct Parser {
  std::string_view s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && s[pos] == ' ') ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() { return s[pos]; }

  std::string token() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])))) ++pos;
    return std::string(s.substr(start, pos - start));
  }

  BigInt number() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument("Poly::parse: expected number");
    return BigInt::parse(s.substr(start, pos - start));
  }
};

}  // namespace

Poly Poly::parse(std::string_view text) {
  Parser p{text};
  Poly out;
  if (p.eof()) throw std::invalid_argument("Poly::parse: empty input");
  bool first = true;
  while (!p.eof()) {
    int sign = 1;
    p.skip_ws();
    if (p.peek() == '+' || p.peek() == '-') {
      sign = p.peek() == '-' ? -1 : 1;
      ++p.pos;
    } else if (!first) {
      throw std::invalid_argument("Poly::parse: expected + or - between terms");
    }
    first = false;
    p.skip_ws();
    BigInt coeff(1);
    bool saw_coeff = false;
    if (p.pos < text.size() && std::isdigit(static_cast<unsigned char>(p.peek()))) {
      coeff = p.number();
      saw_coeff = true;
    }
    Monomial m;
    bool expect_factor = !saw_coeff;
    while (true) {
      p.skip_ws();
      if (p.pos < text.size() && p.peek() == '*') {
        ++p.pos;
        expect_factor = true;
      } else if (!expect_factor) {
        break;
      }
      if (p.eof()) {
        if (expect_factor && !saw_coeff) throw std::invalid_argument("Poly::parse: dangling *");
        break;
      }
      if (!std::isalpha(static_cast<unsigned char>(p.peek()))) {
        if (expect_factor && saw_coeff)
          throw std::invalid_argument("Poly::parse: expected variable after *");
        break;
      }
      std::string name = p.token();
      auto var = VarId::parse_name(name);
      if (!var) throw std::invalid_argument("Poly::parse: unknown variable '" + name + "'");
      uint32_t exp = 1;
      p.skip_ws();
      if (p.pos < text.size() && p.peek() == '^') {
        ++p.pos;
        BigInt e = p.number();
        exp = static_cast<uint32_t>(e.to_int64());
      }
      m = m.times(Monomial::var(*var, exp));
      expect_factor = false;
    }
    if (sign < 0) coeff = -coeff;
    out += Poly::term(std::move(m), std::move(coeff));
  }
  return out;
}

}  // namespace grothkit
