#include "lsc/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace lsc {

RingPtr Ring::make(std::vector<std::string> params, int lambdas) {
  if (lambdas < 1) throw std::invalid_argument("ring needs at least one lambda variable");
  std::vector<std::string> names;
  names.emplace_back("D");
  for (int k = 1; k <= lambdas; ++k) names.push_back("L" + std::to_string(k));
  names.emplace_back("M");
  names.emplace_back("T");
  for (auto& p : params) {
    if (std::find(names.begin(), names.end(), p) != names.end())
      throw std::invalid_argument("parameter name '" + p + "' clashes with a reserved or repeated name");
    names.push_back(std::move(p));
  }
  if (names.size() > kMaxVars) throw std::invalid_argument("too many indeterminates");
  return RingPtr(new Ring(std::move(names), lambdas));
}

std::optional<VarId> Ring::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return VarId{static_cast<std::uint8_t>(i)};
  return std::nullopt;
}

VarId Ring::lambda(int k) const {
  if (k < 1 || k > lambdas_) throw std::out_of_range("lambda slot L" + std::to_string(k) + " not registered");
  return VarId{static_cast<std::uint8_t>(k)};
}

std::span<const std::string> Ring::params() const {
  return std::span<const std::string>(names_).subspan(static_cast<std::size_t>(lambdas_) + 3);
}

// ---------------------------------------------------------------------------

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < exp.size(); ++i) {
    unsigned e = unsigned(exp[i]) + o.exp[i];
    if (e > 255) throw std::overflow_error("exponent overflow");
    r.exp[i] = static_cast<std::uint8_t>(e);
  }
  r.degree = static_cast<std::uint16_t>(degree + o.degree);
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  for (std::size_t i = 0; i < exp.size(); ++i)
    if (exp[i] > o.exp[i]) return false;
  return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < exp.size(); ++i) r.exp[i] = static_cast<std::uint8_t>(exp[i] - o.exp[i]);
  r.degree = static_cast<std::uint16_t>(degree - o.degree);
  return r;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree != b.degree) return a.degree > b.degree;
  return a.exp > b.exp;
}

// ---------------------------------------------------------------------------

const RingPtr& common_ring(const RingPtr& a, const RingPtr& b) {
  if (!a) return b;
  if (!b) return a;
  if (!a->same_as(*b)) throw ContextError("polynomials from different ring contexts");
  return a;
}

Poly::Poly(Scalar c) {
  if (c != 0) terms_.emplace(Monomial{}, std::move(c));
}

Poly::Poly(RingPtr ring, Scalar c) : Poly(std::move(c)) { ring_ = std::move(ring); }

Poly Poly::var(const RingPtr& ring, VarId v) {
  Monomial m;
  m.exp[v.index] = 1;
  m.degree = 1;
  return monomial(ring, m);
}

Poly Poly::monomial(const RingPtr& ring, const Monomial& m, Scalar c) {
  Poly p;
  p.ring_ = ring;
  if (c != 0) p.terms_.emplace(m, std::move(c));
  return p;
}

void Poly::adopt(const Poly& o) { ring_ = common_ring(ring_, o.ring_); }

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree == 0); }

Scalar Poly::constant_value() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Scalar(0) : it->second;
}

int Poly::total_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree; }

int Poly::degree_in(VarId v) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [m, c] : terms_) d = std::max<int>(d, m[v]);
  return d;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  adopt(o);
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  adopt(o);
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  r.ring_ = common_ring(a.ring_, b.ring_);
  if (a.terms_.empty() || b.terms_.empty()) return r;
  Scalar prod;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      prod = ca * cb;
      auto [it, inserted] = r.terms_.try_emplace(ma * mb, prod);
      if (!inserted) {
        it->second += prod;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  }
  return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly Poly::scaled(const Scalar& s) const {
  if (s == 0) return Poly(ring_, 0);
  Poly r = *this;
  for (auto& [m, c] : r.terms_) c *= s;
  return r;
}

Poly Poly::pow(unsigned n) const {
  Poly result(ring_, 1);
  Poly base = *this;
  while (n) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n) base *= base;
  }
  return result;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.ring_ && b.ring_) common_ring(a.ring_, b.ring_);
  return a.terms_ == b.terms_;
}

Poly Poly::substitute(VarId v, const Poly& repl) const {
  std::pair<VarId, Poly> one{v, repl};
  return substitute(std::span<const std::pair<VarId, Poly>>(&one, 1));
}

Poly Poly::substitute(std::span<const std::pair<VarId, Poly>> repl) const {
  RingPtr ring = ring_;
  for (const auto& [v, p] : repl) ring = common_ring(ring, p.ring_);

  // powers[i][k] = repl[i]^k, built lazily
  std::vector<std::vector<Poly>> powers(repl.size());
  auto power = [&](std::size_t i, unsigned k) -> const Poly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.emplace_back(ring, 1);
    while (cache.size() <= k) cache.push_back(cache.back() * repl[i].second);
    return cache[k];
  };

  // Group terms by the exponents of the substituted variables.
  std::map<std::vector<unsigned>, Poly> groups;
  for (const auto& [m, c] : terms_) {
    std::vector<unsigned> key(repl.size());
    Monomial rest = m;
    for (std::size_t i = 0; i < repl.size(); ++i) {
      auto idx = repl[i].first.index;
      key[i] = m.exp[idx];
      rest.degree = static_cast<std::uint16_t>(rest.degree - rest.exp[idx]);
      rest.exp[idx] = 0;
    }
    auto& g = groups[key];
    if (!g.ring_) g.ring_ = ring;
    g.terms_.emplace(rest, c);
  }

  Poly result(ring, 0);
  for (auto& [key, rest] : groups) {
    Poly term = std::move(rest);
    for (std::size_t i = 0; i < key.size(); ++i)
      if (key[i]) term *= power(i, key[i]);
    result += term;
  }
  return result;
}

Poly Poly::coefficient(VarId v, unsigned k) const {
  Poly r(ring_, 0);
  for (const auto& [m, c] : terms_) {
    if (m[v] != k) continue;
    Monomial rest = m;
    rest.exp[v.index] = 0;
    rest.degree = static_cast<std::uint16_t>(rest.degree - k);
    r.terms_.emplace(rest, c);
  }
  return r;
}

std::map<Monomial, Poly, MonomialOrder> Poly::collect(const std::function<bool(VarId)>& keep) const {
  std::map<Monomial, Poly, MonomialOrder> out;
  for (const auto& [m, c] : terms_) {
    Monomial kept, rest;
    for (std::size_t i = 0; i < m.exp.size(); ++i) {
      if (!m.exp[i]) continue;
      auto& target = keep(VarId{static_cast<std::uint8_t>(i)}) ? kept : rest;
      target.exp[i] = m.exp[i];
      target.degree = static_cast<std::uint16_t>(target.degree + m.exp[i]);
    }
    auto& slot = out[kept];
    if (!slot.ring_) slot.ring_ = ring_;
    slot.terms_.emplace(rest, c);
  }
  return out;
}

Poly Poly::divide_exact(const Poly& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  RingPtr ring = common_ring(ring_, d.ring_);
  const auto& [lm, lc] = *d.terms_.begin();
  Poly rem = *this;
  Poly quot(ring, 0);
  while (!rem.is_zero()) {
    const auto& [rm, rc] = *rem.terms_.begin();
    if (!lm.divides(rm)) throw std::domain_error("inexact polynomial division");
    Poly q = monomial(ring, rm / lm, rc / lc);
    rem -= q * d;
    quot += q;
  }
  return quot;
}

std::string scalar_str(const Scalar& s) { return s.get_str(); }

std::string Poly::str() const {
  return str([this](VarId v) { return ring_ ? ring_->name(v) : std::string("?"); });
}

std::string Poly::str(const NameFn& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    bool neg = c < 0;
    Scalar mag = neg ? Scalar(-c) : c;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < m.exp.size(); ++i) {
      if (!m.exp[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += names(VarId{static_cast<std::uint8_t>(i)});
      if (m.exp[i] > 1) mono += "^" + std::to_string(m.exp[i]);
    }
    if (mono.empty()) {
      out += scalar_str(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += scalar_str(mag) + "*" + mono;
    }
  }
  return out;
}

}  // namespace lsc
