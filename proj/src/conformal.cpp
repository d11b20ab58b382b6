#include "lsc/conformal.hpp"

#include <algorithm>
#include <set>

namespace lsc {

FreeModule::FreeModule(std::vector<std::string> names) : basis(std::move(names)) {
  if (basis.empty()) throw ModuleError("free module needs a positive rank");
  std::set<std::string> seen(basis.begin(), basis.end());
  if (seen.size() != basis.size()) throw ModuleError("basis names must be distinct");
}

std::size_t FreeModule::index_of(const std::string& name) const {
  auto it = std::find(basis.begin(), basis.end(), name);
  if (it == basis.end()) throw ModuleError("unknown basis element '" + name + "'");
  return static_cast<std::size_t>(it - basis.begin());
}

Element Element::zero(const RingPtr& ring, std::size_t rank) {
  return Element(std::vector<Poly>(rank, Poly(ring, 0)));
}

Element Element::basis(const RingPtr& ring, std::size_t rank, std::size_t i) {
  Element e = zero(ring, rank);
  e.c.at(i) = Poly(ring, 1);
  return e;
}

bool Element::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](const Poly& p) { return p.is_zero(); });
}

Element& Element::operator+=(const Element& o) {
  if (o.c.size() != c.size()) throw ModuleError("element rank mismatch");
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
  return *this;
}

Element& Element::operator-=(const Element& o) {
  if (o.c.size() != c.size()) throw ModuleError("element rank mismatch");
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
  return *this;
}

Element Element::operator-() const {
  Element r = *this;
  for (auto& p : r.c) p = -p;
  return r;
}

Element Element::times(const Poly& p) const {
  Element r = *this;
  for (auto& q : r.c) q = q * p;
  return r;
}

Element Element::substitute(VarId v, const Poly& repl) const {
  Element r = *this;
  for (auto& q : r.c) q = q.substitute(v, repl);
  return r;
}

Element Element::substitute(std::span<const std::pair<VarId, Poly>> repl) const {
  Element r = *this;
  for (auto& q : r.c) q = q.substitute(repl);
  return r;
}

LambdaMap::LambdaMap(const RingPtr& ring, std::size_t left, std::size_t right, std::size_t out)
    : left_rank(left), right_rank(right), out_rank(out), table(left * right, Element::zero(ring, out)) {}

bool LambdaMap::is_zero() const {
  return std::all_of(table.begin(), table.end(), [](const Element& e) { return e.is_zero(); });
}

Poly lambda_var(const RingPtr& ring, int k) { return Poly::var(ring, ring->lambda(k)); }
Poly d_var(const RingPtr& ring) { return Poly::var(ring, ring->d()); }
Poly conjugate_of(const RingPtr& ring, const Poly& lam) { return -d_var(ring) - lam; }

Element eval_lambda(const RingPtr& ring, const LambdaMap& map, const Element& x, const Element& y,
                    const Poly& lam) {
  if (x.rank() != map.left_rank || y.rank() != map.right_rank)
    throw ModuleError("eval_lambda: argument rank does not match the table");
  const VarId D = ring->d();
  const Poly Dp = d_var(ring);
  const Poly left_sub = -lam;
  const Poly right_sub = Dp + lam;

  std::vector<Poly> xs(x.rank()), ys(y.rank());
  for (std::size_t i = 0; i < x.rank(); ++i)
    if (!x[i].is_zero()) xs[i] = x[i].substitute(D, left_sub);
  for (std::size_t j = 0; j < y.rank(); ++j)
    if (!y[j].is_zero()) ys[j] = y[j].substitute(D, right_sub);

  Element out = Element::zero(ring, map.out_rank);
  const VarId L1 = ring->lambda(1);
  for (std::size_t i = 0; i < x.rank(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.rank(); ++j) {
      if (y[j].is_zero()) continue;
      const Element& entry = map.at(i, j);
      if (entry.is_zero()) continue;
      Poly scale = xs[i] * ys[j];
      for (std::size_t k = 0; k < map.out_rank; ++k) {
        if (entry[k].is_zero()) continue;
        out[k] += scale * entry[k].substitute(L1, lam);
      }
    }
  }
  return out;
}

Element eval_conjugate(const RingPtr& ring, const LambdaMap& map, const Element& x, const Element& y,
                       const Poly& lam) {
  return eval_lambda(ring, map, y, x, conjugate_of(ring, lam));
}

Poly dual_pair(const RingPtr& ring, const DualElement& f, const Element& v, const Poly& lam) {
  if (f.rank() != v.rank()) throw ModuleError("dual_pair: rank mismatch");
  const VarId D = ring->d();
  Poly out(ring, 0);
  for (std::size_t i = 0; i < f.rank(); ++i) {
    if (f[i].is_zero() || v[i].is_zero()) continue;
    out += f[i].substitute(D, -lam) * v[i].substitute(D, lam);
  }
  return out;
}

}  // namespace lsc
