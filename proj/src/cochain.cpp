#include "lsc/cochain.hpp"

#include <algorithm>
#include <numeric>

namespace lsc {

namespace {

std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

void require_lambdas(const RingPtr& ring, int needed) {
  if (ring->lambda_count() < needed)
    throw ContextError("ring has too few lambda variables for this cochain degree");
}

Poly sum_of(const RingPtr& ring, std::span<const Poly> ps) {
  Poly s(ring, 0);
  for (const auto& p : ps) s += p;
  return s;
}

// Substitute X_k -> lams[k-1] in a table entry.
Element specialize(const RingPtr& ring, const Element& e, std::span<const Poly> lams) {
  std::vector<std::pair<VarId, Poly>> subs;
  for (std::size_t k = 0; k < lams.size(); ++k) subs.emplace_back(ring->lambda(static_cast<int>(k) + 1), lams[k]);
  return subs.empty() ? e : e.substitute(subs);
}

}  // namespace

Cochain Cochain::zero(const RingPtr& ring, int degree, Flavor flavor, std::size_t arg_rank,
                      std::size_t target_rank) {
  if (degree < 1) throw ModuleError("cochain degree must be at least 1");
  Cochain g;
  g.degree = degree;
  g.flavor = flavor;
  g.arg_rank = arg_rank;
  g.target_rank = target_rank;
  g.table.assign(ipow(arg_rank, degree), Element::zero(ring, target_rank));
  return g;
}

Cochain Cochain::zero_hom(const RingPtr& ring, int degree, std::size_t arg_rank, std::size_t hom_source_rank,
                          std::size_t target_rank) {
  Cochain g = zero(ring, degree, Flavor::lie, arg_rank, target_rank);
  g.values = ValueKind::hom;
  g.hom_source_rank = hom_source_rank;
  for (auto& e : g.table) e = Element::zero(ring, hom_source_rank * target_rank);
  return g;
}

std::size_t Cochain::tuple_count() const { return ipow(arg_rank, degree); }

std::size_t Cochain::index(std::span<const std::size_t> t) const {
  if (t.size() != static_cast<std::size_t>(degree)) throw ModuleError("cochain index has wrong arity");
  std::size_t idx = 0;
  for (auto i : t) {
    if (i >= arg_rank) throw ModuleError("cochain index out of range");
    idx = idx * arg_rank + i;
  }
  return idx;
}

std::vector<std::size_t> Cochain::tuple(std::size_t idx) const {
  std::vector<std::size_t> t(degree);
  for (int k = degree - 1; k >= 0; --k) {
    t[k] = idx % arg_rank;
    idx /= arg_rank;
  }
  return t;
}

bool Cochain::is_zero() const {
  return std::all_of(table.begin(), table.end(), [](const Element& e) { return e.is_zero(); });
}

Cochain Cochain::operator+(const Cochain& o) const {
  Cochain r = *this;
  for (std::size_t i = 0; i < table.size(); ++i) r.table[i] += o.table.at(i);
  return r;
}

Cochain Cochain::operator-(const Cochain& o) const {
  Cochain r = *this;
  for (std::size_t i = 0; i < table.size(); ++i) r.table[i] -= o.table.at(i);
  return r;
}

Cochain Cochain::times(const Poly& p) const {
  Cochain r = *this;
  for (auto& e : r.table) e = e.times(p);
  return r;
}

Poly value_derivation(const RingPtr& ring, ValueKind kind) {
  return kind == ValueKind::module ? d_var(ring) : -Poly::var(ring, ring->mu());
}

Element eval_cochain(const RingPtr& ring, const Cochain& g, std::span<const Element> args,
                     std::span<const Poly> lams) {
  const std::size_t n = g.degree;
  if (args.size() != n || lams.size() + 1 != n) throw ModuleError("eval_cochain: wrong number of arguments");
  const VarId D = ring->d();
  const Poly last = value_derivation(ring, g.values) + sum_of(ring, lams);

  // Per argument: the nonzero basis components with antilinearity applied.
  std::vector<std::vector<std::pair<std::size_t, Poly>>> parts(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (args[k].rank() != g.arg_rank) throw ModuleError("eval_cochain: argument of wrong rank");
    const Poly repl = k + 1 < n ? -lams[k] : last;
    for (std::size_t i = 0; i < g.arg_rank; ++i)
      if (!args[k][i].is_zero()) parts[k].emplace_back(i, args[k][i].substitute(D, repl));
    if (parts[k].empty()) return Element::zero(ring, g.width());
  }

  Element out = Element::zero(ring, g.width());
  std::vector<std::size_t> pos(n, 0), idx(n);
  while (true) {
    Poly coeff(ring, 1);
    for (std::size_t k = 0; k < n; ++k) {
      idx[k] = parts[k][pos[k]].first;
      coeff *= parts[k][pos[k]].second;
    }
    const Element& entry = g.at(idx);
    if (!entry.is_zero()) out += specialize(ring, entry, lams).times(coeff);
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (++pos[k] < parts[k].size()) break;
      pos[k] = 0;
      if (k == 0) return out;
    }
    if (n == 0) return out;
  }
}

// The symmetry group acts on slots 1..m (m = n-1 for LSC, n for LIE). For a
// permutation s, (s.g)[t] = g[t o s] with X_k -> Lam_{s(k)}, where Lam_n is the
// implicit last spectral variable -dsym - X1 - ... - X(n-1).
static Cochain permuted(const RingPtr& ring, const Cochain& g, const std::vector<std::size_t>& s) {
  const std::size_t n = g.degree;
  std::vector<Poly> lam_all;
  for (std::size_t k = 1; k < n; ++k) lam_all.push_back(lambda_var(ring, static_cast<int>(k)));
  lam_all.push_back(-value_derivation(ring, g.values) - sum_of(ring, lam_all));

  std::vector<std::pair<VarId, Poly>> subs;
  for (std::size_t k = 0; k + 1 < n; ++k) subs.emplace_back(ring->lambda(static_cast<int>(k) + 1), lam_all[s[k]]);

  Cochain out = g;
  std::vector<std::size_t> src(n);
  for (std::size_t idx = 0; idx < g.tuple_count(); ++idx) {
    auto t = g.tuple(idx);
    for (std::size_t k = 0; k < n; ++k) src[k] = k < s.size() ? t[s[k]] : t[k];
    const Element& e = g.at(src);
    out.table[idx] = subs.empty() ? e : e.substitute(subs);
  }
  return out;
}

static std::size_t symmetry_slots(const Cochain& g) {
  return g.flavor == Flavor::lie ? g.degree : g.degree - 1;
}

Report validate_cochain(const RingPtr& ring, const Cochain& g) {
  require_lambdas(ring, g.degree - 1);
  Report report;
  auto& skew = report.add("skew-symmetry");
  const std::size_t m = symmetry_slots(g);
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t t = s + 1; t < m; ++t) {
      std::vector<std::size_t> perm(m);
      std::iota(perm.begin(), perm.end(), 0);
      std::swap(perm[s], perm[t]);
      Cochain swapped = permuted(ring, g, perm);
      for (std::size_t idx = 0; idx < g.tuple_count(); ++idx) {
        Element r = g.table[idx] + swapped.table[idx];
        if (r.is_zero()) continue;
        auto tup = g.tuple(idx);
        tup.push_back(s);
        tup.push_back(t);
        skew.record(std::move(tup), r);
      }
    }
  return report;
}

Cochain antisymmetrize(const RingPtr& ring, const Cochain& g) {
  require_lambdas(ring, g.degree - 1);
  const std::size_t m = symmetry_slots(g);
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  Cochain out = g.times(Poly(ring, 0));
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Cochain p = permuted(ring, g, perm);
    out = inversions % 2 == 0 ? out + p : out - p;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Element> basis_args(const RingPtr& ring, std::size_t rank, const std::vector<std::size_t>& t) {
  std::vector<Element> out;
  for (auto i : t) out.push_back(Element::basis(ring, rank, i));
  return out;
}

template <class T>
std::vector<T> without(const std::vector<T>& v, std::size_t i) {
  std::vector<T> r;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (k != i) r.push_back(v[k]);
  return r;
}

template <class T>
std::vector<T> without(const std::vector<T>& v, std::size_t i, std::size_t j) {
  std::vector<T> r;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (k != i && k != j) r.push_back(v[k]);
  return r;
}

Poly sign(std::size_t e) { return e % 2 == 0 ? Poly(1) : Poly(-1); }

}  // namespace

Cochain delta_lsc(const LscAlgebra& a, const RepPair& rep, const Cochain& g) {
  const auto& ring = a.ring;
  if (g.flavor != Flavor::lsc || g.values != ValueKind::module) throw ModuleError("delta_lsc needs an LSC cochain");
  if (g.arg_rank != a.rank() || g.target_rank != rep.rank()) throw ModuleError("delta_lsc: rank mismatch");
  const std::size_t n = g.degree;
  require_lambdas(ring, static_cast<int>(n));

  std::vector<Poly> lam;
  for (std::size_t k = 1; k <= n; ++k) lam.push_back(lambda_var(ring, static_cast<int>(k)));
  const Poly total = sum_of(ring, lam);
  auto gamma = [&](const std::vector<Element>& args, const std::vector<Poly>& ls) {
    return eval_cochain(ring, g, args, ls);
  };
  auto bracket = [&](const Element& x, const Element& y, const Poly& l) {
    return a.mul(x, y, l) - eval_conjugate(ring, a.product, x, y, l);
  };

  Cochain out = Cochain::zero(ring, static_cast<int>(n) + 1, Flavor::lsc, g.arg_rank, g.target_rank);
  for (std::size_t idx = 0; idx < out.tuple_count(); ++idx) {
    const auto args = basis_args(ring, a.rank(), out.tuple(idx));
    Element acc = Element::zero(ring, rep.rank());
    for (std::size_t i = 0; i < n; ++i) {
      const Poly s = sign(i);
      const auto ls = without(lam, i);
      // a_i acting on gamma(..., a_{n+1})
      acc += left_act(a, rep, args[i], gamma(without(args, i), ls), lam[i]).times(s);
      // gamma(..., a_i) acting on a_{n+1} from the right
      auto moved = without(args, i, n);
      moved.push_back(args[i]);
      acc += right_act(a, rep, gamma(moved, ls), args[n], total).times(s);
      // gamma(..., a_i lam_i a_{n+1})
      auto inner = without(args, i, n);
      inner.push_back(a.mul(args[i], args[n], lam[i]));
      acc -= gamma(inner, ls).times(s);
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        std::vector<Element> br_args{bracket(args[i], args[j], lam[i])};
        for (const auto& x : without(args, i, j)) br_args.push_back(x);
        std::vector<Poly> ls{lam[i] + lam[j]};
        for (const auto& l : without(lam, i, j)) ls.push_back(l);
        acc += gamma(br_args, ls).times(sign(i + j));
      }
    out.table[idx] = std::move(acc);
  }
  return out;
}

LieValueAction module_action(const RingPtr& ring, const LambdaMap& action) {
  LieValueAction act;
  act.kind = ValueKind::module;
  act.width = action.out_rank;
  act.target_rank = action.out_rank;
  act.act = [ring, action](const Element& x, const Element& v, const Poly& lam) {
    return eval_lambda(ring, action, x, v, lam);
  };
  return act;
}

LieValueAction hom_action(const LscAlgebra& a, const RepPair& rep) {
  LieValueAction act;
  act.kind = ValueKind::hom;
  act.width = a.rank() * rep.rank();
  act.target_rank = rep.rank();
  act.hom_source_rank = a.rank();
  act.act = [a, rep](const Element& x, const Element& v, const Poly& lam) {
    const std::size_t r = a.rank(), m = rep.rank();
    ConformalMap f = ConformalMap::zero(a.ring, r, m);
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t j = 0; j < m; ++j) f.images[k][j] = v[k * m + j];
    ConformalMap g = hom_module_act(a, rep, x, f, lam);
    Element out = Element::zero(a.ring, r * m);
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t j = 0; j < m; ++j) out[k * m + j] = g.images[k][j];
    return out;
  };
  return act;
}

Cochain d_lie(const RingPtr& ring, const LambdaMap& bracket, const LieValueAction& action, const Cochain& g) {
  if (g.flavor != Flavor::lie) throw ModuleError("d_lie needs a Lie cochain");
  if (g.values != action.kind || g.width() != action.width) throw ModuleError("d_lie: value space mismatch");
  if (g.arg_rank != bracket.left_rank) throw ModuleError("d_lie: rank mismatch");
  const std::size_t n = g.degree;
  require_lambdas(ring, static_cast<int>(n));

  std::vector<Poly> lam;
  for (std::size_t k = 1; k <= n; ++k) lam.push_back(lambda_var(ring, static_cast<int>(k)));
  // lam_{n+1} = -dsym - lam_1 - ... - lam_n
  lam.push_back(-value_derivation(ring, g.values) - sum_of(ring, lam));
  auto gamma = [&](const std::vector<Element>& args, std::vector<Poly> ls) {
    ls.pop_back();  // the last spectral variable is implicit
    return eval_cochain(ring, g, args, ls);
  };

  Cochain out = g;
  out.degree = static_cast<int>(n) + 1;
  out.table.assign(g.tuple_count() * g.arg_rank, Element::zero(ring, g.width()));
  for (std::size_t idx = 0; idx < out.tuple_count(); ++idx) {
    const auto args = basis_args(ring, g.arg_rank, out.tuple(idx));
    Element acc = Element::zero(ring, g.width());
    for (std::size_t i = 0; i <= n; ++i)
      acc += action.act(args[i], gamma(without(args, i), without(lam, i)), lam[i]).times(sign(i));
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = i + 1; j <= n; ++j) {
        std::vector<Element> br_args{eval_lambda(ring, bracket, args[i], args[j], lam[i])};
        for (const auto& x : without(args, i, j)) br_args.push_back(x);
        std::vector<Poly> ls{lam[i] + lam[j]};
        for (const auto& l : without(lam, i, j)) ls.push_back(l);
        acc += gamma(br_args, ls).times(sign(i + j));
      }
    out.table[idx] = std::move(acc);
  }
  return out;
}

// ---------------------------------------------------------------------------

Cochain phi(const RingPtr& ring, const Cochain& g) {
  if (g.values != ValueKind::hom) throw ModuleError("phi needs a hom-valued cochain");
  const std::size_t m = g.target_rank, r = g.hom_source_rank;
  const int n = g.degree + 1;
  require_lambdas(ring, n - 1);
  Poly total(ring, 0);
  for (int k = 1; k < n; ++k) total += lambda_var(ring, k);

  Cochain out = Cochain::zero(ring, n, Flavor::lsc, r, m);
  if (g.arg_rank != r) throw ModuleError("phi: argument rank differs from the map source rank");
  for (std::size_t idx = 0; idx < g.tuple_count(); ++idx) {
    auto t = g.tuple(idx);
    Element v = g.table[idx].substitute(ring->mu(), total);
    for (std::size_t k = 0; k < r; ++k) {
      t.push_back(k);
      for (std::size_t j = 0; j < m; ++j) out.at(t)[j] = v[k * m + j];
      t.pop_back();
    }
  }
  return out;
}

Cochain phi_inv(const RingPtr& ring, const Cochain& g, std::size_t algebra_rank) {
  if (g.flavor != Flavor::lsc || g.values != ValueKind::module) throw ModuleError("phi_inv needs an LSC cochain");
  if (g.degree < 2) throw ModuleError("phi_inv needs degree at least 2");
  const int n = g.degree;
  const std::size_t m = g.target_rank;
  Poly repl = Poly::var(ring, ring->mu());
  for (int k = 1; k < n - 1; ++k) repl -= lambda_var(ring, k);

  Cochain out = Cochain::zero_hom(ring, n - 1, algebra_rank, algebra_rank, m);
  for (std::size_t idx = 0; idx < out.tuple_count(); ++idx) {
    auto t = out.tuple(idx);
    for (std::size_t k = 0; k < algebra_rank; ++k) {
      t.push_back(k);
      Element v = g.at(t).substitute(ring->lambda(n - 1), repl);
      t.pop_back();
      for (std::size_t j = 0; j < m; ++j) out.table[idx][k * m + j] = v[j];
    }
  }
  return out;
}

Cochain cochain_from_table(const RingPtr& ring, const LambdaMap& t, Flavor flavor) {
  if (t.left_rank != t.right_rank) throw ModuleError("2-cochain tables need equal argument ranks");
  Cochain g = Cochain::zero(ring, 2, flavor, t.left_rank, t.out_rank);
  g.table = t.table;
  return g;
}

LambdaMap table_from_cochain(const RingPtr& ring, const Cochain& g) {
  if (g.degree != 2 || g.values != ValueKind::module) throw ModuleError("table_from_cochain needs a 2-cochain");
  LambdaMap t(ring, g.arg_rank, g.arg_rank, g.target_rank);
  t.table = g.table;
  return t;
}

Cochain cochain_from_map(const RingPtr& ring, const ModuleMap& m) {
  Cochain g = Cochain::zero(ring, 1, Flavor::lsc, m.source_rank, m.target_rank);
  g.table = m.images;
  return g;
}

ModuleMap map_from_cochain(const Cochain& g) {
  if (g.degree != 1 || g.values != ValueKind::module) throw ModuleError("map_from_cochain needs a 1-cochain");
  return ModuleMap{g.arg_rank, g.target_rank, g.table};
}

}  // namespace lsc
