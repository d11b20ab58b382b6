#include "lsc/algebra.hpp"

#include <algorithm>

namespace lsc {

ModuleMap ModuleMap::zero(const RingPtr& ring, std::size_t source, std::size_t target) {
  return ModuleMap{source, target, std::vector<Element>(source, Element::zero(ring, target))};
}

ModuleMap ModuleMap::identity(const RingPtr& ring, std::size_t rank) { return scalar(ring, rank, Poly(ring, 1)); }

ModuleMap ModuleMap::scalar(const RingPtr& ring, std::size_t rank, const Poly& factor) {
  ModuleMap m = zero(ring, rank, rank);
  for (std::size_t i = 0; i < rank; ++i) m.images[i][i] = factor;
  return m;
}

Element ModuleMap::operator()(const Element& x) const {
  if (x.rank() != source_rank) throw ModuleError("module map applied to element of wrong rank");
  RingPtr ring;
  for (const auto& p : x.c) ring = common_ring(ring, p.ring());
  Element out = Element::zero(ring, target_rank);
  for (std::size_t j = 0; j < source_rank; ++j) {
    if (x[j].is_zero()) continue;
    out += images[j].times(x[j]);
  }
  return out;
}

ModuleMap ModuleMap::compose(const ModuleMap& other) const {
  if (other.target_rank != source_rank) throw ModuleError("module map composition rank mismatch");
  ModuleMap r{other.source_rank, target_rank, {}};
  for (const auto& img : other.images) r.images.push_back((*this)(img));
  return r;
}

ModuleMap ModuleMap::operator+(const ModuleMap& o) const {
  ModuleMap r = *this;
  for (std::size_t i = 0; i < images.size(); ++i) r.images[i] += o.images.at(i);
  return r;
}

ModuleMap ModuleMap::operator-(const ModuleMap& o) const {
  ModuleMap r = *this;
  for (std::size_t i = 0; i < images.size(); ++i) r.images[i] -= o.images.at(i);
  return r;
}

ModuleMap ModuleMap::times(const Poly& p) const {
  ModuleMap r = *this;
  for (auto& img : r.images) img = img.times(p);
  return r;
}

bool ModuleMap::is_zero() const {
  return std::all_of(images.begin(), images.end(), [](const Element& e) { return e.is_zero(); });
}

// ---------------------------------------------------------------------------

LscAlgebra LscAlgebra::unchecked(RingPtr ring, FreeModule module, LambdaMap product) {
  if (product.left_rank != module.rank() || product.right_rank != module.rank() ||
      product.out_rank != module.rank())
    throw ModuleError("product table does not match module rank");
  return LscAlgebra{std::move(ring), std::move(module), std::move(product), false};
}

LscAlgebra LscAlgebra::make(RingPtr ring, FreeModule module, LambdaMap product) {
  LscAlgebra a = unchecked(std::move(ring), std::move(module), std::move(product));
  Report r = check_lsc_axioms(a);
  if (!r.pass()) throw AxiomError("product does not satisfy the left-symmetric conformal identity", std::move(r));
  a.checked = true;
  return a;
}

LieConformalAlgebra LieConformalAlgebra::unchecked(RingPtr ring, FreeModule module, LambdaMap bracket) {
  if (bracket.left_rank != module.rank() || bracket.right_rank != module.rank() ||
      bracket.out_rank != module.rank())
    throw ModuleError("bracket table does not match module rank");
  return LieConformalAlgebra{std::move(ring), std::move(module), std::move(bracket), false};
}

LieConformalAlgebra LieConformalAlgebra::make(RingPtr ring, FreeModule module, LambdaMap bracket) {
  LieConformalAlgebra r = unchecked(std::move(ring), std::move(module), std::move(bracket));
  Report rep = check_lie_axioms(r);
  if (!rep.pass()) throw AxiomError("bracket does not satisfy the Lie conformal axioms", std::move(rep));
  r.checked = true;
  return r;
}

Report check_lsc_axioms(const RingPtr& ring, std::size_t rank, const LambdaMap& product) {
  Report report;
  auto& assoc = report.add("left-symmetry");
  const Poly lam = lambda_var(ring, 1);
  const Poly mu = Poly::var(ring, ring->mu());
  const Poly sum = lam + mu;
  auto e = [&](std::size_t i) { return Element::basis(ring, rank, i); };
  auto mul = [&](const Element& x, const Element& y, const Poly& l) { return eval_lambda(ring, product, x, y, l); };

  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j)
      for (std::size_t k = 0; k < rank; ++k) {
        Element lhs = mul(mul(e(i), e(j), lam), e(k), sum) - mul(e(i), mul(e(j), e(k), mu), lam);
        Element rhs = mul(mul(e(j), e(i), mu), e(k), sum) - mul(e(j), mul(e(i), e(k), lam), mu);
        assoc.record({i, j, k}, lhs - rhs);
      }
  return report;
}

Report check_lie_axioms(const RingPtr& ring, std::size_t rank, const LambdaMap& bracket) {
  Report report;
  const Poly lam = lambda_var(ring, 1);
  const Poly mu = Poly::var(ring, ring->mu());
  const Poly sum = lam + mu;
  auto e = [&](std::size_t i) { return Element::basis(ring, rank, i); };
  auto br = [&](const Element& x, const Element& y, const Poly& l) { return eval_lambda(ring, bracket, x, y, l); };

  {
    auto& skew = report.add("skew-symmetry");
    for (std::size_t i = 0; i < rank; ++i)
      for (std::size_t j = 0; j < rank; ++j)
        skew.record({i, j}, br(e(i), e(j), lam) + eval_conjugate(ring, bracket, e(i), e(j), lam));
  }
  auto& jacobi = report.add("jacobi");
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j)
      for (std::size_t k = 0; k < rank; ++k) {
        Element r = br(e(i), br(e(j), e(k), mu), lam) - br(br(e(i), e(j), lam), e(k), sum) -
                    br(e(j), br(e(i), e(k), lam), mu);
        jacobi.record({i, j, k}, r);
      }
  return report;
}

LambdaMap skew_table(const RingPtr& ring, const LambdaMap& product) {
  if (product.left_rank != product.right_rank) throw ModuleError("skew_table needs a square table");
  const std::size_t r = product.left_rank;
  const Poly lam = lambda_var(ring, 1);
  LambdaMap out(ring, r, r, product.out_rank);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      Element ei = Element::basis(ring, r, i), ej = Element::basis(ring, r, j);
      out.at(i, j) = eval_lambda(ring, product, ei, ej, lam) - eval_conjugate(ring, product, ei, ej, lam);
    }
  return out;
}

LieConformalAlgebra sub_adjacent(const LscAlgebra& a) {
  if (!a.checked) {
    Report r = check_lsc_axioms(a);
    if (!r.pass()) throw AxiomError("sub_adjacent: input is not a left-symmetric conformal algebra", std::move(r));
  }
  auto g = LieConformalAlgebra::unchecked(a.ring, a.module, skew_table(a.ring, a.product));
  g.checked = true;
  return g;
}

bool is_left_symmetric(const StructureConstants& s) {
  const std::size_t n = s.dim;
  // mul(x, y) for coordinate vectors
  auto mul = [&](const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
    std::vector<Scalar> out(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (y[j] == 0) continue;
        for (std::size_t k = 0; k < n; ++k) out[k] += x[i] * y[j] * s.at(i, j, k);
      }
    }
    return out;
  };
  auto unit = [&](std::size_t i) {
    std::vector<Scalar> v(n);
    v[i] = 1;
    return v;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        auto x = unit(i), y = unit(j), z = unit(k);
        auto l1 = mul(mul(x, y), z), l2 = mul(x, mul(y, z));
        auto r1 = mul(mul(y, x), z), r2 = mul(y, mul(x, z));
        for (std::size_t t = 0; t < n; ++t)
          if (l1[t] - l2[t] != r1[t] - r2[t]) return false;
      }
  return true;
}

LscAlgebra current_algebra(const RingPtr& ring, FreeModule module, const StructureConstants& s) {
  if (module.rank() != s.dim) throw ModuleError("current_algebra: dimension mismatch");
  if (!is_left_symmetric(s)) throw AxiomError("structure constants are not left-symmetric", Report{});
  LambdaMap product(ring, s.dim, s.dim, s.dim);
  for (std::size_t i = 0; i < s.dim; ++i)
    for (std::size_t j = 0; j < s.dim; ++j)
      for (std::size_t k = 0; k < s.dim; ++k) product.at(i, j)[k] = Poly(ring, s.at(i, j, k));
  auto a = LscAlgebra::unchecked(ring, std::move(module), std::move(product));
  a.checked = true;
  return a;
}

CheckResult check_homomorphism(const ModuleMap& phi, const LscAlgebra& source, const LscAlgebra& target) {
  if (phi.source_rank != source.rank() || phi.target_rank != target.rank())
    throw ModuleError("homomorphism ranks do not match the algebras");
  CheckResult res{"homomorphism", true, {}};
  const Poly lam = lambda_var(source.ring, 1);
  for (std::size_t i = 0; i < source.rank(); ++i)
    for (std::size_t j = 0; j < source.rank(); ++j) {
      Element lhs = phi(source.mul(source.basis(i), source.basis(j), lam));
      Element rhs = target.mul(phi.images[i], phi.images[j], lam);
      res.record({i, j}, lhs - rhs);
    }
  return res;
}

}  // namespace lsc
