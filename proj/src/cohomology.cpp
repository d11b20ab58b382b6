#include "lsc/cohomology.hpp"

namespace lsc {

SparseVec coordinates(const Cochain& g) {
  SparseVec v;
  const std::size_t w = g.width();
  for (std::size_t idx = 0; idx < g.table.size(); ++idx)
    for (std::size_t k = 0; k < w; ++k) add_coordinates(v, idx * w + k, g.table[idx][k]);
  return v;
}

namespace {

// Exponent vectors of total degree <= cap in the given variables.
void monomials(const RingPtr& ring, const std::vector<VarId>& vars, std::size_t at, int budget, Monomial cur,
               std::vector<Poly>& out) {
  if (at == vars.size()) {
    out.push_back(Poly::monomial(ring, cur));
    return;
  }
  for (int e = 0; e <= budget; ++e) {
    Monomial m = cur;
    m.exp[vars[at].index] = static_cast<std::uint8_t>(e);
    m.degree = static_cast<std::uint16_t>(cur.degree + e);
    monomials(ring, vars, at + 1, budget - e, m, out);
  }
}

// Keep a maximal independent subfamily, checking ranks incrementally.
std::vector<Cochain> independent(std::vector<Cochain> family) {
  std::vector<Cochain> kept;
  std::vector<SparseVec> coords;
  for (auto& g : family) {
    if (g.is_zero()) continue;
    coords.push_back(coordinates(g));
    if (rank_of(coords) == coords.size()) {
      kept.push_back(std::move(g));
    } else {
      coords.pop_back();
    }
  }
  return kept;
}

}  // namespace

std::vector<Cochain> capped_cochains(const RingPtr& ring, int degree, std::size_t arg_rank,
                                     std::size_t target_rank, int cap) {
  std::vector<VarId> vars{ring->d()};
  for (int k = 1; k < degree; ++k) vars.push_back(ring->lambda(k));
  std::vector<Poly> monos;
  monomials(ring, vars, 0, cap, Monomial{}, monos);

  const Cochain zero = Cochain::zero(ring, degree, Flavor::lsc, arg_rank, target_rank);
  std::vector<Cochain> out;
  for (std::size_t idx = 0; idx < zero.tuple_count(); ++idx)
    for (std::size_t k = 0; k < target_rank; ++k)
      for (const auto& m : monos) {
        Cochain g = zero;
        g.table[idx][k] = m;
        out.push_back(degree <= 2 ? std::move(g) : antisymmetrize(ring, g));
      }
  return degree <= 2 ? out : independent(std::move(out));
}

bool is_cocycle(const LscAlgebra& a, const RepPair& rep, const Cochain& g) {
  return delta_lsc(a, rep, g).is_zero();
}

bool is_cocycle(const RingPtr& ring, const LambdaMap& bracket, const LieValueAction& action, const Cochain& g) {
  return d_lie(ring, bracket, action, g).is_zero();
}

std::optional<CoboundaryWitness> coboundary_solve(const LscAlgebra& a, const RepPair& rep, const Cochain& omega,
                                                  int cap) {
  const auto& ring = a.ring;
  if (omega.degree < 2) return std::nullopt;  // nothing below degree 1
  if (omega.is_zero())
    return CoboundaryWitness{Cochain::zero(ring, omega.degree - 1, Flavor::lsc, a.rank(), rep.rank()), Poly(1)};

  auto basis = capped_cochains(ring, omega.degree - 1, a.rank(), rep.rank(), cap);
  std::vector<SparseVec> images;
  for (const auto& b : basis) images.push_back(coordinates(delta_lsc(a, rep, b)));
  auto sol = solve_combination(images, coordinates(omega));
  if (!sol) return std::nullopt;

  Cochain eta = Cochain::zero(ring, omega.degree - 1, Flavor::lsc, a.rank(), rep.rank());
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (!sol->numerators[k].is_zero()) eta = eta + basis[k].times(sol->numerators[k]);

  Poly d = sol->denominator;
  if (d.is_constant()) return CoboundaryWitness{eta.times(Poly(1 / d.constant_value())), Poly(1)};
  try {
    Cochain q = eta;
    for (auto& e : q.table)
      for (auto& c : e.c) c = c.divide_exact(d);
    return CoboundaryWitness{q, Poly(1)};
  } catch (const std::domain_error&) {
    return CoboundaryWitness{eta, d};
  }
}

CohomologyReport h_dim_bounded(const LscAlgebra& a, const RepPair& rep, int degree, int cap_z, int cap_b) {
  if (degree < 1 || cap_z < 0 || cap_b < 0) throw std::invalid_argument("h_dim_bounded: bad degree or caps");
  const auto& ring = a.ring;
  CohomologyReport rep_out{degree, cap_z, cap_b, 0, 0, {}};

  auto space = capped_cochains(ring, degree, a.rank(), rep.rank(), cap_z);
  std::vector<SparseVec> space_coords, space_images;
  for (const auto& g : space) {
    space_coords.push_back(coordinates(g));
    space_images.push_back(coordinates(delta_lsc(a, rep, g)));
  }
  const std::size_t dim_space = rank_of(space_coords);
  rep_out.dim_z = dim_space - rank_of(space_images);

  std::vector<Cochain> kernel;
  for (const auto& x : kernel_of(space_images)) {
    Cochain g = Cochain::zero(ring, degree, Flavor::lsc, a.rank(), rep.rank());
    for (std::size_t k = 0; k < x.size(); ++k)
      if (!x[k].is_zero()) g = g + space[k].times(x[k]);
    kernel.push_back(std::move(g));
  }
  rep_out.cocycle_basis = independent(std::move(kernel));

  if (degree >= 2) {
    auto lower = capped_cochains(ring, degree - 1, a.rank(), rep.rank(), cap_b);
    std::vector<SparseVec> bounds;
    for (const auto& g : lower) bounds.push_back(coordinates(delta_lsc(a, rep, g)));
    const std::size_t dim_bounds = rank_of(bounds);
    std::vector<SparseVec> both = bounds;
    both.insert(both.end(), space_coords.begin(), space_coords.end());
    rep_out.dim_b = dim_bounds + dim_space - rank_of(both);
  }
  return rep_out;
}

}  // namespace lsc
