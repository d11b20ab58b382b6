#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "definition.hpp"
#include "lsc/deformation.hpp"
#include "lsc/tstar.hpp"

using namespace lsc;
using lscdef::Block;
using lscdef::BlockKind;
using lscdef::Decl;
using lscdef::DefinitionFile;
using lscdef::Equation;
using json = nlohmann::ordered_json;
using Names = std::vector<std::string>;

namespace {

/// Bad input: exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string file;
  std::string cochain, omega, omega1, omega2, theta, map, form, thetas, target;
  std::string rep;
  int degree = 2;
  int degree_z = 4;
  int degree_b = 6;
  int order = 4;
  int samples = 10;
  unsigned seed = 1;
  bool json = false;
  bool dual_left = false;
};

// ------------------------------------------------------------------ loading

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot read file");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Inputs {
  RingPtr ring;
  DefinitionFile main;
  std::map<std::string, DefinitionFile> aux;

  const DefinitionFile& get(const std::string& key) const { return aux.at(key); }
};

/// Parses the main file and the auxiliary files (by option name) over one ring.
Inputs load(const std::string& main_path, const std::vector<std::pair<std::string, std::string>>& extra) {
  Inputs in;
  std::vector<std::pair<std::string, std::string>> texts{{main_path, slurp(main_path)}};
  for (const auto& [key, path] : extra) texts.emplace_back(path, slurp(path));
  std::vector<std::string> params;
  for (const auto& [path, text] : texts) {
    try {
      for (auto& p : lscdef::scan_params(text))
        if (std::find(params.begin(), params.end(), p) == params.end()) params.push_back(p);
    } catch (const lscdef::ParseError& e) {
      throw InputError(path + ":" + e.what());
    }
  }
  try {
    in.ring = Ring::make(params);
  } catch (const std::invalid_argument& e) {
    throw InputError(main_path + ":1:1: " + e.what());
  }
  try {
    in.main = lscdef::parse_definition(texts[0].second, in.ring);
  } catch (const lscdef::ParseError& e) {
    throw InputError(main_path + ":" + e.what());
  }
  for (std::size_t i = 0; i < extra.size(); ++i) {
    try {
      in.aux[extra[i].first] = lscdef::parse_definition(texts[i + 1].second, in.ring, &in.main);
    } catch (const lscdef::ParseError& e) {
      throw InputError(extra[i].second + ":" + e.what());
    }
  }
  return in;
}

// ------------------------------------------------------------------ model

std::size_t index_in(const Names& names, const std::string& n, const Equation& e, const char* what) {
  auto it = std::find(names.begin(), names.end(), n);
  if (it == names.end())
    throw InputError(std::to_string(e.pos.line) + ":" + std::to_string(e.pos.col) + ": '" + n + "' is not a basis vector of the " +
                     what);
  return static_cast<std::size_t>(it - names.begin());
}

Element element_of(const RingPtr& ring, const Equation& e, const Names& out) {
  Element v = Element::zero(ring, out.size());
  for (const auto& [n, p] : e.rhs) v[index_in(out, n, e, "target")] += p;
  return v;
}

LambdaMap table_of(const RingPtr& ring, const Block* b, const Names& left, const Names& right, const Names& out) {
  LambdaMap t(ring, left.size(), right.size(), out.size());
  if (!b) return t;
  for (const auto& e : b->eqs)
    t.at(index_in(left, e.lhs[0], e, "left argument"), index_in(right, e.lhs[1], e, "right argument")) =
        element_of(ring, e, out);
  return t;
}

Names dual_names(const Names& n) {
  Names out;
  for (const auto& x : n) out.push_back(x + "*");
  return out;
}

const Decl& need_algebra(const DefinitionFile& f) {
  const Decl* d = f.algebra();
  if (!d) throw InputError("no algebra declared");
  return *d;
}

LscAlgebra algebra_of(const Inputs& in) {
  const Decl& d = need_algebra(in.main);
  if (d.find(BlockKind::bracket) && !d.find(BlockKind::product))
    throw InputError("'" + d.name + "' has a bracket block but no product block");
  return LscAlgebra::unchecked(in.ring, FreeModule(d.basis),
                               table_of(in.ring, d.find(BlockKind::product), d.basis, d.basis, d.basis));
}

LieConformalAlgebra lie_of(const Inputs& in) {
  const Decl& d = need_algebra(in.main);
  if (!d.find(BlockKind::bracket)) throw InputError("'" + d.name + "' has no bracket block");
  return LieConformalAlgebra::unchecked(in.ring, FreeModule(d.basis),
                                        table_of(in.ring, d.find(BlockKind::bracket), d.basis, d.basis, d.basis));
}

RepPair module_rep(const Inputs& in) {
  const Decl& a = need_algebra(in.main);
  const Decl* m = in.main.module();
  if (!m) throw InputError("no module declared");
  return RepPair{FreeModule(m->basis), table_of(in.ring, m->find(BlockKind::laction), a.basis, m->basis, m->basis),
                 table_of(in.ring, m->find(BlockKind::raction), a.basis, m->basis, m->basis)};
}

/// Coefficient module for cochains.
enum class Target { adjoint, dual_left, coadjoint, module };

struct Coeffs {
  Target target;
  RepPair rep;
  Names names;
};

Coeffs coeffs(const Inputs& in, const LscAlgebra& a, Target t) {
  const Names& an = a.module.basis;
  switch (t) {
    case Target::adjoint: return {t, adjoint_rep(a), an};
    case Target::dual_left: return {t, dual_left_rep(a), dual_names(an)};
    case Target::coadjoint: return {t, coadjoint_rep(a), dual_names(an)};
    case Target::module: {
      RepPair r = module_rep(in);
      Names n = r.module.basis;
      return {t, std::move(r), n};
    }
  }
  throw InputError("unknown coefficient module");
}

Target parse_target(const std::string& s) {
  if (s == "adjoint") return Target::adjoint;
  if (s == "dual-left") return Target::dual_left;
  if (s == "coadjoint") return Target::coadjoint;
  if (s == "module") return Target::module;
  throw InputError("--rep must be one of adjoint, dual-left, coadjoint, module");
}

/// Coefficients from --rep, or from the names used in the blocks.
Target infer_target(const Inputs& in, const LscAlgebra& a, const std::vector<const Block*>& blocks,
                    const std::string& flag, Target fallback) {
  if (!flag.empty()) return parse_target(flag);
  std::optional<Target> seen;
  const Names& an = a.module.basis;
  for (const Block* b : blocks)
    for (const auto& e : b->eqs)
      for (const auto& [n, p] : e.rhs) {
        Target t;
        if (std::find(an.begin(), an.end(), n) != an.end()) t = Target::adjoint;
        else if (n.back() == '*') t = fallback == Target::coadjoint ? Target::coadjoint : Target::dual_left;
        else t = Target::module;
        if (seen && *seen != t) throw InputError("cochain values mix basis vectors of different modules");
        seen = t;
      }
  (void)in;
  return seen.value_or(fallback);
}

Cochain cochain_of(const RingPtr& ring, const Block& b, Flavor flavor, const Names& args, const Names& target) {
  Cochain g = Cochain::zero(ring, b.degree, flavor, args.size(), target.size());
  for (const auto& e : b.eqs) {
    std::vector<std::size_t> t;
    for (const auto& n : e.lhs) t.push_back(index_in(args, n, e, "algebra"));
    g.at(t) = element_of(ring, e, target);
  }
  Report v = validate_cochain(ring, g);
  if (!v.pass()) {
    const auto& r = v.checks[0].residuals.front();
    std::string tuple;
    for (auto i : r.indices) tuple += (tuple.empty() ? "" : " ") + args[i];
    throw InputError(std::to_string(b.pos.line) + ":" + std::to_string(b.pos.col) +
                     ": cochain is not skew-symmetric; the equation for (" + tuple +
                     ") is inconsistent with its permutations (list all tuples explicitly)");
  }
  return g;
}

ModuleMap map_of(const RingPtr& ring, const Block& b, const Names& source, const Names& target) {
  ModuleMap m = ModuleMap::zero(ring, source.size(), target.size());
  for (const auto& e : b.eqs) m.images[index_in(source, e.lhs[0], e, "source")] = element_of(ring, e, target);
  return m;
}

ConformalBilinearForm form_of(const RingPtr& ring, const Block& b, const Names& names) {
  auto f = ConformalBilinearForm::zero(ring, names.size());
  for (const auto& e : b.eqs) f.at(index_in(names, e.lhs[0], e, "algebra"), index_in(names, e.lhs[1], e, "algebra")) = e.scalar;
  return f;
}

const Block& single_block(const Inputs& in, const std::string& key, BlockKind kind, int degree = -1) {
  const DefinitionFile& f = in.get(key);
  auto blocks = f.top_level(kind);
  // also accept a block inside the aux file's algebra
  if (blocks.empty())
    for (const auto& d : f.decls)
      for (const auto& b : d.blocks)
        if (b.kind == kind) blocks.push_back(&b);
  if (blocks.size() != 1)
    throw InputError("--" + key + " file must contain exactly one " + lscdef::block_keyword(kind) + " block");
  if (degree >= 0 && blocks[0]->degree != degree)
    throw InputError("--" + key + " cochain must have degree " + std::to_string(degree));
  return *blocks[0];
}

// ------------------------------------------------------------------ rendering

Equation eq_of(std::vector<std::string> lhs, const Element& v, const Names& out) {
  Equation e;
  e.lhs = std::move(lhs);
  for (std::size_t k = 0; k < v.rank(); ++k)
    if (!v[k].is_zero()) e.rhs.emplace(out.at(k), v[k]);
  return e;
}

Block table_block(const LambdaMap& t, BlockKind kind, const Names& left, const Names& right, const Names& out) {
  Block b;
  b.kind = kind;
  for (std::size_t i = 0; i < t.left_rank; ++i)
    for (std::size_t j = 0; j < t.right_rank; ++j)
      if (!t.at(i, j).is_zero()) b.eqs.push_back(eq_of({left[i], right[j]}, t.at(i, j), out));
  return b;
}

Block cochain_block(const Cochain& g, const Names& args, const Names& out) {
  Block b;
  b.kind = BlockKind::cochain;
  b.degree = g.degree;
  for (std::size_t idx = 0; idx < g.table.size(); ++idx) {
    if (g.table[idx].is_zero()) continue;
    std::vector<std::string> lhs;
    for (auto i : g.tuple(idx)) lhs.push_back(args[i]);
    b.eqs.push_back(eq_of(lhs, g.table[idx], out));
  }
  return b;
}

Block map_block(const ModuleMap& m, const Names& source, const Names& target) {
  Block b;
  b.kind = BlockKind::map;
  for (std::size_t i = 0; i < m.source_rank; ++i)
    if (!m.images[i].is_zero()) b.eqs.push_back(eq_of({source[i]}, m.images[i], target));
  return b;
}

Block form_block(const ConformalBilinearForm& f, const Names& names) {
  Block b;
  b.kind = BlockKind::form;
  for (std::size_t i = 0; i < f.rank; ++i)
    for (std::size_t j = 0; j < f.rank; ++j)
      if (!f.at(i, j).is_zero()) {
        Equation e;
        e.lhs = {names[i], names[j]};
        e.scalar = f.at(i, j);
        b.eqs.push_back(e);
      }
  return b;
}

DefinitionFile algebra_file(const Inputs& in, const std::string& name, const Names& basis, std::vector<Block> blocks) {
  DefinitionFile f;
  f.params = std::vector<std::string>(in.ring->params().begin(), in.ring->params().end());
  Decl d;
  d.name = name;
  d.basis = basis;
  d.blocks = std::move(blocks);
  f.decls.push_back(std::move(d));
  return f;
}

DefinitionFile blocks_file(std::vector<Block> blocks) {
  DefinitionFile f;
  f.blocks = std::move(blocks);
  return f;
}

// ------------------------------------------------------------------ output

class Out {
 public:
  Out(std::string command, bool as_json) : json_(as_json) { doc_["command"] = std::move(command); }

  void check(const CheckResult& c, const std::vector<Names>& positions, const Names& values) {
    json j;
    j["name"] = c.name;
    j["pass"] = c.pass;
    j["residuals"] = json::array();
    text_ << "check " << c.name << ": " << (c.pass ? "pass" : "FAIL") << '\n';
    for (const auto& r : c.residuals) {
      std::string tuple;
      json idx = json::array();
      for (std::size_t k = 0; k < r.indices.size(); ++k) {
        const Names* names = positions.empty() ? nullptr : &positions[std::min(k, positions.size() - 1)];
        std::string n = names && r.indices[k] < names->size() ? (*names)[r.indices[k]] : "#" + std::to_string(r.indices[k]);
        idx.push_back(n);
        tuple += (k ? ", " : "") + n;
      }
      json vals = json::array();
      for (const auto& p : r.value) vals.push_back(p.str());
      j["residuals"].push_back({{"indices", idx}, {"value", vals}});
      text_ << "  (" << tuple << "): " << value_text(r.value, values) << '\n';
    }
    checks_.push_back(j);
    pass_ = pass_ && c.pass;
  }
  void report(const Report& r, const std::vector<Names>& positions, const Names& values) {
    for (const auto& c : r.checks) check(c, positions, values);
  }
  void flag(const std::string& key, bool v) {
    doc_[key] = v;
    text_ << key << ": " << (v ? "true" : "false") << '\n';
  }
  void number(const std::string& key, long v) {
    doc_[key] = v;
    text_ << key << ": " << v << '\n';
  }
  void text(const std::string& key, const std::string& v) {
    doc_[key] = v;
    text_ << key << ": " << v << '\n';
  }
  void definition(const std::string& key, const DefinitionFile& f) {
    const std::string s = lscdef::render(f);
    doc_["tables"][key] = s;
    text_ << "-- " << key << '\n' << s;
  }
  void fail() { pass_ = false; }

  int finish() {
    const int code = pass_ ? 0 : 1;
    if (!checks_.empty()) doc_["checks"] = checks_;
    doc_["pass"] = pass_;
    doc_["exit_code"] = code;
    if (json_) std::cout << doc_.dump(2) << '\n';
    else std::cout << text_.str() << "result: " << (pass_ ? "pass" : "FAIL") << '\n';
    return code;
  }

 private:
  static std::string value_text(const std::vector<Poly>& v, const Names& names) {
    if (v.size() == 1 && names.size() != 1) return v[0].str();
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k].is_zero()) continue;
      if (!s.empty()) s += " + ";
      s += "(" + v[k].str() + ")" + (k < names.size() ? " " + names[k] : "");
    }
    return s.empty() ? "0" : s;
  }

  bool json_;
  bool pass_ = true;
  json doc_;
  json checks_ = json::array();
  std::ostringstream text_;
};

/// Precondition: the algebra satisfies its axioms; otherwise report and fail.
bool require_lsc(Out& out, const LscAlgebra& a) {
  Report r = check_lsc_axioms(a);
  if (r.pass()) return true;
  out.report(r, {a.module.basis}, a.module.basis);
  return false;
}

// ------------------------------------------------------------------ random cochains

class Sampler {
 public:
  explicit Sampler(unsigned seed) : rng_(seed) {}
  Poly poly(const RingPtr& ring, const std::vector<VarId>& vars, int deg) {
    Poly out(ring, 0);
    for (int t = 0; t < 2; ++t) {
      Poly m(ring, std::uniform_int_distribution<long>(-3, 3)(rng_));
      int budget = std::uniform_int_distribution<int>(0, deg)(rng_);
      for (auto v : vars) {
        int e = budget > 0 ? std::uniform_int_distribution<int>(0, budget)(rng_) : 0;
        m *= Poly::var(ring, v).pow(static_cast<unsigned>(e));
        budget -= e;
      }
      out += m;
    }
    return out;
  }

 private:
  std::mt19937 rng_;
};

// ------------------------------------------------------------------ commands

int cmd_check_lsc(const Options& o, Out& out) {
  Inputs in = load(o.file, {});
  LscAlgebra a = algebra_of(in);
  out.report(check_lsc_axioms(a), {a.module.basis}, a.module.basis);
  return out.finish();
}

int cmd_check_lie(const Options& o, Out& out) {
  Inputs in = load(o.file, {});
  auto r = lie_of(in);
  out.report(check_lie_axioms(r), {r.module.basis}, r.module.basis);
  return out.finish();
}

int cmd_sub_adjacent(const Options& o, Out& out) {
  Inputs in = load(o.file, {});
  LscAlgebra a = algebra_of(in);
  if (!require_lsc(out, a)) return out.finish();
  auto g = sub_adjacent(a);
  const Names& n = a.module.basis;
  out.definition("sub-adjacent", algebra_file(in, need_algebra(in.main).name, n,
                                              {table_block(g.bracket, BlockKind::bracket, n, n, n)}));
  out.report(check_lie_axioms(g), {n}, n);
  return out.finish();
}

int cmd_check_module(const Options& o, Out& out) {
  Inputs in = load(o.file, {});
  LscAlgebra a = algebra_of(in);
  if (!require_lsc(out, a)) return out.finish();
  RepPair rep = module_rep(in);
  out.report(check_module(a, rep), {a.module.basis, a.module.basis, rep.module.basis}, rep.module.basis);
  return out.finish();
}

void print_rep(const Inputs& in, Out& out, const std::string& key, const LscAlgebra& a, const RepPair& rep) {
  DefinitionFile f;
  f.params = std::vector<std::string>(in.ring->params().begin(), in.ring->params().end());
  Decl m;
  m.algebra = false;
  m.name = key;
  m.basis = rep.module.basis;
  m.blocks.push_back(table_block(rep.l, BlockKind::laction, a.module.basis, rep.module.basis, rep.module.basis));
  m.blocks.push_back(table_block(rep.r, BlockKind::raction, a.module.basis, rep.module.basis, rep.module.basis));
  // the algebra must be declared for the module to parse
  Decl alg = need_algebra(in.main);
  f.decls = {alg, m};
  out.definition(key, f);
}

int cmd_adjoint(const Options& o, Out& out) {
  Inputs in = load(o.file, {});
  LscAlgebra a = algebra_of(in);
  if (!require_lsc(out, a)) return out.finish();
  RepPair rep = adjoint_rep(a);
  // module basis names must differ from the algebra's
  rep.module = FreeModule([&] {
    Names n;
    for (const auto& b : a.module.basis) n.push_back(b + "'");
    return n;
  }());
  print_rep(in, out, "adjoint", a, rep);
  out.report(check_module(a, adjoint_rep(a)), {a.module.basis}, a.module.basis);
  return out.finish();
}

int cmd_coadjoint(const Options& o, Out& out) {
  Inputs in = load(o.file, {});
  LscAlgebra a = algebra_of(in);
  if (!require_lsc(out, a)) return out.finish();
  RepPair rep = o.dual_left ? dual_left_rep(a) : coadjoint_rep(a);
  print_rep(in, out, o.dual_left ? "dual-left" : "coadjoint", a, rep);
  out.report(check_module(a, rep), {a.module.basis, a.module.basis, rep.module.basis}, rep.module.basis);
  return out.finish();
}

int cmd_semidirect(const Options& o, Out& out) {
  Inputs in = load(o.file, {});
  LscAlgebra a = algebra_of(in);
  if (!require_lsc(out, a)) return out.finish();
  RepPair rep = module_rep(in);
  Report mr = check_module(a, rep);
  out.report(mr, {a.module.basis, a.module.basis, rep.module.basis}, rep.module.basis);
  if (!mr.pass()) return out.finish();
  LscAlgebra s = semidirect(a, rep);
  const Names& n = s.module.basis;
  out.definition("semidirect", algebra_file(in, need_algebra(in.main).name + "_" + in.main.module()->name, n,
                                            {table_block(s.product, BlockKind::product, n, n, n)}));
  out.report(check_lsc_axioms(s), {n}, n);
  return out.finish();
}

struct CochainInput {
  LscAlgebra a;
  Coeffs c;
  Cochain g;
};

CochainInput lsc_cochain_input(const Options& o, Inputs& in, const std::string& key, Target fallback, int degree = -1) {
  LscAlgebra a = algebra_of(in);
  const Block& b = single_block(in, key, BlockKind::cochain, degree);
  Target t = infer_target(in, a, {&b}, o.rep, fallback);
  Coeffs c = coeffs(in, a, t);
  Cochain g = cochain_of(in.ring, b, Flavor::lsc, a.module.basis, c.names);
  return {std::move(a), std::move(c), std::move(g)};
}

int cmd_delta(const Options& o, Out& out) {
  if (o.cochain.empty()) throw InputError("--cochain is required");
  Inputs in = load(o.file, {{"cochain", o.cochain}});
  auto ci = lsc_cochain_input(o, in, "cochain", Target::adjoint);
  if (!require_lsc(out, ci.a)) return out.finish();
  Cochain d = delta_lsc(ci.a, ci.c.rep, ci.g);
  out.definition("delta", blocks_file({cochain_block(d, ci.a.module.basis, ci.c.names)}));
  return out.finish();
}

int cmd_d_lie(const Options& o, Out& out) {
  if (o.cochain.empty()) throw InputError("--cochain is required");
  Inputs in = load(o.file, {{"cochain", o.cochain}});
  const Decl& d = need_algebra(in.main);
  LieConformalAlgebra r = d.find(BlockKind::bracket) ? lie_of(in) : sub_adjacent(algebra_of(in));
  Report ax = check_lie_axioms(r);
  if (!ax.pass()) {
    out.report(ax, {r.module.basis}, r.module.basis);
    return out.finish();
  }
  const Block& b = single_block(in, "cochain", BlockKind::cochain);
  Cochain g = cochain_of(in.ring, b, Flavor::lie, r.module.basis, r.module.basis);
  Cochain dg = d_lie(in.ring, r.bracket, module_action(in.ring, r.bracket), g);
  out.definition("d", blocks_file({cochain_block(dg, r.module.basis, r.module.basis)}));
  return out.finish();
}

int cmd_phi_diagram(const Options& o, Out& out) {
  Inputs in = load(o.file, {});
  LscAlgebra a = algebra_of(in);
  if (!require_lsc(out, a)) return out.finish();
  Coeffs c = coeffs(in, a, o.rep.empty() ? Target::adjoint : parse_target(o.rep));
  auto g = sub_adjacent(a);
  auto hom = hom_action(a, c.rep);
  Sampler s(o.seed);
  long failures = 0, total = 0;
  for (int lie_degree = 1; lie_degree <= 2; ++lie_degree) {
    std::vector<VarId> vars{in.ring->d(), in.ring->mu()};
    for (int k = 1; k < lie_degree; ++k) vars.push_back(in.ring->lambda(k));
    for (int round = 0; round < o.samples; ++round) {
      Cochain gamma = Cochain::zero_hom(in.ring, lie_degree, a.rank(), a.rank(), c.rep.rank());
      for (auto& e : gamma.table)
        for (auto& p : e.c) p = s.poly(in.ring, vars, 2);
      gamma = antisymmetrize(in.ring, gamma);
      Cochain lhs = delta_lsc(a, c.rep, phi(in.ring, gamma));
      Cochain rhs = phi(in.ring, d_lie(in.ring, g.bracket, hom, gamma));
      ++total;
      if (!(lhs == rhs)) ++failures;
    }
  }
  out.number("samples", total);
  out.number("failures", failures);
  if (failures) out.fail();
  return out.finish();
}

int cmd_is_cocycle(const Options& o, Out& out) {
  if (o.cochain.empty()) throw InputError("--cochain is required");
  Inputs in = load(o.file, {{"cochain", o.cochain}});
  auto ci = lsc_cochain_input(o, in, "cochain", Target::adjoint);
  if (!require_lsc(out, ci.a)) return out.finish();
  Cochain d = delta_lsc(ci.a, ci.c.rep, ci.g);
  CheckResult c{"cocycle", true, {}};
  for (std::size_t idx = 0; idx < d.table.size(); ++idx) c.record(d.tuple(idx), d.table[idx]);
  out.check(c, {ci.a.module.basis}, ci.c.names);
  return out.finish();
}

int cmd_solve_coboundary(const Options& o, Out& out) {
  if (o.cochain.empty()) throw InputError("--cochain is required");
  Inputs in = load(o.file, {{"cochain", o.cochain}});
  auto ci = lsc_cochain_input(o, in, "cochain", Target::adjoint);
  if (!require_lsc(out, ci.a)) return out.finish();
  auto w = coboundary_solve(ci.a, ci.c.rep, ci.g, o.degree_b);
  out.number("degree_cap", o.degree_b);
  out.flag("found", w.has_value());
  if (!w) {
    out.fail();
    return out.finish();
  }
  out.definition("eta", blocks_file({cochain_block(w->eta, ci.a.module.basis, ci.c.names)}));
  out.text("denominator", w->denominator.str());
  return out.finish();
}

int cmd_h_dim(const Options& o, Out& out) {
  Inputs in = load(o.file, {});
  LscAlgebra a = algebra_of(in);
  if (!require_lsc(out, a)) return out.finish();
  Coeffs c = coeffs(in, a, o.rep.empty() ? Target::adjoint : parse_target(o.rep));
  if (o.degree < 1) throw InputError("--degree must be at least 1");
  auto h = h_dim_bounded(a, c.rep, o.degree, o.degree_z, o.degree_b);
  out.number("degree", h.degree);
  out.number("cap_z", h.cap_z);
  out.number("cap_b", h.cap_b);
  out.number("dim_z", static_cast<long>(h.dim_z));
  out.number("dim_b", static_cast<long>(h.dim_b));
  out.number("estimate", static_cast<long>(h.estimate()));
  std::vector<Block> basis;
  for (const auto& g : h.cocycle_basis) basis.push_back(cochain_block(g, a.module.basis, c.names));
  out.definition("cocycle_basis", blocks_file(std::move(basis)));
  return out.finish();
}

LambdaMap omega_table(const Inputs& in, const LscAlgebra& a, const std::string& key, const Names& target) {
  const Block& b = single_block(in, key, BlockKind::cochain, 2);
  return table_from_cochain(in.ring, cochain_of(in.ring, b, Flavor::lsc, a.module.basis, target));
}

int cmd_check_deformation(const Options& o, Out& out) {
  if (o.omega.empty()) throw InputError("--omega is required");
  Inputs in = load(o.file, {{"omega", o.omega}});
  LscAlgebra a = algebra_of(in);
  if (!require_lsc(out, a)) return out.finish();
  const Names& n = a.module.basis;
  out.report(check_linear_deformation(a, omega_table(in, a, "omega", n)), {n}, n);
  return out.finish();
}

ModuleMap endo_of(const Inputs& in, const LscAlgebra& a, const std::string& key, const Names& target) {
  return map_of(in.ring, single_block(in, key, BlockKind::map), a.module.basis, target);
}

int cmd_nijenhuis(const Options& o, Out& out) {
  if (o.map.empty()) throw InputError("--map is required");
  Inputs in = load(o.file, {{"map", o.map}});
  LscAlgebra a = algebra_of(in);
  if (!require_lsc(out, a)) return out.finish();
  const Names& n = a.module.basis;
  ModuleMap N = endo_of(in, a, "map", n);
  CheckResult c = nijenhuis_check(a, N);
  out.check(c, {n}, n);
  NijenhuisTransfer t = sub_adjacent_nijenhuis(a, N);
  out.flag("lie_nijenhuis", t.lie);
  if (c.pass) {
    LscAlgebra d = nijenhuis_deformed(a, N);
    out.definition("deformed", algebra_file(in, need_algebra(in.main).name + "_N", n,
                                            {table_block(d.product, BlockKind::product, n, n, n)}));
    out.check(check_homomorphism(N, d, a), {n}, n);
  }
  return out.finish();
}

int cmd_trivial_equiv(const Options& o, Out& out) {
  if (o.map.empty()) throw InputError("--map is required");
  std::vector<std::pair<std::string, std::string>> extra{{"map", o.map}};
  if (!o.omega.empty()) extra.emplace_back("omega", o.omega);
  Inputs in = load(o.file, extra);
  LscAlgebra a = algebra_of(in);
  if (!require_lsc(out, a)) return out.finish();
  const Names& n = a.module.basis;
  ModuleMap N = endo_of(in, a, "map", n);
  LambdaMap w = o.omega.empty() ? nijenhuis_product(a, N) : omega_table(in, a, "omega", n);
  if (o.omega.empty())
    out.definition("omega", blocks_file({cochain_block(cochain_from_table(in.ring, w), n, n)}));
  out.report(trivial_equiv_check(a, w, N), {n}, n);
  return out.finish();
}

std::vector<LambdaMap> thetas_of(const Inputs& in, const LscAlgebra& a) {
  std::vector<LambdaMap> out;
  const Names& n = a.module.basis;
  for (const Block* b : in.get("thetas").top_level(BlockKind::cochain)) {
    if (b->degree != 2) throw InputError("--thetas blocks must be 2-cochains");
    out.push_back(table_from_cochain(in.ring, cochain_of(in.ring, *b, Flavor::lsc, n, n)));
  }
  return out;
}

int cmd_formal_check(const Options& o, Out& out) {
  if (o.thetas.empty()) throw InputError("--thetas is required");
  Inputs in = load(o.file, {{"thetas", o.thetas}});
  LscAlgebra a = algebra_of(in);
  if (!require_lsc(out, a)) return out.finish();
  const Names& n = a.module.basis;
  out.report(formal_check(a, thetas_of(in, a), o.order), {n}, n);
  return out.finish();
}

int cmd_formal_normalize(const Options& o, Out& out) {
  if (o.thetas.empty()) throw InputError("--thetas is required");
  Inputs in = load(o.file, {{"thetas", o.thetas}});
  LscAlgebra a = algebra_of(in);
  if (!require_lsc(out, a)) return out.finish();
  const Names& n = a.module.basis;
  auto thetas = thetas_of(in, a);
  Report fc = formal_check(a, thetas, o.order);
  if (!fc.pass()) {
    out.report(fc, {n}, n);
    return out.finish();
  }
  auto res = formal_normalize(a, thetas, o.order, o.degree_b);
  out.flag("trivialized", res.trivialized);
  std::vector<Block> maps;
  for (const auto& m : res.phi) maps.push_back(map_block(m, n, n));
  out.definition("phi", blocks_file(std::move(maps)));
  if (!res.trivialized) {
    out.number("obstruction_order", res.obstruction_order);
    if (res.obstruction)
      out.definition("obstruction", blocks_file({cochain_block(cochain_from_table(in.ring, *res.obstruction), n, n)}));
    out.fail();
  } else {
    bool verified = true;
    for (const auto& t : formal_equiv_apply(a, thetas, res.phi, o.order)) verified = verified && t.is_zero();
    out.flag("verified", verified);
    if (!verified) out.fail();
  }
  return out.finish();
}

int cmd_tilde_omega(const Options& o, Out& out) {
  if (o.omega.empty()) throw InputError("--omega is required");
  Inputs in = load(o.file, {{"omega", o.omega}});
  LscAlgebra a = algebra_of(in);
  const Names& n = a.module.basis;
  const Block& b = single_block(in, "omega", BlockKind::cochain, 2);
  Cochain t = tilde_omega(in.ring, cochain_of(in.ring, b, Flavor::lsc, n, n));
  out.definition("tilde_omega", blocks_file({cochain_block(t, n, n)}));
  if (check_lsc_axioms(a).pass() && check_linear_deformation(a, table_from_cochain(in.ring, cochain_of(in.ring, b, Flavor::lsc, n, n))).pass())
    out.report(check_lie_linear_deformation(sub_adjacent(a), table_from_cochain(in.ring, t)), {n}, n);
  return out.finish();
}

ConformalBilinearForm form_input(const Inputs& in, const Options& o, const Decl& d) {
  if (!o.form.empty()) return form_of(in.ring, single_block(in, "form", BlockKind::form), d.basis);
  const Block* b = d.find(BlockKind::form);
  if (!b) {
    auto top = in.main.top_level(BlockKind::form);
    if (top.size() != 1) throw InputError("no form block (use --form)");
    b = top[0];
  }
  return form_of(in.ring, *b, d.basis);
}

void print_bilinear(Out& out, const BilinearReport& br, const Names& n) {
  out.report(br.report, {n}, {});
  out.text("determinant", br.determinant.str());
  if (br.exceptional_locus) out.text("exceptional_locus", br.exceptional_locus->str() + " = 0");
}

int cmd_check_bilinear(const Options& o, Out& out) {
  std::vector<std::pair<std::string, std::string>> extra;
  if (!o.form.empty()) extra.emplace_back("form", o.form);
  Inputs in = load(o.file, extra);
  LscAlgebra a = algebra_of(in);
  if (!require_lsc(out, a)) return out.finish();
  print_bilinear(out, check_bilinear(a, form_input(in, o, need_algebra(in.main))), a.module.basis);
  return out.finish();
}

LambdaMap dual_omega(const Inputs& in, const LscAlgebra& a, const std::string& key, bool given) {
  if (!given) return LambdaMap(in.ring, a.rank(), a.rank(), a.rank());
  return omega_table(in, a, key, dual_names(a.module.basis));
}

int cmd_tstar_extend(const Options& o, Out& out) {
  std::vector<std::pair<std::string, std::string>> extra;
  if (!o.omega.empty()) extra.emplace_back("omega", o.omega);
  Inputs in = load(o.file, extra);
  LscAlgebra a = algebra_of(in);
  if (!require_lsc(out, a)) return out.finish();
  LambdaMap w = dual_omega(in, a, "omega", !o.omega.empty());
  const Names& an = a.module.basis;
  try {
    TStarExtension t = tstar_extend(a, w);
    const Names& n = t.extension.module.basis;
    out.definition("extension", algebra_file(in, "T_" + need_algebra(in.main).name, n,
                                             {table_block(t.extension.product, BlockKind::product, n, n, n),
                                              form_block(t.form, n)}));
    out.report(check_lsc_axioms(t.extension), {n}, n);
    print_bilinear(out, check_bilinear(t.extension, t.form), n);
  } catch (const AxiomError& e) {
    out.text("rejected", e.what());
    out.report(e.report(), {an}, dual_names(an));
  }
  return out.finish();
}

int cmd_coadjoint_extend(const Options& o, Out& out) {
  std::vector<std::pair<std::string, std::string>> extra;
  if (!o.omega.empty()) extra.emplace_back("omega", o.omega);
  Inputs in = load(o.file, extra);
  LscAlgebra a = algebra_of(in);
  if (!require_lsc(out, a)) return out.finish();
  LambdaMap w = dual_omega(in, a, "omega", !o.omega.empty());
  LscAlgebra e = general_coadjoint_extend(a, w);
  const Names& n = e.module.basis;
  out.definition("extension", algebra_file(in, "C_" + need_algebra(in.main).name, n,
                                           {table_block(e.product, BlockKind::product, n, n, n)}));
  out.flag("omega_cocycle", is_cocycle(a, coadjoint_rep(a), cochain_from_table(in.ring, w)));
  out.report(check_lsc_axioms(e), {n}, n);
  return out.finish();
}

int cmd_tstar_equiv(const Options& o, Out& out) {
  if (o.theta.empty()) throw InputError("--theta is required");
  std::vector<std::pair<std::string, std::string>> extra{{"theta", o.theta}};
  if (!o.omega1.empty()) extra.emplace_back("omega1", o.omega1);
  if (!o.omega2.empty()) extra.emplace_back("omega2", o.omega2);
  Inputs in = load(o.file, extra);
  LscAlgebra a = algebra_of(in);
  if (!require_lsc(out, a)) return out.finish();
  const Names& n = a.module.basis;
  const Names dn = dual_names(n);
  ModuleMap th = endo_of(in, a, "theta", dn);
  LambdaMap w1 = dual_omega(in, a, "omega1", !o.omega1.empty());
  LambdaMap w2 = dual_omega(in, a, "omega2", !o.omega2.empty());
  TStarEquivalence eq = tstar_equiv(a, w1, w2, th);
  out.flag("omega1_cocycle", eq.omega1_cocycle);
  out.flag("omega1_invariant", eq.omega1_invariant);
  out.flag("omega2_cocycle", eq.omega2_cocycle);
  out.flag("omega2_invariant", eq.omega2_invariant);
  out.flag("equivalent", eq.equivalent);
  out.flag("isometric", eq.isometric);
  out.check(eq.identity, {n}, dn);
  DefinitionFile beta;
  beta.blocks.push_back(form_block(eq.beta, n));
  out.definition("beta", beta);
  if (eq.equivalent) {
    // informational: beta's symmetry and invariance
    for (const auto& c : eq.beta_checks.checks) out.flag("beta_" + c.name, c.pass);
  }
  return out.finish();
}

int cmd_check_isometry(const Options& o, Out& out) {
  if (o.map.empty()) throw InputError("--map is required");
  std::vector<std::pair<std::string, std::string>> extra{{"map", o.map}};
  Inputs in = load(o.file, extra);
  LscAlgebra a = algebra_of(in);
  const Decl& d = need_algebra(in.main);
  ConformalBilinearForm b = form_input(in, Options{}, d);
  LscAlgebra target = a;
  ConformalBilinearForm b2 = b;
  if (!o.target.empty()) {
    Inputs tin = load(o.target, {});
    if (!tin.ring->same_as(*in.ring)) throw InputError("source and target must declare the same parameters");
    // reparse on the source ring so polynomials share one context
    DefinitionFile tf = lscdef::parse_definition(slurp(o.target), in.ring);
    Inputs t2{in.ring, tf, {}};
    target = algebra_of(t2);
    b2 = form_input(t2, Options{}, need_algebra(tf));
  }
  if (!require_lsc(out, a) || !require_lsc(out, target)) return out.finish();
  ModuleMap phi = map_of(in.ring, single_block(in, "map", BlockKind::map), a.module.basis, target.module.basis);
  out.report(check_isometry(phi, a, b, target, b2), {a.module.basis}, target.module.basis);
  return out.finish();
}

int cmd_render(const Options& o, Out& out) {
  Inputs in = load(o.file, {});
  if (!o.json) {
    // plain text so the output can be parsed again
    std::cout << lscdef::render(in.main);
    return 0;
  }
  out.definition("definition", in.main);
  return out.finish();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lscalg: exact checks for left-symmetric and Lie conformal algebras"};
  app.require_subcommand(1);
  Options o;

  using Handler = int (*)(const Options&, Out&);
  struct Command {
    const char* name;
    const char* help;
    Handler run;
    std::vector<std::string> options;
  };
  const std::vector<Command> commands{
      {"check-lsc", "check the left-symmetric axioms", cmd_check_lsc, {}},
      {"check-lie", "check the Lie conformal axioms of a bracket", cmd_check_lie, {}},
      {"sub-adjacent", "print the sub-adjacent bracket", cmd_sub_adjacent, {}},
      {"check-module", "check an (l, r) module", cmd_check_module, {}},
      {"adjoint", "print the adjoint module", cmd_adjoint, {}},
      {"coadjoint", "print the coadjoint (or dual-left) module", cmd_coadjoint, {"dual-left"}},
      {"semidirect", "print the semidirect product with the declared module", cmd_semidirect, {}},
      {"delta", "apply the LSC coboundary", cmd_delta, {"cochain", "rep"}},
      {"d-lie", "apply the Lie conformal coboundary", cmd_d_lie, {"cochain"}},
      {"phi-diagram", "test delta(Phi g) = Phi(d g) on random cochains", cmd_phi_diagram, {"rep", "seed", "samples"}},
      {"is-cocycle", "test delta(omega) = 0", cmd_is_cocycle, {"cochain", "rep"}},
      {"solve-coboundary", "solve delta(eta) = omega at a degree cap", cmd_solve_coboundary,
       {"cochain", "rep", "degree-b"}},
      {"h-dim", "bounded cohomology dimension estimate", cmd_h_dim, {"degree", "rep", "degree-z", "degree-b"}},
      {"check-deformation", "check a linear deformation", cmd_check_deformation, {"omega"}},
      {"nijenhuis", "check a Nijenhuis operator", cmd_nijenhuis, {"map"}},
      {"trivial-equiv", "check id + tN against a linear deformation", cmd_trivial_equiv, {"map", "omega"}},
      {"formal-check", "check a truncated formal deformation", cmd_formal_check, {"thetas", "order"}},
      {"formal-normalize", "trivialize a formal deformation order by order", cmd_formal_normalize,
       {"thetas", "order", "degree-b"}},
      {"tilde-omega", "skew part of a 2-cochain", cmd_tilde_omega, {"omega"}},
      {"check-bilinear", "check a conformal bilinear form", cmd_check_bilinear, {"form"}},
      {"tstar-extend", "build the T* extension", cmd_tstar_extend, {"omega"}},
      {"coadjoint-extend", "extension by the coadjoint module", cmd_coadjoint_extend, {"omega"}},
      {"tstar-equiv", "decide equivalence of two T* extensions", cmd_tstar_equiv, {"omega1", "omega2", "theta"}},
      {"check-isometry", "check an isometry of quadratic algebras", cmd_check_isometry, {"map", "target"}},
      {"render", "print the normalized definition", cmd_render, {}},
  };

  Handler chosen = nullptr;
  std::string chosen_name;
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("file", o.file, "definition file")->required();
    sub->add_flag("--json", o.json, "structured output");
    for (const auto& opt : c.options) {
      if (opt == "cochain") sub->add_option("--cochain", o.cochain, "cochain file");
      else if (opt == "omega") sub->add_option("--omega", o.omega, "2-cochain file");
      else if (opt == "omega1") sub->add_option("--omega1", o.omega1, "2-cochain file");
      else if (opt == "omega2") sub->add_option("--omega2", o.omega2, "2-cochain file");
      else if (opt == "theta") sub->add_option("--theta", o.theta, "map file A -> A*");
      else if (opt == "map") sub->add_option("--map", o.map, "map file");
      else if (opt == "form") sub->add_option("--form", o.form, "form file");
      else if (opt == "thetas") sub->add_option("--thetas", o.thetas, "file of 2-cochains theta_1, theta_2, ...");
      else if (opt == "target") sub->add_option("--target", o.target, "target algebra file");
      else if (opt == "rep") sub->add_option("--rep", o.rep, "adjoint | dual-left | coadjoint | module");
      else if (opt == "degree") sub->add_option("--degree", o.degree, "cochain degree");
      else if (opt == "degree-z") sub->add_option("--degree-z", o.degree_z, "degree cap for cocycles");
      else if (opt == "degree-b") sub->add_option("--degree-b", o.degree_b, "degree cap for coboundaries");
      else if (opt == "order") sub->add_option("--order", o.order, "truncation order");
      else if (opt == "seed") sub->add_option("--seed", o.seed, "random seed");
      else if (opt == "samples") sub->add_option("--samples", o.samples, "random samples per degree");
      else if (opt == "dual-left") sub->add_flag("--dual-left", o.dual_left, "use (L*, 0) instead");
    }
    sub->callback([&chosen, &chosen_name, &c] {
      chosen = c.run;
      chosen_name = c.name;
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  Out out(chosen_name, o.json);
  try {
    return chosen(o, out);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const ModuleError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return 2;
}
