#include "definition.hpp"

#include <cctype>
#include <optional>
#include <set>
#include <sstream>

namespace lscdef {

const char* block_keyword(BlockKind k) {
  switch (k) {
    case BlockKind::product: return "product";
    case BlockKind::bracket: return "bracket";
    case BlockKind::laction: return "laction";
    case BlockKind::raction: return "raction";
    case BlockKind::cochain: return "cochain";
    case BlockKind::form: return "form";
    case BlockKind::map: return "map";
  }
  return "?";
}

const Block* Decl::find(BlockKind k) const {
  for (const auto& b : blocks)
    if (b.kind == k) return &b;
  return nullptr;
}

const Decl* DefinitionFile::algebra() const {
  for (const auto& d : decls)
    if (d.algebra) return &d;
  return nullptr;
}

const Decl* DefinitionFile::module() const {
  for (const auto& d : decls)
    if (!d.algebra) return &d;
  return nullptr;
}

std::vector<const Block*> DefinitionFile::top_level(BlockKind k) const {
  std::vector<const Block*> out;
  for (const auto& b : blocks)
    if (b.kind == k) out.push_back(&b);
  return out;
}

namespace {

// ---------------------------------------------------------------- lexer

enum class Tok { ident, number, sym, end };

struct Token {
  Tok kind = Tok::end;
  std::string text;
  Pos pos;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  Pos pos;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (s[i] == '\n') {
        ++pos.line;
        pos.col = 1;
      } else {
        ++pos.col;
      }
    }
  };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#' || (c == '/' && i + 1 < s.size() && s[i + 1] == '/')) {
      while (i < s.size() && s[i] != '\n') advance(1);
      continue;
    }
    Token t;
    t.pos = pos;
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < s.size() && ident_char(s[j])) ++j;
      // a trailing '*' names a dual basis vector unless a factor follows
      if (j < s.size() && s[j] == '*' && (j + 1 == s.size() || !(ident_char(s[j + 1]) || s[j + 1] == '(')))
        ++j;
      t.kind = Tok::ident;
      t.text = s.substr(i, j - i);
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j + 1 < s.size() && s[j] == '/' && std::isdigit(static_cast<unsigned char>(s[j + 1]))) {
        ++j;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      }
      t.kind = Tok::number;
      t.text = s.substr(i, j - i);
      advance(j - i);
    } else if (std::string("{};,=+-*^()").find(c) != std::string::npos) {
      t.kind = Tok::sym;
      t.text = std::string(1, c);
      advance(1);
    } else {
      throw ParseError(pos, std::string("unexpected character '") + c + "'");
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.pos = pos;
  out.push_back(end);
  return out;
}

// ---------------------------------------------------------------- values

/// Either a scalar polynomial or a linear combination of basis vectors.
struct Value {
  bool vector = false;
  Poly scalar;
  std::map<std::string, Poly> terms;
};

Value add(Value a, const Value& b, bool negate, Pos pos) {
  auto sign = [&](const Poly& p) { return negate ? -p : p; };
  if (a.vector != b.vector) {
    // 0 is allowed on either side
    if (!a.vector && a.scalar.is_zero()) {
      Value out = b;
      if (negate)
        for (auto& [n, p] : out.terms) p = -p;
      return out;
    }
    if (!b.vector && b.scalar.is_zero()) return a;
    throw ParseError(pos, "cannot add a scalar and a basis vector");
  }
  if (!a.vector) {
    a.scalar += sign(b.scalar);
    return a;
  }
  for (const auto& [n, p] : b.terms) {
    auto it = a.terms.find(n);
    if (it == a.terms.end()) a.terms.emplace(n, sign(p));
    else it->second += sign(p);
  }
  return a;
}

Value mul(const Value& a, const Value& b, Pos pos) {
  if (a.vector && b.vector) throw ParseError(pos, "product of two basis vectors");
  if (!a.vector && !b.vector) return Value{false, a.scalar * b.scalar, {}};
  const Value& v = a.vector ? a : b;
  const Poly& s = a.vector ? b.scalar : a.scalar;
  Value out{true, Poly(), {}};
  for (const auto& [n, p] : v.terms) out.terms.emplace(n, p * s);
  return out;
}

// ---------------------------------------------------------------- parser

const std::set<std::string> kBlockWords{"product", "bracket", "laction", "raction", "cochain", "form", "map"};

struct NameInfo {
  int decl = -1;       // index into the combined declaration list
  bool dual = false;
};

class Parser {
 public:
  Parser(const std::string& text, RingPtr ring, const DefinitionFile* context)
      : toks_(lex(text)), ring_(std::move(ring)) {
    if (context) {
      for (const auto& d : context->decls) add_decl_names(d);
      context_decls_ = context->decls.size();
      context_params_ = context->params;
    }
  }

  DefinitionFile run() {
    while (!at_end()) {
      const Token& t = peek();
      if (is_word("param")) {
        parse_params();
      } else if (is_word("algebra") || is_word("module")) {
        parse_decl();
      } else if (t.kind == Tok::ident && kBlockWords.count(t.text)) {
        out_.blocks.push_back(parse_block(nullptr));
      } else {
        throw ParseError(t.pos, "expected 'param', 'algebra', 'module' or a block keyword, found '" + show(t) + "'");
      }
    }
    return std::move(out_);
  }

 private:
  std::vector<Token> toks_;
  std::size_t at_ = 0;
  RingPtr ring_;
  DefinitionFile out_;
  std::map<std::string, NameInfo> names_;
  std::vector<std::vector<std::string>> decl_basis_;
  std::vector<bool> decl_algebra_;
  std::size_t context_decls_ = 0;
  std::vector<std::string> context_params_;

  const Token& peek(std::size_t k = 0) const { return toks_[std::min(at_ + k, toks_.size() - 1)]; }
  bool at_end() const { return peek().kind == Tok::end; }
  const Token& next() { return toks_[at_ < toks_.size() - 1 ? at_++ : at_]; }
  bool is_word(const char* w) const { return peek().kind == Tok::ident && peek().text == w; }
  bool is_sym(char c) const { return peek().kind == Tok::sym && peek().text[0] == c; }

  static std::string show(const Token& t) { return t.kind == Tok::end ? "end of input" : t.text; }

  void expect_sym(char c) {
    if (!is_sym(c)) throw ParseError(peek().pos, std::string("expected '") + c + "', found '" + show(peek()) + "'");
    next();
  }
  Token expect_ident(const char* what) {
    if (peek().kind != Tok::ident) throw ParseError(peek().pos, std::string("expected ") + what + ", found '" + show(peek()) + "'");
    return next();
  }

  bool reserved(const std::string& n) const { return ring_->find(n).has_value() || n == "L"; }

  void add_decl_names(const Decl& d) {
    const int idx = static_cast<int>(decl_basis_.size());
    decl_basis_.push_back(d.basis);
    decl_algebra_.push_back(d.algebra);
    for (const auto& b : d.basis) names_[b] = NameInfo{idx, false};
    if (d.algebra)
      for (const auto& b : d.basis)
        if (!names_.count(b + "*")) names_[b + "*"] = NameInfo{idx, true};
  }

  void parse_params() {
    next();
    while (true) {
      Token t = expect_ident("a parameter name");
      if (!ring_->find(t.text) || !ring_->is_param(*ring_->find(t.text)))
        throw ParseError(t.pos, "'" + t.text + "' cannot be used as a parameter name");
      if (std::find(out_.params.begin(), out_.params.end(), t.text) == out_.params.end()) out_.params.push_back(t.text);
      if (is_sym(',')) {
        next();
        continue;
      }
      break;
    }
    expect_sym(';');
  }

  void parse_decl() {
    Decl d;
    d.pos = peek().pos;
    d.algebra = next().text == "algebra";
    d.name = expect_ident("a name").text;
    expect_sym('{');
    bool have_basis = false;
    int idx = -1;
    while (!is_sym('}')) {
      if (at_end()) throw ParseError(peek().pos, "unterminated '" + d.name + "' block, expected '}'");
      if (is_word("param")) {
        parse_params();
      } else if (is_word("basis")) {
        const Pos bpos = next().pos;
        if (have_basis) throw ParseError(bpos, "basis declared twice");
        while (peek().kind == Tok::ident) {
          if (kBlockWords.count(peek().text) && !d.basis.empty())
            throw ParseError(peek().pos, "expected ';' before '" + peek().text + "'");
          Token t = next();
          if (reserved(t.text) || kBlockWords.count(t.text))
            throw ParseError(t.pos, "'" + t.text + "' is reserved and cannot name a basis vector");
          if (names_.count(t.text) && !names_[t.text].dual)
            throw ParseError(t.pos, "basis name '" + t.text + "' already declared");
          if (std::find(d.basis.begin(), d.basis.end(), t.text) != d.basis.end())
            throw ParseError(t.pos, "basis name '" + t.text + "' repeated");
          d.basis.push_back(t.text);
        }
        expect_sym(';');
        have_basis = true;
        idx = static_cast<int>(decl_basis_.size());
        add_decl_names(d);
      } else if (peek().kind == Tok::ident && kBlockWords.count(peek().text)) {
        if (!have_basis) throw ParseError(peek().pos, "blocks must follow the basis declaration");
        d.blocks.push_back(parse_block(&d, idx));
      } else {
        throw ParseError(peek().pos, "expected 'basis', 'param' or a block keyword, found '" + show(peek()) + "'");
      }
    }
    next();
    if (!have_basis) throw ParseError(d.pos, "'" + d.name + "' declares no basis");
    for (const auto& o : out_.decls)
      if (o.name == d.name) throw ParseError(d.pos, "'" + d.name + "' declared twice");
    out_.decls.push_back(std::move(d));
  }

  bool block_end() const {
    if (at_end() || is_sym('}')) return true;
    if (peek().kind != Tok::ident) return false;
    const auto& w = peek().text;
    if (kBlockWords.count(w) || w == "param" || w == "algebra" || w == "module" || w == "basis") {
      // a block keyword followed by '=' or by more names before '=' could be an equation
      // only if it were a basis name, which reserved() forbids
      return true;
    }
    return false;
  }

  Block parse_block(const Decl* owner, int owner_idx = -1) {
    Block b;
    b.pos = peek().pos;
    const std::string word = next().text;
    static const std::map<std::string, BlockKind> kinds{
        {"product", BlockKind::product}, {"bracket", BlockKind::bracket}, {"laction", BlockKind::laction},
        {"raction", BlockKind::raction}, {"cochain", BlockKind::cochain}, {"form", BlockKind::form},
        {"map", BlockKind::map}};
    b.kind = kinds.at(word);
    if (b.kind == BlockKind::cochain) {
      if (peek().kind != Tok::number || peek().text.find('/') != std::string::npos)
        throw ParseError(peek().pos, "expected the cochain degree after 'cochain'");
      Token t = next();
      b.degree = std::stoi(t.text);
      if (b.degree < 1 || b.degree > ring_->lambda_count() + 1)
        throw ParseError(t.pos, "cochain degree must be between 1 and " + std::to_string(ring_->lambda_count() + 1));
    }
    const bool structural = b.kind == BlockKind::product || b.kind == BlockKind::bracket ||
                            b.kind == BlockKind::laction || b.kind == BlockKind::raction;
    if (structural && !owner) throw ParseError(b.pos, std::string("'") + word + "' block must be inside an algebra or module");
    if (owner && owner->algebra && (b.kind == BlockKind::laction || b.kind == BlockKind::raction))
      throw ParseError(b.pos, std::string("'") + word + "' block belongs in a module");
    if (owner && !owner->algebra && (b.kind == BlockKind::product || b.kind == BlockKind::bracket))
      throw ParseError(b.pos, std::string("'") + word + "' block belongs in an algebra");

    std::set<std::vector<std::string>> seen;
    while (!block_end()) {
      Equation e = parse_equation(b, owner_idx);
      if (!seen.insert(e.lhs).second) throw ParseError(e.pos, "duplicate equation for this basis tuple");
      b.eqs.push_back(std::move(e));
    }
    return b;
  }

  std::size_t lhs_arity(const Block& b) const {
    switch (b.kind) {
      case BlockKind::cochain: return static_cast<std::size_t>(b.degree);
      case BlockKind::map: return 1;
      default: return 2;
    }
  }

  const NameInfo& basis_name(const Token& t) const {
    auto it = names_.find(t.text);
    if (it == names_.end()) throw ParseError(t.pos, "undeclared basis name '" + t.text + "'");
    return it->second;
  }

  Equation parse_equation(const Block& b, int owner_idx) {
    Equation e;
    e.pos = peek().pos;
    e.scalar = Poly(ring_, 0);
    std::vector<Token> lhs;
    while (peek().kind == Tok::ident) lhs.push_back(next());
    if (lhs.empty()) throw ParseError(peek().pos, "expected basis names, found '" + show(peek()) + "'");
    if (lhs.size() != lhs_arity(b))
      throw ParseError(lhs.front().pos, std::string("'") + block_keyword(b.kind) + "' equations need " +
                                            std::to_string(lhs_arity(b)) + " basis names on the left");
    // argument families
    int first_decl = -1;
    for (std::size_t k = 0; k < lhs.size(); ++k) {
      const NameInfo& info = basis_name(lhs[k]);
      const bool module_slot = b.kind == BlockKind::laction || b.kind == BlockKind::raction ? k == 1 : false;
      if (module_slot) {
        if (info.decl != owner_idx || info.dual)
          throw ParseError(lhs[k].pos, "'" + lhs[k].text + "' is not a basis vector of this module");
      } else if (b.kind == BlockKind::laction || b.kind == BlockKind::raction) {
        if (info.dual || !decl_algebra_[info.decl])
          throw ParseError(lhs[k].pos, "'" + lhs[k].text + "' is not an algebra basis vector");
      } else if (owner_idx >= 0 && b.kind != BlockKind::map) {
        if (info.decl != owner_idx || info.dual)
          throw ParseError(lhs[k].pos, "'" + lhs[k].text + "' is not a basis vector of this algebra");
      } else {
        if (info.dual) throw ParseError(lhs[k].pos, "dual vector '" + lhs[k].text + "' cannot be an argument");
        if (first_decl >= 0 && info.decl != first_decl)
          throw ParseError(lhs[k].pos, "arguments must come from one algebra");
        first_decl = info.decl;
      }
      e.lhs.push_back(lhs[k].text);
    }
    expect_sym('=');
    Value v = parse_sum(b);
    expect_sym(';');
    if (b.kind == BlockKind::form) {
      if (v.vector) throw ParseError(e.pos, "a form equation has a scalar right-hand side");
      e.scalar = v.scalar;
    } else {
      if (!v.vector && !v.scalar.is_zero())
        throw ParseError(e.pos, "right-hand side must be a combination of basis vectors");
      for (auto& [n, p] : v.terms)
        if (!p.is_zero()) e.rhs.emplace(n, p);
      if (b.kind == BlockKind::product || b.kind == BlockKind::bracket || b.kind == BlockKind::laction ||
          b.kind == BlockKind::raction) {
        for (const auto& [n, p] : e.rhs) {
          const NameInfo& info = names_.at(n);
          if (info.dual || info.decl != owner_idx)
            throw ParseError(e.pos, "'" + n + "' is not a basis vector of '" + block_owner_name(owner_idx) + "'");
        }
      }
    }
    return e;
  }

  std::string block_owner_name(int idx) const {
    if (idx >= static_cast<int>(context_decls_)) {
      const std::size_t k = static_cast<std::size_t>(idx) - context_decls_;
      if (k < out_.decls.size()) return out_.decls[k].name;
    }
    return "the enclosing declaration";
  }

  // variables allowed in a block
  std::optional<Poly> variable(const Block& b, const Token& t) const {
    const std::string& n = t.text;
    if (auto v = ring_->find(n); v && ring_->is_param(*v)) {
      if (std::find(out_.params.begin(), out_.params.end(), n) == out_.params.end() &&
          std::find(context_params_.begin(), context_params_.end(), n) == context_params_.end())
        throw ParseError(t.pos, "parameter '" + n + "' used before its declaration");
      return Poly::var(ring_, *v);
    }
    auto deny = [&]() -> std::optional<Poly> {
      throw ParseError(t.pos, "'" + n + "' is not permitted in a " + block_keyword(b.kind) + " block");
    };
    if (n == "D") {
      if (b.kind == BlockKind::form) return deny();
      return Poly::var(ring_, ring_->d());
    }
    if (n == "L") {
      if (b.kind == BlockKind::map || (b.kind == BlockKind::cochain && b.degree != 2)) return deny();
      return Poly::var(ring_, ring_->lambda(1));
    }
    if (n == "M" || n == "T") return deny();
    if (n.size() >= 2 && n[0] == 'L' && std::all_of(n.begin() + 1, n.end(), ::isdigit) && ring_->find(n)) {
      const int k = std::stoi(n.substr(1));
      if (b.kind != BlockKind::cochain || k >= b.degree) return deny();
      return Poly::var(ring_, ring_->lambda(k));
    }
    return std::nullopt;
  }

  Value parse_sum(const Block& b) {
    Value acc{false, Poly(ring_, 0), {}};
    bool first = true;
    while (true) {
      bool negate = false;
      const Pos p = peek().pos;
      if (is_sym('+') || is_sym('-')) {
        negate = next().text == "-";
      } else if (!first) {
        break;
      }
      acc = add(std::move(acc), parse_term(b), negate, p);
      first = false;
    }
    return acc;
  }

  bool factor_start() const {
    return peek().kind == Tok::number || is_sym('(') ||
           (peek().kind == Tok::ident && !kBlockWords.count(peek().text));
  }

  Value parse_term(const Block& b) {
    Value v = parse_power(b);
    while (true) {
      const Pos p = peek().pos;
      if (is_sym('*')) {
        next();
        v = mul(v, parse_power(b), p);
      } else if (factor_start()) {
        v = mul(v, parse_power(b), p);
      } else {
        break;
      }
    }
    return v;
  }

  Value parse_power(const Block& b) {
    Value v = parse_factor(b);
    if (is_sym('^')) {
      const Pos p = next().pos;
      if (peek().kind != Tok::number || peek().text.find('/') != std::string::npos)
        throw ParseError(peek().pos, "expected a non-negative integer exponent");
      const unsigned e = static_cast<unsigned>(std::stoul(next().text));
      if (v.vector) throw ParseError(p, "cannot raise a basis vector to a power");
      v.scalar = v.scalar.pow(e);
    }
    return v;
  }

  Value parse_factor(const Block& b) {
    const Token& t = peek();
    if (t.kind == Tok::number) {
      next();
      lsc::Scalar q(t.text);
      q.canonicalize();
      return Value{false, Poly(ring_, q), {}};
    }
    if (is_sym('(')) {
      next();
      Value v = parse_sum(b);
      expect_sym(')');
      return v;
    }
    if (t.kind == Tok::ident) {
      next();
      if (auto p = variable(b, t)) return Value{false, *p, {}};
      auto it = names_.find(t.text);
      if (it == names_.end()) throw ParseError(t.pos, "unknown name '" + t.text + "'");
      if (b.kind == BlockKind::form) throw ParseError(t.pos, "basis vectors are not permitted in a form block");
      Value v{true, Poly(), {}};
      v.terms.emplace(t.text, Poly(ring_, 1));
      return v;
    }
    throw ParseError(t.pos, "expected a number, a name or '(', found '" + show(t) + "'");
  }
};

bool same_eq(const Equation& a, const Equation& b) {
  return a.lhs == b.lhs && a.rhs == b.rhs && a.scalar == b.scalar;
}

bool same_block(const Block& a, const Block& b) {
  if (a.kind != b.kind || a.degree != b.degree || a.eqs.size() != b.eqs.size()) return false;
  for (std::size_t i = 0; i < a.eqs.size(); ++i)
    if (!same_eq(a.eqs[i], b.eqs[i])) return false;
  return true;
}

bool same_blocks(const std::vector<Block>& a, const std::vector<Block>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!same_block(a[i], b[i])) return false;
  return true;
}

}  // namespace

std::vector<std::string> scan_params(const std::string& text) {
  auto toks = lex(text);
  std::vector<std::string> out;
  for (std::size_t i = 0; i + 1 < toks.size(); ++i) {
    if (toks[i].kind != Tok::ident || toks[i].text != "param") continue;
    std::size_t j = i + 1;
    while (j < toks.size() && toks[j].kind == Tok::ident) {
      if (std::find(out.begin(), out.end(), toks[j].text) == out.end()) out.push_back(toks[j].text);
      if (j + 1 < toks.size() && toks[j + 1].kind == Tok::sym && toks[j + 1].text == ",") j += 2;
      else break;
    }
  }
  return out;
}

DefinitionFile parse_definition(const std::string& text, const RingPtr& ring, const DefinitionFile* context) {
  Parser p(text, ring, context);
  return p.run();
}

DefinitionFile parse_definition(const std::string& text) {
  RingPtr ring;
  try {
    ring = lsc::Ring::make(scan_params(text));
  } catch (const std::invalid_argument& e) {
    throw ParseError(Pos{}, e.what());
  }
  return parse_definition(text, ring);
}

std::string render_poly(const Poly& p, BlockKind kind) {
  if (kind == BlockKind::cochain) return p.str();
  const auto& ring = p.ring();
  return p.str([&](lsc::VarId v) { return v == ring->lambda(1) ? std::string("L") : ring->name(v); });
}

namespace {

void render_block(std::ostringstream& os, const Block& b, const std::string& indent) {
  os << indent << block_keyword(b.kind);
  if (b.kind == BlockKind::cochain) os << ' ' << b.degree;
  os << '\n';
  for (const auto& e : b.eqs) {
    os << indent << "  ";
    for (const auto& n : e.lhs) os << n << ' ';
    os << "= ";
    if (b.kind == BlockKind::form) {
      os << (e.scalar.is_zero() ? std::string("0") : render_poly(e.scalar, b.kind));
    } else if (e.rhs.empty()) {
      os << '0';
    } else {
      bool first = true;
      for (const auto& [n, p] : e.rhs) {
        if (p.is_constant()) {
          lsc::Scalar s = p.constant_value();
          const bool neg = s < 0;
          if (neg) s = -s;
          os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
          if (s != 1) os << lsc::scalar_str(s) << ' ';
          os << n;
        } else {
          if (!first) os << " + ";
          os << '(' << render_poly(p, b.kind) << ") " << n;
        }
        first = false;
      }
    }
    os << ";\n";
  }
}

}  // namespace

std::string render(const DefinitionFile& f) {
  std::ostringstream os;
  if (!f.params.empty()) {
    os << "param ";
    for (std::size_t i = 0; i < f.params.size(); ++i) os << (i ? ", " : "") << f.params[i];
    os << ";\n";
  }
  for (const auto& d : f.decls) {
    if (os.tellp() > 0) os << '\n';
    os << (d.algebra ? "algebra " : "module ") << d.name << " {\n  basis";
    for (const auto& n : d.basis) os << ' ' << n;
    os << ";\n";
    for (const auto& b : d.blocks) render_block(os, b, "  ");
    os << "}\n";
  }
  for (const auto& b : f.blocks) {
    if (os.tellp() > 0) os << '\n';
    render_block(os, b, "");
  }
  return os.str();
}

bool same_definition(const DefinitionFile& a, const DefinitionFile& b) {
  if (a.params != b.params || a.decls.size() != b.decls.size()) return false;
  for (std::size_t i = 0; i < a.decls.size(); ++i) {
    const auto &x = a.decls[i], &y = b.decls[i];
    if (x.algebra != y.algebra || x.name != y.name || x.basis != y.basis || !same_blocks(x.blocks, y.blocks))
      return false;
  }
  return same_blocks(a.blocks, b.blocks);
}

}  // namespace lscdef
