#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "lsc/poly.hpp"

namespace lscdef {

using lsc::Poly;
using lsc::RingPtr;

struct Pos {
  int line = 1;
  int col = 1;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(Pos pos, const std::string& msg)
      : std::runtime_error(std::to_string(pos.line) + ":" + std::to_string(pos.col) + ": " + msg), pos_(pos) {}
  Pos pos() const { return pos_; }

 private:
  Pos pos_;
};

enum class BlockKind { product, bracket, laction, raction, cochain, form, map };
const char* block_keyword(BlockKind k);

struct Equation {
  std::vector<std::string> lhs;
  /// basis name -> coefficient; empty for forms and for zero right-hand sides
  std::map<std::string, Poly> rhs;
  /// right-hand side of a form equation
  Poly scalar;
  Pos pos;
};

struct Block {
  BlockKind kind = BlockKind::product;
  int degree = 0;  // cochain blocks only
  std::vector<Equation> eqs;
  Pos pos;
};

struct Decl {
  bool algebra = true;
  std::string name;
  std::vector<std::string> basis;
  std::vector<Block> blocks;
  Pos pos;

  const Block* find(BlockKind k) const;
};

struct DefinitionFile {
  std::vector<std::string> params;
  std::vector<Decl> decls;
  /// top-level blocks, in file order
  std::vector<Block> blocks;

  const Decl* algebra() const;
  const Decl* module() const;
  std::vector<const Block*> top_level(BlockKind k) const;
};

/// Parameters declared anywhere in the text, in order of first appearance.
std::vector<std::string> scan_params(const std::string& text);

/// Parses against `ring`, which must register every parameter the file uses.
/// Basis names of `context` (if any) can be referred to in equations.
DefinitionFile parse_definition(const std::string& text, const RingPtr& ring, const DefinitionFile* context = nullptr);

/// Convenience: ring from the file's own parameters.
DefinitionFile parse_definition(const std::string& text);

std::string render(const DefinitionFile& f);
/// Polynomial text for a block kind: L1 prints as L outside cochains.
std::string render_poly(const Poly& p, BlockKind kind);

/// Structural equality ignoring source positions.
bool same_definition(const DefinitionFile& a, const DefinitionFile& b);

}  // namespace lscdef
