#pragma once

// A small text language for morphisms built from named generators:
//
//   expr   := term { "." term }              composition, f . g applies g first
//   term   := factor { "x" factor }          tensor product
//   factor := NAME | "id" "(" NAME ")" | "flip" "(" NAME "," NAME ")" | "(" expr ")"
//
// "∘" and "⊗" are accepted for "." and "x". The object name "I" is the unit
// object: id(I) is the identity of the empty interface.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hopfmon/check_report.hpp"
#include "hopfmon/errors.hpp"
#include "hopfmon/linear_map.hpp"

namespace hopfmon::dsl {

// Names and interfaces that do not fit together; positions as in ParseError.
class TypeError : public Error {
 public:
  TypeError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(line == 0 ? what : what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

inline constexpr std::string_view kUnitObject = "I";

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { generator, identity, flip, compose, tensor };

  Kind kind;
  std::string name;   // generator name, or first object
  std::string name2;  // second object of flip
  ExprPtr left;       // compose: the outer map; tensor: the first factor
  ExprPtr right;
  std::size_t line = 0;
  std::size_t column = 0;

  static ExprPtr generator(std::string name);
  static ExprPtr identity(std::string object);
  static ExprPtr flip(std::string a, std::string b);
  static ExprPtr compose(ExprPtr outer, ExprPtr inner);
  static ExprPtr tensor(ExprPtr first, ExprPtr second);
};

// Structural equality, ignoring source positions.
bool same_tree(const Expr& a, const Expr& b);

// line and column give the position of text[0] in its file.
ExprPtr parse(std::string_view text, std::size_t line = 1, std::size_t column = 1);
// ASCII form with the fewest parentheses that parse back to the same tree.
std::string print(const Expr& e);

using Objects = std::vector<std::string>;

struct Generator {
  Objects domain;
  Objects codomain;
  LinearMap payload;
};

class Environment {
 public:
  explicit Environment(FieldSpec field) : field_(field) {}

  void add_object(const std::string& name, std::size_t dim);
  // Object lists may mention "I", which is dropped. Throws ShapeError when the
  // payload interface does not match the object dimensions.
  void add_generator(const std::string& name, Objects domain, Objects codomain, const LinearMap& payload);

  FieldSpec field() const noexcept { return field_; }
  bool has_object(const std::string& name) const { return objects_.count(name) > 0; }
  bool has_generator(const std::string& name) const { return generators_.count(name) > 0; }
  std::size_t dim(const std::string& object) const;
  Dims dims(const Objects& objects) const;
  const Generator& generator(const std::string& name) const;
  const std::map<std::string, std::size_t>& objects() const noexcept { return objects_; }
  const std::map<std::string, Generator>& generators() const noexcept { return generators_; }

 private:
  FieldSpec field_;
  std::map<std::string, std::size_t> objects_;
  std::map<std::string, Generator> generators_;
};

struct Typed {
  ExprPtr expr;
  Objects domain;
  Objects codomain;
};

// Infers interfaces; throws TypeError on an unknown name or a composition of
// mismatched interfaces.
Typed elaborate(const ExprPtr& expr, const Environment& env);
LinearMap evaluate(const Typed& typed, const Environment& env);

struct IdentityVerdict {
  bool passed;
  std::optional<Witness> witness;
  Objects domain;
  Objects codomain;
};

// Throws TypeError when the two sides have different interfaces.
IdentityVerdict check_identity(std::string_view lhs, std::string_view rhs, const Environment& env);

// One line of an identity file: "NAME : LHS == RHS".
struct IdentityLine {
  std::string name;
  std::string lhs;
  std::string rhs;
  std::size_t line;
  std::size_t lhs_column;
  std::size_t rhs_column;
};

// Blank lines and "#" comments are skipped; both sides are parsed eagerly so
// syntax errors surface with their file position.
std::vector<IdentityLine> parse_identity_file(std::string_view text);

// Evaluates every identity whose generators and objects are all bound in env;
// the rest are listed in a note. Entries are named after the identity.
CheckReport check_identities(const std::vector<IdentityLine>& lines, const Environment& env);

// Names referenced by an expression, for deciding whether an environment can host it.
std::vector<std::string> referenced_names(const Expr& e);

}  // namespace hopfmon::dsl
