#include "hopfmon/morphdsl.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace hopfmon::dsl {

ExprPtr Expr::generator(std::string name) {
  return std::make_shared<const Expr>(Expr{Kind::generator, std::move(name), {}, nullptr, nullptr});
}
ExprPtr Expr::identity(std::string object) {
  return std::make_shared<const Expr>(Expr{Kind::identity, std::move(object), {}, nullptr, nullptr});
}
ExprPtr Expr::flip(std::string a, std::string b) {
  return std::make_shared<const Expr>(Expr{Kind::flip, std::move(a), std::move(b), nullptr, nullptr});
}
ExprPtr Expr::compose(ExprPtr outer, ExprPtr inner) {
  return std::make_shared<const Expr>(Expr{Kind::compose, {}, {}, std::move(outer), std::move(inner)});
}
ExprPtr Expr::tensor(ExprPtr first, ExprPtr second) {
  return std::make_shared<const Expr>(Expr{Kind::tensor, {}, {}, std::move(first), std::move(second)});
}

bool same_tree(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.name != b.name || a.name2 != b.name2) return false;
  if (a.kind == Expr::Kind::compose || a.kind == Expr::Kind::tensor) {
    return same_tree(*a.left, *b.left) && same_tree(*a.right, *b.right);
  }
  return true;
}

namespace {

enum class Tok { name, lparen, rparen, comma, compose, tensor, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

bool is_name_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' || c == '\'';
}

std::vector<Token> lex(std::string_view text, std::size_t line, std::size_t column) {
  static constexpr std::string_view ring = "\xE2\x88\x98";   // U+2218
  static constexpr std::string_view otimes = "\xE2\x8A\x97";  // U+2297
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
      column = 1;
      ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      ++column;
      continue;
    }
    const std::size_t start_col = column;
    if (text.substr(i, ring.size()) == ring) {
      out.push_back({Tok::compose, ".", line, start_col});
      i += ring.size();
      ++column;
      continue;
    }
    if (text.substr(i, otimes.size()) == otimes) {
      out.push_back({Tok::tensor, "x", line, start_col});
      i += otimes.size();
      ++column;
      continue;
    }
    switch (c) {
      case '(':
        out.push_back({Tok::lparen, "(", line, start_col});
        break;
      case ')':
        out.push_back({Tok::rparen, ")", line, start_col});
        break;
      case ',':
        out.push_back({Tok::comma, ",", line, start_col});
        break;
      case '.':
        out.push_back({Tok::compose, ".", line, start_col});
        break;
      default:
        if (!is_name_char(c)) throw ParseError(std::string("unexpected character '") + c + "'", line, start_col);
        std::size_t j = i;
        while (j < text.size() && is_name_char(text[j])) ++j;
        std::string word(text.substr(i, j - i));
        column += j - i;
        i = j;
        out.push_back({word == "x" ? Tok::tensor : Tok::name, std::move(word), line, start_col});
        continue;
    }
    ++i;
    ++column;
  }
  out.push_back({Tok::end, "", line, column});
  return out;
}

ExprPtr positioned(Expr e, const Token& at) {
  e.line = at.line;
  e.column = at.column;
  return std::make_shared<const Expr>(std::move(e));
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  ExprPtr parse_all() {
    ExprPtr e = expr();
    if (peek().kind != Tok::end) fail("expected '.', 'x' or end of input");
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const std::string& what) const {
    const Token& t = peek();
    throw ParseError(t.kind == Tok::end ? what + ", found end of input" : what + ", found '" + t.text + "'", t.line,
                     t.column);
  }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(std::string("expected ") + what);
    take();
  }

  std::string object_name() {
    if (peek().kind != Tok::name) fail("expected an object name");
    return take().text;
  }

  ExprPtr expr() {
    ExprPtr e = term();
    while (peek().kind == Tok::compose) {
      const Token op = take();
      e = positioned(Expr{Expr::Kind::compose, {}, {}, e, term()}, op);
    }
    return e;
  }

  ExprPtr term() {
    ExprPtr e = factor();
    while (peek().kind == Tok::tensor) {
      const Token op = take();
      e = positioned(Expr{Expr::Kind::tensor, {}, {}, e, factor()}, op);
    }
    return e;
  }

  ExprPtr factor() {
    const Token t = peek();
    if (t.kind == Tok::lparen) {
      take();
      ExprPtr e = expr();
      expect(Tok::rparen, "')'");
      return e;
    }
    if (t.kind != Tok::name) fail("expected a generator, id(...), flip(...) or '('");
    take();
    if (t.text == "id") {
      expect(Tok::lparen, "'(' after id");
      std::string obj = object_name();
      expect(Tok::rparen, "')'");
      return positioned(Expr{Expr::Kind::identity, std::move(obj), {}, nullptr, nullptr}, t);
    }
    if (t.text == "flip") {
      expect(Tok::lparen, "'(' after flip");
      std::string a = object_name();
      expect(Tok::comma, "','");
      std::string b = object_name();
      expect(Tok::rparen, "')'");
      return positioned(Expr{Expr::Kind::flip, std::move(a), std::move(b), nullptr, nullptr}, t);
    }
    return positioned(Expr{Expr::Kind::generator, t.text, {}, nullptr, nullptr}, t);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

std::string print_factor(const Expr& e);

std::string print_term(const Expr& e) {
  if (e.kind == Expr::Kind::tensor) return print_term(*e.left) + " x " + print_factor(*e.right);
  return print_factor(e);
}

std::string print_factor(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::generator:
      return e.name;
    case Expr::Kind::identity:
      return "id(" + e.name + ")";
    case Expr::Kind::flip:
      return "flip(" + e.name + "," + e.name2 + ")";
    default:
      return "(" + print(e) + ")";
  }
}

Objects strip_unit(Objects objects) {
  objects.erase(std::remove(objects.begin(), objects.end(), std::string(kUnitObject)), objects.end());
  return objects;
}

std::string show(const Objects& objects) {
  std::string out = "(";
  for (std::size_t i = 0; i < objects.size(); ++i) out += (i ? "," : "") + objects[i];
  return out + ")";
}

void require_object(const Environment& env, const std::string& name, const Expr& at) {
  if (name != kUnitObject && !env.has_object(name)) {
    throw TypeError("unknown object '" + name + "'", at.line, at.column);
  }
}

void collect_names(const Expr& e, std::set<std::string>& out) {
  switch (e.kind) {
    case Expr::Kind::generator:
      out.insert(e.name);
      break;
    case Expr::Kind::identity:
      out.insert(e.name);
      break;
    case Expr::Kind::flip:
      out.insert(e.name);
      out.insert(e.name2);
      break;
    default:
      collect_names(*e.left, out);
      collect_names(*e.right, out);
  }
}

std::size_t codepoints(std::string_view s) {
  std::size_t n = 0;
  for (const char c : s)
    if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++n;
  return n;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

ExprPtr parse(std::string_view text, std::size_t line, std::size_t column) {
  return Parser(lex(text, line, column)).parse_all();
}

std::string print(const Expr& e) {
  if (e.kind == Expr::Kind::compose) {
    const std::string right = e.right->kind == Expr::Kind::compose ? "(" + print(*e.right) + ")" : print_term(*e.right);
    return print(*e.left) + " . " + right;
  }
  return print_term(e);
}

void Environment::add_object(const std::string& name, std::size_t dim) {
  if (name == kUnitObject) throw PreconditionError("the unit object I cannot be rebound");
  objects_[name] = dim;
}

std::size_t Environment::dim(const std::string& object) const {
  if (object == kUnitObject) return 1;
  const auto it = objects_.find(object);
  if (it == objects_.end()) throw TypeError("unknown object '" + object + "'");
  return it->second;
}

Dims Environment::dims(const Objects& objects) const {
  Dims out;
  for (const auto& o : objects)
    if (o != kUnitObject) out.push_back(dim(o));
  return out;
}

void Environment::add_generator(const std::string& name, Objects domain, Objects codomain, const LinearMap& payload) {
  if (name == "id" || name == "flip" || name == "x") throw PreconditionError("'" + name + "' is reserved");
  domain = strip_unit(std::move(domain));
  codomain = strip_unit(std::move(codomain));
  const Dims dd = dims(domain), cd = dims(codomain);
  if (total(dd) != payload.cols() || total(cd) != payload.rows()) {
    throw ShapeError("generator '" + name + "': payload is " + std::to_string(payload.rows()) + "x" +
                     std::to_string(payload.cols()) + ", interface " + show(domain) + " -> " + show(codomain));
  }
  if (payload.field() != field_) throw FieldError("generator '" + name + "': field mismatch");
  generators_.insert_or_assign(name, Generator{std::move(domain), std::move(codomain), payload.reshaped({dd, cd})});
}

const Generator& Environment::generator(const std::string& name) const {
  const auto it = generators_.find(name);
  if (it == generators_.end()) throw TypeError("unknown generator '" + name + "'");
  return it->second;
}

Typed elaborate(const ExprPtr& expr, const Environment& env) {
  const Expr& e = *expr;
  switch (e.kind) {
    case Expr::Kind::generator: {
      if (!env.has_generator(e.name)) throw TypeError("unknown generator '" + e.name + "'", e.line, e.column);
      const Generator& g = env.generator(e.name);
      return {expr, g.domain, g.codomain};
    }
    case Expr::Kind::identity: {
      require_object(env, e.name, e);
      const Objects o = strip_unit({e.name});
      return {expr, o, o};
    }
    case Expr::Kind::flip: {
      require_object(env, e.name, e);
      require_object(env, e.name2, e);
      return {expr, strip_unit({e.name, e.name2}), strip_unit({e.name2, e.name})};
    }
    case Expr::Kind::compose: {
      const Typed outer = elaborate(e.left, env);
      const Typed inner = elaborate(e.right, env);
      if (inner.codomain != outer.domain) {
        throw TypeError("cannot compose: the inner map ends in " + show(inner.codomain) +
                            " but the outer map starts at " + show(outer.domain),
                        e.line, e.column);
      }
      return {expr, inner.domain, outer.codomain};
    }
    case Expr::Kind::tensor: {
      const Typed a = elaborate(e.left, env);
      const Typed b = elaborate(e.right, env);
      Objects dom = a.domain, cod = a.codomain;
      dom.insert(dom.end(), b.domain.begin(), b.domain.end());
      cod.insert(cod.end(), b.codomain.begin(), b.codomain.end());
      return {expr, dom, cod};
    }
  }
  throw TypeError("unreachable");
}

namespace {

LinearMap eval(const Expr& e, const Environment& env) {
  const FieldSpec f = env.field();
  switch (e.kind) {
    case Expr::Kind::generator:
      return env.generator(e.name).payload;
    case Expr::Kind::identity:
      return LinearMap::identity(f, env.dims(strip_unit({e.name})));
    case Expr::Kind::flip: {
      const Dims d = env.dims(strip_unit({e.name, e.name2}));
      if (d.size() < 2) return LinearMap::identity(f, d);
      return flip(f, d[0], d[1]);
    }
    case Expr::Kind::compose:
      return hopfmon::compose(eval(*e.left, env), eval(*e.right, env));
    case Expr::Kind::tensor:
      return hopfmon::tensor(eval(*e.left, env), eval(*e.right, env));
  }
  throw TypeError("unreachable");
}

}  // namespace

LinearMap evaluate(const Typed& typed, const Environment& env) { return eval(*typed.expr, env); }

IdentityVerdict check_identity(std::string_view lhs, std::string_view rhs, const Environment& env) {
  const Typed l = elaborate(parse(lhs), env);
  const Typed r = elaborate(parse(rhs), env);
  if (l.domain != r.domain || l.codomain != r.codomain) {
    throw TypeError("the sides have different interfaces: " + show(l.domain) + " -> " + show(l.codomain) + " vs " +
                    show(r.domain) + " -> " + show(r.codomain));
  }
  const auto diff = first_difference(evaluate(l, env), evaluate(r, env));
  IdentityVerdict v{!diff.has_value(), std::nullopt, l.domain, l.codomain};
  if (diff) v.witness = Witness{diff->first, diff->second};
  return v;
}

std::vector<std::string> referenced_names(const Expr& e) {
  std::set<std::string> names;
  collect_names(e, names);
  names.erase(std::string(kUnitObject));
  return {names.begin(), names.end()};
}

std::vector<IdentityLine> parse_identity_file(std::string_view text) {
  std::vector<IdentityLine> out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    std::string_view raw = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    if (trim(raw).empty()) {
      if (end == text.size()) break;
      continue;
    }
    const auto colon = raw.find(':');
    if (colon == std::string_view::npos) throw ParseError("expected 'NAME : LHS == RHS'", line_no, 1);
    const std::string name = trim(raw.substr(0, colon));
    if (name.empty() || name.find_first_of(" \t") != std::string::npos) {
      throw ParseError("identity name must be a single word", line_no, 1);
    }
    const auto eq = raw.find("==", colon + 1);
    if (eq == std::string_view::npos) throw ParseError("expected '=='", line_no, codepoints(raw) + 1);
    const std::size_t lhs_col = codepoints(raw.substr(0, colon + 1)) + 1;
    const std::size_t rhs_col = codepoints(raw.substr(0, eq + 2)) + 1;
    IdentityLine l{name, std::string(raw.substr(colon + 1, eq - colon - 1)), std::string(raw.substr(eq + 2)), line_no,
                   lhs_col, rhs_col};
    parse(l.lhs, line_no, lhs_col);
    parse(l.rhs, line_no, rhs_col);
    out.push_back(std::move(l));
    if (end == text.size()) break;
  }
  return out;
}

CheckReport check_identities(const std::vector<IdentityLine>& lines, const Environment& env) {
  CheckReport report;
  std::vector<std::string> skipped;
  for (const auto& l : lines) {
    const ExprPtr lhs = parse(l.lhs, l.line, l.lhs_column);
    const ExprPtr rhs = parse(l.rhs, l.line, l.rhs_column);
    bool bound = true;
    for (const auto* side : {&lhs, &rhs}) {
      for (const auto& n : referenced_names(**side)) bound = bound && (env.has_generator(n) || env.has_object(n));
    }
    if (!bound) {
      skipped.push_back(l.name);
      continue;
    }
    const Typed tl = elaborate(lhs, env);
    const Typed tr = elaborate(rhs, env);
    if (tl.domain != tr.domain || tl.codomain != tr.codomain) {
      throw TypeError("identity '" + l.name + "': the sides have different interfaces", l.line, l.lhs_column);
    }
    const auto diff = first_difference(evaluate(tl, env), evaluate(tr, env));
    report.record(l.name, !diff.has_value(),
                  diff ? std::optional<Witness>(Witness{diff->first, diff->second}) : std::nullopt);
  }
  if (!skipped.empty()) {
    std::string text = "skipped (unbound names):";
    for (const auto& s : skipped) text += " " + s;
    report.note(text);
  }
  return report;
}

}  // namespace hopfmon::dsl
