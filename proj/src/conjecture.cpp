#include "hsg/conjecture.hpp"

#include <map>
#include <mutex>

#include "hsg/regularity.hpp"

namespace hsg {

namespace {

// ---------------------------------------------------------------- lexing

enum class Tok {
  kw_forall,
  ident,
  colon,
  comma,
  star,
  amp,      // &
  cap,      // &cap
  cup,      // &cup
  pipe,
  bang,
  le,       // <=
  eq,       // =
  lparen,
  rparen,
  end,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

bool ident_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_';
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto fail = [&](const std::string& msg) {
    throw parse_error("syntax error: " + msg, line, col);
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++col;
      ++i;
      continue;
    }
    int tline = line;
    int tcol = col;
    auto push = [&](Tok k, std::string text, std::size_t len) {
      out.push_back(Token{k, std::move(text), tline, tcol});
      i += len;
      col += static_cast<int>(len);
    };
    if (ident_char(c) && !(c >= '0' && c <= '9')) {
      std::size_t j = i;
      while (j < src.size() && ident_char(src[j])) ++j;
      std::string word(src.substr(i, j - i));
      Tok kind = word == "forall" ? Tok::kw_forall : Tok::ident;
      push(kind, std::move(word), j - i);
      continue;
    }
    switch (c) {
      case ':': push(Tok::colon, ":", 1); continue;
      case ',': push(Tok::comma, ",", 1); continue;
      case '*': push(Tok::star, "*", 1); continue;
      case '|': push(Tok::pipe, "|", 1); continue;
      case '!': push(Tok::bang, "!", 1); continue;
      case '=': push(Tok::eq, "=", 1); continue;
      case '(': push(Tok::lparen, "(", 1); continue;
      case ')': push(Tok::rparen, ")", 1); continue;
      case '<':
        if (i + 1 < src.size() && src[i + 1] == '=') {
          push(Tok::le, "<=", 2);
          continue;
        }
        fail("expected '<=' after '<'");
        continue;
      case '&': {
        std::size_t j = i + 1;
        while (j < src.size() && ident_char(src[j])) ++j;
        std::string word(src.substr(i + 1, j - i - 1));
        if (word.empty()) {
          push(Tok::amp, "&", 1);
        } else if (word == "cap") {
          push(Tok::cap, "&cap", 4);
        } else if (word == "cup") {
          push(Tok::cup, "&cup", 4);
        } else {
          fail("unknown operator '&" + word + "'");
        }
        continue;
      }
      default:
        fail(std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back(Token{Tok::end, "", line, col});
  return out;
}

// --------------------------------------------------------------- parsing

struct Parser {
  std::vector<Token> toks;
  std::size_t pos = 0;
  std::vector<std::pair<std::string, IdealClass>> bindings;

  const Token& peek() const { return toks[pos]; }
  const Token& get() { return toks[pos++]; }

  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    std::string at = t.kind == Tok::end ? "end of input" : "'" + t.text + "'";
    throw parse_error("syntax error: " + msg + " at " + at, t.line, t.col);
  }

  void expect(Tok k, const char* what) {
    if (peek().kind != k) fail(std::string("expected ") + what);
    ++pos;
  }

  static bool reserved(const std::string& name) {
    return name == "H" || name == "R" || name == "L" || name == "I";
  }

  IdealClass parse_sort() {
    if (peek().kind != Tok::ident) fail("expected a sort name");
    std::string s = get().text;
    if (s == "subset") return IdealClass::arbitrary_subset;
    if (s == "left") return IdealClass::left;
    if (s == "right") return IdealClass::right;
    if (s == "ideal") return IdealClass::two_sided;
    if (s == "bi") return IdealClass::bi;
    if (s == "quasi") return IdealClass::quasi;
    --pos;
    fail("unknown sort '" + s + "'");
  }

  Conjecture parse() {
    expect(Tok::kw_forall, "'forall'");
    for (;;) {
      if (peek().kind != Tok::ident) fail("expected a variable name");
      Token name = get();
      if (reserved(name.text)) {
        throw parse_error("syntax error: '" + name.text +
                              "' is reserved and cannot name a variable",
                          name.line, name.col);
      }
      for (const auto& [existing, _] : bindings) {
        if (existing == name.text) {
          throw parse_error(
              "sort error: variable '" + name.text + "' bound twice",
              name.line, name.col);
        }
      }
      expect(Tok::colon, "':' after the variable name");
      bindings.emplace_back(name.text, parse_sort());
      if (peek().kind == Tok::comma) {
        ++pos;
        continue;
      }
      break;
    }
    expect(Tok::colon, "':' before the formula");
    Formula body = parse_formula();
    if (peek().kind != Tok::end) fail("trailing input");
    return Conjecture{std::move(bindings), std::move(body)};
  }

  Formula parse_formula() { return parse_disjunction(); }

  Formula parse_disjunction() {
    Formula lhs = parse_conjunction();
    while (peek().kind == Tok::pipe) {
      ++pos;
      Formula rhs = parse_conjunction();
      Formula node{Formula::Kind::disjunction, {}, {}};
      node.children.push_back(std::move(lhs));
      node.children.push_back(std::move(rhs));
      lhs = std::move(node);
    }
    return lhs;
  }

  Formula parse_conjunction() {
    Formula lhs = parse_negation();
    while (peek().kind == Tok::amp) {
      ++pos;
      Formula rhs = parse_negation();
      Formula node{Formula::Kind::conjunction, {}, {}};
      node.children.push_back(std::move(lhs));
      node.children.push_back(std::move(rhs));
      lhs = std::move(node);
    }
    return lhs;
  }

  Formula parse_negation() {
    if (peek().kind == Tok::bang) {
      ++pos;
      Formula node{Formula::Kind::negation, {}, {}};
      node.children.push_back(parse_negation());
      return node;
    }
    return parse_atom_or_group();
  }

  // A '(' here may open a parenthesized formula or the first term of an
  // atom. Decided by the token after the matching ')': term operators or a
  // relation mean a term.
  bool paren_opens_term() const {
    int depth = 0;
    std::size_t j = pos;
    for (; j < toks.size(); ++j) {
      if (toks[j].kind == Tok::lparen) ++depth;
      if (toks[j].kind == Tok::rparen && --depth == 0) break;
      if (toks[j].kind == Tok::end) return false;
    }
    if (j + 1 >= toks.size()) return false;
    switch (toks[j + 1].kind) {
      case Tok::star:
      case Tok::cap:
      case Tok::cup:
      case Tok::le:
      case Tok::eq:
        return true;
      default:
        return false;
    }
  }

  Formula parse_atom_or_group() {
    if (peek().kind == Tok::lparen && !paren_opens_term()) {
      ++pos;
      Formula inner = parse_formula();
      expect(Tok::rparen, "')'");
      return inner;
    }
    Term lhs = parse_term();
    Formula node{{}, {}, {}};
    if (peek().kind == Tok::le) {
      node.kind = Formula::Kind::subset_atom;
    } else if (peek().kind == Tok::eq) {
      node.kind = Formula::Kind::equal_atom;
    } else {
      fail("expected '<=' or '=' after a term");
    }
    ++pos;
    Term rhs = parse_term();
    node.terms.push_back(std::move(lhs));
    node.terms.push_back(std::move(rhs));
    return node;
  }

  Term parse_term() { return parse_union(); }

  Term binary(Term::Kind k, Term lhs, Term rhs) {
    Term node{k, "", {}};
    node.children.push_back(std::move(lhs));
    node.children.push_back(std::move(rhs));
    return node;
  }

  Term parse_union() {
    Term lhs = parse_intersection();
    while (peek().kind == Tok::cup) {
      ++pos;
      lhs = binary(Term::Kind::set_union, std::move(lhs),
                   parse_intersection());
    }
    return lhs;
  }

  Term parse_intersection() {
    Term lhs = parse_product();
    while (peek().kind == Tok::cap) {
      ++pos;
      lhs = binary(Term::Kind::set_intersection, std::move(lhs),
                   parse_product());
    }
    return lhs;
  }

  Term parse_product() {
    Term lhs = parse_primary();
    while (peek().kind == Tok::star) {
      ++pos;
      lhs = binary(Term::Kind::product, std::move(lhs), parse_primary());
    }
    return lhs;
  }

  Term parse_primary() {
    if (peek().kind == Tok::lparen) {
      ++pos;
      Term inner = parse_term();
      expect(Tok::rparen, "')'");
      return inner;
    }
    if (peek().kind != Tok::ident) fail("expected a term");
    Token t = get();
    if (t.text == "H") return Term{Term::Kind::full_carrier, "", {}};
    if (t.text == "R" || t.text == "L" || t.text == "I") {
      expect(Tok::lparen, std::string("'(' after '" + t.text + "'").c_str());
      Term arg = parse_term();
      expect(Tok::rparen, "')'");
      Term node{t.text == "R"   ? Term::Kind::gen_right
                : t.text == "L" ? Term::Kind::gen_left
                                : Term::Kind::gen_two_sided,
                "", {}};
      node.children.push_back(std::move(arg));
      return node;
    }
    for (const auto& [name, _] : bindings) {
      if (name == t.text) return Term{Term::Kind::variable, t.text, {}};
    }
    throw parse_error("sort error: unbound variable '" + t.text + "'",
                      t.line, t.col);
  }
};

// ---------------------------------------------------------- pretty print

int term_prec(Term::Kind k) {
  switch (k) {
    case Term::Kind::set_union: return 1;
    case Term::Kind::set_intersection: return 2;
    case Term::Kind::product: return 3;
    default: return 4;
  }
}

void print_term(const Term& t, int parent_prec, bool right_child,
                std::string& out) {
  int prec = term_prec(t.kind);
  bool parens =
      prec < parent_prec || (prec == parent_prec && right_child && prec < 4);
  if (parens) out += '(';
  switch (t.kind) {
    case Term::Kind::variable:
      out += t.name;
      break;
    case Term::Kind::full_carrier:
      out += 'H';
      break;
    case Term::Kind::product:
      print_term(t.children[0], prec, false, out);
      out += '*';
      print_term(t.children[1], prec, true, out);
      break;
    case Term::Kind::set_intersection:
      print_term(t.children[0], prec, false, out);
      out += " &cap ";
      print_term(t.children[1], prec, true, out);
      break;
    case Term::Kind::set_union:
      print_term(t.children[0], prec, false, out);
      out += " &cup ";
      print_term(t.children[1], prec, true, out);
      break;
    case Term::Kind::gen_right:
    case Term::Kind::gen_left:
    case Term::Kind::gen_two_sided:
      out += t.kind == Term::Kind::gen_right
                 ? 'R'
                 : (t.kind == Term::Kind::gen_left ? 'L' : 'I');
      out += '(';
      print_term(t.children[0], 0, false, out);
      out += ')';
      break;
  }
  if (parens) out += ')';
}

int formula_prec(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::disjunction: return 1;
    case Formula::Kind::conjunction: return 2;
    case Formula::Kind::negation: return 3;
    default: return 4;
  }
}

void print_formula(const Formula& f, int parent_prec, bool right_child,
                   std::string& out) {
  int prec = formula_prec(f.kind);
  bool parens =
      prec < parent_prec || (prec == parent_prec && right_child && prec < 3);
  if (parens) out += '(';
  switch (f.kind) {
    case Formula::Kind::subset_atom:
    case Formula::Kind::equal_atom:
      print_term(f.terms[0], 0, false, out);
      out += f.kind == Formula::Kind::subset_atom ? " <= " : " = ";
      print_term(f.terms[1], 0, false, out);
      break;
    case Formula::Kind::conjunction:
      print_formula(f.children[0], prec, false, out);
      out += " & ";
      print_formula(f.children[1], prec, true, out);
      break;
    case Formula::Kind::disjunction:
      print_formula(f.children[0], prec, false, out);
      out += " | ";
      print_formula(f.children[1], prec, true, out);
      break;
    case Formula::Kind::negation:
      out += '!';
      print_formula(f.children[0], prec, false, out);
      break;
  }
  if (parens) out += ')';
}

// ------------------------------------------------------------ evaluation

bool term_needs_associativity(const Term& t) {
  switch (t.kind) {
    case Term::Kind::gen_right:
    case Term::Kind::gen_left:
    case Term::Kind::gen_two_sided:
      return true;
    case Term::Kind::product:
      // A nested product is a chain; its written form is only canonical on
      // hypersemigroups.
      if (t.children[0].kind == Term::Kind::product ||
          t.children[1].kind == Term::Kind::product) {
        return true;
      }
      break;
    default:
      break;
  }
  for (const Term& c : t.children) {
    if (term_needs_associativity(c)) return true;
  }
  return false;
}

bool formula_needs_associativity(const Formula& f) {
  for (const Term& t : f.terms) {
    if (term_needs_associativity(t)) return true;
  }
  for (const Formula& c : f.children) {
    if (formula_needs_associativity(c)) return true;
  }
  return false;
}

using Env = std::vector<std::pair<std::string, Subset>>;

Subset eval_term(const Hypergroupoid& h, const Term& t, const Env& env) {
  switch (t.kind) {
    case Term::Kind::variable:
      for (const auto& [name, value] : env) {
        if (name == t.name) return value;
      }
      throw validation_error("unbound variable '" + t.name +
                             "' during evaluation");
    case Term::Kind::full_carrier:
      return h.full_set();
    case Term::Kind::set_union:
      return eval_term(h, t.children[0], env) |
             eval_term(h, t.children[1], env);
    case Term::Kind::set_intersection:
      return eval_term(h, t.children[0], env) &
             eval_term(h, t.children[1], env);
    case Term::Kind::product: {
      Subset lhs = eval_term(h, t.children[0], env);
      Subset rhs = eval_term(h, t.children[1], env);
      if (lhs.empty() || rhs.empty()) {
        throw domain_error("evaluation error in term '" + pretty_print(t) +
                           "': * requires nonempty operands");
      }
      return detail::product_unchecked(h, lhs, rhs);
    }
    case Term::Kind::gen_right:
    case Term::Kind::gen_left:
    case Term::Kind::gen_two_sided: {
      Subset arg = eval_term(h, t.children[0], env);
      if (arg.empty()) {
        throw domain_error("evaluation error in term '" + pretty_print(t) +
                           "': generated ideals require a nonempty seed");
      }
      GeneratedIdeals gen = detail::generated_ideals_unchecked(h, arg);
      if (t.kind == Term::Kind::gen_right) return gen.right;
      if (t.kind == Term::Kind::gen_left) return gen.left;
      return gen.two_sided;
    }
  }
  throw validation_error("malformed term");
}

// No short-circuiting: every atom is evaluated, so evaluation errors do not
// depend on truth values, and a failing assignment yields values for every
// atom.
bool eval_formula(const Hypergroupoid& h, const Formula& f, const Env& env,
                  std::vector<AtomEvaluation>* record) {
  switch (f.kind) {
    case Formula::Kind::subset_atom:
    case Formula::Kind::equal_atom: {
      Subset lhs = eval_term(h, f.terms[0], env);
      Subset rhs = eval_term(h, f.terms[1], env);
      bool subset_rel = f.kind == Formula::Kind::subset_atom;
      bool holds = subset_rel ? lhs.subset_of(rhs) : lhs == rhs;
      if (record) {
        record->push_back(AtomEvaluation{pretty_print(f.terms[0]),
                                         pretty_print(f.terms[1]), lhs, rhs,
                                         subset_rel, holds});
      }
      return holds;
    }
    case Formula::Kind::conjunction: {
      bool a = eval_formula(h, f.children[0], env, record);
      bool b = eval_formula(h, f.children[1], env, record);
      return a && b;
    }
    case Formula::Kind::disjunction: {
      bool a = eval_formula(h, f.children[0], env, record);
      bool b = eval_formula(h, f.children[1], env, record);
      return a || b;
    }
    case Formula::Kind::negation:
      return !eval_formula(h, f.children[0], env, record);
  }
  throw validation_error("malformed formula");
}

}  // namespace

Conjecture parse_conjecture(std::string_view text) {
  Parser p{lex(text)};
  return p.parse();
}

std::string pretty_print(const Term& t) {
  std::string out;
  print_term(t, 0, false, out);
  return out;
}

std::string pretty_print(const Formula& f) {
  std::string out;
  print_formula(f, 0, false, out);
  return out;
}

std::string pretty_print(const Conjecture& c) {
  std::string out = "forall ";
  for (std::size_t i = 0; i < c.variables.size(); ++i) {
    if (i > 0) out += ", ";
    out += c.variables[i].first;
    out += ':';
    out += sort_name(c.variables[i].second);
  }
  out += " : ";
  out += pretty_print(c.body);
  return out;
}

const char* sort_name(IdealClass c) {
  switch (c) {
    case IdealClass::arbitrary_subset: return "subset";
    case IdealClass::left: return "left";
    case IdealClass::right: return "right";
    case IdealClass::two_sided: return "ideal";
    case IdealClass::bi: return "bi";
    case IdealClass::quasi: return "quasi";
  }
  return "?";
}

std::optional<Counterexample> evaluate(const Hypergroupoid& h,
                                       const Conjecture& c) {
  bool needs_assoc = formula_needs_associativity(c.body);
  for (const auto& [_, sort] : c.variables) {
    needs_assoc |= sort == IdealClass::bi;
  }
  if (needs_assoc) {
    detail::require_associative(h, "evaluate");
  }

  // Candidate subsets per variable, ascending by mask.
  std::vector<std::vector<Subset>> candidates;
  candidates.reserve(c.variables.size());
  const std::uint16_t all = h.full_set().bits();
  for (const auto& [_, sort] : c.variables) {
    std::vector<Subset> cs;
    for (std::uint16_t m = 1; m <= all; ++m) {
      Subset s = Subset::from_bits(m);
      if (detail::satisfies_unchecked(h, sort, s)) cs.push_back(s);
    }
    candidates.push_back(std::move(cs));
  }

  Env env;
  env.reserve(c.variables.size());
  std::optional<Counterexample> found;

  auto descend = [&](auto&& self, std::size_t depth) -> bool {
    if (found) return false;
    if (depth == c.variables.size()) {
      if (!eval_formula(h, c.body, env, nullptr)) {
        Counterexample cex{h, env, {}};
        eval_formula(h, c.body, env, &cex.atoms);
        found = std::move(cex);
        return false;
      }
      return true;
    }
    for (Subset s : candidates[depth]) {
      env.emplace_back(c.variables[depth].first, s);
      bool keep = self(self, depth + 1);
      env.pop_back();
      if (!keep) return false;
    }
    return true;
  };
  descend(descend, 0);
  return found;
}

HuntResult hunt(const Conjecture& c, int max_order,
                const HuntOptions& options) {
  if (max_order < 1 || max_order > order_cap) {
    throw validation_error("hunt: max_order must be between 1 and " +
                           std::to_string(order_cap));
  }
  HuntResult result;
  for (int order = 1; order <= max_order; ++order) {
    EnumerationSpec spec;
    spec.order = order;
    spec.filter = EnumerationFilter::associative_only;
    spec.canonicalize = options.canonicalize;
    if (options.alphabet) spec.cell_alphabet = options.alphabet(order);

    if (options.workers > 1) {
      std::mutex mu;
      std::map<std::size_t, Counterexample> per_partition;
      EnumerationStats stats = enumerate_parallel(
          spec,
          [&](const Hypergroupoid& h, std::size_t partition) {
            if (options.regular_only && !is_regular(h)) return true;
            if (auto cex = evaluate(h, c)) {
              std::lock_guard<std::mutex> lock(mu);
              per_partition.emplace(partition, std::move(*cex));
              return false;
            }
            return true;
          },
          options.workers);
      result.stats.merge(stats);
      if (!per_partition.empty()) {
        result.counterexample = std::move(per_partition.begin()->second);
        return result;
      }
    } else {
      EnumerationStats stats =
          enumerate(spec, [&](const Hypergroupoid& h) {
            if (options.regular_only && !is_regular(h)) return true;
            if (auto cex = evaluate(h, c)) {
              result.counterexample = std::move(*cex);
              return false;
            }
            return true;
          });
      result.stats.merge(stats);
      if (result.counterexample) return result;
    }
  }
  return result;
}

}  // namespace hsg
