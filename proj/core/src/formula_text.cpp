#include "ringdef/formula_text.hpp"

#include <cctype>

namespace ringdef {

namespace {

struct Lexer {
  std::string_view s;
  size_t pos = 0;

  [[noreturn]] void err(const std::string& msg) const {
    fail(ErrorCode::ParseError,
         "formula syntax error at offset " + std::to_string(pos) + ": " + msg);
  }
  void skip_ws() {
    while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
  }
  bool peek(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }
  void expect(char c) {
    skip_ws();
    if (pos >= s.size() || s[pos] != c) err(std::string("expected '") + c + "'");
    ++pos;
  }
  std::string atom() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && !std::isspace((unsigned char)s[pos]) && s[pos] != '(' &&
           s[pos] != ')')
      ++pos;
    if (pos == start) err("expected an atom");
    return std::string(s.substr(start, pos - start));
  }
  bool at_end() {
    skip_ws();
    return pos >= s.size();
  }
};

struct FormulaParser {
  Lexer lex;
  const RingSpec& ring;

  Term term() {
    lex.expect('(');
    std::string head = lex.atom();
    if (head == "const") {
      std::string enc = lex.atom();
      Elem e;
      try {
        e = ring.decode(enc);
      } catch (const Error&) {
        lex.err("unknown constant encoding '" + enc + "' for ring " + ring.to_string());
      }
      lex.expect(')');
      return Term::constant(std::move(e));
    }
    if (head == "var") {
      std::string name = lex.atom();
      lex.expect(')');
      return Term::var(std::move(name));
    }
    if (head == "+" || head == "*") {
      std::vector<Term> ts;
      while (!lex.peek(')')) ts.push_back(term());
      lex.expect(')');
      if (ts.empty()) lex.err("empty operand list");
      return head == "+" ? Term::sum(std::move(ts)) : Term::prod(std::move(ts));
    }
    if (head == "-") {
      Term t = term();
      lex.expect(')');
      return Term::neg(std::move(t));
    }
    lex.err("unknown term head '" + head + "'");
  }

  Formula formula() {
    lex.skip_ws();
    if (!lex.peek('(')) {
      std::string w = lex.atom();
      if (w == "false") return Formula::false_formula();
      lex.err("expected formula, got '" + w + "'");
    }
    lex.expect('(');
    std::string head = lex.atom();
    if (head == "=" || head == "neq") {
      Term l = term(), r = term();
      lex.expect(')');
      return head == "=" ? Formula::eq(std::move(l), std::move(r))
                         : Formula::neq(std::move(l), std::move(r));
    }
    if (head == "and" || head == "or") {
      std::vector<Formula> fs;
      while (!lex.peek(')')) fs.push_back(formula());
      lex.expect(')');
      if (head == "and" && fs.empty()) lex.err("empty conjunction");
      return head == "and" ? Formula::conj(std::move(fs)) : Formula::disj(std::move(fs));
    }
    if (head == "exists") {
      lex.expect('(');
      std::vector<VarId> vars;
      while (!lex.peek(')')) vars.push_back(lex.atom());
      lex.expect(')');
      if (vars.empty()) lex.err("exists needs at least one variable");
      Formula body = formula();
      lex.expect(')');
      return Formula::exists(std::move(vars), std::move(body));
    }
    lex.err("unknown formula head '" + head + "'");
  }
};

void print_term_rec(const Term& t, const RingSpec& ring, std::string& out) {
  switch (t.kind()) {
    case TermKind::Const:
      out += "(const ";
      out += ring.encode(t.value());
      out += ")";
      return;
    case TermKind::Var:
      out += "(var ";
      out += t.var_name();
      out += ")";
      return;
    case TermKind::Sum:
    case TermKind::Prod:
      out += t.kind() == TermKind::Sum ? "(+" : "(*";
      for (const Term& c : t.children()) {
        out += " ";
        print_term_rec(c, ring, out);
      }
      out += ")";
      return;
    case TermKind::Neg:
      out += "(- ";
      print_term_rec(t.children()[0], ring, out);
      out += ")";
      return;
  }
}

void print_formula_rec(const Formula& f, const RingSpec& ring, std::string& out) {
  switch (f.kind()) {
    case FormulaKind::Eq:
    case FormulaKind::Neq:
      out += f.kind() == FormulaKind::Eq ? "(= " : "(neq ";
      print_term_rec(f.lhs(), ring, out);
      out += " ";
      print_term_rec(f.rhs(), ring, out);
      out += ")";
      return;
    case FormulaKind::And:
    case FormulaKind::Or:
      if (f.is_false()) {
        out += "false";
        return;
      }
      out += f.kind() == FormulaKind::And ? "(and" : "(or";
      for (const Formula& c : f.children()) {
        out += " ";
        print_formula_rec(c, ring, out);
      }
      out += ")";
      return;
    case FormulaKind::Exists:
      out += "(exists (";
      for (size_t i = 0; i < f.bound_vars().size(); ++i) {
        if (i) out += " ";
        out += f.bound_vars()[i];
      }
      out += ") ";
      print_formula_rec(f.children()[0], ring, out);
      out += ")";
      return;
  }
}

}  // namespace

Formula parse_formula(std::string_view text, const RingSpec& ring) {
  FormulaParser p{Lexer{text}, ring};
  Formula f = p.formula();
  if (!p.lex.at_end()) p.lex.err("trailing input after formula");
  return f;
}

Term parse_term(std::string_view text, const RingSpec& ring) {
  FormulaParser p{Lexer{text}, ring};
  Term t = p.term();
  if (!p.lex.at_end()) p.lex.err("trailing input after term");
  return t;
}

std::string print_formula(const Formula& f, const RingSpec& ring) {
  std::string out;
  print_formula_rec(f, ring, out);
  return out;
}

std::string print_term(const Term& t, const RingSpec& ring) {
  std::string out;
  print_term_rec(t, ring, out);
  return out;
}

// ---------------------------------------------------------------------------
// pretty printer

namespace {

// precedence: 0 sum, 1 product, 2 atom
void pretty_term(const Term& t, const RingSpec& ring, int parent_prec, std::string& out) {
  switch (t.kind()) {
    case TermKind::Const:
      out += ring.encode(t.value());
      return;
    case TermKind::Var:
      out += t.var_name();
      return;
    case TermKind::Sum: {
      if (parent_prec > 0) out += "(";
      for (size_t i = 0; i < t.children().size(); ++i) {
        if (i) out += "+";
        pretty_term(t.children()[i], ring, 1, out);
      }
      if (parent_prec > 0) out += ")";
      return;
    }
    case TermKind::Prod: {
      for (size_t i = 0; i < t.children().size(); ++i) {
        if (i) out += "·";
        pretty_term(t.children()[i], ring, 2, out);
      }
      return;
    }
    case TermKind::Neg:
      out += "-";
      pretty_term(t.children()[0], ring, 2, out);
      return;
  }
}

void pretty_rec(const Formula& f, const RingSpec& ring, std::string& out) {
  switch (f.kind()) {
    case FormulaKind::Eq:
    case FormulaKind::Neq:
      pretty_term(f.lhs(), ring, 0, out);
      out += f.kind() == FormulaKind::Eq ? " = " : " ≠ ";
      pretty_term(f.rhs(), ring, 0, out);
      return;
    case FormulaKind::And:
    case FormulaKind::Or: {
      if (f.is_false()) {
        out += "false";
        return;
      }
      for (size_t i = 0; i < f.children().size(); ++i) {
        if (i) out += f.kind() == FormulaKind::And ? " ∧ " : " ∨ ";
        bool paren = f.children()[i].kind() == FormulaKind::Or ||
                     f.children()[i].kind() == FormulaKind::Exists ||
                     (f.kind() == FormulaKind::Or &&
                      f.children()[i].kind() == FormulaKind::And);
        if (paren) out += "(";
        pretty_rec(f.children()[i], ring, out);
        if (paren) out += ")";
      }
      return;
    }
    case FormulaKind::Exists: {
      out += "∃";
      for (size_t i = 0; i < f.bound_vars().size(); ++i) {
        if (i) out += ",";
        out += f.bound_vars()[i];
      }
      out += ": ";
      pretty_rec(f.children()[0], ring, out);
      return;
    }
  }
}

}  // namespace

std::string pretty_formula(const Formula& f, const RingSpec& ring) {
  std::string out;
  pretty_rec(f, ring, out);
  return out;
}

}  // namespace ringdef
