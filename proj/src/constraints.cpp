#include "egal/constraints.hpp"

#include <cctype>
#include <set>

namespace egal {

// --- Formula ----------------------------------------------------------------

Formula Formula::constant(bool value) { return Formula{value ? Kind::True : Kind::False, {}, {}}; }

Formula Formula::variable(std::string label) { return Formula{Kind::Var, std::move(label), {}}; }

Formula Formula::negation(Formula f) { return Formula{Kind::Not, {}, {std::move(f)}}; }

Formula Formula::conjunction(Formula a, Formula b) {
  return Formula{Kind::And, {}, {std::move(a), std::move(b)}};
}

Formula Formula::disjunction(Formula a, Formula b) {
  return Formula{Kind::Or, {}, {std::move(a), std::move(b)}};
}

Formula Formula::implication(Formula a, Formula b) {
  return Formula{Kind::Implies, {}, {std::move(a), std::move(b)}};
}

Formula Formula::biconditional(Formula a, Formula b) {
  return Formula{Kind::Iff, {}, {std::move(a), std::move(b)}};
}

namespace {

void collect_vars(const Formula& f, std::vector<std::string>& out, std::set<std::string>& seen) {
  if (f.kind == Formula::Kind::Var) {
    if (seen.insert(f.var).second) out.push_back(f.var);
    return;
  }
  for (const auto& a : f.args) collect_vars(a, out, seen);
}

}  // namespace

std::vector<std::string> Formula::variables() const {
  std::vector<std::string> out;
  std::set<std::string> seen;
  collect_vars(*this, out, seen);
  return out;
}

// --- parser -----------------------------------------------------------------

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula parse() {
    skip_ws();
    if (pos_ == text_.size()) fail("empty formula");
    Formula f = parse_iff();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view tok) {
    skip_ws();
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  Formula parse_iff() {
    Formula lhs = parse_implies();
    while (accept("<->")) lhs = Formula::biconditional(std::move(lhs), parse_implies());
    return lhs;
  }

  Formula parse_implies() {
    Formula lhs = parse_or();
    skip_ws();
    // "<->" also starts with '<', but never with "->".
    if (accept("->")) return Formula::implication(std::move(lhs), parse_implies());
    return lhs;
  }

  Formula parse_or() {
    Formula lhs = parse_and();
    while (accept("|")) lhs = Formula::disjunction(std::move(lhs), parse_and());
    return lhs;
  }

  Formula parse_and() {
    Formula lhs = parse_unary();
    while (accept("&")) lhs = Formula::conjunction(std::move(lhs), parse_unary());
    return lhs;
  }

  Formula parse_unary() {
    if (accept("!")) return Formula::negation(parse_unary());
    return parse_atom();
  }

  Formula parse_atom() {
    skip_ws();
    if (pos_ == text_.size()) fail("expected operand, found end of input");
    if (accept("(")) {
      Formula inner = parse_iff();
      if (!accept(")")) fail("expected ')'");
      return inner;
    }
    const char c = text_[pos_];
    if (!std::isalpha(static_cast<unsigned char>(c))) {
      fail(std::string("unexpected character '") + c + "'");
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    std::string ident(text_.substr(start, pos_ - start));
    if (ident == "true") return Formula::constant(true);
    if (ident == "false") return Formula::constant(false);
    return Formula::variable(std::move(ident));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

const char* op_text(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::And: return " & ";
    case Formula::Kind::Or: return " | ";
    case Formula::Kind::Implies: return " -> ";
    case Formula::Kind::Iff: return " <-> ";
    default: return "";
  }
}

void print(const Formula& f, std::string& out, bool top) {
  using K = Formula::Kind;
  switch (f.kind) {
    case K::True: out += "true"; return;
    case K::False: out += "false"; return;
    case K::Var: out += f.var; return;
    case K::Not:
      out += '!';
      print(f.args[0], out, false);
      return;
    default:
      if (!top) out += '(';
      print(f.args[0], out, false);
      out += op_text(f.kind);
      print(f.args[1], out, false);
      if (!top) out += ')';
  }
}

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const Formula& f) {
  std::string out;
  print(f, out, true);
  return out;
}

// --- evaluation -------------------------------------------------------------

CompiledFormula::CompiledFormula(const Formula& f, const Agenda& agenda) {
  root_ = compile(f, agenda);
}

int CompiledFormula::compile(const Formula& f, const Agenda& agenda) {
  Node node{f.kind};
  if (f.kind == Formula::Kind::Var) {
    node.issue = agenda.index_of(f.var);
    if (node.issue < 0) throw InvalidArgument("unknown variable '" + f.var + "'");
  }
  if (!f.args.empty()) node.lhs = compile(f.args[0], agenda);
  if (f.args.size() > 1) node.rhs = compile(f.args[1], agenda);
  nodes_.push_back(node);
  return static_cast<int>(nodes_.size()) - 1;
}

bool CompiledFormula::eval(int idx, const Judgment& j) const {
  const Node& n = nodes_[static_cast<std::size_t>(idx)];
  using K = Formula::Kind;
  switch (n.kind) {
    case K::True: return true;
    case K::False: return false;
    case K::Var: return j.accepts(n.issue);
    case K::Not: return !eval(n.lhs, j);
    case K::And: return eval(n.lhs, j) && eval(n.rhs, j);
    case K::Or: return eval(n.lhs, j) || eval(n.rhs, j);
    case K::Implies: return !eval(n.lhs, j) || eval(n.rhs, j);
    case K::Iff: return eval(n.lhs, j) == eval(n.rhs, j);
  }
  return false;
}

bool CompiledFormula::operator()(const Judgment& j) const { return eval(root_, j); }

bool evaluate(const Formula& f, const Judgment& j, const Agenda& agenda) {
  if (j.width() != agenda.size()) {
    throw DimensionError("judgment width " + std::to_string(j.width()) +
                         " does not match agenda of " + std::to_string(agenda.size()));
  }
  return CompiledFormula(f, agenda)(j);
}

Domain enumerate_domain(const Agenda& agenda, int cap) {
  const int m = agenda.size();
  if (m > cap) {
    throw CapacityError("agenda has " + std::to_string(m) +
                            " issues, above the enumeration cap of " + std::to_string(cap),
                        cap);
  }
  std::vector<Judgment> members;
  const std::uint64_t count = std::uint64_t{1} << m;
  if (!agenda.constraint()) {
    members.reserve(count);
    for (std::uint64_t b = 0; b < count; ++b) members.emplace_back(b, m);
  } else {
    const CompiledFormula check(*agenda.constraint(), agenda);
    for (std::uint64_t b = 0; b < count; ++b) {
      Judgment j(b, m);
      if (check(j)) members.push_back(j);
    }
  }
  if (members.empty()) throw InconsistentConstraint("constraint admits no judgment");
  return Domain(std::move(members));
}

}  // namespace egal
