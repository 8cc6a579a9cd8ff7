#include "egal/asp.hpp"

#include "egal/constraints.hpp"

#include <unistd.h>

#include <array>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace egal::asp {

namespace {

constexpr std::string_view kDist =
    "dist(A,D) :- voter(A), D = #count { X : issue(X), js(col,X), js(A,-X) }.\n";
constexpr std::string_view kMaxDist = "maxdist(Max) :- Max = #max { D : dist(A,D) }.\n";
constexpr std::string_view kMinDist = "mindist(Min) :- Min = #min { D : dist(A,D) }.\n";
constexpr std::string_view kInequity = "inequity(Max-Min) :- maxdist(Max), mindist(Min).\n";
constexpr std::string_view kMinimizeInequity = "#minimize { I@30 : inequity(I) }.\n";
constexpr std::string_view kMinimizeMaxDist = "#minimize { Max@20 : maxdist(Max) }.\n";

std::string literal(const Agenda& agenda, const Judgment& j, int k) {
  const std::string c = issue_constant(agenda.issues()[static_cast<std::size_t>(k)]);
  return j.accepts(k) ? c : "-" + c;
}

void check_scenario(const Scenario& s) {
  if (s.profile.empty()) throw InvalidArgument("scenario needs at least one voter");
  if (s.profile.width() != s.agenda.size()) {
    throw DimensionError("profile width does not match the agenda");
  }
  if (s.explicit_domain) {
    if (s.explicit_domain->width() != s.agenda.size()) {
      throw DimensionError("explicit domain width does not match the agenda");
    }
    s.explicit_domain->check_profile(s.profile);
  }
  std::set<std::string> seen;
  for (const auto& label : s.agenda.issues()) {
    if (!seen.insert(issue_constant(label)).second) {
      throw InvalidArgument("issue labels collide as ASP constants: '" + label + "'");
    }
  }
}

std::string issue_facts(const Agenda& agenda) {
  std::string out;
  for (const auto& label : agenda.issues()) {
    const std::string c = issue_constant(label);
    out += "issue(" + c + "). issue(-" + c + ").\n";
  }
  return out;
}

/// voter/1 and js/2 facts; `order` lists 0-based profile positions in voter order.
std::string voter_facts(const Scenario& s, const std::vector<int>& order) {
  std::string out;
  for (std::size_t v = 0; v < order.size(); ++v) out += "voter(" + std::to_string(v + 1) + "). ";
  out.back() = '\n';
  for (std::size_t v = 0; v < order.size(); ++v) {
    const Judgment& j = s.profile.judgments()[static_cast<std::size_t>(order[v])];
    std::string line;
    for (int k = 0; k < s.agenda.size(); ++k) {
      line += "js(" + std::to_string(v + 1) + "," + literal(s.agenda, j, k) + "). ";
    }
    line.back() = '\n';
    out += line;
  }
  return out;
}

class FormulaEncoder {
 public:
  explicit FormulaEncoder(std::string& out) : out_(out) {}

  std::string encode(const Formula& f) {
    const std::string id = "f" + std::to_string(next_++);
    using K = Formula::Kind;
    const std::string head = "holds(C," + id + ")";
    switch (f.kind) {
      case K::True:
        out_ += head + " :- cand(C).\n";
        break;
      case K::False:
        break;
      case K::Var:
        out_ += head + " :- cand(C), js(C," + issue_constant(f.var) + ").\n";
        break;
      case K::Not: {
        const std::string a = encode(f.args[0]);
        out_ += head + " :- cand(C), not holds(C," + a + ").\n";
        break;
      }
      case K::And: {
        const std::string a = encode(f.args[0]);
        const std::string b = encode(f.args[1]);
        out_ += head + " :- holds(C," + a + "), holds(C," + b + ").\n";
        break;
      }
      case K::Or: {
        const std::string a = encode(f.args[0]);
        const std::string b = encode(f.args[1]);
        out_ += head + " :- holds(C," + a + ").\n" + head + " :- holds(C," + b + ").\n";
        break;
      }
      case K::Implies: {
        const std::string a = encode(f.args[0]);
        const std::string b = encode(f.args[1]);
        out_ += head + " :- cand(C), not holds(C," + a + ").\n" + head + " :- holds(C," + b +
                ").\n";
        break;
      }
      case K::Iff: {
        const std::string a = encode(f.args[0]);
        const std::string b = encode(f.args[1]);
        out_ += head + " :- holds(C," + a + "), holds(C," + b + ").\n" + head +
                " :- cand(C), not holds(C," + a + "), not holds(C," + b + ").\n";
        break;
      }
    }
    return id;
  }

 private:
  std::string& out_;
  int next_ = 0;
};

/// Constraints restricting every cand/1 judgment to the admissible domain.
std::string admissibility(const Scenario& s) {
  std::string out;
  if (s.explicit_domain) {
    out += "% admissible judgments, listed explicitly\n";
    int k = 0;
    for (const auto& member : *s.explicit_domain) {
      ++k;
      std::string line = "dom(" + std::to_string(k) + ").";
      for (int t = 0; t < s.agenda.size(); ++t) {
        line += " dlit(" + std::to_string(k) + "," + literal(s.agenda, member, t) + ").";
      }
      out += line + "\n";
    }
    out += "admissible(C) :- cand(C), dom(K), js(C,X) : dlit(K,X).\n";
    out += ":- cand(C), not admissible(C).\n";
  } else if (s.agenda.constraint()) {
    out += "% integrity constraint: " + egal::to_string(*s.agenda.constraint()) + "\n";
    FormulaEncoder enc(out);
    const std::string root = enc.encode(*s.agenda.constraint());
    out += ":- cand(C), not holds(C," + root + ").\n";
  }
  return out;
}

}  // namespace

std::string Program::text() const {
  std::string out;
  for (const auto& note : notes) out += "% " + note + "\n";
  out += facts;
  out += generate;
  out += rules;
  out += post_transform;
  return out;
}

std::string issue_constant(std::string_view label) {
  if (label.empty() || !std::isalpha(static_cast<unsigned char>(label.front()))) {
    throw InvalidArgument("issue label '" + std::string(label) + "' has no ASP spelling");
  }
  for (char c : label) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
      throw InvalidArgument("issue label '" + std::string(label) + "' has no ASP spelling");
    }
  }
  if (std::islower(static_cast<unsigned char>(label.front()))) return std::string(label);
  return "i_" + std::string(label);
}

std::string outcome_rules_template(Objective objective) {
  std::string out;
  out += kDist;
  out += kMaxDist;
  out += kMinDist;
  out += kInequity;
  out += kMinimizeInequity;
  if (objective == Objective::MaxEqThenMaxHam) out += kMinimizeMaxDist;
  return out;
}

Program emit_outcome_program(const Scenario& s, Objective objective) {
  check_scenario(s);
  Program prog;
  prog.notes.push_back(std::string("optimal answer sets encode the ") +
                       (objective == Objective::MaxEq ? "MaxEq" : "MaxEq-then-MaxHam") +
                       " outcomes; js(col,.) is the collective judgment");
  prog.notes.push_back("issues are listed with their negations; js(A,-X) for X = -p reads js(A,p)");

  std::vector<int> order(static_cast<std::size_t>(s.profile.size()));
  for (std::size_t v = 0; v < order.size(); ++v) order[v] = static_cast<int>(v);
  prog.facts = issue_facts(s.agenda) + voter_facts(s, order);

  prog.generate = "1 { js(col,X); js(col,-X) } 1 :- issue(X).\ncand(col).\n";
  prog.generate += admissibility(s);
  prog.generate += "#show js/2.\n";

  prog.rules = outcome_rules_template(objective);
  return prog;
}

Program emit_manipulation_program(const Scenario& s, int manipulator, Objective objective) {
  check_scenario(s);
  (void)s.profile.agent(manipulator);
  Program prog;
  prog.notes.push_back("manipulation scaffold for agent " + std::to_string(manipulator) +
                       " (voter 1 below); decisive preference over outcome sets");
  prog.notes.push_back("feed everything above the final constraint to the meta-optimisation "
                       "pipeline, then add the final constraint to the transformed program");

  std::vector<int> order{manipulator - 1};
  for (int v = 0; v < s.profile.size(); ++v) {
    if (v != manipulator - 1) order.push_back(v);
  }
  prog.facts = issue_facts(s.agenda) + voter_facts(s, order);

  std::string& g = prog.generate;
  g += "% the manipulator's untruthful report\n";
  g += "voter(prime(1)).\n";
  g += "1 { js(prime(1),X), js(prime(1),-X) } 1 :- issue(X).\n";
  g += "% outcome col for the truthful profile, prime(col) for the manipulated one\n";
  g += "out(col). out(prime(col)).\n";
  g += "in(col,A) :- voter(A), A != prime(1).\n";
  g += "in(prime(col),A) :- voter(A), A != 1.\n";
  g += "1 { js(O,X); js(O,-X) } 1 :- out(O), issue(X).\n";
  g += "cand(col). cand(prime(col)). cand(prime(1)).\n";
  g += admissibility(s);

  std::string& r = prog.rules;
  r += "odist(O,A,D) :- out(O), in(O,A), D = #count { X : issue(X), js(O,X), js(A,-X) }.\n";
  r += "omax(O,Max) :- out(O), Max = #max { D,A : odist(O,A,D) }.\n";
  r += "omin(O,Min) :- out(O), Min = #min { D,A : odist(O,A,D) }.\n";
  r += "oineq(O,Max-Min) :- omax(O,Max), omin(O,Min).\n";
  r += "_criteria(30,1,ineq_unit(O,K)) :- oineq(O,I), K = 1..I.\n";
  r += "_optimize(30,1,card).\n";
  if (objective == Objective::MaxEqThenMaxHam) {
    r += "_criteria(20,1,max_unit(O,K)) :- omax(O,M), K = 1..M.\n";
    r += "_optimize(20,1,card).\n";
  }
  r += "% every report is its own subset-minimal optimum\n";
  r += "_criteria(40,1,js(prime(1),X)) :- js(prime(1),X).\n";
  r += "_optimize(40,1,incl).\n";
  r += "% each outcome measured against the other profile\n";
  r += "other(col,prime(col)). other(prime(col),col).\n";
  r += "xdist(O,A,D) :- other(O,P), in(P,A), D = #count { X : issue(X), js(O,X), js(A,-X) }.\n";
  r += "xmax(O,Max) :- other(O,_), Max = #max { D,A : xdist(O,A,D) }.\n";
  r += "xmin(O,Min) :- other(O,_), Min = #min { D,A : xdist(O,A,D) }.\n";
  r += "xineq(O,Max-Min) :- xmax(O,Max), xmin(O,Min).\n";
  if (objective == Objective::MaxEq) {
    r += "alsowins(O) :- other(O,P), xineq(O,I), oineq(P,I).\n";
  } else {
    r += "alsowins(O) :- other(O,P), xineq(O,I), oineq(P,I), xmax(O,M), omax(P,M).\n";
  }
  r += "% (i) the manipulated outcome is strictly closer to voter 1's truthful judgment\n";
  r += "truthdist(O,D) :- out(O), D = #count { X : issue(X), js(O,X), js(1,-X) }.\n";
  r += "closer :- truthdist(prime(col),D1), truthdist(col,D0), D1 < D0.\n";
  r += "% (ii) the two judgments are not both selected for both profiles\n";
  r += "shared :- alsowins(col), alsowins(prime(col)).\n";
  r += "improves :- closer, not shared.\n";
  r += "unsuccessful :- not successful.\n";
  r += "successful :- not unsuccessful.\n";
  r += ":- successful, not improves.\n";
  r += "_criteria(10,1,unsuccessful) :- unsuccessful.\n";
  r += "_optimize(10,1,card).\n";

  prog.post_transform = "% add to the meta-transformed program\n:- unsuccessful.\n";
  return prog;
}

// --- answer sets ------------------------------------------------------------

namespace {

struct Model {
  std::vector<std::string> atoms;
  std::vector<long> cost;
};

std::vector<std::string> split_atoms(const std::string& line) {
  // Atoms are separated by spaces at parenthesis depth zero.
  std::vector<std::string> atoms;
  std::string cur;
  int depth = 0;
  for (char c : line) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ' ' && depth == 0) {
      if (!cur.empty()) atoms.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) atoms.push_back(std::move(cur));
  return atoms;
}

}  // namespace

std::vector<Judgment> parse_answer_sets(std::string_view solver_output, const Agenda& agenda) {
  std::vector<Model> models;
  bool optimum = false;
  bool any_cost = false;
  std::istringstream in{std::string(solver_output)};
  std::string line;
  std::size_t offset = 0;
  bool expect_atoms = false;
  while (std::getline(in, line)) {
    const std::size_t here = offset;
    offset += line.size() + 1;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (expect_atoms) {
      models.push_back(Model{split_atoms(line), {}});
      expect_atoms = false;
      continue;
    }
    if (line.rfind("Answer:", 0) == 0) {
      expect_atoms = true;
    } else if (line.rfind("Optimization:", 0) == 0) {
      if (models.empty()) throw SyntaxError("optimization line before any model", here);
      std::istringstream vals(line.substr(13));
      long v = 0;
      while (vals >> v) models.back().cost.push_back(v);
      if (!vals.eof()) throw SyntaxError("malformed optimization values", here);
      any_cost = true;
    } else if (line.rfind("OPTIMUM FOUND", 0) == 0) {
      optimum = true;
    }
  }
  if (expect_atoms) throw SyntaxError("answer header without atoms", offset);
  if (models.empty()) return {};
  if (any_cost && !optimum) throw SyntaxError("no 'OPTIMUM FOUND' marker in solver output", offset);

  std::vector<long> best;
  if (any_cost) {
    bool first = true;
    for (const auto& m : models) {
      if (first || m.cost < best) best = m.cost;
      first = false;
    }
  }

  std::map<std::string, int> index;
  for (int k = 0; k < agenda.size(); ++k) {
    index[issue_constant(agenda.issues()[static_cast<std::size_t>(k)])] = k;
  }
  std::set<Judgment> result;
  for (const auto& m : models) {
    if (any_cost && m.cost != best) continue;
    std::vector<int> value(static_cast<std::size_t>(agenda.size()), -1);
    for (const auto& atom : m.atoms) {
      if (atom.rfind("js(col,", 0) != 0) continue;
      if (atom.back() != ')') throw SyntaxError("malformed atom '" + atom + "'", 0);
      std::string lit = atom.substr(7, atom.size() - 8);
      const bool negative = !lit.empty() && lit.front() == '-';
      if (negative) lit.erase(0, 1);
      auto it = index.find(lit);
      if (it == index.end()) throw SyntaxError("atom '" + atom + "' names an unknown issue", 0);
      int& slot = value[static_cast<std::size_t>(it->second)];
      const int v = negative ? 0 : 1;
      if (slot != -1 && slot != v) throw SyntaxError("issue decided both ways in a model", 0);
      slot = v;
    }
    Judgment j(0, agenda.size());
    for (int k = 0; k < agenda.size(); ++k) {
      if (value[static_cast<std::size_t>(k)] == -1) {
        throw SyntaxError("model leaves issue '" + agenda.issues()[static_cast<std::size_t>(k)] +
                              "' undecided",
                          0);
      }
      j = j.with(k, value[static_cast<std::size_t>(k)] == 1);
    }
    result.insert(j);
  }
  return {result.begin(), result.end()};
}

std::string run_solver(const std::string& solver_path, const std::string& program) {
  namespace fs = std::filesystem;
  std::string tmpl = (fs::temp_directory_path() / "egal-XXXXXX.lp").string();
  const int fd = ::mkstemps(tmpl.data(), 3);
  if (fd < 0) throw Error("cannot create a temporary program file");
  ::close(fd);
  {
    std::ofstream out(tmpl);
    out << program;
  }
  const std::string cmd = "'" + solver_path + "' --opt-mode=optN 0 '" + tmpl + "' 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) {
    fs::remove(tmpl);
    throw Error("cannot start solver '" + solver_path + "'");
  }
  std::string output;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) output.append(buf.data(), got);
  const int status = ::pclose(pipe);
  fs::remove(tmpl);
  // clingo reports SAT/UNSAT/OPT through exit codes 10/20/30; 127 is "not found".
  if (status == -1 || (WIFEXITED(status) && WEXITSTATUS(status) == 127)) {
    throw Error("solver '" + solver_path + "' could not be run");
  }
  return output;
}

}  // namespace egal::asp
