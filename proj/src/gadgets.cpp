#include "egal/gadgets.hpp"

#include <climits>
#include <cstdlib>
#include <set>
#include <sstream>

#include "egal/rules.hpp"

namespace egal {

// --- ThreeCnf / DIMACS ------------------------------------------------------

void ThreeCnf::validate() const {
  if (num_vars < 1) throw InvalidArgument("3CNF formula needs at least one variable");
  for (std::size_t k = 0; k < clauses.size(); ++k) {
    std::set<int> vars;
    for (int lit : clauses[k]) {
      if (lit == 0 || std::abs(lit) > num_vars) {
        throw InvalidArgument("clause " + std::to_string(k + 1) + " has literal " +
                              std::to_string(lit) + " outside 1.." + std::to_string(num_vars));
      }
      if (!vars.insert(std::abs(lit)).second) {
        throw InvalidArgument("clause " + std::to_string(k + 1) +
                              " mentions variable " + std::to_string(std::abs(lit)) +
                              " twice (repeated or complementary literals)");
      }
    }
  }
}

ThreeCnf parse_dimacs(std::string_view text) {
  ThreeCnf f;
  bool have_header = false;
  long declared_clauses = 0;
  std::vector<int> pending;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const std::string line(text.substr(pos, eol - pos));
    const std::size_t line_start = pos;
    pos = eol + 1;
    std::istringstream in(line);
    std::string first;
    if (!(in >> first)) continue;
    if (first == "c" || first[0] == 'c' || first == "%") continue;
    if (first == "p") {
      std::string fmt;
      long n = 0;
      if (!(in >> fmt >> n >> declared_clauses) || fmt != "cnf" || n < 1 || declared_clauses < 0) {
        throw SyntaxError("malformed DIMACS header", line_start);
      }
      if (have_header) throw SyntaxError("second DIMACS header", line_start);
      have_header = true;
      f.num_vars = static_cast<int>(n);
      continue;
    }
    if (!have_header) throw SyntaxError("clause before 'p cnf' header", line_start);
    in.clear();
    in.seekg(0);
    std::string tok;
    while (in >> tok) {
      char* end = nullptr;
      const long lit = std::strtol(tok.c_str(), &end, 10);
      if (end == tok.c_str() || *end != '\0') {
        throw SyntaxError("expected an integer literal, got '" + tok + "'", line_start);
      }
      if (lit == 0) {
        if (pending.size() != 3) {
          throw InvalidArgument("clause " + std::to_string(f.clauses.size() + 1) + " has " +
                                std::to_string(pending.size()) +
                                " literals; only 3-literal clauses are accepted");
        }
        f.clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
      } else {
        pending.push_back(static_cast<int>(lit));
      }
    }
  }
  if (!have_header) throw SyntaxError("missing 'p cnf' header", 0);
  if (!pending.empty()) throw SyntaxError("last clause is not zero-terminated", text.size());
  if (static_cast<long>(f.clauses.size()) != declared_clauses) {
    throw InvalidArgument("header declares " + std::to_string(declared_clauses) +
                          " clauses, found " + std::to_string(f.clauses.size()));
  }
  f.validate();
  return f;
}

std::string to_dimacs(const ThreeCnf& f) {
  std::ostringstream os;
  os << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const auto& c : f.clauses) os << c[0] << ' ' << c[1] << ' ' << c[2] << " 0\n";
  return os.str();
}

// --- construction -----------------------------------------------------------

std::string RowOrigin::str() const {
  switch (kind) {
    case Kind::Unit: return "J" + std::to_string(index);
    case Kind::Complement: return "J" + std::to_string(index) + "-complement";
    case Kind::Clause: return "J(" + std::to_string(index) + "," + std::to_string(member) + ")";
  }
  return "?";
}

namespace {

std::vector<std::string> gadget_labels(int n) {
  std::vector<std::string> labels;
  for (int v = 1; v <= n; ++v) labels.push_back("y" + std::to_string(v));
  for (int v = 1; v <= n; ++v) labels.push_back("yp" + std::to_string(v));
  for (int z = 1; z <= 5; ++z) labels.push_back("z" + std::to_string(z));
  return labels;
}

/// Row with variable v's y/y' bits set to (y, yp); everything else zero.
Judgment set_pair(Judgment j, int n, int v, bool y, bool yp) {
  return j.with(v - 1, y).with(n + v - 1, yp);
}

Judgment set_z(Judgment j, int n, const char* pattern) {
  for (int z = 0; z < 5; ++z) j = j.with(2 * n + z, pattern[z] == '1');
  return j;
}

}  // namespace

GadgetInstance build_gadget(const ThreeCnf& f) {
  f.validate();
  const int n = f.num_vars;
  const int m = 2 * n + 5;
  if (m > Judgment::kMaxWidth) throw CapacityError("gadget too wide", (Judgment::kMaxWidth - 5) / 2);
  const Judgment zero(0, m);
  std::vector<Judgment> rows;
  std::vector<RowOrigin> origin;

  for (int v = 1; v <= n; ++v) {
    rows.push_back(set_pair(zero, n, v, true, true));
    origin.push_back({RowOrigin::Kind::Unit, v, 0});
  }
  for (int v = 1; v <= n; ++v) {
    Judgment row = zero;
    for (int w = 1; w <= n; ++w) {
      if (w != v) row = set_pair(row, n, w, true, true);
    }
    rows.push_back(row);
    origin.push_back({RowOrigin::Kind::Complement, v, 0});
  }

  static constexpr const char* kZ[3] = {"00001", "00111", "11001"};
  for (std::size_t k = 0; k < f.clauses.size(); ++k) {
    for (int member = 1; member <= 3; ++member) {
      Judgment row = zero;
      for (int lit : f.clauses[k]) {
        const int v = std::abs(lit);
        // Row 1 encodes the clause's literals as true, rows 2 and 3 as false.
        const bool lit_true = (member == 1);
        const bool y = (lit > 0) == lit_true;
        row = set_pair(row, n, v, y, !y);
      }
      rows.push_back(set_z(row, n, kZ[member - 1]));
      origin.push_back({RowOrigin::Kind::Clause, static_cast<int>(k) + 1, member});
    }
  }
  return GadgetInstance{Agenda(gadget_labels(n)), Profile(std::move(rows)), std::move(origin)};
}

// --- 1-in-3 -----------------------------------------------------------------

std::optional<std::vector<bool>> find_one_in_three(const ThreeCnf& f, int cap) {
  f.validate();
  if (f.num_vars > cap) {
    throw CapacityError("1-in-3 oracle limited to " + std::to_string(cap) + " variables", cap);
  }
  const std::uint64_t count = std::uint64_t{1} << f.num_vars;
  for (std::uint64_t a = 0; a < count; ++a) {
    bool ok = true;
    for (const auto& c : f.clauses) {
      int satisfied = 0;
      for (int lit : c) {
        const bool value = ((a >> (std::abs(lit) - 1)) & 1U) != 0;
        satisfied += (lit > 0) == value ? 1 : 0;
      }
      if (satisfied != 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      std::vector<bool> assignment(static_cast<std::size_t>(f.num_vars));
      for (int v = 0; v < f.num_vars; ++v) assignment[static_cast<std::size_t>(v)] = (a >> v) & 1U;
      return assignment;
    }
  }
  return std::nullopt;
}

bool one_in_three_oracle(const ThreeCnf& f, int cap) { return find_one_in_three(f, cap).has_value(); }

Judgment assignment_judgment(const ThreeCnf& f, const std::vector<bool>& assignment) {
  const int n = f.num_vars;
  if (static_cast<int>(assignment.size()) != n) throw DimensionError("assignment size mismatch");
  Judgment j(0, 2 * n + 5);
  for (int v = 1; v <= n; ++v) {
    const bool value = assignment[static_cast<std::size_t>(v - 1)];
    j = set_pair(j, n, v, value, !value);
  }
  return set_z(j, n, "00001");
}

// --- verification -----------------------------------------------------------

std::string GadgetReport::str() const {
  std::ostringstream os;
  os << "issues: " << num_issues << "\nprofile rows: " << profile_size
     << "\nmin inequity: " << min_inequity << " (first attained by " << minimiser.str() << ")"
     << "\nequidistant judgment exists: " << (equidistant_exists ? "yes" : "no")
     << "\n1-in-3 satisfiable: " << (one_in_three ? "yes" : "no");
  if (assignment_distances) {
    os << "\nassignment judgment distances:";
    for (int dist : *assignment_distances) os << ' ' << dist;
  }
  os << "\nconsistent: " << (consistent ? "yes" : "no");
  for (const auto& msg : failures) os << "\n  failed: " << msg;
  return os.str();
}

GadgetReport verify_gadget(const ThreeCnf& f, bool isolation_precondition, int cap) {
  const GadgetInstance g = build_gadget(f);
  const int m = g.agenda.size();
  if (m > cap) {
    throw CapacityError("gadget has " + std::to_string(m) + " issues, above the cap of " +
                            std::to_string(cap),
                        cap);
  }
  GadgetReport r;
  r.num_issues = m;
  r.profile_size = g.profile.size();
  r.min_inequity = INT_MAX;
  const std::uint64_t count = std::uint64_t{1} << m;
  for (std::uint64_t b = 0; b < count; ++b) {
    const Judgment j(b, m);
    const int ineq = inequity(g.profile, j);
    if (ineq < r.min_inequity) {
      r.min_inequity = ineq;
      r.minimiser = j;
    }
  }
  r.equidistant_exists = r.min_inequity == 0;
  const auto assignment = find_one_in_three(f, cap);
  r.one_in_three = assignment.has_value();

  if (r.equidistant_exists != r.one_in_three) {
    r.failures.push_back("equidistant judgment exists iff 1-in-3 satisfiable");
  }
  if (r.min_inequity % 2 != 0) r.failures.push_back("minimum inequity is even");
  if (assignment) {
    const Judgment ja = assignment_judgment(f, *assignment);
    std::vector<int> dists;
    for (const auto& row : g.profile) dists.push_back(hamming(row, ja));
    for (int dist : dists) {
      if (dist != f.num_vars + 1) {
        r.failures.push_back("assignment judgment at distance n+1 from every row");
        break;
      }
    }
    r.assignment_distances = std::move(dists);
  } else {
    if (r.min_inequity < 2) r.failures.push_back("minimum inequity >= 2 when unsatisfiable");
    if (isolation_precondition && r.min_inequity != 2) {
      r.failures.push_back("minimum inequity = 2 under the isolation precondition");
    }
  }
  r.consistent = r.failures.empty();
  return r;
}

}  // namespace egal
