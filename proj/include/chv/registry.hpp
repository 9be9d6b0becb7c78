// The case registry: one record per (unipotent class, characteristic) with
// the component group, expression pattern, unknown kinds and axioms; the
// driver assembles the m-expression table, runs the solver (splitting on
// q mod 3 where a congruence axiom applies) and produces the verdict.
#pragma once

#include <fstream>
#include <memory>

#include "chv/solver.hpp"

namespace chv {

struct SolverCase {
  std::string uni_class;
  int p = 2;  // 2, 3, 5 or 7 (= every good characteristic)
  std::string group;
  std::string pattern = "regular";  // regular | const1 | one_plus_eps
  std::string prefactor = "f_w(q)";
  struct U {
    std::string char_name;
    std::string kind;  // delta | zetagamma | xi | fixed1
    int order = 24;
  };
  std::vector<U> unknowns;
  std::vector<std::pair<std::string, std::string>> equal_axioms;
  std::string qmod3_char;           // empty when no congruence applies
  std::vector<std::string> fixed;   // characters pinned to +1 by outside input
  bool positivity = true;
  std::string expect;  // unique | allgood | conditional
};

struct CaseRegistry {
  std::vector<SolverCase> cases;

  static CaseRegistry from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open registry: " + path);
    return CaseRegistry(in);
  }

  explicit CaseRegistry(std::istream& in) {
    std::string line;
    SolverCase cur;
    bool open = false;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      std::istringstream ls(line);
      std::string kw;
      ls >> kw;
      if (kw == "case") {
        cur = SolverCase();
        std::string ptok;
        ls >> cur.uni_class >> ptok;
        cur.p = std::stoi(ptok.substr(ptok.find('=') + 1));
        open = true;
      } else if (kw == "end") {
        if (!open) throw std::runtime_error("registry: stray end");
        cases.push_back(cur);
        open = false;
      } else if (kw == "group:") {
        ls >> cur.group;
      } else if (kw == "pattern:") {
        ls >> cur.pattern;
      } else if (kw == "prefactor:") {
        ls >> cur.prefactor;
      } else if (kw == "unknown:") {
        SolverCase::U u;
        ls >> u.char_name >> u.kind;
        if (!(ls >> u.order)) u.order = 24;
        cur.unknowns.push_back(u);
      } else if (kw == "axiom:") {
        std::string what;
        ls >> what;
        if (what == "equal") {
          std::string a, b;
          ls >> a >> b;
          cur.equal_axioms.push_back({a, b});
        } else if (what == "qmod3") {
          ls >> cur.qmod3_char;
        } else if (what == "fixed1") {
          std::string a;
          ls >> a;
          cur.fixed.push_back(a);
        } else {
          throw std::runtime_error("registry: unknown axiom " + what);
        }
      } else if (kw == "positivity:") {
        std::string v;
        ls >> v;
        cur.positivity = v == "yes";
      } else if (kw == "expect:") {
        ls >> cur.expect;
      } else {
        throw std::runtime_error("registry: unknown field " + kw);
      }
    }
  }

  const SolverCase* find(const std::string& uni_class, int p) const {
    int np = p >= 7 ? 7 : p;
    for (const auto& c : cases)
      if (c.uni_class == uni_class && c.p == np) return &c;
    return nullptr;
  }

  std::vector<const SolverCase*> for_p(int p) const {
    int np = p >= 7 ? 7 : p;
    std::vector<const SolverCase*> out;
    for (const auto& c : cases)
      if (c.p == np) out.push_back(&c);
    return out;
  }
};

struct CaseOutcome {
  std::string verdict;  // UNIQUE_GOOD / ALL_GOOD / CONDITIONAL / ...
  SolverReport report;           // the single run, or the q = 1 mod 3 branch
  std::optional<SolverReport> branch_qm2;  // q = -1 mod 3 branch
  std::string prefactor;
  std::vector<std::string> row_labels;
};

class CaseRunner {
 public:
  CaseRunner() = default;

  // qmod3: 0 = both branches (when the case has a congruence), 1 or 2 to
  // force one branch.
  CaseOutcome run(const SolverCase& c, int qmod3 = 0) const {
    int field_n = std::lcm(std::lcm(value_conductor(c.group), 2), max_order(c));
    const CycField* f = field(field_n);
    FiniteGroupTable g = table_for(c.group, f);
    std::vector<UnknownSpec> unknowns;
    for (const auto& u : c.unknowns) {
      UnknownSpec s;
      s.char_name = u.char_name;
      if (u.kind == "delta") {
        s.kind = UnknownSpec::Sign;
        s.name = "delta[" + u.char_name + "]";
      } else if (u.kind == "zetagamma") {
        s.kind = UnknownSpec::Root;
        s.name = "zg[" + u.char_name + "]";
        s.max_order = u.order;
      } else if (u.kind == "xi") {
        s.kind = UnknownSpec::Root;
        s.name = "xi[" + u.char_name + "]";
        s.max_order = u.order;
      } else if (u.kind == "fixed1") {
        s.kind = UnknownSpec::FixedOne;
        s.name = "delta[" + u.char_name + "]=+1";
      } else {
        throw std::invalid_argument("unknown kind " + u.kind);
      }
      unknowns.push_back(s);
    }
    MExpressionTable t =
        c.pattern == "regular"
            ? build_regular_expressions(g, unknowns, c.prefactor)
            : build_irregular_expressions(g, unknowns, c.pattern, c.prefactor);
    t.case_name = c.uni_class + " p=" + std::to_string(c.p);
    std::vector<Axiom> axioms;
    for (const auto& [a, b] : c.equal_axioms) axioms.push_back({Axiom::Equal, a, b, {}});
    for (const auto& a : c.fixed) axioms.push_back({Axiom::Fix, a, "", Cyc::one(f)});
    Solver solver(t);
    CaseOutcome out;
    out.prefactor = c.prefactor;
    out.row_labels = t.row_labels;
    if (c.qmod3_char.empty()) {
      out.report = solver.solve(axioms, c.positivity);
      out.verdict = out.report.verdict;
      return out;
    }
    auto with_sign = [&](int sign) {
      std::vector<Axiom> ax = axioms;
      ax.push_back({Axiom::Fix, c.qmod3_char, "",
                    sign > 0 ? Cyc::one(f) : -Cyc::one(f)});
      return solver.solve(ax, c.positivity);
    };
    if (qmod3 == 1) {
      out.report = with_sign(+1);
      out.verdict = out.report.verdict;
    } else if (qmod3 == 2) {
      out.report = with_sign(-1);
      out.verdict = out.report.verdict;
    } else {
      out.report = with_sign(+1);
      out.branch_qm2 = with_sign(-1);
      out.verdict = "CONDITIONAL";
    }
    return out;
  }

 private:
  int max_order(const SolverCase& c) const {
    int m = 2;
    for (const auto& u : c.unknowns)
      if (u.kind == "zetagamma" || u.kind == "xi") m = std::lcm(m, u.order);
    return m;
  }

  const CycField* field(int n) const {
    auto it = fields_.find(n);
    if (it == fields_.end())
      it = fields_.emplace(n, std::make_unique<CycField>(n)).first;
    return it->second.get();
  }

  mutable std::map<int, std::unique_ptr<CycField>> fields_;
};

}  // namespace chv
