// The sign/root-of-unity solver: builds the symbolic m((u_O)_a, w)
// expressions over unknown roots of unity attached to the characters of
// the component group, imposes reality, nonnegativity, the axioms a case
// carries, and enumerates every surviving assignment.  Good rows are the
// strictly positive rows at central classes (the twisted classes (u_O)_a
// with a non-central carry a non-trivial Frobenius action on the
// component group, so they can never be good).
#pragma once

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "chv/chartable.hpp"

namespace chv {

struct UnknownSpec {
  std::string name;       // e.g. "delta[eps]" or "zg[rxeps]"
  std::string char_name;  // character it calibrates
  enum Kind { Sign, Root, FixedOne } kind = Sign;
  int max_order = 24;
};

struct MExpressionTable {
  std::string case_name;
  std::string prefactor;  // opaque strictly positive factor, e.g. "f_w(q)"
  const CycField* field = nullptr;
  FiniteGroupTable group;
  std::vector<UnknownSpec> unknowns;        // aligned with group.chars
  std::vector<std::vector<Cyc>> coeff;      // coeff[row][unknown]
  std::vector<std::string> row_labels;      // class names

  bool unknown_in_rows(size_t u) const {
    for (const auto& row : coeff)
      if (!row[u].is_zero()) return true;
    return false;
  }
};

// entry(a) = sum over characters of x(1) x(a) times the character's unknown
inline MExpressionTable build_regular_expressions(const FiniteGroupTable& g,
                                                  std::vector<UnknownSpec> unknowns,
                                                  const std::string& prefactor) {
  MExpressionTable t;
  t.prefactor = prefactor;
  t.field = g.field;
  t.group = g;
  t.unknowns = std::move(unknowns);
  if (t.unknowns.size() != g.chars.size())
    throw std::invalid_argument("one unknown per irreducible character required");
  for (size_t r = 0; r < g.classes.size(); ++r) {
    t.row_labels.push_back(g.classes[r].name);
    std::vector<Cyc> row;
    for (size_t u = 0; u < g.chars.size(); ++u) {
      const GroupChar& ch = g.chars[t.group.char_index(t.unknowns[u].char_name)];
      row.push_back(Cyc::rational(g.field, Rat(ch.degree)) * ch.values[r]);
    }
    t.coeff.push_back(std::move(row));
  }
  return t;
}

// Irregular patterns that occur: "const1" (every entry is just the
// trivial character's sign) and "one_plus_eps" (1 + delta_eps eps(a)).
inline MExpressionTable build_irregular_expressions(const FiniteGroupTable& g,
                                                    std::vector<UnknownSpec> unknowns,
                                                    const std::string& pattern,
                                                    const std::string& prefactor) {
  MExpressionTable t;
  t.prefactor = prefactor;
  t.field = g.field;
  t.group = g;
  t.unknowns = std::move(unknowns);
  for (size_t r = 0; r < g.classes.size(); ++r) {
    t.row_labels.push_back(g.classes[r].name);
    std::vector<Cyc> row(t.unknowns.size(), Cyc::zero(g.field));
    for (size_t u = 0; u < t.unknowns.size(); ++u) {
      const std::string& cn = t.unknowns[u].char_name;
      if (cn == "1")
        row[u] = pattern == "const1" || pattern == "one_plus_eps" ? Cyc::one(g.field)
                                                                  : Cyc::zero(g.field);
      else if (pattern == "one_plus_eps" && cn == "eps")
        row[u] = g.chars[g.char_index("eps")].values[r];
    }
    t.coeff.push_back(std::move(row));
  }
  return t;
}

struct Axiom {
  enum Type { Equal, Fix } type = Equal;
  std::string a, b;      // unknown char names
  Cyc fix_value;         // for Fix
};

struct Solution {
  std::vector<Cyc> x;
  std::vector<Rat> row_values;          // all rows rational at a solution
  std::vector<std::string> good_rows;   // central classes with positive entry
  bool operator==(const Solution& o) const { return x == o.x; }
};

struct SolverReport {
  std::vector<Solution> solutions;  // projected to determined unknowns
  bool unique = false;
  std::vector<std::string> undetermined;
  int unresolved = 0;          // assignments with a real non-rational row
  int orbit_count = 0;         // solutions grouped by central translation
  int canonical = -1;          // solution with the identity row positive
  Rat canonical_value;         // identity-row value there
  std::string verdict;         // UNIQUE_GOOD / ALL_GOOD / NO_GOOD / MIXED / UNSATISFIABLE
};

class Solver {
 public:
  explicit Solver(const MExpressionTable& t) : t_(&t) {}

  SolverReport solve(const std::vector<Axiom>& axioms, bool require_positive) const {
    const CycField* f = t_->field;
    size_t nu = t_->unknowns.size();
    // domains
    std::vector<std::vector<Cyc>> domain(nu);
    for (size_t u = 0; u < nu; ++u) {
      switch (t_->unknowns[u].kind) {
        case UnknownSpec::FixedOne:
          domain[u] = {Cyc::one(f)};
          break;
        case UnknownSpec::Sign:
          domain[u] = {Cyc::one(f), -Cyc::one(f)};
          break;
        case UnknownSpec::Root: {
          int ord = t_->unknowns[u].max_order;
          if (f->n() % ord != 0) throw std::invalid_argument("domain exceeds the field");
          for (int k = 0; k < ord; ++k)
            domain[u].push_back(Cyc::zeta_pow(f, static_cast<long long>(f->n() / ord) * k));
          break;
        }
      }
    }
    for (const Axiom& ax : axioms)
      if (ax.type == Axiom::Fix) domain[index_of(ax.a)] = {ax.fix_value};

    // Reality propagation: every row is real for every class exactly when
    // the unknown of each character is the conjugate of the unknown of the
    // conjugate character (characters are linearly independent class
    // functions).  Real characters force their unknown into {+-1}; of each
    // conjugate pair only the first member is enumerated.
    std::vector<int> conj_source(nu, -1);
    for (size_t u = 0; u < nu; ++u) {
      const GroupChar& cu = t_->group.chars[t_->group.char_index(t_->unknowns[u].char_name)];
      for (size_t v = 0; v <= u; ++v) {
        const GroupChar& cv =
            t_->group.chars[t_->group.char_index(t_->unknowns[v].char_name)];
        bool isconj = true;
        for (size_t c = 0; c < cu.values.size(); ++c)
          if (cu.values[c] != cv.values[c].conj()) isconj = false;
        if (!isconj) continue;
        if (v == u) {
          // real character: keep only real domain values
          std::vector<Cyc> filt;
          for (const Cyc& val : domain[u])
            if (val.is_real()) filt.push_back(val);
          domain[u] = filt;
        } else if (domain[u].size() > 1) {
          conj_source[u] = static_cast<int>(v);
        }
        break;
      }
    }

    // enumeration bound (after reality propagation has cut the domains)
    double logsize = 0;
    for (size_t u = 0; u < nu; ++u)
      if (conj_source[u] < 0) logsize += std::log2(static_cast<double>(domain[u].size()));
    if (logsize > 27) throw std::runtime_error("domain too large");

    // per-row support for incremental pruning
    size_t nrows = t_->coeff.size();
    std::vector<size_t> row_max_unknown(nrows, 0);
    for (size_t r = 0; r < nrows; ++r)
      for (size_t u = 0; u < nu; ++u)
        if (!t_->coeff[r][u].is_zero()) row_max_unknown[r] = u;
    std::vector<std::pair<size_t, size_t>> equal_pairs;
    for (const Axiom& ax : axioms)
      if (ax.type == Axiom::Equal)
        equal_pairs.push_back({index_of(ax.a), index_of(ax.b)});

    SolverReport rep;
    std::vector<Cyc> x(nu, Cyc::zero(f));
    std::function<void(size_t)> rec = [&](size_t depth) {
      if (depth == nu) {
        Solution sol;
        sol.x = x;
        bool positive_somewhere = false;
        for (size_t r = 0; r < nrows; ++r) {
          Cyc v = row_value(r, x);
          Rat rv = v.rational_value();
          sol.row_values.push_back(rv);
          if (rv > Rat(0)) {
            positive_somewhere = true;
            if (t_->group.classes[r].central) sol.good_rows.push_back(t_->row_labels[r]);
          }
        }
        if (require_positive && !positive_somewhere) return;
        rep.solutions.push_back(std::move(sol));
        return;
      }
      std::vector<Cyc> forced;
      if (conj_source[depth] >= 0) forced = {x[conj_source[depth]].conj()};
      for (const Cyc& v : conj_source[depth] >= 0 ? forced : domain[depth]) {
        x[depth] = v;
        bool ok = true;
        for (auto [a, b] : equal_pairs)
          if (a <= depth && b <= depth && !(x[a] == x[b])) ok = false;
        for (size_t r = 0; r < nrows && ok; ++r) {
          if (row_max_unknown[r] != depth) continue;
          Cyc val = row_value(r, x);
          if (!val.is_real()) {
            ok = false;
            break;
          }
          if (!val.is_rational()) {
            ++rep.unresolved;
            ok = false;
            break;
          }
          if (val.rational_value() < Rat(0)) ok = false;
        }
        if (ok) rec(depth + 1);
      }
    };
    rec(0);

    // project away unknowns appearing in no row and pinned by nothing:
    // those stay undetermined, and solutions differing only there collapse
    std::vector<bool> undet(nu, false);
    for (size_t u = 0; u < nu; ++u) {
      if (t_->unknowns[u].kind == UnknownSpec::FixedOne) continue;
      bool fixed = false;
      for (const Axiom& ax : axioms)
        if (ax.type == Axiom::Fix && index_of(ax.a) == u) fixed = true;
      if (fixed || t_->unknown_in_rows(u)) continue;
      undet[u] = true;
      rep.undetermined.push_back(t_->unknowns[u].name);
    }
    std::vector<Solution> projected;
    for (const Solution& s : rep.solutions) {
      Solution q = s;
      for (size_t u = 0; u < nu; ++u)
        if (undet[u]) q.x[u] = Cyc::one(f);
      if (std::find(projected.begin(), projected.end(), q) == projected.end())
        projected.push_back(q);
    }
    rep.solutions = std::move(projected);
    rep.unique = rep.solutions.size() == 1;

    group_orbits(rep);
    classify(rep);
    // re-substitution check, independent of the search
    for (const Solution& s : rep.solutions)
      for (size_t r = 0; r < nrows; ++r)
        if (row_value(r, s.x).rational_value() != s.row_values[r])
          throw std::logic_error("re-substitution failed");
    return rep;
  }

 private:
  size_t index_of(const std::string& char_name) const {
    for (size_t u = 0; u < t_->unknowns.size(); ++u)
      if (t_->unknowns[u].char_name == char_name) return u;
    throw std::invalid_argument("no unknown for character " + char_name);
  }

  Cyc row_value(size_t r, const std::vector<Cyc>& x) const {
    Cyc v = Cyc::zero(t_->field);
    for (size_t u = 0; u < x.size(); ++u)
      if (!t_->coeff[r][u].is_zero()) v = v + t_->coeff[r][u] * x[u];
    return v;
  }

  void group_orbits(SolverReport& rep) const {
    size_t n = rep.solutions.size();
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (size_t i = 0; i < n; ++i) {
      if (comp[i] >= 0) continue;
      comp[i] = ncomp;
      std::vector<size_t> stack{i};
      while (!stack.empty()) {
        size_t cur = stack.back();
        stack.pop_back();
        for (size_t c = 0; c < t_->group.classes.size(); ++c) {
          if (!t_->group.classes[c].central) continue;
          Solution moved = translate(rep.solutions[cur], c);
          for (size_t j = 0; j < n; ++j)
            if (comp[j] < 0 && rep.solutions[j].x == moved.x) {
              comp[j] = ncomp;
              stack.push_back(j);
            }
        }
      }
      ++ncomp;
    }
    rep.orbit_count = ncomp;
  }

  // moving the base point by the central class c multiplies the unknown of
  // each character by its (scalar) value there
  Solution translate(const Solution& s, size_t c) const {
    Solution out = s;
    for (size_t u = 0; u < s.x.size(); ++u) {
      const GroupChar& ch =
          t_->group.chars[t_->group.char_index(t_->unknowns[u].char_name)];
      Cyc scalar = ch.values[c];
      // degree-normalised value; degree divides since c is central
      if (ch.degree != 1)
        scalar = scalar * Cyc::rational(t_->field, Rat(1, ch.degree));
      out.x[u] = s.x[u] * scalar;
    }
    out.row_values.clear();
    out.good_rows.clear();
    return out;
  }

  void classify(SolverReport& rep) const {
    if (rep.solutions.empty()) {
      rep.verdict = "UNSATISFIABLE";
      return;
    }
    bool all_rows_positive = true, none_good = true, all_exactly_one = true;
    for (const Solution& s : rep.solutions) {
      for (const Rat& v : s.row_values)
        if (!(v > Rat(0))) all_rows_positive = false;
      if (!s.good_rows.empty()) none_good = false;
      if (s.good_rows.size() != 1) all_exactly_one = false;
    }
    // canonical solution: identity row strictly positive
    for (size_t i = 0; i < rep.solutions.size(); ++i)
      if (rep.solutions[i].row_values[0] > Rat(0)) {
        rep.canonical = static_cast<int>(i);
        rep.canonical_value = rep.solutions[i].row_values[0];
        break;
      }
    if (all_rows_positive)
      rep.verdict = "ALL_GOOD";
    else if (none_good)
      rep.verdict = "NO_GOOD";
    else if (all_exactly_one && rep.orbit_count == 1 && rep.canonical >= 0)
      rep.verdict = "UNIQUE_GOOD";
    else
      rep.verdict = "MIXED";
  }

  const MExpressionTable* t_;
};

}  // namespace chv
