// Exact character tables for the component groups that occur: Z/n (n <= 6),
// S3, S5, D8, Z/2 x Z/2, S3 x Z/2.  Tables are constructed (powers of a
// root of unity, permutation characters plus orthogonalisation, an explicit
// 2-dimensional representation, tensor products) and then verified.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "chv/cyclotomic.hpp"

namespace chv {

struct GroupClass {
  std::string name;
  int size = 1;
  bool central = false;
};

struct GroupChar {
  std::string name;
  int degree = 1;
  std::vector<Cyc> values;  // one per class
};

struct FiniteGroupTable {
  std::string label;
  int order = 0;
  int conductor = 1;  // group exponent
  const CycField* field = nullptr;
  std::vector<GroupClass> classes;
  std::vector<GroupChar> chars;

  int class_index(const std::string& name) const {
    for (size_t i = 0; i < classes.size(); ++i)
      if (classes[i].name == name) return static_cast<int>(i);
    throw std::invalid_argument("unknown class: " + name);
  }
  int char_index(const std::string& name) const {
    for (size_t i = 0; i < chars.size(); ++i)
      if (chars[i].name == name) return static_cast<int>(i);
    throw std::invalid_argument("unknown character: " + name);
  }
};

inline bool verify_orthogonality(const FiniteGroupTable& t) {
  const CycField* f = t.field;
  int nc = static_cast<int>(t.classes.size());
  if (t.chars.size() != t.classes.size()) return false;
  int sum = 0;
  for (const auto& c : t.classes) sum += c.size;
  if (sum != t.order) return false;
  long long degsq = 0;
  for (const auto& ch : t.chars) degsq += static_cast<long long>(ch.degree) * ch.degree;
  if (degsq != t.order) return false;
  // row orthogonality
  for (size_t a = 0; a < t.chars.size(); ++a)
    for (size_t b = 0; b < t.chars.size(); ++b) {
      Cyc s = Cyc::zero(f);
      for (int c = 0; c < nc; ++c)
        s = s + Cyc::rational(f, Rat(t.classes[c].size)) * t.chars[a].values[c] *
                    t.chars[b].values[c].conj();
      Cyc want = Cyc::rational(f, Rat(a == b ? t.order : 0));
      if (s != want) return false;
    }
  // column orthogonality
  for (int c1 = 0; c1 < nc; ++c1)
    for (int c2 = 0; c2 < nc; ++c2) {
      Cyc s = Cyc::zero(f);
      for (const auto& ch : t.chars) s = s + ch.values[c1] * ch.values[c2].conj();
      Cyc want = Cyc::rational(f, c1 == c2 ? Rat(t.order, t.classes[c1].size) : Rat(0));
      if (s != want) return false;
    }
  return true;
}

namespace tables {

// ---- cyclic Z/n ------------------------------------------------------------

inline std::string cyclic_char_name(int n, int j) {
  // named by the character's value at the generator
  if (j == 0) return "1";
  if (n == 2) return "eps";
  if (n == 3) return j == 1 ? "w" : "w2";
  if (n == 4) return j == 1 ? "i" : (j == 2 ? "-1" : "-i");
  if (n == 6) {
    // zeta_6 = -w^2 with w = zeta_3
    switch (j) {
      case 1: return "-w2";
      case 2: return "w";
      case 3: return "-1";
      case 4: return "w2";
      case 5: return "-w";
    }
  }
  return "z" + std::to_string(n) + (j == 1 ? "" : "^" + std::to_string(j));
}

inline FiniteGroupTable cyclic(int n, const CycField* f) {
  if (f->n() % n != 0) throw std::invalid_argument("field too small for Z/n");
  FiniteGroupTable t;
  t.label = "Z" + std::to_string(n);
  t.order = n;
  t.conductor = n;
  t.field = f;
  for (int k = 0; k < n; ++k)
    t.classes.push_back({std::to_string(k), 1, true});
  for (int j = 0; j < n; ++j) {
    GroupChar ch;
    ch.name = cyclic_char_name(n, j);
    ch.degree = 1;
    for (int k = 0; k < n; ++k)
      ch.values.push_back(Cyc::zeta_pow(f, static_cast<long long>(f->n() / n) * j * k));
    t.chars.push_back(std::move(ch));
  }
  return t;
}

// ---- symmetric groups via permutation characters ---------------------------

namespace detail {

inline std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(rest, maxpart); k >= 1; --k) {
      cur.push_back(k);
      rec(rest - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  // lexicographically decreasing order: (n) first, (1^n) last
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a > b; });
  return out;
}

inline std::string partition_name(const std::vector<int>& p) {
  std::string s = "(";
  for (int v : p) s += std::to_string(v);
  return s + ")";
}

inline std::vector<std::vector<int>> perms(int n) {
  std::vector<int> base(n);
  std::iota(base.begin(), base.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(base);
  while (std::next_permutation(base.begin(), base.end()));
  return out;
}

inline std::vector<int> cycle_type(const std::vector<int>& g) {
  int n = static_cast<int>(g.size());
  std::vector<bool> seen(n, false);
  std::vector<int> type;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0, c = i;
    do {
      seen[c] = true;
      c = g[c];
      ++len;
    } while (c != i);
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

// number of ways to distribute the cycles of g over blocks of sizes lambda
inline long long fixed_tabloids(const std::vector<int>& cycles, std::vector<int> lambda) {
  if (cycles.empty())
    return std::all_of(lambda.begin(), lambda.end(), [](int v) { return v == 0; }) ? 1 : 0;
  std::vector<int> rest(cycles.begin() + 1, cycles.end());
  long long total = 0;
  for (size_t b = 0; b < lambda.size(); ++b) {
    if (lambda[b] < cycles[0]) continue;
    lambda[b] -= cycles[0];
    total += fixed_tabloids(rest, lambda);
    lambda[b] += cycles[0];
  }
  return total;
}

}  // namespace detail

inline FiniteGroupTable symmetric(int n, const CycField* f) {
  FiniteGroupTable t;
  t.label = "S" + std::to_string(n);
  t.field = f;
  auto parts = detail::partitions(n);
  auto all = detail::perms(n);
  t.order = static_cast<int>(all.size());
  t.conductor = 1;
  for (const auto& p : parts) t.conductor = std::lcm(t.conductor, p.empty() ? 1 : p[0]);
  // classes keyed by cycle type; sizes by counting
  std::map<std::vector<int>, int> count;
  for (const auto& g : all) count[detail::cycle_type(g)]++;
  // order classes: identity first, then by decreasing lex (n)-like names
  std::vector<std::vector<int>> class_types;
  for (const auto& p : parts) class_types.push_back(p);
  std::sort(class_types.begin(), class_types.end(),
            [&](const auto& a, const auto& b) {
              // identity (1,1,..,1) first, then decreasing lex
              bool ia = a[0] == 1, ib = b[0] == 1;
              if (ia != ib) return ia;
              return a > b;
            });
  for (const auto& ty : class_types)
    t.classes.push_back({detail::partition_name(ty), count[ty], count[ty] == 1});
  // permutation characters, then Gram-Schmidt in lex-decreasing order
  std::vector<GroupChar> done;
  for (const auto& lam : parts) {
    std::vector<long long> pi(t.classes.size());
    for (size_t c = 0; c < class_types.size(); ++c)
      pi[c] = detail::fixed_tabloids(class_types[c], lam);
    // subtract inner products with the previously extracted characters
    std::vector<Rat> vals(t.classes.size());
    for (size_t c = 0; c < vals.size(); ++c) vals[c] = Rat(pi[c]);
    for (const GroupChar& ch : done) {
      Rat ip(0);
      for (size_t c = 0; c < vals.size(); ++c)
        ip = ip + Rat(t.classes[c].size) * vals[c] * ch.values[c].rational_value();
      ip = ip / Rat(t.order);
      for (size_t c = 0; c < vals.size(); ++c)
        vals[c] = vals[c] - ip * ch.values[c].rational_value();
    }
    GroupChar ch;
    ch.name = detail::partition_name(lam);
    for (size_t c = 0; c < vals.size(); ++c) ch.values.push_back(Cyc::rational(f, vals[c]));
    int id = 0;
    for (size_t c = 0; c < vals.size(); ++c)
      if (t.classes[c].size == 1 && t.classes[c].name == detail::partition_name(
                                        std::vector<int>(n, 1)))
        id = static_cast<int>(c);
    if (vals[id].den != 1) throw std::logic_error("non-integral degree");
    ch.degree = static_cast<int>(vals[id].num);
    done.push_back(std::move(ch));
  }
  t.chars = done;
  if (n == 3) {
    // conventional names: trivial, sign, reflection
    for (auto& ch : t.chars) {
      if (ch.name == "(3)") ch.name = "1";
      else if (ch.name == "(111)") ch.name = "eps";
      else if (ch.name == "(21)") ch.name = "r";
    }
  }
  return t;
}

// ---- dihedral of order 8 ---------------------------------------------------

inline FiniteGroupTable dihedral8(const CycField* f) {
  FiniteGroupTable t;
  t.label = "D8";
  t.order = 8;
  t.conductor = 4;
  t.field = f;
  t.classes = {{"1", 1, true}, {"s", 2, false}, {"t", 2, false},
               {"st", 2, false}, {"stst", 1, true}};
  // 2x2 real representation: s, t reflections with (st)^4 = 1
  // s = [[1,0],[0,-1]], t = [[0,1],[1,0]]; traces on class reps
  auto lin = [&](int es, int et, const std::string& name) {
    GroupChar ch;
    ch.name = name;
    ch.degree = 1;
    auto v = [&](int val) { return Cyc::rational(f, Rat(val)); };
    ch.values = {v(1), v(es), v(et), v(es * et), v(1)};
    return ch;
  };
  t.chars.push_back(lin(1, 1, "1"));
  t.chars.push_back(lin(-1, 1, "eps_s"));
  t.chars.push_back(lin(1, -1, "eps_t"));
  t.chars.push_back(lin(-1, -1, "eps"));
  GroupChar r;
  r.name = "r";
  r.degree = 2;
  auto v = [&](int val) { return Cyc::rational(f, Rat(val)); };
  r.values = {v(2), v(0), v(0), v(0), v(-2)};
  t.chars.push_back(r);
  return t;
}

// ---- direct products -------------------------------------------------------

inline FiniteGroupTable product(const FiniteGroupTable& a, const FiniteGroupTable& b) {
  FiniteGroupTable t;
  t.label = a.label + "x" + b.label;
  t.order = a.order * b.order;
  t.conductor = std::lcm(a.conductor, b.conductor);
  if (a.field != b.field) throw std::invalid_argument("field mismatch in product");
  t.field = a.field;
  for (const auto& ca : a.classes)
    for (const auto& cb : b.classes)
      t.classes.push_back(
          {"(" + ca.name + "," + cb.name + ")", ca.size * cb.size, ca.central && cb.central});
  for (const auto& xa : a.chars)
    for (const auto& xb : b.chars) {
      GroupChar ch;
      ch.name = xa.name + "x" + xb.name;
      ch.degree = xa.degree * xb.degree;
      for (const auto& va : xa.values)
        for (const auto& vb : xb.values) ch.values.push_back(va * vb);
      t.chars.push_back(std::move(ch));
    }
  return t;
}

}  // namespace tables

// Build (and verify) the table for one of the supported component groups.
// The field must contain the group's conductor-th roots of unity.
inline FiniteGroupTable table_for(const std::string& label, const CycField* f) {
  FiniteGroupTable t;
  if (label == "Z1") t = tables::cyclic(1, f);
  else if (label == "Z2") t = tables::cyclic(2, f);
  else if (label == "Z3") t = tables::cyclic(3, f);
  else if (label == "Z4") t = tables::cyclic(4, f);
  else if (label == "Z5") t = tables::cyclic(5, f);
  else if (label == "Z6") t = tables::cyclic(6, f);
  else if (label == "S3") t = tables::symmetric(3, f);
  else if (label == "S5") t = tables::symmetric(5, f);
  else if (label == "D8") t = tables::dihedral8(f);
  else if (label == "Z2xZ2") t = tables::product(tables::cyclic(2, f), tables::cyclic(2, f));
  else if (label == "S3xZ2") t = tables::product(tables::symmetric(3, f), tables::cyclic(2, f));
  else throw std::invalid_argument("unknown group label: " + label);
  t.label = label;
  if (!verify_orthogonality(t)) throw std::logic_error("orthogonality failed for " + label);
  return t;
}

// Smallest N with all character values in Q(zeta_N).
inline int value_conductor(const std::string& label) {
  if (label == "Z3") return 3;
  if (label == "Z4") return 4;
  if (label == "Z5") return 5;
  if (label == "Z6") return 6;
  if (label == "Z1" || label == "Z2" || label == "Z2xZ2" || label == "S3" ||
      label == "S5" || label == "D8" || label == "S3xZ2")
    return 1;
  throw std::invalid_argument("unknown group label: " + label);
}

}  // namespace chv
