// Brute-force grounding of the cell-intersection formula on small groups
// of Lie type: SL2 over F_q (q = 2,3,4,5) and SL3 over F_2, fully
// enumerated.  The left side is counted directly; the right side sums
// q-specialised Hecke character values against the principal-series
// unipotent character values extracted from coset permutation characters.
#pragma once

#include <array>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "chv/cyclotomic.hpp"  // Rat

namespace chv {

// Small Galois field: prime q by residues, GF(4) by table.
class GF {
 public:
  explicit GF(int q) : q_(q) {
    if (q != 2 && q != 3 && q != 4 && q != 5) throw std::invalid_argument("unsupported q");
  }
  int q() const { return q_; }
  int add(int a, int b) const { return q_ == 4 ? a ^ b : (a + b) % q_; }
  int neg(int a) const { return q_ == 4 ? a : (q_ - a) % q_; }
  int mul(int a, int b) const {
    if (q_ != 4) return a * b % q_;
    if (a == 0 || b == 0) return 0;
    // F_4 = F_2[x]/(x^2+x+1), elements 0,1,2=x,3=x+1
    static const int t[3][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};
    return t[a - 1][b - 1];
  }
  int inv(int a) const {
    for (int c = 1; c < q_; ++c)
      if (mul(a, c) == 1) return c;
    throw std::domain_error("inverting zero");
  }

 private:
  int q_;
};

struct SmallGroupModel {
  std::string type;  // "A1" or "A2"
  int q = 2;
  int n = 2;  // matrix size
  GF gf{2};
  std::vector<std::vector<int>> elements;  // flattened n x n matrices
  std::map<std::vector<int>, int> index;
  std::vector<int> borel;                       // element indices
  int weyl_size = 2;                            // |W|: 2 or 6
  std::vector<std::vector<int>> weyl_words;     // reduced words, index = w
  std::vector<int> cell_of;                     // element -> weyl index
  struct UniClass {
    std::string name;
    std::vector<int> members;
    int centralizer = 0;
  };
  std::vector<UniClass> uni_classes;
  // principal-series unipotent character values at each element
  std::vector<std::string> char_names;
  std::vector<std::vector<Rat>> char_values;  // [char][element]
  std::vector<std::vector<Rat>> hecke;        // [char][weyl index], values at q

  int mul(int a, int b) const {
    const auto& x = elements[a];
    const auto& y = elements[b];
    std::vector<int> r(n * n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int s = 0;
        for (int k = 0; k < n; ++k) s = gf.add(s, gf.mul(x[i * n + k], y[k * n + j]));
        r[i * n + j] = s;
      }
    return index.at(r);
  }
  int inverse(int a) const {
    for (int b = 0; b < static_cast<int>(elements.size()); ++b)
      if (mul(a, b) == identity_) return b;
    throw std::logic_error("no inverse");
  }
  int identity() const { return identity_; }
  int identity_ = -1;
};

namespace ree_detail {

inline int det(const GF& gf, const std::vector<int>& m, int n) {
  if (n == 2) {
    return gf.add(gf.mul(m[0], m[3]), gf.neg(gf.mul(m[1], m[2])));
  }
  int d = 0;
  // Laplace along the first row, n = 3
  const int idx[3][2][2] = {{{4, 5}, {7, 8}}, {{3, 5}, {6, 8}}, {{3, 4}, {6, 7}}};
  for (int j = 0; j < 3; ++j) {
    int minor = gf.add(gf.mul(m[idx[j][0][0]], m[idx[j][1][1]]),
                       gf.neg(gf.mul(m[idx[j][0][1]], m[idx[j][1][0]])));
    int term = gf.mul(m[j], minor);
    d = gf.add(d, j % 2 ? gf.neg(term) : term);
  }
  return d;
}

inline int corner_rank(const GF& gf, const std::vector<int>& m, int n, int i0, int j1) {
  std::vector<std::vector<int>> rows;
  for (int i = i0; i < n; ++i) {
    std::vector<int> r;
    for (int j = 0; j <= j1; ++j) r.push_back(m[i * n + j]);
    rows.push_back(r);
  }
  int rank = 0;
  size_t lead = 0;
  size_t cols = rows.empty() ? 0 : rows[0].size();
  for (size_t c = 0; c < cols && lead < rows.size(); ++c) {
    size_t piv = lead;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[lead]);
    int inv = gf.inv(rows[lead][c]);
    for (size_t rr = 0; rr < rows.size(); ++rr) {
      if (rr == lead) continue;
      int f = gf.mul(rows[rr][c], inv);
      for (size_t cc = 0; cc < cols; ++cc)
        rows[rr][cc] = gf.add(rows[rr][cc], gf.neg(gf.mul(f, rows[lead][cc])));
    }
    ++rank;
    ++lead;
  }
  return rank;
}

inline std::vector<int> bruhat_perm(const GF& gf, const std::vector<int>& m, int n) {
  auto r = [&](int i0, int j1) { return (i0 >= n || j1 < 0) ? 0 : corner_rank(gf, m, n, i0, j1); };
  std::vector<int> sigma(n, -1);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      if (r(i, j) - r(i + 1, j) - r(i, j - 1) + r(i + 1, j - 1) == 1) {
        sigma[j] = i;
        break;
      }
  return sigma;
}

}  // namespace ree_detail

inline SmallGroupModel build_model(const std::string& type, int q) {
  SmallGroupModel m;
  m.type = type;
  m.q = q;
  m.n = type == "A1" ? 2 : 3;
  m.gf = GF(q);
  if (type == "A2" && q != 2) throw std::invalid_argument("A2 is supported for q = 2 only");
  if (type != "A1" && type != "A2") throw std::invalid_argument("type must be A1 or A2");
  // enumerate SL_n(F_q)
  int cells = m.n * m.n;
  std::vector<int> cur(cells, 0);
  long long total = 1;
  for (int i = 0; i < cells; ++i) total *= q;
  if (total > 2000000) throw std::invalid_argument("size bound exceeded");
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    for (int i = 0; i < cells; ++i) {
      cur[i] = static_cast<int>(c % q);
      c /= q;
    }
    if (ree_detail::det(m.gf, cur, m.n) == 1) {
      m.index[cur] = static_cast<int>(m.elements.size());
      m.elements.push_back(cur);
    }
  }
  // identity and the Borel of upper triangular matrices
  {
    std::vector<int> id(cells, 0);
    for (int i = 0; i < m.n; ++i) id[i * m.n + i] = 1;
    m.identity_ = m.index.at(id);
  }
  for (int g = 0; g < static_cast<int>(m.elements.size()); ++g) {
    bool upper = true;
    for (int i = 0; i < m.n; ++i)
      for (int j = 0; j < i; ++j)
        if (m.elements[g][i * m.n + j] != 0) upper = false;
    if (upper) m.borel.push_back(g);
  }
  // Weyl words and cells via rank jumps
  if (m.n == 2) {
    m.weyl_size = 2;
    m.weyl_words = {{}, {1}};
  } else {
    m.weyl_size = 6;
    m.weyl_words = {{}, {1}, {2}, {1, 2}, {2, 1}, {1, 2, 1}};
  }
  auto perm_of_word = [&](const std::vector<int>& word) {
    std::vector<int> sig(m.n);
    std::iota(sig.begin(), sig.end(), 0);
    for (int l : word) std::swap(sig[l - 1], sig[l]);
    return sig;
  };
  m.cell_of.assign(m.elements.size(), -1);
  for (int g = 0; g < static_cast<int>(m.elements.size()); ++g) {
    std::vector<int> sigma = ree_detail::bruhat_perm(m.gf, m.elements[g], m.n);
    for (int w = 0; w < m.weyl_size; ++w)
      if (perm_of_word(m.weyl_words[w]) == sigma) m.cell_of[g] = w;
    if (m.cell_of[g] < 0) throw std::logic_error("cell not identified");
  }
  // unipotent classes by direct orbit computation
  std::vector<bool> unip(m.elements.size(), false);
  for (int g = 0; g < static_cast<int>(m.elements.size()); ++g) {
    // (g - 1)^n = 0 over the matrix algebra
    std::vector<int> a(cells);
    for (int i = 0; i < cells; ++i)
      a[i] = m.gf.add(m.elements[g][i], (i % (m.n + 1) == 0) ? m.gf.neg(1) : 0);
    std::vector<int> pw = a;
    for (int rep = 1; rep < m.n; ++rep) {
      std::vector<int> nx(cells, 0);
      for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) {
          int s = 0;
          for (int k = 0; k < m.n; ++k)
            s = m.gf.add(s, m.gf.mul(pw[i * m.n + k], a[k * m.n + j]));
          nx[i * m.n + j] = s;
        }
      pw = nx;
    }
    unip[g] = std::all_of(pw.begin(), pw.end(), [](int v) { return v == 0; });
  }
  std::vector<bool> seen(m.elements.size(), false);
  for (int g = 0; g < static_cast<int>(m.elements.size()); ++g) {
    if (!unip[g] || seen[g]) continue;
    SmallGroupModel::UniClass cls;
    for (int h = 0; h < static_cast<int>(m.elements.size()); ++h) {
      int c = m.mul(m.mul(h, g), m.inverse(h));
      if (!seen[c]) {
        seen[c] = true;
        cls.members.push_back(c);
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    cls.centralizer = static_cast<int>(m.elements.size() / cls.members.size());
    cls.name = g == m.identity_ ? "1" : "u" + std::to_string(m.uni_classes.size());
    m.uni_classes.push_back(std::move(cls));
  }
  // permutation character of G/H: pi(g) = #{h : h^-1 g h in H} / |H|
  auto perm_char = [&](const std::vector<int>& sub) {
    std::vector<Rat> vals(m.elements.size());
    std::vector<bool> inh(m.elements.size(), false);
    for (int s : sub) inh[s] = true;
    std::vector<int> invs(m.elements.size());
    for (int h = 0; h < static_cast<int>(m.elements.size()); ++h) invs[h] = m.inverse(h);
    for (int g = 0; g < static_cast<int>(m.elements.size()); ++g) {
      long long cnt = 0;
      for (int h = 0; h < static_cast<int>(m.elements.size()); ++h)
        if (inh[m.mul(m.mul(invs[h], g), h)]) ++cnt;
      vals[g] = Rat(cnt, static_cast<long long>(sub.size()));
    }
    return vals;
  };
  auto inner = [&](const std::vector<Rat>& a, const std::vector<Rat>& b) {
    Rat s(0);
    for (size_t g = 0; g < a.size(); ++g) s = s + a[g] * b[g];
    return s / Rat(static_cast<long long>(m.elements.size()));
  };
  std::vector<Rat> ones(m.elements.size(), Rat(1));
  std::vector<Rat> piB = perm_char(m.borel);
  if (m.n == 2) {
    std::vector<Rat> st(m.elements.size());
    for (size_t g = 0; g < st.size(); ++g) st[g] = piB[g] - Rat(1);
    if (inner(st, st) != Rat(1)) throw std::logic_error("Steinberg is not irreducible");
    m.char_names = {"triv", "St"};
    m.char_values = {ones, st};
    // Hecke characters: index q^l, sign (-1)^l
    m.hecke = {{Rat(1), Rat(q)}, {Rat(1), Rat(-1)}};
  } else {
    // maximal parabolics: stabilisers of a line and of a plane
    std::vector<int> p1, p2;
    for (int g = 0; g < static_cast<int>(m.elements.size()); ++g) {
      const auto& e = m.elements[g];
      if (e[3] == 0 && e[6] == 0) p1.push_back(g);          // fixes <e1>
      if (e[6] == 0 && e[7] == 0) p2.push_back(g);          // fixes <e1,e2>
    }
    std::vector<Rat> pi1 = perm_char(p1), pi2 = perm_char(p2);
    std::vector<Rat> refl(m.elements.size()), st(m.elements.size());
    for (size_t g = 0; g < refl.size(); ++g) refl[g] = pi1[g] - Rat(1);
    for (size_t g = 0; g < refl.size(); ++g)
      st[g] = piB[g] - Rat(1) - Rat(2) * refl[g];
    if (inner(refl, refl) != Rat(1) || inner(st, st) != Rat(1) ||
        inner(refl, st) != Rat(0))
      throw std::logic_error("principal series decomposition failed");
    for (size_t g = 0; g < refl.size(); ++g)
      if (pi2[g] - Rat(1) != refl[g]) throw std::logic_error("parabolic characters differ");
    m.char_names = {"triv", "refl", "St"};
    m.char_values = {ones, refl, st};
    // Hecke characters by length: 0,1,1,2,2,3 for the word list above
    auto len = [&](int w) { return static_cast<int>(m.weyl_words[w].size()); };
    std::vector<Rat> triv, rf, sgn;
    for (int w = 0; w < 6; ++w) {
      int l = len(w);
      Rat ql(1);
      for (int i = 0; i < l; ++i) ql = ql * Rat(q);
      triv.push_back(ql);
      sgn.push_back(Rat(l % 2 ? -1 : 1));
      rf.push_back(l == 0 ? Rat(2) : (l == 1 ? Rat(q - 1) : (l == 2 ? Rat(-q) : Rat(0))));
    }
    m.hecke = {triv, rf, sgn};
  }
  // validate the Hecke values against the q-degrees: for w != 1 the sum
  // sum_phi phi_q(T_w) [phi](1) must vanish
  for (int w = 1; w < m.weyl_size; ++w) {
    Rat s(0);
    for (size_t f = 0; f < m.char_names.size(); ++f)
      s = s + m.hecke[f][w] * m.char_values[f][m.identity_];
    if (!s.is_zero()) throw std::logic_error("Hecke values fail the degree identity");
  }
  return m;
}

struct ReeCheck {
  Rat lhs, rhs;
  bool equal = false;
};

// |B w B  meet  O_u| * |C(u)| / |B| versus the Hecke-weighted character sum.
inline ReeCheck check_ree(const SmallGroupModel& m, int uclass, int w) {
  const auto& cls = m.uni_classes[uclass];
  long long count = 0;
  for (int g : cls.members)
    if (m.cell_of[g] == w) ++count;
  ReeCheck r;
  r.lhs = Rat(count) * Rat(cls.centralizer) / Rat(static_cast<long long>(m.borel.size()));
  r.rhs = Rat(0);
  int rep = cls.members.empty() ? m.identity() : cls.members[0];
  for (size_t f = 0; f < m.char_names.size(); ++f)
    r.rhs = r.rhs + m.hecke[f][w] * m.char_values[f][rep];
  r.equal = r.lhs == r.rhs;
  return r;
}

// m(u_0, w) and the centraliser order determine one another.
inline Rat centralizer_from_m(const Rat& m_value, const Rat& bruhat_count,
                              const Rat& borel_order) {
  if (bruhat_count.is_zero()) throw std::domain_error("empty cell intersection");
  return m_value * borel_order / bruhat_count;
}

}  // namespace chv
