// Root systems of simply-laced Cartan type, with heights, reflections and
// a consistent set of Chevalley structure constants.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace chv {

constexpr int kMaxRank = 8;

using Coeffs = std::array<int8_t, kMaxRank>;

struct CartanDatum {
  std::string label;
  int rank = 0;
  std::array<std::array<int8_t, kMaxRank>, kMaxRank> a{};  // Cartan matrix

  int entry(int i, int j) const { return a[i][j]; }
};

// Builds the Cartan matrix for a type label ("A1".."A8", "D4".."D8",
// "E6", "E7", "E8").  Node numbering follows Bourbaki; for E-types the
// branch node is 4 and node 2 hangs off it.
inline CartanDatum cartan_datum(const std::string& label) {
  if (label.size() < 2) throw std::invalid_argument("bad Cartan type: " + label);
  char fam = label[0];
  int n = std::stoi(label.substr(1));
  CartanDatum cd;
  cd.label = label;
  cd.rank = n;
  if (n < 1 || n > kMaxRank) throw std::invalid_argument("rank out of range: " + label);
  auto link = [&](int i, int j) {
    cd.a[i - 1][j - 1] = -1;
    cd.a[j - 1][i - 1] = -1;
  };
  for (int i = 0; i < n; ++i) cd.a[i][i] = 2;
  if (fam == 'A') {
    for (int i = 1; i < n; ++i) link(i, i + 1);
  } else if (fam == 'D') {
    if (n < 4) throw std::invalid_argument("D_n needs n >= 4");
    for (int i = 1; i + 1 <= n - 2; ++i) link(i, i + 1);
    link(n - 2, n - 1);
    link(n - 2, n);
  } else if (fam == 'E') {
    if (n < 6 || n > 8) throw std::invalid_argument("E_n needs n in {6,7,8}");
    link(1, 3);
    link(3, 4);
    link(2, 4);
    link(4, 5);
    link(5, 6);
    if (n >= 7) link(6, 7);
    if (n >= 8) link(7, 8);
  } else {
    throw std::invalid_argument("unsupported family (simply-laced only): " + label);
  }
  return cd;
}

inline void validate_simply_laced(const CartanDatum& cd) {
  for (int i = 0; i < cd.rank; ++i) {
    if (cd.a[i][i] != 2) throw std::invalid_argument("Cartan diagonal must be 2");
    for (int j = 0; j < cd.rank; ++j) {
      if (i == j) continue;
      if (cd.a[i][j] != 0 && cd.a[i][j] != -1)
        throw std::invalid_argument("not simply-laced: off-diagonal entry");
      if (cd.a[i][j] != cd.a[j][i])
        throw std::invalid_argument("Cartan matrix not symmetric");
    }
  }
}

// The full root system.  Roots are indexed 0..2*npos-1: indices < npos are
// the positive roots sorted by (height, lex coefficient vector); index
// i+npos is the negative of index i.
class RootSystem {
 public:
  explicit RootSystem(const CartanDatum& cd) : cd_(cd) {
    validate_simply_laced(cd);
    generate();
    compute_constants();
    check_constants();
  }

  static RootSystem of(const std::string& label) { return RootSystem(cartan_datum(label)); }

  const CartanDatum& cartan() const { return cd_; }
  int rank() const { return cd_.rank; }
  int npos() const { return npos_; }
  int nroots() const { return 2 * npos_; }

  const Coeffs& coeffs(int r) const { return roots_[r]; }
  int height(int r) const { return height_[r]; }
  bool is_positive(int r) const { return r < npos_; }
  int negate(int r) const { return r < npos_ ? r + npos_ : r - npos_; }
  int simple_root(int j) const { return simple_idx_[j]; }  // j is 0-based

  // Index of the root with the given coefficient vector, or -1.
  int index_of(const Coeffs& c) const {
    auto it = index_.find(c);
    return it == index_.end() ? -1 : it->second;
  }

  // <r, alpha_j^vee>, j 0-based.
  int pairing_simple(int r, int j) const {
    int s = 0;
    for (int k = 0; k < rank(); ++k) s += roots_[r][k] * cd_.a[k][j];
    return s;
  }

  // <x, y^vee> for roots; simply laced with every root of squared length 2,
  // so <x, y^vee> = (x, y) = x^T A y.
  int pairing(int x, int y) const {
    int s = 0;
    for (int k = 0; k < rank(); ++k)
      for (int l = 0; l < rank(); ++l) s += roots_[x][k] * cd_.a[k][l] * roots_[y][l];
    return s;
  }

  // s_j(r), j 0-based simple index.
  int simple_reflection(int r, int j) const {
    if (j < 0 || j >= rank()) throw std::out_of_range("simple index out of range");
    Coeffs c = roots_[r];
    int p = pairing_simple(r, j);
    c[j] = static_cast<int8_t>(c[j] - p);
    int idx = index_of(c);
    if (idx < 0) throw std::logic_error("reflection left the root system");
    return idx;
  }

  // Reflection through an arbitrary root b.
  int reflect(int r, int b) const {
    int p = pairing(r, b);
    Coeffs c = roots_[r];
    for (int k = 0; k < rank(); ++k) c[k] = static_cast<int8_t>(c[k] - p * roots_[b][k]);
    int idx = index_of(c);
    if (idx < 0) throw std::logic_error("reflection left the root system");
    return idx;
  }

  // Index of x+y if it is a root, else -1.
  int sum(int x, int y) const { return sum_[x][y]; }

  // Chevalley structure constant N_{x,y} (0 when x+y is not a root).
  int n_const(int x, int y) const { return nconst_[x][y]; }

  std::string dump() const {
    std::string out;
    for (int r = 0; r < nroots(); ++r) {
      for (int k = 0; k < rank(); ++k) {
        out += std::to_string(static_cast<int>(roots_[r][k]));
        out += k + 1 == rank() ? ' ' : ',';
      }
      out += "ht=" + std::to_string(height_[r]) + "\n";
    }
    return out;
  }

 private:
  void generate() {
    // Closure from the simple roots: r + alpha_j is a root iff <r,aj^vee> = -1.
    std::vector<Coeffs> pos;
    std::map<Coeffs, int> seen;
    for (int j = 0; j < rank(); ++j) {
      Coeffs c{};
      c[j] = 1;
      seen[c] = static_cast<int>(pos.size());
      pos.push_back(c);
    }
    for (size_t head = 0; head < pos.size(); ++head) {
      Coeffs r = pos[head];
      for (int j = 0; j < rank(); ++j) {
        int p = 0;
        for (int k = 0; k < rank(); ++k) p += r[k] * cd_.a[k][j];
        if (p == -1) {
          Coeffs c = r;
          c[j] = static_cast<int8_t>(c[j] + 1);
          if (!seen.count(c)) {
            seen[c] = static_cast<int>(pos.size());
            pos.push_back(c);
          }
        }
      }
    }
    auto ht = [&](const Coeffs& c) {
      int h = 0;
      for (int k = 0; k < rank(); ++k) h += c[k];
      return h;
    };
    // Height, then lex with the alpha_1 coefficient most significant, so
    // that the simple roots come out as alpha_1 < alpha_2 < ... .
    std::sort(pos.begin(), pos.end(), [&](const Coeffs& a, const Coeffs& b) {
      int ha = ht(a), hb = ht(b);
      if (ha != hb) return ha < hb;
      return a > b;
    });
    npos_ = static_cast<int>(pos.size());
    roots_ = pos;
    for (const Coeffs& c : pos) {
      Coeffs m{};
      for (int k = 0; k < rank(); ++k) m[k] = static_cast<int8_t>(-c[k]);
      roots_.push_back(m);
    }
    index_.clear();
    for (int i = 0; i < nroots(); ++i) index_[roots_[i]] = i;
    height_.resize(nroots());
    for (int i = 0; i < nroots(); ++i) height_[i] = ht(roots_[i]);
    simple_idx_.assign(rank(), -1);
    for (int j = 0; j < rank(); ++j) {
      Coeffs c{};
      c[j] = 1;
      simple_idx_[j] = index_.at(c);
    }
    sum_.assign(nroots(), std::vector<int16_t>(nroots(), -1));
    for (int x = 0; x < nroots(); ++x)
      for (int y = 0; y < nroots(); ++y) {
        Coeffs c;
        for (int k = 0; k < rank(); ++k) c[k] = static_cast<int8_t>(roots_[x][k] + roots_[y][k]);
        auto it = index_.find(c);
        if (it != index_.end()) sum_[x][y] = static_cast<int16_t>(it->second);
      }
  }

  // epsilon-cocycle sign: eps(x,y) = (-1)^{B(x,y)} with B(ai,aj) = 0 for
  // i<j, 1 on the diagonal, and a_ij mod 2 for i>j.  Then rescale so every
  // extraspecial pair carries N = +1.
  int eps(const Coeffs& x, const Coeffs& y) const {
    int b = 0;
    for (int i = 0; i < rank(); ++i)
      for (int j = 0; j < rank(); ++j) {
        int bij;
        if (i < j)
          bij = 0;
        else if (i == j)
          bij = 1;
        else
          bij = cd_.a[i][j] & 1;
        b += bij * x[i] * y[j];
      }
    return (b & 1) ? -1 : 1;
  }

  void compute_constants() {
    // Raw Frenkel-Kac constants, then the extraspecial rescale sigma.
    sigma_.assign(npos_, 1);
    for (int g = rank(); g < npos_; ++g) {
      int a = -1, b = -1;
      for (int cand = 0; cand < g; ++cand) {
        Coeffs d;
        for (int k = 0; k < rank(); ++k)
          d[k] = static_cast<int8_t>(roots_[g][k] - roots_[cand][k]);
        auto it = index_.find(d);
        if (it != index_.end() && it->second < npos_) {
          a = cand;
          b = it->second;
          break;
        }
      }
      if (a < 0) throw std::logic_error("no extraspecial pair found");
      sigma_[g] = sigma_[a] * sigma_[b] * eps(roots_[a], roots_[b]);
    }
    nconst_.assign(nroots(), std::vector<int8_t>(nroots(), 0));
    for (int x = 0; x < nroots(); ++x)
      for (int y = 0; y < nroots(); ++y) {
        int s = sum_[x][y];
        if (s < 0) continue;
        int neg = (is_positive(x) ? 0 : 1) + (is_positive(y) ? 0 : 1) + (is_positive(s) ? 0 : 1);
        int v = eps(roots_[x], roots_[y]) * ((neg & 1) ? -1 : 1);
        v *= sigma_[x < npos_ ? x : x - npos_] * sigma_[y < npos_ ? y : y - npos_] *
             sigma_[s < npos_ ? s : s - npos_];
        nconst_[x][y] = static_cast<int8_t>(v);
      }
  }

  void check_constants() {
    // Internal consistency; a failure here is a bug, not bad input.
    for (int x = 0; x < nroots(); ++x)
      for (int y = 0; y < nroots(); ++y) {
        int s = sum_[x][y];
        if (s < 0) continue;
        if (nconst_[x][y] != -nconst_[y][x]) throw std::logic_error("N antisymmetry failed");
        if (nconst_[x][y] * nconst_[negate(x)][negate(y)] != -1)
          throw std::logic_error("N negation rule failed");
        // Jacobi for x + y + z = 0 with z = -(x+y).
        int z = negate(s);
        if (nconst_[x][y] != nconst_[y][z] || nconst_[y][z] != nconst_[z][x])
          throw std::logic_error("N Jacobi triple failed");
      }
  }

  CartanDatum cd_;
  int npos_ = 0;
  std::vector<Coeffs> roots_;
  std::vector<int> height_;
  std::vector<int> simple_idx_;
  std::map<Coeffs, int> index_;
  std::vector<std::vector<int16_t>> sum_;
  std::vector<std::vector<int8_t>> nconst_;
  std::vector<int> sigma_;
};

}  // namespace chv
