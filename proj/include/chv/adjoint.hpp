// Faithful evaluation backend: the adjoint module over F_p in the Kostant
// integral form (divided powers taken before reduction).  Rows of the
// matrix are bit-packed for p = 2.
#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "chv/rootsystem.hpp"
#include "chv/tokens.hpp"

namespace chv {

class AdjMatrix {
 public:
  AdjMatrix() = default;
  AdjMatrix(int dim, int p) : dim_(dim), p_(p) {
    if (p == 2) {
      words_ = (dim + 63) / 64;
      bits_.assign(static_cast<size_t>(dim) * words_, 0);
      for (int i = 0; i < dim; ++i) set2(i, i);
    } else {
      vals_.assign(static_cast<size_t>(dim) * dim, 0);
      for (int i = 0; i < dim; ++i) vals_[static_cast<size_t>(i) * dim + i] = 1;
    }
  }

  int dim() const { return dim_; }
  int p() const { return p_; }

  int get(int r, int c) const {
    if (p_ == 2) return (bits_[static_cast<size_t>(r) * words_ + c / 64] >> (c % 64)) & 1;
    return vals_[static_cast<size_t>(r) * dim_ + c];
  }
  void set(int r, int c, int v) {
    v = fp_norm(v, p_);
    if (p_ == 2) {
      uint64_t& w = bits_[static_cast<size_t>(r) * words_ + c / 64];
      uint64_t m = 1ull << (c % 64);
      w = v ? (w | m) : (w & ~m);
    } else {
      vals_[static_cast<size_t>(r) * dim_ + c] = static_cast<uint8_t>(v);
    }
  }

  // row[r] += v * src where src is a snapshot row.
  void add_row(int r, int v, const uint64_t* src2, const uint8_t* srcp) {
    if (p_ == 2) {
      if ((v & 1) == 0) return;
      uint64_t* dst = &bits_[static_cast<size_t>(r) * words_];
      for (int k = 0; k < words_; ++k) dst[k] ^= src2[k];
    } else {
      int vv = fp_norm(v, p_);
      if (vv == 0) return;
      uint8_t* dst = &vals_[static_cast<size_t>(r) * dim_];
      for (int c = 0; c < dim_; ++c) dst[c] = static_cast<uint8_t>((dst[c] + vv * srcp[c]) % p_);
    }
  }

  void scale_row(int r, int v) {
    v = fp_norm(v, p_);
    if (p_ == 2) return;  // only the trivial torus exists over F_2
    uint8_t* dst = &vals_[static_cast<size_t>(r) * dim_];
    for (int c = 0; c < dim_; ++c) dst[c] = static_cast<uint8_t>(dst[c] * v % p_);
  }

  std::vector<uint64_t> copy_row2(int r) const {
    return std::vector<uint64_t>(bits_.begin() + static_cast<size_t>(r) * words_,
                                 bits_.begin() + static_cast<size_t>(r + 1) * words_);
  }
  std::vector<uint8_t> copy_rowp(int r) const {
    return std::vector<uint8_t>(vals_.begin() + static_cast<size_t>(r) * dim_,
                                vals_.begin() + static_cast<size_t>(r + 1) * dim_);
  }

  bool operator==(const AdjMatrix& o) const {
    return dim_ == o.dim_ && p_ == o.p_ && bits_ == o.bits_ && vals_ == o.vals_;
  }
  bool operator!=(const AdjMatrix& o) const { return !(*this == o); }

  AdjMatrix operator*(const AdjMatrix& o) const {
    AdjMatrix r(dim_, p_);
    if (p_ == 2) {
      std::fill(r.bits_.begin(), r.bits_.end(), 0);
      for (int i = 0; i < dim_; ++i) {
        uint64_t* dst = &r.bits_[static_cast<size_t>(i) * words_];
        for (int j = 0; j < dim_; ++j)
          if (get(i, j)) {
            const uint64_t* src = &o.bits_[static_cast<size_t>(j) * words_];
            for (int k = 0; k < words_; ++k) dst[k] ^= src[k];
          }
      }
    } else {
      std::fill(r.vals_.begin(), r.vals_.end(), 0);
      for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
          int a = get(i, j);
          if (!a) continue;
          const uint8_t* src = &o.vals_[static_cast<size_t>(j) * dim_];
          uint8_t* dst = &r.vals_[static_cast<size_t>(i) * dim_];
          for (int c = 0; c < dim_; ++c) dst[c] = static_cast<uint8_t>((dst[c] + a * src[c]) % p_);
        }
    }
    return r;
  }

  uint64_t digest() const {
    uint64_t h = 1469598103934665603ull;
    auto mix = [&](uint64_t v) {
      h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    for (uint64_t v : bits_) mix(v);
    for (uint8_t v : vals_) mix(v);
    return h;
  }

 private:
  void set2(int r, int c) { bits_[static_cast<size_t>(r) * words_ + c / 64] |= 1ull << (c % 64); }

  int dim_ = 0, p_ = 0, words_ = 0;
  std::vector<uint64_t> bits_;
  std::vector<uint8_t> vals_;
};

// One sparse left-multiplication step: target row += val * source row.
struct SparseEntry {
  int row, col;
  long long val;
};

class AdjointRep {
 public:
  AdjointRep(const RootSystem& rs, int p) : rs_(&rs), p_(p) {
    if (p != 2 && p != 3 && p != 5) throw std::invalid_argument("unsupported characteristic");
    dim_ = rs.nroots() + rs.rank();
  }

  int dim() const { return dim_; }
  int p() const { return p_; }
  const RootSystem& roots() const { return *rs_; }

  AdjMatrix identity() const { return AdjMatrix(dim_, p_); }

  // Entry list of u_x(t) - I over the integers (exact divided powers).
  std::vector<SparseEntry> root_entries(int x, long long t) const {
    std::vector<SparseEntry> e;
    const RootSystem& rs = *rs_;
    int nx = rs.negate(x);
    for (int y = 0; y < rs.nroots(); ++y) {
      if (y == nx) continue;
      int s = rs.sum(x, y);
      if (s >= 0) e.push_back({s, y, t * rs.n_const(x, y)});
    }
    for (int k = 0; k < rs.rank(); ++k) {
      int m = rs.coeffs(x)[k];
      if (m) e.push_back({rs.nroots() + k, nx, t * m});
    }
    e.push_back({x, nx, -t * t});
    for (int k = 0; k < rs.rank(); ++k) {
      int pr = rs.pairing_simple(x, k);
      if (pr) e.push_back({x, rs.nroots() + k, -t * pr});
    }
    return e;
  }

  void apply_root_left(int x, long long t, AdjMatrix& m) const {
    auto entries = root_entries(x, t);
    apply_entries(entries, m);
  }

  void apply_torus_left(int coroot, int c, AdjMatrix& m) const {
    if (p_ == 2) return;
    for (int y = 0; y < rs_->nroots(); ++y) {
      int e = rs_->pairing(y, coroot);
      int v = 1;
      int cc = fp_norm(c, p_);
      int ee = e % (p_ - 1);
      if (ee < 0) ee += p_ - 1;
      for (int i = 0; i < ee; ++i) v = v * cc % p_;
      if (v != 1) m.scale_row(y, v);
    }
  }

  void apply_token_left(const GeneratorToken& t, AdjMatrix& m) const {
    switch (t.kind) {
      case GeneratorToken::RootElt: {
        int c = fp_norm(t.coeff, p_);
        if (c == 0) throw std::invalid_argument("root element with zero coefficient");
        apply_root_left(t.root, c, m);
        break;
      }
      case GeneratorToken::Omega: {
        int a = rs_->simple_root(t.simple);
        int na = rs_->negate(a);
        // n_j = u(1) u_-(-1) u(1); inverse reverses the signs.
        int s = t.omega_inv ? -1 : 1;
        apply_root_left(a, fp_norm(s, p_), m);
        apply_root_left(na, fp_norm(-s, p_), m);
        apply_root_left(a, fp_norm(s, p_), m);
        break;
      }
      case GeneratorToken::Torus:
        apply_torus_left(t.root, t.coeff, m);
        break;
    }
  }

  // Ordered product of the word's token matrices.
  AdjMatrix evaluate(const GroupWord& w) const {
    if (w.p != p_) throw std::invalid_argument("word characteristic mismatch");
    AdjMatrix m = identity();
    for (auto it = w.tokens.rbegin(); it != w.tokens.rend(); ++it) apply_token_left(*it, m);
    return m;
  }

  AdjMatrix token_matrix(const GeneratorToken& t) const {
    AdjMatrix m = identity();
    apply_token_left(t, m);
    return m;
  }

 private:
  void apply_entries(const std::vector<SparseEntry>& entries, AdjMatrix& m) const {
    // Snapshot source rows so the update is exactly (I + S) * M.
    std::vector<int> cols;
    for (const auto& e : entries) cols.push_back(e.col);
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    std::vector<std::vector<uint64_t>> snap2;
    std::vector<std::vector<uint8_t>> snapp;
    std::vector<int> pos(dim_, -1);
    for (size_t i = 0; i < cols.size(); ++i) {
      pos[cols[i]] = static_cast<int>(i);
      if (p_ == 2)
        snap2.push_back(m.copy_row2(cols[i]));
      else
        snapp.push_back(m.copy_rowp(cols[i]));
    }
    for (const auto& e : entries) {
      int i = pos[e.col];
      m.add_row(e.row, static_cast<int>(fp_norm(e.val, p_)),
                p_ == 2 ? snap2[i].data() : nullptr, p_ == 2 ? nullptr : snapp[i].data());
    }
  }

  const RootSystem* rs_;
  int p_, dim_;
};

// Integral adjoint action on a single basis vector; used to pin the +-1
// twists eta_j with which n_j conjugates root elements:
//   Ad(n_j) E_y = eta_j(y) E_{s_j(y)}.
class EtaTables {
 public:
  explicit EtaTables(const RootSystem& rs) : rs_(&rs) {
    int n = rs.nroots();
    eta_.assign(rs.rank(), std::vector<int8_t>(n, 0));
    for (int j = 0; j < rs.rank(); ++j) {
      int a = rs.simple_root(j);
      for (int y = 0; y < n; ++y) {
        std::vector<long long> v(n + rs.rank(), 0);
        v[y] = 1;
        int_apply(a, 1, v);
        int_apply(rs.negate(a), -1, v);
        int_apply(a, 1, v);
        int img = rs.simple_reflection(y, j);
        long long sign = v[img];
        if (sign != 1 && sign != -1) throw std::logic_error("eta: image not monomial");
        for (int k = 0; k < n + rs.rank(); ++k)
          if (k != img && v[k] != 0) throw std::logic_error("eta: extra component");
        eta_[j][y] = static_cast<int8_t>(sign);
      }
    }
  }

  // Sign in n_j u_y(c) n_j^{-1} = u_{s_j y}(eta(j,y) c).
  int sign(int j, int y) const { return eta_[j][y]; }

  // Sign accumulated along a reduced word (1-based letters), so that
  // n(w) u_g(c) n(w)^{-1} = u_{w(g)}(sign * c).
  int sign_along(const std::vector<int>& word, int g, const RootSystem& rs) const {
    int sign = 1, cur = g;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      sign *= eta_[*it - 1][cur];
      cur = rs.simple_reflection(cur, *it - 1);
    }
    return sign;
  }

 private:
  void int_apply(int x, long long t, std::vector<long long>& v) const {
    const RootSystem& rs = *rs_;
    int n = rs.nroots();
    std::vector<long long> add(v.size(), 0);
    int nx = rs.negate(x);
    for (int y = 0; y < n; ++y) {
      if (v[y] == 0 || y == nx) continue;
      int s = rs.sum(x, y);
      if (s >= 0) add[s] += t * rs.n_const(x, y) * v[y];
    }
    if (v[nx] != 0) {
      for (int k = 0; k < rs.rank(); ++k) add[n + k] += t * rs.coeffs(x)[k] * v[nx];
      add[x] += -t * t * v[nx];
    }
    for (int k = 0; k < rs.rank(); ++k)
      if (v[n + k] != 0) add[x] += -t * rs.pairing_simple(x, k) * v[n + k];
    for (size_t i = 0; i < v.size(); ++i) v[i] += add[i];
  }

  const RootSystem* rs_;
  std::vector<std::vector<int8_t>> eta_;
};

}  // namespace chv
