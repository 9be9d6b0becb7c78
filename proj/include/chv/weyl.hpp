// Weyl group elements as signed permutations of the root list: exact
// length readout, reduced words, conjugacy machinery (cyclic shift
// minimisation and orbit exploration a la Geck-Pfeiffer).
#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <unordered_set>
#include <vector>

#include "chv/rootsystem.hpp"

namespace chv {

class WeylElement {
 public:
  WeylElement() = default;
  explicit WeylElement(const RootSystem* rs) : rs_(rs), perm_(rs->nroots()) {
    for (int i = 0; i < rs->nroots(); ++i) perm_[i] = static_cast<uint8_t>(i);
  }

  const RootSystem& roots() const { return *rs_; }
  int act(int rootidx) const { return perm_[rootidx]; }

  bool is_identity() const {
    for (int i = 0; i < static_cast<int>(perm_.size()); ++i)
      if (perm_[i] != i) return false;
    return true;
  }

  int length() const {
    int l = 0;
    for (int i = 0; i < rs_->npos(); ++i)
      if (perm_[i] >= rs_->npos()) ++l;
    return l;
  }

  // this * other, acting on the left: (w1*w2)(v) = w1(w2(v)).
  WeylElement operator*(const WeylElement& o) const {
    WeylElement r(rs_);
    for (size_t i = 0; i < perm_.size(); ++i) r.perm_[i] = perm_[o.perm_[i]];
    return r;
  }

  WeylElement inverse() const {
    WeylElement r(rs_);
    for (size_t i = 0; i < perm_.size(); ++i) r.perm_[perm_[i]] = static_cast<uint8_t>(i);
    return r;
  }

  bool operator==(const WeylElement& o) const { return perm_ == o.perm_; }
  bool operator!=(const WeylElement& o) const { return perm_ != o.perm_; }

  uint64_t hash() const {
    uint64_t h = 1469598103934665603ull;
    for (uint8_t v : perm_) {
      h ^= static_cast<uint64_t>(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }

  // Matrix on the reflection representation in the simple-root basis:
  // column j holds the coefficients of w(alpha_j).
  std::vector<std::vector<int64_t>> reflection_matrix() const {
    int n = rs_->rank();
    std::vector<std::vector<int64_t>> m(n, std::vector<int64_t>(n, 0));
    for (int j = 0; j < n; ++j) {
      const Coeffs& c = rs_->coeffs(perm_[rs_->simple_root(j)]);
      for (int i = 0; i < n; ++i) m[i][j] = c[i];
    }
    return m;
  }

  // Characteristic polynomial coefficients, degree rank, leading first:
  // t^n + c_{n-1} t^{n-1} + ... + c_0 -> returns {1, c_{n-1}, ..., c_0}.
  std::vector<int64_t> char_poly() const {
    auto m = reflection_matrix();
    int n = rs_->rank();
    // Faddeev-LeVerrier; every division is exact.
    std::vector<std::vector<int64_t>> mk(n, std::vector<int64_t>(n, 0));
    std::vector<int64_t> out(n + 1, 0);
    out[0] = 1;
    for (int k = 1; k <= n; ++k) {
      // mk = m * (mk + c_{k-1} I)
      std::vector<std::vector<int64_t>> t = mk;
      for (int i = 0; i < n; ++i) t[i][i] += out[k - 1];
      std::vector<std::vector<int64_t>> nm(n, std::vector<int64_t>(n, 0));
      for (int i = 0; i < n; ++i)
        for (int l = 0; l < n; ++l) {
          int64_t s = 0;
          for (int j = 0; j < n; ++j) s += m[i][j] * t[j][l];
          nm[i][l] = s;
        }
      mk = nm;
      int64_t tr = 0;
      for (int i = 0; i < n; ++i) tr += mk[i][i];
      out[k] = -tr / k;
    }
    return out;
  }

 private:
  friend class WeylGroup;
  const RootSystem* rs_ = nullptr;
  std::vector<uint8_t> perm_;  // nroots <= 240 for every supported type
};

// Simple-reflection tables and word arithmetic for one root system.
class WeylGroup {
 public:
  explicit WeylGroup(const RootSystem& rs) : rs_(&rs) {
    gens_.reserve(rs.rank());
    for (int j = 0; j < rs.rank(); ++j) {
      WeylElement s(rs_);
      for (int i = 0; i < rs.nroots(); ++i)
        s.perm_[i] = static_cast<uint8_t>(rs.simple_reflection(i, j));
      gens_.push_back(s);
    }
  }

  const RootSystem& roots() const { return *rs_; }
  WeylElement identity() const { return WeylElement(rs_); }
  const WeylElement& gen(int j) const { return gens_[j]; }

  // Product of simple reflections, left to right; indices are 1-based.
  WeylElement word_to_element(const std::vector<int>& word) const {
    WeylElement w(rs_);
    for (int ix : word) {
      if (ix < 1 || ix > rs_->rank()) throw std::out_of_range("simple index out of range");
      w = w * gens_[ix - 1];
    }
    return w;
  }

  WeylElement mul_gen_right(const WeylElement& w, int j) const { return w * gens_[j]; }
  WeylElement mul_gen_left(const WeylElement& w, int j) const { return gens_[j] * w; }

  bool is_reduced(const std::vector<int>& word) const {
    return word_to_element(word).length() == static_cast<int>(word.size());
  }

  // ell(w s_j) < ell(w)  <=>  w(alpha_j) < 0.
  bool right_descent(const WeylElement& w, int j) const {
    return w.act(rs_->simple_root(j)) >= rs_->npos();
  }

  // Canonical reduced word: repeatedly strip the smallest right descent.
  std::vector<int> reduced_word(const WeylElement& w) const {
    std::vector<int> rev;
    WeylElement cur = w;
    int guard = rs_->npos() + 1;
    while (!cur.is_identity()) {
      int j = 0;
      while (j < rs_->rank() && !right_descent(cur, j)) ++j;
      if (j == rs_->rank() || guard-- < 0) throw std::logic_error("descent walk failed");
      rev.push_back(j + 1);
      cur = cur * gens_[j];
    }
    std::reverse(rev.begin(), rev.end());
    return rev;
  }

  WeylElement longest_element() const {
    WeylElement w = identity();
    // Greedy ascent: multiply by any generator that increases length.
    bool moved = true;
    while (moved) {
      moved = false;
      for (int j = 0; j < rs_->rank(); ++j) {
        if (!right_descent(w, j)) {
          w = w * gens_[j];
          moved = true;
        }
      }
    }
    return w;
  }

  // Repeated conjugation by simple reflections, never increasing length;
  // plateau breadth-first search (bounded) finds strict descents that a
  // purely greedy walk misses.  Returns an element of minimal length in
  // the conjugacy class (given enough budget) -- Geck-Pfeiffer/He-Nie.
  // When `conjugator` is given it receives a word g with the invariant
  // g . w . g^{-1} = result, so the conjugacy can be verified directly.
  WeylElement cyclic_shift_minimize(const WeylElement& w, size_t budget = 200000,
                                    std::vector<int>* conjugator = nullptr) const {
    WeylElement cur = w;
    if (conjugator) conjugator->clear();
    for (;;) {
      int len = cur.length();
      if (len == 0) return cur;
      std::vector<int> step;
      std::optional<WeylElement> better =
          plateau_descend(cur, len, budget, conjugator ? &step : nullptr);
      if (!better) return cur;
      cur = *better;
      if (conjugator)
        conjugator->insert(conjugator->begin(), step.begin(), step.end());
    }
  }

  // Explores conjugates of w by chains of simple conjugations that never
  // climb more than `band` above w's length, and invokes visit on every
  // conjugate found at exactly that length.  Plateau moves alone do not
  // connect the minimal-length elements of non-elliptic classes (the
  // simple reflections are pairwise plateau-isolated; the 3-cycles of an
  // A_3 subgroup need chains through length + 2), hence the band.  Every
  // edge is an actual conjugation, so anything visited is certified
  // conjugate to w.  Stops early when visit returns true; returns false
  // if the node budget ran out first.
  bool explore_plateau(const WeylElement& w, size_t budget,
                       const std::function<bool(const WeylElement&)>& visit,
                       int band = 4) const {
    int len = w.length();
    std::unordered_set<uint64_t> seen;
    std::deque<WeylElement> queue;
    seen.insert(w.hash());
    queue.push_back(w);
    if (visit(w)) return true;
    while (!queue.empty()) {
      if (seen.size() > budget) return false;
      WeylElement cur = queue.front();
      queue.pop_front();
      for (int j = 0; j < rs_->rank(); ++j) {
        WeylElement c = gens_[j] * cur * gens_[j];
        int cl = c.length();
        if (cl < len || cl > len + band) continue;
        if (!seen.insert(c.hash()).second) continue;
        if (cl == len && visit(c)) return true;
        queue.push_back(c);
      }
    }
    return true;
  }

 private:
  // One strict descent, if any exists in the equal-length conjugation
  // plateau.  `trail`, when requested, returns the letters g = j_k ... j_1
  // applied left of w (and inverted on the right).
  std::optional<WeylElement> plateau_descend(const WeylElement& w, int len, size_t budget,
                                             std::vector<int>* trail = nullptr) const {
    struct Node {
      WeylElement el;
      int parent;
      int letter;
    };
    std::unordered_set<uint64_t> seen;
    std::vector<Node> nodes{{w, -1, 0}};
    seen.insert(w.hash());
    size_t head = 0;
    auto unwind = [&](int parent, int letter) {
      if (!trail) return;
      trail->clear();
      trail->push_back(letter);
      for (int i = parent; i >= 0 && nodes[i].parent >= 0; i = nodes[i].parent)
        trail->push_back(nodes[i].letter);
    };
    while (head < nodes.size() && seen.size() <= budget) {
      WeylElement cur = nodes[head].el;
      for (int j = 0; j < rs_->rank(); ++j) {
        WeylElement c = gens_[j] * cur * gens_[j];
        int cl = c.length();
        if (cl < len) {
          unwind(static_cast<int>(head), j + 1);
          return c;
        }
        if (cl == len && seen.insert(c.hash()).second)
          nodes.push_back({c, static_cast<int>(head), j + 1});
      }
      ++head;
    }
    return std::nullopt;
  }

  const RootSystem* rs_;
  std::vector<WeylElement> gens_;
};

}  // namespace chv
