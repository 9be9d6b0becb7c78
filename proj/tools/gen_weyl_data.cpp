// Regenerates data/weyl_classes_e8.dat from the defining words.  The
// D8(a2) entry is built inside the D8 subsystem of E8 from its signed
// cycle type (a negative 5-cycle paired with a negative 3-cycle).
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "chv/weyl.hpp"

using namespace chv;

namespace {

struct Entry {
  std::string name;
  std::vector<int> word;
};

// Rational 8-vectors with denominator 2 are enough for the D8 coordinates.
using Vec2 = std::array<int, kMaxRank>;  // doubled coordinates

WeylElement d8a2_element(const RootSystem& rs, const WeylGroup& wg) {
  // D8 subsystem simple roots: alpha_2..alpha_8 plus the lowest root, in
  // chain order beta_1..beta_6 = -theta, a8, a7, a6, a5, a4 and the fork
  // beta_7 = a3, beta_8 = a2.
  int theta = -1;
  for (int r = 0; r < rs.npos(); ++r)
    if (rs.height(r) == 29) theta = r;
  std::vector<Vec2> beta(9);  // 1-based, doubled coords
  auto put = [&](int i, int root, int scale) {
    for (int k = 0; k < 8; ++k) beta[i][k] = scale * 2 * rs.coeffs(root)[k];
  };
  put(1, theta, -1);
  put(2, rs.simple_root(7), 1);
  put(3, rs.simple_root(6), 1);
  put(4, rs.simple_root(5), 1);
  put(5, rs.simple_root(4), 1);
  put(6, rs.simple_root(3), 1);
  put(7, rs.simple_root(2), 1);
  put(8, rs.simple_root(1), 1);
  // e_7 = (beta7+beta8)/2, e_8 = (beta8-beta7)/2, e_i = beta_i + e_{i+1}
  std::vector<Vec2> e(9);
  for (int k = 0; k < 8; ++k) {
    e[7][k] = (beta[7][k] + beta[8][k]) / 2;
    e[8][k] = (beta[8][k] - beta[7][k]) / 2;
  }
  for (int i = 6; i >= 1; --i)
    for (int k = 0; k < 8; ++k) e[i][k] = beta[i][k] + e[i + 1][k];
  auto root_of = [&](const Vec2& v) {
    Coeffs c{};
    for (int k = 0; k < 8; ++k) {
      if (v[k] % 2 != 0) throw std::logic_error("not integral");
      c[k] = static_cast<int8_t>(v[k] / 2);
    }
    int idx = rs.index_of(c);
    if (idx < 0) throw std::logic_error("not a root");
    return idx;
  };
  // Compose the eight reflections as one root permutation, then express it
  // as a word by peeling right descents.
  auto sum2 = [&](const Vec2& a, const Vec2& b, int bsign) {
    Vec2 r;
    for (int k = 0; k < 8; ++k) r[k] = a[k] + bsign * b[k];
    return r;
  };
  std::vector<int> refl_roots = {
      root_of(sum2(e[1], e[2], -1)), root_of(sum2(e[2], e[3], -1)),
      root_of(sum2(e[3], e[4], -1)), root_of(sum2(e[4], e[5], -1)),
      root_of(sum2(e[6], e[7], -1)), root_of(sum2(e[7], e[8], -1)),
      root_of(sum2(e[5], e[8], -1)), root_of(sum2(e[5], e[8], 1))};
  // image of every root under the product (apply rightmost first)
  std::vector<int> perm(rs.nroots());
  for (int r = 0; r < rs.nroots(); ++r) {
    int cur = r;
    for (auto it = refl_roots.rbegin(); it != refl_roots.rend(); ++it)
      cur = rs.reflect(cur, *it);
    perm[r] = cur;
  }
  // recover as product of simple reflections: peel right descents
  std::vector<int> word;
  std::vector<int> cur = perm;
  auto apply_gen_right = [&](std::vector<int>& q, int j) {
    // (w s_j)(r) = w(s_j(r))
    std::vector<int> out(q.size());
    for (int r = 0; r < rs.nroots(); ++r) out[r] = q[rs.simple_reflection(r, j)];
    q = out;
  };
  int guard = 1000;
  for (;;) {
    bool id = true;
    for (int r = 0; r < rs.nroots(); ++r)
      if (cur[r] != r) id = false;
    if (id) break;
    int j = 0;
    while (j < 8 && cur[rs.simple_root(j)] < rs.npos()) ++j;
    if (j == 8 || guard-- < 0) throw std::logic_error("descent walk failed");
    word.push_back(j + 1);
    apply_gen_right(cur, j);
  }
  std::reverse(word.begin(), word.end());
  WeylElement w = wg.word_to_element(word);
  // verify the signed cycle type on the e_i: expect a negative 5-cycle and
  // a negative 3-cycle
  auto act_vec = [&](const Vec2& v) {
    // w acts linearly; compute via images of simple roots
    Vec2 out{};
    auto m = w.reflection_matrix();
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) out[i] += static_cast<int>(m[i][j]) * v[j];
    return out;
  };
  std::map<int, std::pair<int, int>> image;  // i -> (j, sign)
  for (int i = 1; i <= 8; ++i) {
    Vec2 iv = act_vec(e[i]);
    bool found = false;
    for (int j = 1; j <= 8 && !found; ++j)
      for (int s : {1, -1}) {
        bool eq = true;
        for (int k = 0; k < 8; ++k)
          if (iv[k] != s * e[j][k]) eq = false;
        if (eq) {
          image[i] = {j, s};
          found = true;
          break;
        }
      }
    if (!found) throw std::logic_error("image is not signed-monomial");
  }
  std::vector<int> cyclens;
  std::vector<bool> seen(9, false);
  for (int i = 1; i <= 8; ++i) {
    if (seen[i]) continue;
    int len = 0, cur2 = i, sign = 1;
    do {
      seen[cur2] = true;
      sign *= image[cur2].second;
      cur2 = image[cur2].first;
      ++len;
    } while (cur2 != i);
    if (sign != -1) throw std::logic_error("positive cycle found");
    cyclens.push_back(len);
  }
  std::sort(cyclens.begin(), cyclens.end());
  if (cyclens != std::vector<int>{3, 5}) throw std::logic_error("wrong cycle type");
  return w;
}

}  // namespace

int main() {
  RootSystem rs = RootSystem::of("E8");
  WeylGroup wg(rs);

  std::vector<Entry> entries = {
      {"e", {}},
      {"A1", {1}},
      {"E8", {1, 3, 4, 2, 5, 6, 7, 8}},
      {"E8(a1)", {1, 4, 2, 3, 4, 3, 5, 6, 7, 8}},
      {"E8(a2)", {1, 3, 4, 2, 5, 4, 6, 5, 7, 6, 7, 8}},
      {"E7+A1", {1, 3, 1, 2, 4, 2, 3, 5, 4, 6, 5, 6, 7, 8}},
      {"E7", {6, 7, 5, 2, 4, 3, 1}},
      {"D8", {1, 3, 1, 2, 4, 2, 3, 5, 4, 6, 5, 7, 6, 8, 7, 8}},
      {"E7(a1)", {6, 7, 5, 4, 2, 3, 4, 3, 1}},
      {"D7", {5, 4, 6, 8, 3, 2, 7}},
      {"E7(a2)", {7, 6, 5, 4, 5, 6, 5, 2, 4, 3, 1}},
      {"E6+A1", {6, 1, 8, 5, 3, 4, 2}},
      {"D7(a1)", {5, 3, 4, 3, 8, 6, 2, 4, 7}},
      {"D6+A1", {6, 7, 4, 3, 4, 2, 5, 4, 3, 2, 4, 5, 1}},
      {"E6", {1, 6, 3, 5, 4, 2}},
      {"D6", {4, 3, 2, 5, 7, 6}},
      {"D5+A2", {7, 5, 4, 1, 8, 2, 3}},
      {"D6(a1)", {3, 4, 3, 2, 4, 7, 5, 6}},
      {"D5+A1", {5, 2, 7, 4, 1, 3}},
      {"A5+2A1", {6, 5, 3, 1, 8, 4, 2, 4, 3, 4, 2, 5, 4}},
      {"D5", {4, 1, 2, 5, 3}},
      {"(A5+A1)''", {1, 3, 5, 6, 4, 5, 2, 4, 3, 4, 2, 4}},
      {"D4+A2", {5, 2, 8, 7, 3, 4}},
      {"D4+A1", {5, 2, 3, 7, 4}},
      {"D4", {3, 2, 5, 4}},
  };
  {
    WeylElement w = d8a2_element(rs, wg);
    WeylElement m = wg.cyclic_shift_minimize(w, 2000000);
    Entry e;
    e.name = "D8(a2)";
    e.word = wg.reduced_word(m);
    entries.push_back(e);
  }

  std::printf("# Weyl conjugacy class catalog for E8.\n");
  std::printf("# class <name> <min_length> <representative word, comma separated or ->"
              " <char poly coefficients>\n");
  for (const Entry& en : entries) {
    WeylElement w = wg.word_to_element(en.word);
    if (w.length() != static_cast<int>(en.word.size())) {
      std::fprintf(stderr, "%s: word not reduced\n", en.name.c_str());
      return 1;
    }
    WeylElement m = wg.cyclic_shift_minimize(w, 2000000);
    if (m.length() != w.length()) {
      std::fprintf(stderr, "%s: word not of minimal length (%d -> %d)\n", en.name.c_str(),
                   w.length(), m.length());
      return 1;
    }
    std::string rep;
    for (size_t i = 0; i < en.word.size(); ++i) {
      if (i) rep += ',';
      rep += std::to_string(en.word[i]);
    }
    if (rep.empty()) rep = "-";
    std::printf("class %s %d %s", en.name.c_str(), w.length(), rep.c_str());
    for (int64_t c : w.char_poly()) std::printf(" %lld", static_cast<long long>(c));
    std::printf("\n");
  }
  return 0;
}
