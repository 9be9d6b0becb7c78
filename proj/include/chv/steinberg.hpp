// Rewriting with the p = 2 Steinberg relations: involution cancellation,
// the commutator rule, and omega-conjugation pushing.  Every rewrite is a
// group identity; the public entry point certifies its output against the
// adjoint backend before returning it.
#pragma once

#include <optional>

#include "chv/adjoint.hpp"
#include "chv/tokens.hpp"

namespace chv {

namespace detail {

inline bool is_root_token(const GeneratorToken& t) { return t.kind == GeneratorToken::RootElt; }

inline bool same_omega(const GeneratorToken& a, const GeneratorToken& b) {
  // over F_2 the inverse marker is immaterial
  return a.kind == GeneratorToken::Omega && b.kind == GeneratorToken::Omega &&
         a.simple == b.simple;
}

}  // namespace detail

// One pass of local rules; returns true if anything changed.
inline bool simplify_p2_pass(const RootSystem& rs, std::vector<GeneratorToken>& t) {
  for (size_t i = 0; i + 1 < t.size(); ++i) {
    // u_a u_a = 1 and w_j w_j = 1
    if (detail::is_root_token(t[i]) && detail::is_root_token(t[i + 1]) &&
        t[i].root == t[i + 1].root) {
      t.erase(t.begin() + i, t.begin() + i + 2);
      return true;
    }
    if (detail::same_omega(t[i], t[i + 1])) {
      t.erase(t.begin() + i, t.begin() + i + 2);
      return true;
    }
  }
  // u_a u_b u_a u_b = u_{a+b} (or 1 when a+b is not a root)
  for (size_t i = 0; i + 3 < t.size(); ++i) {
    if (!detail::is_root_token(t[i]) || !detail::is_root_token(t[i + 1])) continue;
    if (t[i + 2].kind != GeneratorToken::RootElt || t[i + 3].kind != GeneratorToken::RootElt)
      continue;
    int a = t[i].root, b = t[i + 1].root;
    if (a == b || t[i + 2].root != a || t[i + 3].root != b) continue;
    int s = rs.sum(a, b);
    t.erase(t.begin() + i, t.begin() + i + 4);
    if (s >= 0) t.insert(t.begin() + i, GeneratorToken::root_elt(s, 1));
    return true;
  }
  // w_j u_a w_j = u_{s_j a} whenever s_j(a) stays positive
  for (size_t i = 0; i + 2 < t.size(); ++i) {
    if (t[i].kind != GeneratorToken::Omega || !detail::is_root_token(t[i + 1]) ||
        !detail::same_omega(t[i], t[i + 2]))
      continue;
    int img = rs.simple_reflection(t[i + 1].root, t[i].simple);
    t.erase(t.begin() + i, t.begin() + i + 3);
    t.insert(t.begin() + i, GeneratorToken::root_elt(img, 1));
    return true;
  }
  // commuting swap to expose a cancellation two steps ahead
  for (size_t i = 0; i + 2 < t.size(); ++i) {
    if (!detail::is_root_token(t[i]) || !detail::is_root_token(t[i + 1]) ||
        !detail::is_root_token(t[i + 2]))
      continue;
    if (t[i].root == t[i + 2].root && rs.sum(t[i].root, t[i + 1].root) < 0 &&
        t[i].root != t[i + 1].root) {
      std::swap(t[i], t[i + 1]);  // now t[i+1] == t[i+2] cancels next pass
      return true;
    }
  }
  return false;
}

// Certified rewriting: the result evaluates to the same adjoint matrix; on
// any internal surprise the input is returned unchanged.
inline GroupWord simplify_p2(const RootSystem& rs, const AdjointRep& ad, const GroupWord& w) {
  if (w.p != 2) throw std::invalid_argument("simplify_p2 needs p = 2");
  GroupWord out = w;
  size_t guard = 0;
  while (simplify_p2_pass(rs, out.tokens))
    if (++guard > 100000) break;
  if (ad.evaluate(out) != ad.evaluate(w)) return w;
  return out;
}

// Expand u_gamma(1) over F_2 into u_a u_b u_a u_b for a chosen
// decomposition gamma = a + b; `flip` picks the other factor order.
inline std::optional<std::pair<int, int>> split_root(const RootSystem& rs, int gamma) {
  for (int a = 0; a < rs.npos(); ++a) {
    if (rs.height(a) >= rs.height(gamma)) break;
    Coeffs d;
    for (int k = 0; k < rs.rank(); ++k)
      d[k] = static_cast<int8_t>(rs.coeffs(gamma)[k] - rs.coeffs(a)[k]);
    int b = rs.index_of(d);
    if (b >= 0 && b < rs.npos()) return std::make_pair(a, b);
  }
  return std::nullopt;
}

}  // namespace chv
