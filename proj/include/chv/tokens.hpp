// Words in Chevalley generators: tokens, Mizuno's index notation, and the
// plain-text word grammar (u(..), u-(..), w(j), h(j,c), optional ^k).
#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "chv/rootsystem.hpp"

namespace chv {

inline int fp_norm(long long v, int p) {
  long long r = v % p;
  if (r < 0) r += p;
  return static_cast<int>(r);
}

inline int fp_inv(int v, int p) {
  v = fp_norm(v, p);
  if (v == 0) throw std::domain_error("inverting 0 mod p");
  for (int c = 1; c < p; ++c)
    if (c * v % p == 1) return c;
  throw std::logic_error("no inverse");
}

struct GeneratorToken {
  enum Kind { RootElt, Omega, Torus };
  Kind kind = RootElt;
  int root = -1;    // RootElt: any root index; Torus: coroot's root index
  int coeff = 1;    // RootElt: additive coefficient; Torus: multiplicative
  int simple = -1;  // Omega: 0-based simple index
  bool omega_inv = false;

  static GeneratorToken root_elt(int root, int coeff = 1) {
    GeneratorToken t;
    t.kind = RootElt;
    t.root = root;
    t.coeff = coeff;
    return t;
  }
  static GeneratorToken omega(int simple0, bool inv = false) {
    GeneratorToken t;
    t.kind = Omega;
    t.simple = simple0;
    t.omega_inv = inv;
    return t;
  }
  static GeneratorToken torus(int root, int coeff) {
    GeneratorToken t;
    t.kind = Torus;
    t.root = root;
    t.coeff = coeff;
    return t;
  }
};

struct GroupWord {
  std::vector<GeneratorToken> tokens;
  int p = 2;

  GroupWord inverse(const RootSystem& rs) const {
    GroupWord w;
    w.p = p;
    for (auto it = tokens.rbegin(); it != tokens.rend(); ++it) {
      GeneratorToken t = *it;
      switch (t.kind) {
        case GeneratorToken::RootElt:
          t.coeff = -t.coeff;
          break;
        case GeneratorToken::Omega:
          t.omega_inv = !t.omega_inv;
          break;
        case GeneratorToken::Torus:
          t.coeff = fp_inv(t.coeff, p);
          break;
      }
      w.tokens.push_back(t);
    }
    (void)rs;
    return w;
  }

  GroupWord concat(const GroupWord& o) const {
    GroupWord w = *this;
    w.tokens.insert(w.tokens.end(), o.tokens.begin(), o.tokens.end());
    return w;
  }
};

// --- Mizuno index notation ------------------------------------------------
// "234^25" decodes the root a2+a3+2a4+a5; an omitted index has coefficient
// zero, "k^c" gives alpha_k coefficient c.

inline int parse_mizuno_root(const RootSystem& rs, const std::string& text) {
  Coeffs c{};
  size_t i = 0;
  if (text.empty()) throw std::invalid_argument("empty root index");
  while (i < text.size()) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("bad character in root index: " + text);
    int k = text[i] - '0';
    if (k < 1 || k > rs.rank()) throw std::invalid_argument("index out of range in: " + text);
    ++i;
    int e = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("malformed exponent in: " + text);
      e = text[i] - '0';
      ++i;
    }
    if (c[k - 1] != 0) throw std::invalid_argument("repeated index in: " + text);
    c[k - 1] = static_cast<int8_t>(e);
  }
  int idx = rs.index_of(c);
  if (idx < 0) throw std::invalid_argument("decoded vector is not a root: " + text);
  return idx;
}

inline GeneratorToken parse_mizuno(const RootSystem& rs, const std::string& text) {
  return GeneratorToken::root_elt(parse_mizuno_root(rs, text), 1);
}

inline std::string mizuno_name(const RootSystem& rs, int root) {
  const Coeffs& c = rs.coeffs(root < rs.npos() ? root : rs.negate(root));
  std::string s;
  for (int k = 0; k < rs.rank(); ++k) {
    if (c[k] == 0) continue;
    s += static_cast<char>('1' + k);
    if (c[k] > 1) {
      s += '^';
      s += static_cast<char>('0' + c[k]);
    }
  }
  return s;
}

// --- Token-grammar parse / print -------------------------------------------

inline std::string print_token(const RootSystem& rs, const GeneratorToken& t) {
  switch (t.kind) {
    case GeneratorToken::RootElt: {
      std::string s = rs.is_positive(t.root) ? "u(" : "u-(";
      s += mizuno_name(rs, t.root);
      s += ')';
      if (t.coeff != 1) s += "^" + std::to_string(t.coeff);
      return s;
    }
    case GeneratorToken::Omega: {
      int j = -1;
      for (int k = 0; k < rs.rank(); ++k)
        if (rs.simple_root(k) == t.simple || k == t.simple) j = k;
      std::string s = "w(" + std::to_string(t.simple + 1) + ")";
      (void)j;
      if (t.omega_inv) s += "^-1";
      return s;
    }
    case GeneratorToken::Torus: {
      // Simple coroots print as h(j,c); other coroots in mizuno form.
      const Coeffs& c = rs.coeffs(t.root);
      int hits = 0, j = -1;
      for (int k = 0; k < rs.rank(); ++k)
        if (c[k] != 0) {
          ++hits;
          j = k;
        }
      std::string s;
      if (hits == 1 && c[j] == 1)
        s = "h(" + std::to_string(j + 1) + "," + std::to_string(t.coeff) + ")";
      else
        s = "h[" + mizuno_name(rs, t.root) + "](" + std::to_string(t.coeff) + ")";
      return s;
    }
  }
  return {};
}

inline std::string print_word(const RootSystem& rs, const GroupWord& w) {
  std::string s;
  for (size_t i = 0; i < w.tokens.size(); ++i) {
    if (i) s += ' ';
    s += print_token(rs, w.tokens[i]);
  }
  return s;
}

inline GroupWord parse_word(const RootSystem& rs, const std::string& text, int p) {
  GroupWord w;
  w.p = p;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    auto suffix_pow = [&](size_t close) -> int {
      if (close + 1 >= tok.size()) return 1;
      if (tok[close + 1] != '^') throw std::invalid_argument("bad token suffix: " + tok);
      return std::stoi(tok.substr(close + 2));
    };
    if (tok.rfind("u-(", 0) == 0) {
      size_t close = tok.find(')');
      if (close == std::string::npos) throw std::invalid_argument("missing ) in: " + tok);
      int r = parse_mizuno_root(rs, tok.substr(3, close - 3));
      int pw = suffix_pow(close);
      w.tokens.push_back(GeneratorToken::root_elt(rs.negate(r), pw));
    } else if (tok.rfind("u(", 0) == 0) {
      size_t close = tok.find(')');
      if (close == std::string::npos) throw std::invalid_argument("missing ) in: " + tok);
      int r = parse_mizuno_root(rs, tok.substr(2, close - 2));
      int pw = suffix_pow(close);
      w.tokens.push_back(GeneratorToken::root_elt(r, pw));
    } else if (tok.rfind("w(", 0) == 0) {
      size_t close = tok.find(')');
      if (close == std::string::npos) throw std::invalid_argument("missing ) in: " + tok);
      int j = std::stoi(tok.substr(2, close - 2));
      if (j < 1 || j > rs.rank()) throw std::invalid_argument("omega index out of range: " + tok);
      int pw = suffix_pow(close);
      if (pw != 1 && pw != -1) throw std::invalid_argument("w(j) powers other than -1: " + tok);
      w.tokens.push_back(GeneratorToken::omega(j - 1, pw == -1));
    } else if (tok.rfind("h(", 0) == 0) {
      size_t comma = tok.find(','), close = tok.find(')');
      if (comma == std::string::npos || close == std::string::npos)
        throw std::invalid_argument("malformed torus token: " + tok);
      int j = std::stoi(tok.substr(2, comma - 2));
      int c = std::stoi(tok.substr(comma + 1, close - comma - 1));
      if (j < 1 || j > rs.rank()) throw std::invalid_argument("torus index out of range: " + tok);
      int cf = fp_norm(c, p);
      if (cf == 0) throw std::invalid_argument("torus coefficient is 0 mod p: " + tok);
      int pw = suffix_pow(close);
      if (pw == -1) cf = fp_inv(cf, p);
      else if (pw != 1) throw std::invalid_argument("h(j,c) powers other than -1: " + tok);
      w.tokens.push_back(GeneratorToken::torus(rs.simple_root(j - 1), cf));
    } else {
      throw std::invalid_argument("unknown token: " + tok);
    }
  }
  return w;
}

}  // namespace chv
