// Symbolic Bruhat normal form U . T . n(w) . U_w via BN-pair rewriting,
// independent of the matrix backend.  Weyl representatives are the
// standard n_j = u(1) u_-(-1) u(1); Tits' theorem makes the n-product of
// any reduced word canonical.
#pragma once

#include <functional>
#include <vector>

#include "chv/adjoint.hpp"
#include "chv/tokens.hpp"
#include "chv/weyl.hpp"

namespace chv {

struct UFactor {
  int root;   // positive root index
  int coeff;  // in 1..p-1
  bool operator==(const UFactor& o) const { return root == o.root && coeff == o.coeff; }
};

using UList = std::vector<UFactor>;

struct BruhatNormalForm {
  UList u;
  std::vector<int> torus;  // multiplicative coords over the simple coroots
  WeylElement w;
  UList uw;  // supported on {a > 0 : w(a) < 0}

  bool operator==(const BruhatNormalForm& o) const {
    return u == o.u && torus == o.torus && w == o.w && uw == o.uw;
  }
  bool operator!=(const BruhatNormalForm& o) const { return !(*this == o); }
};

class BruhatEngine {
 public:
  BruhatEngine(const RootSystem& rs, const WeylGroup& wg, const EtaTables& eta, int p)
      : rs_(&rs), wg_(&wg), eta_(&eta), p_(p) {
    if (p != 2 && p != 3 && p != 5) throw std::invalid_argument("unsupported characteristic");
  }

  int p() const { return p_; }

  BruhatNormalForm normal_form(const GroupWord& word) const {
    if (word.p != p_) throw std::invalid_argument("word characteristic mismatch");
    Form f;
    f.torus.assign(rs_->rank(), 1);
    f.w = wg_->identity();
    for (const GeneratorToken& t : word.tokens) process(f, t);
    BruhatNormalForm nf;
    nf.u = f.u;
    nf.torus = f.torus;
    nf.w = f.w;
    nf.uw = f.uw;
    return nf;
  }

  WeylElement bruhat_cell(const GroupWord& word) const { return normal_form(word).w; }

  // Tokens whose ordered product reproduces the element of a normal form.
  GroupWord to_word(const BruhatNormalForm& nf) const {
    GroupWord w;
    w.p = p_;
    for (const UFactor& f : nf.u) w.tokens.push_back(GeneratorToken::root_elt(f.root, f.coeff));
    for (int j = 0; j < rs_->rank(); ++j)
      if (nf.torus[j] != 1)
        w.tokens.push_back(GeneratorToken::torus(rs_->simple_root(j), nf.torus[j]));
    for (int l : wg_->reduced_word(nf.w)) w.tokens.push_back(GeneratorToken::omega(l - 1));
    for (const UFactor& f : nf.uw) w.tokens.push_back(GeneratorToken::root_elt(f.root, f.coeff));
    return w;
  }

  // Lemma: for a reduced word and nonzero coefficients, conjugating
  // u_{a_{i_1}}(t_1)...u_{a_{i_e}}(t_e) by a representative of w_0 lands in
  // the Bruhat cell of s_{i_1}...s_{i_e}.  Returns the check's outcome;
  // false would signal an engine bug, not bad input.
  bool lemma_bwb_check(const std::vector<int>& word, const std::vector<int>& coeffs) const {
    if (word.size() != coeffs.size()) throw std::invalid_argument("length mismatch");
    if (!wg_->is_reduced(word)) throw std::invalid_argument("word is not reduced");
    GroupWord conj;
    conj.p = p_;
    std::vector<int> w0 = wg_->reduced_word(wg_->longest_element());
    for (int l : w0) conj.tokens.push_back(GeneratorToken::omega(l - 1));
    for (size_t i = 0; i < word.size(); ++i) {
      if (fp_norm(coeffs[i], p_) == 0) throw std::invalid_argument("zero coefficient");
      conj.tokens.push_back(
          GeneratorToken::root_elt(rs_->simple_root(word[i] - 1), coeffs[i]));
    }
    for (auto it = w0.rbegin(); it != w0.rend(); ++it) {
      conj.tokens.push_back(GeneratorToken::omega(*it - 1));
      conj.tokens.push_back(GeneratorToken::torus(rs_->simple_root(*it - 1), -1));
    }
    return bruhat_cell(conj) == wg_->word_to_element(word);
  }

 private:
  struct Form {
    UList u;
    std::vector<int> torus;
    WeylElement w;
    UList uw;
  };

  int fpm(long long v) const { return fp_norm(v, p_); }

  int fppow(int base, int e) const {
    if (p_ == 2) return 1;
    int m = p_ - 1;
    e %= m;
    if (e < 0) e += m;
    int r = 1;
    base = fpm(base);
    for (int i = 0; i < e; ++i) r = r * base % p_;
    return r;
  }

  // value of the character "root" on the torus element
  int torus_eval(const std::vector<int>& t, int root) const {
    if (p_ == 2) return 1;
    int v = 1;
    for (int j = 0; j < rs_->rank(); ++j) {
      int e = rs_->pairing_simple(root, j);
      if (e) v = v * fppow(t[j], e) % p_;
    }
    return v;
  }

  // t *= x^vee(c), x any root
  void torus_mul_coroot(std::vector<int>& t, int x, int c) const {
    if (p_ == 2) return;
    for (int j = 0; j < rs_->rank(); ++j) {
      int m = rs_->coeffs(x)[j];
      if (m) t[j] = t[j] * fppow(c, m) % p_;
    }
  }

  // Collection: rewrite the factor list into the order given by `before`
  // using u_a u_b = u_b u_a u_{a+b}(N_{a,b} c_a c_b) and coefficient merge.
  void normalize(UList& l, const std::function<bool(int, int)>& before) const {
    size_t i = 0, guard = 0;
    while (i + 1 < l.size()) {
      if (++guard > 50000000) throw std::logic_error("collection did not terminate");
      UFactor a = l[i], b = l[i + 1];
      if (a.root == b.root) {
        int c = fpm(a.coeff + b.coeff);
        if (c == 0)
          l.erase(l.begin() + i, l.begin() + i + 2);
        else {
          l[i].coeff = c;
          l.erase(l.begin() + i + 1);
        }
        if (i > 0) --i;
        continue;
      }
      if (before(b.root, a.root)) {
        int s = rs_->sum(a.root, b.root);
        l[i] = b;
        l[i + 1] = a;
        if (s >= 0) {
          int c = fpm(static_cast<long long>(rs_->n_const(a.root, b.root)) * a.coeff * b.coeff);
          if (c != 0) l.insert(l.begin() + i + 2, UFactor{s, c});
        }
        if (i > 0) --i;
        continue;
      }
      ++i;
    }
  }

  void collect_canonical(UList& l) const {
    normalize(l, [](int r1, int r2) { return r1 < r2; });
  }

  // Merge a product of positive factors arriving to the right of the form:
  // factors whose root stays positive under w are pushed through n(w) and
  // the torus into the u-part; the rest lands in uw.
  void absorb_positive_list(Form& f, UList incoming) const {
    UList merged = f.uw;
    merged.insert(merged.end(), incoming.begin(), incoming.end());
    auto stays_positive = [&](int r) { return f.w.act(r) < rs_->npos(); };
    normalize(merged, [&](int r1, int r2) {
      bool b1 = !stays_positive(r1), b2 = !stays_positive(r2);
      if (b1 != b2) return b1 < b2;
      return r1 < r2;
    });
    size_t cut = 0;
    while (cut < merged.size() && stays_positive(merged[cut].root)) ++cut;
    if (cut > 0) {
      std::vector<int> word = wg_->reduced_word(f.w);
      UList pushed;
      for (size_t i = 0; i < cut; ++i) {
        int g = merged[i].root;
        int img = f.w.act(g);
        int sign = eta_->sign_along(word, g, *rs_);
        int c = fpm(static_cast<long long>(merged[i].coeff) * sign * torus_eval(f.torus, img));
        pushed.push_back(UFactor{img, c});
      }
      f.u.insert(f.u.end(), pushed.begin(), pushed.end());
      collect_canonical(f.u);
    }
    f.uw.assign(merged.begin() + cut, merged.end());
  }

  void process(Form& f, const GeneratorToken& tok) const {
    switch (tok.kind) {
      case GeneratorToken::RootElt: {
        int c = fpm(tok.coeff);
        if (c == 0) throw std::invalid_argument("zero root-element coefficient");
        if (rs_->is_positive(tok.root)) {
          absorb_positive_list(f, {UFactor{tok.root, c}});
        } else {
          process_negative(f, rs_->negate(tok.root), c);
        }
        break;
      }
      case GeneratorToken::Torus: {
        // element . h: twist uw by the inverse character, push h into t.
        int e;
        for (UFactor& fac : f.uw) {
          e = rs_->pairing(fac.root, tok.root);
          fac.coeff = fpm(static_cast<long long>(fac.coeff) * fppow(fp_inv(tok.coeff, p_), e));
        }
        int img = f.w.act(tok.root);
        torus_mul_coroot(f.torus, img, tok.coeff);
        break;
      }
      case GeneratorToken::Omega: {
        process_nj(f, tok.simple);
        if (tok.omega_inv) {
          // n^-1 = n . a^vee(-1): we just applied n, append the torus twist
          GeneratorToken t = GeneratorToken::torus(rs_->simple_root(tok.simple), fpm(-1));
          if (p_ != 2) process(f, t);
        }
        break;
      }
    }
  }

  void process_nj(Form& f, int j) const {
    int aj = rs_->simple_root(j);
    bool longer = f.w.act(aj) < rs_->npos();
    // reorder uw so that any alpha_j factor comes first
    normalize(f.uw, [&](int r1, int r2) {
      bool b1 = r1 != aj, b2 = r2 != aj;
      if (b1 != b2) return b1 < b2;
      return r1 < r2;
    });
    int c = 0;
    UList v = f.uw;
    if (!v.empty() && v[0].root == aj) {
      c = v[0].coeff;
      v.erase(v.begin());
    }
    if (longer && c != 0) throw std::logic_error("alpha_j in U_w while w s_j is longer");
    // conjugate the remainder: n^-1 u_a(x) n = u_{s_j a}(eta_j(s_j a) x)
    UList vt;
    for (const UFactor& fac : v) {
      int img = rs_->simple_reflection(fac.root, j);
      vt.push_back(UFactor{img, fpm(static_cast<long long>(fac.coeff) * eta_->sign(j, img))});
    }
    collect_canonical(vt);
    if (longer) {
      f.w = wg_->mul_gen_right(f.w, j);
      f.uw = vt;
      return;
    }
    if (c == 0) {
      f.w = wg_->mul_gen_right(f.w, j);
      // n(w) n_j = n(w s_j) . alpha_j^vee(-1); push the twist into t
      torus_mul_coroot(f.torus, f.w.act(aj), -1);
      f.uw = vt;
      return;
    }
    // u_{a_j}(c) n_j = u_{-a_j}(1/c) . a_j^vee(-c) . u_{a_j}(-1/c)
    int cinv = fp_inv(c, p_);
    int gamma0 = f.w.act(rs_->negate(aj));  // positive since w(a_j) < 0
    std::vector<int> word = wg_->reduced_word(f.w);
    int sign = eta_->sign_along(word, rs_->negate(aj), *rs_);
    f.u.push_back(UFactor{gamma0, fpm(static_cast<long long>(cinv) * sign *
                                      torus_eval(f.torus, gamma0))});
    collect_canonical(f.u);
    torus_mul_coroot(f.torus, f.w.act(aj), fpm(-c));
    f.uw.clear();
    UList incoming{UFactor{aj, fpm(-cinv)}};
    incoming.insert(incoming.end(), vt.begin(), vt.end());
    absorb_positive_list(f, incoming);
  }

  void process_negative(Form& f, int gamma, int x) const {
    // u_{-gamma}(x); gamma is a positive root index here.
    for (int j = 0; j < rs_->rank(); ++j) {
      if (gamma == rs_->simple_root(j)) {
        int xinv = fp_inv(x, p_);
        process(f, GeneratorToken::root_elt(gamma, xinv));
        if (p_ != 2) process(f, GeneratorToken::torus(gamma, fpm(-xinv)));
        process_nj(f, j);
        process(f, GeneratorToken::root_elt(gamma, xinv));
        return;
      }
    }
    // strip a simple root: u_{-gamma}(x) = n_j u_{-(gamma - a_j)}(eta x) n_j^-1
    for (int j = 0; j < rs_->rank(); ++j) {
      if (rs_->pairing_simple(gamma, j) > 0) {
        int delta = rs_->simple_reflection(gamma, j);
        int sign = eta_->sign(j, rs_->negate(delta));
        process_nj(f, j);
        process_negative(f, delta, fpm(static_cast<long long>(sign) * x));
        process_nj(f, j);
        if (p_ != 2) process(f, GeneratorToken::torus(rs_->simple_root(j), fpm(-1)));
        return;
      }
    }
    throw std::logic_error("positive root without a descent");
  }

  const RootSystem* rs_;
  const WeylGroup* wg_;
  const EtaTables* eta_;
  int p_;
};

}  // namespace chv
