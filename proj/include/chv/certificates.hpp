// Table-6-style conjugation certificates: a Mizuno representative, a
// conjugator (an optional prefix times a product of omegas), and a target
// word of simple root elements.  Verification raises four independent
// flags; for p != 2 the conjugation is additionally tried up to a torus
// twist by a product of alpha_j^vee(-1), reflecting that our structure
// constants need not match Mizuno's.
#pragma once

#include <fstream>
#include <sstream>

#include "chv/bruhat.hpp"
#include "chv/classdata.hpp"

namespace chv {

struct Certificate {
  std::string class_name;
  std::string mizuno_name;
  int p = 2;
  std::string mizuno_text;
  std::string pre_text;
  std::vector<int> omega_seq;      // product left to right
  std::vector<int> target_word;    // 1-based simple letters
  std::vector<int> target_coeffs;  // same length; defaults to all 1
  enum Status { Cert, Lookup, Unproven } status = Cert;
};

struct CertificateReport {
  bool applicable = false;  // false for Lookup/Unproven rows
  bool conj_exact = false;
  bool conj_twist = false;
  std::vector<int> twist;  // simple indices j with alpha_j^vee(-1) in the twist
  bool reduced = false;
  bool hooks = false;
  bool good = false;
};

struct InverseConjRecord {
  std::string class_name;
  std::string name;
  int p = 3;
  std::string z_text, t_text, v_text;
};

struct InverseConjReport {
  bool exact = false;
  bool twist_found = false;
  std::vector<int> twist;
};

// ---------------------------------------------------------------------------

struct CertificateSet {
  std::vector<Certificate> certs;
  std::vector<InverseConjRecord> invconj;

  static CertificateSet from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open certificate file: " + path);
    return CertificateSet(in);
  }

  explicit CertificateSet(std::istream& in) {
    std::string line;
    Certificate cur;
    InverseConjRecord icur;
    enum { None, InCert, InInv } mode = None;
    auto trim = [](std::string s) {
      size_t a = s.find_first_not_of(" \t");
      size_t b = s.find_last_not_of(" \t");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    while (std::getline(in, line)) {
      line = trim(line);
      if (line.empty() || line[0] == '#') continue;
      std::istringstream ls(line);
      std::string kw;
      ls >> kw;
      if (kw == "cert") {
        cur = Certificate();
        std::string ptok;
        ls >> cur.class_name >> cur.mizuno_name >> ptok;
        cur.p = std::stoi(ptok.substr(ptok.find('=') + 1));
        mode = InCert;
      } else if (kw == "invconj") {
        icur = InverseConjRecord();
        std::string ptok;
        ls >> icur.class_name >> icur.name >> ptok;
        icur.p = std::stoi(ptok.substr(ptok.find('=') + 1));
        mode = InInv;
      } else if (kw == "end") {
        if (mode == InCert) {
          if (cur.target_coeffs.empty())
            cur.target_coeffs.assign(cur.target_word.size(), 1);
          if (cur.status == Certificate::Cert && cur.target_word.empty())
            throw std::runtime_error("certificate " + cur.mizuno_name + " has no target");
          if (cur.target_coeffs.size() != cur.target_word.size())
            throw std::runtime_error("certificate " + cur.mizuno_name + ": coeff length");
          certs.push_back(cur);
        } else if (mode == InInv) {
          invconj.push_back(icur);
        }
        mode = None;
      } else {
        std::string rest;
        std::getline(ls, rest);
        rest = trim(rest);
        if (kw == "mizuno:") {
          (mode == InCert ? cur.mizuno_text : icur.z_text) = rest;
        } else if (kw == "pre:") {
          cur.pre_text = rest;
        } else if (kw == "omega:") {
          for (char ch : rest)
            if (ch >= '1' && ch <= '8') cur.omega_seq.push_back(ch - '0');
        } else if (kw == "target:") {
          std::istringstream ts(rest);
          int v;
          while (ts >> v) cur.target_word.push_back(v);
        } else if (kw == "coeffs:") {
          std::istringstream ts(rest);
          int v;
          while (ts >> v) cur.target_coeffs.push_back(v);
        } else if (kw == "status:") {
          if (rest == "lookup") cur.status = Certificate::Lookup;
          else if (rest == "unproven") cur.status = Certificate::Unproven;
          else throw std::runtime_error("bad status: " + rest);
        } else if (kw == "t:") {
          icur.t_text = rest;
        } else if (kw == "v:") {
          icur.v_text = rest;
        } else {
          throw std::runtime_error("certificate file: unknown field " + kw);
        }
      }
    }
  }

  const Certificate* find(const std::string& name) const {
    for (const auto& c : certs)
      if (c.mizuno_name == name) return &c;
    return nullptr;
  }
};

// ---------------------------------------------------------------------------

class CertificateVerifier {
 public:
  CertificateVerifier(const RootSystem& rs, const WeylGroup& wg, const EtaTables& eta,
                      const ClassCatalog& cat, const LusztigMap& map)
      : rs_(&rs), wg_(&wg), eta_(&eta), cat_(&cat), map_(&map) {}

  GroupWord conjugator_word(const Certificate& c) const {
    GroupWord g = parse_word(*rs_, c.pre_text, c.p);
    for (int j : c.omega_seq) g.tokens.push_back(GeneratorToken::omega(j - 1));
    return g;
  }

  GroupWord target_word(const Certificate& c) const {
    GroupWord t;
    t.p = c.p;
    for (size_t i = 0; i < c.target_word.size(); ++i)
      t.tokens.push_back(
          GeneratorToken::root_elt(rs_->simple_root(c.target_word[i] - 1), c.target_coeffs[i]));
    return t;
  }

  CertificateReport verify(const Certificate& c) const {
    CertificateReport rep;
    if (c.status != Certificate::Cert) return rep;
    rep.applicable = true;
    AdjointRep ad(*rs_, c.p);
    BruhatEngine eng(*rs_, *wg_, *eta_, c.p);

    GroupWord z = parse_word(*rs_, c.mizuno_text, c.p);
    GroupWord g = conjugator_word(c);
    GroupWord conj = g.concat(z).concat(g.inverse(*rs_));
    GroupWord target = target_word(c);

    AdjMatrix lhs = ad.evaluate(conj);
    AdjMatrix rhs = ad.evaluate(target);
    rep.conj_exact = (lhs == rhs);
    // the two engines must agree on equality, in both directions
    bool nf_equal = eng.normal_form(conj) == eng.normal_form(target);
    if (nf_equal != rep.conj_exact)
      throw std::logic_error("engines disagree on certificate " + c.mizuno_name);
    if (rep.conj_exact) {
      rep.conj_twist = true;
    } else if (c.p != 2) {
      // try tau g z g^-1 tau with tau a product of alpha_j^vee(-1)
      for (int mask = 1; mask < (1 << rs_->rank()) && !rep.conj_twist; ++mask) {
        AdjMatrix m = lhs;
        apply_twist(ad, mask, m);
        if (m == rhs) {
          rep.conj_twist = true;
          for (int j = 0; j < rs_->rank(); ++j)
            if (mask >> j & 1) rep.twist.push_back(j + 1);
        }
      }
    }
    rep.reduced = wg_->is_reduced(c.target_word);
    rep.hooks = hooks_into(*wg_, *cat_, *map_, wg_->word_to_element(c.target_word),
                           c.class_name, c.p);
    rep.good = rep.conj_twist && rep.reduced && rep.hooks;
    return rep;
  }

  InverseConjReport verify_inverse(const InverseConjRecord& r) const {
    if (r.p == 2) throw std::invalid_argument("inverse-conjugacy checks are for p != 2");
    InverseConjReport rep;
    AdjointRep ad(*rs_, r.p);
    GroupWord z = parse_word(*rs_, r.z_text, r.p);
    GroupWord t = parse_word(*rs_, r.t_text, r.p);
    GroupWord v = parse_word(*rs_, r.v_text, r.p);
    AdjMatrix zi = ad.evaluate(z.inverse(*rs_));
    GroupWord tv = t.concat(v);
    AdjMatrix lhs = ad.evaluate(tv.concat(z).concat(tv.inverse(*rs_)));
    rep.exact = (lhs == zi);
    if (rep.exact) {
      rep.twist_found = true;
      return rep;
    }
    // search over sign twists replacing t
    AdjMatrix vz = ad.evaluate(v.concat(z).concat(v.inverse(*rs_)));
    for (int mask = 0; mask < (1 << rs_->rank()); ++mask) {
      AdjMatrix m = vz;
      // tau (v z v^-1) tau^-1 with tau in the centre of the torus action:
      // conjugation by tau rescales root coordinates, implemented on the
      // evaluated matrix
      apply_twist_conj(ad, mask, m);
      if (m == zi) {
        rep.twist_found = true;
        for (int j = 0; j < rs_->rank(); ++j)
          if (mask >> j & 1) rep.twist.push_back(j + 1);
        return rep;
      }
    }
    return rep;
  }

 private:
  void apply_twist(const AdjointRep& ad, int mask, AdjMatrix& m) const {
    // m <- tau m tau^{-1}
    AdjMatrix tau = ad.identity();
    for (int j = 0; j < rs_->rank(); ++j)
      if (mask >> j & 1) ad.apply_torus_left(rs_->simple_root(j), -1, tau);
    m = tau * m * tau;  // tau^2 = 1 for the -1 values
  }
  void apply_twist_conj(const AdjointRep& ad, int mask, AdjMatrix& m) const {
    // same operation; (tau v) z (tau v)^{-1} = tau (v z v^{-1}) tau^{-1}
    apply_twist(ad, mask, m);
  }

  const RootSystem* rs_;
  const WeylGroup* wg_;
  const EtaTables* eta_;
  const ClassCatalog* cat_;
  const LusztigMap* map_;
};

}  // namespace chv
