// Shipped data: the Weyl-class catalog (named classes with minimal-length
// representatives and characteristic polynomials) and the class-to-class
// assignment table, keyed by characteristic.  The catalog is verified on
// load; identification always confirms a candidate by actually meeting its
// representative inside the length-preserving conjugation orbit.
#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "chv/weyl.hpp"

namespace chv {

struct ClassLabel {
  std::string name;
  int min_length = 0;
  std::vector<int> representative_word;
  std::vector<int64_t> char_poly;
};

enum class IdentifyStatus { Match, NoMatch, Ambiguous };

struct IdentifyResult {
  IdentifyStatus status = IdentifyStatus::NoMatch;
  const ClassLabel* label = nullptr;
};

class ClassCatalog {
 public:
  ClassCatalog(const WeylGroup& wg, std::istream& in) : wg_(&wg) {
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      std::istringstream ls(line);
      std::string kw;
      ls >> kw;
      if (kw != "class") throw std::runtime_error("catalog: bad record: " + line);
      ClassLabel cl;
      std::string rep;
      ls >> cl.name >> cl.min_length >> rep;
      int64_t c;
      while (ls >> c) cl.char_poly.push_back(c);
      if (rep != "-") {
        std::istringstream rsm(rep);
        std::string part;
        while (std::getline(rsm, part, ','))
          cl.representative_word.push_back(std::stoi(part));
      }
      verify(cl);
      reps_.push_back(wg.word_to_element(cl.representative_word));
      entries_.push_back(std::move(cl));
    }
  }

  static ClassCatalog from_file(const WeylGroup& wg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open catalog: " + path);
    return ClassCatalog(wg, in);
  }

  const std::vector<ClassLabel>& entries() const { return entries_; }

  const ClassLabel* find(const std::string& name) const {
    for (const auto& e : entries_)
      if (e.name == name) return &e;
    return nullptr;
  }

  // Filter by characteristic polynomial and minimal length, then walk the
  // same-length conjugation orbit until a candidate representative is met.
  // A single char-poly candidate is not trusted blindly: meeting the
  // representative is what certifies the match (the catalog need not be
  // exhaustive).  The walk is first tried at the query's own length, so a
  // query that already sits at catalog level resolves without the full
  // minimisation crawl.
  IdentifyResult identify(const WeylElement& w, size_t budget = 1000000) const {
    IdentifyResult res = identify_at_level(w, budget);
    if (res.status == IdentifyStatus::Match) return res;
    WeylElement m = wg_->cyclic_shift_minimize(w, budget);
    if (m.length() == w.length()) return res;
    return identify_at_level(m, budget);
  }

 private:
  IdentifyResult identify_at_level(const WeylElement& w, size_t budget) const {
    int d = w.length();
    auto cp = w.char_poly();
    std::vector<size_t> cand;
    for (size_t i = 0; i < entries_.size(); ++i)
      if (entries_[i].min_length == d && entries_[i].char_poly == cp) cand.push_back(i);
    IdentifyResult res;
    if (cand.empty()) return res;
    const ClassLabel* hit = nullptr;
    bool complete = wg_->explore_plateau(w, budget, [&](const WeylElement& x) {
      for (size_t ci : cand)
        if (reps_[ci] == x) {
          hit = &entries_[ci];
          return true;
        }
      return false;
    });
    if (hit) {
      res.status = IdentifyStatus::Match;
      res.label = hit;
      return res;
    }
    res.status = complete ? IdentifyStatus::NoMatch : IdentifyStatus::Ambiguous;
    return res;
  }

  void verify(const ClassLabel& cl) const {
    WeylElement w = wg_->word_to_element(cl.representative_word);
    if (w.length() != static_cast<int>(cl.representative_word.size()))
      throw std::runtime_error("catalog: representative of " + cl.name + " is not reduced");
    if (w.length() != cl.min_length)
      throw std::runtime_error("catalog: min_length mismatch for " + cl.name);
    if (w.char_poly() != cl.char_poly)
      throw std::runtime_error("catalog: char poly mismatch for " + cl.name);
  }

  const WeylGroup* wg_;
  std::vector<ClassLabel> entries_;
  std::vector<WeylElement> reps_;
};

// (Weyl class, p) -> unipotent class.  p is one of 2, 3, 5, 7 with 7
// standing for every good characteristic.
class LusztigMap {
 public:
  explicit LusztigMap(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      std::istringstream ls(line);
      std::string kw, cls, uni;
      int p;
      ls >> kw >> cls >> p >> uni;
      if (kw != "map" || !ls) throw std::runtime_error("map: bad record: " + line);
      table_[{cls, norm_p(p)}] = uni;
    }
  }

  static LusztigMap from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open map: " + path);
    return LusztigMap(in);
  }

  static int norm_p(int p) {
    if (p >= 7) return 7;
    if (p != 2 && p != 3 && p != 5) throw std::invalid_argument("bad characteristic");
    return p;
  }

  std::optional<std::string> image(const std::string& weyl_class, int p) const {
    auto it = table_.find({weyl_class, norm_p(p)});
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }

  std::vector<std::string> preimages(const std::string& uni_class, int p) const {
    std::vector<std::string> out;
    for (const auto& [k, v] : table_)
      if (k.second == norm_p(p) && v == uni_class) out.push_back(k.first);
    return out;
  }

  bool knows_unipotent(const std::string& uni_class, int p) const {
    return !preimages(uni_class, p).empty();
  }

  // Every catalog class must appear for every p; every target must have a
  // preimage in the catalog.
  void check_complete(const ClassCatalog& cat) const {
    for (const auto& e : cat.entries())
      for (int p : {2, 3, 5, 7})
        if (!image(e.name, p))
          throw std::runtime_error("map: no entry for " + e.name + " at p=" + std::to_string(p));
    for (const auto& [k, v] : table_)
      if (!cat.find(k.first)) throw std::runtime_error("map: unknown Weyl class " + k.first);
  }

 private:
  std::map<std::pair<std::string, int>, std::string> table_;
};

// w hooks into O iff its class maps to O and its length achieves the
// global minimum over every class mapping to O.
inline bool hooks_into(const WeylGroup& wg, const ClassCatalog& cat, const LusztigMap& map,
                       const WeylElement& w, const std::string& uni_class, int p,
                       size_t budget = 1000000) {
  if (!map.knows_unipotent(uni_class, p))
    throw std::invalid_argument("unknown unipotent class: " + uni_class);
  IdentifyResult r = cat.identify(w, budget);
  if (r.status == IdentifyStatus::Ambiguous)
    throw std::runtime_error("identification exhausted its budget");
  if (r.status != IdentifyStatus::Match) return false;
  auto img = map.image(r.label->name, p);
  if (!img || *img != uni_class) return false;
  if (w.length() != r.label->min_length) return false;
  int global = r.label->min_length;
  for (const std::string& cls : map.preimages(uni_class, p)) {
    const ClassLabel* cl = cat.find(cls);
    if (cl) global = std::min(global, cl->min_length);
  }
  (void)wg;
  return w.length() == global;
}

}  // namespace chv
