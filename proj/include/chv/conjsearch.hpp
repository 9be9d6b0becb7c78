// Search for a conjugator of omega's turning a Mizuno representative (a
// product of positive root elements over F_2) into a product of simple
// root elements whose word hooks into the target unipotent class, driving
// the height sum down but allowing the sideways and uphill moves the
// computation genuinely needs.
#pragma once

#include <map>
#include <queue>
#include <set>

#include "chv/classdata.hpp"
#include "chv/steinberg.hpp"

namespace chv {

struct SearchResult {
  bool found = false;
  std::vector<int> conjugator;  // omega letters, product left to right
  std::vector<int> word;        // simple word with g z g^-1 = u_{i_1}...u_{i_m}
  size_t states_explored = 0;
};

class GoodConjugatorSearch {
 public:
  GoodConjugatorSearch(const RootSystem& rs, const WeylGroup& wg, const ClassCatalog& cat,
                       const LusztigMap& map, const AdjointRep& ad2)
      : rs_(&rs), wg_(&wg), cat_(&cat), map_(&map), ad_(&ad2) {
    if (ad2.p() != 2) throw std::invalid_argument("search runs over F_2");
  }

  SearchResult run(const GroupWord& z, const std::string& uni_class, size_t budget = 100000) const {
    std::vector<int> start;
    for (const GeneratorToken& t : z.tokens) {
      if (t.kind != GeneratorToken::RootElt || !rs_->is_positive(t.root))
        throw std::invalid_argument("search expects a product of positive root elements");
      start.push_back(t.root);
    }
    AdjMatrix zmat = ad_->evaluate(z);

    struct Node {
      int heightsum;
      size_t order;
      std::vector<int> state;
      std::vector<int> conj;  // applied omegas, innermost first
    };
    auto cmp = [](const Node& a, const Node& b) {
      if (a.heightsum != b.heightsum) return a.heightsum > b.heightsum;
      return a.order > b.order;
    };
    std::priority_queue<Node, std::vector<Node>, decltype(cmp)> queue(cmp);
    std::set<std::vector<int>> seen;
    size_t order = 0;
    auto hsum = [&](const std::vector<int>& st) {
      int h = 0;
      for (int r : st) h += rs_->height(r);
      return h;
    };
    queue.push({hsum(start), order++, start, {}});
    seen.insert(start);
    SearchResult res;
    while (!queue.empty() && res.states_explored < budget) {
      Node n = queue.top();
      queue.pop();
      ++res.states_explored;
      if (try_finish(n.state, n.conj, zmat, uni_class, res)) return res;
      for (int j = 0; j < rs_->rank(); ++j) {
        bool valid = true;
        std::vector<int> next;
        next.reserve(n.state.size());
        for (int r : n.state) {
          if (r == rs_->simple_root(j)) {
            valid = false;
            break;
          }
          next.push_back(rs_->simple_reflection(r, j));
        }
        if (!valid || !seen.insert(next).second) continue;
        std::vector<int> conj = n.conj;
        conj.push_back(j + 1);
        queue.push({hsum(next), order++, next, std::move(conj)});
      }
    }
    return res;
  }

 private:
  // Attempt to turn a low state into a simple word: expand the remaining
  // height-2 factors in both orders, cancel, certify, and test the hook.
  bool try_finish(const std::vector<int>& state, const std::vector<int>& conj,
                  const AdjMatrix& zmat, const std::string& uni_class, SearchResult& res) const {
    int nonsimple = 0;
    for (int r : state) {
      int h = rs_->height(r);
      if (h > 2) return false;
      if (h == 2) ++nonsimple;
    }
    if (nonsimple > 6) return false;
    for (int mask = 0; mask < (1 << nonsimple); ++mask) {
      std::vector<GeneratorToken> toks;
      int bit = 0;
      for (int r : state) {
        if (rs_->height(r) == 1) {
          toks.push_back(GeneratorToken::root_elt(r, 1));
          continue;
        }
        auto ab = split_root(*rs_, r);
        if (!ab) return false;
        int a = ab->first, b = ab->second;
        if (mask >> bit++ & 1) std::swap(a, b);
        for (int rep = 0; rep < 2; ++rep) {
          toks.push_back(GeneratorToken::root_elt(a, 1));
          toks.push_back(GeneratorToken::root_elt(b, 1));
        }
      }
      GroupWord cand;
      cand.p = 2;
      cand.tokens = toks;
      GroupWord simp = simplify_p2(*rs_, *ad_, cand);
      std::vector<int> word;
      bool allsimple = true;
      for (const GeneratorToken& t : simp.tokens) {
        if (t.kind != GeneratorToken::RootElt || rs_->height(t.root) != 1) {
          allsimple = false;
          break;
        }
        for (int j = 0; j < rs_->rank(); ++j)
          if (t.root == rs_->simple_root(j)) word.push_back(j + 1);
      }
      if (!allsimple || word.empty()) continue;
      if (!wg_->is_reduced(word)) continue;
      if (!hooks_into(*wg_, *cat_, *map_, wg_->word_to_element(word), uni_class, 2)) continue;
      // certify g z g^-1 = product of the word's simple root elements
      GroupWord g;
      g.p = 2;
      for (auto it = conj.rbegin(); it != conj.rend(); ++it)
        g.tokens.push_back(GeneratorToken::omega(*it - 1));
      AdjMatrix lhs = ad_->evaluate(g) * zmat * ad_->evaluate(g.inverse(*rs_));
      if (lhs != ad_->evaluate(simp)) continue;
      res.found = true;
      res.word = word;
      res.conjugator.assign(g.tokens.size(), 0);
      for (size_t i = 0; i < g.tokens.size(); ++i) res.conjugator[i] = g.tokens[i].simple + 1;
      return true;
    }
    return false;
  }

  const RootSystem* rs_;
  const WeylGroup* wg_;
  const ClassCatalog* cat_;
  const LusztigMap* map_;
  const AdjointRep* ad_;
};

}  // namespace chv
