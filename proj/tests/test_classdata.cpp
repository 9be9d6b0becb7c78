#include <catch2/catch_amalgamated.hpp>

#include "chv/classdata.hpp"
#include <sstream>
#include "chv/datapath.hpp"

using namespace chv;

namespace {
struct Fixture {
  RootSystem rs;
  WeylGroup wg;
  ClassCatalog cat;
  LusztigMap map;
  Fixture()
      : rs(RootSystem::of("E8")),
        wg(rs),
        cat(ClassCatalog::from_file(wg, data_file("weyl_classes_e8.dat"))),
        map(LusztigMap::from_file(data_file("lusztig_map_e8.dat"))) {}
};
}  // namespace

TEST_CASE("catalog loads and is internally consistent") {
  Fixture f;
  CHECK(f.cat.entries().size() >= 26);
  f.map.check_complete(f.cat);
  // every representative is stable under cyclic-shift minimisation
  for (const ClassLabel& cl : f.cat.entries()) {
    WeylElement w = f.wg.word_to_element(cl.representative_word);
    CAPTURE(cl.name);
    CHECK(f.wg.cyclic_shift_minimize(w, 400000).length() == cl.min_length);
  }
}

TEST_CASE("identify: trivial, reflection, Coxeter") {
  Fixture f;
  auto r = f.cat.identify(f.wg.identity());
  REQUIRE(r.status == IdentifyStatus::Match);
  CHECK(r.label->name == "e");

  r = f.cat.identify(f.wg.word_to_element({1}));
  REQUIRE(r.status == IdentifyStatus::Match);
  CHECK(r.label->name == "A1");
  // all reflections are conjugate: try a long conjugate of s_4
  WeylElement g = f.wg.word_to_element({2, 5, 4, 3, 1, 6, 7, 8, 4, 2});
  r = f.cat.identify(g * f.wg.word_to_element({4}) * g.inverse());
  REQUIRE(r.status == IdentifyStatus::Match);
  CHECK(r.label->name == "A1");

  // Coxeter elements: any ordering of all eight letters
  r = f.cat.identify(f.wg.word_to_element({8, 2, 5, 3, 7, 1, 4, 6}));
  REQUIRE(r.status == IdentifyStatus::Match);
  CHECK(r.label->name == "E8");
  CHECK(r.label->min_length == 8);
}

TEST_CASE("identify is conjugation invariant on catalog classes") {
  Fixture f;
  std::vector<std::string> names{"E8(a1)", "E7", "D6", "D4+A1", "D8(a2)"};
  WeylElement g = f.wg.word_to_element({3, 5, 2, 8, 7, 6, 4, 5, 1, 3, 4});
  for (const auto& n : names) {
    const ClassLabel* cl = f.cat.find(n);
    REQUIRE(cl != nullptr);
    WeylElement w = f.wg.word_to_element(cl->representative_word);
    auto r = f.cat.identify(g * w * g.inverse());
    REQUIRE(r.status == IdentifyStatus::Match);
    CHECK(r.label->name == n);
  }
}

TEST_CASE("identify reports no match for foreign classes") {
  Fixture f;
  // w0 is central of length 120; its class (just w0) is not in the catalog
  auto r = f.cat.identify(f.wg.longest_element());
  CHECK(r.status == IdentifyStatus::NoMatch);
}

TEST_CASE("identify agrees with brute-force conjugacy on A3") {
  RootSystem rs = RootSystem::of("A3");
  WeylGroup wg(rs);
  // enumerate W(A3) and its conjugacy classes directly
  std::vector<WeylElement> all{wg.identity()};
  std::map<uint64_t, int> seen{{wg.identity().hash(), 0}};
  for (size_t h = 0; h < all.size(); ++h)
    for (int j = 0; j < rs.rank(); ++j) {
      WeylElement n = all[h] * wg.gen(j);
      if (!seen.count(n.hash())) {
        seen[n.hash()] = static_cast<int>(all.size());
        all.push_back(n);
      }
    }
  REQUIRE(all.size() == 24);
  std::vector<int> class_of(all.size(), -1);
  std::vector<WeylElement> min_rep;
  int nclasses = 0;
  for (size_t i = 0; i < all.size(); ++i) {
    if (class_of[i] >= 0) continue;
    WeylElement best = all[i];
    for (size_t g = 0; g < all.size(); ++g) {
      WeylElement c = all[g] * all[i] * all[g].inverse();
      class_of[seen[c.hash()]] = nclasses;
      if (c.length() < best.length()) best = c;
    }
    min_rep.push_back(best);
    ++nclasses;
  }
  CHECK(nclasses == 5);  // S4 has five classes
  // build a catalog from the brute-force data and identify every element
  std::stringstream data;
  for (int c = 0; c < nclasses; ++c) {
    std::string rep;
    auto word = wg.reduced_word(min_rep[c]);
    for (size_t i = 0; i < word.size(); ++i) rep += (i ? "," : "") + std::to_string(word[i]);
    if (rep.empty()) rep = "-";
    data << "class C" << c << " " << min_rep[c].length() << " " << rep;
    for (int64_t v : min_rep[c].char_poly()) data << " " << v;
    data << "\n";
  }
  ClassCatalog cat(wg, data);
  for (size_t i = 0; i < all.size(); ++i) {
    auto r = cat.identify(all[i]);
    REQUIRE(r.status == IdentifyStatus::Match);
    CHECK(r.label->name == "C" + std::to_string(class_of[i]));
  }
}

TEST_CASE("hooks_into") {
  Fixture f;
  for (int p : {2, 3, 5, 7}) {
    CHECK(hooks_into(f.wg, f.cat, f.map, f.wg.word_to_element({1, 3, 4, 2, 5, 6, 7, 8}), "E8", p));
    CHECK(hooks_into(f.wg, f.cat, f.map, f.wg.identity(), "1", p));
  }
  // the section-6.5 verification: w = s1 s4 s2 s3 s4 s3 s5 s6 s7 s8 hooks
  // into E8(a1) for p = 2
  WeylElement w = f.wg.word_to_element({1, 4, 2, 3, 4, 3, 5, 6, 7, 8});
  CHECK(hooks_into(f.wg, f.cat, f.map, w, "E8(a1)", 2));
  // but a longer conjugate of it does not (length must be minimal)
  WeylElement g = f.wg.word_to_element({5, 2, 8});
  WeylElement c = g * w * g.inverse();
  if (c.length() > w.length()) CHECK_FALSE(hooks_into(f.wg, f.cat, f.map, c, "E8(a1)", 2));
  // a Coxeter element does not hook into E8(a1)
  CHECK_FALSE(hooks_into(f.wg, f.cat, f.map, f.wg.word_to_element({1, 3, 4, 2, 5, 6, 7, 8}),
                         "E8(a1)", 2));
  // p = 2 splitting: the D7(a1) representative hooks into (D7(a1))_2 at
  // p = 2 and into D7(a1) otherwise
  WeylElement d7a1 = f.wg.word_to_element(f.cat.find("D7(a1)")->representative_word);
  CHECK(hooks_into(f.wg, f.cat, f.map, d7a1, "(D7(a1))_2", 2));
  CHECK_FALSE(hooks_into(f.wg, f.cat, f.map, d7a1, "D7(a1)", 2));
  CHECK(hooks_into(f.wg, f.cat, f.map, d7a1, "D7(a1)", 3));
  CHECK(hooks_into(f.wg, f.cat, f.map, d7a1, "D7(a1)", 7));
  CHECK_THROWS_AS(hooks_into(f.wg, f.cat, f.map, d7a1, "NoSuchClass", 2), std::invalid_argument);
}
