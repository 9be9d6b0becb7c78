#include <catch2/catch_amalgamated.hpp>

#include "chv/reeoracle.hpp"

using namespace chv;

TEST_CASE("model sizes") {
  SmallGroupModel m2 = build_model("A1", 2);
  CHECK(m2.elements.size() == 6);
  CHECK(m2.borel.size() == 2);
  // two cells of sizes 2 and 4
  int c0 = 0, c1 = 0;
  for (int w : m2.cell_of) (w == 0 ? c0 : c1)++;
  CHECK(c0 == 2);
  CHECK(c1 == 4);

  CHECK(build_model("A1", 3).elements.size() == 24);
  CHECK(build_model("A1", 4).elements.size() == 60);
  CHECK(build_model("A1", 5).elements.size() == 120);
  CHECK(build_model("A2", 2).elements.size() == 168);
  CHECK_THROWS(build_model("A2", 3));
}

TEST_CASE("cells partition the group") {
  for (int q : {2, 3, 4, 5}) {
    SmallGroupModel m = build_model("A1", q);
    long long total = 0;
    std::vector<long long> sizes(m.weyl_size, 0);
    for (int w : m.cell_of) sizes[w]++;
    for (long long s : sizes) total += s;
    CHECK(total == static_cast<long long>(m.elements.size()));
    // |B| and |B w0 B| = |B| q^l
    CHECK(sizes[0] == static_cast<long long>(m.borel.size()));
    CHECK(sizes[1] == static_cast<long long>(m.borel.size()) * q);
  }
}

TEST_CASE("spot values in SL2(F2)") {
  SmallGroupModel m = build_model("A1", 2);
  // regular unipotent, w = 1: lhs = 1*2/2 = 1, rhs = 1 + St(u) = 1
  int reg = -1;
  for (size_t c = 0; c < m.uni_classes.size(); ++c)
    if (m.uni_classes[c].name != "1") reg = static_cast<int>(c);
  REQUIRE(reg >= 0);
  CHECK(m.uni_classes[reg].centralizer == 2);
  ReeCheck r = check_ree(m, reg, 0);
  CHECK(r.lhs == Rat(1));
  CHECK(r.rhs == Rat(1));
  CHECK(r.equal);
  // u = 1, w = 1: both sides 1 + q
  int idc = -1;
  for (size_t c = 0; c < m.uni_classes.size(); ++c)
    if (m.uni_classes[c].name == "1") idc = static_cast<int>(c);
  ReeCheck r2 = check_ree(m, idc, 0);
  CHECK(r2.lhs == Rat(3));
  CHECK(r2.rhs == Rat(3));
}

TEST_CASE("the formula holds for every (u, w) pair in every model") {
  long long pairs = 0;
  for (int q : {2, 3, 4, 5}) {
    SmallGroupModel m = build_model("A1", q);
    for (size_t c = 0; c < m.uni_classes.size(); ++c)
      for (int w = 0; w < m.weyl_size; ++w) {
        ReeCheck r = check_ree(m, static_cast<int>(c), w);
        CAPTURE(q, c, w);
        CHECK(r.equal);
        ++pairs;
      }
    // consistency: summing the cell counts over w recovers |O_u|
    for (const auto& cls : m.uni_classes) {
      long long sum = static_cast<long long>(cls.members.size());
      long long bycells = 0;
      for (int w = 0; w < m.weyl_size; ++w)
        for (int g : cls.members)
          if (m.cell_of[g] == w) ++bycells;
      CHECK(sum == bycells);
    }
  }
  SmallGroupModel m = build_model("A2", 2);
  for (size_t c = 0; c < m.uni_classes.size(); ++c)
    for (int w = 0; w < m.weyl_size; ++w) {
      ReeCheck r = check_ree(m, static_cast<int>(c), w);
      CAPTURE(c, w);
      CHECK(r.equal);
      ++pairs;
    }
  CHECK(pairs >= 16 + 18);
}

TEST_CASE("unipotent classes of SL3(F2)") {
  SmallGroupModel m = build_model("A2", 2);
  // classes: 1, transvections, regular
  std::vector<size_t> sizes;
  for (const auto& c : m.uni_classes) sizes.push_back(c.members.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<size_t>{1, 21, 42});
}

TEST_CASE("centralizer_from_m") {
  CHECK(centralizer_from_m(Rat(1), Rat(1), Rat(2)) == Rat(2));
  // SL2(F2), regular u, w = 1
  SmallGroupModel m = build_model("A1", 2);
  int reg = 0;
  for (size_t c = 0; c < m.uni_classes.size(); ++c)
    if (m.uni_classes[c].name != "1") reg = static_cast<int>(c);
  ReeCheck r = check_ree(m, reg, 0);
  long long count = 0;
  for (int g : m.uni_classes[reg].members)
    if (m.cell_of[g] == 0) ++count;
  CHECK(centralizer_from_m(r.lhs, Rat(count), Rat(2)) == Rat(m.uni_classes[reg].centralizer));
  // inverse pair: c * count / b == m
  CHECK(centralizer_from_m(r.lhs, Rat(count), Rat(2)) * Rat(count) / Rat(2) == r.lhs);
  CHECK_THROWS(centralizer_from_m(Rat(1), Rat(0), Rat(2)));
}
