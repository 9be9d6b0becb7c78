#include <catch2/catch_amalgamated.hpp>

#include "chv/datapath.hpp"
#include "chv/registry.hpp"

using namespace chv;

namespace {
struct Fixture {
  CaseRegistry reg;
  CaseRunner runner;
  Fixture() : reg(CaseRegistry::from_file(data_file("solver_cases_e8.dat"))) {}
};

bool all_plus_one(const Solution& s, const CycField* f) {
  for (const Cyc& v : s.x)
    if (v != Cyc::one(f)) return false;
  return true;
}
}  // namespace

TEST_CASE("regular pattern reproduces the printed S5 table") {
  CycField f(24);
  FiniteGroupTable g = table_for("S5", &f);
  std::vector<UnknownSpec> us;
  for (const auto& ch : g.chars) us.push_back({"x[" + ch.name + "]", ch.name,
                                               UnknownSpec::Sign, 24});
  MExpressionTable t = build_regular_expressions(g, us, "q^40");
  auto coeff_of = [&](const std::string& row, const std::string& ch) {
    return t.coeff[std::find(t.row_labels.begin(), t.row_labels.end(), row) -
                   t.row_labels.begin()][g.char_index(ch)];
  };
  auto rat = [&](long long v) { return Cyc::rational(&f, Rat(v)); };
  // row (5): delta - 4 delta + 6 delta - 4 delta + xi
  CHECK(coeff_of("(5)", "(5)") == rat(1));
  CHECK(coeff_of("(5)", "(41)") == rat(-4));
  CHECK(coeff_of("(5)", "(32)") == rat(0));
  CHECK(coeff_of("(5)", "(311)") == rat(6));
  CHECK(coeff_of("(5)", "(221)") == rat(0));
  CHECK(coeff_of("(5)", "(2111)") == rat(-4));
  CHECK(coeff_of("(5)", "(11111)") == rat(1));
  // row (221): delta + 5 delta - 12 delta + 5 delta + xi
  CHECK(coeff_of("(221)", "(5)") == rat(1));
  CHECK(coeff_of("(221)", "(41)") == rat(0));
  CHECK(coeff_of("(221)", "(32)") == rat(5));
  CHECK(coeff_of("(221)", "(311)") == rat(-12));
  CHECK(coeff_of("(221)", "(221)") == rat(5));
  CHECK(coeff_of("(221)", "(2111)") == rat(0));
  CHECK(coeff_of("(221)", "(11111)") == rat(1));
  // identity row: squared degrees 1,16,25,36,25,16,1
  CHECK(coeff_of("(11111)", "(41)") == rat(16));
  CHECK(coeff_of("(11111)", "(311)") == rat(36));
}

TEST_CASE("regular pattern for Z2 and D8 rows") {
  CycField f(24);
  {
    FiniteGroupTable g = table_for("Z2", &f);
    std::vector<UnknownSpec> us{{"one", "1", UnknownSpec::FixedOne, 24},
                                {"d", "eps", UnknownSpec::Sign, 24}};
    MExpressionTable t = build_regular_expressions(g, us, "f_w(q)");
    CHECK(t.coeff[0][1] == Cyc::one(&f));
    CHECK(t.coeff[1][1] == -Cyc::one(&f));
  }
  {
    FiniteGroupTable g = table_for("D8", &f);
    std::vector<UnknownSpec> us;
    for (const auto& ch : g.chars)
      us.push_back({"x[" + ch.name + "]", ch.name, UnknownSpec::Sign, 24});
    MExpressionTable t = build_regular_expressions(g, us, "q^20");
    // row 1: (1,1,1,4,1); row stst: (1,1,1,-4,1) in the order 1,eps_s,eps_t,eps,r
    auto row = [&](const std::string& r) {
      std::vector<long long> out;
      size_t ri = std::find(t.row_labels.begin(), t.row_labels.end(), r) - t.row_labels.begin();
      for (const char* cn : {"1", "eps_s", "eps_t", "r", "eps"})
        out.push_back(t.coeff[ri][g.char_index(cn)].rational_value().num);
      return out;
    };
    CHECK(row("1") == std::vector<long long>{1, 1, 1, 4, 1});
    CHECK(row("stst") == std::vector<long long>{1, 1, 1, -4, 1});
  }
}

TEST_CASE("2A4: unique solution, all seven unknowns +1, positive row 120") {
  Fixture fx;
  for (int p : {7, 3, 2}) {
    const SolverCase* c = fx.reg.find("2A4", p);
    REQUIRE(c != nullptr);
    CaseOutcome out = fx.runner.run(*c);
    CAPTURE(p);
    CHECK(out.verdict == "UNIQUE_GOOD");
    REQUIRE(out.report.solutions.size() == 1);
    CHECK(out.report.unique);
    const Solution& s = out.report.solutions[0];
    CHECK(all_plus_one(s, s.x[0].field()));
    CHECK(out.report.canonical_value == Rat(120));
    CHECK(s.good_rows == std::vector<std::string>{"(11111)"});
    // every other row vanishes
    for (size_t r = 1; r < s.row_values.size(); ++r) CHECK(s.row_values[r] == Rat(0));
    CHECK(s.row_values[0] == Rat(120));
    CHECK(out.prefactor == "q^40");
  }
}

TEST_CASE("Z2 case (a) versus case (b)") {
  Fixture fx;
  // (a): unique good class, canonical solution all +1, value 2 f_w
  CaseOutcome a = fx.runner.run(*fx.reg.find("A4", 7));
  CHECK(a.verdict == "UNIQUE_GOOD");
  CHECK(a.report.orbit_count == 1);
  CHECK(a.report.solutions.size() == 2);  // related by moving the base point
  CHECK(a.report.canonical_value == Rat(2));
  CHECK(a.report.undetermined.empty());
  // (b): every class is good, the second sign stays undetermined
  CaseOutcome b = fx.runner.run(*fx.reg.find("E7(a1)+A1", 7));
  CHECK(b.verdict == "ALL_GOOD");
  CHECK(b.report.undetermined == std::vector<std::string>{"delta[eps]"});
  for (const Rat& v : b.report.solutions[0].row_values) CHECK(v == Rat(1));
}

TEST_CASE("S3 cases and the D8(a3) conditional verdicts") {
  Fixture fx;
  for (int p : {7, 3, 2}) {
    if (fx.reg.find("A8", p)) {
      CaseOutcome s3 = fx.runner.run(*fx.reg.find("A8", p));
      CHECK(s3.verdict == "UNIQUE_GOOD");
      CHECK(s3.report.solutions.size() == 1);
      CHECK(s3.report.canonical_value == Rat(6));
    }
  }
  // D8(a3) at p >= 5 and p = 2: good class iff q = 1 mod 3
  for (int p : {7, 2}) {
    CaseOutcome c = fx.runner.run(*fx.reg.find("D8(a3)", p));
    CAPTURE(p);
    CHECK(c.verdict == "CONDITIONAL");
    CHECK(c.report.verdict == "UNIQUE_GOOD");  // q = 1 mod 3 branch
    CHECK(c.report.canonical_value == Rat(2));
    REQUIRE(c.branch_qm2.has_value());
    CHECK(c.branch_qm2->verdict == "NO_GOOD");
    // m(u_0, w) = 0 on that branch
    CHECK(c.branch_qm2->solutions[0].row_values[0] == Rat(0));
    if (p == 2) CHECK(c.report.undetermined == std::vector<std::string>{"delta[r]"});
  }
  // at p = 3 the class sits in the ordinary Z2 family
  CaseOutcome p3 = fx.runner.run(*fx.reg.find("D8(a3)", 3));
  CHECK(p3.verdict == "UNIQUE_GOOD");
}

TEST_CASE("Z3 with the conjugate-pair axiom") {
  Fixture fx;
  for (const char* cls : {"E8", "E7", "E6"}) {
    CaseOutcome c = fx.runner.run(*fx.reg.find(cls, 3));
    CAPTURE(cls);
    CHECK(c.verdict == "UNIQUE_GOOD");
    REQUIRE(c.report.solutions.size() == 1);
    const Solution& s = c.report.solutions[0];
    CHECK(all_plus_one(s, s.x[0].field()));
    CHECK(c.report.canonical_value == Rat(3));
    CHECK(s.row_values[1] == Rat(0));
    CHECK(s.row_values[2] == Rat(0));
  }
}

TEST_CASE("Z6 case") {
  Fixture fx;
  CaseOutcome c = fx.runner.run(*fx.reg.find("E7+A1", 3));
  CHECK(c.verdict == "UNIQUE_GOOD");
  CHECK(c.report.orbit_count == 1);
  CHECK(c.report.canonical >= 0);
  const Solution& s = c.report.solutions[c.report.canonical];
  CHECK(all_plus_one(s, s.x[0].field()));
  CHECK(c.report.canonical_value == Rat(6));
}

TEST_CASE("Z4 cases: positive row value 4") {
  Fixture fx;
  for (const char* cls : {"E8", "E8(a1)", "E7"}) {
    CaseOutcome c = fx.runner.run(*fx.reg.find(cls, 2));
    CAPTURE(cls);
    CHECK(c.verdict == "UNIQUE_GOOD");
    CHECK(c.report.orbit_count == 1);
    CHECK(c.report.solutions.size() == 4);
    CHECK(c.report.canonical >= 0);
    const Solution& s = c.report.solutions[c.report.canonical];
    CHECK(all_plus_one(s, s.x[0].field()));
    CHECK(c.report.canonical_value == Rat(4));
  }
}

TEST_CASE("Z2xZ2, D8 and S3xZ2 cases") {
  Fixture fx;
  CaseOutcome z22 = fx.runner.run(*fx.reg.find("E7+A1", 2));
  CHECK(z22.verdict == "UNIQUE_GOOD");
  CHECK(z22.report.canonical_value == Rat(4));

  CaseOutcome d8 = fx.runner.run(*fx.reg.find("D8(a1)", 2));
  CHECK(d8.verdict == "UNIQUE_GOOD");
  CHECK(d8.report.orbit_count == 1);
  CHECK(d8.report.solutions.size() == 2);
  CHECK(d8.report.canonical_value == Rat(8));
  const Solution& ds = d8.report.solutions[d8.report.canonical];
  CHECK(all_plus_one(ds, ds.x[0].field()));
  // the other solution flips zg[r] and has stst as its good row
  const Solution& other = d8.report.solutions[1 - d8.report.canonical];
  CHECK(other.good_rows == std::vector<std::string>{"stst"});

  CaseOutcome s32 = fx.runner.run(*fx.reg.find("E7(a2)+A1", 2));
  CHECK(s32.verdict == "UNIQUE_GOOD");
  CHECK(s32.report.solutions.size() == 2);
  CHECK(s32.report.orbit_count == 1);
  CHECK(s32.report.canonical_value == Rat(12));
  CHECK(s32.prefactor == "q^22");
}

TEST_CASE("E8 at p=5 (Z5 component group)") {
  Fixture fx;
  const SolverCase* c = fx.reg.find("E8", 5);
  REQUIRE(c != nullptr);
  CaseOutcome out = fx.runner.run(*c);
  CHECK(out.verdict == "UNIQUE_GOOD");
  CHECK(out.report.orbit_count == 1);
  CHECK(out.report.solutions.size() == 5);
  CHECK(out.report.canonical_value == Rat(5));
}

TEST_CASE("solve-all: the exception lists of the classification theorem") {
  Fixture fx;
  auto exceptions = [&](int p) {
    std::vector<std::string> out;
    for (const SolverCase* c : fx.reg.for_p(p)) {
      CaseOutcome o = fx.runner.run(*c);
      if (o.verdict != "UNIQUE_GOOD") out.push_back(c->uni_class + ":" + o.verdict);
      // registry expectation must match in every case
      std::string want = c->expect == "unique"
                             ? "UNIQUE_GOOD"
                             : (c->expect == "allgood" ? "ALL_GOOD" : "CONDITIONAL");
      if (o.verdict != want) FAIL(c->uni_class + " p=" + std::to_string(p));
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  CHECK(exceptions(7) == std::vector<std::string>{"D6(a1)+A1:ALL_GOOD", "D8(a3):CONDITIONAL",
                                                  "E7(a1)+A1:ALL_GOOD"});
  CHECK(exceptions(5) == std::vector<std::string>{"D6(a1)+A1:ALL_GOOD", "D8(a3):CONDITIONAL",
                                                  "E7(a1)+A1:ALL_GOOD"});
  CHECK(exceptions(3) == std::vector<std::string>{"D6(a1)+A1:ALL_GOOD", "E7(a1)+A1:ALL_GOOD"});
  CHECK(exceptions(2) == std::vector<std::string>{"D8(a3):CONDITIONAL"});
}
