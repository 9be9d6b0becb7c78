#include <catch2/catch_amalgamated.hpp>

#include "chv/chartable.hpp"

using namespace chv;

TEST_CASE("cyclotomic arithmetic") {
  CycField f24(24);
  CHECK(f24.degree() == 8);
  Cyc z = Cyc::zeta_pow(&f24, 1);
  Cyc acc = Cyc::one(&f24);
  for (int i = 0; i < 24; ++i) acc = acc * z;
  CHECK(acc == Cyc::one(&f24));
  // zeta_24^12 = -1
  CHECK(Cyc::zeta_pow(&f24, 12) == -Cyc::one(&f24));
  // i = zeta^6, conj(i) = -i
  Cyc i = Cyc::zeta_pow(&f24, 6);
  CHECK(i.conj() == -i);
  CHECK((i * i) == -Cyc::one(&f24));
  CHECK(i.str() == "i");
  // 1 + w + w^2 = 0 with w = zeta^8
  Cyc w = Cyc::zeta_pow(&f24, 8);
  CHECK((Cyc::one(&f24) + w + w * w).is_zero());
  CHECK(w.str() == "z3");
  CHECK((w * w).str() == "z3^2");
  CHECK(w.is_real() == false);
  CHECK((w + w.conj()).is_rational());
  CHECK((w + w.conj()).rational_value() == Rat(-1));

  CycField f5(5);
  CHECK(f5.degree() == 4);
  Cyc z5 = Cyc::zeta_pow(&f5, 1);
  Cyc s = Cyc::one(&f5) + z5;
  for (int k = 2; k < 5; ++k) s = s + Cyc::zeta_pow(&f5, k);
  CHECK(s.is_zero());
}

TEST_CASE("all shipped tables pass exact orthogonality") {
  for (const char* label :
       {"Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "S3", "S5", "D8", "Z2xZ2", "S3xZ2"}) {
    CycField f(std::max(value_conductor(label), 1) * 12);  // roomy field
    FiniteGroupTable t = table_for(label, &f);              // throws if not orthogonal
    CAPTURE(label);
    CHECK(verify_orthogonality(t));
  }
}

TEST_CASE("S5 degrees by partition") {
  CycField f(12);
  FiniteGroupTable t = table_for("S5", &f);
  auto deg = [&](const char* n) { return t.chars[t.char_index(n)].degree; };
  CHECK(deg("(5)") == 1);
  CHECK(deg("(41)") == 4);
  CHECK(deg("(32)") == 5);
  CHECK(deg("(311)") == 6);
  CHECK(deg("(221)") == 5);
  CHECK(deg("(2111)") == 4);
  CHECK(deg("(11111)") == 1);
  // (11111) is the sign character
  int c21 = t.class_index("(2111)");
  CHECK(t.chars[t.char_index("(11111)")].values[c21].rational_value() == Rat(-1));
  // column (221) against the identity column has inner product 0
  int c221 = t.class_index("(221)");
  int cid = t.class_index("(11111)");
  Cyc s = Cyc::zero(&f);
  for (const auto& ch : t.chars) s = s + ch.values[cid].conj() * ch.values[c221];
  CHECK(s.is_zero());
}

TEST_CASE("Z3 characters take values 1, w, w2") {
  CycField f(3);
  FiniteGroupTable t = table_for("Z3", &f);
  Cyc w = Cyc::zeta_pow(&f, 1);
  CHECK(t.chars[t.char_index("w")].values[t.class_index("1")] == w);
  CHECK(t.chars[t.char_index("w2")].values[t.class_index("1")] == w * w);
  CHECK(t.chars[t.char_index("w")].values[t.class_index("2")] == w * w);
}

TEST_CASE("D8 reflection character") {
  CycField f(4);
  FiniteGroupTable t = table_for("D8", &f);
  const GroupChar& r = t.chars[t.char_index("r")];
  CHECK(r.values[t.class_index("1")].rational_value() == Rat(2));
  CHECK(r.values[t.class_index("s")].is_zero());
  CHECK(r.values[t.class_index("t")].is_zero());
  CHECK(r.values[t.class_index("st")].is_zero());
  CHECK(r.values[t.class_index("stst")].rational_value() == Rat(-2));
  // eps_s(t) = +1, eps_s(s) = -1, and so on
  CHECK(t.chars[t.char_index("eps_s")].values[t.class_index("t")].rational_value() == Rat(1));
  CHECK(t.chars[t.char_index("eps_s")].values[t.class_index("s")].rational_value() == Rat(-1));
  CHECK(t.chars[t.char_index("eps_t")].values[t.class_index("s")].rational_value() == Rat(1));
  CHECK(t.chars[t.char_index("eps")].values[t.class_index("s")].rational_value() == Rat(-1));
  CHECK(t.chars[t.char_index("eps")].values[t.class_index("t")].rational_value() == Rat(-1));
}

TEST_CASE("corrupted table fails orthogonality (negative control)") {
  CycField f(4);
  FiniteGroupTable t = table_for("D8", &f);
  t.chars[4].values[1] = Cyc::rational(&f, Rat(1));  // r(s) := 1
  CHECK_FALSE(verify_orthogonality(t));
  FiniteGroupTable t2 = table_for("Z4", &f);
  t2.classes[1].size = 2;
  CHECK_FALSE(verify_orthogonality(t2));
}

TEST_CASE("product tables: S3 x Z2") {
  CycField f(12);
  FiniteGroupTable t = table_for("S3xZ2", &f);
  CHECK(t.order == 12);
  CHECK(t.classes.size() == 6);
  CHECK(t.char_index("rxeps") >= 0);
  CHECK(t.chars[t.char_index("rx1")].degree == 2);
  // central classes are exactly ((111),0) and ((111),1)
  int central = 0;
  for (const auto& c : t.classes) central += c.central;
  CHECK(central == 2);
  CHECK(t.classes[t.class_index("((111),1)")].central);
}

TEST_CASE("column orthogonality zeroes non-identity rows at the all-one point") {
  // sum_x x(1) x(a) = 0 for a != 1: the reason the all-+1 assignment kills
  // every non-central row in the m-tables
  CycField f(12);
  for (const char* label : {"Z2", "Z3", "Z4", "S3", "S5", "D8", "Z2xZ2", "S3xZ2"}) {
    FiniteGroupTable t = table_for(label, &f);
    for (size_t c = 1; c < t.classes.size(); ++c) {
      Cyc s = Cyc::zero(&f);
      for (const auto& ch : t.chars)
        s = s + Cyc::rational(&f, Rat(ch.degree)) * ch.values[c];
      CAPTURE(label, t.classes[c].name);
      CHECK(s.is_zero());
    }
  }
}
