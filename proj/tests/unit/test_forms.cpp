#include "doctest.h"
#include "mackey/catalog.hpp"
#include "mackey/errors.hpp"
#include "mackey/forms.hpp"
#include "oracles.hpp"

using namespace mackey;

TEST_CASE("family names") {
  CHECK(TraceFamily::parse("semisimple") == TraceFamily::semisimple());
  CHECK(TraceFamily::parse("plocal:5") == TraceFamily::plocal(5));
  for (const char* s : {"semisimple", "integral", "plocal:3"}) CHECK(TraceFamily::parse(s).to_string() == s);
  CHECK_THROWS_AS(TraceFamily::parse("plocal:4"), InputError);
  CHECK_THROWS_AS(TraceFamily::parse("plocal:"), InputError);
  CHECK_THROWS_AS(TraceFamily::parse("other"), InputError);
}

TEST_CASE("semisimple form values") {
  for (const std::string& spec : oracle::catalog()) {
    const BurnsideRing b(parse_group(spec));
    CHECK(phi_semisimple(b, b.transitive(0)) == 1);
    for (ClassId h = 0; h < b.rank(); ++h) {
      const Rational n(static_cast<unsigned long>(b.lattice().subgroup_class(h).normalizer_order));
      CHECK(phi_semisimple(b, b.idempotent_e(h)) == 1 / n);
    }
  }
  const BurnsideRing c2(parse_group("cyclic:2"));
  CHECK(phi_semisimple(c2, c2.transitive(1)) == 1);
}

TEST_CASE("integral form values") {
  const BurnsideRing s3(parse_group("symmetric:3"));
  CHECK(phi_integral(s3, s3.transitive(0)) == 1);
  CHECK(phi_integral(s3, s3.one()) == 0);
  CHECK(phi_integral(s3, s3.multiply(s3.transitive(1), s3.transitive(1))) == 1);
}

TEST_CASE("p-local form values") {
  const BurnsideRing c3(parse_group("cyclic:3"));
  const DeimlBasis d = deiml_basis(c3, 3);
  CHECK(phi_plocal(c3, d, c3.transitive(0)) == 1);
  CHECK(phi_plocal(c3, d, c3.one()) == 0);
  for (const std::string& spec : oracle::catalog()) {
    const BurnsideRing b(parse_group(spec));
    for (unsigned long p : {2UL, 3UL, 5UL, 7UL}) {
      const DeimlBasis basis = deiml_basis(b, p);
      CHECK(phi_plocal(b, basis, b.transitive(0)) == 1);
      if (b.group().order() % p == 0) continue;
      for (ClassId k = 0; k < b.rank(); ++k) {
        CHECK(phi_plocal(b, basis, b.transitive(k)) == phi_plocal_coprime(b, b.transitive(k)));
      }
    }
  }
}

TEST_CASE("cached trace forms agree with direct evaluation") {
  const BurnsideRing b(parse_group("alternating:4"));
  const TraceForm ss(b, TraceFamily::semisimple());
  const TraceForm in(b, TraceFamily::integral());
  const TraceForm pl(b, TraceFamily::plocal(3));
  REQUIRE(pl.deiml());
  CHECK_FALSE(ss.deiml());
  for (ClassId i = 0; i < b.rank(); ++i) {
    for (ClassId j = 0; j < b.rank(); ++j) {
      const auto x = b.multiply(b.transitive(i), b.transitive(j));
      CHECK(ss(x) == phi_semisimple(b, x));
      CHECK(in(x) == phi_integral(b, x));
      CHECK(pl(x) == phi_plocal(b, *pl.deiml(), x));
    }
  }
}

TEST_CASE("b_phi matrices") {
  SUBCASE("C_{p^2}, integral") {
    for (long p : {2L, 3L}) {
      const BurnsideRing b(parse_group("cyclic:" + std::to_string(p * p)));
      CHECK(b_phi_matrix(b, TraceFamily::integral()) == Matrix::from_integers({{p * p, p, 1}, {p, 0, 0}, {1, 0, 0}}));
    }
  }
  SUBCASE("C_2, semisimple") {
    const BurnsideRing b(parse_group("cyclic:2"));
    const Matrix m = b_phi_matrix(b, TraceFamily::semisimple());
    CHECK(m == Matrix::from_integers({{2, 1}, {1, 1}}));
    CHECK(det_exact(m) == 1);
  }
  SUBCASE("trivial") {
    const BurnsideRing b(parse_group("trivial"));
    for (auto f : {TraceFamily::semisimple(), TraceFamily::integral(), TraceFamily::plocal(2)})
      CHECK(b_phi_matrix(b, f) == Matrix::identity(1));
  }
  SUBCASE("symmetric everywhere") {
    for (const std::string& spec : oracle::catalog()) {
      const BurnsideRing b(parse_group(spec));
      for (auto f : {TraceFamily::semisimple(), TraceFamily::integral(), TraceFamily::plocal(2), TraceFamily::plocal(3)}) {
        CHECK(b_phi_matrix(b, f).is_symmetric());
      }
      CHECK(b_phi_matrix(b, TraceFamily::plocal(3), BurnsideBasis::Deiml).is_symmetric());
    }
  }
  SUBCASE("Deiml basis needs the p-local family") {
    const BurnsideRing b(parse_group("cyclic:3"));
    CHECK_THROWS_AS(b_phi_matrix(b, TraceFamily::integral(), BurnsideBasis::Deiml), InputError);
  }
}

TEST_CASE("semisimple determinant formula") {
  const BurnsideRing s3(parse_group("symmetric:3"));
  CHECK(semisimple_det_formula(s3) == fraction(1, 3));
  CHECK(det_exact(b_phi_matrix(s3, TraceFamily::semisimple())) == fraction(1, 3));
  for (const char* spec : {"cyclic:4", "klein4", "cyclic:15", "product:cyclic:2,cyclic:4"}) {
    CHECK(semisimple_det_formula(BurnsideRing(parse_group(spec))) == 1);
  }
}

TEST_CASE("induction stability") {
  for (const std::string& spec : oracle::catalog()) {
    CAPTURE(spec);
    const BurnsideRing b(parse_group(spec));
    CHECK(check_induction_stability(b, TraceFamily::semisimple()).stable);
    CHECK(check_induction_stability(b, TraceFamily::integral()).stable);
  }
  CHECK(check_induction_stability(BurnsideRing(parse_group("symmetric:3")), TraceFamily::plocal(3)).stable);
}

TEST_CASE("p-local block determinants") {
  SUBCASE("C_p") {
    for (unsigned long p : {2UL, 3UL, 5UL}) {
      const BurnsideRing b(parse_group("cyclic:" + std::to_string(p)));
      const auto report = plocal_block_dets(b, p);
      REQUIRE(report.blocks.size() == 1);
      CHECK(report.blocks[0].size == 2);
      CHECK(report.blocks[0].det == -1);
      CHECK(report.blocks[0].formula_det == -1);
      const long lp = static_cast<long>(p);
      CHECK(b_phi_matrix(b, TraceFamily::plocal(p), BurnsideBasis::Deiml) ==
            Matrix::from_integers({{lp, 1}, {1, 0}}));
    }
  }
  SUBCASE("S_3, p = 3") {
    const BurnsideRing b(parse_group("symmetric:3"));
    const auto report = plocal_block_dets(b, 3);
    CHECK(report.block_diagonal);
    REQUIRE(report.blocks.size() == 3);
    CHECK(report.blocks[0].det == -4);
    CHECK(report.blocks[1].det == 1);
    CHECK(report.blocks[2].det == 1);
    for (const auto& blk : report.blocks) CHECK(blk.det == blk.formula_det);
  }
  SUBCASE("C_6, p = 3") {
    const BurnsideRing b(parse_group("cyclic:6"));
    for (const auto& blk : plocal_block_dets(b, 3).blocks) CHECK(valuation(blk.det, 3) == 0);
  }
  SUBCASE("p^2 | |G| is rejected") {
    CHECK_THROWS_AS(plocal_block_dets(BurnsideRing(parse_group("cyclic:4")), 2), InputError);
  }
}

TEST_CASE("subgroup ring cache") {
  const BurnsideRing b(parse_group("dihedral:4"));
  SubgroupRingCache cache(b);
  for (ClassId c = 0; c < b.rank(); ++c) {
    const SubgroupEmbedding emb(b, b.lattice().subgroup_class(c).representative);
    for (auto f : {TraceFamily::semisimple(), TraceFamily::integral()}) {
      CHECK(cache.det(c, f) == det_exact(b_phi_matrix(emb.local(), f)));
    }
  }
  CHECK(cache.det(b.rank() - 1, TraceFamily::integral()) == det_exact(b_phi_matrix(b, TraceFamily::integral())));
}
