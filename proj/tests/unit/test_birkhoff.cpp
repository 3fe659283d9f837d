#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "ualg/birkhoff.hpp"
#include "ualg/closure.hpp"
#include "ualg/io.hpp"

using namespace ualg;

namespace {

const Equation comm = parse_equation("f(?x,?y) = f(?y,?x)");
const Equation idem = parse_equation("f(?x,?x) = ?x");

}  // namespace

TEST_SUITE("birkhoff") {
  TEST_CASE("report rendering") {
    PipelineReport r;
    r.add("one", true);
    r.add("two", false, "f 0 1");
    CHECK_FALSE(r.overall);
    CHECK(r.to_text() == "  [pass] one\n  [FAIL] two: f 0 1\nresult: FAIL\n");
    CHECK(r.to_machine() == "STAGE one PASS\nSTAGE two FAIL f 0 1\n");
  }

  TEST_CASE("invariance under a subalgebra embedding into the square") {
    auto z2 = fixtures::z2_xor();
    const FiniteAlgebra sq[] = {z2, z2};
    auto p = product(sq).alg;
    // z2 embeds diagonally in the square; the square is the derived algebra
    auto r = verify_invariance(p, comm, SubalgebraWitness{z2, CarrierMap({0, 3}, 4)});
    CHECK(r.overall);
    CHECK_FALSE(r.vacuous);
    auto prod = verify_invariance(z2, comm, ProductWitness{{z2}});
    CHECK(prod.overall);
    CHECK(prod.stages.back().witness == "size 4");
  }

  TEST_CASE("invariance under iso and image") {
    auto z4 = fixtures::z4_add();
    auto r = verify_invariance(z4, comm, ImageWitness{fixtures::z2_xor(), CarrierMap({0, 1, 0, 1}, 2)});
    CHECK(r.overall);
    const CarrierMap swap({0, 3, 2, 1}, 4);
    CHECK(verify_invariance(z4, comm, IsoWitness{z4, swap, swap}).overall);
  }

  TEST_CASE("failing antecedent is vacuous") {
    auto r = verify_invariance(fixtures::z2_xor(), idem, ProductWitness{{fixtures::z2_xor()}});
    CHECK(r.overall);
    CHECK(r.vacuous);
    CHECK(r.to_text().find("vacuous") != std::string::npos);
  }

  TEST_CASE("malformed witnesses throw") {
    auto z2 = fixtures::z2_xor();
    CHECK_THROWS_AS(verify_invariance(z2, comm, ImageWitness{z2, CarrierMap::constant(2, 1, 2)}), Error);
    CHECK_THROWS_AS(
        verify_invariance(z2, comm, IsoWitness{z2, CarrierMap::identity(2), CarrierMap::constant(2, 0, 2)}),
        Error);
    CHECK_THROWS_AS(
        verify_invariance(z2, comm, SubalgebraWitness{z2, CarrierMap::constant(2, 0, 2)}), Error);
    CHECK_THROWS_AS(verify_invariance(z2, comm, ProductWitness{{fixtures::z3_group()}}), Error);
  }

  TEST_CASE("algebra enumeration") {
    auto pool = enumerate_algebras(fixtures::binary(), 2);
    CHECK(pool.size() == 17);
    CHECK(pool[1].table(0).size() == 4);
    CHECK(pool[1].name() == "pool1");
    CHECK_THROWS_AS(enumerate_algebras(fixtures::binary(), 3, 1000), CapExceededError);
  }

  TEST_CASE("easy direction") {
    auto sig = fixtures::binary();
    const std::vector<Equation> e{idem, comm};
    auto r = eqcl_to_var_check(sig, e, 2);
    CHECK(r.overall);
    CHECK(r.stages.size() == 4);
    CHECK(r.stages[0].witness == "3 of 17");
    CHECK(eqcl_to_var_check(sig, std::vector<Equation>{}, 2).overall);
    const std::vector<Equation> trivial{parse_equation("?x = ?y")};
    auto t = eqcl_to_var_check(sig, trivial, 2);
    CHECK(t.overall);
    CHECK(t.stages[0].witness == "1 of 17");
  }

  TEST_CASE("hard direction") {
    const std::vector<FiniteAlgebra> slat{fixtures::semilattice2()};
    HspCertificate cert;
    cert.factors = {0, 0};
    cert.generators = {{0, 1}, {1, 0}};
    cert.image = {0, 1, 0};
    auto r = var_to_eqcl_check(slat, slat[0], cert);
    CHECK(r.overall);

    const std::vector<FiniteAlgebra> xr{fixtures::z2_xor()};
    auto t = var_to_eqcl_check(xr, xr[0], HspCertificate::trivial(xr[0], 0));
    CHECK(t.overall);
    CHECK(t.stages[1].witness == "size 4");

    cert.image = {1, 1, 0};
    auto bad = var_to_eqcl_check(slat, slat[0], cert);
    CHECK_FALSE(bad.overall);
    CHECK(bad.stages.size() == 1);
    CHECK(bad.stages[0].name == "certificate");
  }

  TEST_CASE("failure witnesses replay") {
    // z2 is not in the variety of semilattices; the theory stage names an
    // identity and environment that satisfies() confirms
    const std::vector<FiniteAlgebra> slat{fixtures::semilattice2()};
    auto z2 = fixtures::z2_xor();
    HspCertificate fake = HspCertificate::trivial(z2, 0);
    auto r = var_to_eqcl_check(slat, z2, fake);
    CHECK_FALSE(r.overall);
    const auto& st = r.stages[0];
    CHECK_FALSE(st.pass);
    CHECK(st.witness.find("image") != std::string::npos);
  }
}
