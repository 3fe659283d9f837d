#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "ualg/birkhoff.hpp"
#include "ualg/hom.hpp"

using namespace ualg;

namespace {

const CarrierMap mod2({0, 1, 0, 1}, 2);

std::vector<FiniteAlgebra> small_pool() {
  auto pool = enumerate_algebras(fixtures::binary(), 2);
  pool.push_back(fixtures::z3_add());
  pool.push_back(fixtures::magma3());
  return pool;
}

}  // namespace

TEST_SUITE("homs") {
  TEST_CASE("carrier map validates its range") {
    CHECK_THROWS_AS(CarrierMap({0, 2}, 2), Error);
    CHECK(CarrierMap::identity(3).to_string() == "0 1 2");
    CHECK(CarrierMap::constant(2, 1, 3).image() == std::vector<Elem>{1, 1});
  }

  TEST_CASE("classify mod 2 from Z4 onto Z2") {
    auto c = classify(fixtures::z4_add(), fixtures::z2_xor(), mod2);
    CHECK(c.is_hom);
    CHECK(c.surjective);
    CHECK_FALSE(c.injective);
    CHECK_FALSE(c.witness);
  }

  TEST_CASE("classify identity") {
    for (const auto& a : small_pool()) {
      auto c = classify(a, a, CarrierMap::identity(a.size()));
      CHECK(c.is_hom);
      CHECK(c.injective);
      CHECK(c.surjective);
    }
  }

  TEST_CASE("constant 1 on Z2 is not a hom, first witness f 0 0") {
    auto c = classify(fixtures::z2_xor(), fixtures::z2_xor(), CarrierMap::constant(2, 1, 2));
    CHECK_FALSE(c.is_hom);
    REQUIRE(c.witness);
    CHECK(c.witness->symbol == "f");
    CHECK(c.witness->args == std::vector<Elem>{0, 0});
  }

  TEST_CASE("classify rejects mismatched shapes") {
    auto kind_of = [](auto&& fn) {
      try {
        fn();
      } catch (const Error& e) {
        return e.kind();
      }
      return ErrorKind::InvalidArgument;
    };
    CHECK(kind_of([] { classify(fixtures::z3_add(), fixtures::z2_xor(), mod2); }) ==
          ErrorKind::CarrierMismatch);
    CHECK(kind_of([] {
            classify(fixtures::z3_group(), fixtures::z3_add(), CarrierMap::identity(3));
          }) == ErrorKind::SignatureMismatch);
  }

  TEST_CASE("compose") {
    const CarrierMap dbl({0, 2}, 4);
    auto z2 = fixtures::z2_xor();
    auto z4 = fixtures::z4_add();
    CHECK(classify(z2, z4, dbl).is_hom);
    auto c = compose(mod2, dbl);
    CHECK(c == CarrierMap::constant(2, 0, 2));
    CHECK(classify(z2, z2, c).is_hom);
    CHECK(compose(CarrierMap::identity(2), mod2) == mod2);
    CHECK_THROWS_AS(compose(mod2, mod2), Error);
  }

  TEST_CASE("composition of homs is a hom, of injections an injection") {
    auto pool = small_pool();
    for (const auto& a : pool)
      for (const auto& b : pool)
        for (const auto& c : pool) {
          if (a.size() * b.size() * c.size() > 12) continue;
          for (const auto& g : find_homs(a, b))
            for (const auto& h : find_homs(b, c)) {
              auto hg = compose(h, g);
              auto cls = classify(a, c, hg);
              REQUIRE(cls.is_hom);
              if (is_injective(g) && is_injective(h)) CHECK(cls.injective);
            }
        }
  }

  TEST_CASE("kernel pairs") {
    auto k = kernel_pairs(mod2);
    CHECK(k.size() == 8);
    for (auto [x, y] : k) CHECK(x % 2 == y % 2);
    CHECK(kernel_pairs(CarrierMap::identity(3)).size() == 3);
    CHECK(kernel_pairs(CarrierMap::constant(3, 0, 1)).size() == 9);
  }

  TEST_CASE("hom_factor examples") {
    auto z4 = fixtures::z4_add();
    auto z2 = fixtures::z2_xor();
    CHECK(hom_factor(z4, z2, z2, mod2, mod2) == CarrierMap::identity(2));
    CHECK(hom_factor(z4, z2, z2, CarrierMap::constant(4, 0, 2), mod2) == CarrierMap::constant(2, 0, 2));
    CHECK(hom_factor(z4, z4, z4, CarrierMap::identity(4), CarrierMap::identity(4)) ==
          CarrierMap::identity(4));
  }

  TEST_CASE("hom_factor errors are distinct") {
    auto z4 = fixtures::z4_add();
    auto z2 = fixtures::z2_xor();
    try {
      (void)hom_factor(z4, z4, z2, mod2, CarrierMap({0, 2, 0, 2}, 4));
      FAIL("expected NotSurjective");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotSurjective);
    }
    try {
      (void)hom_factor(z4, z2, z4, CarrierMap::identity(4), mod2);
      FAIL("expected KernelInclusion");
    } catch (const KernelInclusionError& e) {
      CHECK(e.pair() == std::pair<Elem, Elem>{0, 2});
    }
    CHECK_THROWS_AS(hom_factor(z4, z2, z2, CarrierMap({1, 1, 1, 1}, 2), mod2), NotHomError);
  }

  TEST_CASE("hom_factor randomized reconstruction") {
    std::mt19937 rng(7);
    auto pool = small_pool();
    std::size_t done = 0;
    for (int round = 0; round < 20000 && done < 100; ++round) {
      const auto& a = pool[rng() % pool.size()];
      const auto& b = pool[rng() % pool.size()];
      const auto& c = pool[rng() % pool.size()];
      HomSearch onto;
      onto.surjective = true;
      auto hs = find_homs(a, b, onto);
      auto phis = find_homs(b, c);
      if (hs.empty() || phis.empty()) continue;
      const auto& h = hs[rng() % hs.size()];
      const auto& phi0 = phis[rng() % phis.size()];
      auto g = compose(phi0, h);
      auto phi = hom_factor(a, b, c, g, h);
      CHECK(compose(phi, h) == g);
      CHECK(classify(b, c, phi).is_hom);
      ++done;
    }
    CHECK(done == 100);
  }

  TEST_CASE("find_homs examples") {
    auto z2 = fixtures::z2_xor();
    auto all = find_homs(z2, z2);
    REQUIRE(all.size() == 2);
    CHECK(all[0] == CarrierMap::constant(2, 0, 2));
    CHECK(all[1] == CarrierMap::identity(2));
    HomSearch iso;
    iso.injective = iso.surjective = true;
    auto isos = find_homs(z2, z2, iso);
    REQUIRE(isos.size() == 1);
    CHECK(isos[0] == CarrierMap::identity(2));
  }

  TEST_CASE("homs out of a one-element algebra pick idempotents") {
    auto one = FiniteAlgebra::make(fixtures::binary(), 1, {{0}}, "one");
    for (const auto& b : small_pool()) {
      std::size_t idempotents = 0;
      for (Elem e = 0; e < b.size(); ++e) {
        const std::vector<Elem> ee{e, e};
        idempotents += b.apply(0, ee) == e;
      }
      CHECK(find_homs(one, b).size() == idempotents);
    }
  }

  TEST_CASE("find_homs matches brute force with every flag combination") {
    auto pool = small_pool();
    for (const auto& a : pool)
      for (const auto& b : pool) {
        const auto expected = oracle::homs(a, b);
        for (int flags = 0; flags < 4; ++flags) {
          HomSearch s;
          s.injective = flags & 1;
          s.surjective = flags & 2;
          std::vector<oracle::Tuple> want;
          for (const auto& m : expected) {
            if (s.injective && std::set<Elem>(m.begin(), m.end()).size() != m.size()) continue;
            if (s.surjective && !oracle::surjective(m, b.size())) continue;
            want.push_back(m);
          }
          std::vector<oracle::Tuple> got;
          for (const auto& m : find_homs(a, b, s)) got.push_back(m.image());
          REQUIRE(got == want);
        }
      }
  }

  TEST_CASE("find_homs fixed assignments, limits and caps") {
    auto z4 = fixtures::z4_add();
    HomSearch s;
    s.fixed = {std::nullopt, Elem{3}};
    auto homs = find_homs(z4, z4, s);
    REQUIRE(homs.size() == 1);
    CHECK(homs[0].image() == std::vector<Elem>{0, 3, 2, 1});
    HomSearch one;
    one.max_results = 1;
    CHECK(find_homs(z4, z4, one).size() == 1);
    HomSearch tiny;
    tiny.cap = 2;
    CHECK_THROWS_AS(find_homs(z4, z4, tiny), CapExceededError);
  }

  TEST_CASE("isomorphism is an equivalence on the pool") {
    auto pool = small_pool();
    for (const auto& a : pool) {
      auto self = find_isomorphism(a, a);
      REQUIRE(self);
      for (const auto& b : pool) {
        auto ab = find_isomorphism(a, b);
        CHECK(ab.has_value() == oracle::isomorphic(a, b));
        if (!ab) continue;
        auto ba = inverse(*ab);
        CHECK(classify(b, a, ba).is_hom);
        CHECK(compose(ba, *ab) == CarrierMap::identity(a.size()));
        for (const auto& c : pool) {
          if (auto bc = find_isomorphism(b, c)) CHECK(find_isomorphism(a, c));
        }
      }
    }
  }
}
