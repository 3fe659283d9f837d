#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "ualg/term.hpp"

using namespace ualg;

namespace {

Term v(const char* n) { return Term::var(n); }
Term f(Term a, Term b) { return Term::app("f", {std::move(a), std::move(b)}); }

}  // namespace

TEST_SUITE("terms") {
  TEST_CASE("printing, depth and size") {
    auto t = f(v("x"), Term::app("g", {v("y")}));
    CHECK(t.to_string() == "f(?x,g(?y))");
    CHECK(t.depth() == 2);
    CHECK(t.node_count() == 4);
    CHECK(Term::app("e").depth() == 0);
    CHECK(Term::app("e").to_string() == "e");
    CHECK(v("x").depth() == 0);
  }

  TEST_CASE("variables in first-occurrence order") {
    Equation eq{f(v("y"), v("x")), f(v("z"), v("y"))};
    CHECK(variables(eq) == std::vector<std::string>{"y", "x", "z"});
  }

  TEST_CASE("substitute") {
    Substitution s{{"x", f(v("y"), v("y"))}};
    CHECK(substitute(s, f(v("x"), v("x"))) == f(f(v("y"), v("y")), f(v("y"), v("y"))));
    CHECK(substitute(Substitution{}, f(v("x"), v("z"))) == f(v("x"), v("z")));
    CHECK(substitute(Substitution{{"x", v("y")}}, v("x")) == v("y"));
  }

  TEST_CASE("compose applies inner then outer") {
    Substitution inner{{"x", f(v("y"), v("z"))}};
    Substitution outer{{"y", v("z")}, {"z", v("x")}};
    auto both = compose(outer, inner);
    for (const auto& t : oracle::binary_terms({"x", "y", "z"}, 2)) {
      CHECK(substitute(both, t) == substitute(outer, substitute(inner, t)));
    }
  }

  TEST_CASE("evaluate examples") {
    CHECK(evaluate(fixtures::z2_xor(), f(v("x"), f(v("x"), v("y"))), {{"x", 1}, {"y", 0}}) == 0);
    CHECK(evaluate(fixtures::z3_add(), v("x"), {{"x", 2}}) == 2);
    CHECK(evaluate(fixtures::semilattice2(), f(v("x"), v("x")), {{"x", 1}}) == 1);
  }

  TEST_CASE("evaluate errors") {
    auto z2 = fixtures::z2_xor();
    CHECK_THROWS_AS(evaluate(z2, v("x"), {}), Error);
    try {
      (void)evaluate(z2, Term::app("f", {v("x")}), {{"x", 0}});
      FAIL("expected ArityMismatch");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ArityMismatch);
    }
    try {
      (void)evaluate(z2, v("x"), {{"y", 0}});
      FAIL("expected UnboundVariable");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::UnboundVariable);
    }
  }

  TEST_CASE("free_lift examples") {
    CHECK(free_lift(fixtures::z2_xor(), {{"x", 1}}, v("x")) == 1);
    CHECK(free_lift(fixtures::z2_xor(), {{"x", 1}, {"y", 0}}, f(v("x"), v("y"))) == 1);
    CHECK(free_lift(fixtures::semilattice2(), {{"x", 0}, {"y", 1}}, f(v("x"), v("y"))) == 0);
    CHECK_THROWS_AS(free_lift(fixtures::z2_xor(), {}, v("x")), Error);
  }

  TEST_CASE("enumerate_terms with a constant") {
    Signature sig({{"f", 2}, {"e", 0}});
    const std::vector<std::string> x{"x"};
    auto d0 = enumerate_terms(sig, x, 0);
    REQUIRE(d0.size() == 2);
    CHECK(d0[0].to_string() == "?x");
    CHECK(d0[1].to_string() == "e");
    auto d1 = enumerate_terms(sig, x, 1);
    CHECK(d1.size() == 6);
    CHECK(d1[2].to_string() == "f(?x,?x)");
    CHECK(d1[5].to_string() == "f(e,e)");
  }

  TEST_CASE("enumerate_terms without leaves is empty") {
    CHECK(enumerate_terms(fixtures::binary(), std::vector<std::string>{}, 3).empty());
  }

  TEST_CASE("enumerate_terms matches the oracle set and is downward closed") {
    const std::vector<std::string> xy{"x", "y"};
    for (std::size_t d = 0; d <= 3; ++d) {
      auto ts = enumerate_terms(fixtures::binary(), xy, d);
      const std::set<Term> as_set(ts.begin(), ts.end());
      CHECK(as_set.size() == ts.size());
      CHECK(as_set == oracle::binary_terms(xy, d));
      for (std::size_t i = 1; i < ts.size(); ++i) CHECK(ts[i - 1].depth() <= ts[i].depth());
    }
    CHECK(enumerate_terms(fixtures::binary(), xy, 3).size() == 1446);  // T(d) = 2 + T(d-1)^2
  }

  TEST_CASE("enumerate_terms honours the cap") {
    const std::vector<std::string> xy{"x", "y"};
    try {
      (void)enumerate_terms(fixtures::binary(), xy, 3, 100);
      FAIL("expected CapExceeded");
    } catch (const CapExceededError& e) {
      CHECK(e.dimension() == "terms");
    }
  }

  TEST_CASE("all_environments is lexicographic") {
    const std::vector<std::string> xy{"x", "y"};
    auto envs = all_environments(xy, 3, 100);
    REQUIRE(envs.size() == 9);
    CHECK(envs[1].to_string() == "x=0 y=1");
    CHECK(envs[3].to_string() == "x=1 y=0");
    CHECK_THROWS_AS(all_environments(xy, 3, 8), CapExceededError);
    CHECK(all_environments(std::vector<std::string>{}, 3, 1).size() == 1);
  }

  TEST_CASE("free_lift agrees with evaluate and with the oracle") {
    const std::vector<std::string> xy{"x", "y"};
    const auto terms = enumerate_terms(fixtures::binary(), xy, 3);
    for (const auto& a : {fixtures::z2_xor(), fixtures::semilattice2(), fixtures::magma3()}) {
      for (const auto& rho : all_environments(xy, a.size(), 100)) {
        oracle::Env env(rho.bindings().begin(), rho.bindings().end());
        for (const auto& t : terms) {
          const auto e = evaluate(a, t, rho);
          REQUIRE(free_lift(a, rho, t) == e);
          REQUIRE(oracle::eval(a, t, env) == e);
        }
      }
    }
  }

  TEST_CASE("free_lift is compatible with operations") {
    const std::vector<std::string> xy{"x", "y"};
    const auto terms = enumerate_terms(fixtures::binary(), xy, 2);
    auto a = fixtures::magma3();
    for (const auto& rho : all_environments(xy, 3, 100)) {
      for (const auto& s : terms) {
        for (const auto& t : terms) {
          const std::vector<Elem> args{free_lift(a, rho, s), free_lift(a, rho, t)};
          REQUIRE(free_lift(a, rho, f(s, t)) == a.apply_op("f", args));
        }
      }
    }
  }

  TEST_CASE("substitution lemma on a small sample") {
    const std::vector<std::string> xy{"x", "y"};
    auto a = fixtures::magma3();
    Substitution s{{"x", f(v("y"), v("x"))}, {"y", v("x")}};
    for (const auto& t : enumerate_terms(fixtures::binary(), xy, 2)) {
      for (const auto& rho : all_environments(xy, 3, 100)) {
        Environment shifted;
        for (const auto& x : xy) shifted.bind(x, evaluate(a, s(x), rho));
        REQUIRE(evaluate(a, substitute(s, t), rho) == evaluate(a, t, shifted));
      }
    }
  }

  TEST_CASE("structural equality and ordering") {
    CHECK(f(v("x"), v("y")) == f(v("x"), v("y")));
    CHECK(f(v("x"), v("y")) != f(v("y"), v("x")));
    CHECK(v("x") < f(v("x"), v("x")));
    CHECK(Equation{v("x"), v("y")}.swapped() == Equation{v("y"), v("x")});
  }

  TEST_CASE("check_term") {
    CHECK_NOTHROW(check_term(fixtures::binary(), f(v("x"), v("y"))));
    CHECK_THROWS_AS(check_term(fixtures::binary(), Term::app("g", {v("x")})), Error);
    CHECK_THROWS_AS(check_term(fixtures::binary(), Term::app("f", {v("x")})), Error);
  }
}
