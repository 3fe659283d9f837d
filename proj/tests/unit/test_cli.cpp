#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "ualg/io.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "ualg");
  std::ostringstream out, err;
  const int code = ualg::cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(UALG_TEST_DATA_DIR) + "/" + name; }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("sat") {
    auto ok = run({"sat", "--algebra", data("z2.alg"), "--equation", "f(?x,?y) = f(?y,?x)"});
    CHECK(ok.code == 0);
    auto bad = run({"sat", "--algebra", data("z2.alg"), "--equation", "f(?x,?x) = ?x"});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("WITNESS x=1\n") != std::string::npos);
    auto named = run({"sat", "--algebra", data("z4.alg") + ":z2add", "--equation", "f(?x,?x) = ?x"});
    CHECK(named.code == 1);
    auto ambiguous = run({"sat", "--algebra", data("z4.alg"), "--equation", "?x = ?x"});
    CHECK(ambiguous.code == 2);
    CHECK(ambiguous.err.find("--algebra") != std::string::npos);
  }

  TEST_CASE("usage and input errors exit 2") {
    CHECK(run({"validate", "missing.alg"}).code == 2);
    CHECK(run({}).code == 2);
    auto no_eq = run({"sat", "--algebra", data("z2.alg")});
    CHECK(no_eq.code == 2);
    CHECK(no_eq.err.find("--equation") != std::string::npos);
    CHECK(run({"sat", "--algebra", data("z2.alg"), "--equation", "f(?x"}).code == 2);
    CHECK(run({"validate", data("missing_end.alg")}).code == 2);
    CHECK(run({"hom", "--src", data("z2.alg"), "--dst", data("z2.alg"), "--map", "0 5"}).code == 2);
    CHECK(run({"--help"}).code == 0);
  }

  TEST_CASE("validate") {
    CHECK(run({"validate", data("z2.alg")}).code == 0);
    auto bad = run({"validate", data("bad_entry.alg")});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("WITNESS broken.f: entry 2 >= size 2 at index 2") != std::string::npos);
  }

  TEST_CASE("class-sat and theory") {
    auto r = run({"class-sat", "--equation", "f(?x,?y) = f(?y,?x)", data("z2.alg"), data("z3.alg")});
    CHECK(r.code == 0);
    auto f = run({"class-sat", "--equation", "f(?x,?x) = ?x", data("semilattice.alg"), data("z2.alg")});
    CHECK(f.code == 1);
    CHECK(f.out.find("WITNESS algebra=z2xor x=1") != std::string::npos);
    auto th = run({"theory", "--depth", "1", "--vars", "x", data("semilattice.alg")});
    CHECK(th.code == 0);
    CHECK(th.out == "?x = ?x\n?x = f(?x,?x)\nf(?x,?x) = ?x\nf(?x,?x) = f(?x,?x)\n");
  }

  TEST_CASE("hom, hom-find and factor") {
    auto h = run({"hom", "--src", data("z4.alg:z4add"), "--dst", data("z4.alg:z2add"), "--map", "0 1 0 1"});
    CHECK(h.code == 0);
    CHECK(h.out == "hom injective=no surjective=yes\n");
    auto nh = run({"hom", "--src", data("z2.alg"), "--dst", data("z2.alg"), "--map", "1 1"});
    CHECK(nh.code == 1);
    CHECK(nh.out.find("WITNESS f 0 0") != std::string::npos);
    auto all = run({"hom-find", "--src", data("z2.alg"), "--dst", data("z2.alg")});
    CHECK(all.out == "0 0\n0 1\n");
    auto iso = run({"hom-find", "--src", data("z2.alg"), "--dst", data("semilattice.alg"), "--injective"});
    CHECK(iso.code == 1);
    auto fac = run({"factor", "--src", data("z4.alg:z4add"), "--h-dst", data("z4.alg:z2add"), "--g-dst",
                    data("z4.alg:z2add"), "--h", "0 1 0 1", "--g", "0 0 0 0"});
    CHECK(fac.code == 0);
    CHECK(fac.out == "0 0\n");
    auto kern = run({"factor", "--src", data("z4.alg:z4add"), "--h-dst", data("z4.alg:z2add"), "--g-dst",
                     data("z4.alg:z4add"), "--h", "0 1 0 1", "--g", "0 1 2 3"});
    CHECK(kern.code == 1);
    CHECK(kern.out.find("WITNESS 0 2") != std::string::npos);
  }

  TEST_CASE("free writes a loadable algebra and sidecar") {
    const auto dir = std::filesystem::temp_directory_path() / "ualg_cli_test";
    std::filesystem::create_directories(dir);
    const auto out = (dir / "f.alg").string();
    auto r = run({"free", "--vars", "2", "--out", out, data("semilattice.alg")});
    REQUIRE(r.code == 0);
    auto f = ualg::parse_algebra_file(ualg::read_file(out));
    CHECK(f.algebras.at(0).size() == 3);
    CHECK(ualg::read_file(out + ".sidecar") ==
          "elem 0 repr ?v0 gen v0\nelem 1 repr ?v1 gen v1\nelem 2 repr f(?v0,?v1)\n");
    auto inline_out = run({"free", "--vars", "x,y", data("z2.alg")});
    CHECK(ualg::parse_algebra_file(inline_out.out).algebras.at(0).size() == 4);
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("entail-check and entail-search") {
    auto ok = run({"entail-check", "--axioms", data("comm.eq"), "--goal", "f(?y,?x) = f(?x,?y)", "--proof",
                   data("comm_swap.proof")});
    CHECK(ok.code == 0);
    auto other = run({"entail-check", "--axioms", data("comm.eq"), "--goal", "f(?x,?x) = ?x", "--proof",
                      data("comm_swap.proof")});
    CHECK(other.code == 1);
    auto bad = run({"entail-check", "--axioms", data("comm.eq"), "--goal", "?x = ?x", "--proof",
                    data("bad_trans.proof")});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("WITNESS trans f(?y,?x) f(?x,?y)") != std::string::npos);
    auto found = run({"entail-search", "--axioms", data("comm.eq"), "--goal",
                      "f(f(?x,?x),?y) = f(?y,f(?x,?x))", "--depth", "2"});
    CHECK(found.code == 0);
    CHECK(found.out == "(sub (hyp 0) ((x f(?x,?x)) (y ?y)))\n");
    auto none = run({"entail-search", "--axioms", data("comm.eq"), "--goal", "f(?x,?y) = ?x", "--depth", "2"});
    CHECK(none.code == 1);
    CHECK(none.out.find("WITNESS refuted") != std::string::npos);
  }

  TEST_CASE("birkhoff-demo") {
    auto text = run({"birkhoff-demo", "--vars", "2", data("semilattice.alg")});
    CHECK(text.code == 0);
    CHECK(text.out.find("result: FAIL") == std::string::npos);
    auto machine = run({"birkhoff-demo", "--vars", "2", "--format", "machine", data("z2.alg")});
    CHECK(machine.code == 0);
    std::istringstream lines(machine.out);
    std::string line;
    while (std::getline(lines, line)) CHECK(line.rfind("STAGE ", 0) == 0);
    CHECK(run({"birkhoff-demo", "--vars", "2", "--format", "xml", data("z2.alg")}).code == 2);
  }

  TEST_CASE("caps from the environment") {
    ::setenv("UALG_CAPS", "search=3", 1);
    auto r = run({"sat", "--algebra", data("z2.alg"), "--equation", "f(?x,?y) = f(?y,?x)"});
    CHECK(r.code == 2);
    CHECK(r.err.find("cap exceeded") != std::string::npos);
    ::setenv("UALG_CAPS", "bogus", 1);
    CHECK(run({"sat", "--algebra", data("z2.alg"), "--equation", "?x = ?x"}).code == 2);
    ::unsetenv("UALG_CAPS");
  }
}
