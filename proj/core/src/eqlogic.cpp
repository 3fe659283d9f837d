#include "ualg/eqlogic.hpp"

#include <map>

namespace ualg {

SatResult satisfies(const FiniteAlgebra& alg, const Equation& eq, std::size_t cap) {
  check_term(alg.signature(), eq.lhs);
  check_term(alg.signature(), eq.rhs);
  const auto vars = variables(eq);
  if (!bounded_power(alg.size(), vars.size(), cap)) throw CapExceededError("environments", cap);
  SatResult r;
  Environment env;
  for (const auto& x : vars) env.bind(x, 0);
  for_each_tuple(alg.size(), vars.size(), [&](std::span<const Elem> vals) {
    if (!r.holds) return;
    for (std::size_t i = 0; i < vars.size(); ++i) env.bind(vars[i], vals[i]);
    if (evaluate(alg, eq.lhs, env) != evaluate(alg, eq.rhs, env)) {
      r.holds = false;
      r.counterexample = env;
    }
  });
  return r;
}

ClassSatResult class_satisfies(std::span<const FiniteAlgebra> k, const Equation& eq,
                               std::size_t cap) {
  ClassSatResult r;
  for (std::size_t i = 0; i < k.size(); ++i) {
    auto s = satisfies(k[i], eq, cap);
    if (!s.holds) {
      r.holds = false;
      r.counterexample = std::move(s.counterexample);
      r.failing_algebra = i;
      break;
    }
  }
  return r;
}

ModResult mod_check(const FiniteAlgebra& alg, std::span<const Equation> e, std::size_t cap) {
  ModResult r;
  for (std::size_t i = 0; i < e.size(); ++i) {
    auto s = satisfies(alg, e[i], cap);
    if (!s.holds) {
      r.holds = false;
      r.counterexample = std::move(s.counterexample);
      r.failing_equation = i;
      break;
    }
  }
  return r;
}

std::vector<Equation> theory_upto(const Signature& sig, std::span<const FiniteAlgebra> k,
                                  std::span<const std::string> vars, std::size_t depth,
                                  const Caps& caps) {
  for (const auto& a : k) {
    if (a.signature() != sig) {
      throw Error(ErrorKind::SignatureMismatch, "class member signature differs");
    }
  }
  const auto terms = enumerate_terms(sig, vars, depth, caps.search);

  // Two terms agree on every member under every environment over `vars` iff
  // their evaluation fingerprints coincide. Every environment over the
  // equation's own variables extends to one over `vars` (carriers are
  // nonempty), so this matches class_satisfies.
  std::vector<std::vector<Environment>> envs;
  std::size_t cells = 0;
  for (const auto& a : k) {
    envs.push_back(all_environments(vars, a.size(), caps.search));
    cells += envs.back().size();
    if (cells > caps.cells) throw CapExceededError("cells", caps.cells);
  }
  std::vector<std::vector<Elem>> prints;
  prints.reserve(terms.size());
  for (const auto& t : terms) {
    std::vector<Elem> fp;
    fp.reserve(cells);
    for (std::size_t i = 0; i < k.size(); ++i) {
      for (const auto& env : envs[i]) fp.push_back(evaluate(k[i], t, env));
    }
    prints.push_back(std::move(fp));
  }
  std::map<std::vector<Elem>, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < terms.size(); ++i) classes[prints[i]].push_back(i);

  std::vector<Equation> out;
  for (std::size_t p = 0; p < terms.size(); ++p) {
    for (std::size_t q : classes[prints[p]]) {
      if (out.size() >= caps.search) throw CapExceededError("search", caps.search);
      out.push_back({terms[p], terms[q]});
    }
  }
  return out;
}

}  // namespace ualg
