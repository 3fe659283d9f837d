#include "ualg/birkhoff.hpp"

#include "ualg/eqlogic.hpp"
#include "ualg/free.hpp"

namespace ualg {

void PipelineReport::add(std::string name, bool pass, std::string witness) {
  stages.push_back({std::move(name), pass, std::move(witness)});
  overall = overall && pass;
}

std::string PipelineReport::to_text() const {
  std::string s;
  for (const auto& st : stages) {
    s += (st.pass ? "  [pass] " : "  [FAIL] ") + st.name;
    if (!st.witness.empty()) s += ": " + st.witness;
    s += '\n';
  }
  s += overall ? (vacuous ? "result: pass (vacuous)\n" : "result: pass\n") : "result: FAIL\n";
  return s;
}

std::string PipelineReport::to_machine() const {
  std::string s;
  for (const auto& st : stages) {
    s += "STAGE " + st.name + (st.pass ? " PASS" : " FAIL");
    if (!st.witness.empty()) s += " " + st.witness;
    s += '\n';
  }
  return s;
}

namespace {

[[noreturn]] void malformed(const std::string& why) {
  throw Error(ErrorKind::InvalidArgument, "malformed witness: " + why);
}

void require_hom(const FiniteAlgebra& src, const FiniteAlgebra& dst, const CarrierMap& m,
                 const char* what) {
  try {
    auto cls = classify(src, dst, m);
    if (!cls.is_hom) malformed(std::string(what) + " is not a homomorphism at " + cls.witness->to_string());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidArgument) throw;
    malformed(std::string(what) + ": " + e.what());
  }
}

std::string sat_witness(const Equation& eq, const SatResult& r) {
  return "equation \"" + eq.to_string() + "\" env " + r.counterexample->to_string();
}

}  // namespace

PipelineReport verify_invariance(const FiniteAlgebra& a, const Equation& eq,
                                 const InvarianceWitness& witness, const Caps& caps) {
  PipelineReport report;
  std::vector<const FiniteAlgebra*> antecedents{&a};
  FiniteAlgebra derived;
  std::string kind;

  if (const auto* w = std::get_if<IsoWitness>(&witness)) {
    kind = "isomorphism";
    require_hom(a, w->other, w->to, "forward map");
    require_hom(w->other, a, w->from, "backward map");
    if (compose(w->from, w->to) != CarrierMap::identity(a.size()) ||
        compose(w->to, w->from) != CarrierMap::identity(w->other.size())) {
      malformed("maps are not mutually inverse");
    }
    derived = w->other;
  } else if (const auto* w = std::get_if<ImageWitness>(&witness)) {
    kind = "image";
    require_hom(a, w->target, w->map, "image map");
    derived = hom_image(a, w->target, w->map).alg;
  } else if (const auto* w = std::get_if<SubalgebraWitness>(&witness)) {
    kind = "subalgebra";
    require_hom(w->sub, a, w->embedding, "embedding");
    if (!is_injective(w->embedding)) malformed("embedding is not injective");
    derived = w->sub;
  } else {
    const auto& pw = std::get<ProductWitness>(witness);
    kind = "product";
    std::vector<FiniteAlgebra> factors{a};
    for (const auto& o : pw.others) {
      if (o.signature() != a.signature()) malformed("product factor signature differs");
      factors.push_back(o);
      antecedents.push_back(&o);
    }
    try {
      derived = product(factors, caps).alg;
    } catch (const CapExceededError& e) {
      malformed(e.what());
    }
  }
  report.add("witness", true, kind);

  for (std::size_t i = 0; i < antecedents.size(); ++i) {
    auto r = satisfies(*antecedents[i], eq, caps.search);
    if (!r.holds) {
      report.vacuous = true;
      report.add("antecedent", true,
                 "vacuous: factor " + std::to_string(i) + " fails at " + r.counterexample->to_string());
      return report;
    }
  }
  report.add("antecedent", true);
  auto r = satisfies(derived, eq, caps.search);
  report.add("derived", r.holds, r.holds ? "size " + std::to_string(derived.size()) : sat_witness(eq, r));
  return report;
}

std::vector<FiniteAlgebra> enumerate_algebras(const Signature& sig, std::size_t max_size,
                                              std::size_t cap) {
  std::vector<FiniteAlgebra> out;
  for (std::size_t n = 1; n <= max_size; ++n) {
    std::size_t cells = 0;
    std::size_t count = 1;
    for (const auto& op : sig.ops()) {
      auto len = bounded_power(n, op.arity, cap);
      if (!len) throw CapExceededError("algebras", cap);
      auto c = bounded_power(n, *len, cap);
      if (!c || count > cap / *c) throw CapExceededError("algebras", cap);
      count *= *c;
      cells += *len;
    }
    if (out.size() + count > cap) throw CapExceededError("algebras", cap);
    for_each_tuple(n, cells, [&](std::span<const Elem> flat) {
      std::vector<std::vector<Elem>> tables;
      std::size_t at = 0;
      for (const auto& op : sig.ops()) {
        const std::size_t len = *bounded_power(n, op.arity, cap);
        tables.emplace_back(flat.begin() + at, flat.begin() + at + len);
        at += len;
      }
      out.emplace_back(sig, n, std::move(tables), "pool" + std::to_string(out.size()));
    });
  }
  return out;
}

namespace {

std::string mod_witness(const FiniteAlgebra& alg, std::span<const Equation> e, const ModResult& r) {
  return alg.name() + " fails " + sat_witness(e[*r.failing_equation], {false, r.counterexample});
}

std::vector<std::vector<Elem>> nonempty_subsets(std::size_t n) {
  std::vector<std::vector<Elem>> out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<Elem> s;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) s.push_back(static_cast<Elem>(i));
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

PipelineReport eqcl_to_var_check(const Signature& sig, std::span<const Equation> e,
                                 std::size_t pool_size_bound, const Caps& caps) {
  PipelineReport report;
  const auto pool = enumerate_algebras(sig, pool_size_bound, caps.search);
  std::vector<FiniteAlgebra> models;
  for (const auto& a : pool) {
    if (mod_check(a, e, caps.search).holds) models.push_back(a);
  }
  report.add("models", true,
             std::to_string(models.size()) + " of " + std::to_string(pool.size()));

  // Products of pairs of models, with the factors' own subalgebras and images
  // checked alongside.
  std::vector<FiniteAlgebra> derived_from = models;
  std::string failure;
  std::size_t checked = 0;
  for (std::size_t i = 0; i < models.size() && failure.empty(); ++i) {
    for (std::size_t j = i; j < models.size() && failure.empty(); ++j) {
      if (models[i].size() * models[j].size() > caps.carrier) continue;
      const FiniteAlgebra pair[] = {models[i], models[j]};
      auto p = product(pair, caps).alg;
      ++checked;
      if (auto r = mod_check(p, e, caps.search); !r.holds) failure = mod_witness(p, e, r);
      derived_from.push_back(std::move(p));
    }
  }
  report.add("products", failure.empty(),
             failure.empty() ? std::to_string(checked) + " checked" : failure);

  failure.clear();
  checked = 0;
  for (const auto& a : derived_from) {
    if (!bounded_power(2, a.size(), caps.search)) throw CapExceededError("search", caps.search);
    for (const auto& gens : nonempty_subsets(a.size())) {
      auto sub = subalgebra_generate(a, gens).alg;
      ++checked;
      if (auto r = mod_check(sub, e, caps.search); !r.holds) {
        failure = mod_witness(sub, e, r);
        break;
      }
    }
    if (!failure.empty()) break;
  }
  report.add("subalgebras", failure.empty(),
             failure.empty() ? std::to_string(checked) + " checked" : failure);

  failure.clear();
  checked = 0;
  HomSearch onto;
  onto.surjective = true;
  onto.max_results = 1;
  onto.cap = caps.search;
  for (const auto& a : derived_from) {
    for (const auto& c : pool) {
      if (c.size() > a.size()) continue;
      if (find_homs(a, c, onto).empty()) continue;
      ++checked;
      if (auto r = mod_check(c, e, caps.search); !r.holds) {
        failure = "image of " + a.name() + ": " + mod_witness(c, e, r);
        break;
      }
    }
    if (!failure.empty()) break;
  }
  report.add("images", failure.empty(),
             failure.empty() ? std::to_string(checked) + " checked" : failure);
  return report;
}

PipelineReport var_to_eqcl_check(std::span<const FiniteAlgebra> k, const FiniteAlgebra& b,
                                 const HspCertificate& cert, const Caps& caps) {
  PipelineReport report;
  auto checked = hsp_certificate_check(k, b, cert, caps);
  if (!checked.ok) {
    report.add("certificate", false,
               std::string(to_string(checked.failed_stage)) + ": " + checked.message);
    return report;
  }
  report.add("certificate", true);

  const auto vars = numbered_variables(b.size());
  std::optional<FreeAlgebra> f;
  try {
    f = build_free(k, vars, b.signature(), caps);
  } catch (const CapExceededError& e) {
    report.add("free", false, e.what());
    return report;
  }
  report.add("free", true, "size " + std::to_string(f->algebra().size()));

  Environment assign;
  for (std::size_t i = 0; i < vars.size(); ++i) assign.bind(vars[i], static_cast<Elem>(i));
  auto u = universal_map(*f, b, assign);
  if (const auto* m = std::get_if<CarrierMap>(&u)) {
    report.add("universal-map", true, m->to_string());
  } else {
    const auto& fail = std::get<UniversalMapFailure>(u);
    report.add("universal-map", false,
               fail.witness ? "not-hom " + fail.witness->to_string()
                            : "unreached " + std::to_string(*fail.unreached));
  }

  const std::vector<std::string> two{"x", "y"};
  const auto theory = theory_upto(b.signature(), k, two, 2, caps);
  auto r = mod_check(b, theory, caps.search);
  report.add("theory", r.holds,
             r.holds ? std::to_string(theory.size()) + " identities"
                     : sat_witness(theory[*r.failing_equation], {false, r.counterexample}));
  return report;
}

}  // namespace ualg
