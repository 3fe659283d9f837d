#include "ualg/free.hpp"

#include <algorithm>

#include "closure_order.hpp"

namespace ualg {

Elem FreeAlgebra::generator(const std::string& x) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == x) return gens_[i];
  }
  throw Error(ErrorKind::UnboundVariable, "?" + x + " is not a generator of the free algebra");
}

std::optional<Elem> FreeAlgebra::find(std::span<const Elem> tuple) const {
  auto it = by_tuple_.find(std::vector<Elem>(tuple.begin(), tuple.end()));
  if (it == by_tuple_.end()) return std::nullopt;
  return it->second;
}

FreeAlgebra build_free(std::span<const FiniteAlgebra> k, std::span<const std::string> vars,
                       const Signature& sig, const Caps& caps) {
  for (const auto& a : k) {
    if (a.signature() != sig) {
      throw Error(ErrorKind::SignatureMismatch, "class member signature differs");
    }
  }
  if (vars.empty() && !sig.has_constants()) {
    throw Error(ErrorKind::EmptyCarrier, "no variables and no constants");
  }
  FreeAlgebra f;
  f.vars_.assign(vars.begin(), vars.end());
  f.k_.assign(k.begin(), k.end());
  for (std::size_t i = 0; i < k.size(); ++i) {
    for (auto& env : all_environments(vars, k[i].size(), caps.cells)) {
      if (f.index_.size() >= caps.cells) throw CapExceededError("cells", caps.cells);
      f.index_.push_back({i, std::move(env)});
    }
  }
  const std::size_t width = f.index_.size();

  auto add = [&](std::vector<Elem> tuple, const Term& rep) -> Elem {
    auto [it, inserted] = f.by_tuple_.try_emplace(tuple, static_cast<Elem>(f.elems_.size()));
    if (inserted) {
      if (f.elems_.size() >= caps.carrier) throw CapExceededError("carrier", caps.carrier);
      if ((f.elems_.size() + 1) * width > caps.cells) throw CapExceededError("cells", caps.cells);
      f.elems_.push_back({std::move(tuple), rep, std::nullopt});
    }
    return it->second;
  };

  for (std::size_t v = 0; v < vars.size(); ++v) {
    std::vector<Elem> tuple(width);
    for (std::size_t c = 0; c < width; ++c) tuple[c] = *f.index_[c].env.lookup(vars[v]);
    const Elem e = add(std::move(tuple), Term::var(vars[v]));
    if (!f.elems_[e].generator) f.elems_[e].generator = vars[v];
    f.gens_.push_back(e);
  }

  std::vector<Elem> args(sig.max_arity());
  auto pointwise = [&](std::size_t op, std::span<const Elem> labels) {
    std::vector<Elem> tuple(width);
    for (std::size_t c = 0; c < width; ++c) {
      for (std::size_t i = 0; i < labels.size(); ++i) args[i] = f.elems_[labels[i]].tuple[c];
      tuple[c] = k[f.index_[c].algebra].apply(op, std::span<const Elem>(args.data(), labels.size()));
    }
    return tuple;
  };

  for (std::size_t op = 0; op < sig.size(); ++op) {
    if (sig[op].arity == 0) add(pointwise(op, {}), Term::app(sig[op].name));
  }
  detail::for_each_new_application(
      sig, [&] { return f.elems_.size(); },
      [&](std::size_t op, std::span<const Elem> labels) {
        auto tuple = pointwise(op, labels);
        if (f.by_tuple_.count(tuple)) return;
        std::vector<Term> children;
        for (Elem l : labels) children.push_back(f.elems_[l].representative);
        add(std::move(tuple), Term::app(sig[op].name, std::move(children)));
      });

  auto tables = detail::build_tables(sig, f.elems_.size(), [&](std::size_t op, std::span<const Elem> labels) {
    return f.by_tuple_.at(pointwise(op, labels));
  });
  std::string name = "F";
  for (const auto& a : k) name += "_" + a.name();
  f.alg_ = FiniteAlgebra(sig, f.elems_.size(), std::move(tables), std::move(name));
  return f;
}

std::vector<Elem> evaluation_tuple(const FreeAlgebra& f, const Term& t) {
  for (const auto& x : variables(t)) {
    if (std::find(f.variables().begin(), f.variables().end(), x) == f.variables().end()) {
      throw Error(ErrorKind::UnboundVariable, "?" + x + " is not a variable of the free algebra");
    }
  }
  check_term(f.algebra().signature(), t);
  std::vector<Elem> tuple;
  tuple.reserve(f.index().size());
  for (const auto& ix : f.index()) {
    tuple.push_back(evaluate(f.generating_class()[ix.algebra], t, ix.env));
  }
  return tuple;
}

Elem nat_epi(const FreeAlgebra& f, const Term& t) {
  auto e = f.find(evaluation_tuple(f, t));
  if (!e) throw Error(ErrorKind::InvalidArgument, "term evaluates outside the free algebra");
  return *e;
}

UniversalMapResult universal_map(const FreeAlgebra& f, const FiniteAlgebra& b,
                                 const Environment& assign) {
  std::vector<Elem> img;
  img.reserve(f.elements().size());
  for (const auto& e : f.elements()) img.push_back(evaluate(b, e.representative, assign));
  CarrierMap candidate(std::move(img), b.size());
  auto cls = classify(f.algebra(), b, candidate);
  if (!cls.is_hom) {
    return UniversalMapFailure{UniversalMapFailure::Reason::NotHom, cls.witness, std::nullopt,
                               std::move(candidate)};
  }
  if (!cls.surjective) {
    std::vector<bool> hit(b.size(), false);
    for (Elem v : candidate.image()) hit[v] = true;
    const auto missing = static_cast<Elem>(std::find(hit.begin(), hit.end(), false) - hit.begin());
    return UniversalMapFailure{UniversalMapFailure::Reason::NotSurjective, std::nullopt, missing,
                               std::move(candidate)};
  }
  return candidate;
}

std::vector<std::string> numbered_variables(std::size_t n, const std::string& prefix) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

}  // namespace ualg
