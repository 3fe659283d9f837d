#include "ualg/entail.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ualg {

Proof Proof::make(Node node) {
  std::size_t h = 0;
  for (const auto& p : node.premises) h = std::max(h, p.height());
  node.height = h + 1;
  return Proof(std::make_shared<const Node>(std::move(node)));
}

Proof Proof::hyp(std::size_t index) {
  Node n;
  n.kind = Kind::Hyp;
  n.index = index;
  return make(std::move(n));
}

Proof Proof::refl(Term t) {
  Node n;
  n.kind = Kind::Refl;
  n.term = std::move(t);
  return make(std::move(n));
}

Proof Proof::sym(Proof p) {
  Node n;
  n.kind = Kind::Sym;
  n.premises.push_back(std::move(p));
  return make(std::move(n));
}

Proof Proof::trans(Proof left, Proof right) {
  Node n;
  n.kind = Kind::Trans;
  n.premises.push_back(std::move(left));
  n.premises.push_back(std::move(right));
  return make(std::move(n));
}

Proof Proof::app(std::string symbol, std::vector<Proof> args) {
  Node n;
  n.kind = Kind::App;
  n.symbol = std::move(symbol);
  n.premises = std::move(args);
  return make(std::move(n));
}

Proof Proof::sub(Proof p, Substitution sigma) {
  Node n;
  n.kind = Kind::Sub;
  n.premises.push_back(std::move(p));
  n.sigma = std::move(sigma);
  return make(std::move(n));
}

namespace {

void append_proof(const Proof& p, std::string& out) {
  switch (p.kind()) {
    case Proof::Kind::Hyp:
      out += "(hyp " + std::to_string(p.hypothesis()) + ")";
      return;
    case Proof::Kind::Refl:
      out += "(refl " + p.term().to_string() + ")";
      return;
    case Proof::Kind::Sym:
      out += "(sym ";
      append_proof(p.premises()[0], out);
      out += ")";
      return;
    case Proof::Kind::Trans:
      out += "(trans ";
      append_proof(p.premises()[0], out);
      out += " ";
      append_proof(p.premises()[1], out);
      out += ")";
      return;
    case Proof::Kind::App:
      out += "(app " + p.symbol();
      for (const auto& q : p.premises()) {
        out += " ";
        append_proof(q, out);
      }
      out += ")";
      return;
    case Proof::Kind::Sub: {
      out += "(sub ";
      append_proof(p.premises()[0], out);
      out += " (";
      bool first = true;
      for (const auto& [x, t] : p.substitution().entries()) {
        if (!first) out += " ";
        first = false;
        out += "(" + x + " " + t.to_string() + ")";
      }
      out += "))";
      return;
    }
  }
}

}  // namespace

std::string Proof::to_string() const {
  std::string s;
  append_proof(*this, s);
  return s;
}

bool operator==(const Proof& a, const Proof& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.kind == y.kind && x.index == y.index && x.term == y.term && x.symbol == y.symbol &&
         x.premises == y.premises && x.sigma == y.sigma;
}

TransMismatchError::TransMismatchError(Term left_middle, Term right_middle)
    : Error(ErrorKind::TransMismatch, "trans middle terms differ: " + left_middle.to_string() +
                                          " vs " + right_middle.to_string()),
      left_(std::move(left_middle)),
      right_(std::move(right_middle)) {}

Equation check_proof(const Signature& sig, std::span<const Equation> axioms, const Proof& p) {
  switch (p.kind()) {
    case Proof::Kind::Hyp:
      if (p.hypothesis() >= axioms.size()) {
        throw Error(ErrorKind::BadHypothesis,
                    "hypothesis " + std::to_string(p.hypothesis()) + " out of range (" +
                        std::to_string(axioms.size()) + " axioms)");
      }
      return axioms[p.hypothesis()];
    case Proof::Kind::Refl:
      check_term(sig, p.term());
      return {p.term(), p.term()};
    case Proof::Kind::Sym:
      return check_proof(sig, axioms, p.premises()[0]).swapped();
    case Proof::Kind::Trans: {
      auto left = check_proof(sig, axioms, p.premises()[0]);
      auto right = check_proof(sig, axioms, p.premises()[1]);
      if (left.rhs != right.lhs) throw TransMismatchError(left.rhs, right.lhs);
      return {left.lhs, right.rhs};
    }
    case Proof::Kind::App: {
      const std::size_t op = sig.index_of(p.symbol());
      if (sig[op].arity != p.premises().size()) {
        throw Error(ErrorKind::ArityMismatch,
                    "app " + p.symbol() + " expects " + std::to_string(sig[op].arity) +
                        " premises, got " + std::to_string(p.premises().size()));
      }
      std::vector<Term> lhs, rhs;
      for (const auto& q : p.premises()) {
        auto e = check_proof(sig, axioms, q);
        lhs.push_back(std::move(e.lhs));
        rhs.push_back(std::move(e.rhs));
      }
      return {Term::app(p.symbol(), std::move(lhs)), Term::app(p.symbol(), std::move(rhs))};
    }
    case Proof::Kind::Sub: {
      for (const auto& [x, t] : p.substitution().entries()) check_term(sig, t);
      return substitute(p.substitution(), check_proof(sig, axioms, p.premises()[0]));
    }
  }
  throw Error(ErrorKind::InvalidArgument, "malformed proof");
}

namespace {

bool match_into(const Term& pattern, const Term& target, Substitution& sigma) {
  if (pattern.is_var()) {
    if (const Term* bound = sigma.find(pattern.name())) return *bound == target;
    sigma.set(pattern.name(), target);
    return true;
  }
  if (target.is_var() || pattern.name() != target.name() ||
      pattern.children().size() != target.children().size()) {
    return false;
  }
  for (std::size_t i = 0; i < pattern.children().size(); ++i) {
    if (!match_into(pattern.children()[i], target.children()[i], sigma)) return false;
  }
  return true;
}

std::optional<Substitution> match_equation(const Equation& pattern, const Equation& target) {
  Substitution sigma;
  if (match_into(pattern.lhs, target.lhs, sigma) && match_into(pattern.rhs, target.rhs, sigma)) {
    return sigma;
  }
  return std::nullopt;
}

struct BudgetExhausted {};

class ProofSearcher {
 public:
  ProofSearcher(const Signature& sig, std::span<const Equation> axioms, const SearchLimits& limits)
      : sig_(sig), axioms_(axioms), limits_(limits) {}

  std::optional<Proof> prove(const Equation& goal, std::size_t depth) {
    if (depth == 0) return std::nullopt;
    if (auto it = proven_.find(goal); it != proven_.end() && it->second.height() <= depth) {
      return it->second;
    }
    if (auto it = failed_.find(goal); it != failed_.end() && it->second >= depth) {
      return std::nullopt;
    }
    if (++nodes_ > limits_.node_budget) throw BudgetExhausted{};
    auto found = attempt(goal, depth);
    if (found) {
      proven_.insert_or_assign(goal, *found);
    } else {
      auto& f = failed_[goal];
      f = std::max(f, depth);
    }
    return found;
  }

  std::size_t nodes() const noexcept { return nodes_; }

 private:
  std::optional<Proof> attempt(const Equation& goal, std::size_t depth) {
    if (goal.lhs == goal.rhs) return Proof::refl(goal.lhs);
    for (std::size_t i = 0; i < axioms_.size(); ++i) {
      if (axioms_[i] == goal) return Proof::hyp(i);
    }
    if (depth < 2) return std::nullopt;
    for (std::size_t i = 0; i < axioms_.size(); ++i) {
      if (axioms_[i] == goal.swapped()) return Proof::sym(Proof::hyp(i));
    }
    for (std::size_t i = 0; i < axioms_.size(); ++i) {
      if (auto s = match_equation(axioms_[i], goal)) return Proof::sub(Proof::hyp(i), *s);
    }
    if (depth >= 3) {
      for (std::size_t i = 0; i < axioms_.size(); ++i) {
        if (auto s = match_equation(axioms_[i], goal.swapped())) {
          return Proof::sym(Proof::sub(Proof::hyp(i), *s));
        }
      }
    }
    if (auto p = congruence(goal, depth)) return p;
    return transitivity(goal, depth);
  }

  std::optional<Proof> congruence(const Equation& goal, std::size_t depth) {
    const Term& l = goal.lhs;
    const Term& r = goal.rhs;
    if (l.is_var() || r.is_var() || l.name() != r.name() || l.children().empty() ||
        l.children().size() != r.children().size()) {
      return std::nullopt;
    }
    std::vector<Proof> args;
    for (std::size_t i = 0; i < l.children().size(); ++i) {
      auto p = prove({l.children()[i], r.children()[i]}, depth - 1);
      if (!p) return std::nullopt;
      args.push_back(std::move(*p));
    }
    return Proof::app(l.name(), std::move(args));
  }

  std::optional<Proof> transitivity(const Equation& goal, std::size_t depth) {
    std::set<Term> middles;
    one_step_rewrites(goal.lhs, middles);
    one_step_rewrites(goal.rhs, middles);
    middles.erase(goal.lhs);
    middles.erase(goal.rhs);
    for (const auto& m : middles) {
      auto left = prove({goal.lhs, m}, depth - 1);
      if (!left) continue;
      auto right = prove({m, goal.rhs}, depth - 1);
      if (right) return Proof::trans(std::move(*left), std::move(*right));
    }
    return std::nullopt;
  }

  // Terms reachable from t by rewriting one subterm with an axiom instance,
  // in either direction.
  void one_step_rewrites(const Term& t, std::set<Term>& out) {
    for (const auto& ax : axioms_) {
      for (const auto& rule : {ax, ax.swapped()}) {
        if (auto s = match(rule.lhs, t)) {
          auto r = substitute(*s, rule.rhs);
          if (r.node_count() <= limits_.max_term_size) out.insert(std::move(r));
        }
      }
    }
    if (t.is_var()) return;
    for (std::size_t i = 0; i < t.children().size(); ++i) {
      std::set<Term> inner;
      one_step_rewrites(t.children()[i], inner);
      for (const auto& c : inner) {
        auto children = t.children();
        children[i] = c;
        auto r = Term::app(t.name(), std::move(children));
        if (r.node_count() <= limits_.max_term_size) out.insert(std::move(r));
      }
    }
  }

  const Signature& sig_;
  std::span<const Equation> axioms_;
  const SearchLimits& limits_;
  std::map<Equation, Proof> proven_;
  std::map<Equation, std::size_t> failed_;
  std::size_t nodes_ = 0;
};

}  // namespace

std::optional<Substitution> match(const Term& pattern, const Term& target) {
  Substitution sigma;
  if (match_into(pattern, target, sigma)) return sigma;
  return std::nullopt;
}

std::string_view to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Refuted: return "refuted";
    case SearchStatus::BudgetExhausted: return "budget-exhausted";
  }
  return "?";
}

SearchResult search_proof(const Signature& sig, std::span<const Equation> axioms,
                          const Equation& goal, const SearchLimits& limits) {
  if (limits.max_depth == 0 || limits.max_term_size == 0 || limits.node_budget == 0) {
    throw Error(ErrorKind::InvalidArgument, "search limits must be positive");
  }
  check_term(sig, goal.lhs);
  check_term(sig, goal.rhs);
  ProofSearcher searcher(sig, axioms, limits);
  SearchResult r;
  try {
    for (std::size_t d = 1; d <= limits.max_depth; ++d) {
      if (auto p = searcher.prove(goal, d)) {
        r.status = SearchStatus::Found;
        r.proof = std::move(p);
        break;
      }
    }
  } catch (const BudgetExhausted&) {
    r.status = SearchStatus::BudgetExhausted;
  }
  r.nodes = searcher.nodes();
  return r;
}

AuditReport soundness_audit(const Signature& sig, std::span<const Equation> axioms,
                            std::span<const Proof> proofs, std::span<const FiniteAlgebra> pool,
                            std::size_t cap) {
  AuditReport report;
  for (const auto& p : proofs) report.conclusions.push_back(check_proof(sig, axioms, p));
  std::vector<bool> models(pool.size());
  for (std::size_t a = 0; a < pool.size(); ++a) models[a] = mod_check(pool[a], axioms, cap).holds;
  for (std::size_t i = 0; i < proofs.size(); ++i) {
    for (std::size_t a = 0; a < pool.size(); ++a) {
      AuditEntry e{i, a, report.conclusions[i], models[a], {}};
      if (models[a]) {
        e.sat = satisfies(pool[a], e.conclusion, cap);
        if (!e.sat.holds) ++report.violations;
      }
      report.entries.push_back(std::move(e));
    }
  }
  return report;
}

}  // namespace ualg
