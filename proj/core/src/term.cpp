#include "ualg/term.hpp"

#include <algorithm>

namespace ualg {

Term Term::var(std::string name) {
  return Term(std::make_shared<const Node>(Node{Kind::Var, std::move(name), {}, 0, 1}));
}

Term Term::app(std::string symbol, std::vector<Term> children) {
  std::size_t depth = 0;
  std::size_t nodes = 1;
  for (const auto& c : children) {
    depth = std::max(depth, c.depth() + 1);
    nodes += c.node_count();
  }
  return Term(std::make_shared<const Node>(
      Node{Kind::App, std::move(symbol), std::move(children), depth, nodes}));
}

namespace {

void append_term(const Term& t, std::string& out) {
  if (t.is_var()) {
    out += '?';
    out += t.name();
    return;
  }
  out += t.name();
  if (t.children().empty()) return;
  out += '(';
  for (std::size_t i = 0; i < t.children().size(); ++i) {
    if (i) out += ',';
    append_term(t.children()[i], out);
  }
  out += ')';
}

}  // namespace

std::string Term::to_string() const {
  std::string s;
  append_term(*this, s);
  return s;
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.node_count() != b.node_count() || a.name() != b.name()) {
    return false;
  }
  return a.children() == b.children();
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  if (auto c = a.name().compare(b.name()); c != 0) {
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  const auto& ac = a.children();
  const auto& bc = b.children();
  return std::lexicographical_compare_three_way(ac.begin(), ac.end(), bc.begin(), bc.end());
}

void collect_variables(const Term& t, std::vector<std::string>& out) {
  if (t.is_var()) {
    if (std::find(out.begin(), out.end(), t.name()) == out.end()) out.push_back(t.name());
    return;
  }
  for (const auto& c : t.children()) collect_variables(c, out);
}

std::vector<std::string> variables(const Term& t) {
  std::vector<std::string> out;
  collect_variables(t, out);
  return out;
}

std::vector<std::string> variables(const Equation& eq) {
  std::vector<std::string> out;
  collect_variables(eq.lhs, out);
  collect_variables(eq.rhs, out);
  return out;
}

void check_term(const Signature& sig, const Term& t) {
  if (t.is_var()) return;
  const std::size_t op = sig.index_of(t.name());
  if (sig[op].arity != t.children().size()) {
    throw Error(ErrorKind::ArityMismatch,
                "symbol '" + t.name() + "' expects " + std::to_string(sig[op].arity) +
                    " arguments, got " + std::to_string(t.children().size()));
  }
  for (const auto& c : t.children()) check_term(sig, c);
}

const Term* Substitution::find(const std::string& var) const {
  auto it = map_.find(var);
  return it == map_.end() ? nullptr : &it->second;
}

Term Substitution::operator()(const std::string& var) const {
  if (const Term* t = find(var)) return *t;
  return Term::var(var);
}

Term substitute(const Substitution& sigma, const Term& t) {
  if (t.is_var()) return sigma(t.name());
  std::vector<Term> children;
  children.reserve(t.children().size());
  for (const auto& c : t.children()) children.push_back(substitute(sigma, c));
  return Term::app(t.name(), std::move(children));
}

Equation substitute(const Substitution& sigma, const Equation& eq) {
  return {substitute(sigma, eq.lhs), substitute(sigma, eq.rhs)};
}

Substitution compose(const Substitution& outer, const Substitution& inner) {
  Substitution out;
  for (const auto& [x, t] : inner.entries()) out.set(x, substitute(outer, t));
  for (const auto& [x, t] : outer.entries()) {
    if (!inner.find(x)) out.set(x, t);
  }
  return out;
}

Environment::Environment(std::initializer_list<std::pair<std::string, Elem>> init) {
  for (const auto& [x, v] : init) bind(x, v);
}

void Environment::bind(const std::string& var, Elem value) {
  for (auto& b : bindings_) {
    if (b.first == var) {
      b.second = value;
      return;
    }
  }
  bindings_.emplace_back(var, value);
}

std::optional<Elem> Environment::lookup(const std::string& var) const {
  for (const auto& b : bindings_) {
    if (b.first == var) return b.second;
  }
  return std::nullopt;
}

std::string Environment::to_string() const {
  std::string s;
  for (const auto& [x, v] : bindings_) {
    if (!s.empty()) s += ' ';
    s += x + "=" + std::to_string(v);
  }
  return s;
}

namespace {

Elem lookup_checked(const FiniteAlgebra& alg, const Environment& rho, const std::string& x) {
  auto v = rho.lookup(x);
  if (!v) throw Error(ErrorKind::UnboundVariable, "unbound variable ?" + x);
  if (*v >= alg.size()) {
    throw Error(ErrorKind::OutOfRange, "environment value " + std::to_string(*v) +
                                           " for ?" + x + " outside carrier");
  }
  return *v;
}

}  // namespace

Elem evaluate(const FiniteAlgebra& alg, const Term& t, const Environment& rho) {
  if (t.is_var()) return lookup_checked(alg, rho, t.name());
  std::vector<Elem> args;
  args.reserve(t.children().size());
  for (const auto& c : t.children()) args.push_back(evaluate(alg, c, rho));
  return alg.apply_op(t.name(), args);
}

Elem free_lift(const FiniteAlgebra& alg, const Environment& h, const Term& t) {
  // Post-order walk with an explicit frame stack; values accumulate on `vals`.
  struct Frame {
    const Term* term;
    std::size_t next_child;
  };
  std::vector<Frame> stack{{&t, 0}};
  std::vector<Elem> vals;
  while (!stack.empty()) {
    Frame& f = stack.back();
    const Term& cur = *f.term;
    if (cur.is_var()) {
      vals.push_back(lookup_checked(alg, h, cur.name()));
      stack.pop_back();
      continue;
    }
    if (f.next_child < cur.children().size()) {
      const Term* child = &cur.children()[f.next_child++];
      stack.push_back({child, 0});
      continue;
    }
    const std::size_t k = cur.children().size();
    const std::size_t op = alg.signature().index_of(cur.name());
    if (alg.signature()[op].arity != k) {
      throw Error(ErrorKind::ArityMismatch, "symbol '" + cur.name() + "' arity mismatch");
    }
    const Elem r = alg.apply(op, std::span<const Elem>(vals).subspan(vals.size() - k));
    vals.resize(vals.size() - k);
    vals.push_back(r);
    stack.pop_back();
  }
  return vals.back();
}

std::vector<Environment> all_environments(std::span<const std::string> vars, std::size_t size,
                                          std::size_t cap) {
  const auto count = bounded_power(size, vars.size(), cap);
  if (!count) throw CapExceededError("environments", cap);
  std::vector<Environment> out;
  out.reserve(*count);
  for_each_tuple(size, vars.size(), [&](std::span<const Elem> vals) {
    Environment env;
    for (std::size_t i = 0; i < vars.size(); ++i) env.bind(vars[i], vals[i]);
    out.push_back(std::move(env));
  });
  return out;
}

std::vector<Term> enumerate_terms(const Signature& sig, std::span<const std::string> vars,
                                  std::size_t max_depth, std::size_t cap) {
  std::vector<Term> out;
  auto push = [&](Term t) {
    if (out.size() >= cap) throw CapExceededError("terms", cap);
    out.push_back(std::move(t));
  };
  for (const auto& x : vars) push(Term::var(x));
  for (const auto& op : sig.ops()) {
    if (op.arity == 0) push(Term::app(op.name));
  }
  std::size_t below = 0;  // terms of depth < d-1
  for (std::size_t d = 1; d <= max_depth; ++d) {
    const std::size_t upto = out.size();  // terms of depth <= d-1
    if (upto == below) break;             // no new terms at depth d-1
    for (const auto& op : sig.ops()) {
      if (op.arity == 0) continue;
      const auto total = bounded_power(upto, op.arity, cap);
      if (!total || out.size() + *total > cap + *bounded_power(below, op.arity, cap)) {
        throw CapExceededError("terms", cap);
      }
      for_each_tuple(upto, op.arity, [&](std::span<const Elem> idx) {
        if (std::all_of(idx.begin(), idx.end(), [&](Elem i) { return i < below; })) return;
        std::vector<Term> children;
        children.reserve(idx.size());
        for (Elem i : idx) children.push_back(out[i]);
        push(Term::app(op.name, std::move(children)));
      });
    }
    below = upto;
  }
  return out;
}

}  // namespace ualg
