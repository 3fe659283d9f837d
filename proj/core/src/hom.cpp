#include "ualg/hom.hpp"

#include <algorithm>

namespace ualg {

CarrierMap::CarrierMap(std::vector<Elem> image, std::size_t codomain_size)
    : image_(std::move(image)), codomain_size_(codomain_size) {
  for (Elem v : image_) {
    if (v >= codomain_size_) {
      throw Error(ErrorKind::OutOfRange, "map value " + std::to_string(v) +
                                             " outside codomain of size " +
                                             std::to_string(codomain_size_));
    }
  }
}

CarrierMap CarrierMap::identity(std::size_t n) {
  std::vector<Elem> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Elem>(i);
  return CarrierMap(std::move(img), n);
}

CarrierMap CarrierMap::constant(std::size_t domain_size, Elem value, std::size_t codomain_size) {
  return CarrierMap(std::vector<Elem>(domain_size, value), codomain_size);
}

std::string CarrierMap::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(image_[i]);
  }
  return s;
}

std::string HomWitness::to_string() const {
  std::string s = symbol;
  for (Elem a : args) s += " " + std::to_string(a);
  return s;
}

void check_map_shape(const FiniteAlgebra& src, const FiniteAlgebra& dst, const CarrierMap& m) {
  if (src.signature() != dst.signature()) {
    throw Error(ErrorKind::SignatureMismatch, "source and target signatures differ");
  }
  if (m.domain_size() != src.size() || m.codomain_size() != dst.size()) {
    throw Error(ErrorKind::CarrierMismatch,
                "map " + std::to_string(m.domain_size()) + " -> " +
                    std::to_string(m.codomain_size()) + " does not fit algebras of sizes " +
                    std::to_string(src.size()) + " and " + std::to_string(dst.size()));
  }
}

bool is_injective(const CarrierMap& m) {
  std::vector<bool> seen(m.codomain_size(), false);
  for (Elem v : m.image()) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool is_surjective(const CarrierMap& m) {
  std::vector<bool> seen(m.codomain_size(), false);
  std::size_t hit = 0;
  for (Elem v : m.image()) {
    if (!seen[v]) {
      seen[v] = true;
      ++hit;
    }
  }
  return hit == m.codomain_size();
}

HomClassification classify(const FiniteAlgebra& src, const FiniteAlgebra& dst,
                           const CarrierMap& m) {
  check_map_shape(src, dst, m);
  HomClassification out;
  out.injective = is_injective(m);
  out.surjective = is_surjective(m);
  const auto& sig = src.signature();
  std::vector<Elem> mapped(sig.max_arity());
  for (std::size_t op = 0; op < sig.size() && !out.witness; ++op) {
    const std::size_t k = sig[op].arity;
    const auto src_table = src.table(op);
    std::size_t idx = 0;
    for_each_tuple(src.size(), k, [&](std::span<const Elem> args) {
      if (out.witness) return;
      for (std::size_t i = 0; i < k; ++i) mapped[i] = m(args[i]);
      const Elem lhs = m(src_table[idx++]);
      const Elem rhs = dst.apply(op, std::span<const Elem>(mapped.data(), k));
      if (lhs != rhs) out.witness = HomWitness{sig[op].name, {args.begin(), args.end()}};
    });
  }
  out.is_hom = !out.witness;
  return out;
}

CarrierMap compose(const CarrierMap& after, const CarrierMap& first) {
  if (first.codomain_size() != after.domain_size()) {
    throw Error(ErrorKind::CarrierMismatch, "cannot compose: codomain of size " +
                                                std::to_string(first.codomain_size()) +
                                                " vs domain of size " +
                                                std::to_string(after.domain_size()));
  }
  std::vector<Elem> img(first.domain_size());
  for (std::size_t a = 0; a < img.size(); ++a) img[a] = after(first(static_cast<Elem>(a)));
  return CarrierMap(std::move(img), after.codomain_size());
}

std::vector<std::pair<Elem, Elem>> kernel_pairs(const CarrierMap& m) {
  std::vector<std::pair<Elem, Elem>> out;
  const auto n = static_cast<Elem>(m.domain_size());
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (m(x) == m(y)) out.emplace_back(x, y);
    }
  }
  return out;
}

namespace {

void require_hom(const FiniteAlgebra& src, const FiniteAlgebra& dst, const CarrierMap& m) {
  auto cls = classify(src, dst, m);
  if (!cls.is_hom) throw NotHomError(*cls.witness);
}

}  // namespace

CarrierMap hom_factor(const FiniteAlgebra& a, const FiniteAlgebra& b, const FiniteAlgebra& c,
                      const CarrierMap& g, const CarrierMap& h) {
  require_hom(a, c, g);
  require_hom(a, b, h);
  const std::size_t nb = b.size();
  constexpr Elem none = static_cast<Elem>(-1);
  std::vector<Elem> least_preimage(nb, none);
  for (Elem x = 0; x < a.size(); ++x) {
    if (least_preimage[h(x)] == none) least_preimage[h(x)] = x;
  }
  for (Elem y = 0; y < nb; ++y) {
    if (least_preimage[y] == none) {
      throw Error(ErrorKind::NotSurjective,
                  "h is not surjective: " + std::to_string(y) + " has no preimage");
    }
  }
  // ker h within ker g: every element agrees under g with its fibre's least member.
  for (Elem x = 0; x < a.size(); ++x) {
    const Elem rep = least_preimage[h(x)];
    if (g(rep) != g(x)) throw KernelInclusionError(std::min(rep, x), std::max(rep, x));
  }
  std::vector<Elem> phi(nb);
  for (Elem y = 0; y < nb; ++y) phi[y] = g(least_preimage[y]);
  return CarrierMap(std::move(phi), c.size());
}

namespace {

struct Constraint {
  std::size_t op;
  std::size_t args;  // row-major index into the source table
  Elem result;
};

class HomSearcher {
 public:
  HomSearcher(const FiniteAlgebra& src, const FiniteAlgebra& dst, const HomSearch& opts)
      : src_(src), dst_(dst), opts_(opts), by_level_(src.size()),
        assign_(src.size(), 0), used_(dst.size(), 0), scratch_(src.signature().max_arity()),
        mapped_(src.signature().max_arity()) {
    const auto& sig = src.signature();
    for (std::size_t op = 0; op < sig.size(); ++op) {
      const auto table = src.table(op);
      std::size_t idx = 0;
      for_each_tuple(src.size(), sig[op].arity, [&](std::span<const Elem> args) {
        Elem level = table[idx];
        for (Elem a : args) level = std::max(level, a);
        by_level_[level].push_back({op, idx, table[idx]});
        ++idx;
      });
    }
  }

  std::vector<CarrierMap> run() {
    if (src_.size() > 0) descend(0);
    return std::move(found_);
  }

 private:
  bool consistent(std::size_t level) {
    const auto& sig = src_.signature();
    for (const auto& c : by_level_[level]) {
      const std::size_t k = sig[c.op].arity;
      std::span<Elem> args(scratch_.data(), k);
      row_major_decode(c.args, src_.size(), args);
      for (std::size_t i = 0; i < k; ++i) mapped_[i] = assign_[args[i]];
      if (dst_.apply(c.op, std::span<const Elem>(mapped_.data(), k)) != assign_[c.result]) {
        return false;
      }
    }
    return true;
  }

  // Returns false once enough results are collected.
  bool descend(std::size_t pos) {
    const std::size_t n = src_.size();
    if (pos == n) {
      found_.emplace_back(assign_, dst_.size());
      return found_.size() < opts_.max_results;
    }
    Elem lo = 0;
    Elem hi = static_cast<Elem>(dst_.size());
    if (pos < opts_.fixed.size() && opts_.fixed[pos]) {
      lo = *opts_.fixed[pos];
      hi = lo + 1;
      if (lo >= dst_.size()) return true;
    }
    for (Elem v = lo; v < hi; ++v) {
      if (++nodes_ > opts_.cap) throw CapExceededError("search", opts_.cap);
      if (opts_.injective && used_[v]) continue;
      assign_[pos] = v;
      if (used_[v]++ == 0) ++distinct_;
      bool keep_going = true;
      const bool can_cover = !opts_.surjective || dst_.size() - distinct_ <= n - pos - 1;
      if (can_cover && consistent(pos)) keep_going = descend(pos + 1);
      if (--used_[v] == 0) --distinct_;
      if (!keep_going) return false;
    }
    return true;
  }

  const FiniteAlgebra& src_;
  const FiniteAlgebra& dst_;
  const HomSearch& opts_;
  std::vector<std::vector<Constraint>> by_level_;
  std::vector<Elem> assign_;
  std::vector<std::size_t> used_;
  std::size_t distinct_ = 0;
  std::vector<Elem> scratch_;
  std::vector<Elem> mapped_;
  std::size_t nodes_ = 0;
  std::vector<CarrierMap> found_;
};

}  // namespace

std::vector<CarrierMap> find_homs(const FiniteAlgebra& src, const FiniteAlgebra& dst,
                                  const HomSearch& constraints) {
  if (src.signature() != dst.signature()) {
    throw Error(ErrorKind::SignatureMismatch, "source and target signatures differ");
  }
  if (constraints.max_results == 0) return {};
  if (constraints.injective && src.size() > dst.size()) return {};
  if (constraints.surjective && dst.size() > src.size()) return {};
  return HomSearcher(src, dst, constraints).run();
}

std::optional<CarrierMap> find_isomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b,
                                           std::size_t cap) {
  if (a.size() != b.size() || a.signature() != b.signature()) return std::nullopt;
  HomSearch opts;
  opts.injective = true;
  opts.surjective = true;
  opts.max_results = 1;
  opts.cap = cap;
  auto found = find_homs(a, b, opts);
  if (found.empty()) return std::nullopt;
  return found.front();
}

CarrierMap inverse(const CarrierMap& bijection) {
  if (bijection.domain_size() != bijection.codomain_size() || !is_injective(bijection)) {
    throw Error(ErrorKind::InvalidArgument, "map is not a bijection");
  }
  std::vector<Elem> inv(bijection.domain_size());
  for (Elem a = 0; a < bijection.domain_size(); ++a) inv[bijection(a)] = a;
  return CarrierMap(std::move(inv), bijection.domain_size());
}

}  // namespace ualg
