#include "ualg/closure.hpp"

#include <algorithm>

#include "closure_order.hpp"

namespace ualg {

ProductCodec::ProductCodec(std::vector<std::size_t> radices) : radices_(std::move(radices)) {
  for (std::size_t r : radices_) size_ *= r;
}

Elem ProductCodec::encode(std::span<const Elem> coords) const {
  std::size_t flat = 0;
  for (std::size_t i = 0; i < radices_.size(); ++i) flat = flat * radices_[i] + coords[i];
  return static_cast<Elem>(flat);
}

void ProductCodec::decode(Elem flat, std::span<Elem> out) const {
  std::size_t rest = flat;
  for (std::size_t i = radices_.size(); i > 0; --i) {
    out[i - 1] = static_cast<Elem>(rest % radices_[i - 1]);
    rest /= radices_[i - 1];
  }
}

std::vector<Elem> ProductCodec::decode(Elem flat) const {
  std::vector<Elem> out(radices_.size());
  decode(flat, out);
  return out;
}

ProductAlgebra product(std::span<const FiniteAlgebra> factors, const Caps& caps) {
  if (factors.empty()) throw Error(ErrorKind::InvalidArgument, "product of no factors");
  const Signature& sig = factors.front().signature();
  std::vector<std::size_t> radices;
  std::size_t size = 1;
  for (const auto& f : factors) {
    if (f.signature() != sig) {
      throw Error(ErrorKind::SignatureMismatch, "product factors have different signatures");
    }
    if (f.size() > caps.carrier || size > caps.carrier / f.size()) {
      throw CapExceededError("carrier", caps.carrier);
    }
    size *= f.size();
    radices.push_back(f.size());
  }
  ProductCodec codec(std::move(radices));
  const std::size_t m = factors.size();
  std::vector<Elem> coords(m * std::max<std::size_t>(sig.max_arity(), 1));
  std::vector<Elem> fargs(sig.max_arity());
  std::vector<Elem> out(m);
  auto tables = detail::build_tables(sig, size, [&](std::size_t op, std::span<const Elem> args) {
    const std::size_t k = args.size();
    for (std::size_t a = 0; a < k; ++a) {
      codec.decode(args[a], std::span<Elem>(coords.data() + a * m, m));
    }
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t a = 0; a < k; ++a) fargs[a] = coords[a * m + i];
      out[i] = factors[i].apply(op, std::span<const Elem>(fargs.data(), k));
    }
    return codec.encode(out);
  });
  std::string name;
  for (const auto& f : factors) name += (name.empty() ? "" : "x") + f.name();
  return {FiniteAlgebra(sig, size, std::move(tables), std::move(name)), std::move(codec)};
}

CarrierMap projection(const ProductAlgebra& p, std::size_t i) {
  std::vector<Elem> img(p.alg.size());
  std::vector<Elem> coords(p.codec.arity());
  for (Elem a = 0; a < img.size(); ++a) {
    p.codec.decode(a, coords);
    img[a] = coords[i];
  }
  return CarrierMap(std::move(img), p.codec.radices()[i]);
}

Subalgebra subalgebra_generate(const FiniteAlgebra& alg, std::span<const Elem> gens) {
  const auto& sig = alg.signature();
  constexpr Elem none = static_cast<Elem>(-1);
  std::vector<Elem> label(alg.size(), none);
  std::vector<Elem> members;
  auto add = [&](Elem v) {
    if (label[v] == none) {
      label[v] = static_cast<Elem>(members.size());
      members.push_back(v);
    }
  };
  for (Elem g : gens) {
    if (g >= alg.size()) {
      throw Error(ErrorKind::OutOfRange, "generator " + std::to_string(g) + " outside carrier");
    }
    add(g);
  }
  for (std::size_t op = 0; op < sig.size(); ++op) {
    if (sig[op].arity == 0) add(alg.apply(op, {}));
  }
  if (members.empty()) {
    throw Error(ErrorKind::EmptyCarrier, "empty generating set and no constants");
  }
  std::vector<Elem> args(sig.max_arity());
  detail::for_each_new_application(
      sig, [&] { return members.size(); },
      [&](std::size_t op, std::span<const Elem> labels) {
        for (std::size_t i = 0; i < labels.size(); ++i) args[i] = members[labels[i]];
        add(alg.apply(op, std::span<const Elem>(args.data(), labels.size())));
      });
  auto tables = detail::build_tables(sig, members.size(), [&](std::size_t op, std::span<const Elem> labels) {
    for (std::size_t i = 0; i < labels.size(); ++i) args[i] = members[labels[i]];
    return label[alg.apply(op, std::span<const Elem>(args.data(), labels.size()))];
  });
  const std::size_t n = members.size();
  return {FiniteAlgebra(sig, n, std::move(tables), alg.name() + "_sub"),
          CarrierMap(std::move(members), alg.size())};
}

HomImage hom_image(const FiniteAlgebra& src, const FiniteAlgebra& dst, const CarrierMap& m) {
  auto cls = classify(src, dst, m);
  if (!cls.is_hom) throw NotHomError(*cls.witness);
  std::vector<Elem> values = m.image();
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  constexpr Elem none = static_cast<Elem>(-1);
  std::vector<Elem> label(dst.size(), none);
  for (std::size_t i = 0; i < values.size(); ++i) label[values[i]] = static_cast<Elem>(i);
  std::vector<Elem> preimage(values.size(), none);
  for (Elem a = 0; a < src.size(); ++a) {
    if (preimage[label[m(a)]] == none) preimage[label[m(a)]] = a;
  }
  const auto& sig = src.signature();
  std::vector<Elem> args(sig.max_arity());
  auto tables = detail::build_tables(sig, values.size(), [&](std::size_t op, std::span<const Elem> labels) {
    for (std::size_t i = 0; i < labels.size(); ++i) args[i] = preimage[labels[i]];
    return label[m(src.apply(op, std::span<const Elem>(args.data(), labels.size())))];
  });
  std::vector<Elem> surj(src.size());
  for (Elem a = 0; a < src.size(); ++a) surj[a] = label[m(a)];
  const std::size_t n = values.size();
  return {FiniteAlgebra(sig, n, std::move(tables), src.name() + "_img"),
          CarrierMap(std::move(surj), n), CarrierMap(std::move(values), dst.size())};
}

std::optional<CarrierMap> check_leq(const FiniteAlgebra& a, const FiniteAlgebra& b,
                                    std::size_t cap) {
  HomSearch opts;
  opts.injective = true;
  opts.max_results = 1;
  opts.cap = cap;
  auto found = find_homs(a, b, opts);
  if (found.empty()) return std::nullopt;
  return found.front();
}

CarrierMap product_map(const ProductAlgebra& from, const ProductAlgebra& to,
                       std::span<const CarrierMap> maps) {
  if (maps.size() != from.codec.arity() || maps.size() != to.codec.arity()) {
    throw Error(ErrorKind::CarrierMismatch, "factor count mismatch in product map");
  }
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (maps[i].domain_size() != from.codec.radices()[i] ||
        maps[i].codomain_size() != to.codec.radices()[i]) {
      throw Error(ErrorKind::CarrierMismatch, "factor map " + std::to_string(i) + " has wrong shape");
    }
  }
  std::vector<Elem> img(from.alg.size());
  std::vector<Elem> coords(maps.size());
  for (Elem a = 0; a < img.size(); ++a) {
    from.codec.decode(a, coords);
    for (std::size_t i = 0; i < maps.size(); ++i) coords[i] = maps[i](coords[i]);
    img[a] = to.codec.encode(coords);
  }
  return CarrierMap(std::move(img), to.alg.size());
}

HspCertificate HspCertificate::trivial(const FiniteAlgebra& member, std::size_t index) {
  HspCertificate cert;
  cert.factors = {index};
  for (Elem a = 0; a < member.size(); ++a) {
    cert.generators.push_back({a});
    cert.image.push_back(a);
  }
  return cert;
}

std::string_view to_string(HspStage stage) {
  switch (stage) {
    case HspStage::Certificate: return "certificate";
    case HspStage::Product: return "product";
    case HspStage::Subalgebra: return "subalgebra";
    case HspStage::Image: return "image";
    case HspStage::Isomorphism: return "isomorphism";
  }
  return "?";
}

HspCheckResult hsp_certificate_check(std::span<const FiniteAlgebra> k, const FiniteAlgebra& b,
                                     const HspCertificate& cert, const Caps& caps) {
  HspCheckResult r;
  auto fail = [&](HspStage stage, std::string msg) {
    r.ok = false;
    r.failed_stage = stage;
    r.message = std::move(msg);
    return r;
  };

  if (cert.factors.empty()) return fail(HspStage::Certificate, "no product factors");
  std::vector<FiniteAlgebra> factors;
  for (std::size_t i : cert.factors) {
    if (i >= k.size()) {
      return fail(HspStage::Certificate, "factor index " + std::to_string(i) + " outside class");
    }
    factors.push_back(k[i]);
  }
  if (factors.front().signature() != b.signature()) {
    return fail(HspStage::Certificate, "target signature differs from the class");
  }

  try {
    r.product = product(factors, caps);
  } catch (const Error& e) {
    return fail(HspStage::Product, e.what());
  }

  std::vector<Elem> gens;
  for (const auto& g : cert.generators) {
    if (g.size() != factors.size()) {
      return fail(HspStage::Subalgebra, "generator tuple has " + std::to_string(g.size()) +
                                            " coordinates, expected " +
                                            std::to_string(factors.size()));
    }
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] >= factors[i].size()) {
        return fail(HspStage::Subalgebra, "generator coordinate " + std::to_string(g[i]) +
                                              " outside factor " + std::to_string(i));
      }
    }
    gens.push_back(r.product->codec.encode(g));
  }
  try {
    r.subalgebra = subalgebra_generate(r.product->alg, gens);
  } catch (const Error& e) {
    return fail(HspStage::Subalgebra, e.what());
  }

  const auto& sub = r.subalgebra->alg;
  if (cert.image.size() != sub.size()) {
    return fail(HspStage::Image, "image map has " + std::to_string(cert.image.size()) +
                                     " entries, subalgebra has " + std::to_string(sub.size()));
  }
  for (Elem v : cert.image) {
    if (v >= b.size()) return fail(HspStage::Image, "image value " + std::to_string(v) + " outside target");
  }
  const CarrierMap image_map(cert.image, b.size());
  auto cls = classify(sub, b, image_map);
  if (!cls.is_hom) {
    r.witness = cls.witness;
    return fail(HspStage::Image, "image map is not a homomorphism at " + cls.witness->to_string());
  }
  auto img = hom_image(sub, b, image_map);
  auto iso = find_isomorphism(img.alg, b, caps.search);
  if (!iso) {
    return fail(HspStage::Isomorphism, "image of size " + std::to_string(img.alg.size()) +
                                           " is not isomorphic to the target of size " +
                                           std::to_string(b.size()));
  }
  r.isomorphism = std::move(iso);
  r.ok = true;
  r.message = "ok";
  return r;
}

}  // namespace ualg
