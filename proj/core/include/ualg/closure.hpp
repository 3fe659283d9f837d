#pragma once

// H, S and P constructions on finite algebras.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/hom.hpp"

namespace ualg {

/// Mixed-radix codec between flat product indices and coordinate tuples.
/// Factor 0 is the most significant digit.
class ProductCodec {
 public:
  ProductCodec() = default;
  explicit ProductCodec(std::vector<std::size_t> radices);

  std::size_t arity() const noexcept { return radices_.size(); }
  std::size_t size() const noexcept { return size_; }
  std::span<const std::size_t> radices() const noexcept { return radices_; }

  Elem encode(std::span<const Elem> coords) const;
  std::vector<Elem> decode(Elem flat) const;
  void decode(Elem flat, std::span<Elem> out) const;

 private:
  std::vector<std::size_t> radices_;
  std::size_t size_ = 1;
};

struct ProductAlgebra {
  FiniteAlgebra alg;
  ProductCodec codec;
};

/// Direct product with componentwise operations. Throws SignatureMismatch,
/// InvalidArgument for an empty factor list, or CapExceeded when the carrier
/// passes `caps.carrier` or a table would be unreasonably large.
ProductAlgebra product(std::span<const FiniteAlgebra> factors, const Caps& caps = {});

/// The projection of a product onto factor `i`.
CarrierMap projection(const ProductAlgebra& p, std::size_t i);

struct Subalgebra {
  FiniteAlgebra alg;      // elements relabelled in discovery order
  CarrierMap inclusion;   // sub -> parent, an injective hom
};

/// Least subset containing `gens` closed under every operation. Discovery
/// order: the generators as given (duplicates dropped), then constants in
/// symbol order, then for each discovered element p in turn and each symbol,
/// the applications whose largest argument label is p. Throws EmptyCarrier
/// when nothing can be generated, OutOfRange for a bad generator.
Subalgebra subalgebra_generate(const FiniteAlgebra& alg, std::span<const Elem> gens);

struct HomImage {
  FiniteAlgebra alg;       // image, relabelled in increasing target order
  CarrierMap surjection;   // src -> image
  CarrierMap embedding;    // image -> dst
};

/// Image of a homomorphism, built directly on {m(a)}. Throws NotHomError.
HomImage hom_image(const FiniteAlgebra& src, const FiniteAlgebra& dst, const CarrierMap& m);

/// First injective hom a -> b in canonical order, if any.
std::optional<CarrierMap> check_leq(const FiniteAlgebra& a, const FiniteAlgebra& b,
                                    std::size_t cap = 1'000'000);

/// Componentwise map between products built from per-factor maps.
CarrierMap product_map(const ProductAlgebra& from, const ProductAlgebra& to,
                       std::span<const CarrierMap> maps);

/// Witness that B lies in H(S(P K)): take the product of the listed members of
/// K, generate a subalgebra from the listed tuples, and map it onto B.
struct HspCertificate {
  std::vector<std::size_t> factors;          // indices into K, repeats allowed
  std::vector<std::vector<Elem>> generators;  // tuples in the product
  std::vector<Elem> image;                    // subalgebra label -> B carrier

  /// Identity certificate for K[index] in V(K).
  static HspCertificate trivial(const FiniteAlgebra& member, std::size_t index);

  bool operator==(const HspCertificate&) const = default;
};

enum class HspStage { Certificate = 0, Product = 1, Subalgebra = 2, Image = 3, Isomorphism = 4 };

std::string_view to_string(HspStage stage);

struct HspCheckResult {
  bool ok = false;
  HspStage failed_stage = HspStage::Certificate;
  std::string message;
  std::optional<HomWitness> witness;  // when the image map is not a hom
  std::optional<ProductAlgebra> product;
  std::optional<Subalgebra> subalgebra;
  std::optional<CarrierMap> isomorphism;  // image -> B when ok
};

/// Replays a certificate and reports the first stage that fails.
HspCheckResult hsp_certificate_check(std::span<const FiniteAlgebra> k, const FiniteAlgebra& b,
                                     const HspCertificate& cert, const Caps& caps = {});

}  // namespace ualg
