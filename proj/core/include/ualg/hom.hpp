#pragma once

// Carrier maps between finite algebras and homomorphism machinery.

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ualg/algebra.hpp"

namespace ualg {

/// A total map [0, domain_size()) -> [0, codomain_size()). The algebras on
/// either side are supplied by the caller at each use.
class CarrierMap {
 public:
  CarrierMap() = default;
  CarrierMap(std::vector<Elem> image, std::size_t codomain_size);

  static CarrierMap identity(std::size_t n);
  static CarrierMap constant(std::size_t domain_size, Elem value, std::size_t codomain_size);

  std::size_t domain_size() const noexcept { return image_.size(); }
  std::size_t codomain_size() const noexcept { return codomain_size_; }
  Elem operator()(Elem a) const { return image_[a]; }
  const std::vector<Elem>& image() const noexcept { return image_; }

  /// `0 1 1 0`
  std::string to_string() const;

  bool operator==(const CarrierMap&) const = default;

 private:
  std::vector<Elem> image_;
  std::size_t codomain_size_ = 0;
};

/// A tuple where compatibility fails: m(f(args)) != f(m(args)).
struct HomWitness {
  std::string symbol;
  std::vector<Elem> args;

  std::string to_string() const;
  bool operator==(const HomWitness&) const = default;
};

struct HomClassification {
  bool is_hom = false;
  std::optional<HomWitness> witness;
  bool injective = false;
  bool surjective = false;
};

class NotHomError : public Error {
 public:
  explicit NotHomError(HomWitness w)
      : Error(ErrorKind::NotHom, "map is not a homomorphism: violated at " + w.to_string()),
        witness_(std::move(w)) {}
  const HomWitness& witness() const noexcept { return witness_; }

 private:
  HomWitness witness_;
};

class KernelInclusionError : public Error {
 public:
  KernelInclusionError(Elem x, Elem y)
      : Error(ErrorKind::KernelInclusion,
              "kernel inclusion fails at (" + std::to_string(x) + "," + std::to_string(y) + ")"),
        pair_(x, y) {}
  std::pair<Elem, Elem> pair() const noexcept { return pair_; }

 private:
  std::pair<Elem, Elem> pair_;
};

/// Throws SignatureMismatch / CarrierMismatch when `m` does not fit src -> dst.
void check_map_shape(const FiniteAlgebra& src, const FiniteAlgebra& dst, const CarrierMap& m);

HomClassification classify(const FiniteAlgebra& src, const FiniteAlgebra& dst,
                           const CarrierMap& m);

bool is_injective(const CarrierMap& m);
bool is_surjective(const CarrierMap& m);

/// `after` applied after `first`: a -> after(first(a)).
CarrierMap compose(const CarrierMap& after, const CarrierMap& first);

/// All (x, y) with m(x) == m(y), in lexicographic order.
std::vector<std::pair<Elem, Elem>> kernel_pairs(const CarrierMap& m);

/// Given homs g: A -> C and surjective h: A -> B with ker h contained in
/// ker g, returns the hom phi: B -> C with g = phi after h. Preimages are
/// chosen as the least element of each fibre.
///
/// Throws NotHom, NotSurjective, or KernelInclusionError (with a pair in
/// ker h but not in ker g).
CarrierMap hom_factor(const FiniteAlgebra& a, const FiniteAlgebra& b, const FiniteAlgebra& c,
                      const CarrierMap& g, const CarrierMap& h);

struct HomSearch {
  bool injective = false;
  bool surjective = false;
  /// Per source element: a forced image, or nullopt.
  std::vector<std::optional<Elem>> fixed;
  std::size_t max_results = static_cast<std::size_t>(-1);
  /// Explored search nodes before CapExceeded.
  std::size_t cap = 1'000'000;
};

/// Every homomorphism src -> dst meeting the constraints, in lexicographic
/// order of images. Backtracking with compatibility pruning.
std::vector<CarrierMap> find_homs(const FiniteAlgebra& src, const FiniteAlgebra& dst,
                                  const HomSearch& constraints = {});

/// An isomorphism a -> b, if one exists.
std::optional<CarrierMap> find_isomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b,
                                           std::size_t cap = 1'000'000);

/// Inverse of a bijection.
CarrierMap inverse(const CarrierMap& bijection);

}  // namespace ualg
