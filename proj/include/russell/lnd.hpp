#pragma once

// Derivations and ring endomorphisms of the quotient rings.
//
// A derivation is given by the images of the ring generators; formal
// parameters of the ring are constants for it. It is well defined on the
// quotient iff the relation R satisfies sum_g d(g) * dR/dg = 0 in the ring.
//
// Degree of a derivation on A. Let l = max over generators g with d(g) != 0
// of deg(d(g)) - deg(g). For a normal monomial m = prod g^e_g, Leibniz gives
// d(m) = sum_g e_g * (m/g) * d(g), and deg is additive on nonzero products
// (the top-weight parts multiply in the domain B), so
// deg(d(m)) <= deg(m) + l. Normal monomials of distinct weights are linearly
// independent, so the bound extends to every element: d(A_{<=n}) lies in
// A_{<=n+l}. Since the maximum is attained on a generator, no smaller shift
// works; l is the minimal one.
//
// Local nilpotency is only ever certified up to a bound: every generator is
// iterated until it dies. Nilpotency on generators of a finitely generated
// algebra implies local nilpotency. A generator still alive at the bound
// gives the verdict Unknown, never "not nilpotent".

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "russell/filtration.hpp"
#include "russell/quotient.hpp"

namespace russell {

inline constexpr int kDefaultNilpotencyBound = 32;

/// Thrown when the generator images are incompatible with the relation; the
/// residue is the nonzero normal form of sum_g d(g) * dR/dg.
class IncompatibleImages : public AlgebraError {
 public:
  IncompatibleImages(const std::string& what, RingElement residue)
      : AlgebraError(what + ": residue " + to_string(residue)), residue_(std::move(residue)) {}
  const RingElement& residue() const { return residue_; }

 private:
  RingElement residue_;
};

class Derivation {
 public:
  const RingPtr& ring() const { return ring_; }
  const std::vector<std::string>& generators() const { return generators_; }
  const std::vector<RingElement>& images() const { return images_; }
  const RingElement& image(std::string_view generator) const;
  bool is_zero() const;

 private:
  friend Derivation make_derivation(const RingPtr&, std::vector<RingElement>);
  Derivation(RingPtr ring, std::vector<std::string> gens, std::vector<RingElement> images)
      : ring_(std::move(ring)), generators_(std::move(gens)), images_(std::move(images)) {}

  RingPtr ring_;
  std::vector<std::string> generators_;
  std::vector<RingElement> images_;
};

/// sum_g d(g) * dR/dg reduced in the ring; zero iff the images define a
/// derivation.
RingElement compatibility_residue(const RingPtr& ring, const std::vector<RingElement>& images);

/// Validates and builds; images are listed in generator order.
Derivation make_derivation(const RingPtr& ring, std::vector<RingElement> images);
Derivation make_derivation(const RingPtr& ring, const std::vector<std::string>& image_exprs);
Derivation zero_derivation(const RingPtr& ring);

RingElement apply(const Derivation& d, const RingElement& a);
/// d^k(a).
RingElement apply_power(const Derivation& d, const RingElement& a, int k);

enum class NilpotencyVerdict { locally_nilpotent, unknown };

struct NilpotencyReport {
  int bound = kDefaultNilpotencyBound;
  std::vector<std::string> generators;
  /// Smallest k with d^k(g) = 0, or nullopt if g survives `bound` steps.
  std::vector<std::optional<int>> orders;
  NilpotencyVerdict verdict = NilpotencyVerdict::unknown;
};

NilpotencyReport lnd_bounded(const Derivation& d, int bound = kDefaultNilpotencyBound);

/// Degree shift l of a nonzero derivation on A (or B). Throws for zero.
int degree_ell(const Derivation& d);

/// The homogeneous derivation induced on B by a nonzero bounded-certified
/// locally nilpotent derivation on A.
Derivation induced_graded(const Derivation& d, int bound = kDefaultNilpotencyBound);

enum class HomogeneityKind { not_homogeneous, any, degree };

struct Homogeneity {
  HomogeneityKind kind = HomogeneityKind::not_homogeneous;
  int ell = 0;  // meaningful for kind == degree
};

/// Common shift l with d(g) homogeneous of weight w(g) + l for every g with
/// d(g) != 0. The zero derivation is homogeneous of every degree (`any`).
Homogeneity is_homogeneous_derivation(const Derivation& d);

/// Ring map R[P] -> R[P u Q] fixing the parameters P, given by the images of
/// the generators of R.
class RingEndomorphism {
 public:
  const RingPtr& source() const { return source_; }
  const RingPtr& target() const { return target_; }
  const std::vector<RingElement>& images() const { return images_; }
  const RingElement& image(std::string_view generator) const;

  /// Applies the map; parameters carried by `a` pass through unchanged.
  RingElement operator()(const RingElement& a) const;

 private:
  friend RingEndomorphism make_endomorphism(const RingPtr&, const RingPtr&,
                                            std::vector<RingElement>);
  RingEndomorphism(RingPtr source, RingPtr target, std::vector<RingElement> images)
      : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {}

  RingPtr source_;
  RingPtr target_;
  std::vector<RingElement> images_;
};

/// Validates that the relation maps to zero; throws IncompatibleImages.
RingEndomorphism make_endomorphism(const RingPtr& source, const RingPtr& target,
                                   std::vector<RingElement> images);
RingEndomorphism identity_endomorphism(const RingPtr& ring);

/// exp(tau d): g -> sum_k tau^k d^k(g) / k!. Requires a bounded certificate.
RingEndomorphism flow(const Derivation& d, std::string_view parameter,
                      int bound = kDefaultNilpotencyBound);

/// Torus action g -> lambda^w(g) g with lambda a Laurent parameter. The
/// relation must be weight-homogeneous (ring B).
RingEndomorphism scaling(const RingPtr& ring, std::string_view parameter);

/// Composition of ring maps: compose(e1, e2)(a) = e1(e2(a)).
RingEndomorphism compose(const RingEndomorphism& e1, const RingEndomorphism& e2);

/// Substitutes parameter bindings into every image.
RingEndomorphism specialize(const RingEndomorphism& e, const Bindings& bindings);

/// Per-generator differences e1(g) - e2(g) in a common ring.
std::vector<RingElement> difference(const RingEndomorphism& e1, const RingEndomorphism& e2);
bool equal(const RingEndomorphism& e1, const RingEndomorphism& e2);

/// The involution x -> -x of V.
RingEndomorphism deck_sigma();

/// phi_inv o d o phi, a derivation again whenever phi_inv inverts phi.
Derivation conjugate(const Derivation& d, const RingEndomorphism& phi,
                     const RingEndomorphism& phi_inv);

enum class Locus { F_plus, F_minus, V_slice };

std::string to_string(Locus locus);
std::optional<Locus> locus_by_name(std::string_view name);

struct InvarianceResult {
  bool invariant = false;
  /// Image of the relevant generator in the coordinate ring of the locus.
  RingElement residue;
};

/// Tests whether the zero set F_+ = {x = 0}, F_- = {y = 0} or V = {y = 1}
/// of W is stable: d(x), d(y), d(y) respectively must vanish on it.
InvarianceResult invariance_check(const Derivation& d, Locus locus);

struct KernelChain {
  int nu = 0;
  RingElement element;
  int degree = 0;
};

/// For homogeneous f != 0 of degree k and homogeneous d of degree l, the
/// last nonzero d^nu(f); it is homogeneous of degree k + nu*l and killed by d.
KernelChain kernel_chain(const Derivation& d, const RingElement& f,
                         int bound = kDefaultNilpotencyBound);

}  // namespace russell
