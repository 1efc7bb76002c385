#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "groupoidkit/abelian.hpp"
#include "groupoidkit/groupoid.hpp"
#include "groupoidkit/linalg.hpp"
#include "groupoidkit/quotients.hpp"
#include "groupoidkit/scalar.hpp"

namespace gk {

using HostPtr = std::shared_ptr<const FiniteGroupoid>;

inline HostPtr share(FiniteGroupoid g) { return std::make_shared<const FiniteGroupoid>(std::move(g)); }

/// A function on the arrows of a finite groupoid with Gaussian-rational
/// values: an element of the convolution *-algebra.
class AlgebraElement {
 public:
  explicit AlgebraElement(HostPtr host);
  AlgebraElement(HostPtr host, Vector coeffs);

  static AlgebraElement delta(HostPtr host, Arrow a);
  /// The identity: sum of unit deltas.
  static AlgebraElement one(HostPtr host);

  const HostPtr& host() const noexcept { return host_; }
  const Vector& coeffs() const noexcept { return coeffs_; }
  const GaussianRational& operator[](Arrow a) const { return coeffs_[a]; }
  std::size_t dim() const noexcept { return coeffs_.size(); }

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const GaussianRational& c);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const GaussianRational& c, AlgebraElement a) { return a *= c; }
  bool operator==(const AlgebraElement& o) const;

 private:
  HostPtr host_;
  Vector coeffs_;
};

/// (f * g)(c) = sum over b with src(b) = src(c) of f(c b^-1) g(b).
AlgebraElement convolve(const AlgebraElement& f, const AlgebraElement& g);

/// f*(c) = conj(f(c^-1)).
AlgebraElement involute(const AlgebraElement& f);

/// delta_a * f and f * delta_a as raw coefficient vectors.
Vector left_delta(const FiniteGroupoid& g, Arrow a, const Vector& f);
Vector right_delta(const FiniteGroupoid& g, const Vector& f, Arrow a);

/// Linear map between convolution algebras given on basis deltas:
/// column j of `matrix` is the image of delta_j.
struct AlgebraHom {
  HostPtr domain;
  HostPtr codomain;
  Matrix matrix;  // codomain->size() rows, domain->size() columns

  AlgebraElement apply(const AlgebraElement& f) const;
  Vector image_of(Arrow a) const;
  std::size_t rank() const;
  bool is_surjective() const { return rank() == codomain->size(); }
  /// Basis of the kernel (vectors over the domain basis).
  Matrix kernel() const;
};

/// Checks multiplicativity and *-preservation on all pairs of basis deltas.
/// Returns a description of the first failure.
std::optional<std::string> hom_violation(const AlgebraHom& h);

/// g after f.
AlgebraHom compose(const AlgebraHom& g, const AlgebraHom& f);

/// f -> f restricted to G_F. Throws GroupoidError for non-invariant F.
AlgebraHom restriction_hom(const HostPtr& g, const ArrowSet& f);

/// f -> (c -> sum of f over the class c).
AlgebraHom quotient_hom(const HostPtr& g, const NormalSubgroupoid& h);

/// Span{delta_x | x unit}.
Matrix diagonal_basis(const FiniteGroupoid& g);

/// A two-sided ideal given by an exact row-reduced basis.
class IdealBasis {
 public:
  IdealBasis(HostPtr host, EchelonBasis basis) : host_(std::move(host)), basis_(std::move(basis)) {}

  const HostPtr& host() const noexcept { return host_; }
  const EchelonBasis& basis() const noexcept { return basis_; }
  const Matrix& rows() const noexcept { return basis_.rows(); }
  std::size_t dim() const noexcept { return basis_.rank(); }

  /// Every row times every basis delta, on either side, stays in the span.
  bool is_two_sided_ideal() const;

 private:
  HostPtr host_;
  EchelonBasis basis_;
};

/// Smallest two-sided ideal containing delta_a*delta_b - delta_b*delta_a,
/// closed by rounds of one-sided multiplication by basis deltas.
IdealBasis commutator_ideal(const HostPtr& g);

/// dim of the algebra modulo its commutator ideal.
std::size_t abelianization_dim(const HostPtr& g);

/// pi : C(G) -> C(G_fix) -> C(G^ab).
AlgebraHom abelianization_hom(const HostPtr& g);

/// The isotropy group at a fixed point x modulo its commutator subgroup,
/// read off the abelianized groupoid.
struct AbelianizedFiber {
  Arrow x;
  FiniteAbelianGroup group;
  std::vector<int> class_of;  // per host arrow: element of `group`, or -1 outside G_x
};

/// Throws GroupoidError when x is not a fixed point.
AbelianizedFiber abelianized_fiber(const FiniteGroupoid& g, Arrow x);

/// phi_{x, chi}: c -> chi(class of c) on G_x, zero elsewhere.
struct CharacterFunctional {
  HostPtr host;
  Arrow x;
  Character chi;
  std::vector<CyclotomicEntry> values;  // one per host arrow

  std::complex<double> evaluate(const AlgebraElement& f) const;
};

/// Throws GroupoidError when chi is not a character of fiber.group.
CharacterFunctional character_functional(const HostPtr& g, const AbelianizedFiber& fiber,
                                         const Character& chi);
CharacterFunctional character_functional(const HostPtr& g, Arrow x, const Character& chi);

/// Multiplicativity, *-preservation and diagonal evaluation at x, on basis deltas.
std::optional<std::string> functional_violation(const CharacterFunctional& phi);

/// One functional per (fixed point, character of the abelianized fiber).
std::vector<CharacterFunctional> enumerate_characters(const HostPtr& g);

/// [phi_{x,chi}(delta_c)] for an abelian group bundle: rows follow the dual
/// bundle (units ascending, characters in enumeration order), columns the
/// arrows.
struct GelfandMatrix {
  std::vector<std::pair<Arrow, std::size_t>> rows;  // (unit, character index)
  std::vector<std::vector<CyclotomicEntry>> entries;

  std::vector<std::vector<std::complex<double>>> to_complex() const;
};

GelfandMatrix gelfand_transform(const FiniteGroupoid& g);

/// Exact check: column(a*b) equals column(a) ⊙ column(b) for every pair,
/// with the zero column for non-composable pairs.
std::optional<std::string> gelfand_multiplicativity_violation(const FiniteGroupoid& g,
                                                              const GelfandMatrix& m);

/// LU with partial pivoting.
std::complex<double> determinant(std::vector<std::vector<std::complex<double>>> m);

}  // namespace gk
