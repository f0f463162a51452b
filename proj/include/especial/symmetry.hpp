#pragma once

// Orientation-preserving circle symmetries u -> (au + b) / (cu + d) and their
// action on families, on the especial disc and on the closed unit disc.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "especial/family.hpp"
#include "especial/hullgeom.hpp"

namespace especial {

class CircleMap {
 public:
  /// Throws std::invalid_argument unless ad - bc > 0.
  CircleMap(Rational a, Rational b, Rational c, Rational d);

  static CircleMap identity() { return CircleMap(1, 0, 0, 1); }

  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }
  const Rational& c() const noexcept { return c_; }
  const Rational& d() const noexcept { return d_; }
  Rational determinant() const { return a_ * d_ - b_ * c_; }

  CirclePoint operator()(const CirclePoint& u) const;

  /// (*this o other)(u) == (*this)(other(u)).
  CircleMap compose(const CircleMap& other) const;
  CircleMap inverse() const;
  CircleMap power(unsigned n) const;

  /// Scalar matrix, i.e. the identity of the projective group.
  bool is_projective_identity() const { return b_ == 0 && c_ == 0 && a_ == d_; }

  /// Same matrix entries.
  friend bool operator==(const CircleMap&, const CircleMap&) = default;

 private:
  Rational a_, b_, c_, d_;
};

CircleSet apply(const CircleMap& g, const CircleSet& set);

/// Elementwise image, same element order and labels.
FamilyPair apply(const CircleMap& g, const FamilyPair& fp);

/// Projective extension of g to the closed unit disc. It agrees with g on the
/// circle through param_to_point and maps chords to chords, hence hull(A) onto
/// hull(g A).
PlanePoint apply_to_disc(const CircleMap& g, const PlanePoint& p);

class NotInvariant : public Error {
 public:
  NotInvariant(Side family, std::size_t element, CircleSet image);
  Side family;
  std::size_t element;
  CircleSet image;
};

struct Permutation {
  std::vector<std::size_t> plus;
  std::vector<std::size_t> minus;
  std::size_t operator()(Side side, std::size_t k) const {
    return side == Side::Plus ? plus[k] : minus[k];
  }
};

/// g maps element k of each family onto element perm(k). Throws NotInvariant.
Permutation induced_permutation(const FamilyPair& fp, const CircleMap& g);

struct EquivarianceReport {
  bool invariant = false;
  std::optional<NotInvariant> not_invariant;
  Permutation permutation;
  bool disc = false;        // the permutation carries Z onto itself, matching Z(g fp)
  bool straighten = false;  // s(g p) = g s(p) on sampled points
  bool prongs = false;      // prong counts are g-invariant
  std::size_t samples = 0;
  std::vector<std::string> failures;

  bool passed() const { return invariant && disc && straighten && prongs; }
};

EquivarianceReport check_equivariance(const FamilyPair& fp, const CircleMap& g);

}  // namespace especial
