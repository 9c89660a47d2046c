#pragma once

// The enveloping algebra U(gl(n)) in PBW normal form.
//
// Generators e_ij are totally ordered lexicographically on (i, j). An element
// is a sparse map from weakly increasing generator words to nonzero rationals;
// every operation returns a normalized value.

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "capelli/rational.hpp"

namespace capelli {

struct Generator {
  std::uint8_t row = 1;
  std::uint8_t col = 1;

  friend bool operator==(const Generator&, const Generator&) = default;
  friend auto operator<=>(const Generator&, const Generator&) = default;
};

/// A word in the generators; as a term key it is always sorted.
using Monomial = std::vector<Generator>;

/// Filtration degree reported for the zero element.
inline constexpr int kZeroFiltrationDegree = -1;

class UglElement {
 public:
  using Terms = std::map<Monomial, Rational>;

  /// The zero element of U(gl(n)); throws std::invalid_argument for n < 1.
  explicit UglElement(int n);

  static UglElement scalar(int n, const Rational& c);
  static UglElement unit(int n) { return scalar(n, 1); }
  /// e_ij; throws std::out_of_range unless 1 <= i, j <= n.
  static UglElement generator(int i, int j, int n);
  /// Normal form of an arbitrary (possibly unsorted) generator word times c.
  static UglElement from_word(int n, const Monomial& word, const Rational& c = 1);

  int n() const noexcept { return n_; }
  const Terms& terms() const& noexcept { return terms_; }
  const Terms& terms() const&& = delete;
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coefficient(const Monomial& sorted_monomial) const;
  /// Longest monomial, 0 for nonzero scalars, kZeroFiltrationDegree for zero.
  int filtration_degree() const;
  /// The part spanned by monomials of exactly this length.
  UglElement homogeneous_part(int degree) const;

  /// Adds c times an already sorted monomial; throws std::invalid_argument if unsorted.
  void add_term(const Monomial& sorted_monomial, const Rational& c);

  UglElement& operator+=(const UglElement& other);
  UglElement& operator-=(const UglElement& other);
  UglElement& operator*=(const Rational& c);
  friend UglElement operator+(UglElement a, const UglElement& b) { return a += b; }
  friend UglElement operator-(UglElement a, const UglElement& b) { return a -= b; }
  friend UglElement operator*(UglElement a, const Rational& c) { return a *= c; }
  friend UglElement operator*(const Rational& c, UglElement a) { return a *= c; }
  UglElement operator-() const { return UglElement(*this) *= Rational(-1); }
  /// PBW product.
  friend UglElement operator*(const UglElement& a, const UglElement& b);

  friend bool operator==(const UglElement&, const UglElement&) = default;

 private:
  int n_;
  Terms terms_;
};

/// Same as a * b; throws std::invalid_argument on ambient mismatch.
UglElement mul(const UglElement& a, const UglElement& b);

/// [a, b] = ab - ba.
UglElement commutator(const UglElement& a, const UglElement& b);

/// ad(e_ij)(x) = e_ij x - x e_ij.
UglElement ad(int i, int j, const UglElement& x);

/// True iff ad(e_ij)(x) vanishes for all n^2 generators.
bool is_central(const UglElement& x);

}  // namespace capelli
