#pragma once

// The polynomial algebra C[M_{n,d}] in the variables (i|φ), 1 <= i <= n, 1 <= φ <= d.
//
// Bitableaux, symmetrized bitableaux, immanants, straightening against the
// standard and Gordan-Capelli bases, and the polarization action of U(gl(n)).

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "capelli/combinatorics.hpp"
#include "capelli/rational.hpp"
#include "capelli/ugl.hpp"

namespace capelli {

/// Dense exponent vector; slot (i-1)*d + (φ-1) holds the exponent of (i|φ).
using Exponents = std::vector<std::uint8_t>;

class MPoly {
 public:
  using Terms = std::map<Exponents, Rational>;

  /// The zero polynomial; throws std::invalid_argument unless n, d >= 1.
  MPoly(int n, int d);

  static MPoly constant(int n, int d, const Rational& c);
  /// (i|φ); throws std::out_of_range on bad indices.
  static MPoly variable(int i, int phi, int n, int d);
  /// c · ∏ (rows[k]|cols[k]).
  static MPoly monomial(const std::vector<int>& rows, const std::vector<int>& cols, int n, int d,
                        const Rational& c = 1);

  int n() const noexcept { return n_; }
  int d() const noexcept { return d_; }
  const Terms& terms() const& noexcept { return terms_; }
  const Terms& terms() const&& = delete;
  bool is_zero() const noexcept { return terms_.empty(); }
  int slot(int i, int phi) const;
  Rational coefficient(const Exponents& e) const;

  /// Degree of the unique homogeneous component, or -1 if zero or inhomogeneous.
  int homogeneous_degree() const;
  int total_degree() const;

  void add_term(const Exponents& e, const Rational& c);

  /// ∂/∂(i|φ).
  MPoly derivative(int i, int phi) const;
  /// (i|φ) · this.
  MPoly times_variable(int i, int phi) const;

  MPoly& operator+=(const MPoly& other);
  MPoly& operator-=(const MPoly& other);
  MPoly& operator*=(const Rational& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
  friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }
  MPoly operator-() const { return MPoly(*this) *= Rational(-1); }
  friend MPoly operator*(const MPoly& a, const MPoly& b);

  friend bool operator==(const MPoly&, const MPoly&) = default;

 private:
  int n_;
  int d_;
  Terms terms_;
};

/// Row and column contents (c_S, c_T) of a monomial.
std::pair<std::vector<int>, std::vector<int>> monomial_contents(const Exponents& e, int n, int d);

/// All monomials of total degree h in C[M_{n,d}], coefficient 1, in exponent-key order.
std::vector<MPoly> monomials_of_degree(int n, int d, int h);

/// A pair of same-shape tableaux, left over {1..n}, right over {1..d}.
struct BitabSpec {
  YoungTableau left;
  YoungTableau right;

  friend bool operator==(const BitabSpec&, const BitabSpec&) = default;
  friend auto operator<=>(const BitabSpec&, const BitabSpec&) = default;
};

/// Coefficients over standard tableau pairs.
using StdExpansion = std::map<BitabSpec, Rational>;

/// (-1)^{C(p,2)} det[(ω_r|ϖ_s)]; zero if the lengths differ.
MPoly biproduct(const std::vector<int>& omega, const std::vector<int>& varpi, int n, int d);

/// (-1)^{C(h,2)} (i_1|j_1)...(i_h|j_h).
MPoly column_bitableau(const std::vector<int>& lefts, const std::vector<int>& rights, int n, int d);

/// Signed product of row biproducts; zero on shape mismatch.
MPoly bitableau(const YoungTableau& s, const YoungTableau& t, int n, int d);

struct ColumnTerm {
  int sign;
  std::vector<int> lefts;
  std::vector<int> rights;
};

/// One term per tuple of row permutations of the left tableau; rights are the row word of t.
std::vector<ColumnTerm> expand_into_columns(const YoungTableau& s, const YoungTableau& t);

/// Σ over column permutations T̄ of t (with multiplicity) of (s|T̄).
MPoly right_symmetrized(const YoungTableau& s, const YoungTableau& t, int n, int d);

/// The same polynomial through the Young symmetrizer double sum over R(S) × C(T),
/// where u = I∘S and v = J∘T for the given multilinear S, T (identity tableau by default).
MPoly right_symmetrized_via_symmetrizer(const YoungTableau& u, const YoungTableau& v, int n, int d);
MPoly right_symmetrized_via_symmetrizer(const YoungTableau& u, const YoungTableau& v, const YoungTableau& s_multi,
                                        const YoungTableau& t_multi, int n, int d);

/// Σ_σ χ(λ,σ) · column_bitableau(ī∘σ, j̄), χ in the swapped convention.
MPoly immanant(const Partition& lambda, const std::vector<int>& lefts, const std::vector<int>& rights, int n, int d);

/// Linear map sending each degree-h monomial (-1)^{C(h,2)}(ī|j̄)-column to imm_λ(ī;j̄).
/// Throws std::invalid_argument if p is nonzero and not homogeneous of degree |λ|.
MPoly imm_operator(const Partition& lambda, const MPoly& p);

/// Coordinates over standard bitableaux; throws std::invalid_argument if p is not homogeneous.
StdExpansion straighten(const MPoly& p);

/// Coordinates over standard right symmetrized bitableaux (Gordan-Capelli basis).
StdExpansion gc_expand(const MPoly& p);

/// All standard pairs of degree h with λ_1 <= min(n, d).
std::vector<BitabSpec> standard_bitableaux(int n, int d, int h);

/// (s|t) >= (p|q): larger shape, or same shape and w(s)w(t) <=_lex w(p)w(q).
bool straight_order_geq(const BitabSpec& st, const BitabSpec& pq);

/// Σ_φ (i|φ) ∂p/∂(j|φ).
MPoly act_generator(int i, int j, const MPoly& p);

/// Polarization action; the rightmost generator of each monomial acts first.
MPoly act_ugl(const UglElement& x, const MPoly& p);

/// (-1)^{C(h,2)} Σ_φ̄ (i_1|φ_1)...(i_h|φ_h) ∂_{(j_1|φ_1)}...∂_{(j_h|φ_h)} p.
MPoly act_column_capelli_diff(const std::vector<int>& lefts, const std::vector<int>& rights, const MPoly& p);

/// (1/dim μ) Σ_ī Σ_σ χ(μ̃,σ) Σ_φ̄ (i_1|φ_1)...(i_h|φ_h) ∂_{(i_σ(1)|φ_1)}...∂_{(i_σ(h)|φ_h)} p.
MPoly act_higher_capelli(const Partition& mu, const MPoly& p);

}  // namespace capelli
