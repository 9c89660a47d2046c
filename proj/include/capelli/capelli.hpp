#pragma once

// Distinguished elements of U(gl(n)): column Capelli bitableaux and everything
// built from them, plus the bitableaux correspondence with C[M_{n,n}].

#include <vector>

#include "capelli/combinatorics.hpp"
#include "capelli/polyalg.hpp"
#include "capelli/ugl.hpp"

namespace capelli {

/// [ī|j̄] by the top-row recursion. Memoized on the row-sorted form of (ī, j̄).
/// Throws std::invalid_argument on length mismatch, std::out_of_range on bad indices.
UglElement column_capelli(const std::vector<int>& lefts, const std::vector<int>& rights, int n);

/// Same recursion without the memo table or row sorting.
UglElement column_capelli_direct(const std::vector<int>& lefts, const std::vector<int>& rights, int n);

/// [ī|j̄] by the bottom-row recursion.
UglElement column_capelli_alt(const std::vector<int>& lefts, const std::vector<int>& rights, int n);

/// [S|T] = Σ sign · [column pair] over expand_into_columns; zero on shape mismatch.
UglElement capelli_bitableau(const YoungTableau& s, const YoungTableau& t, int n);

/// [S|⎕T] = Σ over column permutations T̄ of T of [S|T̄].
UglElement young_capelli(const YoungTableau& s, const YoungTableau& t, int n);

/// [⎕S|T] = (-1)^{C(h,2)} Σ over row permutations T^σ of sgn(σ) [S|⎕T^σ].
UglElement double_young_capelli(const YoungTableau& s, const YoungTableau& t, int n);

/// Σ_σ χ(λ,σ) [ī∘σ|j̄], χ in the swapped convention.
UglElement capelli_immanant(const Partition& lambda, const std::vector<int>& lefts, const std::vector<int>& rights,
                            int n);

/// (-1)^{C(h,2)} Σ_{h_1+...+h_n=h} H(μ)/∏h_p! · Cimm_μ̃[diag; diag].
UglElement quantum_immanant(const Partition& mu, int n);

/// Same sum with weights 1/∏h_p!; equals quantum_immanant / H(μ).
UglElement schur_element(const Partition& mu, int n);

/// (1/H(μ)) Σ over row-strict S of shape μ̃ of [⎕S|S].
UglElement schur_element_dyc(const Partition& mu, int n);

/// Column determinant of (e_ij + δ_ij (n-i)), factors ordered by column.
UglElement capelli_determinant(int n);

/// Linear map C[M_{n,n}] -> U(gl(n)): monomial (i_1|j_1)...(i_h|j_h) ↦ (-1)^{C(h,2)} [ī|j̄].
/// Throws std::invalid_argument unless p.n() == p.d().
UglElement koszul_inverse(const MPoly& p);

/// Standard pairs (S, T) over {1..n}, shapes of weight <= max_weight with λ_1 <= n.
std::vector<BitabSpec> standard_young_capelli_pairs(int n, int max_weight);

/// Coordinates of x over standard Young-Capelli bitableaux of weight <= filtration degree of x.
/// Throws std::logic_error if the solve fails.
StdExpansion standard_capelli_expansion(const UglElement& x);

/// Forward Koszul map: replaces each [S|⎕T] in the standard expansion by (S|⎕T).
MPoly koszul(const UglElement& x);

/// Σ c · [S|⎕T] over an expansion.
UglElement realize_young_capelli(const StdExpansion& expansion, int n);

/// Σ c · (S|⎕T) over an expansion.
MPoly realize_right_symmetrized(const StdExpansion& expansion, int n, int d);

/// Σ c · (S|T) over an expansion.
MPoly realize_bitableaux(const StdExpansion& expansion, int n, int d);

}  // namespace capelli
