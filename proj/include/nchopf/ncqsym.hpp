#ifndef NCHOPF_NCQSYM_HPP_
#define NCHOPF_NCQSYM_HPP_

// Quasi-symmetric functions in non-commuting variables and the graded dual.
// Algebra side: bases M, Q. Dual side: bases W, V, Qdual.

#include <vector>

#include "nchopf/hopf.hpp"
#include "nchopf/linalg.hpp"
#include "nchopf/ncsym.hpp"
#include "nchopf/report.hpp"
#include "nchopf/setcomp.hpp"

namespace nchopf::ncqsym {

using Elt = Element<SetComposition>;
using Tens = Tensor<SetComposition>;

// Sum of M_G over G with (([n])|([k])) wedge G = Phi|Psi, generated as the
// order-preserving interleavings of the parts of Phi and of Psi shifted by n,
// where a part of each may be fused into one.
Elt M_mul(const SetComposition& phi, const SetComposition& psi);
// Literal definition by filtering all compositions of [n+k].
Elt M_mul_by_wedge(const SetComposition& phi, const SetComposition& psi);
// Sum over cuts i of st(Phi_1..Phi_i) (x) st(Phi_{i+1}..).
Tens M_comul(const SetComposition& phi);

// Sum over n-subsets S of W_{Phi raised to S . Psi raised to S^c}.
Elt W_mul(const SetComposition& phi, const SetComposition& psi);
// Sum over k of W_{Phi restricted to [k]} (x) W_{st(Phi restricted to the rest)}.
Tens W_comul(const SetComposition& phi);
// The same through the condition (([k])|([n-k])) wedge Phi = Psi|Gamma.
Tens W_comul_by_wedge(const SetComposition& phi);

// Q_Phi = sum of M over the <=_* up-set.
Elt Q_expand(const SetComposition& phi);
// Sum of Q_G over the shifted shuffle of Phi and Psi.
Elt Q_mul(const SetComposition& phi, const SetComposition& psi);
// V_Phi = sum of W over the <=_# up-set.
Elt V_expand(const SetComposition& phi);
// V_{Phi|Psi}.
Elt V_mul(const SetComposition& phi, const SetComposition& psi);
// Dual basis to Q under the pairing: sum over Psi <=_* Phi of
// (-1)^(l(Psi)-l(Phi)) W_Psi.
Elt Qdual_expand(const SetComposition& phi);

// theta(m_A) = sum of M_Phi over the orderings Phi of the blocks of A.
Elt theta(const ncsym::Elt& x);
// theta*(W_Phi) = w_{A(Phi)}.
ncsym::Elt theta_star(const Elt& x);

const HopfAlgebra<SetComposition>& M_algebra();
const HopfAlgebra<SetComposition>& W_algebra();
const TriangularBasis<SetComposition>& Q_basis();
const TriangularBasis<SetComposition>& V_basis();
const TriangularBasis<SetComposition>& Qdual_basis();

// Changes between bases on the same side (M, Q or W, V, Qdual).
Elt convert(const Elt& x, Basis to);
Elt mul(const Elt& x, const Elt& y);
Tens comul(const Elt& x);
Elt antipode(const Elt& x);
Integer pair(const Elt& x, const Elt& y);

Report verify_hopf(int max_grade);
// [Delta M_Phi, W_Psi (x) W_G] = [M_Phi, W_Psi W_G] and
// [M_Phi M_Psi, W_G] = [M_Phi (x) M_Psi, Delta* W_G].
Report verify_duality(int max_grade);
// Q shifted-shuffle and V concatenation rules against M/W-level products.
Report verify_multiplicative(int max_grade);
// Q triangularity under the word order, V-monomial counts, W-product alpha
// conservation.
Report verify_free_cofree(int max_grade);
// theta is an algebra and coalgebra map; theta* intertwines the dual
// coproducts; both forms of the dual coproduct agree.
Report verify_theta(int max_grade);
// [Q_Phi, Qdual_Psi] = delta.
Report verify_qdual(int max_grade);

}  // namespace nchopf::ncqsym

#endif  // NCHOPF_NCQSYM_HPP_
