#ifndef NCHOPF_NCSYM_HPP_
#define NCHOPF_NCSYM_HPP_

// Symmetric functions in non-commuting variables and the graded dual.
// Algebra side: bases m, p, q. Dual side: bases w, qdual.

#include <vector>

#include "nchopf/hopf.hpp"
#include "nchopf/linalg.hpp"
#include "nchopf/report.hpp"
#include "nchopf/setpart.hpp"

namespace nchopf::ncsym {

using Elt = Element<SetPartition>;
using Tens = Tensor<SetPartition>;

// Sum of m_C over C with C meet ([n]|[k]) = A|B. Generated directly as the
// partitions obtained from A|B by merging blocks of A with blocks of B
// along a partial matching.
Elt m_mul(const SetPartition& a, const SetPartition& b);
// Literal definition: filter every C of [n+k] by the meet condition.
Elt m_mul_by_meet(const SetPartition& a, const SetPartition& b);
// Sum over subsets S of the blocks of st(A_S) (x) st(A_{S^c}).
Tens m_comul(const SetPartition& a);

// Sum over n-subsets S of [n+k] of w_{A raised to S, B raised to S^c}.
Elt w_mul(const SetPartition& a, const SetPartition& b);
// Sum over cuts i of st(A restricted to [i]) (x) st(A restricted to the rest).
Tens w_comul(const SetPartition& a);
// Same coproduct through the condition ([k]|[n-k]) meet A = B|C.
Tens w_comul_by_meet(const SetPartition& a);

// p_A = sum of m_B over B >= A in refinement.
Elt p_expand(const SetPartition& a);
// q_A = sum of m_B over A <=_* B.
Elt q_expand(const SetPartition& a);
// q*_A = sum over B <=_* A of (-1)^(l(B)-l(A)) w_B.
Elt qdual_expand(const SetPartition& a);

Elt p_mul(const SetPartition& a, const SetPartition& b);
Elt q_mul(const SetPartition& a, const SetPartition& b);

const HopfAlgebra<SetPartition>& m_algebra();
const HopfAlgebra<SetPartition>& w_algebra();
const TriangularBasis<SetPartition>& p_basis();
const TriangularBasis<SetPartition>& q_basis();
const TriangularBasis<SetPartition>& qdual_basis();

// Changes between bases on the same side (m, p, q or w, qdual).
// Throws BasisMismatch across sides.
Elt convert(const Elt& x, Basis to);
// Product, coproduct and antipode in the basis of the operands.
Elt mul(const Elt& x, const Elt& y);
Tens comul(const Elt& x);
Elt antipode(const Elt& x);

// [x, y] for x on the algebra side and y on the dual side, any bases.
Integer pair(const Elt& x, const Elt& y);

// Lyndon set partitions of [n].
std::vector<SetPartition> lyndon_generators(int n);

// Hopf axioms for the m and w structures, grades 0..max_grade.
Report verify_hopf(int max_grade);
// [m_C, w_A w_B] = [Delta m_C, w_A (x) w_B] and
// [m_B m_C, w_A] = [m_B (x) m_C, Delta* w_A], total grade <= max_grade.
Report verify_duality(int max_grade);
// p and q products against the m-level product, pairs of total grade
// <= max_grade, and q multiplicativity over atomic factors.
Report verify_multiplicative(int max_grade);
// Atomic p- and q-monomials per grade biject with partitions.
Report verify_free(int max_grade);
// Shuffle triangularity of the w product and full rank of nonincreasing
// products of Lyndon w's.
Report verify_cofree(int max_grade);
// Both forms of the dual coproduct agree.
Report verify_dual_coproduct_forms(int max_grade);
// The p-in-q matrix is 0/1 and unitriangular, and times the q-in-m matrix
// gives the refinement zeta matrix.
Report verify_zeta_factorization(int max_grade);
// [q_A, q*_B] = delta_AB.
Report verify_qdual(int max_grade);

}  // namespace nchopf::ncsym

#endif  // NCHOPF_NCSYM_HPP_
