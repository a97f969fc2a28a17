#ifndef HERMITIA_ORACLE_HPP
#define HERMITIA_ORACLE_HPP

#include <functional>
#include <vector>

#include "hermitia/hermitian.hpp"

namespace hermitia {

// Independent ground-truth kernel: a cyclic Jacobi eigensolver for complex
// Hermitian matrices, and eigendecomposition-based reference implementations
// of the constructive operations.  In the classical picture this realizes
// the spectral theorem directly; the iterative paths elsewhere in the
// library are cross-checked against it.

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // unitary, columns are eigenvectors
};

// Cyclic complex Jacobi rotations until the off-diagonal Frobenius mass is
// below 1e-13*||g||_F; eigenvalues sorted ascending.  Throws NoConvergence
// after 100 sweeps (unreachable in practice for n <= 64).
EigenDecomposition eig(const HermitianMatrix& g);

// V diag(f(lambda_i)) V†.  Throws DomainError when f is undefined on the
// spectrum (the caller passes a domain guard).
HermitianMatrix apply_scalar_function(const HermitianMatrix& g,
                                      const std::function<double(double)>& f);

// Operator norm max|lambda| through the eigensolver.  This is the 1-norm on
// the matrix model; used internally for tolerance scaling.
double operator_norm(const HermitianMatrix& g);

// min/max eigenvalue pair.
struct EigRange {
  double min = 0.0;
  double max = 0.0;
};
EigRange eigenvalue_range(const HermitianMatrix& g);

// Reference implementations.  zero_tol decides support/sign membership for
// eigenvalues near zero; callers pass tau_psd-scaled values.
HermitianMatrix oracle_sqrt(const HermitianMatrix& g, double neg_tol);
HermitianMatrix oracle_abs(const HermitianMatrix& g);
HermitianMatrix oracle_signum(const HermitianMatrix& g, double zero_tol);
HermitianMatrix oracle_carrier(const HermitianMatrix& g, double zero_tol);
HermitianMatrix oracle_pos_part(const HermitianMatrix& g);
HermitianMatrix oracle_neg_part(const HermitianMatrix& g);
HermitianMatrix oracle_inverse(const HermitianMatrix& g, double zero_tol);
// Projection onto eigenspaces with eigenvalue <= lambda + inclusion_tol
// (right-continuous threshold).
HermitianMatrix oracle_spectral_projection(const HermitianMatrix& g,
                                           double lambda,
                                           double inclusion_tol);
// Projection onto eigenspaces with |eigenvalue - lambda| <= cluster_tol.
HermitianMatrix oracle_eigenprojection(const HermitianMatrix& g, double lambda,
                                       double cluster_tol);

}  // namespace hermitia

#endif  // HERMITIA_ORACLE_HPP
