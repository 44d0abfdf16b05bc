#pragma once

#include <vector>

#include "rindler/types.hpp"

namespace rindler {

// ---------------------------------------------------------------------------
// Dense complex tensor algebra over qubit-type mode registers.
// All functions are pure; inputs are never modified.
// ---------------------------------------------------------------------------

// max_ij |M(i,j) - conj(M(j,i))|
double hermiticity_defect(const Matrix& m);

bool is_hermitian(const Matrix& m, double tol = kHermitianTol);

// Kronecker product, row-major slot convention:
// result((i*db + k), (j*db + l)) = a(i,j) * b(k,l).
Matrix kron(const Matrix& a, const Matrix& b);

struct EigenSystem {
  RealVector values;  // ascending
  Matrix vectors;     // column k pairs with values[k]
};

// Eigenvalues of a Hermitian matrix, ascending. Cyclic Jacobi with complex
// 2x2 rotations; converges when the off-diagonal Frobenius norm drops below
// 1e-12 * dim, hard cap 100 sweeps. Throws NonHermitianInput when the input
// fails the Hermiticity check.
RealVector hermitian_eigenvalues(const Matrix& m);

// Same solver, also accumulating the unitary of eigenvectors.
EigenSystem hermitian_eigensystem(const Matrix& m);

// Trace norm sum_i |lambda_i| of a Hermitian matrix.
double trace_norm(const Matrix& m);

// Slot-level primitives on bare 2^n x 2^n matrices (slot 0 = MSB).

// Trace out every slot not in `keep`; kept slots stay in their relative order.
Matrix trace_out_slots(const Matrix& m, int n_slots, const std::vector<int>& keep);

// Transpose the listed slots only.
Matrix transpose_slots(const Matrix& m, int n_slots, const std::vector<int>& transposed);

// ---------------------------------------------------------------------------
// Density matrices
// ---------------------------------------------------------------------------

// Hermitian, unit-trace matrix over a mode register. Construction verifies
// Hermiticity (1e-12) and trace (1e-10); positivity is checked by validate()
// since it costs a full eigensolve.
class DensityMatrix {
 public:
  DensityMatrix(ModeRegister reg, Matrix mat);

  const ModeRegister& reg() const { return reg_; }
  const Matrix& matrix() const { return mat_; }
  Eigen::Index dimension() const { return mat_.rows(); }

  // Full invariant check including smallest eigenvalue >= -1e-10.
  void validate() const;

 private:
  ModeRegister reg_;
  Matrix mat_;
};

// Reduce to the kept slot indices (any order given, applied ascending).
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);

// Partial transpose over the given slot indices; result is Hermitian and
// trace-preserving but generally not positive.
Matrix partial_transpose(const DensityMatrix& rho, const std::vector<int>& transposed);

}  // namespace rindler
