#include "rindler/tensor.hpp"

#include <algorithm>
#include <cmath>

namespace rindler {

double hermiticity_defect(const Matrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const Matrix& m, double tol) {
  return m.rows() == m.cols() && hermiticity_defect(m) <= tol;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  const Eigen::Index da = a.rows(), db = b.rows();
  Matrix out(da * db, a.cols() * b.cols());
  for (Eigen::Index i = 0; i < da; ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * db, j * b.cols(), db, b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

namespace {

double off_diagonal_norm(const Matrix& a) {
  double sum = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (i != j) sum += std::norm(a(i, j));
    }
  }
  return std::sqrt(sum);
}

// Diagonalizes in place via cyclic Jacobi sweeps of complex 2x2 rotations.
// When `vectors` is non-null it accumulates the unitary.
void jacobi_diagonalize(Matrix& a, Matrix* vectors) {
  const Eigen::Index n = a.rows();
  if (vectors) *vectors = Matrix::Identity(n, n);
  const double tol = 1e-12 * static_cast<double>(n);
  constexpr int kMaxSweeps = 100;

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= tol) break;
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double abs_apq = std::abs(apq);
        if (abs_apq == 0.0) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        // Phase removal then a real Rutishauser rotation.
        const Complex phase = apq / abs_apq;
        const double tau = (aqq - app) / (2.0 * abs_apq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // Unitary columns: (c, -s*conj(phase)) and (s, c*conj(phase)).
        const Complex upq_p = -s * std::conj(phase);
        const Complex uqq_q = c * std::conj(phase);

        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * c + akq * upq_p;
          a(k, q) = akp * s + akq * uqq_q;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk + std::conj(upq_p) * aqk;
          a(q, k) = s * apk + std::conj(uqq_q) * aqk;
        }
        if (vectors) {
          for (Eigen::Index k = 0; k < n; ++k) {
            const Complex vkp = (*vectors)(k, p), vkq = (*vectors)(k, q);
            (*vectors)(k, p) = vkp * c + vkq * upq_p;
            (*vectors)(k, q) = vkp * s + vkq * uqq_q;
          }
        }
        // Rotations kill the imaginary dust on the diagonal.
        a(p, p) = Complex(a(p, p).real(), 0.0);
        a(q, q) = Complex(a(q, q).real(), 0.0);
        a(p, q) = Complex(0.0, 0.0);
        a(q, p) = Complex(0.0, 0.0);
      }
    }
  }
}

void require_hermitian(const Matrix& m, const char* who) {
  if (m.rows() != m.cols() || !is_hermitian(m)) {
    throw NonHermitianInput(std::string(who) + ": input matrix is not Hermitian");
  }
}

}  // namespace

RealVector hermitian_eigenvalues(const Matrix& m) {
  require_hermitian(m, "hermitian_eigenvalues");
  Matrix a = m;
  jacobi_diagonalize(a, nullptr);
  RealVector values = a.diagonal().real();
  std::sort(values.begin(), values.end());
  return values;
}

EigenSystem hermitian_eigensystem(const Matrix& m) {
  require_hermitian(m, "hermitian_eigensystem");
  Matrix a = m;
  Matrix v;
  jacobi_diagonalize(a, &v);
  const Eigen::Index n = a.rows();
  std::vector<Eigen::Index> order(static_cast<size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](Eigen::Index l, Eigen::Index r) {
    return a(l, l).real() < a(r, r).real();
  });
  EigenSystem out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out.values[i] = a(order[static_cast<size_t>(i)], order[static_cast<size_t>(i)]).real();
    out.vectors.col(i) = v.col(order[static_cast<size_t>(i)]);
  }
  return out;
}

double trace_norm(const Matrix& m) {
  require_hermitian(m, "trace_norm");
  return hermitian_eigenvalues(m).cwiseAbs().sum();
}

Matrix trace_out_slots(const Matrix& m, int n_slots, const std::vector<int>& keep) {
  if (keep.empty()) throw EmptyKeepSet("trace_out_slots: keep set is empty");
  std::vector<int> kept = keep;
  std::sort(kept.begin(), kept.end());
  if (std::unique(kept.begin(), kept.end()) != kept.end()) {
    throw Error("trace_out_slots: duplicate slot index");
  }
  if (kept.front() < 0 || kept.back() >= n_slots) {
    throw Error("trace_out_slots: slot index out of range");
  }
  std::vector<int> traced;
  for (int s = 0; s < n_slots; ++s) {
    if (!std::binary_search(kept.begin(), kept.end(), s)) traced.push_back(s);
  }

  const int nk = static_cast<int>(kept.size());
  const int nt = static_cast<int>(traced.size());
  const Eigen::Index dim_keep = Eigen::Index{1} << nk;
  const Eigen::Index dim_env = Eigen::Index{1} << nt;

  // Scatter (kept bits, env bits) back into a full-register index.
  auto scatter = [&](Eigen::Index ik, Eigen::Index ie) {
    Eigen::Index full = 0;
    for (int b = 0; b < nk; ++b) {
      const int bit = static_cast<int>((ik >> (nk - 1 - b)) & 1);
      full |= static_cast<Eigen::Index>(bit) << (n_slots - 1 - kept[static_cast<size_t>(b)]);
    }
    for (int b = 0; b < nt; ++b) {
      const int bit = static_cast<int>((ie >> (nt - 1 - b)) & 1);
      full |= static_cast<Eigen::Index>(bit) << (n_slots - 1 - traced[static_cast<size_t>(b)]);
    }
    return full;
  };

  Matrix out = Matrix::Zero(dim_keep, dim_keep);
  for (Eigen::Index i = 0; i < dim_keep; ++i) {
    for (Eigen::Index j = 0; j < dim_keep; ++j) {
      Complex sum(0.0, 0.0);
      for (Eigen::Index e = 0; e < dim_env; ++e) {
        sum += m(scatter(i, e), scatter(j, e));
      }
      out(i, j) = sum;
    }
  }
  return out;
}

Matrix transpose_slots(const Matrix& m, int n_slots, const std::vector<int>& transposed) {
  if (transposed.empty()) throw EmptyTransposeSet("transpose_slots: transpose set is empty");
  Eigen::Index mask = 0;
  for (int s : transposed) {
    if (s < 0 || s >= n_slots) throw Error("transpose_slots: slot index out of range");
    mask |= Eigen::Index{1} << (n_slots - 1 - s);
  }
  const Eigen::Index dim = Eigen::Index{1} << n_slots;
  Matrix out(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      const Eigen::Index src_row = (j & mask) | (i & ~mask);
      const Eigen::Index src_col = (i & mask) | (j & ~mask);
      out(i, j) = m(src_row, src_col);
    }
  }
  return out;
}

DensityMatrix::DensityMatrix(ModeRegister reg, Matrix mat)
    : reg_(std::move(reg)), mat_(std::move(mat)) {
  if (mat_.rows() != mat_.cols() || mat_.rows() != reg_.dimension()) {
    throw Error("density matrix dimension does not match its register");
  }
  if (!is_hermitian(mat_)) {
    throw NonHermitianInput("density matrix is not Hermitian");
  }
  if (std::abs(mat_.trace().real() - 1.0) > kTraceTol ||
      std::abs(mat_.trace().imag()) > kTraceTol) {
    throw Error("density matrix trace deviates from 1");
  }
}

void DensityMatrix::validate() const {
  const RealVector eigs = hermitian_eigenvalues(mat_);
  if (eigs[0] < kPsdTol) {
    throw Error("density matrix has an eigenvalue below the PSD tolerance");
  }
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
  if (keep.empty()) throw EmptyKeepSet("partial_trace: keep set is empty");
  std::vector<int> kept = keep;
  std::sort(kept.begin(), kept.end());
  Matrix reduced = trace_out_slots(rho.matrix(), rho.reg().size(), kept);
  return DensityMatrix(rho.reg().subset(kept), std::move(reduced));
}

Matrix partial_transpose(const DensityMatrix& rho, const std::vector<int>& transposed) {
  if (transposed.empty()) {
    throw EmptyTransposeSet("partial_transpose: transpose set is empty");
  }
  return transpose_slots(rho.matrix(), rho.reg().size(), transposed);
}

}  // namespace rindler
