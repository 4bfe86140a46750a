#pragma once

#include <complex>
#include <optional>

#include <Eigen/Dense>

#include "statedisc/errors.hpp"

namespace statedisc {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Largest absolute entry of a matrix.
double max_abs(const Matrix& m);

/// (m + m†)/2.
Matrix hermitian_part(const Matrix& m);

/// A square complex matrix checked to be Hermitian within
/// 1e-12 * max(1, largest |entry|) and stored exactly symmetrized,
/// so downstream arithmetic sees m == m† to machine precision.
class HermitianOperator {
public:
    explicit HermitianOperator(Matrix m);

    const Matrix& matrix() const { return m_; }
    Eigen::Index dim() const { return m_.rows(); }

private:
    Matrix m_;
};

/// Eigensystem of a Hermitian operator, eigenvalues sorted descending,
/// eigenvectors the matching orthonormal columns. Individual vectors in
/// a degenerate eigenspace are basis-dependent; consumers must build
/// projectors instead of relying on them.
struct SpectralDecomposition {
    Eigen::VectorXd eigenvalues;
    Matrix eigenvectors;

    /// Sum of lambda_i |v_i><v_i|.
    Matrix reconstruct() const;
};

/// Orthogonal projectors onto the strictly positive part, the kernel
/// band, and the strictly negative part of a Hermitian operator.
/// They are mutually orthogonal and sum to the identity.
struct SignedParts {
    Matrix positive;
    Matrix kernel;
    Matrix negative;
};

SpectralDecomposition eig_hermitian(const HermitianOperator& m);

/// Sum of |eigenvalue| over the spectrum.
double trace_norm(const HermitianOperator& m);

/// Kernel band threshold used when none is supplied:
/// 1e-9 * max(1, operator norm).
double default_kernel_tol(const HermitianOperator& m);

/// Splits the spectrum at +-kernel_tol. Eigenvalues above the band go
/// to `positive`, inside it to `kernel`, below it to `negative`.
SignedParts signed_parts(const HermitianOperator& m,
                         std::optional<double> kernel_tol = std::nullopt);

/// Projector onto the span of eigenvectors with eigenvalue > tol.
/// The operator must be positive semidefinite within tol; a negative
/// eigenvalue below -tol raises NegativeOperator.
Matrix support_projector(const HermitianOperator& m,
                         std::optional<double> tol = std::nullopt);

}  // namespace statedisc
