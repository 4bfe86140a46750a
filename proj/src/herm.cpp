#include "statedisc/herm.hpp"

#include <algorithm>
#include <cmath>

namespace statedisc {

namespace {
constexpr double kHermitianTolFactor = 1e-12;
constexpr double kKernelTolFactor = 1e-9;
}  // namespace

double max_abs(const Matrix& m) {
    if (m.size() == 0) return 0.0;
    return m.cwiseAbs().maxCoeff();
}

Matrix hermitian_part(const Matrix& m) {
    return 0.5 * (m + m.adjoint());
}

HermitianOperator::HermitianOperator(Matrix m) {
    if (m.rows() < 1 || m.rows() != m.cols()) {
        throw DimensionMismatch("HermitianOperator: matrix must be square and nonempty");
    }
    const double scale = std::max(1.0, max_abs(m));
    const double defect = max_abs(m - m.adjoint().eval());
    if (defect > kHermitianTolFactor * scale) {
        throw NonHermitian("HermitianOperator: |M - M^dag| = " + std::to_string(defect) +
                           " exceeds tolerance " + std::to_string(kHermitianTolFactor * scale));
    }
    m_ = hermitian_part(m);
}

Matrix SpectralDecomposition::reconstruct() const {
    return eigenvectors * eigenvalues.asDiagonal() * eigenvectors.adjoint();
}

SpectralDecomposition eig_hermitian(const HermitianOperator& m) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m.matrix());
    if (solver.info() != Eigen::Success) {
        throw Error("eig_hermitian: eigensolver failed to converge");
    }
    const Eigen::Index d = m.dim();
    SpectralDecomposition out;
    out.eigenvalues.resize(d);
    out.eigenvectors.resize(d, d);
    // Eigen sorts ascending; flip to descending.
    for (Eigen::Index i = 0; i < d; ++i) {
        out.eigenvalues(i) = solver.eigenvalues()(d - 1 - i);
        out.eigenvectors.col(i) = solver.eigenvectors().col(d - 1 - i);
    }
    return out;
}

double trace_norm(const HermitianOperator& m) {
    return eig_hermitian(m).eigenvalues.cwiseAbs().sum();
}

double default_kernel_tol(const HermitianOperator& m) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m.matrix(), Eigen::EigenvaluesOnly);
    const double opnorm = solver.eigenvalues().cwiseAbs().maxCoeff();
    return kKernelTolFactor * std::max(1.0, opnorm);
}

SignedParts signed_parts(const HermitianOperator& m, std::optional<double> kernel_tol) {
    const SpectralDecomposition ed = eig_hermitian(m);
    const double tol = kernel_tol.value_or(
        kKernelTolFactor * std::max(1.0, ed.eigenvalues.cwiseAbs().maxCoeff()));
    if (tol <= 0.0) {
        throw InvalidArgument("signed_parts: kernel_tol must be positive");
    }
    const Eigen::Index d = m.dim();
    SignedParts parts{Matrix::Zero(d, d), Matrix::Zero(d, d), Matrix::Zero(d, d)};
    for (Eigen::Index i = 0; i < d; ++i) {
        const double lambda = ed.eigenvalues(i);
        const Matrix proj = ed.eigenvectors.col(i) * ed.eigenvectors.col(i).adjoint();
        if (lambda > tol) {
            parts.positive += proj;
        } else if (lambda < -tol) {
            parts.negative += proj;
        } else {
            parts.kernel += proj;
        }
    }
    return parts;
}

Matrix support_projector(const HermitianOperator& m, std::optional<double> tol_in) {
    const SpectralDecomposition ed = eig_hermitian(m);
    const double tol = tol_in.value_or(
        kKernelTolFactor * std::max(1.0, ed.eigenvalues.cwiseAbs().maxCoeff()));
    if (tol <= 0.0) {
        throw InvalidArgument("support_projector: tol must be positive");
    }
    const double min_eig = ed.eigenvalues(m.dim() - 1);
    if (min_eig < -tol) {
        throw NegativeOperator("support_projector: min eigenvalue " + std::to_string(min_eig) +
                               " below -" + std::to_string(tol));
    }
    Matrix proj = Matrix::Zero(m.dim(), m.dim());
    for (Eigen::Index i = 0; i < m.dim(); ++i) {
        if (ed.eigenvalues(i) > tol) {
            proj += ed.eigenvectors.col(i) * ed.eigenvectors.col(i).adjoint();
        }
    }
    return proj;
}

}  // namespace statedisc
