#include "statedisc/types.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace statedisc {

namespace {
constexpr double kPsdTol = 1e-10;
constexpr double kTraceTol = 1e-10;
constexpr double kPriorTol = 1e-12;
constexpr double kCompletenessTol = 1e-9;
}  // namespace

double trace_product(const Matrix& a, const Matrix& b) {
    return (a.cwiseProduct(b.transpose())).sum().real();
}

DensityMatrix::DensityMatrix(HermitianOperator op) : op_(std::move(op)) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(op_.matrix(), Eigen::EigenvaluesOnly);
    const double min_eig = solver.eigenvalues().minCoeff();
    if (min_eig < -kPsdTol) {
        throw NegativeOperator("DensityMatrix: min eigenvalue " + std::to_string(min_eig));
    }
    const double tr = op_.matrix().trace().real();
    if (std::abs(tr - 1.0) > kTraceTol) {
        throw InvalidArgument("DensityMatrix: trace " + std::to_string(tr) + " != 1");
    }
}

DensityMatrix DensityMatrix::pure(const Vector& v) {
    const double norm2 = v.squaredNorm();
    if (norm2 <= 0.0) {
        throw InvalidArgument("DensityMatrix::pure: zero vector");
    }
    return DensityMatrix(Matrix(v * v.adjoint() / norm2));
}

DensityMatrix DensityMatrix::maximally_mixed(Eigen::Index dim) {
    return DensityMatrix(Matrix(Matrix::Identity(dim, dim) / static_cast<double>(dim)));
}

PriorDistribution::PriorDistribution(Eigen::VectorXd weights) : w_(std::move(weights)) {
    if (w_.size() < 1) {
        throw InvalidPrior("PriorDistribution: empty weight vector");
    }
    if (w_.minCoeff() < -kPriorTol) {
        throw InvalidPrior("PriorDistribution: negative weight " + std::to_string(w_.minCoeff()));
    }
    w_ = w_.cwiseMax(0.0);
    const double sum = w_.sum();
    if (std::abs(sum - 1.0) > kPriorTol) {
        throw InvalidPrior("PriorDistribution: weights sum to " + std::to_string(sum));
    }
}

PriorDistribution PriorDistribution::uniform(Eigen::Index n) {
    return PriorDistribution(Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n)));
}

WeightMatrix::WeightMatrix(Eigen::MatrixXd w) : w_(std::move(w)) {
    if (w_.rows() < 2 || w_.rows() != w_.cols()) {
        throw DimensionMismatch("WeightMatrix: must be square with n >= 2");
    }
    if (w_.minCoeff() < 0.0) {
        throw InvalidArgument("WeightMatrix: negative cost entry");
    }
}

WeightMatrix WeightMatrix::error_weights(Eigen::Index n) {
    Eigen::MatrixXd w = Eigen::MatrixXd::Ones(n, n);
    w.diagonal().setZero();
    return WeightMatrix(std::move(w));
}

Povm::Povm(std::vector<HermitianOperator> elements) : elements_(std::move(elements)) {
    if (elements_.size() < 2) {
        throw InvalidPovm("Povm: need at least two outcomes");
    }
    const Eigen::Index d = elements_.front().dim();
    Matrix sum = Matrix::Zero(d, d);
    for (std::size_t j = 0; j < elements_.size(); ++j) {
        const HermitianOperator& p = elements_[j];
        if (p.dim() != d) {
            throw DimensionMismatch("Povm: element " + std::to_string(j) + " has wrong dimension");
        }
        Eigen::SelfAdjointEigenSolver<Matrix> solver(p.matrix(), Eigen::EigenvaluesOnly);
        const double min_eig = solver.eigenvalues().minCoeff();
        if (min_eig < -kPsdTol) {
            throw NegativeOperator("Povm: element " + std::to_string(j) +
                                   " has min eigenvalue " + std::to_string(min_eig));
        }
        sum += p.matrix();
    }
    const double defect = max_abs(sum - Matrix::Identity(d, d));
    if (defect > kCompletenessTol) {
        throw InvalidPovm("Povm: completeness residual " + std::to_string(defect));
    }
}

Povm Povm::from_matrices(std::vector<Matrix> elements) {
    std::vector<HermitianOperator> ops;
    ops.reserve(elements.size());
    for (Matrix& m : elements) {
        ops.emplace_back(std::move(m));
    }
    return Povm(std::move(ops));
}

Povm Povm::mix(const std::vector<Povm>& povms, const Eigen::VectorXd& t) {
    if (povms.empty() || t.size() != static_cast<Eigen::Index>(povms.size())) {
        throw InvalidArgument("Povm::mix: weight count must match POVM count");
    }
    const Eigen::Index n = povms.front().size();
    const Eigen::Index d = povms.front().dim();
    std::vector<Matrix> acc(static_cast<std::size_t>(n), Matrix::Zero(d, d));
    for (Eigen::Index k = 0; k < t.size(); ++k) {
        const Povm& p = povms[static_cast<std::size_t>(k)];
        if (p.size() != n || p.dim() != d) {
            throw DimensionMismatch("Povm::mix: incompatible POVMs");
        }
        for (Eigen::Index j = 0; j < n; ++j) {
            acc[static_cast<std::size_t>(j)] += t(k) * p[j].matrix();
        }
    }
    return Povm::from_matrices(std::move(acc));
}

DualCertificate::DualCertificate(HermitianOperator y_in, PriorDistribution prior_in)
    : y(std::move(y_in)), prior(std::move(prior_in)), bound(y.matrix().trace().real()) {}

void Tolerances::validate() const {
    if (kernel_tol <= 0 || gap_tol <= 0 || equalization_tol <= 0 || simplex_grid_step < 0) {
        throw InvalidArgument("Tolerances: all tolerances must be positive");
    }
    if (simplex_grid_step > 0.5) {
        throw InvalidArgument("Tolerances: simplex_grid_step must be in (0, 0.5]");
    }
}

double Tolerances::grid_step_for(Eigen::Index n) const {
    if (simplex_grid_step > 0.0) return simplex_grid_step;
    if (n <= 3) return 0.02;
    if (n == 4) return 0.05;
    return 0.1;
}

DiscriminationProblem::DiscriminationProblem(std::vector<DensityMatrix> states,
                                             WeightMatrix weights, Tolerances tolerances)
    : states_(std::move(states)), weights_(std::move(weights)), tol_(tolerances) {
    if (states_.size() < 2) {
        throw InvalidArgument("DiscriminationProblem: need at least two states");
    }
    const Eigen::Index d = states_.front().dim();
    for (std::size_t i = 1; i < states_.size(); ++i) {
        if (states_[i].dim() != d) {
            throw DimensionMismatch("DiscriminationProblem: state " + std::to_string(i) +
                                    " has wrong dimension");
        }
    }
    if (weights_.size() != n()) {
        throw DimensionMismatch("DiscriminationProblem: weight matrix size != state count");
    }
    tol_.validate();
}

Matrix DiscriminationProblem::cost_operator(Eigen::Index j,
                                            const PriorDistribution& prior) const {
    if (prior.size() != n()) {
        throw DimensionMismatch("cost_operator: prior size != state count");
    }
    Matrix r = Matrix::Zero(dim(), dim());
    for (Eigen::Index i = 0; i < n(); ++i) {
        r += weights_(i, j) * prior[i] * state(i).matrix();
    }
    return r;
}

Eigen::VectorXd DiscriminationProblem::per_state_risk(const Povm& povm) const {
    if (povm.size() != n() || povm.dim() != dim()) {
        throw DimensionMismatch("per_state_risk: POVM incompatible with problem");
    }
    Eigen::VectorXd risk = Eigen::VectorXd::Zero(n());
    for (Eigen::Index i = 0; i < n(); ++i) {
        for (Eigen::Index j = 0; j < n(); ++j) {
            if (weights_(i, j) != 0.0) {
                risk(i) += weights_(i, j) * trace_product(state(i).matrix(), povm[j].matrix());
            }
        }
    }
    return risk;
}

double DiscriminationProblem::expected_risk(const Povm& povm,
                                            const PriorDistribution& prior) const {
    if (prior.size() != n()) {
        throw DimensionMismatch("expected_risk: prior size != state count");
    }
    return prior.weights().dot(per_state_risk(povm));
}

}  // namespace statedisc
