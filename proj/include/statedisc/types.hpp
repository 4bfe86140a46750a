#pragma once

#include <vector>

#include "statedisc/herm.hpp"

namespace statedisc {

/// Trace-one positive semidefinite operator. Eigenvalues may dip to
/// -1e-10 and the trace may deviate from one by 1e-10 before
/// construction fails.
class DensityMatrix {
public:
    explicit DensityMatrix(Matrix m) : DensityMatrix(HermitianOperator(std::move(m))) {}
    explicit DensityMatrix(HermitianOperator op);

    /// |v><v| / <v|v>.
    static DensityMatrix pure(const Vector& v);
    static DensityMatrix maximally_mixed(Eigen::Index dim);

    const Matrix& matrix() const { return op_.matrix(); }
    const HermitianOperator& op() const { return op_; }
    Eigen::Index dim() const { return op_.dim(); }

private:
    HermitianOperator op_;
};

/// Probability vector over state indices. Doubles as the vector of
/// Lagrange multipliers in dual certificates.
class PriorDistribution {
public:
    explicit PriorDistribution(Eigen::VectorXd weights);
    static PriorDistribution uniform(Eigen::Index n);

    const Eigen::VectorXd& weights() const { return w_; }
    Eigen::Index size() const { return w_.size(); }
    double operator[](Eigen::Index i) const { return w_(i); }

private:
    Eigen::VectorXd w_;
};

/// Nonnegative misidentification costs w(i,j): the price of answering j
/// when the state was i.
class WeightMatrix {
public:
    explicit WeightMatrix(Eigen::MatrixXd w);

    /// w(i,j) = 1 - delta(i,j).
    static WeightMatrix error_weights(Eigen::Index n);

    const Eigen::MatrixXd& matrix() const { return w_; }
    Eigen::Index size() const { return w_.rows(); }
    double operator()(Eigen::Index i, Eigen::Index j) const { return w_(i, j); }

private:
    Eigen::MatrixXd w_;
};

/// Measurement with n >= 2 outcomes: positive semidefinite elements
/// summing to the identity (completeness residual <= 1e-9, element
/// eigenvalues >= -1e-10).
class Povm {
public:
    explicit Povm(std::vector<HermitianOperator> elements);
    static Povm from_matrices(std::vector<Matrix> elements);

    Eigen::Index size() const { return static_cast<Eigen::Index>(elements_.size()); }
    Eigen::Index dim() const { return elements_.front().dim(); }
    const HermitianOperator& operator[](Eigen::Index j) const {
        return elements_[static_cast<std::size_t>(j)];
    }
    const std::vector<HermitianOperator>& elements() const { return elements_; }

    /// Elementwise convex combination sum_k t_k povms[k].
    static Povm mix(const std::vector<Povm>& povms, const Eigen::VectorXd& t);

private:
    std::vector<HermitianOperator> elements_;
};

/// Hermitian Y and multiplier vector mu with Y <= sum_i w(i,j) mu_i rho_i
/// for every outcome j; Tr Y then lower-bounds the Bayesian risk at prior
/// mu and, maximized over mu, the minimax risk.
struct DualCertificate {
    HermitianOperator y;
    PriorDistribution prior;
    double bound;  // Tr Y

    DualCertificate(HermitianOperator y_in, PriorDistribution prior_in);
};

struct Tolerances {
    double kernel_tol = 1e-9;         // relative factor for spectral kernel bands
    double gap_tol = 1e-7;            // duality gap target for the Bayes solver
    double equalization_tol = 1e-8;   // allowed spread of per-state risks
    double simplex_grid_step = 0.0;   // 0 = auto (0.02 for n <= 3, coarser above)

    void validate() const;
    double grid_step_for(Eigen::Index n) const;
};

/// States to discriminate plus the cost matrix and solver tolerances.
/// The single input record for the Bayes, minimax, and oracle solvers.
class DiscriminationProblem {
public:
    DiscriminationProblem(std::vector<DensityMatrix> states, WeightMatrix weights,
                          Tolerances tolerances = {});

    Eigen::Index n() const { return static_cast<Eigen::Index>(states_.size()); }
    Eigen::Index dim() const { return states_.front().dim(); }
    const std::vector<DensityMatrix>& states() const { return states_; }
    const DensityMatrix& state(Eigen::Index i) const {
        return states_[static_cast<std::size_t>(i)];
    }
    const WeightMatrix& weights() const { return weights_; }
    const Tolerances& tolerances() const { return tol_; }

    /// Cost operator for outcome j at prior a: sum_i w(i,j) a_i rho_i.
    Matrix cost_operator(Eigen::Index j, const PriorDistribution& prior) const;

    /// Per-state risks r_i = sum_j w(i,j) Tr[rho_i P_j].
    Eigen::VectorXd per_state_risk(const Povm& povm) const;

    /// sum_i a_i r_i.
    double expected_risk(const Povm& povm, const PriorDistribution& prior) const;

private:
    std::vector<DensityMatrix> states_;
    WeightMatrix weights_;
    Tolerances tol_;
};

/// Real part of Tr[a b] (exact for products of Hermitian operators).
double trace_product(const Matrix& a, const Matrix& b);

}  // namespace statedisc
