#pragma once

#include <vector>

#include "statedisc/types.hpp"

namespace statedisc {

/// Minimal expected-cost measurement for a fixed prior, together with a
/// feasibility-checked dual certificate. risk is recomputed from the
/// returned POVM; gap = risk - certificate.bound.
struct BayesSolution {
    Povm povm;
    double risk;
    std::vector<double> success_per_state;  // Tr[rho_i P_i]
    DualCertificate certificate;
    double gap;
    /// Expected cost after each solver iteration (nonincreasing).
    /// Holds the single final value for the closed-form two-state path.
    std::vector<double> iterate_risks;
};

/// Closed-form two-state minimal-error solver. The measurement is built
/// from the sign decomposition of D = a1 rho1 - a2 rho2:
/// P1 = Pi_+ + kernel_to_first * K, P2 = I - P1, and the error
/// probability equals (1 - |D|_1)/2. The kernel band of D is assigned
/// entirely to the first outcome by default.
BayesSolution helstrom_two_state(const DensityMatrix& rho1, const DensityMatrix& rho2,
                                 const PriorDistribution& prior,
                                 double kernel_to_first = 1.0);

/// N-state weighted minimal-cost solver (fixed-point iteration with a
/// monotone safeguard). Returns a POVM whose duality gap against the
/// assembled certificate is at most tolerances.gap_tol, or throws
/// ConvergenceFailure carrying the best gap achieved.
BayesSolution bayes_risk_n(const DiscriminationProblem& problem,
                           const PriorDistribution& prior);

/// Verifies Y <= sum_i w(i,j) mu_i rho_i for every outcome j within the
/// fixed feasibility tolerance 1e-8 and returns Tr Y. Throws
/// InfeasibleCertificate with the worst eigenvalue violation and the
/// offending outcome.
double check_certificate(const DualCertificate& cert, const DiscriminationProblem& problem);

namespace detail {

/// Relaxed-accuracy variant used for prior-space scouting: never throws
/// on slow convergence, returns whatever was reached. `warm_start` (may
/// be null) seeds the iteration; gap_target and max_iterations override
/// the problem tolerances.
struct InnerBayesResult {
    std::vector<Matrix> povm;   // raw elements, completeness-normalized
    double risk;                // expected cost, original weight scale
    Matrix y;                   // feasible dual operator, original scale
    double bound;               // Tr y
    double gap;                 // risk - bound
    std::vector<double> iterate_risks;
};

InnerBayesResult bayes_inner(const DiscriminationProblem& problem,
                             const PriorDistribution& prior, double gap_target,
                             long max_iterations,
                             const std::vector<Matrix>* warm_start = nullptr);

}  // namespace detail

}  // namespace statedisc
