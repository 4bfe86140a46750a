#pragma once

#include <stdexcept>
#include <string>

namespace statedisc {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input matrix is not Hermitian within tolerance.
struct NonHermitian : Error {
    using Error::Error;
};

/// Operator expected to be positive semidefinite has a significantly
/// negative eigenvalue.
struct NegativeOperator : Error {
    using Error::Error;
};

/// Operands live on Hilbert spaces of different dimension, or list
/// lengths are inconsistent.
struct DimensionMismatch : Error {
    using Error::Error;
};

/// Probability vector is not normalized or has negative entries.
struct InvalidPrior : Error {
    using Error::Error;
};

/// POVM invariant violated (completeness or element count).
struct InvalidPovm : Error {
    using Error::Error;
};

/// Generic precondition violation on an argument value.
struct InvalidArgument : Error {
    using Error::Error;
};

/// An iterative solver exhausted its budget before reaching the
/// requested duality gap; best_gap is the smallest gap achieved.
struct ConvergenceFailure : Error {
    ConvergenceFailure(const std::string& what, double gap)
        : Error(what), best_gap(gap) {}
    double best_gap;
};

/// A dual certificate violates its feasibility constraints.
/// worst_eigenvalue is the most negative eigenvalue of the slack
/// operator, outcome the index j where it occurs.
struct InfeasibleCertificate : Error {
    InfeasibleCertificate(const std::string& what, double eig, int j)
        : Error(what), worst_eigenvalue(eig), outcome(j) {}
    double worst_eigenvalue;
    int outcome;
};

/// Pure states are (numerically) linearly dependent; no biorthogonal
/// dual basis exists.
struct LinearlyDependent : Error {
    using Error::Error;
};

/// A group representation element fails the unitarity check.
struct NonUnitaryRep : Error {
    using Error::Error;
};

/// Random POVM sampling produced a (near-)singular normalizer
/// repeatedly.
struct SingularNormalizer : Error {
    using Error::Error;
};

/// Exhaustive search space too large for the diagonal oracle.
struct ProblemTooLarge : Error {
    using Error::Error;
};

/// Problem or solution file failed to parse or validate.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace statedisc
