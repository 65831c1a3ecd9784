#pragma once

#include <complex>
#include <vector>

#include "qwalk/matrix.hpp"

namespace qwalk {

/// Raised when an iterative numerical routine fails to meet its tolerance.
struct numerical_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Unit-norm complex state of the walker over the nodes of a graph.
/// c[j] is the amplitude on node j+1; sum_j |c[j]|^2 = 1 within 1e-10.
class AmplitudeVector {
public:
    explicit AmplitudeVector(std::vector<std::complex<double>> amplitudes);

    int size() const { return static_cast<int>(c_.size()); }
    const std::complex<double>& operator[](int j) const { return c_[j]; }
    const std::vector<std::complex<double>>& amplitudes() const { return c_; }

    double norm() const;

private:
    std::vector<std::complex<double>> c_;
};

/// Eigendecomposition of a real symmetric matrix: ascending eigenvalues and
/// the matching orthonormal eigenvector columns.
struct SpectralDecomposition {
    std::vector<double> eigenvalues;
    Matrix eigenvectors; // column k pairs with eigenvalues[k]

    int size() const { return static_cast<int>(eigenvalues.size()); }
};

/// Eigendecomposition via cyclic Jacobi rotations. Converged when the
/// off-diagonal Frobenius norm falls below 1e-13 relative to the input scale;
/// capped at 100 sweeps (throws numerical_error with the residual beyond
/// that). Input must be symmetric within 1e-12. Eigenvector columns have
/// their largest-magnitude entry forced positive so serialized output is
/// identical across runs.
SpectralDecomposition eigh(const Matrix& m);

/// Evolves psi0 by V diag(exp(i * phase_sign * lambda_k * t)) V^T psi0.
/// phase_sign -1 realizes exp(-iAt) (adjacency walk), +1 realizes exp(+iLt)
/// (Laplacian walk). Norm is preserved.
AmplitudeVector propagate(const SpectralDecomposition& d, const AmplitudeVector& psi0,
                          double t, int phase_sign);

/// Infinite-time average of the node probabilities: cross terms between
/// distinct eigenvalues dephase, so
///   P_j = sum over distinct-eigenvalue groups |sum_{k in group} V_jk <v_k|psi0>|^2
/// with eigenvalues grouped as equal when within 1e-8 * max(1, |lambda_max|).
/// Serves as the exact oracle for finite-T averages.
std::vector<double> exact_time_average(const SpectralDecomposition& d,
                                       const AmplitudeVector& psi0);

} // namespace qwalk
