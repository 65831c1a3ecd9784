#include "qwalk/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qwalk {

namespace {

constexpr double kSymmetryTol = 1e-12;
constexpr double kOffDiagonalTol = 1e-13; // relative to the input Frobenius scale
constexpr int kMaxSweeps = 100;
constexpr double kNormTol = 1e-10;
constexpr double kDegeneracyTol = 1e-8; // times max(1, |lambda_max|)

double off_diagonal_norm(const Matrix& a) {
    int n = a.rows();
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) s += a(i, j) * a(i, j);
    return std::sqrt(2.0 * s);
}

} // namespace

AmplitudeVector::AmplitudeVector(std::vector<std::complex<double>> amplitudes)
    : c_(std::move(amplitudes)) {
    if (c_.empty()) throw std::invalid_argument("AmplitudeVector: empty state");
    double n = norm();
    if (std::abs(n - 1.0) > kNormTol)
        throw std::invalid_argument("AmplitudeVector: norm " + std::to_string(n) +
                                    " is not 1 within 1e-10");
}

double AmplitudeVector::norm() const {
    double s = 0.0;
    for (const auto& z : c_) s += std::norm(z);
    return std::sqrt(s);
}

SpectralDecomposition eigh(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("eigh: matrix is not square");
    if (m.max_asymmetry() > kSymmetryTol)
        throw std::invalid_argument("eigh: matrix asymmetry " +
                                    std::to_string(m.max_asymmetry()) + " exceeds 1e-12");

    int n = m.rows();
    Matrix a = m;
    Matrix v = Matrix::identity(n);
    double threshold = kOffDiagonalTol * std::max(1.0, a.frobenius_norm());

    bool converged = off_diagonal_norm(a) <= threshold;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = a(p, q);
                if (apq == 0.0) continue;
                double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                double t;
                if (std::abs(theta) > 1e10) {
                    t = 1.0 / (2.0 * theta);
                } else {
                    t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                    if (theta < 0.0) t = -t;
                }
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                double tau = s / (1.0 + c);

                double app = a(p, p), aqq = a(q, q);
                a(p, p) = app - t * apq;
                a(q, q) = aqq + t * apq;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (int r = 0; r < n; ++r) {
                    if (r != p && r != q) {
                        double arp = a(r, p), arq = a(r, q);
                        a(r, p) = arp - s * (arq + tau * arp);
                        a(p, r) = a(r, p);
                        a(r, q) = arq + s * (arp - tau * arq);
                        a(q, r) = a(r, q);
                    }
                    double vrp = v(r, p), vrq = v(r, q);
                    v(r, p) = vrp - s * (vrq + tau * vrp);
                    v(r, q) = vrq + s * (vrp - tau * vrq);
                }
            }
        }
        converged = off_diagonal_norm(a) <= threshold;
    }
    if (!converged)
        throw numerical_error("eigh: Jacobi did not converge in " +
                              std::to_string(kMaxSweeps) + " sweeps, residual " +
                              std::to_string(off_diagonal_norm(a)));

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return a(x, x) < a(y, y); });

    SpectralDecomposition d;
    d.eigenvalues.resize(n);
    d.eigenvectors = Matrix(n, n);
    for (int k = 0; k < n; ++k) {
        int src = order[k];
        d.eigenvalues[k] = a(src, src);
        int peak = 0;
        for (int r = 1; r < n; ++r)
            if (std::abs(v(r, src)) > std::abs(v(peak, src))) peak = r;
        double flip = v(peak, src) < 0.0 ? -1.0 : 1.0;
        for (int r = 0; r < n; ++r) d.eigenvectors(r, k) = flip * v(r, src);
    }
    return d;
}

AmplitudeVector propagate(const SpectralDecomposition& d, const AmplitudeVector& psi0,
                          double t, int phase_sign) {
    int n = d.size();
    if (psi0.size() != n)
        throw std::invalid_argument("propagate: state size does not match decomposition");
    if (t < 0.0) throw std::invalid_argument("propagate: negative time");
    if (phase_sign != 1 && phase_sign != -1)
        throw std::invalid_argument("propagate: phase_sign must be +1 or -1");

    const Matrix& v = d.eigenvectors;
    std::vector<std::complex<double>> coeff(n);
    for (int k = 0; k < n; ++k) {
        std::complex<double> s = 0.0;
        for (int j = 0; j < n; ++j) s += v(j, k) * psi0[j];
        coeff[k] = s;
    }
    for (int k = 0; k < n; ++k) {
        double phase = phase_sign * d.eigenvalues[k] * t;
        coeff[k] *= std::complex<double>(std::cos(phase), std::sin(phase));
    }
    std::vector<std::complex<double>> out(n);
    for (int j = 0; j < n; ++j) {
        std::complex<double> s = 0.0;
        for (int k = 0; k < n; ++k) s += v(j, k) * coeff[k];
        out[j] = s;
    }
    return AmplitudeVector(std::move(out));
}

std::vector<double> exact_time_average(const SpectralDecomposition& d,
                                       const AmplitudeVector& psi0) {
    int n = d.size();
    if (psi0.size() != n)
        throw std::invalid_argument("exact_time_average: state size mismatch");

    const Matrix& v = d.eigenvectors;
    std::vector<std::complex<double>> coeff(n);
    for (int k = 0; k < n; ++k) {
        std::complex<double> s = 0.0;
        for (int j = 0; j < n; ++j) s += v(j, k) * psi0[j];
        coeff[k] = s;
    }

    double scale = 1.0;
    for (double lambda : d.eigenvalues) scale = std::max(scale, std::abs(lambda));
    double tol = kDegeneracyTol * scale;

    std::vector<double> pops(n, 0.0);
    int k = 0;
    while (k < n) {
        int end = k + 1;
        while (end < n && d.eigenvalues[end] - d.eigenvalues[end - 1] <= tol) ++end;
        for (int j = 0; j < n; ++j) {
            std::complex<double> s = 0.0;
            for (int g = k; g < end; ++g) s += v(j, g) * coeff[g];
            pops[j] += std::norm(s);
        }
        k = end;
    }
    return pops;
}

} // namespace qwalk
