#include "bigeo/density_matrix.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace bigeo {

DensityMatrix4 DensityMatrix4::from_matrix(const Matrix4c& m) {
    const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (herm > kHermitianTol)
        throw state_error("DensityMatrix4: matrix is not Hermitian within 1e-12 (deviation " +
                          std::to_string(herm) + ")");
    const double tr = m.trace().real();
    if (std::abs(tr - 1.0) > kTraceTol)
        throw state_error("DensityMatrix4: trace is not 1 within 1e-10 (trace " +
                          std::to_string(tr) + ")");
    Matrix4c sym = 0.5 * (m + m.adjoint());
    return DensityMatrix4(sym);
}

DensityMatrix4 DensityMatrix4::pure(const Vector4c& psi) {
    const double n = psi.squaredNorm();
    if (std::abs(n - 1.0) > 1e-12)
        throw domain_error("DensityMatrix4::pure: ket is not normalized within 1e-12");
    return DensityMatrix4(psi * psi.adjoint());
}

std::array<double, 4> DensityMatrix4::diagonal() const {
    return {m_(0, 0).real(), m_(1, 1).real(), m_(2, 2).real(), m_(3, 3).real()};
}

double DensityMatrix4::purity() const { return (m_ * m_).trace().real(); }

DensityMatrix4 werner_density(const WernerSpec& spec) {
    spec.validate();
    const Vector4c phi = branch_ket(spec.branch, spec.p).ket();
    Matrix4c m = ((1.0 - spec.r) / 4.0) * Matrix4c::Identity();
    m += spec.r * (phi * phi.adjoint());
    return DensityMatrix4::from_matrix(m);
}

Vector4c gauge_fix(const Vector4c& v) {
    int imax = 0;
    double best = -1.0;
    for (int i = 0; i < kDim; ++i) {
        const double a = std::abs(v(i));
        if (a > best + 1e-15) { // strictly-greater scan: ties keep the lowest index
            best = a;
            imax = i;
        }
    }
    const complexd c = v(imax);
    if (std::abs(c) == 0.0) return v;
    return v * (std::conj(c) / std::abs(c));
}

EigenSystem4 eigensystem(const DensityMatrix4& rho) {
    Eigen::SelfAdjointEigenSolver<Matrix4c> solver(rho.matrix());
    if (solver.info() != Eigen::Success)
        throw state_error("eigensystem: eigendecomposition failed to converge");

    EigenSystem4 out;
    // Eigen sorts ascending; flip to descending.
    for (int k = 0; k < kDim; ++k) {
        const int src = kDim - 1 - k;
        out.eigenvalues[k] = solver.eigenvalues()(src);
        out.eigenvectors.col(k) = gauge_fix(solver.eigenvectors().col(src));
    }

    if (out.eigenvalues[kDim - 1] < kPsdTol)
        throw state_error("eigensystem: state has eigenvalue below -1e-10 (not positive semidefinite)");

    double sum = 0.0;
    for (double e : out.eigenvalues) sum += e;
    if (std::abs(sum - 1.0) > kTraceTol)
        throw state_error("eigensystem: eigenvalues do not sum to 1 within 1e-10");

    for (int k = 0; k < kDim; ++k) {
        const double res = (rho.matrix() * out.eigenvectors.col(k) -
                            out.eigenvalues[k] * out.eigenvectors.col(k))
                               .norm();
        if (res > kResidualTol)
            throw state_error("eigensystem: residual exceeds 1e-10");
    }
    return out;
}

Matrix4c EigenSystem4::reconstruct() const {
    Matrix4c m = Matrix4c::Zero();
    for (int k = 0; k < kDim; ++k)
        m += eigenvalues[k] * (eigenvectors.col(k) * eigenvectors.col(k).adjoint());
    return m;
}

} // namespace bigeo
