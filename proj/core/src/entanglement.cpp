#include "bigeo/entanglement.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace bigeo::entanglement {

namespace {

Matrix4c sigma_yy() {
    Matrix4c y = Matrix4c::Zero();
    y(0, 3) = -1.0;
    y(1, 2) = 1.0;
    y(2, 1) = 1.0;
    y(3, 0) = -1.0;
    return y;
}

// Eigenvalues below this are structural zeros of a unit-trace 4x4 spectrum.
constexpr double kSpectralFloor = 1e-14;

} // namespace

double concurrence_wootters(const DensityMatrix4& rho) {
    Eigen::SelfAdjointEigenSolver<Matrix4c> solver(rho.matrix());
    if (solver.info() != Eigen::Success)
        throw state_error("concurrence_wootters: eigendecomposition failed");

    Eigen::Vector4d eps = solver.eigenvalues();
    for (int i = 0; i < kDim; ++i) eps(i) = eps(i) > kSpectralFloor ? std::sqrt(eps(i)) : 0.0;

    const Matrix4c v = solver.eigenvectors();
    const Matrix4c s = v.transpose() * sigma_yy() * v;
    const Matrix4c b = eps.asDiagonal() * s * eps.asDiagonal();

    Eigen::JacobiSVD<Matrix4c> svd(b);
    const auto sig = svd.singularValues(); // descending
    return std::max(0.0, sig(0) - sig(1) - sig(2) - sig(3));
}

double concurrence_closed_boson(const WernerSpec& spec, const boson_env::BosonBathSpec& bath,
                                double t) {
    spec.validate();
    if (spec.r != 1.0)
        throw regime_error("concurrence_closed_boson: closed form requires r = 1");
    const double d = boson_env::coherence_damping(bath, spec.branch, t);
    return 2.0 * std::sqrt(spec.p * (1.0 - spec.p)) * d;
}

double concurrence_closed_spin(const WernerSpec& spec, const spin_env::SpinBathSpec& bath,
                               double t) {
    spec.validate();
    if (spec.r != 1.0) throw regime_error("concurrence_closed_spin: closed form requires r = 1");
    const double f = spec.branch == Branch::Theta ? spin_env::q_factor(bath, t)
                                                  : spin_env::p_factor(bath, t);
    const double a = spec.p * (1.0 - spec.p);
    return std::sqrt(a * (f + 1.0) * (f + 1.0)) - std::sqrt(a * (f - 1.0) * (f - 1.0));
}

double concurrence_mu_radical(double p) {
    if (p < 0.0 || p > 1.0) throw domain_error("concurrence_mu_radical: p must be in [0, 1]");
    const double inner = 2.0 * std::sqrt(p * (1.0 - p) * (1.0 - p) * (1.0 - p));
    return std::sqrt(1.0 - p + inner) - std::sqrt(std::max(0.0, 1.0 - p - inner));
}

double linear_entropy(const DensityMatrix4& rho) {
    const EigenSystem4 es = eigensystem(rho);
    double s = 0.0;
    for (double eps : es.eigenvalues) {
        if (eps > kSpectralFloor) s -= eps * std::log2(eps);
    }
    return s;
}

double phase_concurrence_ratio(double p) {
    if (!(p > 0.0) || p > 1.0) throw domain_error("phase_concurrence_ratio: p must be in (0, 1]");
    return std::numbers::pi * std::sqrt((1.0 - p) / p);
}

std::vector<EntanglementSample> sample_trajectory(const evolution::Trajectory& traj) {
    std::vector<EntanglementSample> out;
    out.reserve(traj.size());
    for (std::size_t j = 0; j < traj.size(); ++j) {
        EntanglementSample s;
        s.t = traj.times[j];
        s.concurrence = concurrence_wootters(traj.states[j]);
        s.entropy = linear_entropy(traj.states[j]);
        out.push_back(s);
    }
    return out;
}

} // namespace bigeo::entanglement
