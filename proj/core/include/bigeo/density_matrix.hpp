// density_matrix.hpp — validated 4x4 density matrices and their eigensystems

#pragma once

#include <array>

#include "bigeo/states.hpp"

namespace bigeo {

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kPsdTol = -1e-10;
inline constexpr double kResidualTol = 1e-10;

// Hermitian, unit-trace 4x4 matrix in the (|00>,|01>,|10>,|11>) basis.
// Construction validates Hermiticity and trace; positivity is checked where
// the spectrum is actually computed (eigensystem) and by the property tests.
class DensityMatrix4 {
public:
    // Throws state_error if the matrix is not Hermitian within 1e-12 or its
    // trace is not 1 within 1e-10. The stored matrix is symmetrized so later
    // arithmetic sees an exactly Hermitian object.
    static DensityMatrix4 from_matrix(const Matrix4c& m);

    // |psi><psi| for a normalized ket.
    static DensityMatrix4 pure(const Vector4c& psi);

    const Matrix4c& matrix() const { return m_; }
    complexd operator()(int i, int j) const { return m_(i, j); }

    std::array<double, 4> diagonal() const;
    double purity() const; // Tr rho^2

private:
    explicit DensityMatrix4(const Matrix4c& m) : m_(m) {}
    Matrix4c m_;
};

// Werner density (1-r)/4 I + r |phi><phi|.
DensityMatrix4 werner_density(const WernerSpec& spec);

// Full Hermitian eigendecomposition, eigenvalues sorted descending.
// Gauge: each eigenvector is rephased so its largest-magnitude component is
// real positive (ties broken by lowest basis index); needed so that repeated
// decompositions of slowly varying matrices produce comparable vectors.
struct EigenSystem4 {
    std::array<double, 4> eigenvalues{}; // descending
    Matrix4c eigenvectors;               // column k belongs to eigenvalues[k]

    Vector4c vector(int k) const { return eigenvectors.col(k); }

    // Sum_k eps_k |v_k><v_k|
    Matrix4c reconstruct() const;
};

EigenSystem4 eigensystem(const DensityMatrix4& rho);

// Gauge fix used by eigensystem, exposed for reuse on externally produced vectors.
Vector4c gauge_fix(const Vector4c& v);

} // namespace bigeo
