#ifndef LFPOLY_QUANTUM_HPP
#define LFPOLY_QUANTUM_HPP

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "lfpoly/behavior.hpp"

namespace lfpoly {

using Complex = std::complex<double>;
using MatrixXc = Eigen::MatrixXcd;
using VectorXc = Eigen::VectorXcd;

inline double hermiticity_defect(const MatrixXc& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

/// Bipartite density operator. Validity = Hermitian, unit trace within
/// 1e-10, spectrum above -1e-9.
struct BipartiteState {
    int dim_a = 0;
    int dim_b = 0;
    MatrixXc rho;

    int dim() const { return dim_a * dim_b; }
};

void require_valid(const BipartiteState& state);

/// Hermitian operator with spectrum in {-1, +1}: squares to the identity
/// within 1e-9.
struct DichotomicObservable {
    MatrixXc m;
};

void require_valid(const DichotomicObservable& obs);

/// Equatorial measurement directions in degrees: Alice's three angles and
/// Bob's offset (his setting-y angle is beta - phi_y).
struct MeasurementAngles {
    double phi1 = 0, phi2 = 0, phi3 = 0, beta = 0;

    std::vector<double> alice() const { return {phi1, phi2, phi3}; }
    std::vector<double> bob() const;
};

/// Photon-pair family: mu |Phi-><Phi-| + (1-mu)/2 (|HV><HV| + |VH><VH|),
/// basis order (HH, HV, VH, VV).
BipartiteState rho_mu(double mu);

/// 2 Pi - I with Pi the projector onto (|H> + e^{i theta} |V>)/sqrt(2);
/// theta in degrees.
DichotomicObservable observable_from_angle(double theta_deg);

/// Born-rule table wp(a,b|x,y) = Tr[rho (P_x^a (x) Q_y^b)] with the +-1
/// outcome projectors (I +- A_x)/2; outcome label 1 is +1.
BehaviorD behavior_from_strategy(const BipartiteState& state,
                                 const std::vector<DichotomicObservable>& alice,
                                 const std::vector<DichotomicObservable>& bob);

/// Eigenvalues (ascending) and orthonormal eigenvectors of a Hermitian
/// matrix. Throws NotHermitian above the 1e-12 defect tolerance.
struct Eigensystem {
    Eigen::VectorXd values;
    MatrixXc vectors;
};
Eigensystem hermitian_eigensystem(const MatrixXc& m);

/// Singular values of the d_A x d_B coefficient matrix of a normalized
/// pure state, descending.
std::vector<double> schmidt_coefficients(const VectorXc& psi, int dim_a, int dim_b);

/// State after admixing white noise: (1 - eps) rho + eps I/d.
BipartiteState add_white_noise(const BipartiteState& state, double eps);

MatrixXc kron(const MatrixXc& a, const MatrixXc& b);
MatrixXc partial_trace_a(const MatrixXc& m, int dim_a, int dim_b);
MatrixXc partial_trace_b(const MatrixXc& m, int dim_a, int dim_b);

} // namespace lfpoly

#endif
