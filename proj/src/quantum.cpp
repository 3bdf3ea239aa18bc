#include "lfpoly/quantum.hpp"

#include <numbers>

namespace lfpoly {

void require_valid(const BipartiteState& state) {
    if (state.rho.rows() != state.dim() || state.rho.cols() != state.dim())
        throw DimensionMismatch("state: density matrix size does not match dims");
    if (hermiticity_defect(state.rho) > 1e-12)
        throw NotHermitian("state: density matrix is not Hermitian");
    if (std::abs(state.rho.trace().real() - 1.0) > 1e-10 ||
        std::abs(state.rho.trace().imag()) > 1e-10)
        throw InvalidArgument("state: trace differs from 1");
    Eigen::SelfAdjointEigenSolver<MatrixXc> es(state.rho, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-9)
        throw InvalidArgument("state: negative eigenvalue " +
                              std::to_string(es.eigenvalues().minCoeff()));
}

void require_valid(const DichotomicObservable& obs) {
    if (hermiticity_defect(obs.m) > 1e-12)
        throw NotHermitian("observable is not Hermitian");
    const MatrixXc sq = obs.m * obs.m;
    const MatrixXc id = MatrixXc::Identity(obs.m.rows(), obs.m.cols());
    if ((sq - id).cwiseAbs().maxCoeff() > 1e-9)
        throw InvalidArgument("observable does not square to the identity");
}

std::vector<double> MeasurementAngles::bob() const {
    return {beta - phi1, beta - phi2, beta - phi3};
}

BipartiteState rho_mu(double mu) {
    if (mu < 0.0 || mu > 1.0) throw InvalidArgument("rho_mu: mu must lie in [0,1]");
    BipartiteState st;
    st.dim_a = st.dim_b = 2;
    st.rho = MatrixXc::Zero(4, 4);
    // |Phi-> = (|HV> - |VH>)/sqrt(2) lives on the middle block
    st.rho(1, 1) = Complex(mu / 2 + (1 - mu) / 2, 0);
    st.rho(2, 2) = Complex(mu / 2 + (1 - mu) / 2, 0);
    st.rho(1, 2) = Complex(-mu / 2, 0);
    st.rho(2, 1) = Complex(-mu / 2, 0);
    return st;
}

DichotomicObservable observable_from_angle(double theta_deg) {
    const double theta = theta_deg * std::numbers::pi / 180.0;
    DichotomicObservable obs;
    obs.m = MatrixXc::Zero(2, 2);
    obs.m(0, 1) = std::exp(Complex(0, -theta));
    obs.m(1, 0) = std::exp(Complex(0, theta));
    return obs;
}

MatrixXc kron(const MatrixXc& a, const MatrixXc& b) {
    MatrixXc out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

MatrixXc partial_trace_b(const MatrixXc& m, int dim_a, int dim_b) {
    MatrixXc out = MatrixXc::Zero(dim_a, dim_a);
    for (int i = 0; i < dim_a; ++i)
        for (int j = 0; j < dim_a; ++j)
            for (int k = 0; k < dim_b; ++k) out(i, j) += m(i * dim_b + k, j * dim_b + k);
    return out;
}

MatrixXc partial_trace_a(const MatrixXc& m, int dim_a, int dim_b) {
    MatrixXc out = MatrixXc::Zero(dim_b, dim_b);
    for (int i = 0; i < dim_b; ++i)
        for (int j = 0; j < dim_b; ++j)
            for (int k = 0; k < dim_a; ++k) out(i, j) += m(k * dim_b + i, k * dim_b + j);
    return out;
}

BehaviorD behavior_from_strategy(const BipartiteState& state,
                                 const std::vector<DichotomicObservable>& alice,
                                 const std::vector<DichotomicObservable>& bob) {
    if (alice.size() != bob.size())
        throw DimensionMismatch("behavior_from_strategy: party setting counts differ");
    const int n = static_cast<int>(alice.size());
    for (const auto& a : alice)
        if (a.m.rows() != state.dim_a)
            throw DimensionMismatch("behavior_from_strategy: Alice observable dimension");
    for (const auto& b : bob)
        if (b.m.rows() != state.dim_b)
            throw DimensionMismatch("behavior_from_strategy: Bob observable dimension");

    const MatrixXc ida = MatrixXc::Identity(state.dim_a, state.dim_a);
    const MatrixXc idb = MatrixXc::Identity(state.dim_b, state.dim_b);
    BehaviorD out(Scenario{n, 2});
    for (int x = 1; x <= n; ++x) {
        for (int y = 1; y <= n; ++y) {
            for (int a = 1; a <= 2; ++a) {
                const MatrixXc pa = (ida + double(outcome_sign(a)) * alice[static_cast<size_t>(x - 1)].m) / 2.0;
                for (int b = 1; b <= 2; ++b) {
                    const MatrixXc pb = (idb + double(outcome_sign(b)) * bob[static_cast<size_t>(y - 1)].m) / 2.0;
                    out.at(x, a, y, b) = (state.rho * kron(pa, pb)).trace().real();
                }
            }
        }
    }
    return out;
}

Eigensystem hermitian_eigensystem(const MatrixXc& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("hermitian_eigensystem: not square");
    if (hermiticity_defect(m) > 1e-12)
        throw NotHermitian("hermitian_eigensystem: defect " + std::to_string(hermiticity_defect(m)));
    Eigen::SelfAdjointEigenSolver<MatrixXc> es(m);
    if (es.info() != Eigen::Success)
        throw InvalidArgument("hermitian_eigensystem: eigensolver failed");
    return {es.eigenvalues(), es.eigenvectors()};
}

std::vector<double> schmidt_coefficients(const VectorXc& psi, int dim_a, int dim_b) {
    if (psi.size() != dim_a * dim_b)
        throw DimensionMismatch("schmidt_coefficients: vector length is not dim_a * dim_b");
    if (std::abs(psi.norm() - 1.0) > 1e-9)
        throw NotNormalized("schmidt_coefficients: input norm " + std::to_string(psi.norm()));
    MatrixXc coeff(dim_a, dim_b);
    for (int i = 0; i < dim_a; ++i)
        for (int j = 0; j < dim_b; ++j) coeff(i, j) = psi(i * dim_b + j);
    Eigen::JacobiSVD<MatrixXc> svd(coeff);
    std::vector<double> out(svd.singularValues().data(),
                            svd.singularValues().data() + svd.singularValues().size());
    return out; // Eigen returns them descending
}

BipartiteState add_white_noise(const BipartiteState& state, double eps) {
    BipartiteState out = state;
    const int d = state.dim();
    out.rho = (1.0 - eps) * state.rho + eps * MatrixXc::Identity(d, d) / double(d);
    return out;
}

} // namespace lfpoly
