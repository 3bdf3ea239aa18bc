#include "lfpoly/seesaw.hpp"

#include <atomic>
#include <random>
#include <thread>

namespace lfpoly {

namespace {

MatrixXc random_hermitian(int d, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    MatrixXc g(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
    return (g + g.adjoint()) / 2.0;
}

// sign() of a Hermitian matrix; eigenvalues within 1e-12 of zero go to +1.
MatrixXc hermitian_sign(const MatrixXc& m) {
    Eigen::SelfAdjointEigenSolver<MatrixXc> es((m + m.adjoint()) / 2.0);
    Eigen::VectorXd s(es.eigenvalues().size());
    for (Eigen::Index i = 0; i < s.size(); ++i)
        s(i) = es.eigenvalues()(i) < -1e-12 ? -1.0 : 1.0;
    MatrixXc out = es.eigenvectors() * s.asDiagonal() * es.eigenvectors().adjoint();
    return (out + out.adjoint()) / 2.0;
}

struct RestartOutcome {
    double value = 0.0;
    MatrixXc rho;
    VectorXc top; // eigenvector behind rho
    std::vector<MatrixXc> alice, bob;
    int rounds = 0;
    bool converged = false;
    std::vector<double> trace;
};

// Shared with the public bell_operator(); observables as raw matrices.
MatrixXc bell_operator_raw(const Inequality& ineq, const std::vector<MatrixXc>& alice,
                           const std::vector<MatrixXc>& bob) {
    const int n = ineq.scenario.settings;
    const int da = static_cast<int>(alice.at(0).rows());
    const int db = static_cast<int>(bob.at(0).rows());
    const MatrixXc ida = MatrixXc::Identity(da, da);
    const MatrixXc idb = MatrixXc::Identity(db, db);
    MatrixXc w = MatrixXc::Zero(da * db, da * db);
    for (int x = 0; x < n; ++x) {
        if (ineq.a(x) != 0) w += double(ineq.a(x)) * kron(alice[static_cast<size_t>(x)], idb);
        if (ineq.b(x) != 0) w += double(ineq.b(x)) * kron(ida, bob[static_cast<size_t>(x)]);
        for (int y = 0; y < n; ++y)
            if (ineq.ab(x, y) != 0)
                w += double(ineq.ab(x, y)) *
                     kron(alice[static_cast<size_t>(x)], bob[static_cast<size_t>(y)]);
    }
    return w;
}

RestartOutcome run_restart(const Inequality& ineq, const SeesawOptions& opt, uint64_t seed) {
    const int n = ineq.scenario.settings;
    const int da = opt.dim_a, db = opt.dim_b, d = da * db;
    std::mt19937_64 rng(seed);

    std::vector<MatrixXc> alice(static_cast<size_t>(n)), bob(static_cast<size_t>(n));
    for (auto& m : alice) m = hermitian_sign(random_hermitian(da, rng));
    for (auto& m : bob) m = hermitian_sign(random_hermitian(db, rng));

    // maximally entangled start
    VectorXc psi = VectorXc::Zero(d);
    const int r = std::min(da, db);
    for (int i = 0; i < r; ++i) psi(i * db + i) = Complex(1.0 / std::sqrt(double(r)), 0);
    MatrixXc rho = psi * psi.adjoint();
    VectorXc top = psi;

    const MatrixXc ida = MatrixXc::Identity(da, da);
    const MatrixXc idb = MatrixXc::Identity(db, db);

    auto objective = [&] { return bell_operator_raw(ineq, alice, bob); };

    RestartOutcome out;
    double value = (rho * objective()).trace().real();
    int small_steps = 0;
    int round = 0;
    for (; round < opt.max_rounds; ++round) {
        // state step
        Eigen::SelfAdjointEigenSolver<MatrixXc> es(objective());
        top = es.eigenvectors().col(d - 1);
        rho = top * top.adjoint();
        out.trace.push_back(es.eigenvalues()(d - 1));

        // Alice step: A_x <- sign of its weighted environment
        for (int x = 0; x < n; ++x) {
            MatrixXc env = MatrixXc::Zero(da, da);
            if (ineq.a(x) != 0) env += double(ineq.a(x)) * partial_trace_b(rho, da, db);
            for (int y = 0; y < n; ++y)
                if (ineq.ab(x, y) != 0)
                    env += double(ineq.ab(x, y)) *
                           partial_trace_b(kron(ida, bob[static_cast<size_t>(y)]) * rho, da, db);
            if (env.cwiseAbs().maxCoeff() > 0) alice[static_cast<size_t>(x)] = hermitian_sign(env);
        }
        out.trace.push_back((rho * objective()).trace().real());

        // Bob step
        for (int y = 0; y < n; ++y) {
            MatrixXc env = MatrixXc::Zero(db, db);
            if (ineq.b(y) != 0) env += double(ineq.b(y)) * partial_trace_a(rho, da, db);
            for (int x = 0; x < n; ++x)
                if (ineq.ab(x, y) != 0)
                    env += double(ineq.ab(x, y)) *
                           partial_trace_a(kron(alice[static_cast<size_t>(x)], idb) * rho, da, db);
            if (env.cwiseAbs().maxCoeff() > 0) bob[static_cast<size_t>(y)] = hermitian_sign(env);
        }

        const double next = (rho * objective()).trace().real();
        out.trace.push_back(next);
        if (next - value < 1e-9) {
            if (++small_steps >= 3) {
                value = std::max(value, next);
                out.converged = true;
                ++round;
                break;
            }
        } else {
            small_steps = 0;
        }
        value = std::max(value, next);
    }
    out.value = value;
    out.rho = std::move(rho);
    out.top = std::move(top);
    out.alice = std::move(alice);
    out.bob = std::move(bob);
    out.rounds = round;
    return out;
}

} // namespace

MatrixXc bell_operator(const Inequality& ineq, const std::vector<DichotomicObservable>& alice,
                       const std::vector<DichotomicObservable>& bob) {
    std::vector<MatrixXc> a, b;
    a.reserve(alice.size());
    b.reserve(bob.size());
    for (const auto& o : alice) a.push_back(o.m);
    for (const auto& o : bob) b.push_back(o.m);
    return bell_operator_raw(ineq, a, b);
}

SeesawResult seesaw_maximize(const Inequality& ineq, const SeesawOptions& opt) {
    if (opt.dim_a < 2 || opt.dim_b < 2)
        throw InvalidArgument("seesaw_maximize: dimensions must be >= 2");
    if (opt.restarts < 1) throw InvalidArgument("seesaw_maximize: restarts must be >= 1");

    std::vector<RestartOutcome> outcomes(static_cast<size_t>(opt.restarts));
    const int workers = opt.threads > 0
                            ? opt.threads
                            : std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    std::atomic<int> cursor{0};
    for (int t = 0; t < std::min(workers, opt.restarts); ++t) {
        pool.emplace_back([&] {
            for (;;) {
                const int r = cursor.fetch_add(1);
                if (r >= opt.restarts) return;
                outcomes[static_cast<size_t>(r)] =
                    run_restart(ineq, opt, opt.seed + static_cast<uint64_t>(r));
            }
        });
    }
    for (auto& th : pool) th.join();

    int best = 0;
    for (int r = 1; r < opt.restarts; ++r) {
        if (outcomes[static_cast<size_t>(r)].value > outcomes[static_cast<size_t>(best)].value)
            best = r;
    }
    const RestartOutcome& win = outcomes[static_cast<size_t>(best)];

    SeesawResult res;
    res.value = win.value;
    res.state = BipartiteState{opt.dim_a, opt.dim_b, win.rho};
    res.alice.reserve(win.alice.size());
    for (const auto& m : win.alice) res.alice.push_back(DichotomicObservable{m});
    for (const auto& m : win.bob) res.bob.push_back(DichotomicObservable{m});
    res.schmidt = schmidt_coefficients(win.top, opt.dim_a, opt.dim_b);
    res.iterations = win.rounds;
    res.restarts_used = opt.restarts;
    res.winning_restart = best;
    res.converged = win.converged;
    res.objective_trace = win.trace;
    return res;
}

double white_noise_tolerance(const BipartiteState& state,
                             const std::vector<DichotomicObservable>& alice,
                             const std::vector<DichotomicObservable>& bob,
                             const Inequality& ineq) {
    const double at_state = evaluate(ineq, behavior_from_strategy(state, alice, bob));
    const double bound = static_cast<double>(ineq.bound);
    if (at_state <= bound)
        throw NoViolation("white_noise_tolerance: strategy does not violate the inequality");
    BipartiteState mixed = state;
    mixed.rho = MatrixXc::Identity(state.dim(), state.dim()) / double(state.dim());
    const double at_noise = evaluate(ineq, behavior_from_strategy(mixed, alice, bob));
    if (at_noise >= bound) return 1.0;
    const double eps = (at_state - bound) / (at_state - at_noise);
    return std::min(1.0, std::max(0.0, eps));
}

} // namespace lfpoly
