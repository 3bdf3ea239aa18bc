// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria pin the reference counts, values and tolerances this
// workbench must reproduce, plus the cross-cutting property checks.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <numbers>
#include <random>
#include <sstream>

#include "lfpoly/inequality_library.hpp"
#include "lfpoly/membership.hpp"
#include "lfpoly/symmetry.hpp"
#include "lfpoly/workbench.hpp"

using namespace lfpoly;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;
long certificates_checked = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail) {
    std::printf("%s criterion %2d: %s — %s\n", pass ? "PASS" : "FAIL", number, name.c_str(),
                detail.c_str());
    if (!pass) ++failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Every membership call in this suite re-verifies its certificate with the
// independent checker.
LPCertificate checked_membership(const VectorXq& point, const VRepresentation& v) {
    const auto cert = lp_membership(point, v);
    if (!verify_certificate(cert, point, v))
        throw std::runtime_error("certificate failed independent verification");
    ++certificates_checked;
    return cert;
}

std::string fmt(double v, int digits = 4) {
    std::ostringstream os;
    os.precision(digits);
    os << std::fixed << v;
    return os.str();
}

} // namespace

int main() {
    const Scenario s32{3, 2};

    // ---- 1: the 932-facet enumeration ------------------------------------
    BuiltPolytope lf32;
    bool have_lf32 = false;
    {
        const auto t0 = Clock::now();
        std::string detail;
        bool pass = false;
        try {
            lf32 = build_polytope(ModelKind::Lf, s32);
            have_lf32 = true;
            const double dt = seconds_since(t0);
            pass = lf32.v.vertices.size() == 96 && lf32.h.rows.size() == 932 && dt <= 600.0;
            detail = std::to_string(lf32.v.vertices.size()) + " vertices, " +
                     std::to_string(lf32.h.rows.size()) + " facets in " + fmt(dt, 1) +
                     "s (need 96/932 within 600s)";
        } catch (const std::exception& e) {
            detail = e.what();
        }
        report(1, "LF(3,2) facet count", pass, detail);
    }

    // ---- 2: the nine classes ----------------------------------------------
    {
        bool pass = false;
        std::string detail = "prerequisite failed";
        if (have_lf32) {
            const auto classes = classify(lf32.h, s32, lf_facet_classes(), true);
            const std::vector<std::string> labels = {
                "genuine-lf-1",  "genuine-lf-2",  "i3322-m12",
                "i3322-m23",     "brukner",       "semi-brukner",
                "positivity-11", "positivity-12", "positivity-22"};
            const std::vector<int> mult = {256, 256, 256, 64, 32, 32, 4, 16, 16};
            const std::vector<long long> bounds = {6, 5, 4, 4, 2, 2, 1, 1, 1};
            pass = classes.size() == 9;
            int total = 0;
            for (size_t i = 0; i < classes.size() && i < 9; ++i) {
                pass = pass && classes[i].label == labels[i] &&
                       classes[i].multiplicity == mult[i] &&
                       classes[i].representative.bound == bounds[i] && classes[i].matched;
                total += classes[i].multiplicity;
            }
            pass = pass && total == 932;
            detail = std::to_string(classes.size()) +
                     " classes, multiplicities (256,256,256,64,32,32,4,16,16) expected, sum " +
                     std::to_string(total);
        }
        report(2, "facet classification", pass, detail);
    }

    // ---- 3: collapse at N = 2 ---------------------------------------------
    {
        const auto lf22 = dd_facets(lf_vertices(Scenario{2, 2}).v);
        const auto lhv22 = dd_facets(lhv_vertices(Scenario{2, 2}));
        const auto lf23_v = lf_vertices(Scenario{2, 3}).v;
        const auto lhv23_v = lhv_vertices(Scenario{2, 3});
        const auto lf23 = dd_facets(lf23_v);
        const auto lhv23 = dd_facets(lhv23_v);
        const bool pass = lf22 == lhv22 && lf23_v == lhv23_v && lf23 == lhv23;
        report(3, "LF = LHV at N = 2", pass,
               "(2,2): " + std::to_string(lf22.rows.size()) + " = " +
                   std::to_string(lhv22.rows.size()) + " facets; (2,3): " +
                   std::to_string(lf23_v.vertices.size()) + " = " +
                   std::to_string(lhv23_v.vertices.size()) + " vertices, " +
                   std::to_string(lf23.rows.size()) + " = " + std::to_string(lhv23.rows.size()) +
                   " facets");
    }

    // ---- 4: strict inclusion at (3,2) --------------------------------------
    {
        bool pass = false;
        std::string detail = "prerequisite failed";
        if (have_lf32) {
            const auto lhv = lhv_vertices(s32);
            int inside = 0;
            for (const auto& vert : lhv.vertices) {
                const auto cert = checked_membership(vert, lf32.v);
                if (cert.verdict == LPCertificate::Verdict::Inside) ++inside;
            }
            const auto bell = *find_inequality("bell-non-lf");
            Rational best(0);
            for (const auto& cg : lf32.v.vertices)
                best = std::max(best, evaluate(bell, from_collins_gisin(s32, cg)));
            pass = inside == 64 && best == 4;
            detail = std::to_string(inside) +
                     "/64 LHV vertices certified inside LF; max Bell-non-LF value over LF "
                     "vertices = " +
                     to_string(best) + " (need 4)";
        }
        report(4, "LHV inside LF, strictly", pass, detail);
    }

    // ---- 5: NS(2,2) vertex count -------------------------------------------
    {
        const auto ns = ns_vertices(Scenario{2, 2});
        int deterministic = 0;
        for (const auto& cg : ns.vertices)
            if (is_deterministic_point(Scenario{2, 2}, cg)) ++deterministic;
        const bool pass = ns.vertices.size() == 24 && deterministic == 16;
        report(5, "NS(2,2) extreme points", pass,
               std::to_string(ns.vertices.size()) + " vertices, " +
                   std::to_string(deterministic) + " deterministic (need 24/16)");
    }

    // ---- 6: see-saw on the first genuine LF facet --------------------------
    SeesawResult lf1_result;
    bool have_lf1 = false;
    {
        const auto t0 = Clock::now();
        SeesawOptions opt;
        opt.restarts = 50;
        opt.seed = 1;
        lf1_result = seesaw_maximize(*find_inequality("genuine-lf-1"), opt);
        have_lf1 = true;
        const double dt = seconds_since(t0);
        const bool pass = lf1_result.value >= 7.344 && std::abs(lf1_result.value - 7.345) <= 1e-3 &&
                          std::abs(lf1_result.schmidt[0] - 0.776) <= 0.01 &&
                          std::abs(lf1_result.schmidt[1] - 0.631) <= 0.01 && dt <= 60.0;
        report(6, "qubit see-saw, genuine LF 1", pass,
               "value " + fmt(lf1_result.value) + " (target 7.345 ± 0.001), schmidt (" +
                   fmt(lf1_result.schmidt[0], 3) + ", " + fmt(lf1_result.schmidt[1], 3) +
                   ") vs (0.776, 0.631) ± 0.01, " + fmt(dt, 1) + "s of 60s");
    }

    // ---- 7: qutrit see-saw on the second genuine LF facet -------------------
    SeesawResult lf2_result;
    bool have_lf2 = false;
    {
        const auto t0 = Clock::now();
        SeesawOptions opt;
        opt.dim_a = opt.dim_b = 3;
        opt.restarts = 200;
        opt.seed = 1;
        lf2_result = seesaw_maximize(*find_inequality("genuine-lf-2"), opt);
        have_lf2 = true;
        const double dt = seconds_since(t0);
        const bool pass = std::abs(lf2_result.value - 5.880) <= 2e-3 &&
                          std::abs(lf2_result.schmidt[0] - 0.645) <= 0.01 &&
                          std::abs(lf2_result.schmidt[1] - 0.570) <= 0.01 &&
                          std::abs(lf2_result.schmidt[2] - 0.509) <= 0.01 && dt <= 600.0;
        report(7, "qutrit see-saw, genuine LF 2", pass,
               "value " + fmt(lf2_result.value) + " (target 5.880 ± 0.002), schmidt (" +
                   fmt(lf2_result.schmidt[0], 3) + ", " + fmt(lf2_result.schmidt[1], 3) + ", " +
                   fmt(lf2_result.schmidt[2], 3) + ") vs (0.645, 0.570, 0.509) ± 0.01, " +
                   fmt(dt, 1) + "s of 600s");
    }

    // ---- 8: white-noise tolerances ------------------------------------------
    {
        bool pass = false;
        std::string detail = "prerequisite failed";
        if (have_lf1 && have_lf2) {
            const double tol1 = white_noise_tolerance(lf1_result.state, lf1_result.alice,
                                                      lf1_result.bob,
                                                      *find_inequality("genuine-lf-1"));
            const double tol2 = white_noise_tolerance(lf2_result.state, lf2_result.alice,
                                                      lf2_result.bob,
                                                      *find_inequality("genuine-lf-2"));
            // exact-trace computation; the 0.150 figure would only arise if
            // the qutrit observables' traces were wrongly taken as zero
            pass = std::abs(tol1 - 0.183) <= 1e-3 && std::abs(tol2 - 0.180) <= 0.01;
            detail = "LF1 tolerance " + fmt(tol1) + " (need 0.183 ± 0.001), LF2 exact-trace "
                     "tolerance " +
                     fmt(tol2) + " (need 0.180 ± 0.01)";
        }
        report(8, "white-noise tolerances", pass, detail);
    }

    // ---- 9: the sweep thresholds and the mu = 0.80 membership ----------------
    {
        const MeasurementAngles angles{168, 0, 118, 175};
        const auto pa = angles.alice();
        auto oracle = [&](const Inequality& ineq) {
            double slope = 0;
            for (int x = 0; x < 3; ++x)
                for (int y = 0; y < 3; ++y)
                    slope -= ineq.ab(x, y) * std::cos((pa[size_t(x)] + pa[size_t(y)] - angles.beta) *
                                                      std::numbers::pi / 180.0);
            return static_cast<double>(ineq.bound) / slope;
        };
        auto measured = [&](const char* label) {
            return violation_threshold(angles, *find_inequality(label));
        };
        const double t_bell = measured("bell-non-lf");
        const double t_semi = measured("semi-brukner-alt");
        const double t_glf = measured("genuine-lf-1");
        const double t_i3322 = measured("i3322-m12");
        const double t_bruk = measured("brukner-alt");
        bool pass = std::abs(t_bell - oracle(*find_inequality("bell-non-lf"))) <= 2e-3 &&
                    std::abs(t_semi - oracle(*find_inequality("semi-brukner-alt"))) <= 2e-3 &&
                    std::abs(t_glf - oracle(*find_inequality("genuine-lf-1"))) <= 2e-3 &&
                    std::abs(t_i3322 - oracle(*find_inequality("i3322-m12"))) <= 2e-3 &&
                    std::abs(t_bruk - oracle(*find_inequality("brukner-alt"))) <= 2e-3;
        pass = pass && t_bell < 0.80 && 0.80 <= t_semi && t_semi <= 0.87 && 0.87 < t_glf &&
               t_glf < t_i3322 && t_i3322 < t_bruk;

        std::string detail = "thresholds " + fmt(t_bell, 3) + " < 0.80 <= " + fmt(t_semi, 3) +
                             " <= 0.87 < " + fmt(t_glf, 3) + " < " + fmt(t_i3322, 3) + " < " +
                             fmt(t_bruk, 3);
        if (have_lf32) {
            const auto promoted = promote_to_rational(sweep_behavior(angles, 0.80));
            bool all_facets = true;
            for (const auto& row : lf32.h.rows)
                if (slack(row, promoted.point) > 0) all_facets = false;
            const auto cert = checked_membership(promoted.point, lf32.v);
            const bool violates_bell =
                evaluate(*find_inequality("bell-non-lf"),
                         from_collins_gisin(s32, promoted.point)) > 2;
            pass = pass && all_facets && cert.verdict == LPCertificate::Verdict::Inside &&
                   violates_bell;
            detail += std::string("; mu=0.80 point: all 932 facets satisfied = ") +
                      (all_facets ? "yes" : "no") + ", LP-inside = " +
                      (cert.verdict == LPCertificate::Verdict::Inside ? "yes" : "no") +
                      ", violates Bell-non-LF = " + (violates_bell ? "yes" : "no");
        } else {
            pass = false;
            detail += "; prerequisite failed (no facet list)";
        }
        report(9, "sweep thresholds and mu = 0.80 membership", pass, detail);
    }

    // ---- 10: property suites -------------------------------------------------
    {
        // double-description round trip on 100 random 3-5 dimensional polytopes
        std::mt19937_64 rng(777);
        std::uniform_int_distribution<int> dim_pick(3, 5), coord(-4, 4), den(1, 3);
        int round_trips = 0;
        bool dd_ok = true;
        while (round_trips < 100) {
            const int d = dim_pick(rng);
            std::uniform_int_distribution<int> count_pick(d + 2, d + 6);
            VRepresentation raw;
            raw.dimension = d;
            const int count = count_pick(rng);
            for (int i = 0; i < count; ++i) {
                VectorXq p(d);
                for (int j = 0; j < d; ++j) p(j) = Rational(coord(rng), den(rng));
                raw.vertices.push_back(p);
            }
            raw.sort_and_dedupe();
            if (affine_rank(raw.vertices) < d + 1) continue;
            VRepresentation ext;
            ext.dimension = d;
            for (size_t i = 0; i < raw.vertices.size(); ++i) {
                VRepresentation others;
                others.dimension = d;
                for (size_t j = 0; j < raw.vertices.size(); ++j)
                    if (j != i) others.vertices.push_back(raw.vertices[j]);
                if (checked_membership(raw.vertices[i], others).verdict ==
                    LPCertificate::Verdict::Outside)
                    ext.vertices.push_back(raw.vertices[i]);
            }
            if (static_cast<int>(ext.vertices.size()) < d + 1 || affine_rank(ext.vertices) < d + 1)
                continue;
            ext.sort_and_dedupe();
            if (!(dd_vertices(dd_facets(ext)) == ext)) dd_ok = false;
            ++round_trips;
        }

        // see-saw monotonicity on 100 random inequalities
        bool monotone = true;
        std::uniform_int_distribution<int> coeff(-2, 2);
        for (int trial = 0; trial < 100; ++trial) {
            Inequality ineq = make_inequality(
                Scenario{2, 2}, {coeff(rng), coeff(rng)}, {coeff(rng), coeff(rng)},
                {{coeff(rng), coeff(rng)}, {coeff(rng), coeff(rng)}}, 0, "random");
            SeesawOptions opt;
            opt.restarts = 1;
            opt.seed = 5000 + static_cast<uint64_t>(trial);
            opt.max_rounds = 40;
            const auto res = seesaw_maximize(ineq, opt);
            for (size_t i = 1; i < res.objective_trace.size(); ++i)
                if (res.objective_trace[i] < res.objective_trace[i - 1] - 1e-12) monotone = false;
        }

        // eigensolver residuals on 1000 random Hermitian matrices up to 9x9
        bool eigen_ok = true;
        std::normal_distribution<double> gauss;
        std::uniform_int_distribution<int> edim(2, 9);
        for (int trial = 0; trial < 1000; ++trial) {
            const int d = edim(rng);
            MatrixXc g(d, d);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
            const MatrixXc h = (g + g.adjoint()) / 2.0;
            const auto sys = hermitian_eigensystem(h);
            const MatrixXc resid = h * sys.vectors - sys.vectors * sys.values.asDiagonal();
            const MatrixXc gram = sys.vectors.adjoint() * sys.vectors -
                                  MatrixXc::Identity(d, d);
            if (resid.cwiseAbs().maxCoeff() > 1e-10 || gram.cwiseAbs().maxCoeff() > 1e-10)
                eigen_ok = false;
        }

        const bool pass = dd_ok && monotone && eigen_ok;
        report(10, "property suites", pass,
               std::string("dd round trips 100/100 ") + (dd_ok ? "ok" : "FAILED") +
                   ", see-saw monotonicity 100/100 " + (monotone ? "ok" : "FAILED") +
                   ", eigensolver residuals 1000/1000 " + (eigen_ok ? "ok" : "FAILED") + ", " +
                   std::to_string(certificates_checked) +
                   " LP certificates independently verified");
    }

    std::printf("note: quantum-set (SDP) upper bounds and photon-count statistics are outside "
                "this workbench's scope.\n");
    std::printf("%s\n", failures == 0 ? "acceptance: ALL CRITERIA PASS"
                                      : "acceptance: FAILURES PRESENT");
    return failures == 0 ? 0 : 1;
}
