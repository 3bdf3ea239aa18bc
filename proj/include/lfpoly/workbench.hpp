#ifndef LFPOLY_WORKBENCH_HPP
#define LFPOLY_WORKBENCH_HPP

#include <filesystem>

#include "lfpoly/builders.hpp"
#include "lfpoly/io.hpp"
#include "lfpoly/membership.hpp"
#include "lfpoly/seesaw.hpp"
#include "lfpoly/sweep.hpp"

namespace lfpoly {

/// Shared run configuration. Subcommands read the fields they need;
/// everything is validated against the owning module's preconditions
/// before work starts.
struct RunConfig {
    Scenario scenario{3, 2};
    ModelKind model = ModelKind::Lf;
    MeasurementAngles angles{168.0, 0.0, 118.0, 175.0};
    std::vector<double> mu_list;
    std::string ineq_label = "genuine-lf-1";
    int dim_a = 2;
    int dim_b = 2;
    int restarts = 0; // 0 = auto: 50 for qubit pairs, 200 above
    uint64_t seed = 1;
    int threads = 0;
    int vertex_cap = 10000;
    int grid = 201;
    Rational range_lo = Rational(-1, 2);
    Rational range_hi = Rational(3, 2);
    std::filesystem::path out_dir = ".";
    std::filesystem::path behavior_file;
    std::filesystem::path facets_file; // optional, reused by membership
};

struct EnumerateReport {
    size_t vertex_count = 0;
    size_t facet_count = 0;
    std::filesystem::path vertices_path, facets_path, manifest_path;
};
EnumerateReport run_enumerate(const RunConfig& cfg);

struct ClassifyReport {
    std::vector<FacetClass> classes;
    std::filesystem::path classes_path;
    std::string table; // human-readable summary
};
ClassifyReport run_classify(const RunConfig& cfg, const std::filesystem::path& facets_file);

struct MembershipReport {
    bool inside = false;
    double rounding_radius = 0.0; // 0 for exact inputs
    LPCertificate certificate;
    std::string separator_label; // library class of the reported separator
    std::filesystem::path certificate_path;
};
MembershipReport run_membership(const RunConfig& cfg);

struct SweepReport {
    std::vector<SweepRow> rows;
    std::filesystem::path csv_path;
};
SweepReport run_sweep(const RunConfig& cfg);

struct SeesawReport {
    SeesawResult result;
    double noise_tolerance = -1.0; // -1 when the optimum does not violate
    std::filesystem::path report_path;
};
SeesawReport run_seesaw(const RunConfig& cfg);

struct SliceReport {
    size_t points = 0;
    size_t valid_points = 0;
    std::filesystem::path csv_path;
};
SliceReport run_slice(const RunConfig& cfg);

/// The three spanning behaviors of the correlation-space slice: the
/// uniform point, the friend-record/PR extreme point, and the maximal
/// genuine-lf-1 violator (thousandths-exact table).
BehaviorQ slice_point_uniform();
BehaviorQ slice_point_lf_extreme();
BehaviorQ slice_point_quantum();

} // namespace lfpoly

#endif
