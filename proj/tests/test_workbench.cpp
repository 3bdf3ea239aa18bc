#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "lfpoly/inequality_library.hpp"
#include "lfpoly/sweep.hpp"
#include "lfpoly/workbench.hpp"

using namespace lfpoly;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
    const auto dir = fs::temp_directory_path() / "lfpoly_workbench_tests" / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

} // namespace

TEST_SUITE("workbench") {

TEST_CASE("enumerate writes consistent files and a faithful manifest") {
    RunConfig cfg;
    cfg.scenario = Scenario{2, 2};
    cfg.model = ModelKind::Lhv;
    cfg.out_dir = fresh_dir("enum_lhv22");
    const auto rep = run_enumerate(cfg);
    CHECK(rep.vertex_count == 16);
    CHECK(rep.facet_count == 24);
    const auto v = read_vrep(rep.vertices_path);
    const auto h = read_hrep(rep.facets_path);
    CHECK(v.vertices.size() == 16);
    CHECK(h.rows.size() == 24);
    for (const auto& vert : v.vertices) CHECK(satisfies(h, vert));

    // reruns are byte-identical (manifest hashes agree)
    RunConfig cfg2 = cfg;
    cfg2.out_dir = fresh_dir("enum_lhv22_again");
    const auto rep2 = run_enumerate(cfg2);
    CHECK(file_sha256(rep.vertices_path) == file_sha256(rep2.vertices_path));
    CHECK(file_sha256(rep.facets_path) == file_sha256(rep2.facets_path));
}

TEST_CASE("lf and lhv enumerations at (2,2) write byte-identical facet files") {
    RunConfig cfg;
    cfg.scenario = Scenario{2, 2};
    cfg.model = ModelKind::Lf;
    cfg.out_dir = fresh_dir("enum_lf22_bytes");
    const auto lf_rep = run_enumerate(cfg);
    cfg.model = ModelKind::Lhv;
    cfg.out_dir = fresh_dir("enum_lhv22_bytes");
    const auto lhv_rep = run_enumerate(cfg);
    CHECK(file_sha256(lf_rep.facets_path) == file_sha256(lhv_rep.facets_path));
    CHECK(file_sha256(lf_rep.vertices_path) == file_sha256(lhv_rep.vertices_path));
}

TEST_CASE("enumerate honors the vertex cap") {
    RunConfig cfg;
    cfg.scenario = Scenario{3, 2};
    cfg.model = ModelKind::Lhv;
    cfg.vertex_cap = 10;
    cfg.out_dir = fresh_dir("enum_capped");
    CHECK_THROWS_AS(run_enumerate(cfg), CapExceeded);
}

TEST_CASE("classify on lhv(2,2) facets") {
    RunConfig cfg;
    cfg.scenario = Scenario{2, 2};
    cfg.model = ModelKind::Lhv;
    cfg.out_dir = fresh_dir("classify_22");
    const auto enum_rep = run_enumerate(cfg);
    const auto rep = run_classify(cfg, enum_rep.facets_path);
    REQUIRE(rep.classes.size() == 4);
    int total = 0;
    for (const auto& cls : rep.classes) total += cls.multiplicity;
    CHECK(total == 24);
    CHECK(rep.table.find("chsh-22") != std::string::npos);
    CHECK(rep.table.find("total facets: 24") != std::string::npos);
    CHECK(fs::exists(rep.classes_path));
}

TEST_CASE("membership: lf vertex is inside lf with weight 1 on itself") {
    const auto dir = fresh_dir("member_vertex");
    const auto vertex_file = dir / "extreme.json";
    write_behavior(vertex_file, slice_point_lf_extreme());

    RunConfig cfg;
    cfg.scenario = Scenario{3, 2};
    cfg.model = ModelKind::Lf;
    cfg.behavior_file = vertex_file;
    cfg.out_dir = dir;
    const auto rep = run_membership(cfg);
    CHECK(rep.inside);
    CHECK(rep.rounding_radius == 0.0);
    REQUIRE(rep.certificate.weights.size() == 1);
    CHECK(rep.certificate.weights.begin()->second == 1);
}

TEST_CASE("membership: quantum slice point is outside lf, inside ns") {
    const auto dir = fresh_dir("member_quantum");
    const auto file = dir / "quantum.json";
    write_behavior(file, slice_point_quantum());

    RunConfig cfg;
    cfg.scenario = Scenario{3, 2};
    cfg.model = ModelKind::Lf;
    cfg.behavior_file = file;
    cfg.out_dir = dir;
    const auto rep = run_membership(cfg);
    CHECK_FALSE(rep.inside);
    CHECK(rep.separator_label == "genuine-lf-1");

    cfg.model = ModelKind::Ns;
    const auto rep_ns = run_membership(cfg);
    CHECK(rep_ns.inside);
}

TEST_CASE("membership on a signalling behavior is rejected") {
    const auto dir = fresh_dir("member_signalling");
    const auto file = dir / "signalling.json";
    {
        std::ofstream out(file);
        out << R"({"scenario":[2,2],"table":
            [[[["3/10","1/5"],["1/5","3/10"]],[["2/5","0"],["0","3/5"]]],
             [[["1/4","1/4"],["1/4","1/4"]],[["1/4","1/4"],["1/4","1/4"]]]]})";
    }
    RunConfig cfg;
    cfg.scenario = Scenario{2, 2};
    cfg.model = ModelKind::Lhv;
    cfg.behavior_file = file;
    cfg.out_dir = dir;
    CHECK_THROWS_AS(run_membership(cfg), NotNoSignalling);
}

TEST_CASE("sweep csv layout and reproducibility") {
    RunConfig cfg;
    cfg.mu_list = {0.0, 0.8};
    cfg.out_dir = fresh_dir("sweep_run");
    const auto rep = run_sweep(cfg);
    CHECK(rep.rows.size() == 10);
    std::ifstream in(rep.csv_path);
    std::string header;
    std::getline(in, header);
    CHECK(header == "mu,label,lhs,bound,violated");
    int lines = 0;
    for (std::string line; std::getline(in, line);) ++lines;
    CHECK(lines == 10);

    RunConfig cfg2 = cfg;
    cfg2.out_dir = fresh_dir("sweep_run_again");
    const auto rep2 = run_sweep(cfg2);
    CHECK(file_sha256(rep.csv_path) == file_sha256(rep2.csv_path));
}

TEST_CASE("sweep validates mu") {
    RunConfig cfg;
    cfg.mu_list = {1.5};
    cfg.out_dir = fresh_dir("sweep_bad");
    CHECK_THROWS_AS(run_sweep(cfg), InvalidArgument);
    cfg.mu_list.clear();
    CHECK_THROWS_AS(run_sweep(cfg), InvalidArgument);
}

TEST_CASE("seesaw run produces a deterministic report") {
    RunConfig cfg;
    cfg.ineq_label = "brukner";
    cfg.restarts = 6;
    cfg.seed = 9;
    cfg.out_dir = fresh_dir("seesaw_run");
    const auto rep = run_seesaw(cfg);
    CHECK(rep.result.value == doctest::Approx(2 * std::sqrt(2.0)).epsilon(1e-6));
    CHECK(rep.noise_tolerance == doctest::Approx(1 - std::sqrt(0.5)).epsilon(1e-6));

    RunConfig cfg2 = cfg;
    cfg2.out_dir = fresh_dir("seesaw_run_again");
    cfg2.threads = 2; // thread count must not change the outcome
    const auto rep2 = run_seesaw(cfg2);
    CHECK(file_sha256(rep.report_path) == file_sha256(rep2.report_path));

    cfg.ineq_label = "no-such-inequality";
    CHECK_THROWS_AS(run_seesaw(cfg), InvalidArgument);
}

TEST_CASE("slice grid marks the three spanning points correctly") {
    RunConfig cfg;
    cfg.grid = 5;
    cfg.range_lo = Rational(0);
    cfg.range_hi = Rational(1);
    cfg.out_dir = fresh_dir("slice_run");
    const auto rep = run_slice(cfg);
    CHECK(rep.points == 25);

    std::ifstream in(rep.csv_path);
    std::string line;
    std::getline(in, line);
    CHECK(line == "s,t,lf1_lhs,neg_semi_brukner_lhs,valid,in_lhv,in_lf,in_ns,in_quantum");
    bool saw_origin = false, saw_extreme = false, saw_quantum = false;
    while (std::getline(in, line)) {
        if (line.rfind("0,0,", 0) == 0) {
            saw_origin = true;
            CHECK(line.find("true,true,true,true") != std::string::npos);
        }
        if (line.rfind("1,0,6,-2,", 0) == 0) {
            saw_extreme = true;
            CHECK(line.find("true,false,true,true") != std::string::npos);
        }
        if (line.rfind("0,1,7.336,", 0) == 0) {
            saw_quantum = true;
            CHECK(line.find("true,false,false,true") != std::string::npos);
        }
    }
    CHECK(saw_origin);
    CHECK(saw_extreme);
    CHECK(saw_quantum);
}

TEST_CASE("sweep and membership agree on violations") {
    // at mu = 0.85 the sweep flags the Bell-non-LF and semi-brukner forms;
    // the same behavior must then certify outside LHV and outside LF
    const auto dir = fresh_dir("sweep_vs_membership");
    RunConfig cfg;
    cfg.mu_list = {0.85};
    cfg.out_dir = dir;
    const auto sweep_rep = run_sweep(cfg);
    bool bell = false, semi = false;
    for (const auto& row : sweep_rep.rows) {
        if (row.label == "bell-non-lf") bell = row.violated;
        if (row.label == "semi-brukner-alt") semi = row.violated;
    }
    CHECK(bell);
    CHECK(semi);

    const auto behavior_file = dir / "mu085.json";
    write_behavior(behavior_file, sweep_behavior(cfg.angles, 0.85));
    cfg.behavior_file = behavior_file;
    cfg.model = ModelKind::Lhv;
    const auto lhv_rep = run_membership(cfg);
    CHECK_FALSE(lhv_rep.inside);
    cfg.model = ModelKind::Lf;
    const auto lf_rep = run_membership(cfg);
    CHECK_FALSE(lf_rep.inside);
    CHECK(lf_rep.separator_label == "semi-brukner");
}

TEST_CASE("slice spanning points are affinely independent by construction") {
    const auto p0 = to_collins_gisin(slice_point_uniform());
    const auto pe = to_collins_gisin(slice_point_lf_extreme());
    const auto pq = to_collins_gisin(slice_point_quantum());
    CHECK(affine_rank({p0, pe, pq}) == 3);
}

} // TEST_SUITE
