#include "lfpoly/workbench.hpp"

#include <atomic>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "lfpoly/inequality_library.hpp"
#include "lfpoly/symmetry.hpp"

namespace lfpoly {

using nlohmann::json;

namespace {

void ensure_dir(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw InvalidArgument("cannot create output directory " + dir.string());
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw InvalidArgument("cannot write " + path.string());
    return out;
}

} // namespace

EnumerateReport run_enumerate(const RunConfig& cfg) {
    require_valid(cfg.scenario);
    ensure_dir(cfg.out_dir);
    const BuiltPolytope poly = build_polytope(cfg.model, cfg.scenario, cfg.vertex_cap);

    EnumerateReport rep;
    rep.vertex_count = poly.v.vertices.size();
    rep.facet_count = poly.h.rows.size();
    rep.vertices_path = cfg.out_dir / "vertices.jsonl";
    rep.facets_path = cfg.out_dir / "facets.jsonl";
    rep.manifest_path = cfg.out_dir / "manifest.json";
    write_vrep(rep.vertices_path, poly.v);
    write_hrep(rep.facets_path, poly.h);

    json manifest;
    manifest["scenario"] = {cfg.scenario.settings, cfg.scenario.outcomes};
    manifest["kind"] = to_string(cfg.model);
    manifest["dimension"] = poly.v.dimension;
    manifest["vertex_count"] = rep.vertex_count;
    manifest["facet_count"] = rep.facet_count;
    manifest["vertices_sha256"] = file_sha256(rep.vertices_path);
    manifest["facets_sha256"] = file_sha256(rep.facets_path);
    auto out = open_out(rep.manifest_path);
    out << manifest.dump(2) << "\n";
    return rep;
}

ClassifyReport run_classify(const RunConfig& cfg, const std::filesystem::path& facets_file) {
    ensure_dir(cfg.out_dir);
    const HRepresentation facets = read_hrep(facets_file, cfg.scenario.cg_dimension());
    const auto classes = classify(facets, cfg.scenario, classification_library(cfg.scenario), true);

    ClassifyReport rep;
    rep.classes = classes;
    rep.classes_path = cfg.out_dir / "classes.json";
    write_classes(rep.classes_path, classes);

    // long-form names for the classification table
    static const std::map<std::string, std::string> display = {
        {"genuine-lf-1", "Genuine LF facet 1"},
        {"genuine-lf-2", "Genuine LF facet 2"},
        {"i3322-m12", "Bell I3322, marginals on inputs 1 and 2"},
        {"i3322-m23", "Bell I3322, marginals on inputs 2 and 3"},
        {"i3322-mixed", "Bell I3322, mixed marginal inputs (not an LF facet)"},
        {"brukner", "Brukner inequality (Bell-CHSH, inputs 1 and 2)"},
        {"semi-brukner", "Semi-Brukner inequality (Bell-CHSH, one friend input)"},
        {"bell-non-lf", "Bell-CHSH without friend inputs (not an LF facet)"},
        {"positivity-11", "Positivity, input 1 of Alice and input 1 of Bob"},
        {"positivity-12", "Positivity, input 1 of Alice and input 2 of Bob"},
        {"positivity-22", "Positivity, input 2 of Alice and input 2 of Bob"},
        {"chsh-22", "Bell-CHSH"},
    };
    std::ostringstream table;
    table << "label              multiplicity  bound  class\n";
    int total = 0;
    for (const auto& cls : classes) {
        table << cls.label;
        for (size_t pad = cls.label.size(); pad < 19; ++pad) table << ' ';
        table << cls.multiplicity;
        for (size_t pad = std::to_string(cls.multiplicity).size(); pad < 14; ++pad) table << ' ';
        const std::string bound_text = std::to_string(cls.representative.bound);
        table << bound_text;
        for (size_t pad = bound_text.size(); pad < 7; ++pad) table << ' ';
        const auto it = display.find(cls.label);
        table << (it != display.end() ? it->second : "(no library match)") << "\n";
        total += cls.multiplicity;
    }
    table << "total facets: " << total << " in " << classes.size() << " classes\n";
    rep.table = table.str();
    return rep;
}

MembershipReport run_membership(const RunConfig& cfg) {
    ensure_dir(cfg.out_dir);
    const LoadedBehavior loaded = read_behavior(cfg.behavior_file);
    if (!(loaded.scenario() == cfg.scenario))
        throw ScenarioMismatch("membership: behavior scenario differs from --scenario");

    MembershipReport rep;
    VectorXq point;
    if (loaded.exact) {
        if (!check_no_signalling(*loaded.exact).pass)
            throw NotNoSignalling("membership: behavior is signalling");
        point = collins_gisin(*loaded.exact);
    } else {
        if (!check_no_signalling(*loaded.approx).pass)
            throw NotNoSignalling("membership: behavior is signalling beyond 1e-10");
        const PromotedPoint promoted = promote_to_rational(*loaded.approx);
        point = promoted.point;
        rep.rounding_radius = promoted.rounding_radius;
    }

    VRepresentation vertices;
    switch (cfg.model) {
        case ModelKind::Lhv: vertices = lhv_vertices(cfg.scenario); break;
        case ModelKind::Lf: vertices = lf_vertices(cfg.scenario).v; break;
        case ModelKind::Ns: vertices = ns_vertices(cfg.scenario); break;
    }
    rep.certificate = lp_membership(point, vertices);
    if (!verify_certificate(rep.certificate, point, vertices))
        throw InvalidArgument("membership: certificate failed self-verification");
    rep.inside = rep.certificate.verdict == LPCertificate::Verdict::Inside;

    // For outside verdicts, name the most violated facet if a facet file is
    // available (or cheaply computable), which reads better than the raw
    // Farkas separator.
    HRow best_facet;
    bool have_facet = false;
    if (!rep.inside) {
        HRepresentation facets;
        if (!cfg.facets_file.empty()) {
            facets = read_hrep(cfg.facets_file, cfg.scenario.cg_dimension());
        } else if (cfg.model == ModelKind::Ns) {
            facets = ns_hrep(cfg.scenario);
        } else {
            facets = dd_facets(vertices);
        }
        Rational worst = 0;
        for (const auto& row : facets.rows) {
            const Rational s = slack(row, point);
            if (s > worst) {
                worst = s;
                best_facet = row;
                have_facet = true;
            }
        }
        if (have_facet && cfg.scenario.outcomes == 2) {
            const auto group = relabeling_group(cfg.scenario);
            const auto canon =
                canonical_form(cg_row_to_inequality(best_facet, cfg.scenario), group);
            for (const auto& named : all_named_inequalities()) {
                if (!(named.scenario == cfg.scenario)) continue;
                if (canonical_form(named, group).same_form(canon)) {
                    rep.separator_label = named.label;
                    break;
                }
            }
            rep.certificate.separator = best_facet;
            if (!verify_certificate(rep.certificate, point, vertices))
                throw InvalidArgument("membership: facet separator failed self-verification");
        }
    }

    json j;
    j["model"] = to_string(cfg.model);
    j["scenario"] = {cfg.scenario.settings, cfg.scenario.outcomes};
    j["verdict"] = rep.inside ? "inside" : "outside";
    j["rounding_radius"] = rep.rounding_radius;
    if (rep.inside) {
        json weights = json::object();
        for (const auto& [idx, w] : rep.certificate.weights)
            weights[std::to_string(idx)] = to_string(w);
        j["weights"] = std::move(weights);
    } else {
        std::vector<std::string> coeffs;
        for (Eigen::Index i = 0; i < rep.certificate.separator.coeffs.size(); ++i)
            coeffs.push_back(to_string(rep.certificate.separator.coeffs(i)));
        j["separator"] = {{"coeffs", coeffs}, {"bound", to_string(rep.certificate.separator.bound)}};
        if (!rep.separator_label.empty()) j["separator_label"] = rep.separator_label;
    }
    rep.certificate_path = cfg.out_dir / "certificate.json";
    auto out = open_out(rep.certificate_path);
    out << j.dump(2) << "\n";
    return rep;
}

SweepReport run_sweep(const RunConfig& cfg) {
    ensure_dir(cfg.out_dir);
    if (cfg.mu_list.empty()) throw InvalidArgument("sweep: --mu list is required");
    for (double mu : cfg.mu_list)
        if (mu < 0 || mu > 1) throw InvalidArgument("sweep: mu must lie in [0,1]");

    SweepReport rep;
    rep.rows = mu_sweep(cfg.angles, cfg.mu_list, sweep_inequalities());
    rep.csv_path = cfg.out_dir / "sweep.csv";
    auto out = open_out(rep.csv_path);
    out << "mu,label,lhs,bound,violated\n";
    out << std::setprecision(12);
    for (const auto& row : rep.rows)
        out << row.mu << "," << row.label << "," << row.lhs << "," << row.bound << ","
            << (row.violated ? "true" : "false") << "\n";
    return rep;
}

SeesawReport run_seesaw(const RunConfig& cfg) {
    ensure_dir(cfg.out_dir);
    // --ineq takes a library label or a path to an inequality JSON file
    std::optional<Inequality> ineq = find_inequality(cfg.ineq_label);
    if (!ineq && std::filesystem::exists(cfg.ineq_label)) {
        std::ifstream in(cfg.ineq_label);
        std::stringstream buffer;
        buffer << in.rdbuf();
        ineq = inequality_from_json(buffer.str());
    }
    if (!ineq) throw InvalidArgument("seesaw: unknown inequality label " + cfg.ineq_label);

    SeesawOptions opt;
    opt.dim_a = cfg.dim_a;
    opt.dim_b = cfg.dim_b;
    // rank-structured optima above qubit dimension need more restarts to
    // show up reliably
    opt.restarts = cfg.restarts > 0 ? cfg.restarts
                                    : (std::max(cfg.dim_a, cfg.dim_b) >= 3 ? 200 : 50);
    opt.seed = cfg.seed;
    opt.threads = cfg.threads;

    SeesawReport rep;
    rep.result = seesaw_maximize(*ineq, opt);
    if (rep.result.value > static_cast<double>(ineq->bound))
        rep.noise_tolerance =
            white_noise_tolerance(rep.result.state, rep.result.alice, rep.result.bob, *ineq);

    json j;
    j["inequality"] = cfg.ineq_label;
    j["bound"] = ineq->bound;
    j["dims"] = {cfg.dim_a, cfg.dim_b};
    j["restarts"] = opt.restarts;
    j["seed"] = cfg.seed;
    j["value"] = rep.result.value;
    j["schmidt"] = rep.result.schmidt;
    j["iterations"] = rep.result.iterations;
    j["winning_restart"] = rep.result.winning_restart;
    j["converged"] = rep.result.converged;
    if (rep.noise_tolerance >= 0) j["white_noise_tolerance"] = rep.noise_tolerance;
    auto flatten = [](const std::vector<DichotomicObservable>& obs) {
        json arr = json::array();
        for (const auto& o : obs) {
            json m = json::array();
            for (Eigen::Index i = 0; i < o.m.rows(); ++i)
                for (Eigen::Index k = 0; k < o.m.cols(); ++k) {
                    m.push_back(o.m(i, k).real());
                    m.push_back(o.m(i, k).imag());
                }
            arr.push_back(std::move(m));
        }
        return arr;
    };
    j["alice_observables"] = flatten(rep.result.alice);
    j["bob_observables"] = flatten(rep.result.bob);

    rep.report_path = cfg.out_dir / "seesaw.json";
    auto out = open_out(rep.report_path);
    out << j.dump(2) << "\n";
    return rep;
}

BehaviorQ slice_point_uniform() {
    const Scenario s{3, 2};
    BehaviorQ b(s);
    for (int x = 1; x <= 3; ++x)
        for (int a = 1; a <= 2; ++a)
            for (int y = 1; y <= 3; ++y)
                for (int bb = 1; bb <= 2; ++bb) b.at(x, a, y, bb) = Rational(1, 4);
    return b;
}

BehaviorQ slice_point_lf_extreme() {
    const Scenario s{3, 2};
    BehaviorQ b(s);
    for (int x = 1; x <= 3; ++x)
        for (int y = 1; y <= 3; ++y)
            for (int a = 1; a <= 2; ++a)
                for (int bb = 1; bb <= 2; ++bb) {
                    const int sa = outcome_sign(a), sb = outcome_sign(bb);
                    Rational p(0);
                    if (x == 1 && y == 1) p = (sa == -1 && sb == 1) ? 1 : 0;
                    else if (x == 1) p = (sa == -1) ? Rational(1, 2) : Rational(0);
                    else if (y == 1) p = (sb == 1) ? Rational(1, 2) : Rational(0);
                    else p = Rational(1 + (x == 2 && y == 2 ? 1 : -1) * sa * sb, 4);
                    b.at(x, a, y, bb) = p;
                }
    return b;
}

BehaviorQ slice_point_quantum() {
    const Scenario s{3, 2};
    VectorXq cg(15);
    const int vals[15] = {554, 409, 537, 554, 409, 537, 197, 21, 150, 21, 311, 40, 150, 40, 109};
    for (int i = 0; i < 15; ++i) cg(i) = Rational(vals[i], 1000);
    return from_collins_gisin(s, cg);
}

SliceReport run_slice(const RunConfig& cfg) {
    ensure_dir(cfg.out_dir);
    if (cfg.grid < 2) throw InvalidArgument("slice: grid must be >= 2");
    const Scenario s{3, 2};
    const VectorXq p0 = to_collins_gisin(slice_point_uniform());
    const VectorXq pe = to_collins_gisin(slice_point_lf_extreme());
    const VectorXq pq = to_collins_gisin(slice_point_quantum());
    {
        MatrixXq span(2, 15);
        span.row(0) = (pe - p0).transpose();
        span.row(1) = (pq - p0).transpose();
        if (rank(span) < 2)
            throw DegeneratePlane("slice: spanning behaviors are affinely dependent");
    }

    const auto lhv_h = dd_facets(lhv_vertices(s));
    const auto lf_h = dd_facets(lf_vertices(s).v);
    const auto lf1 = *find_inequality("genuine-lf-1");
    const auto semi = *find_inequality("semi-brukner");

    const int grid = cfg.grid;
    const Rational step = (cfg.range_hi - cfg.range_lo) / (grid - 1);

    struct Row {
        Rational s_val, t_val;
        double axis_x = 0, axis_y = 0;
        bool valid = false, in_lhv = false, in_lf = false, in_ns = false;
    };
    std::vector<Row> rows(static_cast<size_t>(grid) * static_cast<size_t>(grid));

    const int workers = cfg.threads > 0 ? cfg.threads
                                        : std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    std::atomic<int> next_row{0};
    std::atomic<long> valid_count{0};
    for (int t = 0; t < std::min(workers, grid); ++t) {
        pool.emplace_back([&] {
            for (;;) {
                const int i = next_row.fetch_add(1);
                if (i >= grid) return;
                const Rational sv = cfg.range_lo + i * step;
                for (int j = 0; j < grid; ++j) {
                    const Rational tv = cfg.range_lo + j * step;
                    const VectorXq point = p0 + sv * (pe - p0) + tv * (pq - p0);
                    Row& row = rows[static_cast<size_t>(i) * static_cast<size_t>(grid) +
                                    static_cast<size_t>(j)];
                    row.s_val = sv;
                    row.t_val = tv;
                    const BehaviorQ beh = from_collins_gisin(s, point);
                    row.axis_x = evaluate(lf1, beh).convert_to<double>();
                    row.axis_y = -evaluate(semi, beh).convert_to<double>();
                    row.valid = is_valid_distribution(beh);
                    row.in_ns = row.valid;
                    if (row.valid) {
                        row.in_lf = satisfies(lf_h, point);
                        row.in_lhv = row.in_lf && satisfies(lhv_h, point);
                        valid_count.fetch_add(1);
                    }
                }
            }
        });
    }
    for (auto& th : pool) th.join();

    SliceReport rep;
    rep.points = rows.size();
    rep.valid_points = static_cast<size_t>(valid_count.load());
    rep.csv_path = cfg.out_dir / "slice.csv";
    auto out = open_out(rep.csv_path);
    out << "s,t,lf1_lhs,neg_semi_brukner_lhs,valid,in_lhv,in_lf,in_ns,in_quantum\n";
    out << std::setprecision(12);
    for (const auto& row : rows) {
        out << row.s_val.convert_to<double>() << "," << row.t_val.convert_to<double>() << ","
            << row.axis_x << "," << row.axis_y << "," << (row.valid ? "true" : "false") << ","
            << (row.in_lhv ? "true" : "false") << "," << (row.in_lf ? "true" : "false") << ","
            << (row.in_ns ? "true" : "false") << ",\n";
    }
    return rep;
}

} // namespace lfpoly
