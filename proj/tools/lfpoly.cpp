// lfpoly: construct, enumerate, classify and test Local-Friendliness,
// local-hidden-variable and no-signalling correlation polytopes, search for
// quantum violations, and reproduce the reference sweeps and slices.

#include <fstream>
#include <iomanip>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lfpoly/inequality_library.hpp"
#include "lfpoly/workbench.hpp"

namespace {

using namespace lfpoly;

constexpr int kExitValidation = 2;
constexpr int kExitComputational = 3;

struct CliState {
    RunConfig cfg;
    std::string scenario_text = "3,2";
    std::string model_text = "lf";
    std::string angles_text = "168,0,118,175";
    std::string mu_text;
    std::string dims_text = "2,2";
    std::string range_text = "-0.5,1.5";
    std::string behavior_text;
    std::string facets_text;
    std::string config_file;
};

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : text) {
        if (c == sep) {
            parts.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    parts.push_back(current);
    return parts;
}

// Flat "key = value" config; command-line flags win over file entries.
void apply_flat_config(CLI::App& app, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open config file " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw InvalidArgument("config line " + std::to_string(lineno) +
                                  ": expected key = value");
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t");
            const auto e = s.find_last_not_of(" \t");
            return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        bool consumed = false;
        for (CLI::App* sub : app.get_subcommands()) {
            if (CLI::Option* opt = sub->get_option_no_throw("--" + key)) {
                if (opt->count() == 0) {
                    opt->add_result(value);
                    opt->run_callback();
                }
                consumed = true;
                break;
            }
        }
        if (!consumed) {
            if (CLI::Option* opt = app.get_option_no_throw("--" + key)) {
                if (opt->count() == 0) {
                    opt->add_result(value);
                    opt->run_callback();
                }
            } else {
                throw InvalidArgument("config line " + std::to_string(lineno) +
                                      ": unknown key '" + key + "'");
            }
        }
    }
}

void finalize(CliState& st) {
    auto ints = [](const std::string& text, size_t want, const char* what) {
        const auto parts = split(text, ',');
        if (parts.size() != want)
            throw InvalidArgument(std::string(what) + ": expected " + std::to_string(want) +
                                  " comma-separated values, got '" + text + "'");
        std::vector<long long> out;
        for (const auto& p : parts) out.push_back(std::stoll(p));
        return out;
    };
    const auto sc = ints(st.scenario_text, 2, "--scenario");
    st.cfg.scenario = Scenario{static_cast<int>(sc[0]), static_cast<int>(sc[1])};
    st.cfg.model = model_from_string(st.model_text);
    {
        const auto parts = split(st.angles_text, ',');
        if (parts.size() != 4) throw InvalidArgument("--angles: expected phi1,phi2,phi3,beta");
        st.cfg.angles = MeasurementAngles{std::stod(parts[0]), std::stod(parts[1]),
                                          std::stod(parts[2]), std::stod(parts[3])};
    }
    if (!st.mu_text.empty()) {
        st.cfg.mu_list.clear();
        for (const auto& p : split(st.mu_text, ',')) st.cfg.mu_list.push_back(std::stod(p));
    }
    const auto dims = ints(st.dims_text, 2, "--dims");
    st.cfg.dim_a = static_cast<int>(dims[0]);
    st.cfg.dim_b = static_cast<int>(dims[1]);
    {
        const auto parts = split(st.range_text, ',');
        if (parts.size() != 2) throw InvalidArgument("--range: expected lo,hi");
        st.cfg.range_lo = parse_decimal(parts[0]);
        st.cfg.range_hi = parse_decimal(parts[1]);
        if (st.cfg.range_lo >= st.cfg.range_hi)
            throw InvalidArgument("--range: lo must be below hi");
    }
    st.cfg.behavior_file = st.behavior_text;
    st.cfg.facets_file = st.facets_text;
}

int dispatch(const std::string& name, CliState& st) {
    const RunConfig& cfg = st.cfg;
    if (name == "enumerate") {
        const auto rep = run_enumerate(cfg);
        std::cout << to_string(cfg.model) << "(" << cfg.scenario.settings << ","
                  << cfg.scenario.outcomes << "): " << rep.vertex_count << " vertices, "
                  << rep.facet_count << " facets\n"
                  << "wrote " << rep.vertices_path.string() << ", " << rep.facets_path.string()
                  << ", " << rep.manifest_path.string() << "\n";
    } else if (name == "classify") {
        if (st.facets_text.empty()) throw InvalidArgument("classify: --facets FILE is required");
        const auto rep = run_classify(cfg, st.facets_text);
        std::cout << rep.table << "wrote " << rep.classes_path.string() << "\n";
    } else if (name == "membership") {
        if (st.behavior_text.empty())
            throw InvalidArgument("membership: --behavior FILE is required");
        const auto rep = run_membership(cfg);
        std::cout << "verdict: " << (rep.inside ? "inside" : "outside") << " "
                  << to_string(cfg.model) << "(" << cfg.scenario.settings << ","
                  << cfg.scenario.outcomes << ")\n";
        if (rep.rounding_radius > 0)
            std::cout << "float input promoted; rounding radius " << rep.rounding_radius << "\n";
        if (!rep.inside && !rep.separator_label.empty())
            std::cout << "separating facet class: " << rep.separator_label << "\n";
        std::cout << "wrote " << rep.certificate_path.string() << "\n";
    } else if (name == "sweep") {
        const auto rep = run_sweep(cfg);
        int violated = 0;
        for (const auto& row : rep.rows) violated += row.violated ? 1 : 0;
        std::cout << rep.rows.size() << " sweep rows (" << violated << " violations), wrote "
                  << rep.csv_path.string() << "\n";
    } else if (name == "seesaw") {
        const auto rep = run_seesaw(cfg);
        std::cout << cfg.ineq_label << " d=(" << cfg.dim_a << "," << cfg.dim_b << "): value "
                  << std::setprecision(10) << rep.result.value << " after "
                  << rep.result.iterations << " rounds (restart " << rep.result.winning_restart
                  << (rep.result.converged ? ", converged" : ", iteration cap") << ")\n";
        std::cout << "schmidt:";
        for (double s : rep.result.schmidt) std::cout << " " << s;
        std::cout << "\n";
        if (rep.noise_tolerance >= 0)
            std::cout << "white-noise tolerance: " << rep.noise_tolerance << "\n";
        std::cout << "wrote " << rep.report_path.string() << "\n";
    } else if (name == "slice") {
        const auto rep = run_slice(cfg);
        std::cout << rep.points << " grid points (" << rep.valid_points << " valid), wrote "
                  << rep.csv_path.string() << "\n";
    }
    return 0;
}

nlohmann::json error_json(const std::string& type, const std::string& message) {
    return nlohmann::json{{"error", {{"type", type}, {"message", message}}}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Local-Friendliness correlation polytope workbench"};
    app.require_subcommand(1);

    CliState st;
    app.add_option("--config", st.config_file, "flat key = value config file");
    app.add_option("--out", st.cfg.out_dir, "output directory")->capture_default_str();
    app.add_option("--threads", st.cfg.threads, "worker threads (0 = hardware)");
    app.add_option("--seed", st.cfg.seed, "random seed");

    auto* enumerate = app.add_subcommand("enumerate", "enumerate vertices and facets of a model");
    enumerate->fallthrough();
    enumerate->add_option("--scenario", st.scenario_text, "N,O")->capture_default_str();
    enumerate->add_option("--model", st.model_text, "lhv|ns|lf")->capture_default_str();
    enumerate->add_option("--cap", st.cfg.vertex_cap, "vertex-count guard")->capture_default_str();

    auto* classify_cmd = app.add_subcommand("classify", "group facets into relabeling classes");
    classify_cmd->fallthrough();
    classify_cmd->add_option("--facets", st.facets_text, "facets.jsonl to classify");
    classify_cmd->add_option("--scenario", st.scenario_text, "N,O")->capture_default_str();

    auto* membership = app.add_subcommand("membership", "certify a behavior against a model");
    membership->fallthrough();
    membership->add_option("--behavior", st.behavior_text, "behavior JSON file");
    membership->add_option("--model", st.model_text, "lhv|ns|lf")->capture_default_str();
    membership->add_option("--scenario", st.scenario_text, "N,O")->capture_default_str();
    membership->add_option("--facets", st.facets_text, "optional facets.jsonl for the separator");

    auto* sweep = app.add_subcommand("sweep", "violation sweep over the noise parameter");
    sweep->fallthrough();
    sweep->add_option("--angles", st.angles_text, "phi1,phi2,phi3,beta in degrees")
        ->capture_default_str();
    sweep->add_option("--mu", st.mu_text, "comma-separated mu values");

    auto* seesaw = app.add_subcommand("seesaw", "maximize an inequality over quantum strategies");
    seesaw->fallthrough();
    seesaw->add_option("--ineq", st.cfg.ineq_label, "inequality label")->capture_default_str();
    seesaw->add_option("--dims", st.dims_text, "dA,dB")->capture_default_str();
    seesaw->add_option("--restarts", st.cfg.restarts,
                       "random restarts (0 = auto: 50 for qubits, 200 above)");

    auto* slice = app.add_subcommand("slice", "2-d correlation-space slice grid");
    slice->fallthrough();
    slice->add_option("--grid", st.cfg.grid, "points per axis")->capture_default_str();
    slice->add_option("--range", st.range_text, "lo,hi for both axes")->capture_default_str();

    try {
        app.parse(argc, argv);
        if (!st.config_file.empty()) apply_flat_config(app, st.config_file);
        CLI::App* active = app.get_subcommands().at(0);
        finalize(st);
        return dispatch(active->get_name(), st);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help and friends
        std::cerr << error_json("cli", e.what()).dump() << "\n";
        return kExitValidation;
    } catch (const CapExceeded& e) {
        std::cerr << error_json("cap-exceeded", e.what()).dump() << "\n";
        return kExitComputational;
    } catch (const DegenerateInput& e) {
        auto j = error_json("degenerate-input", e.what());
        j["error"]["affine_dimension"] = e.affine_dimension;
        std::cerr << j.dump() << "\n";
        return kExitComputational;
    } catch (const Unbounded& e) {
        std::cerr << error_json("unbounded", e.what()).dump() << "\n";
        return kExitComputational;
    } catch (const Empty& e) {
        std::cerr << error_json("empty", e.what()).dump() << "\n";
        return kExitComputational;
    } catch (const UnmatchedFacet& e) {
        std::cerr << error_json("unmatched-facet", e.what()).dump() << "\n";
        return kExitComputational;
    } catch (const DegeneratePlane& e) {
        std::cerr << error_json("degenerate-plane", e.what()).dump() << "\n";
        return kExitComputational;
    } catch (const NoViolation& e) {
        std::cerr << error_json("no-violation", e.what()).dump() << "\n";
        return kExitComputational;
    } catch (const std::exception& e) {
        std::cerr << error_json("validation", e.what()).dump() << "\n";
        return kExitValidation;
    }
}
