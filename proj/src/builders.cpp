#include "lfpoly/builders.hpp"

#include <map>

namespace lfpoly {

std::string to_string(ModelKind k) {
    switch (k) {
        case ModelKind::Lhv: return "lhv";
        case ModelKind::Ns: return "ns";
        case ModelKind::Lf: return "lf";
    }
    return "?";
}

ModelKind model_from_string(const std::string& s) {
    if (s == "lhv") return ModelKind::Lhv;
    if (s == "ns") return ModelKind::Ns;
    if (s == "lf") return ModelKind::Lf;
    throw InvalidArgument("unknown model kind: " + s + " (expected lhv|ns|lf)");
}

namespace {

std::vector<DeterministicStrategy> all_strategies(const Scenario& s) {
    std::vector<DeterministicStrategy> out;
    const int total = static_cast<int>(std::pow(s.outcomes, s.settings));
    for (int code = 0; code < total; ++code) {
        DeterministicStrategy st;
        st.outcome_for_setting.resize(static_cast<size_t>(s.settings));
        int rem = code;
        for (int x = 0; x < s.settings; ++x) {
            st.outcome_for_setting[static_cast<size_t>(x)] = rem % s.outcomes + 1;
            rem /= s.outcomes;
        }
        out.push_back(std::move(st));
    }
    return out;
}

} // namespace

BehaviorQ deterministic_behavior(const Scenario& s, const DeterministicStrategy& alice,
                                 const DeterministicStrategy& bob) {
    BehaviorQ b(s);
    for (int x = 1; x <= s.settings; ++x)
        for (int y = 1; y <= s.settings; ++y)
            b.at(x, alice.outcome_for_setting[static_cast<size_t>(x - 1)], y,
                 bob.outcome_for_setting[static_cast<size_t>(y - 1)]) = 1;
    return b;
}

VRepresentation lhv_vertices(const Scenario& s) {
    require_valid(s);
    VRepresentation out;
    out.dimension = s.cg_dimension();
    const auto strategies = all_strategies(s);
    for (const auto& alice : strategies)
        for (const auto& bob : strategies)
            out.vertices.push_back(collins_gisin(deterministic_behavior(s, alice, bob)));
    out.sort_and_dedupe();
    return out;
}

HRepresentation ns_hrep(const Scenario& s) {
    require_valid(s);
    const CgLayout lay(s);
    const int N = s.settings, O = s.outcomes, K = O - 1;
    HRepresentation h;
    h.dimension = lay.dim();

    // Every table entry, written as a linear form of the CG coordinates,
    // must be nonnegative. Entries with both outcomes < O are coordinates;
    // the others are marginal sums minus joint sums.
    auto add_row = [&](const VectorXq& form, const Rational& constant) {
        // form.p + constant >= 0  <=>  (-form).p <= constant
        HRow row;
        row.coeffs = -form;
        row.bound = constant;
        h.rows.push_back(std::move(row));
    };

    for (int x = 1; x <= N; ++x) {
        for (int y = 1; y <= N; ++y) {
            for (int a = 1; a <= K; ++a)
                for (int b = 1; b <= K; ++b) {
                    VectorXq form = VectorXq::Zero(lay.dim());
                    form(lay.ab_index(x, y, a, b)) = 1;
                    add_row(form, 0);
                }
            for (int a = 1; a <= K; ++a) {
                VectorXq form = VectorXq::Zero(lay.dim());
                form(lay.a_index(x, a)) = 1;
                for (int b = 1; b <= K; ++b) form(lay.ab_index(x, y, a, b)) = -1;
                add_row(form, 0);
            }
            for (int b = 1; b <= K; ++b) {
                VectorXq form = VectorXq::Zero(lay.dim());
                form(lay.b_index(y, b)) = 1;
                for (int a = 1; a <= K; ++a) form(lay.ab_index(x, y, a, b)) = -1;
                add_row(form, 0);
            }
            VectorXq form = VectorXq::Zero(lay.dim());
            for (int a = 1; a <= K; ++a) form(lay.a_index(x, a)) = -1;
            for (int b = 1; b <= K; ++b) form(lay.b_index(y, b)) = -1;
            for (int a = 1; a <= K; ++a)
                for (int b = 1; b <= K; ++b) form(lay.ab_index(x, y, a, b)) = 1;
            add_row(form, 1);
        }
    }
    h.normalize_and_sort();
    return h;
}

VRepresentation ns_vertices(const Scenario& s) {
    require_valid(s);
    if (s.settings == 1) {
        // One setting per party: no no-signalling constraints bind, so the
        // extreme points are the O^2 deterministic tables.
        VRepresentation out;
        out.dimension = s.cg_dimension();
        for (int a = 1; a <= s.outcomes; ++a) {
            for (int b = 1; b <= s.outcomes; ++b) {
                DeterministicStrategy sa{{a}}, sb{{b}};
                out.vertices.push_back(collins_gisin(deterministic_behavior(s, sa, sb)));
            }
        }
        out.sort_and_dedupe();
        return out;
    }
    return dd_vertices(ns_hrep(s));
}

BehaviorQ lf_vertex_behavior(const Scenario& s, const LFVertexSpec& spec,
                             const std::vector<BehaviorQ>& boxes) {
    const int N = s.settings, O = s.outcomes;
    const BehaviorQ& box = boxes[static_cast<size_t>(spec.box)];
    BehaviorQ b(s);
    // Box setting k lives at scenario setting k+1; setting 1 asks the friend.
    for (int x = 1; x <= N; ++x) {
        for (int y = 1; y <= N; ++y) {
            for (int a = 1; a <= O; ++a) {
                for (int bb = 1; bb <= O; ++bb) {
                    Rational p;
                    if (x == 1 && y == 1) {
                        p = Rational((a == spec.c && bb == spec.d) ? 1 : 0);
                    } else if (x == 1) {
                        p = (a == spec.c) ? box.mean_marginal_b(y - 1, bb) : Rational(0);
                    } else if (y == 1) {
                        p = (bb == spec.d) ? box.mean_marginal_a(x - 1, a) : Rational(0);
                    } else {
                        p = box.at(x - 1, a, y - 1, bb);
                    }
                    b.at(x, a, y, bb) = p;
                }
            }
        }
    }
    return b;
}

LFVertices lf_vertices(const Scenario& s) {
    require_valid(s);
    if (s.settings < 2)
        throw InvalidArgument("lf_vertices: requires N >= 2 (setting 1 is the friend setting)");
    const Scenario inner{s.settings - 1, s.outcomes};
    const VRepresentation boxes_cg = ns_vertices(inner);
    std::vector<BehaviorQ> boxes;
    boxes.reserve(boxes_cg.vertices.size());
    for (const auto& cg : boxes_cg.vertices) boxes.push_back(from_collins_gisin(inner, cg));

    // Merge duplicate behaviors but keep every generating spec.
    std::map<std::vector<Rational>, std::vector<LFVertexSpec>> merged;
    for (int c = 1; c <= s.outcomes; ++c) {
        for (int d = 1; d <= s.outcomes; ++d) {
            for (int j = 0; j < static_cast<int>(boxes.size()); ++j) {
                const LFVertexSpec spec{c, d, j};
                const VectorXq cg = collins_gisin(lf_vertex_behavior(s, spec, boxes));
                std::vector<Rational> key(cg.data(), cg.data() + cg.size());
                merged[std::move(key)].push_back(spec);
            }
        }
    }

    LFVertices out;
    out.v.dimension = s.cg_dimension();
    for (auto& [key, specs] : merged) {
        VectorXq cg(static_cast<Eigen::Index>(key.size()));
        for (size_t i = 0; i < key.size(); ++i) cg(static_cast<Eigen::Index>(i)) = key[i];
        out.v.vertices.push_back(std::move(cg));
        out.spec_of.push_back(std::move(specs));
    }
    return out;
}

BehaviorQ pr_box_behavior() {
    const Scenario s{2, 2};
    CorrelatorForm<Rational> c;
    c.a = VectorXq::Zero(2);
    c.b = VectorXq::Zero(2);
    c.ab.resize(2, 2);
    c.ab << 1, 1, 1, -1;
    return from_correlators(s, c);
}

bool is_deterministic_point(const Scenario& s, const VectorXq& cg) {
    const BehaviorQ b = from_collins_gisin(s, cg);
    for (int x = 1; x <= s.settings; ++x)
        for (int a = 1; a <= s.outcomes; ++a)
            for (int y = 1; y <= s.settings; ++y)
                for (int bb = 1; bb <= s.outcomes; ++bb) {
                    const Rational& p = b.at(x, a, y, bb);
                    if (p != 0 && p != 1) return false;
                }
    return true;
}

BuiltPolytope build_polytope(ModelKind kind, const Scenario& s, int vertex_cap) {
    require_valid(s);
    // Reject blowups before enumerating anything.
    const double strategies = std::pow(s.outcomes, s.settings);
    if (kind == ModelKind::Lhv && strategies * strategies > vertex_cap)
        throw CapExceeded("lhv vertex count " + std::to_string(strategies * strategies) +
                          " exceeds cap " + std::to_string(vertex_cap));

    BuiltPolytope out;
    out.scenario = s;
    out.kind = kind;
    switch (kind) {
        case ModelKind::Lhv: out.v = lhv_vertices(s); break;
        case ModelKind::Ns: out.v = ns_vertices(s); break;
        case ModelKind::Lf: out.v = lf_vertices(s).v; break;
    }
    if (static_cast<int>(out.v.vertices.size()) > vertex_cap)
        throw CapExceeded("vertex count " + std::to_string(out.v.vertices.size()) +
                          " exceeds cap " + std::to_string(vertex_cap));

    out.h = (kind == ModelKind::Ns) ? ns_hrep(s) : dd_facets(out.v);

    // Cross-validation: H and V must describe the same polytope.
    for (const auto& vert : out.v.vertices) {
        if (!satisfies(out.h, vert))
            throw InvalidArgument("build_polytope: a vertex violates a facet");
    }
    for (const auto& row : out.h.rows) {
        if (!is_facet_of(row, out.v))
            throw InvalidArgument("build_polytope: a row is not facet-defining");
    }
    // Every listed vertex must be a 0-face: its tight rows span full rank.
    for (const auto& vert : out.v.vertices) {
        MatrixXq tight(static_cast<Eigen::Index>(out.h.rows.size()), out.h.dimension);
        Eigen::Index k = 0;
        for (const auto& row : out.h.rows) {
            if (slack(row, vert) == 0) tight.row(k++) = row.coeffs.transpose();
        }
        if (rank(tight.topRows(k)) < out.h.dimension)
            throw InvalidArgument("build_polytope: a listed vertex is not extreme");
    }
    return out;
}

} // namespace lfpoly
