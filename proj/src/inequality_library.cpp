#include "lfpoly/inequality_library.hpp"

namespace lfpoly {

Inequality make_inequality(const Scenario& s, std::vector<int> a, std::vector<int> b,
                           std::vector<std::vector<int>> ab, long long bound,
                           const std::string& label) {
    require_valid(s);
    if (s.outcomes != 2)
        throw InvalidArgument("make_inequality: correlator form presupposes O = 2 (" + label + ")");
    const int N = s.settings;
    if (static_cast<int>(a.size()) != N || static_cast<int>(b.size()) != N ||
        static_cast<int>(ab.size()) != N)
        throw InvalidArgument("make_inequality: coefficient shape mismatch for " + label);
    Inequality out;
    out.scenario = s;
    out.label = label;
    out.bound = bound;
    out.a.resize(N);
    out.b.resize(N);
    out.ab.resize(N, N);
    for (int x = 0; x < N; ++x) {
        out.a(x) = a[static_cast<size_t>(x)];
        out.b(x) = b[static_cast<size_t>(x)];
        if (static_cast<int>(ab[static_cast<size_t>(x)].size()) != N)
            throw InvalidArgument("make_inequality: joint row length mismatch for " + label);
        for (int y = 0; y < N; ++y) out.ab(x, y) = ab[static_cast<size_t>(x)][static_cast<size_t>(y)];
    }
    return out;
}

namespace {

std::vector<Inequality> build_lf_classes() {
    const Scenario s32{3, 2};
    std::vector<Inequality> v;
    v.push_back(make_inequality(s32, {-1, -1, 0}, {-1, -1, 0},
                                {{-1, -2, 0}, {-2, 2, -1}, {0, -1, -1}}, 6, "genuine-lf-1"));
    v.push_back(make_inequality(s32, {-1, -1, -1}, {-1, 0, 0},
                                {{-1, -2, 0}, {-1, 1, -1}, {-1, 1, 1}}, 5, "genuine-lf-2"));
    v.push_back(make_inequality(s32, {-1, 1, 0}, {1, -1, 0},
                                {{1, -1, -1}, {-1, 1, -1}, {-1, -1, 0}}, 4, "i3322-m12"));
    v.push_back(make_inequality(s32, {0, -1, -1}, {0, -1, -1},
                                {{0, -1, 1}, {-1, -1, -1}, {1, -1, -1}}, 4, "i3322-m23"));
    v.push_back(make_inequality(s32, {0, 0, 0}, {0, 0, 0},
                                {{1, 1, 0}, {1, -1, 0}, {0, 0, 0}}, 2, "brukner"));
    v.push_back(make_inequality(s32, {0, 0, 0}, {0, 0, 0},
                                {{0, 0, 0}, {1, 1, 0}, {1, -1, 0}}, 2, "semi-brukner"));
    // wp(+,+|x,y) >= 0 over correlators: -<A_x> - <B_y> - <A_x B_y> <= 1
    v.push_back(make_inequality(s32, {-1, 0, 0}, {-1, 0, 0},
                                {{-1, 0, 0}, {0, 0, 0}, {0, 0, 0}}, 1, "positivity-11"));
    v.push_back(make_inequality(s32, {-1, 0, 0}, {0, -1, 0},
                                {{0, -1, 0}, {0, 0, 0}, {0, 0, 0}}, 1, "positivity-12"));
    v.push_back(make_inequality(s32, {0, -1, 0}, {0, -1, 0},
                                {{0, 0, 0}, {0, -1, 0}, {0, 0, 0}}, 1, "positivity-22"));
    return v;
}

std::vector<Inequality> build_all() {
    const Scenario s32{3, 2};
    std::vector<Inequality> v = build_lf_classes();
    v.push_back(make_inequality(s32, {0, 0, 0}, {0, 0, 0},
                                {{0, 0, 0}, {0, 1, -1}, {0, -1, -1}}, 2, "bell-non-lf"));
    v.push_back(make_inequality(s32, {0, 0, 0}, {0, 0, 0},
                                {{0, 0, 0}, {0, 1, 1}, {0, 1, -1}}, 2, "bell-non-lf-alt"));
    // I3322 with Alice marginals on inputs {1,2} but Bob marginals on
    // {2,3}: a Bell facet, fused with the other I3322 forms under full
    // relabeling but a separate class once setting 1 is pinned, and not an
    // LF inequality (LF vertices reach 6)
    v.push_back(make_inequality(s32, {-1, -1, 0}, {0, -1, -1},
                                {{-1, -1, -1}, {1, -1, -1}, {0, -1, 1}}, 4, "i3322-mixed"));
    v.push_back(make_inequality(s32, {0, 0, 0}, {0, 0, 0},
                                {{1, 0, -1}, {-1, 0, -1}, {0, 0, 0}}, 2, "brukner-alt"));
    v.push_back(make_inequality(s32, {0, 0, 0}, {0, 0, 0},
                                {{0, -1, 1}, {0, 0, 0}, {0, -1, -1}}, 2, "semi-brukner-alt"));
    // CHSH on a (2,2) scenario, for small-scenario tests and searches
    v.push_back(make_inequality(Scenario{2, 2}, {0, 0}, {0, 0},
                                {{1, 1}, {1, -1}}, 2, "chsh-22"));
    return v;
}

} // namespace

const std::vector<Inequality>& lf_facet_classes() {
    static const std::vector<Inequality> classes = build_lf_classes();
    return classes;
}

const std::vector<Inequality>& all_named_inequalities() {
    static const std::vector<Inequality> all = build_all();
    return all;
}

std::optional<Inequality> find_inequality(const std::string& label) {
    for (const auto& ineq : all_named_inequalities()) {
        if (ineq.label == label) return ineq;
    }
    return std::nullopt;
}

std::vector<Inequality> positivity_library(const Scenario& s) {
    if (s.outcomes != 2) throw InvalidArgument("positivity_library: defined for O = 2");
    std::vector<Inequality> out;
    const int n = s.settings;
    auto entry = [&](int x, int y, const std::string& label) {
        Inequality ineq;
        ineq.scenario = s;
        ineq.label = label;
        ineq.bound = 1;
        ineq.a = Eigen::VectorXi::Zero(n);
        ineq.b = Eigen::VectorXi::Zero(n);
        ineq.ab = Eigen::MatrixXi::Zero(n, n);
        ineq.a(x - 1) = -1;
        ineq.b(y - 1) = -1;
        ineq.ab(x - 1, y - 1) = -1;
        return ineq;
    };
    out.push_back(entry(1, 1, "positivity-11"));
    if (n >= 2) {
        out.push_back(entry(1, 2, "positivity-12"));
        out.push_back(entry(2, 2, "positivity-22"));
    }
    return out;
}

std::vector<Inequality> classification_library(const Scenario& s) {
    std::vector<Inequality> lib = all_named_inequalities();
    if (s.outcomes == 2) {
        for (auto& p : positivity_library(s)) lib.push_back(std::move(p));
    }
    return lib;
}

const std::vector<Inequality>& sweep_inequalities() {
    static const std::vector<Inequality> sweep = [] {
        std::vector<Inequality> v;
        for (const char* name :
             {"genuine-lf-1", "i3322-m12", "brukner-alt", "semi-brukner-alt", "bell-non-lf"})
            v.push_back(*find_inequality(name));
        return v;
    }();
    return sweep;
}

} // namespace lfpoly
