#include "lfpoly/symmetry.hpp"

#include <algorithm>
#include <map>

namespace lfpoly {

namespace {

// Every op acts on the correlator coefficient vector
//   (a_1..a_N, b_1..b_N, c_11..c_NN row-major)
// as a signed permutation; composing ops is then just composing arrays.
struct SignedPerm {
    std::vector<int> target;
    std::vector<int> sign;
};

int dim_of(int n) { return 2 * n + n * n; }

SignedPerm to_signed_perm(const RelabelingOp& op, int n) {
    SignedPerm p;
    p.target.resize(static_cast<size_t>(dim_of(n)));
    p.sign.resize(static_cast<size_t>(dim_of(n)));
    auto a_slot = [&](int x) { return x - 1; };
    auto b_slot = [&](int y) { return n + y - 1; };
    auto ab_slot = [&](int x, int y) { return 2 * n + (x - 1) * n + (y - 1); };
    auto sa = [&](int x) { return op.flip_a[static_cast<size_t>(x - 1)] ? -1 : 1; };
    auto sb = [&](int y) { return op.flip_b[static_cast<size_t>(y - 1)] ? -1 : 1; };
    auto pa = [&](int x) { return op.setting_perm_a[static_cast<size_t>(x - 1)]; };
    auto pb = [&](int y) { return op.setting_perm_b[static_cast<size_t>(y - 1)]; };

    for (int x = 1; x <= n; ++x) {
        const int u = pa(x);
        p.target[static_cast<size_t>(a_slot(x))] = op.swap_parties ? b_slot(u) : a_slot(u);
        p.sign[static_cast<size_t>(a_slot(x))] = sa(x);
    }
    for (int y = 1; y <= n; ++y) {
        const int v = pb(y);
        p.target[static_cast<size_t>(b_slot(y))] = op.swap_parties ? a_slot(v) : b_slot(v);
        p.sign[static_cast<size_t>(b_slot(y))] = sb(y);
    }
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y) {
            const int u = pa(x), v = pb(y);
            p.target[static_cast<size_t>(ab_slot(x, y))] =
                op.swap_parties ? ab_slot(v, u) : ab_slot(u, v);
            p.sign[static_cast<size_t>(ab_slot(x, y))] = sa(x) * sb(y);
        }
    return p;
}

std::vector<long long> coefficient_tuple(const Inequality& ineq) {
    const int n = ineq.scenario.settings;
    std::vector<long long> t(static_cast<size_t>(dim_of(n)));
    for (int x = 0; x < n; ++x) t[static_cast<size_t>(x)] = ineq.a(x);
    for (int y = 0; y < n; ++y) t[static_cast<size_t>(n + y)] = ineq.b(y);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) t[static_cast<size_t>(2 * n + x * n + y)] = ineq.ab(x, y);
    return t;
}

Inequality from_tuple(const std::vector<long long>& t, const Scenario& s, long long bound,
                      const std::string& label) {
    Inequality out;
    out.scenario = s;
    out.bound = bound;
    out.label = label;
    const int n = s.settings;
    out.a.resize(n);
    out.b.resize(n);
    out.ab.resize(n, n);
    for (int x = 0; x < n; ++x) out.a(x) = static_cast<int>(t[static_cast<size_t>(x)]);
    for (int y = 0; y < n; ++y) out.b(y) = static_cast<int>(t[static_cast<size_t>(n + y)]);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            out.ab(x, y) = static_cast<int>(t[static_cast<size_t>(2 * n + x * n + y)]);
    return out;
}

std::vector<long long> apply_tuple(const SignedPerm& p, const std::vector<long long>& t) {
    std::vector<long long> out(t.size());
    for (size_t i = 0; i < t.size(); ++i)
        out[static_cast<size_t>(p.target[i])] = p.sign[i] * t[i];
    return out;
}

void permutations_fixing_one(int n, std::vector<std::vector<int>>& out) {
    std::vector<int> rest;
    for (int x = 2; x <= n; ++x) rest.push_back(x);
    std::sort(rest.begin(), rest.end());
    do {
        std::vector<int> perm(static_cast<size_t>(n));
        perm[0] = 1;
        for (int i = 0; i < n - 1; ++i) perm[static_cast<size_t>(i + 1)] = rest[static_cast<size_t>(i)];
        out.push_back(perm);
    } while (std::next_permutation(rest.begin(), rest.end()));
}

} // namespace

std::vector<RelabelingOp> relabeling_group(const Scenario& s) {
    require_valid(s);
    if (s.outcomes != 2)
        throw InvalidArgument("relabeling_group: outcome flips are implemented for O = 2");
    const int n = s.settings;
    std::vector<std::vector<int>> perms;
    permutations_fixing_one(n, perms);

    std::vector<RelabelingOp> group;
    const int flip_count = 1 << n;
    for (int swap = 0; swap < 2; ++swap)
        for (const auto& pa : perms)
            for (const auto& pb : perms)
                for (int fa = 0; fa < flip_count; ++fa)
                    for (int fb = 0; fb < flip_count; ++fb) {
                        RelabelingOp op;
                        op.swap_parties = swap == 1;
                        op.setting_perm_a = pa;
                        op.setting_perm_b = pb;
                        op.flip_a.resize(static_cast<size_t>(n));
                        op.flip_b.resize(static_cast<size_t>(n));
                        for (int x = 0; x < n; ++x) {
                            op.flip_a[static_cast<size_t>(x)] = (fa >> x) & 1;
                            op.flip_b[static_cast<size_t>(x)] = (fb >> x) & 1;
                        }
                        group.push_back(std::move(op));
                    }
    return group;
}

RelabelingOp compose(const RelabelingOp& first, const RelabelingOp& then) {
    const int n = static_cast<int>(first.setting_perm_a.size());
    RelabelingOp out;
    out.swap_parties = first.swap_parties != then.swap_parties;
    out.setting_perm_a.resize(static_cast<size_t>(n));
    out.setting_perm_b.resize(static_cast<size_t>(n));
    out.flip_a.resize(static_cast<size_t>(n));
    out.flip_b.resize(static_cast<size_t>(n));
    // If `first` swaps parties, the A-side data of `then` acts on what was
    // the B side, and vice versa.
    const auto& then_pa = first.swap_parties ? then.setting_perm_b : then.setting_perm_a;
    const auto& then_pb = first.swap_parties ? then.setting_perm_a : then.setting_perm_b;
    const auto& then_fa = first.swap_parties ? then.flip_b : then.flip_a;
    const auto& then_fb = first.swap_parties ? then.flip_a : then.flip_b;
    for (int x = 1; x <= n; ++x) {
        const int mid_a = first.setting_perm_a[static_cast<size_t>(x - 1)];
        out.setting_perm_a[static_cast<size_t>(x - 1)] = then_pa[static_cast<size_t>(mid_a - 1)];
        out.flip_a[static_cast<size_t>(x - 1)] =
            first.flip_a[static_cast<size_t>(x - 1)] != then_fa[static_cast<size_t>(mid_a - 1)];
        const int mid_b = first.setting_perm_b[static_cast<size_t>(x - 1)];
        out.setting_perm_b[static_cast<size_t>(x - 1)] = then_pb[static_cast<size_t>(mid_b - 1)];
        out.flip_b[static_cast<size_t>(x - 1)] =
            first.flip_b[static_cast<size_t>(x - 1)] != then_fb[static_cast<size_t>(mid_b - 1)];
    }
    return out;
}

Inequality apply(const RelabelingOp& op, const Inequality& ineq) {
    const int n = ineq.scenario.settings;
    if (static_cast<int>(op.setting_perm_a.size()) != n)
        throw ScenarioMismatch("apply: relabeling op and inequality scenario differ");
    const SignedPerm p = to_signed_perm(op, n);
    const auto t = apply_tuple(p, coefficient_tuple(ineq));
    return from_tuple(t, ineq.scenario, ineq.bound, ineq.label);
}

Inequality canonical_form(const Inequality& ineq, const std::vector<RelabelingOp>& group) {
    const int n = ineq.scenario.settings;
    const auto base = coefficient_tuple(ineq);
    std::vector<long long> best = base;
    bool first = true;
    for (const auto& op : group) {
        const auto t = apply_tuple(to_signed_perm(op, n), base);
        if (first || t < best) {
            best = t;
            first = false;
        }
    }
    return from_tuple(best, ineq.scenario, ineq.bound, ineq.label);
}

std::vector<FacetClass> classify(const HRepresentation& facets, const Scenario& s,
                                 const std::vector<Inequality>& library, bool strict) {
    const auto group = relabeling_group(s);

    // canonical key -> member facet rows
    std::map<std::pair<std::vector<long long>, long long>, std::vector<int>> orbits;
    for (int i = 0; i < static_cast<int>(facets.rows.size()); ++i) {
        const auto ineq = cg_row_to_inequality(facets.rows[static_cast<size_t>(i)], s);
        const auto canon = canonical_form(ineq, group);
        orbits[{coefficient_tuple(canon), canon.bound}].push_back(i);
    }

    // canonical keys of the library, in library order
    std::vector<std::pair<std::pair<std::vector<long long>, long long>, std::string>> refs;
    for (const auto& entry : library) {
        if (!(entry.scenario == s)) continue;
        const auto canon = canonical_form(entry, group);
        refs.push_back({{coefficient_tuple(canon), canon.bound}, entry.label});
    }

    std::vector<FacetClass> out;
    std::vector<char> used(orbits.size(), 0);
    for (const auto& [key, label] : refs) {
        const auto it = orbits.find(key);
        if (it == orbits.end()) continue;
        FacetClass cls;
        cls.representative = from_tuple(key.first, s, key.second, label);
        cls.label = label;
        cls.matched = true;
        cls.member_rows = it->second;
        cls.multiplicity = static_cast<int>(it->second.size());
        out.push_back(std::move(cls));
        orbits.erase(it);
    }
    int unmatched = 0;
    for (const auto& [key, members] : orbits) {
        FacetClass cls;
        cls.label = "unmatched-" + std::to_string(++unmatched);
        cls.representative = from_tuple(key.first, s, key.second, cls.label);
        cls.matched = false;
        cls.member_rows = members;
        cls.multiplicity = static_cast<int>(members.size());
        out.push_back(std::move(cls));
    }
    if (strict && unmatched > 0) {
        std::string msg = "classify: " + std::to_string(unmatched) +
                          " orbit(s) match no library inequality:";
        for (const auto& cls : out) {
            if (cls.matched) continue;
            msg += " [x" + std::to_string(cls.multiplicity) +
                   ", bound " + std::to_string(cls.representative.bound) + "]";
        }
        throw UnmatchedFacet(msg);
    }
    return out;
}

} // namespace lfpoly
