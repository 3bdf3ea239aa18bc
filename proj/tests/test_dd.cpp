#include <random>

#include "doctest.h"
#include "lfpoly/dd.hpp"
#include "lfpoly/membership.hpp"

using namespace lfpoly;

namespace {

VectorXq vec2(int a, int b) {
    VectorXq v(2);
    v << a, b;
    return v;
}

VRepresentation make_vrep(int dim, const std::vector<std::vector<int>>& pts) {
    VRepresentation v;
    v.dimension = dim;
    for (const auto& p : pts) {
        VectorXq q(dim);
        for (int i = 0; i < dim; ++i) q(i) = p[static_cast<size_t>(i)];
        v.vertices.push_back(q);
    }
    v.sort_and_dedupe();
    return v;
}

} // namespace

TEST_SUITE("dd") {

TEST_CASE("square facets") {
    const auto v = make_vrep(2, {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}});
    const auto h = dd_facets(v);
    CHECK(h.rows.size() == 4);
    // expect +-p1 <= 1, +-p2 <= 1
    for (const auto& row : h.rows) {
        CHECK(row.bound == 1);
        CHECK(row.coeffs.cwiseAbs().sum() == 1);
    }
    // each facet tight on >= 2 affinely independent vertices
    for (const auto& row : h.rows) {
        CHECK(tight_vertices(row, v).size() == 2);
        CHECK(is_facet_of(row, v));
    }
}

TEST_CASE("cross-polytope facets") {
    std::vector<std::vector<int>> pts;
    for (int i = 0; i < 3; ++i)
        for (int s : {1, -1}) {
            std::vector<int> p(3, 0);
            p[static_cast<size_t>(i)] = s;
            pts.push_back(p);
        }
    const auto v = make_vrep(3, pts);
    const auto h = dd_facets(v);
    CHECK(h.rows.size() == 8);
    for (const auto& row : h.rows) {
        CHECK(row.bound == 1);
        CHECK(row.coeffs.cwiseAbs().sum() == 3); // +-p1 +- p2 +- p3 <= 1
    }
}

TEST_CASE("cube vertices from facets") {
    HRepresentation h;
    h.dimension = 3;
    for (int i = 0; i < 3; ++i)
        for (int s : {1, -1}) {
            HRow row;
            row.coeffs = VectorXq::Zero(3);
            row.coeffs(i) = s;
            row.bound = 1;
            h.rows.push_back(row);
        }
    const auto v = dd_vertices(h);
    CHECK(v.vertices.size() == 8);
    for (const auto& p : v.vertices) CHECK(p.cwiseAbs().sum() == 3);
}

TEST_CASE("square round trip") {
    const auto v = make_vrep(2, {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}});
    CHECK(dd_vertices(dd_facets(v)) == v);
}

TEST_CASE("degenerate input reports the affine hull dimension") {
    const auto v = make_vrep(3, {{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {0, 1, 0}});
    try {
        dd_facets(v);
        FAIL("expected DegenerateInput");
    } catch (const DegenerateInput& e) {
        CHECK(e.affine_dimension == 2);
    }
}

TEST_CASE("unbounded and empty H-representations are rejected") {
    HRepresentation h;
    h.dimension = 2;
    HRow row;
    row.coeffs = vec2(1, 0);
    row.bound = 1;
    h.rows.push_back(row); // x <= 1 only: unbounded
    CHECK_THROWS_AS(dd_vertices(h), Unbounded);

    HRepresentation empty;
    empty.dimension = 1;
    HRow r1, r2;
    r1.coeffs = VectorXq::Zero(1);
    r1.coeffs(0) = 1;
    r1.bound = -2; // x <= -2
    r2.coeffs = VectorXq::Zero(1);
    r2.coeffs(0) = -1;
    r2.bound = 0; // x >= 0
    empty.rows = {r1, r2};
    CHECK_THROWS_AS(dd_vertices(empty), Empty);
}

TEST_CASE("remove_redundant drops scalar duplicates and dominated rows") {
    HRepresentation h;
    h.dimension = 2;
    auto push = [&](int c0, int c1, int b) {
        HRow row;
        row.coeffs = vec2(c0, c1);
        row.bound = b;
        h.rows.push_back(row);
    };
    push(1, 0, 1);   // p1 <= 1
    push(2, 0, 2);   // same half-space, scaled
    push(0, 1, 1);   // p2 <= 1
    push(1, 0, 2);   // dominated by p1 <= 1
    push(-1, 0, 1);  // keep the polyhedron bounded in x
    push(0, -1, 1);
    const auto r = remove_redundant(h);
    CHECK(r.rows.size() == 4);
    for (const auto& row : r.rows) CHECK(row.bound == 1);
}

TEST_CASE("round trip on random extreme point sets in dimensions 3 to 5") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> dim_pick(3, 5), coord(-4, 4), den(1, 3);
    int done = 0;
    while (done < 100) {
        const int d = dim_pick(rng);
        std::uniform_int_distribution<int> count_pick(d + 2, d + 6);
        const int count = count_pick(rng);
        VRepresentation raw;
        raw.dimension = d;
        for (int i = 0; i < count; ++i) {
            VectorXq p(d);
            for (int j = 0; j < d; ++j) p(j) = Rational(coord(rng), den(rng));
            raw.vertices.push_back(p);
        }
        raw.sort_and_dedupe();
        if (affine_rank(raw.vertices) < d + 1) continue;

        // keep only the extreme points so the round trip is an identity
        VRepresentation ext;
        ext.dimension = d;
        for (size_t i = 0; i < raw.vertices.size(); ++i) {
            VRepresentation others;
            others.dimension = d;
            for (size_t j = 0; j < raw.vertices.size(); ++j)
                if (j != i) others.vertices.push_back(raw.vertices[j]);
            const auto cert = lp_membership(raw.vertices[i], others);
            REQUIRE(verify_certificate(cert, raw.vertices[i], others));
            if (cert.verdict == LPCertificate::Verdict::Outside)
                ext.vertices.push_back(raw.vertices[i]);
        }
        if (static_cast<int>(ext.vertices.size()) < d + 1 || affine_rank(ext.vertices) < d + 1)
            continue;
        ext.sort_and_dedupe();

        const auto h = dd_facets(ext);
        CHECK(dd_vertices(h) == ext);
        for (const auto& row : h.rows) CHECK(is_facet_of(row, ext));
        ++done;
    }
}

} // TEST_SUITE
