#ifndef LFPOLY_POLYTOPE_REP_HPP
#define LFPOLY_POLYTOPE_REP_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "lfpoly/errors.hpp"
#include "lfpoly/linalg.hpp"

namespace lfpoly {

/// One inequality row, coeffs . p <= bound.
struct HRow {
    VectorXq coeffs;
    Rational bound;

    /// Scales by the positive rational making (coeffs, bound) a primitive
    /// integer vector. Only positive scaling: the half-space is preserved.
    void normalize() {
        VectorXq joint(coeffs.size() + 1);
        joint.head(coeffs.size()) = coeffs;
        joint(coeffs.size()) = bound;
        make_primitive(joint);
        coeffs = joint.head(coeffs.size());
        bound = joint(coeffs.size());
    }

    bool operator==(const HRow& o) const {
        return bound == o.bound && coeffs == o.coeffs;
    }
};

inline bool lex_less(const HRow& a, const HRow& b) {
    if (a.coeffs != b.coeffs) return lex_less(a.coeffs, b.coeffs);
    return a.bound < b.bound;
}

/// Facet list. Rows are kept normalized and free of duplicates.
struct HRepresentation {
    int dimension = 0;
    std::vector<HRow> rows;

    void normalize_and_sort() {
        for (auto& r : rows) r.normalize();
        std::sort(rows.begin(), rows.end(),
                  [](const HRow& a, const HRow& b) { return lex_less(a, b); });
        rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    }

    bool operator==(const HRepresentation& o) const {
        return dimension == o.dimension && rows == o.rows;
    }
};

/// Vertex list. Duplicate-free; canonical order is lexicographic.
struct VRepresentation {
    int dimension = 0;
    std::vector<VectorXq> vertices;

    void sort_and_dedupe() {
        std::sort(vertices.begin(), vertices.end(),
                  [](const VectorXq& a, const VectorXq& b) { return lex_less(a, b); });
        vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    }

    bool operator==(const VRepresentation& o) const {
        return dimension == o.dimension && vertices == o.vertices;
    }
};

inline Rational dot(const VectorXq& a, const VectorXq& b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot: size mismatch");
    return a.dot(b);
}

/// coeffs . p - bound; positive means the row is violated at p.
inline Rational slack(const HRow& row, const VectorXq& p) {
    return dot(row.coeffs, p) - row.bound;
}

inline bool satisfies(const HRepresentation& h, const VectorXq& p) {
    for (const auto& row : h.rows)
        if (slack(row, p) > 0) return false;
    return true;
}

} // namespace lfpoly

#endif
