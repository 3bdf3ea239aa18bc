#ifndef LFPOLY_TESTS_FIXTURES_HPP
#define LFPOLY_TESTS_FIXTURES_HPP

#include "lfpoly/builders.hpp"

namespace fixtures {

/// Built polytopes are expensive (full facet enumeration plus
/// cross-validation), so suites share one copy.
inline const lfpoly::BuiltPolytope& lf32() {
    static const lfpoly::BuiltPolytope p =
        lfpoly::build_polytope(lfpoly::ModelKind::Lf, lfpoly::Scenario{3, 2});
    return p;
}

inline const lfpoly::BuiltPolytope& lhv32() {
    static const lfpoly::BuiltPolytope p =
        lfpoly::build_polytope(lfpoly::ModelKind::Lhv, lfpoly::Scenario{3, 2});
    return p;
}

inline const lfpoly::LFVertices& lf32_vertices() {
    static const lfpoly::LFVertices v = lfpoly::lf_vertices(lfpoly::Scenario{3, 2});
    return v;
}

} // namespace fixtures

#endif
