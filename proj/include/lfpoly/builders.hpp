#ifndef LFPOLY_BUILDERS_HPP
#define LFPOLY_BUILDERS_HPP

#include <string>
#include <vector>

#include "lfpoly/dd.hpp"
#include "lfpoly/inequality.hpp"

namespace lfpoly {

enum class ModelKind { Lhv, Ns, Lf };

std::string to_string(ModelKind k);
ModelKind model_from_string(const std::string& s);

/// Per-party deterministic assignment setting -> outcome label.
struct DeterministicStrategy {
    std::vector<int> outcome_for_setting; // size N, values in 1..O
};

/// Generator data of one LF extreme point: the two friend records and the
/// index of an extreme no-signalling box on the remaining settings.
struct LFVertexSpec {
    int c = 0; // Alice-side record, outcome label
    int d = 0; // Bob-side record, outcome label
    int box = 0; // index into ns_vertices(N-1, O)
};

/// Deterministic-product vertices, as Collins-Gisin vectors. O^N strategies
/// per party.
VRepresentation lhv_vertices(const Scenario& s);

/// Extreme points of the no-signalling polytope: positivity of every table
/// entry in Collins-Gisin coordinates, converted by dd_vertices. The
/// single-setting case is the free product simplex and is enumerated
/// directly.
VRepresentation ns_vertices(const Scenario& s);

/// The no-signalling H-representation (table-entry positivity in CG
/// coordinates).
HRepresentation ns_hrep(const Scenario& s);

struct LFVertices {
    VRepresentation v;
    /// spec_of[i] lists every (c, d, box) generating vertex i (duplicates
    /// merge; each spec appears exactly once overall).
    std::vector<std::vector<LFVertexSpec>> spec_of;
};

/// Extreme points assembled from friend records plus an embedded
/// no-signalling box: deterministic (c, d) when both parties use setting 1,
/// record x box-marginal on the mixed cases, and the box's joint table
/// (settings shifted down by one) when neither does. Requires N >= 2.
LFVertices lf_vertices(const Scenario& s);

/// Exact behavior of one LF vertex spec.
BehaviorQ lf_vertex_behavior(const Scenario& s, const LFVertexSpec& spec,
                             const std::vector<BehaviorQ>& boxes);

/// Behavior of a deterministic strategy pair.
BehaviorQ deterministic_behavior(const Scenario& s, const DeterministicStrategy& alice,
                                 const DeterministicStrategy& bob);

/// The PR box on a (2,2) scenario: uniform marginals and perfect
/// correlations <A_x B_y> = +1 except <A_2 B_2> = -1.
BehaviorQ pr_box_behavior();

/// True when every entry of the reconstructed table is 0 or 1.
bool is_deterministic_point(const Scenario& s, const VectorXq& cg);

struct BuiltPolytope {
    Scenario scenario;
    ModelKind kind = ModelKind::Lhv;
    VRepresentation v;
    HRepresentation h;
};

/// Paired V- and H-representations, cross-validated: every vertex satisfies
/// every facet, every facet is tight on >= dimension affinely independent
/// vertices, and every listed vertex is extreme. Throws CapExceeded when
/// the vertex count would exceed vertex_cap.
BuiltPolytope build_polytope(ModelKind kind, const Scenario& s, int vertex_cap = 10000);

} // namespace lfpoly

#endif
