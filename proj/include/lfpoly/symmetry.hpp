#ifndef LFPOLY_SYMMETRY_HPP
#define LFPOLY_SYMMETRY_HPP

#include <vector>

#include "lfpoly/inequality.hpp"

namespace lfpoly {

/// One relabeling of a bipartite binary-outcome scenario: optional party
/// swap, per-party setting permutations that fix setting 1 (the friend
/// setting), and per-party per-setting outcome flips.
struct RelabelingOp {
    bool swap_parties = false;
    std::vector<int> setting_perm_a; // size N, image of setting x at index x-1 (1-based values)
    std::vector<int> setting_perm_b;
    std::vector<bool> flip_a; // outcome flip per setting
    std::vector<bool> flip_b;
};

/// The full group for the scenario; order 2 * ((N-1)!)^2 * (2^N)^2 for
/// O = 2 (e.g. 512 at N = 3).
std::vector<RelabelingOp> relabeling_group(const Scenario& s);

RelabelingOp compose(const RelabelingOp& first, const RelabelingOp& then);

/// Transformed inequality: coefficients permuted and sign-flipped, bound
/// unchanged.
Inequality apply(const RelabelingOp& op, const Inequality& ineq);

/// Lexicographically minimal coefficient tuple (A marginals, B marginals,
/// joints row-major) over the orbit.
Inequality canonical_form(const Inequality& ineq, const std::vector<RelabelingOp>& group);

struct FacetClass {
    Inequality representative; // canonical form
    std::string label;         // library name, or "unmatched-<k>"
    int multiplicity = 0;
    std::vector<int> member_rows; // indices into the classified H-representation
    bool matched = false;
};

/// Orbit partition of a facet list under the scenario's relabeling group,
/// labeled against a library of reference inequalities. With strict = true
/// an orbit matching no reference throws UnmatchedFacet (the classes are
/// still reported in the exception message).
std::vector<FacetClass> classify(const HRepresentation& facets, const Scenario& s,
                                 const std::vector<Inequality>& library, bool strict = true);

} // namespace lfpoly

#endif
