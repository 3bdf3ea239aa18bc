#ifndef LFPOLY_INEQUALITY_LIBRARY_HPP
#define LFPOLY_INEQUALITY_LIBRARY_HPP

#include <optional>
#include <vector>

#include "lfpoly/inequality.hpp"

namespace lfpoly {

// Named inequalities for the (3,2) scenario. The first nine are the facet
// classes of the LF polytope; the rest are Bell facets and relabelings used
// by the sweep and the membership reports.
//
//   genuine-lf-1      bound 6   (not a Bell facet)
//   genuine-lf-2      bound 5   (not a Bell facet)
//   i3322-m12         bound 4   I3322, marginals on inputs 1 and 2
//   i3322-m23         bound 4   I3322, marginals on inputs 2 and 3
//   brukner           bound 2   CHSH on inputs {1,2} x {1,2}
//   semi-brukner      bound 2   CHSH on inputs {2,3} x {1,2}
//   positivity-11/-12/-22      wp(-,-|x,y) >= 0 written over correlators
//   bell-non-lf       bound 2   CHSH on inputs {2,3} x {2,3} (Bell facet,
//                               not an LF inequality)
//   brukner-alt       bound 2   CHSH on {1,2} x {1,3} (sweep form)
//   semi-brukner-alt  bound 2   CHSH on {1,3} x {2,3} (sweep form)

Inequality make_inequality(const Scenario& s, std::vector<int> a, std::vector<int> b,
                           std::vector<std::vector<int>> ab, long long bound,
                           const std::string& label);

/// The nine LF facet classes of the (3,2) scenario, in report order.
const std::vector<Inequality>& lf_facet_classes();

/// Everything the library knows, including non-LF Bell forms.
const std::vector<Inequality>& all_named_inequalities();

std::optional<Inequality> find_inequality(const std::string& label);

/// The positivity classes wp(+,+|x,y) >= 0 of an O = 2 scenario under the
/// setting-1-fixing relabeling group: representatives at (1,1), (1,2) and
/// (2,2). For N = 1 only the first exists.
std::vector<Inequality> positivity_library(const Scenario& s);

/// all_named_inequalities() plus the scenario's positivity classes; the
/// default reference set for classification.
std::vector<Inequality> classification_library(const Scenario& s);

/// The five sweep inequalities in display order: genuine-lf-1, i3322-m12,
/// brukner-alt, semi-brukner-alt, bell-non-lf.
const std::vector<Inequality>& sweep_inequalities();

} // namespace lfpoly

#endif
