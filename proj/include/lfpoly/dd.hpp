#ifndef LFPOLY_DD_HPP
#define LFPOLY_DD_HPP

#include <vector>

#include "lfpoly/polytope_rep.hpp"

namespace lfpoly {

/// Extreme rays of the pointed cone { z : A z >= 0 }, by the double
/// description method. Requires rank(A) = cols; throws InvalidArgument
/// otherwise. Rays come back as primitive integer vectors.
std::vector<VectorXq> extreme_rays(const MatrixXq& A);

/// Facets of conv(v). The input must affinely span its ambient space;
/// otherwise DegenerateInput carries the affine hull's dimension. Input
/// points that are not extreme are tolerated and simply do not appear as
/// tight-set witnesses.
HRepresentation dd_facets(const VRepresentation& v);

/// Vertices of { p : rows.p <= bounds }. Throws Empty when infeasible and
/// Unbounded when a recession direction exists.
VRepresentation dd_vertices(const HRepresentation& h);

/// Irredundant subsystem of h: exact duplicates go first, then every row
/// that the remaining system already implies (checked by LP). For a
/// full-dimensional feasible system the survivors are facet-defining.
HRepresentation remove_redundant(const HRepresentation& h);

/// Rows of h that are facet-defining for conv(v): valid on every vertex
/// and tight on at least dimension-many affinely independent ones.
HRepresentation reduce_against(const HRepresentation& h, const VRepresentation& v);

/// Tight vertices of one row (indices into v.vertices).
std::vector<int> tight_vertices(const HRow& row, const VRepresentation& v);

/// True when the row is valid on conv(v) and its tight set spans a
/// (dimension-1)-dimensional affine subspace.
bool is_facet_of(const HRow& row, const VRepresentation& v);

} // namespace lfpoly

#endif
