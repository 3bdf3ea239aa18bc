#ifndef LFPOLY_IO_HPP
#define LFPOLY_IO_HPP

#include <filesystem>
#include <optional>
#include <string>

#include "lfpoly/behavior.hpp"
#include "lfpoly/inequality.hpp"
#include "lfpoly/polytope_rep.hpp"
#include "lfpoly/symmetry.hpp"

namespace lfpoly {

// File formats:
//   vertices.jsonl   one {"vertex": ["p/q", ...]} object per line
//   facets.jsonl     one {"coeffs": ["n", ...], "bound": "n"} per line
//   inequality       {"label", "scenario": [N,O], "A", "B", "AB", "bound"}
//   behavior         {"scenario": [N,O]} plus "table" (nested
//                    [x][y][a][b], floats or "p/q" strings) or
//                    "collins_gisin" (flat list)
//   classes.json     [{"label", "canonical", "multiplicity", "member_rows"}]
//   manifest.json    scenario, kind, counts and content hashes

void write_vrep(const std::filesystem::path& path, const VRepresentation& v);
VRepresentation read_vrep(const std::filesystem::path& path);

void write_hrep(const std::filesystem::path& path, const HRepresentation& h);
HRepresentation read_hrep(const std::filesystem::path& path, int dimension = -1);

std::string inequality_to_json(const Inequality& ineq);
Inequality inequality_from_json(const std::string& json_text);

/// A behavior file loads either exactly (all entries rational strings) or
/// as doubles.
struct LoadedBehavior {
    std::optional<BehaviorQ> exact;
    std::optional<BehaviorD> approx;

    const Scenario& scenario() const {
        return exact ? exact->scenario() : approx->scenario();
    }
};
LoadedBehavior read_behavior(const std::filesystem::path& path);
void write_behavior(const std::filesystem::path& path, const BehaviorQ& b);
void write_behavior(const std::filesystem::path& path, const BehaviorD& b);

void write_classes(const std::filesystem::path& path, const std::vector<FacetClass>& classes);

/// SHA-256 of a file's bytes, hex-encoded.
std::string file_sha256(const std::filesystem::path& path);

} // namespace lfpoly

#endif
