#ifndef LFPOLY_ERRORS_HPP
#define LFPOLY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lfpoly {

/// Input point set does not affinely span the ambient space.
class DegenerateInput : public std::runtime_error {
public:
    DegenerateInput(const std::string& what, int affine_dim)
        : std::runtime_error(what), affine_dimension(affine_dim) {}
    int affine_dimension;
};

/// H-representation admits a recession direction.
class Unbounded : public std::runtime_error {
public:
    explicit Unbounded(const std::string& what) : std::runtime_error(what) {}
};

/// H-representation is infeasible.
class Empty : public std::runtime_error {
public:
    explicit Empty(const std::string& what) : std::runtime_error(what) {}
};

class DimensionMismatch : public std::runtime_error {
public:
    explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};

class ScenarioMismatch : public std::runtime_error {
public:
    explicit ScenarioMismatch(const std::string& what) : std::runtime_error(what) {}
};

class NotNoSignalling : public std::runtime_error {
public:
    explicit NotNoSignalling(const std::string& what) : std::runtime_error(what) {}
};

class NotHermitian : public std::runtime_error {
public:
    explicit NotHermitian(const std::string& what) : std::runtime_error(what) {}
};

class NotNormalized : public std::runtime_error {
public:
    explicit NotNormalized(const std::string& what) : std::runtime_error(what) {}
};

class NoViolation : public std::runtime_error {
public:
    explicit NoViolation(const std::string& what) : std::runtime_error(what) {}
};

/// Vertex enumeration would exceed the configured cap.
class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// A facet fell into no known symmetry class.
class UnmatchedFacet : public std::runtime_error {
public:
    explicit UnmatchedFacet(const std::string& what) : std::runtime_error(what) {}
};

class DegeneratePlane : public std::runtime_error {
public:
    explicit DegeneratePlane(const std::string& what) : std::runtime_error(what) {}
};

class InvalidArgument : public std::runtime_error {
public:
    explicit InvalidArgument(const std::string& what) : std::runtime_error(what) {}
};

} // namespace lfpoly

#endif
