#pragma once

#include <stdexcept>
#include <string>

namespace logcy {

// Base for all domain errors thrown by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroVectorError : Error {
    ZeroVectorError() : Error("primitive_part of the zero vector") {}
};

struct NotUnimodularError : Error {
    explicit NotUnimodularError(const std::string& what = "matrix inverse requires |det| = 1")
        : Error(what) {}
};

struct BadInputError : Error {
    explicit BadInputError(const std::string& what) : Error(what) {}
};

struct NegativeCoordsError : Error {
    explicit NegativeCoordsError(const std::string& what = "point coordinates must be non-negative")
        : Error(what) {}
};

struct NotLinearError : Error {
    explicit NotLinearError(const std::string& what = "function violates the linearity relation")
        : Error(what) {}
};

struct OriginHasNoOrbitError : Error {
    OriginHasNoOrbitError() : Error("the origin carries no Reeb orbit") {}
};

struct SlopeOnSpectrumError : Error {
    explicit SlopeOnSpectrumError(const std::string& what) : Error(what) {}
};

struct MalformedDiagramError : Error {
    explicit MalformedDiagramError(const std::string& what) : Error(what) {}
};

struct NotValidatedError : Error {
    explicit NotValidatedError(const std::string& what) : Error(what) {}
};

struct UnknownClassNameError : Error {
    explicit UnknownClassNameError(const std::string& name)
        : Error("unknown extra class: " + name) {}
};

struct UnsupportedBoundaryLengthError : Error {
    explicit UnsupportedBoundaryLengthError(const std::string& what) : Error(what) {}
};

}  // namespace logcy
