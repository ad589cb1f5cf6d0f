#pragma once

#include <stdexcept>
#include <string>

namespace mor {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero in field arithmetic") {}
};
struct SingularMatrix : Error {
    SingularMatrix() : Error("matrix is singular") {}
};
struct ShapeError : Error {
    explicit ShapeError(const std::string& what) : Error("shape mismatch: " + what) {}
};
struct ParamsMismatch : Error {
    ParamsMismatch() : Error("group parameters do not match") {}
};
struct CapacityError : Error {
    explicit CapacityError(const std::string& what) : Error("capacity: " + what) {}
};
struct RelationViolation : Error {
    explicit RelationViolation(const std::string& what) : Error("relation violated: " + what) {}
};
struct SingularInducedMatrix : Error {
    SingularInducedMatrix() : Error("induced matrix is singular") {}
};
struct InconsistentLambda : Error {
    InconsistentLambda() : Error("central exponent differs between generator pairs") {}
};
struct NotSymplectic : Error {
    NotSymplectic() : Error("matrix does not preserve the alternating form") {}
};
struct FactoringIncomplete : Error {
    explicit FactoringIncomplete(const std::string& what)
        : Error("factoring incomplete: " + what) {}
};
struct NotInSubgroup : Error {
    NotInSubgroup() : Error("target is not in the subgroup generated by the base") {}
};
struct NoSolution : Error {
    explicit NoSolution(const std::string& what) : Error("no solution: " + what) {}
};
struct ValidationError : Error {
    explicit ValidationError(const std::string& what) : Error("validation: " + what) {}
};
struct DecodeError : Error {
    explicit DecodeError(const std::string& what) : Error("decode: " + what) {}
};

} // namespace mor
