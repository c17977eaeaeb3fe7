#pragma once

#include <stdexcept>
#include <string>

namespace cyclochern {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error("dimension mismatch: " + what) {}
};

struct DegreeCapExceeded : Error {
    explicit DegreeCapExceeded(const std::string& what) : Error("degree cap exceeded: " + what) {}
};

struct NotInvertible : Error {
    explicit NotInvertible(const std::string& what) : Error("not invertible: " + what) {}
};

struct NotVerifiable : Error {
    explicit NotVerifiable(const std::string& what) : Error("not verifiable: " + what) {}
};

struct NotConfluent : Error {
    explicit NotConfluent(const std::string& what) : Error("rewrite system not confluent: " + what) {}
};

struct UnitNotBasisVector : Error {
    UnitNotBasisVector() : Error("algebra unit is not the first basis vector") {}
};

struct NormalizationMismatch : Error {
    explicit NormalizationMismatch(const std::string& what) : Error("2*pi*i power mismatch: " + what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

struct ValidationError : Error {
    explicit ValidationError(const std::string& what) : Error("validation error: " + what) {}
};

} // namespace cyclochern
