#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kscroll {

/// Base for every computation error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnboundedPolytope : public Error {
public:
    UnboundedPolytope() : Error("polytope is unbounded") {}
};

class DegreeMismatch : public Error {
public:
    using Error::Error;
};

class InvalidTriple : public Error {
public:
    using Error::Error;
};

class NotBig : public Error {
public:
    using Error::Error;
};

class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position)
    {
    }
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class NonQuarticError : public Error {
public:
    using Error::Error;
};

class UnknownSingularity : public Error {
public:
    using Error::Error;
};

class NonPositiveEntry : public Error {
public:
    using Error::Error;
};

class PreconditionFailed : public Error {
public:
    using Error::Error;
};

class SchemaError : public Error {
public:
    SchemaError(const std::string& record, const std::string& field, const std::string& why)
        : Error("record '" + record + "', field '" + field + "': " + why), record_(record), field_(field)
    {
    }
    const std::string& record() const { return record_; }
    const std::string& field() const { return field_; }

private:
    std::string record_;
    std::string field_;
};

}  // namespace kscroll
