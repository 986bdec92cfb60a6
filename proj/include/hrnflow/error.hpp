#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hrnflow {

// Vector spaces are tracked by dimension only.
using Dim = std::uint64_t;

// Raised when an input violates a domain rule (bad HRN shape, capacity
// overflow in reject mode, malformed diagram, ...).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Scenario/report documents that do not match their schema. `path` is a
// JSON-pointer-like location of the offending field.
class SchemaError : public DomainError {
public:
    SchemaError(std::string path, const std::string& message)
        : DomainError(path + ": " + message), path_(std::move(path)) {}

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace hrnflow
