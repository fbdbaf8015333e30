#pragma once

#include <stdexcept>
#include <string>

namespace ewlnash {

// A domain value failed its construction invariant. `field` names the
// offending input so front ends can point at it (CLI exit code 3).
class ValidationError : public std::runtime_error {
public:
    ValidationError(std::string field, const std::string& what)
        : std::runtime_error(what), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

class NotUnit : public ValidationError {
public:
    NotUnit(std::string field, const std::string& what) : ValidationError(std::move(field), what) {}
};

class NotOrthogonal : public ValidationError {
public:
    NotOrthogonal(std::string field, const std::string& what)
        : ValidationError(std::move(field), what) {}
};

class NoConvergence : public std::runtime_error {
public:
    explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};

class BasisExpansionFailed : public std::runtime_error {
public:
    explicit BasisExpansionFailed(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ewlnash
