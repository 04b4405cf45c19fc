// errors.hpp — Exception types shared by all modules

#pragma once

#include <stdexcept>
#include <string>

namespace fsb {

// Base class; kind() is the stable, machine-readable category printed by the CLI.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& message) : Error("config", message) {}
};

class IntegrationError : public Error {
public:
    IntegrationError(const std::string& message, std::size_t step)
        : Error("integration", message), step_(step) {}

    std::size_t step() const noexcept { return step_; }

private:
    std::size_t step_;
};

class InvariantError : public Error {
public:
    explicit InvariantError(const std::string& message) : Error("invariant", message) {}
};

class DomainError : public Error {
public:
    explicit DomainError(const std::string& message) : Error("domain", message) {}
};

class NoRelaxationError : public Error {
public:
    explicit NoRelaxationError(const std::string& message) : Error("no-relaxation", message) {}
};

// Wraps a module error with the parameter point it was raised at; keeps the kind.
class PointError : public Error {
public:
    PointError(const Error& cause, const std::string& where)
        : Error(cause.kind(), std::string(cause.what()) + " at " + where) {}
};

} // namespace fsb
