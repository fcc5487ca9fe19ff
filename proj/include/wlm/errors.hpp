#pragma once

#include <stdexcept>
#include <string>

namespace wlm {

// A configured size/budget guard was exceeded. Carries the guard name, the
// measured value and the configured bound so callers can report all three.
class GuardError : public std::runtime_error {
public:
    GuardError(std::string guard, std::string measured, std::string bound)
        : std::runtime_error("guard '" + guard + "' exceeded: measured " + measured +
                             ", bound " + bound),
          guard_(std::move(guard)), measured_(std::move(measured)), bound_(std::move(bound)) {}

    const std::string& guard() const { return guard_; }
    const std::string& measured() const { return measured_; }
    const std::string& bound() const { return bound_; }

private:
    std::string guard_, measured_, bound_;
};

// Malformed graph document or violated construction invariant.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Two tuples with the same stable color produced different partial
// homomorphism counts. That breaks the per-color well-definedness the eta
// tables rest on, so it is a bug trap rather than a user error.
class WellDefinednessError : public std::logic_error {
public:
    explicit WellDefinednessError(const std::string& what) : std::logic_error(what) {}
};

} // namespace wlm
