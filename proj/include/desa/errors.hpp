#pragma once

#include <stdexcept>
#include <string>

namespace desa {

/// Broad error classes used by the CLI to pick exit codes: everything except
/// kInternal is a problem with the input (exit 1), kInternal is a bug (exit 2).
enum class ErrorKind {
    kParse,
    kAlphabetNesting,
    kControllability,
    kObservability,
    kDamageOverlap,
    kDamageIncomplete,
    kNotAttackable,
    kObservationDesync,
    kObservationNotFeasible,
    kStringNotInClosedLoop,
    kEnumerationGuard,
    kUnknownState,
    kInternal,
};

std::string to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

class ParseError : public Error {
public:
    ParseError(std::string file, int line, const std::string& message)
        : Error(ErrorKind::kParse,
                (file.empty() ? "" : file + ":") + std::to_string(line) + ": " + message),
          file_(std::move(file)), line_(line) {}

    const std::string& file() const { return file_; }
    int line() const { return line_; }

private:
    std::string file_;
    int line_;
};

class AlphabetNestingViolation : public Error {
public:
    explicit AlphabetNestingViolation(const std::string& message)
        : Error(ErrorKind::kAlphabetNesting, message) {}
};

class ControllabilityViolation : public Error {
public:
    ControllabilityViolation(std::string state, std::string event)
        : Error(ErrorKind::kControllability,
                "uncontrollable event '" + event + "' is undefined at supervisor state '" +
                    state + "'"),
          state_(std::move(state)), event_(std::move(event)) {}

    const std::string& state() const { return state_; }
    const std::string& event() const { return event_; }

private:
    std::string state_;
    std::string event_;
};

class ObservabilityViolation : public Error {
public:
    ObservabilityViolation(std::string state, std::string event, const std::string& why)
        : Error(ErrorKind::kObservability,
                "unobservable event '" + event + "' at supervisor state '" + state + "': " + why),
          state_(std::move(state)), event_(std::move(event)) {}

    const std::string& state() const { return state_; }
    const std::string& event() const { return event_; }

private:
    std::string state_;
    std::string event_;
};

class DamageOverlapsClosedLoop : public Error {
public:
    DamageOverlapsClosedLoop(std::string witness)
        : Error(ErrorKind::kDamageOverlap,
                "damage language intersects the closed-loop behavior, witness: " +
                    (witness.empty() ? std::string("(empty string)") : witness)),
          witness_(std::move(witness)) {}

    const std::string& witness() const { return witness_; }

private:
    std::string witness_;
};

class NotAttackable : public Error {
public:
    NotAttackable() : Error(ErrorKind::kNotAttackable, "the instance is not attackable") {}
};

class ObservationDesync : public Error {
public:
    explicit ObservationDesync(const std::string& message)
        : Error(ErrorKind::kObservationDesync, message) {}
};

class ObservationNotFeasible : public Error {
public:
    explicit ObservationNotFeasible(const std::string& message)
        : Error(ErrorKind::kObservationNotFeasible, message) {}
};

class StringNotInClosedLoop : public Error {
public:
    explicit StringNotInClosedLoop(const std::string& message)
        : Error(ErrorKind::kStringNotInClosedLoop, message) {}
};

class EnumerationGuard : public Error {
public:
    EnumerationGuard(int requested, int guard)
        : Error(ErrorKind::kEnumerationGuard,
                "enumeration length " + std::to_string(requested) +
                    " exceeds the guard of " + std::to_string(guard)) {}
};

class UnknownState : public Error {
public:
    explicit UnknownState(const std::string& state)
        : Error(ErrorKind::kUnknownState, "unknown state '" + state + "'") {}
};

}  // namespace desa
