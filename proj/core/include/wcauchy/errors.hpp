#pragma once

#include <stdexcept>
#include <string>

namespace wcauchy {

/// Argument outside the region where an operation is defined.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A documented precondition on sizes, windows, or resolutions was violated.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Weight data that cannot define a positive weight.
class InvalidWeightError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Numerical procedure ran out of budget before meeting its tolerance.
/// Carries the last estimate and its error bracket.
class AccuracyError : public std::runtime_error {
public:
    AccuracyError(const std::string& what, double estimate, double bracket)
        : std::runtime_error(what), estimate_(estimate), bracket_(bracket) {}

    double estimate() const noexcept { return estimate_; }
    double bracket() const noexcept { return bracket_; }

private:
    double estimate_;
    double bracket_;
};

/// An integral that the caller requires to be finite was classified divergent.
class DivergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Newton inversion failed or left the closed unit disk.
class OutsideDomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Evaluation point too close to the set where a kernel is singular.
class StandoffError : public std::domain_error {
public:
    StandoffError(const std::string& what, double distance, double required)
        : std::domain_error(what), distance_(distance), required_(required) {}

    double distance() const noexcept { return distance_; }
    double required() const noexcept { return required_; }

private:
    double distance_;
    double required_;
};

/// Polynomial composition exceeded the configured degree; reports the
/// l2 mass of the coefficients that would have been dropped.
class TruncationError : public std::runtime_error {
public:
    TruncationError(const std::string& what, double discarded_mass)
        : std::runtime_error(what), discarded_mass_(discarded_mass) {}

    double discarded_mass() const noexcept { return discarded_mass_; }

private:
    double discarded_mass_;
};

}  // namespace wcauchy
