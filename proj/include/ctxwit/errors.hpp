#pragma once

#include <stdexcept>
#include <string>

namespace ctxwit {

/// Input outside its documented domain (ranges, PSD preconditions, ...).
class PreconditionError : public std::invalid_argument {
  public:
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

/// A checked construction (POVM, response function) failed one of its own
/// postconditions. Carries the name of the violated check in the message.
class ConsistencyError : public std::runtime_error {
  public:
    explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

/// Closed form and independent oracle disagree beyond tolerance.
class DiscrepancyError : public std::runtime_error {
  public:
    DiscrepancyError(const std::string& what, double closed_form, double oracle)
        : std::runtime_error(what), closed_form(closed_form), oracle(oracle) {}

    double closed_form;
    double oracle;
};

/// Confidence requested for an all-inconclusive behaviour (p_suc + p_err = 0).
class UndefinedConfidenceError : public std::runtime_error {
  public:
    explicit UndefinedConfidenceError(const std::string& what) : std::runtime_error(what) {}
};

/// The sweep found no feasible inconclusive element on its grid.
class InfeasibleSweepError : public std::runtime_error {
  public:
    explicit InfeasibleSweepError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ctxwit
