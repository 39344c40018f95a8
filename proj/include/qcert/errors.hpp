#pragma once

#include <stdexcept>
#include <string>

namespace qcert {

// Parameter outside its domain (negative rate, nonpositive service rate, ...).
struct InvalidParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Steady-state request with rho >= 1.
struct UnstableQueueError : std::domain_error {
    using std::domain_error::domain_error;
};

// Capacity split that does not leave a valid pair of sub-queues.
struct InvalidPartitionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidScenarioError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct UnknownPacketError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Scenario/sweep file problem, carrying the 1-based line it was found on.
// line == 0 means the problem is not tied to a single line.
struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_no, const std::string& msg)
        : std::runtime_error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + msg : msg),
          line(line_no) {}
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qcert
