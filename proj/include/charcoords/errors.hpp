#pragma once

#include <stdexcept>
#include <string>

namespace charcoords {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or out-of-contract input.
struct InputError : Error {
    using Error::Error;
};

struct NotTypePreserving : Error {
    int puncture; // 0-based
    explicit NotTypePreserving(int v)
        : Error("peripheral entry vanishes at v" + std::to_string(v + 1)), puncture(v) {}
};

struct InternalInconsistency : Error {
    using Error::Error;
};

struct InvalidStep : Error {
    using Error::Error;
};

struct NotClosed : Error {
    using Error::Error;
};

struct MaxStepsExceeded : Error {
    std::size_t limit;
    explicit MaxStepsExceeded(std::size_t n)
        : Error("reduction exceeded " + std::to_string(n) + " steps"), limit(n) {}
};

struct RetryLimitExceeded : Error {
    using Error::Error;
};

struct DegenerateOrbit : Error {
    using Error::Error;
};

struct OffDomain : Error {
    using Error::Error;
};

} // namespace charcoords
