#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace invy {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Scenario validation failures.
struct NonFiniteParameter : Error {
    using Error::Error;
};
struct NegativeRate : Error {
    using Error::Error;
};
struct NonNormalizedInitialState : Error {
    using Error::Error;
};

// The cleared rational form still vanished at the requested point, i.e. the
// point sits on a true pole, not a removable one.
struct SingularEvaluation : Error {
    explicit SingularEvaluation(const std::string& what, std::size_t index = kNoIndex)
        : Error(what), grid_index(index) {}
    static constexpr std::size_t kNoIndex = static_cast<std::size_t>(-1);
    std::size_t grid_index;
};

struct NotResonant : Error {
    using Error::Error;
};
struct DegenerateRoots : Error {
    using Error::Error;
};
struct NotConverged : Error {
    using Error::Error;
};
struct StepTooLarge : Error {
    using Error::Error;
};

}  // namespace invy
