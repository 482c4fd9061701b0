#pragma once

#include <stdexcept>
#include <string>

namespace sgi {

/// Bad call arguments: wrong sizes, out-of-range parameters, mismatched grids.
class invalid_argument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Query point lies outside the closed domain box. No extrapolation is performed.
class out_of_domain : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A dataset does not cover every point of the grid it is paired with.
class incomplete_dataset : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A selected refinement point has no supplied value.
class incomplete_selection : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A point id that does not belong to the expected point set.
class unknown_point : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// File could not be read, written, or parsed.
class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace sgi
