#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tailfit {

/// Base class for every error thrown by this library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Distribution parameters or function arguments outside their domain.
class parameter_error : public error {
public:
    using error::error;
};

/// Input data breaks a structural rule; index() points at the offender.
class validation_error : public error {
public:
    validation_error(const std::string& what, std::size_t index)
        : error(what), index_(index) {}

    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

class empty_input_error : public error {
public:
    using error::error;
};

/// Too few distinct values to fit anything.
class degenerate_input_error : public error {
public:
    using error::error;
};

/// The regression ran but produced no usable slope.
class degenerate_fit_error : public error {
public:
    using error::error;
};

/// Zero log-spread makes the likelihood estimate blow up.
class divergent_estimate_error : public error {
public:
    using error::error;
};

/// An aggregate query matched no rows.
class empty_selection_error : public error {
public:
    using error::error;
};

/// More than half of the bootstrap replicates failed.
class bootstrap_failure_error : public error {
public:
    using error::error;
};

}  // namespace tailfit
