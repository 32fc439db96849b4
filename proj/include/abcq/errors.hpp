#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace abcq {

// Precondition violated on a mathematical input (zero where nonzero is
// required, composite where a prime is required, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Input data does not describe a valid object.  `index` names the offending
// entry when there is one.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what, std::optional<std::size_t> index = std::nullopt)
        : std::invalid_argument(what), index_(index) {}
    std::optional<std::size_t> index() const { return index_; }

private:
    std::optional<std::size_t> index_;
};

// A configured budget (memory, digits, factoring effort) would be exceeded.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A generator produced output failing its own exact postconditions.  Never
// expected; signals a bug rather than bad input.
class PostconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace abcq
