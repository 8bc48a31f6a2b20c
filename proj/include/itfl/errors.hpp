#pragma once

#include <stdexcept>
#include <string>

namespace itfl {

struct FieldError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// |x| > (p-1)/2, the centered lift would be ambiguous
struct EncodingOverflow : FieldError {
    using FieldError::FieldError;
};

struct DegenerateUpdate : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ThresholdError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ProtocolError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace itfl
