#pragma once

#include <stdexcept>
#include <string>

namespace wfr {

/// Invalid tunable constants (alpha, shift, word width, chain length, ...).
class config_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Empty or otherwise unusable pattern.
class invalid_pattern : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two algorithms disagreed on the occurrences of the same pattern.
class correctness_violation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace wfr
