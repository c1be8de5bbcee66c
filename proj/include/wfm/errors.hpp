#pragma once

#include <stdexcept>
#include <string>

namespace wfm {

/// Malformed or inadmissible user input: weights outside (0,1], bad rational
/// syntax, out-of-range indices, inadmissible orders.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A configured resource cap would be exceeded.  The computation is refused
/// loudly instead of hanging; callers may raise the cap and retry.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// Hard limits for the exponential corners of the toolkit.  Defaults are
/// sized for desk-scale instances; every limit is adjustable per call site.
struct Caps {
    int max_vars = 40;         // polynomial ring width (h variables + divisor variables)
    int max_degree = 12;       // top grading n*m of a Chow computation
    int max_enumeration = 20;  // building-set size allowed in nest enumeration
};

} // namespace wfm
