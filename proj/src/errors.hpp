#pragma once

#include <stdexcept>
#include <string>

namespace hms {

// Error categories shared by the C++ core and the C API status codes.
enum class errc {
    invalid_argument,       // bad parameter, malformed input, range violation
    nonconvergent_domain,   // series evaluated outside its convergence domain
    tolerance_unreachable,  // term cap hit before the tail bound cleared tol
    degenerate,             // degenerate class / coincident points / rank drop
    ambiguous,              // numerical rank decision could not be made
    unsupported,            // operation not defined for the requested family
    internal,               // invariant violation inside the library
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace hms
