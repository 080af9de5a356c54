#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace richardson {

/// Exact arbitrary-precision integer. All linear algebra in this library is
/// done over the rationals via fraction-free elimination on these.
using Int = boost::multiprecision::cpp_int;

/// The two classical families handled by this library.
enum class Kind { orthogonal, symplectic };

inline const char* kind_name(Kind k) {
    return k == Kind::orthogonal ? "orthogonal" : "symplectic";
}

/// Accepts "orth", "orthogonal", "symp", "symplectic".
Kind parse_kind(const std::string& s);

/// Thrown when a documented precondition is violated by the caller.
struct contract_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Thrown when an internal consistency check fails; indicates a bug in the
/// construction itself, never bad input.
struct construction_error : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace richardson
