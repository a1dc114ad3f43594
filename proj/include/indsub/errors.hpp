#pragma once

#include <stdexcept>
#include <string>

namespace indsub {

// Caller broke a documented precondition (size cap, bad argument). CLI exit 2.
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A checked identity did not hold. Always a bug somewhere. CLI exit 3.
struct InvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

// Unparseable input file. CLI exit 65.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void require(bool ok, const std::string& what)
{
    if (!ok) throw PreconditionError(what);
}

inline void ensure(bool ok, const std::string& what)
{
    if (!ok) throw InvariantError(what);
}

} // namespace indsub
