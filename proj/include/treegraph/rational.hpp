#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace treegraph {

// Exact scalars. mpq_class keeps values in canonical reduced form with a
// positive denominator, which is exactly the contract we need.
using Rat = mpq_class;
using Int = mpz_class;

inline std::string to_string(const Rat& r) { return r.get_str(); }
inline std::string to_string(const Int& z) { return z.get_str(); }

inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

// Errors that the CLI maps to distinct exit codes.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace treegraph
