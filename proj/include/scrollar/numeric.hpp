#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace scrollar {

// Exact arithmetic everywhere. No floating point is used in this library.
using Int = mpz_class;
using Rat = mpq_class;

/// Input that violates a documented precondition (bad partition string,
/// profile that fails its sum rule, unknown subgroup name, ...).
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two independent formulas for the same quantity disagreed. This is the
/// "stop the world" error class: it indicates a bug, never bad input.
struct ConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A request exceeded a hard resource cap (group closure degree, split-model
/// order, ...). Overridable where the interface says so.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Int factorial(long n) {
    Int r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (long i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);  // exact at every step
    }
    return r;
}

inline std::string to_string(const Int& x) { return x.get_str(); }

/// Rationals print as "p/q", integers as plain "p".
inline std::string to_string(const Rat& x) {
    Rat c = x;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline bool is_integer(const Rat& x) {
    Rat c = x;
    c.canonicalize();
    return c.get_den() == 1;
}

/// Exact integer value of a rational known to be integral.
inline Int to_integer(const Rat& x) {
    Rat c = x;
    c.canonicalize();
    if (c.get_den() != 1) throw ConsistencyError("expected integral value, got " + to_string(c));
    return c.get_num();
}

}  // namespace scrollar
