#pragma once

#include <ostream>
#include <string>

#include "scrolldiv/classes.hpp"
#include "scrolldiv/divisors.hpp"
#include "scrolldiv/errors.hpp"

namespace scrolldiv {

inline std::ostream& operator<<(std::ostream& os, const PicClass& c) {
    return os << "(" << c.a << ", " << c.b << ")";
}

inline std::ostream& operator<<(std::ostream& os, const SheafForm& s) {
    return os << "O(" << s.a << ", " << s.b << ")";
}

}  // namespace scrolldiv

namespace testutil {

/// Runs f and reports the DomainError code it throws, "<none>" if it
/// returns, "<other>" for any other exception type.
template <class F>
std::string error_code_of(F&& f) {
    try {
        f();
    } catch (const scrolldiv::DomainError& e) {
        return e.code();
    } catch (...) {
        return "<other>";
    }
    return "<none>";
}

}  // namespace testutil
