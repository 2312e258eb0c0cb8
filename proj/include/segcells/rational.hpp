#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "segcells/errors.hpp"

namespace segcells {

// All coordinates and weights are exact rationals.  cpp_rational keeps values
// in canonical form: numerator/denominator reduced, denominator positive.
using Scalar = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline BigInt num(const Scalar& s) { return boost::multiprecision::numerator(s); }
inline BigInt den(const Scalar& s) { return boost::multiprecision::denominator(s); }

// Canonical text form: "7/3", "-7/3", or "4" for integers.
inline std::string format_scalar(const Scalar& s) {
    if (den(s) == 1) return num(s).str();
    return num(s).str() + "/" + den(s).str();
}

// Accepts optional sign, integer, or integer/integer.
inline Scalar parse_scalar(const std::string& text) {
    if (text.empty()) fail(ErrorCode::Parse, "empty number");
    size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) return Scalar(BigInt(text));
        BigInt n(text.substr(0, slash));
        BigInt d(text.substr(slash + 1));
        if (d == 0) fail(ErrorCode::Parse, "zero denominator in '" + text + "'");
        return Scalar(n, d);
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        fail(ErrorCode::Parse, "bad number '" + text + "'");
    }
}

inline int sign(const Scalar& s) { return s.sign(); }

inline Scalar abs_scalar(const Scalar& s) { return s < 0 ? Scalar(-s) : s; }

}  // namespace segcells
