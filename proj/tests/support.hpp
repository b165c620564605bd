#pragma once

#include <lbv/lbv.hpp>

#include <gtest/gtest.h>

#include <string>

namespace lbv::test {

inline Cochain C(const std::string& text) { return parseCochain(text); }
inline Scalar S(const std::string& text) { return parseScalar(text); }

inline Scalar alpha() { return Scalar::alpha(); }
inline Scalar hbar() { return Scalar::hbar(); }
inline Scalar cAlpha() { return Scalar::alpha() + Scalar::alpha(-1); }

inline ModelParams massless() { return ModelParams::massless(); }
inline ModelParams symbolic() { return ModelParams::symbolic(); }

}  // namespace lbv::test

// Prints values through their str() so failures are readable.
namespace lbv {
inline void PrintTo(const Scalar& s, std::ostream* os) { *os << s.str(); }
inline void PrintTo(const Cochain& c, std::ostream* os) { *os << c.str(); }
inline void PrintTo(const WeylElement& w, std::ostream* os) { *os << w.str(); }
inline void PrintTo(const LatticeFunction& f, std::ostream* os) { *os << f.str(); }
inline void PrintTo(const FockVector& v, std::ostream* os) { *os << v.str(); }
inline void PrintTo(const Interval& I, std::ostream* os) { *os << I.str(); }
}  // namespace lbv
