#pragma once

#include "groth/io.hpp"

#include <string>

namespace testutil {

inline groth::SchurExpansion S(const std::string& s) { return groth::parse_schur(s); }
inline groth::BivarPoly P(const std::string& s) { return groth::parse_poly(s); }

inline const groth::BivarPoly a = groth::BivarPoly::alpha();
inline const groth::BivarPoly b = groth::BivarPoly::beta();
inline const groth::BivarPoly gam = a + b;

}  // namespace testutil
