#pragma once

#include <gmpxx.h>

#include <string>

namespace crystals {

using Rational = mpq_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace crystals
