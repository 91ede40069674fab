#pragma once

// gtest value printers for library types.

#include <ostream>

#include "sheffer/parser.hpp"

namespace sheffer {

inline void PrintTo(const Formula& f, std::ostream* os) { *os << render(f); }

inline void PrintTo(const Path& p, std::ostream* os) { *os << p.to_string(); }

}  // namespace sheffer
