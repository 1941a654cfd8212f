#pragma once

#include <iosfwd>
#include <string>

#include "cubforge/rule.hpp"

namespace cubforge {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Versioned JSON rule format. All numeric payloads are exact scalar strings
// ("p/q", "p/q + r/s*sqrt(D)"), so write/read round-trips bit-exactly.
// With `approx` set, a lossy "approx" block of decimal weights is added for
// human consumption; it is ignored on read.
std::string rule_to_json(const CubatureRule& rule, bool approx = false);
CubatureRule rule_from_json(const std::string& text);

void save_rule(const CubatureRule& rule, const std::string& path, bool approx = false);
CubatureRule load_rule(const std::string& path);

}  // namespace cubforge
