#pragma once

#include <string>

#include "instrgen/domain.hpp"

namespace instrgen {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Canonical s-expression rendering of a model.  serialize_domain is a
// fixpoint over load_domain: serialize(load(serialize(d))) == serialize(d).
std::string serialize_domain(const DomainModel& d);

// Parses the format produced by serialize_domain.  `;` starts a comment
// that runs to end of line.  Throws ParseError on malformed input.
DomainModel load_domain(const std::string& text);

}  // namespace instrgen
