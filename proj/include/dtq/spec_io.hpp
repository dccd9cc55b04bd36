#pragma once

#include "dtq/quiver.hpp"

#include <map>
#include <string>
#include <string_view>

namespace dtq {

/// Raised on malformed quiver spec files.
class SpecParseError : public Error {
public:
    using Error::Error;
};

/// Contents of a quiver spec file.
struct QuiverSpec {
    Quiver quiver;
    Superpotential potential;
    std::map<std::string, Stability> stabilities;

    /// Named stability; "zero" is always available and means mu = 0.
    Stability stability(const std::string& name) const;
};

/// Parses the JSON text form:
///   {"vertices": ["v0", "v1"],
///    "arrows": [["v0", "v1", "a"], ...],
///    "potential": [{"coeff": "1", "cycle": ["a", "b", "c"]}, ...],
///    "stabilities": {"name": {"c": {"v0": "1"}, "r": {"v0": "1"}}}}
/// Missing c entries default to 0 and missing r entries to 1.
QuiverSpec parse_quiver_spec(std::string_view text);
QuiverSpec load_quiver_spec(const std::string& path);
std::string dump_quiver_spec(const QuiverSpec& spec);

}  // namespace dtq
