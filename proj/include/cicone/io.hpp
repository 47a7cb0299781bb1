#pragma once

// Instance parsing (whitespace text with # comments, or JSON) and
// canonical JSON serialization of results. Canonical form: keys sorted,
// no floats, integers beyond 53 bits emitted as decimal strings.

#include "cicone/directsum.hpp"
#include "cicone/generators.hpp"
#include "cicone/gluing.hpp"
#include "cicone/toric.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace cicone {

using Json = nlohmann::json;

struct InstanceFile {
  std::string name; ///< empty when the input carries none
  GeneratorSet generators;
};

/// Text (one generator per line) or JSON, detected by the first byte.
/// `origin` labels the source in error messages.
InstanceFile parse_instance(std::istream& in, const std::string& origin = "<stream>");

InstanceFile parse_instance_file(const std::string& path);

Json json_of(const Int& v);
Json json_of(const IVec& v);
Json json_of(const GeneratorSet& A);
Json json_of(const TreePtr& tree);
Json json_of(const DirectSumResult& r);
Json json_of(const WitnessResult& w);
Json json_of(const Binomial& b);
Json json_of(const OracleReport& r);
Json json_of(const BoundReport& r);

/// Canonical rendering: sorted keys, two-space indent, trailing newline.
std::string canonical_dump(const Json& j);

/// Text rendering of a generator set, one row per line (parses back).
std::string text_of(const GeneratorSet& A);

} // namespace cicone
