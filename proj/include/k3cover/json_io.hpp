#pragma once

#include <json.hpp>

#include "k3cover/covers.hpp"
#include "k3cover/evensets.hpp"
#include "k3cover/k3lattices.hpp"
#include "k3cover/lattice.hpp"

namespace k3cover {

using Json = nlohmann::ordered_json;

// Numbers that fit in int64 are emitted as numbers, larger ones as strings.
Json to_json(const Integer& v);
Json to_json(const Rational& q);
Json to_json(const IntMatrix& m);

// {"name", "labels", "gram", "glue"}: root Gram and glue in root coordinates.
Json lattice_to_json(const Lattice& l);
// Builds the root lattice and absorbs the glue. Throws InvalidInputError on
// malformed documents.
Lattice lattice_from_json(const Json& j);

// Full derived data: Z-basis Gram, det, signature, discriminant group, ...
Json lattice_info_json(const Lattice& l);

Json code_to_json(const BinaryCode& c);
BinaryCode code_from_json(const Json& j);

IntMatrix matrix_from_json(const Json& j);

Json report_to_json(const CoverReport& r);
Json classification_to_json(const Classification& c);
Json candidates_to_json(const CandidateList& c);

}  // namespace k3cover
