#ifndef TWOCENTER_RECORD_HPP
#define TWOCENTER_RECORD_HPP

#include "twocenter/solution.hpp"

#include <string>
#include <vector>

namespace twocenter {

/// Serializes solution lists to a versioned JSON document:
///   { "schema_version": 1, "solutions": [ ... ] }
/// Exact rationals ride along as {"num": "...", "den": "..."} decimal strings
/// so nothing is lost to binary floats; doubles use shortest-round-trip
/// formatting. The document carries everything needed to re-evaluate Psi
/// without re-running the solver.
std::string solutionsToJson(const std::vector<ElementaryEigenfunction>& sols);

/// Inverse of solutionsToJson. Throws DomainError on malformed documents or
/// unsupported schema versions.
std::vector<ElementaryEigenfunction> solutionsFromJson(const std::string& text);

} // namespace twocenter

#endif
