#pragma once

#include <json.hpp>

#include "superholonomy/graded_phase.hpp"
#include "superholonomy/sectors.hpp"
#include "superholonomy/superlie.hpp"
#include "superholonomy/supermatrix.hpp"

namespace superholonomy {

using Json = nlohmann::ordered_json;

/// {"m","n","N","parity","entries":[{"row","col","monomial":[1-based],"value"}]}
Json to_json(const SuperMatrix& x);
/// Inverse of to_json; "parity" is optional and defaults to even.
SuperMatrix supermatrix_from_json(const Json& j);

/// Basis labels, parities, nonzero structure constants and eta entries.
Json to_json(const SuperAlgebra& alg);

Json to_json(const SectorReport& r);
/// Descriptor fields only; representatives are not serialized.
SectorReport sector_report_from_json(const Json& j);
Json to_json(const Osp22Report& r);
Json to_json(const JacobiReport& r);
Json to_json(const ClosureReport& r, const SuperAlgebra& alg);
Json to_json(const EfmReport& r);

}  // namespace superholonomy
