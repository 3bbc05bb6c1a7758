#pragma once

#include <string>
#include <vector>

#include "wcauchy/conformal.hpp"
#include "wcauchy/weights.hpp"

namespace wcauchy::parse {

/// `1.5`, `-2i`, `0.25-1e-3i`, `i`.
cplx complex_number(const std::string& text);

/// `const` | `pow:<alpha>` | `expexp` | `table:<path>`.
WeightSpec weight(const std::string& spec);

/// CSV with header `t,omega`.
WeightSpec weight_table(const std::string& path);

/// `identity` | `poly:c1,c2,...` | `scale:lambda` | `moebius:a,lambda`.
/// The map is checked for univalence; failures throw PreconditionError
/// carrying the witness.
ConformalMap map(const std::string& spec);

/// Inline JSON (`[[re,im],...]`) or a path to a file holding it.
TaylorSeries series(const std::string& inline_or_path);

}  // namespace wcauchy::parse
