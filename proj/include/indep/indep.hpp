#pragma once

#include "indep/funcset.hpp"
#include "indep/triple.hpp"

namespace indep {

/// Set independence <X|Y|Z>_Sigma: any two members agreeing on Y can be
/// recombined (some member copies the first on X and the second on Z while
/// keeping the shared Y part). Empty X or Z: trivially true.
///
/// Grouped product-cardinality implementation, O(|Sigma|) per triple:
/// within every Y-class, |proj_{XZ}| must equal |proj_X| * |proj_Z|.
bool set_indep(const FunctionSet& sigma, const Triple& t);

/// Literal two-function definition (quadratic); the reference the fast
/// path is cross-checked against.
bool set_indep_definition(const FunctionSet& sigma, const Triple& t);

}  // namespace indep
