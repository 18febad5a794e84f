#pragma once

#include <string>
#include <vector>

#include "indep/funcset.hpp"
#include "indep/triple.hpp"

namespace indep::io {

/// Function-set file: `attrs: x,y,z`, optional `values: 0,1`, then one row
/// per line (compact digits when the alphabet is 0..9, comma-separated
/// integers otherwise). `#` starts a comment. Ragged, duplicate or
/// out-of-alphabet rows are parse errors with line numbers.
FunctionSet parse_function_set(const std::string& text);
std::string render_function_set(const FunctionSet& fs);

/// `X | Y | Z`, components space-separated attribute names, `-` empty.
Triple parse_triple(const AttributeSet& attrs, const std::string& text);

/// One triple per line; `#` comments and blank lines ignored.
std::vector<Triple> parse_triple_family(const AttributeSet& attrs, const std::string& text);

std::string read_file(const std::string& path);

}  // namespace indep::io
