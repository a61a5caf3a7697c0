#pragma once

// Space files and builtin space names. Also the text form of chains.
//
// Space file (JSON):
//   {"geometry": "simplicial" | "cubical",
//    "cells": [["v"], ["a", "b"], ["S"]],
//    "faces": {"a": [{"target": "v", "degeneracies": []}, ...], ...}}
// or the shorthand {"facets": [[0,1,2], [0,2,3], ...]}.
// A face target is a cell name, or an index into the target degree.

#include <string>

#include "steenrod/complexes.hpp"

namespace steenrod {

/// Throws ValidationError on malformed input or failed identities.
Space parse_space_json(const std::string& text);

/// `boundary-simplex:n`, `simplex:n`, `rp2`, `bc:p:N`, `torus2`, `klein2`.
Space builtin_space(const std::string& name);

/// Linear combinations such as `[0,1,2]`, `2*[0,1]-[1,2]`, `[01][0]+[1][01]`.
SimplexChain parse_simplex_chain(const std::string& text, Ring ring = Ring::integers());
CubeChain parse_cube_chain(const std::string& text, Ring ring = Ring::integers());

/// Persists the surjection memo table under `dir` in a versioned binary
/// file. Load ignores a missing or foreign file; both return entry counts.
std::size_t psi_cache_load(const std::string& dir);
std::size_t psi_cache_save(const std::string& dir);

}  // namespace steenrod
