#pragma once

#include <string>

#include <json.hpp>

namespace parabraid {

// A machine-readable table in both serializations.  Rendering is
// deterministic: identical parameters give identical bytes.
struct TableDocument {
    std::string csv;
    nlohmann::ordered_json json;
};

// Degree-blocked Gram matrix of the Fock-like submodule basis (upper
// triangle of each block).
TableDocument gram_table(int order, int modes, int cutoff);

// For one mode: the norm/ratio/lowering profile per degree.  Otherwise the
// squared norms of the orthogonalized basis and the matrix elements of the
// raising/lowering images in it.
TableDocument matelem_table(int order, int modes, int cutoff);

// Per-degree dimensions of the submodule and of the ambient tensor space.
TableDocument dims_table(int order, int modes, int cutoff);

}  // namespace parabraid
