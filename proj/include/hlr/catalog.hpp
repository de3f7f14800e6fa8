// Built-in lattice catalog used by the CLI and the test corpus.

#pragma once

#include "hlr/exactnum.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hlr {

struct CatalogEntry {
    std::string name;
    RatMat gram;
    std::optional<Rat> expected_r_sq;
    std::optional<Rat> expected_ratio;  // (3 int) / (R^2 |P|)
    std::string note;
};

const std::vector<CatalogEntry>& catalog();

// nullptr when no entry has that name (case-sensitive).
const CatalogEntry* catalog_find(const std::string& name);

}  // namespace hlr
