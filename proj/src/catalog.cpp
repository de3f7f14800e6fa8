#include "hlr/catalog.hpp"

namespace hlr {

namespace {

RatMat mat(int n, std::initializer_list<int> entries) {
    RatMat m(n, n);
    auto it = entries.begin();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = Rat(*it++);
    return m;
}

RatMat a2_gram() {
    RatMat m(2, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = Rat(1, 2);
    m.at(1, 0) = Rat(1, 2);
    m.at(1, 1) = 1;
    return m;
}

std::vector<CatalogEntry> build() {
    std::vector<CatalogEntry> c;
    for (int n = 1; n <= 5; ++n) {
        CatalogEntry e;
        e.name = "Z" + std::to_string(n);
        e.gram = RatMat::identity(n);
        e.expected_r_sq = Rat(n, 4);
        e.expected_ratio = 1;
        e.note = "integer lattice; cubical cell, equality case";
        c.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "A2";
        e.gram = a2_gram();
        e.expected_r_sq = Rat(1, 3);
        e.expected_ratio = Rat(5, 4);
        e.note = "hexagonal lattice (basis vectors at 60 degrees, minimum 1); "
                 "hexagonal cell, ratio 5/4 from the 6-triangle fan";
        c.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "D3";
        e.gram = mat(3, {2, 1, 1, 1, 2, 1, 1, 1, 2});
        e.expected_r_sq = 1;
        e.expected_ratio = Rat(9, 8);
        e.note = "face-centered cubic (= A3 = D3), Gram of three fcc nearest-neighbor "
                 "basis vectors, minimum 2, covolume 2; rhombic-dodecahedral cell";
        c.push_back(std::move(e));
        CatalogEntry alias = c.back();
        alias.name = "FCC";
        c.push_back(std::move(alias));
    }
    {
        CatalogEntry e;
        e.name = "D4";
        e.gram = mat(4, {2, -1, 0, 0, -1, 2, -1, -1, 0, -1, 2, 0, 0, -1, 0, 2});
        e.expected_r_sq = 1;
        e.expected_ratio = Rat(13, 10);
        e.note = "checkerboard lattice D4, minimum 2, covolume 2; the cell is the "
                 "24-cell (24 facets, 24 vertices)";
        c.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "rect14";
        e.gram = mat(2, {1, 0, 0, 4});
        e.expected_r_sq = Rat(5, 4);
        e.expected_ratio = 1;
        e.note = "rectangular lattice diag(1,4); box cell with semi-axes^2 (1/4, 1)";
        c.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "rect149";
        e.gram = mat(3, {1, 0, 0, 0, 4, 0, 0, 0, 9});
        e.expected_r_sq = Rat(7, 2);
        e.expected_ratio = 1;
        e.note = "rectangular lattice diag(1,4,9); box cell with semi-axes^2 (1/4, 1, 9/4)";
        c.push_back(std::move(e));
    }
    return c;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = build();
    return entries;
}

const CatalogEntry* catalog_find(const std::string& name) {
    for (const auto& e : catalog())
        if (e.name == name) return &e;
    return nullptr;
}

}  // namespace hlr
