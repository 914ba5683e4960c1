#pragma once

#include "o3lg/characters.hpp"

#include <vector>

namespace o3lg {

struct AxialResult {
    GroupId little_group;
    int vector_dim = 1;
    // Set where the result and the published list disagree; `published`
    // then holds the printed group (which may equal little_group when only
    // vector_dim is suspect).
    bool flagged = false;
    GroupId published;

    GroupId printed() const { return flagged ? published : little_group; }
};

AxialResult little_group_cinf(int m);
AxialResult little_group_cinfh(int m, int parity);
AxialResult little_group_cinfv(int m);
AxialResult little_group_dinf(const Irrep& irrep);
AxialResult little_group_dinfh(const Irrep& irrep);

// Dispatch on the parent of the irrep.
AxialResult axial_little_group(const Irrep& irrep);

// Irreps of an axial parent up to |m| or n <= m_max, in listing order.
std::vector<Irrep> axial_irreps(const GroupId& parent, int m_max);

} // namespace o3lg
