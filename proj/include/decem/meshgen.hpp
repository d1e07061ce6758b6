#pragma once

#include "decem/simplicial_complex.hpp"
#include "decem/types.hpp"

namespace decem {

// Structured box mesh split into 6 tets per hex cell (Kuhn subdivision).
// Every square face is split along its min-corner/max-corner diagonal, which
// is translation invariant, so opposite boundary triangulations match and
// periodic identification always succeeds.
struct BoxMeshSpec {
    Vec3 origin = Vec3::Zero();
    Vec3 size = Vec3::Ones(); // m
    int nx = 1, ny = 1, nz = 1;
    bool symmetric = true; // inherent to the Kuhn split; kept for the record
};

SimplicialComplex generate_box_mesh(const BoxMeshSpec& spec);

} // namespace decem
