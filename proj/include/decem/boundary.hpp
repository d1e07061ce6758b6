#pragma once

#include <vector>

#include "decem/hodge.hpp"
#include "decem/simplicial_complex.hpp"
#include "decem/types.hpp"

namespace decem {

// Boundary simplices of the primal mesh: a face is boundary iff it has one
// incident tet; edges/nodes are boundary iff contained in a boundary face.
struct BoundaryClassification {
    std::vector<char> node_is_boundary;
    std::vector<char> edge_is_boundary;
    std::vector<char> face_is_boundary;
    std::vector<int> boundary_nodes; // I_n
    std::vector<int> boundary_edges; // I_e
    std::vector<int> boundary_faces; // I_s
};

BoundaryClassification classify_boundary(const SimplicialComplex& complex,
                                         const IncidenceSet& incidence);

// PEC reduction: boundary nodes/edges/faces on the selected surface are
// stripped from the incidence matrices (tangential A and Phi forced to zero
// there); Hodge matrices are restricted to the surviving entities. With an
// empty selection this is the identity map (PMC everywhere).
struct ReducedSystemMap {
    // old -> new (-1 = removed) and new -> old index maps
    std::vector<int> node_map, edge_map, face_map;
    std::vector<int> node_keep, edge_keep, face_keep;
    SpMatI d0, d1, d2; // reduced incidences

    int n0_in() const { return static_cast<int>(node_keep.size()); }
    int n1_in() const { return static_cast<int>(edge_keep.size()); }
    int n2_in() const { return static_cast<int>(face_keep.size()); }
    bool identity = false;            // no entity removed
    bool no_interior_nodes = false;   // diagnostic: mesh too coarse for this BC
};

// pec_faces must be a subset of the boundary faces; throws
// SelectorMissesBoundary when an interior face is selected.
ReducedSystemMap apply_pec(const SimplicialComplex& complex, const IncidenceSet& incidence,
                           const BoundaryClassification& classification,
                           const std::vector<int>& pec_faces);

HodgeSet reduce_hodges(const HodgeSet& hodges, const ReducedSystemMap& map);

// Scatter/gather between full and reduced index spaces (removed entries are 0).
VecXc reduce_vector(const VecXc& full, const std::vector<int>& keep);
VecXc scatter_vector(const VecXc& reduced, const std::vector<int>& map_old_to_new, int full_size);

// Bloch-periodic identification of the x/y box walls. Entities on the max
// walls are images of the min-wall entities under translation by (Lx,0,0) /
// (0,Ly,0); their cochain values follow with unit-modulus phase factors
// e^{-i kx Lx} / e^{-i ky Ly}. Corner entities on both image walls get the
// compound phase.
struct BlochSpec {
    bool periodic_x = false;
    bool periodic_y = false;
    double Lx = 0.0, Ly = 0.0; // cell lengths, from the mesh bounding box
    double kx = 0.0, ky = 0.0; // rad/m
    double match_tol = 1e-9;   // m
};

enum class DofKind { Node, Edge };

struct BlochProjection {
    SpMatC P;        // rows = reduced-complex DOFs, cols = independent DOFs
    int n_interior = 0;
    int n_edge_wall = 0; // identified once (one periodic image)
    int n_corner = 0;    // identified across both axes (three images)
};

// Operates on the PEC-reduced DOF set described by `map`. Throws
// AsymmetricMesh when the wall entities admit no translation bijection.
BlochProjection build_pbc_projection(const SimplicialComplex& complex,
                                     const ReducedSystemMap& map, const BlochSpec& bloch,
                                     DofKind kind);

} // namespace decem
