#pragma once

#include <array>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "decem/types.hpp"

namespace decem {

// Primal tetrahedral complex with canonically oriented sub-simplices.
//
// Orientation convention (fixed, mesh-order independent):
//   - edges run from lower to higher global vertex index,
//   - faces are stored with sorted vertices (a<b<c) and oriented by the
//     right-hand rule along a->b->c,
//   - tets are stored in positive-signed-volume order (sorted indices,
//     last two swapped when needed).
struct SimplicialComplex {
    std::vector<Vec3> vertices;
    std::vector<std::array<int, 4>> tets;   // positive-volume canonical order
    std::vector<std::array<int, 2>> edges;  // sorted pairs, lexicographic order
    std::vector<std::array<int, 3>> faces;  // sorted triples, lexicographic order

    int n0() const { return static_cast<int>(vertices.size()); }
    int n1() const { return static_cast<int>(edges.size()); }
    int n2() const { return static_cast<int>(faces.size()); }
    int n3() const { return static_cast<int>(tets.size()); }

    // Signed volume of the stored vertex order (positive after construction).
    double tet_volume(int t) const;
    double total_volume() const;
    Vec3 tet_centroid(int t) const;

    int edge_index(int a, int b) const;        // -1 when absent
    int face_index(int a, int b, int c) const; // -1 when absent

    std::unordered_map<std::uint64_t, int> edge_lookup;
    std::unordered_map<std::uint64_t, int> face_lookup;

    static std::uint64_t edge_key(int a, int b);
    static std::uint64_t face_key(int a, int b, int c);
};

// Signed incidence matrices d0 (N1 x N0), d1 (N2 x N1), d2 (N3 x N2) with
// entries in {-1, 0, +1}; the discrete gradient, curl and divergence.
struct IncidenceSet {
    SpMatI d0;
    SpMatI d1;
    SpMatI d2;
};

// Dual incidence matrices obtained by transposition,
// d_dual^(3-k) = (-1)^k [d^(k-1)]^T  for k = 1,2,3.
struct DualIncidence {
    SpMatI d_dual0; // = -(d2)^T
    SpMatI d_dual1; // = +(d1)^T
    SpMatI d_dual2; // = -(d0)^T
};

struct ValidationReport {
    int max_abs_d1d0 = 0;
    int max_abs_d2d1 = 0;
    int boundary_face_count = 0;
    int euler_characteristic = 0;
    double total_volume = 0.0;
};

// Enumerates unique sorted edges/faces, fixes tet orientation, validates input.
// Throws: DegenerateTet, DanglingVertex, NonManifoldFace.
SimplicialComplex build_complex(const std::vector<Vec3>& vertices,
                                const std::vector<std::array<int, 4>>& tets);

IncidenceSet build_incidence(const SimplicialComplex& complex);

// Checks d1*d0 = 0 and d2*d1 = 0 in exact integer arithmetic and reports
// basic diagnostics. Throws StructureViolation if any d-o-d entry is nonzero.
ValidationReport validate_complex(const SimplicialComplex& complex,
                                  const IncidenceSet& incidence);

DualIncidence dual_incidence(const IncidenceSet& incidence);

double signed_tet_volume(const Vec3& v0, const Vec3& v1, const Vec3& v2, const Vec3& v3);

} // namespace decem
