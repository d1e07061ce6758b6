#include "decem/meshgen.hpp"

#include <array>

#include "decem/errors.hpp"

namespace decem {

SimplicialComplex generate_box_mesh(const BoxMeshSpec& spec) {
    if (spec.nx < 1 || spec.ny < 1 || spec.nz < 1)
        throw config_error("InvalidIndex", "box mesh needs >= 1 cell per axis");
    if (spec.size.minCoeff() <= 0.0)
        throw config_error("InvalidIndex", "box mesh needs positive extents");

    const int nx = spec.nx, ny = spec.ny, nz = spec.nz;
    const Vec3 h(spec.size.x() / nx, spec.size.y() / ny, spec.size.z() / nz);

    std::vector<Vec3> verts;
    verts.reserve(static_cast<std::size_t>(nx + 1) * (ny + 1) * (nz + 1));
    auto vid = [&](int i, int j, int k) { return (i * (ny + 1) + j) * (nz + 1) + k; };
    for (int i = 0; i <= nx; ++i)
        for (int j = 0; j <= ny; ++j)
            for (int k = 0; k <= nz; ++k)
                verts.push_back(spec.origin + Vec3(i * h.x(), j * h.y(), k * h.z()));

    // Kuhn split: walk from the cell's min corner to its max corner along
    // each of the 6 axis permutations; all tets share the main diagonal.
    static constexpr std::array<std::array<int, 3>, 6> perms = {
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

    std::vector<std::array<int, 4>> tets;
    tets.reserve(static_cast<std::size_t>(nx) * ny * nz * 6);
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j)
            for (int k = 0; k < nz; ++k)
                for (const auto& p : perms) {
                    std::array<int, 3> c = {i, j, k};
                    std::array<int, 4> tet;
                    tet[0] = vid(c[0], c[1], c[2]);
                    for (int s = 0; s < 3; ++s) {
                        c[p[s]] += 1;
                        tet[s + 1] = vid(c[0], c[1], c[2]);
                    }
                    tets.push_back(tet);
                }

    return build_complex(verts, tets);
}

} // namespace decem
