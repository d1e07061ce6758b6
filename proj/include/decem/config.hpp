#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "decem/materials.hpp"
#include "decem/meshgen.hpp"
#include "decem/types.hpp"

namespace decem {

// Mesh source: exactly one of generate or import.
struct MeshSource {
    std::optional<BoxMeshSpec> generate;
    std::optional<std::string> import_path;
};

// PEC face selectors: "outer" (all boundary faces), axis planes
// ("xmin".."zmax"), or {"region": name} for a region surface lying on the
// mesh boundary.
struct PecSelector {
    std::string plane;  // "outer", "xmin", ..., "zmax"; empty when region-based
    std::string region; // material region name; empty when plane-based
};

struct PbcSpec {
    bool x = false, y = false;
    std::vector<std::array<double, 2>> k_path; // (kx, ky) rad/m
};

struct PortConfig {
    std::vector<Vec3> path_points; // mapped to nearest mesh nodes
    cplx current = 1.0;
};

struct SweepSpec {
    std::vector<double> frequencies_hz; // explicit list, or generated from log sweep
};

struct SolverConfig {
    std::string method = "direct"; // "direct" | "bicgstab"
    double tolerance = 1e-10;
    int max_iterations = 2000;
};

struct BandsConfig {
    int modes = 4;
    std::string problem = "A"; // "A" | "Phi"
};

struct RunConfig {
    MeshSource mesh;
    std::vector<MaterialRegion> materials;
    std::optional<double> gauge_alpha; // default 1/eps0
    std::vector<PecSelector> pec;
    std::optional<PbcSpec> pbc;
    std::optional<PortConfig> port;
    std::optional<SweepSpec> sweep;
    BandsConfig bands;
    SolverConfig solver;
    std::string sweep_csv = "sweep.csv";
    std::string bands_csv = "bands.csv";
};

// Parses and validates the JSON config document. Throws config errors with
// the offending key in the message.
RunConfig load_config(const std::string& path);
RunConfig parse_config_json(const std::string& json_text);

} // namespace decem
