#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "decem/boundary.hpp"
#include "decem/config.hpp"
#include "decem/export.hpp"
#include "decem/msh_io.hpp"
#include "decem/postprocess.hpp"

namespace decem {

// Loaded mesh with everything the run modes share.
struct MeshBundle {
    SimplicialComplex complex;
    IncidenceSet incidence;
    ValidationReport validation;
    BoundaryClassification classification;
    std::vector<int> tet_tags;                 // msh import only
    std::map<int, std::string> physical_names; // msh import only
};

MeshBundle load_mesh(const RunConfig& config);

// Resolves the configured PEC selectors into boundary face ids.
std::vector<int> select_pec_faces(const MeshBundle& mesh, const RunConfig& config);

// Maps the configured port polyline onto mesh nodes (nearest-node matching).
PortSpec resolve_port(const MeshBundle& mesh, const PortConfig& port);

struct MeshInfo {
    int n0 = 0, n1 = 0, n2 = 0, n3 = 0;
    int boundary_faces = 0, boundary_edges = 0, boundary_nodes = 0;
    int euler_characteristic = 0;
    double volume = 0.0;
    std::map<int, int> tets_per_tag;
};

MeshInfo mesh_info(const RunConfig& config);

struct DriverOptions {
    bool tandem_phi = false;
    bool export_fields = false;
    int threads = 1;
    std::string output_dir; // prefix for all output paths
    std::function<void(const std::string&)> log; // optional progress sink
};

// Driven sweep: assemble and solve the A system per frequency, recover Phi
// through the gauge, post-process, and write the sweep CSV (plus VTK field
// files when requested). Returns the rows in ascending frequency order.
std::vector<SweepResult> run_solve(const RunConfig& config, const DriverOptions& options);

// Bloch eigenmode sweep over the configured k path; writes the bands CSV.
std::vector<BandPoint> run_bands(const RunConfig& config, const DriverOptions& options);

std::string join_path(const std::string& dir, const std::string& file);

} // namespace decem
