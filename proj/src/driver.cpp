#include "decem/driver.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <thread>

#include "decem/assembly.hpp"
#include "decem/dual_mesh.hpp"
#include "decem/eigensolve.hpp"
#include "decem/errors.hpp"

namespace decem {

std::string join_path(const std::string& dir, const std::string& file) {
    if (dir.empty()) return file;
    return (std::filesystem::path(dir) / file).string();
}

MeshBundle load_mesh(const RunConfig& cfg) {
    MeshBundle mb;
    if (cfg.mesh.generate) {
        mb.complex = generate_box_mesh(*cfg.mesh.generate);
    } else {
        MshImport imp = import_msh(*cfg.mesh.import_path);
        mb.complex = std::move(imp.complex);
        mb.tet_tags = std::move(imp.tet_tags);
        mb.physical_names = std::move(imp.physical_names);
    }
    mb.incidence = build_incidence(mb.complex);
    mb.validation = validate_complex(mb.complex, mb.incidence);
    mb.classification = classify_boundary(mb.complex, mb.incidence);
    return mb;
}

std::vector<int> select_pec_faces(const MeshBundle& mb, const RunConfig& cfg) {
    if (cfg.pec.empty()) return {};
    const SimplicialComplex& sc = mb.complex;

    Vec3 lo = sc.vertices.front(), hi = sc.vertices.front();
    for (const Vec3& v : sc.vertices) {
        lo = lo.cwiseMin(v);
        hi = hi.cwiseMax(v);
    }
    const double tol = 1e-9 * std::max(1.0, (hi - lo).norm());

    // Single incident tet per boundary face, for region selectors.
    std::vector<int> face_tet(sc.n2(), -1);
    for (int t = 0; t < sc.n3(); ++t) {
        const auto& k = sc.tets[t];
        std::array<std::array<int, 3>, 4> tris = {{{k[1], k[2], k[3]},
                                                   {k[0], k[2], k[3]},
                                                   {k[0], k[1], k[3]},
                                                   {k[0], k[1], k[2]}}};
        for (const auto& tri : tris) {
            const int f = sc.face_index(tri[0], tri[1], tri[2]);
            if (mb.classification.face_is_boundary[f]) face_tet[f] = t;
        }
    }

    MaterialMap mat = build_material_map(cfg.materials, sc, cfg.gauge_alpha);

    std::vector<char> selected(sc.n2(), 0);
    for (const PecSelector& sel : cfg.pec) {
        if (!sel.region.empty()) {
            int region_idx = -1;
            for (std::size_t r = 0; r < cfg.materials.size(); ++r)
                if (cfg.materials[r].name == sel.region) region_idx = static_cast<int>(r);
            if (region_idx < 0)
                throw config_error("BadConfig", "PEC selector names unknown region '" + sel.region + "'");
            int hits = 0;
            for (int f : mb.classification.boundary_faces)
                if (face_tet[f] >= 0 && mat.region_of_tet[face_tet[f]] == region_idx) {
                    selected[f] = 1;
                    ++hits;
                }
            if (hits == 0)
                throw config_error("SelectorMissesBoundary",
                                   "region '" + sel.region + "' has no faces on the mesh boundary");
            continue;
        }
        if (sel.plane == "outer") {
            for (int f : mb.classification.boundary_faces) selected[f] = 1;
            continue;
        }
        const int axis = sel.plane[0] == 'x' ? 0 : sel.plane[0] == 'y' ? 1 : 2;
        const double plane = sel.plane.substr(1) == "min" ? lo[axis] : hi[axis];
        int hits = 0;
        for (int f : mb.classification.boundary_faces) {
            const auto& [a, b, c] = sc.faces[f];
            if (std::abs(sc.vertices[a][axis] - plane) <= tol &&
                std::abs(sc.vertices[b][axis] - plane) <= tol &&
                std::abs(sc.vertices[c][axis] - plane) <= tol) {
                selected[f] = 1;
                ++hits;
            }
        }
        if (hits == 0)
            throw config_error("SelectorMissesBoundary",
                               "no boundary faces on plane '" + sel.plane + "'");
    }

    std::vector<int> faces;
    for (int f = 0; f < sc.n2(); ++f)
        if (selected[f]) faces.push_back(f);
    return faces;
}

PortSpec resolve_port(const MeshBundle& mb, const PortConfig& pc) {
    const SimplicialComplex& sc = mb.complex;
    PortSpec port;
    port.current = pc.current;
    for (const Vec3& p : pc.path_points) {
        int best = -1;
        double best_d = std::numeric_limits<double>::max();
        for (int i = 0; i < sc.n0(); ++i) {
            const double d = (sc.vertices[i] - p).squaredNorm();
            if (d < best_d) {
                best_d = d;
                best = i;
            }
        }
        port.path_nodes.push_back(best);
    }
    for (std::size_t i = 0; i + 1 < port.path_nodes.size(); ++i) {
        const int a = port.path_nodes[i], b = port.path_nodes[i + 1];
        if (a == b || sc.edge_index(a, b) < 0)
            throw config_error("EmptyPath",
                               "port path segment " + std::to_string(i) + " does not map to a mesh edge");
    }
    return port;
}

MeshInfo mesh_info(const RunConfig& cfg) {
    const MeshBundle mb = load_mesh(cfg);
    MeshInfo info;
    info.n0 = mb.complex.n0();
    info.n1 = mb.complex.n1();
    info.n2 = mb.complex.n2();
    info.n3 = mb.complex.n3();
    info.boundary_faces = static_cast<int>(mb.classification.boundary_faces.size());
    info.boundary_edges = static_cast<int>(mb.classification.boundary_edges.size());
    info.boundary_nodes = static_cast<int>(mb.classification.boundary_nodes.size());
    info.euler_characteristic = mb.validation.euler_characteristic;
    info.volume = mb.validation.total_volume;
    for (int tag : mb.tet_tags) info.tets_per_tag[tag] += 1;
    return info;
}

namespace {
SolveContext make_context(const RunConfig& cfg, double omega) {
    SolveContext ctx;
    ctx.omega = omega;
    ctx.tolerance = cfg.solver.tolerance;
    ctx.max_iterations = cfg.solver.max_iterations;
    ctx.method = cfg.solver.method == "direct" ? SolveMethod::Direct : SolveMethod::BiCgStab;
    return ctx;
}

std::string field_file_name(double freq_hz) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "fields_%.6e.vtk", freq_hz);
    return buf;
}
} // namespace

std::vector<SweepResult> run_solve(const RunConfig& cfg, const DriverOptions& opt) {
    if (!cfg.port) throw config_error("BadConfig", "driven solve requires 'port'");
    if (!cfg.sweep || cfg.sweep->frequencies_hz.empty())
        throw config_error("BadConfig", "driven solve requires 'sweep'");

    const MeshBundle mb = load_mesh(cfg);
    const DualMesh dual = build_dual(mb.complex);
    const MaterialMap mat = build_material_map(cfg.materials, mb.complex, cfg.gauge_alpha);
    const std::vector<int> pec_faces = select_pec_faces(mb, cfg);
    const ReducedSystemMap rmap =
        apply_pec(mb.complex, mb.incidence, mb.classification, pec_faces);
    if (rmap.no_interior_nodes && opt.log)
        opt.log("note: PEC removed every node; mesh is too coarse to carry Phi DOFs");
    const PortSpec port = resolve_port(mb, *cfg.port);

    std::vector<double> freqs = cfg.sweep->frequencies_hz;
    std::sort(freqs.begin(), freqs.end());
    std::vector<SweepResult> results(freqs.size());
    std::vector<std::string> failures(freqs.size());

    auto solve_one = [&](std::size_t idx) {
        const double freq = freqs[idx];
        const double omega = 2.0 * constants::pi * freq;

        const ResolvedMaterials rm = resolve_materials(mat, omega);
        const HodgeSet hodges_full = assemble_hodges(mb.complex, dual, rm);
        const HodgeSet hodges = reduce_hodges(hodges_full, rmap);

        const SystemMatrix sys = assemble_A_system(rmap, hodges, omega);
        const SourceCochains src = build_source(port, omega, mb.complex, mb.incidence);
        for (std::size_t s = 0; s + 1 < port.path_nodes.size(); ++s) {
            const int e = mb.complex.edge_index(port.path_nodes[s], port.path_nodes[s + 1]);
            if (rmap.edge_map[e] < 0)
                throw config_error("EmptyPath", "port edge lies on the PEC boundary");
        }
        const VecXc J_red = rmap.identity ? src.J : reduce_vector(src.J, rmap.edge_keep);
        const VecXc rho_red = rmap.identity ? src.rho : reduce_vector(src.rho, rmap.node_keep);

        auto [A, rep] = solve_linear(sys, J_red, make_context(cfg, omega));

        FieldSolution sol;
        sol.omega = omega;
        sol.A = A;
        sol.Phi = recover_phi_from_gauge(A, hodges, rmap, omega);
        recover_fields(sol, rmap, hodges);

        SweepResult& out = results[idx];
        out.solver_residual = rep.rel_residual;
        out.converged = rep.converged;
        const MaxwellResiduals mres = verify_maxwell(sol, rmap, J_red, rho_red);
        out.ampere_rel = mres.ampere_rel;
        out.gauss_rel = mres.gauss_rel;
        out.port = extract_port(sol, rmap, mb.complex, port);

        if (opt.tandem_phi && rmap.n0_in() > 0) {
            const SystemMatrix phi_sys =
                assemble_Phi_system(rmap, hodges, omega, ChiMass::Diagonal);
            auto [phi_t, rep_phi] = solve_linear(phi_sys, VecXc(-rho_red), make_context(cfg, omega));
            const double den = std::max(phi_t.norm(), 1e-300);
            out.tandem_phi_rel_diff = (sol.Phi - phi_t).norm() / den;
            (void)rep_phi;
        }
        if (opt.export_fields)
            export_fields(sol, rmap, mb.complex,
                          join_path(opt.output_dir, field_file_name(freq)));
    };

    const int threads = std::max(1, opt.threads);
    if (threads == 1) {
        for (std::size_t i = 0; i < freqs.size(); ++i) {
            try {
                solve_one(i);
            } catch (const Error& e) {
                failures[i] = e.what();
                results[i].converged = false;
                results[i].solver_residual = std::numeric_limits<double>::infinity();
                results[i].port.freq_hz = freqs[i];
            }
        }
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= freqs.size()) return;
                try {
                    solve_one(i);
                } catch (const Error& e) {
                    failures[i] = e.what();
                    results[i].converged = false;
                    results[i].solver_residual = std::numeric_limits<double>::infinity();
                    results[i].port.freq_hz = freqs[i];
                }
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    for (std::size_t i = 0; i < freqs.size(); ++i) {
        if (!failures[i].empty() && opt.log)
            opt.log("frequency " + std::to_string(freqs[i]) + " Hz failed: " + failures[i]);
    }

    write_sweep_csv(results, join_path(opt.output_dir, cfg.sweep_csv));

    for (const auto& f : failures)
        if (!f.empty()) throw solver_error("ToleranceNotReached", "one or more sweep points failed");
    return results;
}

std::vector<BandPoint> run_bands(const RunConfig& cfg, const DriverOptions& opt) {
    if (!cfg.pbc || cfg.pbc->k_path.empty())
        throw config_error("BadConfig", "bands mode requires 'boundary.pbc' with a k_path");
    if (cfg.port) throw config_error("BadConfig", "bands mode excludes 'port'");

    const MeshBundle mb = load_mesh(cfg);
    const DualMesh dual = build_dual(mb.complex);
    const MaterialMap mat = build_material_map(cfg.materials, mb.complex, cfg.gauge_alpha);
    if (!mat.lossless()) {
        for (std::size_t r = 0; r < cfg.materials.size(); ++r)
            if (cfg.materials[r].sigma != 0.0)
                throw config_error("LossyMaterialInEigenproblem",
                                   "region '" + cfg.materials[r].name + "' is lossy");
    }

    // Lossless materials are frequency independent; resolve at any omega.
    const ResolvedMaterials rm = resolve_materials(mat, 1.0);
    const HodgeSet hodges_full = assemble_hodges(mb.complex, dual, rm);
    const std::vector<int> pec_faces = select_pec_faces(mb, cfg);
    const ReducedSystemMap rmap =
        apply_pec(mb.complex, mb.incidence, mb.classification, pec_faces);
    const HodgeSet hodges = reduce_hodges(hodges_full, rmap);

    const DofTag problem = cfg.bands.problem == "A" ? DofTag::Edge : DofTag::Node;

    std::vector<BandPoint> points;
    for (const auto& k : cfg.pbc->k_path) {
        BlochSpec bloch;
        bloch.periodic_x = cfg.pbc->x;
        bloch.periodic_y = cfg.pbc->y;
        bloch.kx = k[0];
        bloch.ky = k[1];
        const BlochProjection proj = build_pbc_projection(
            mb.complex, rmap, bloch, problem == DofTag::Edge ? DofKind::Edge : DofKind::Node);
        const EigenPair pair = assemble_pbc_eigen(rmap, hodges, proj, problem);
        const EigenResult eig = solve_eigen(pair.K, pair.M, cfg.bands.modes, 0.0);

        double scale = 0.0;
        for (double v : eig.values) scale = std::max(scale, std::abs(v));
        for (std::size_t m = 0; m < eig.values.size(); ++m) {
            BandPoint pt;
            pt.kx = k[0];
            pt.ky = k[1];
            pt.mode_index = static_cast<int>(m);
            const double lam = std::max(eig.values[m], 0.0);
            pt.freq_hz = std::sqrt(lam) / (2.0 * constants::pi);
            const bool near_zero = scale > 0.0 && std::abs(eig.values[m]) < 1e-10 * scale;
            double curl_fraction = 1.0;
            if (problem == DofTag::Edge) {
                const VecXc& v = eig.vectors[m];
                const double num = std::abs(cplx(v.adjoint() * (pair.K_curl * v)));
                const double den = std::max(std::abs(cplx(v.adjoint() * (pair.K * v))), 1e-300);
                curl_fraction = num / den;
            }
            pt.flagged_gauge = near_zero || curl_fraction < 1e-6;
            if (pt.flagged_gauge && opt.log) {
                char buf[160];
                std::snprintf(buf, sizeof(buf),
                              "flagged mode %d at k=(%.4g,%.4g): f=%.6e Hz (gauge/constant)",
                              pt.mode_index, pt.kx, pt.ky, pt.freq_hz);
                opt.log(buf);
            }
            points.push_back(pt);
        }
    }

    write_bands_csv(points, join_path(opt.output_dir, cfg.bands_csv));
    return points;
}

} // namespace decem
