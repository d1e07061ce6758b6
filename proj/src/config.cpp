#include "decem/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "decem/errors.hpp"

namespace decem {

using nlohmann::json;

namespace {
Vec3 parse_vec3(const json& j, const std::string& key) {
    if (!j.is_array() || j.size() != 3)
        throw config_error("BadConfig", key + " must be a 3-element array");
    return Vec3(j[0].get<double>(), j[1].get<double>(), j[2].get<double>());
}

std::vector<double> expand_log_sweep(double start, double stop, int per_decade) {
    if (start <= 0.0 || stop < start || per_decade < 1)
        throw config_error("BadConfig", "log sweep needs 0 < start <= stop and points_per_decade >= 1");
    std::vector<double> freqs;
    const double decades = std::log10(stop / start);
    const int n = static_cast<int>(std::floor(decades * per_decade + 1e-9));
    for (int i = 0; i <= n; ++i) freqs.push_back(start * std::pow(10.0, double(i) / per_decade));
    if (std::abs(freqs.back() - stop) > 1e-9 * stop) freqs.push_back(stop);
    return freqs;
}
} // namespace

RunConfig parse_config_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw config_error("BadConfig", std::string("JSON parse failure: ") + e.what());
    }

    RunConfig cfg;

    // Mesh source: exactly one of generate / import.
    if (!j.contains("mesh")) throw config_error("BadConfig", "missing 'mesh'");
    const json& jm = j["mesh"];
    if (jm.contains("generate") == jm.contains("import"))
        throw config_error("BadConfig", "mesh needs exactly one of 'generate' or 'import'");
    if (jm.contains("generate")) {
        const json& g = jm["generate"];
        BoxMeshSpec spec;
        if (g.contains("origin")) spec.origin = parse_vec3(g["origin"], "mesh.generate.origin");
        spec.size = parse_vec3(g.at("size"), "mesh.generate.size");
        const json& cells = g.at("cells");
        if (!cells.is_array() || cells.size() != 3)
            throw config_error("BadConfig", "mesh.generate.cells must be [nx,ny,nz]");
        spec.nx = cells[0].get<int>();
        spec.ny = cells[1].get<int>();
        spec.nz = cells[2].get<int>();
        cfg.mesh.generate = spec;
    } else {
        cfg.mesh.import_path = jm["import"].get<std::string>();
    }

    if (j.contains("materials")) {
        std::set<std::string> names;
        for (const json& r : j["materials"]) {
            MaterialRegion reg;
            reg.name = r.value("name", "region" + std::to_string(cfg.materials.size()));
            if (!names.insert(reg.name).second)
                throw config_error("BadConfig", "duplicate material region name '" + reg.name + "'");
            const json& box = r.at("box");
            if (!box.is_array() || box.size() != 2)
                throw config_error("BadConfig", "materials[].box must be [[lo],[hi]]");
            reg.lo = parse_vec3(box[0], "materials[].box[0]");
            reg.hi = parse_vec3(box[1], "materials[].box[1]");
            if ((reg.hi - reg.lo).minCoeff() < 0.0)
                throw config_error("BadConfig", "materials[].box has hi < lo");
            reg.eps_r = r.value("eps_r", 1.0);
            reg.mu_r = r.value("mu_r", 1.0);
            reg.sigma = r.value("sigma", 0.0);
            if (reg.sigma < 0.0)
                throw config_error("NegativeConductivity", "region '" + reg.name + "'");
            cfg.materials.push_back(reg);
        }
    }

    if (j.contains("gauge_alpha")) cfg.gauge_alpha = j["gauge_alpha"].get<double>();

    if (j.contains("boundary")) {
        const json& b = j["boundary"];
        if (b.contains("pec")) {
            for (const json& s : b["pec"]) {
                PecSelector sel;
                if (s.is_string()) {
                    sel.plane = s.get<std::string>();
                    static const std::set<std::string> allowed = {"outer", "xmin", "xmax", "ymin",
                                                                  "ymax", "zmin", "zmax"};
                    if (!allowed.count(sel.plane))
                        throw config_error("BadConfig", "unknown PEC selector '" + sel.plane + "'");
                } else if (s.is_object() && s.contains("region")) {
                    sel.region = s["region"].get<std::string>();
                } else {
                    throw config_error("BadConfig", "PEC selector must be a string or {region}");
                }
                cfg.pec.push_back(sel);
            }
        }
        if (b.contains("pbc")) {
            PbcSpec pbc;
            const json& p = b["pbc"];
            for (const json& ax : p.at("axes")) {
                const std::string a = ax.get<std::string>();
                if (a == "x") pbc.x = true;
                else if (a == "y") pbc.y = true;
                else throw config_error("BadConfig", "pbc axes must be 'x' and/or 'y'");
            }
            if (p.contains("k_path")) {
                for (const json& k : p["k_path"]) {
                    if (!k.is_array() || k.size() != 2)
                        throw config_error("BadConfig", "pbc.k_path entries must be [kx,ky]");
                    pbc.k_path.push_back({k[0].get<double>(), k[1].get<double>()});
                }
            }
            cfg.pbc = pbc;
        }
    }

    if (j.contains("port")) {
        PortConfig port;
        const json& p = j["port"];
        for (const json& pt : p.at("path")) port.path_points.push_back(parse_vec3(pt, "port.path[]"));
        if (port.path_points.size() < 2)
            throw config_error("EmptyPath", "port.path needs >= 2 points");
        const double amps = p.value("current_amps", 1.0);
        if (amps == 0.0) throw config_error("ZeroCurrent", "port.current_amps is zero");
        port.current = amps;
        cfg.port = port;
    }

    if (cfg.port && cfg.pbc)
        throw config_error("BadConfig", "'port' (driven mode) and 'pbc' (eigen mode) are exclusive");

    if (j.contains("sweep")) {
        SweepSpec sweep;
        const json& s = j["sweep"];
        if (s.contains("frequencies_hz") == s.contains("log"))
            throw config_error("BadConfig", "sweep needs exactly one of 'frequencies_hz' or 'log'");
        if (s.contains("frequencies_hz")) {
            for (const json& f : s["frequencies_hz"]) sweep.frequencies_hz.push_back(f.get<double>());
        } else {
            const json& lg = s["log"];
            sweep.frequencies_hz = expand_log_sweep(lg.at("start_hz").get<double>(),
                                                    lg.at("stop_hz").get<double>(),
                                                    lg.at("points_per_decade").get<int>());
        }
        for (double f : sweep.frequencies_hz)
            if (!(f > 0.0)) throw config_error("BadConfig", "sweep frequencies must be > 0");
        cfg.sweep = sweep;
    }

    if (j.contains("bands")) {
        const json& b = j["bands"];
        cfg.bands.modes = b.value("modes", 4);
        cfg.bands.problem = b.value("problem", std::string("A"));
        if (cfg.bands.modes < 1) throw config_error("BadConfig", "bands.modes must be >= 1");
        if (cfg.bands.problem != "A" && cfg.bands.problem != "Phi")
            throw config_error("BadConfig", "bands.problem must be 'A' or 'Phi'");
    }

    if (j.contains("solver")) {
        const json& s = j["solver"];
        cfg.solver.method = s.value("method", std::string("direct"));
        if (cfg.solver.method != "direct" && cfg.solver.method != "bicgstab")
            throw config_error("BadConfig", "solver.method must be 'direct' or 'bicgstab'");
        cfg.solver.tolerance = s.value("tolerance", 1e-10);
        cfg.solver.max_iterations = s.value("max_iterations", 2000);
        if (cfg.solver.tolerance <= 0.0)
            throw config_error("BadConfig", "solver.tolerance must be > 0");
    }

    if (j.contains("output")) {
        const json& o = j["output"];
        cfg.sweep_csv = o.value("sweep_csv", cfg.sweep_csv);
        cfg.bands_csv = o.value("bands_csv", cfg.bands_csv);
    }
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw config_error("BadConfig", "cannot open config file " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_config_json(ss.str());
}

} // namespace decem
