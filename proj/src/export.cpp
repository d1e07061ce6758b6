#include "decem/export.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "decem/errors.hpp"

namespace decem {

void write_sweep_csv(const std::vector<SweepResult>& results, const std::string& path) {
    std::vector<SweepResult> rows = results;
    std::stable_sort(rows.begin(), rows.end(), [](const SweepResult& a, const SweepResult& b) {
        return a.port.freq_hz < b.port.freq_hz;
    });

    std::ofstream f(path);
    if (!f) throw io_error("IoFailure", "cannot open " + path + " for writing");
    f << "freq_hz,re_Z,im_Z,R,L,C,residual\n";
    char buf[512];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof(buf), "%.12e,%.12e,%.12e,%.12e,%.12e,%.12e,%.12e\n",
                      r.port.freq_hz, r.port.Z.real(), r.port.Z.imag(), r.port.R, r.port.L,
                      r.port.C, r.solver_residual);
        f << buf;
    }
    if (!f) throw io_error("IoFailure", "write to " + path + " failed");
}

void write_bands_csv(const std::vector<BandPoint>& points, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw io_error("IoFailure", "cannot open " + path + " for writing");
    f << "kx,ky,mode_index,freq_hz\n";
    char buf[256];
    for (const auto& p : points) {
        std::snprintf(buf, sizeof(buf), "%.12e,%.12e,%d,%.12e\n", p.kx, p.ky, p.mode_index,
                      p.freq_hz);
        f << buf;
    }
    if (!f) throw io_error("IoFailure", "write to " + path + " failed");
}

} // namespace decem
