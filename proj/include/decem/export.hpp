#pragma once

#include <string>
#include <vector>

#include "decem/postprocess.hpp"
#include "decem/types.hpp"

namespace decem {

// Per-frequency record of a driven sweep.
struct SweepResult {
    PortReadout port;
    double solver_residual = 0.0;
    bool converged = true;
    double ampere_rel = 0.0;
    double gauss_rel = 0.0;
    double tandem_phi_rel_diff = -1.0; // < 0 when the tandem solve was not run
};

// CSV with header freq_hz,re_Z,im_Z,R,L,C,residual; rows ascending in
// frequency, fixed %.12e formatting so identical runs are byte-identical.
void write_sweep_csv(const std::vector<SweepResult>& results, const std::string& path);

struct BandPoint {
    double kx = 0.0, ky = 0.0;
    int mode_index = 0;
    double freq_hz = 0.0;
    bool flagged_gauge = false; // near-zero or curl-free mode
};

// CSV with header kx,ky,mode_index,freq_hz.
void write_bands_csv(const std::vector<BandPoint>& points, const std::string& path);

} // namespace decem
