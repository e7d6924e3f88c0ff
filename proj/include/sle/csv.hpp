#ifndef SLE_CSV_HPP
#define SLE_CSV_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sle/estimator.hpp"
#include "sle/exponents.hpp"
#include "sle/sde.hpp"

namespace sle {

inline constexpr const char* kArtifactVersion = "0.1.0";

// Decimal rendering with 17 significant digits: doubles round-trip
// losslessly and output is byte-stable for fixed inputs.
std::string format_double(double v);

// CSV: kappa,t,value,branch
std::string spectrum_csv(const SpectrumCurve& curve);

// CSV: kappa,t,variant,r_minus_1,mean,stderr,n_paths. One row per scale;
// the fit is appended as one summary row with variant "<variant>_slope",
// r_minus_1 = 0, mean = slope, stderr = slope_stderr.
std::string estimate_csv(double kappa, const SlopeFit& fit);

struct VerifyRow {
    std::string check;
    double kappa;
    double t;
    std::string location;
    double value;
    bool pass;
};

// CSV: check,kappa,t,location,value,pass
std::string verify_csv(const std::vector<VerifyRow>& rows);

// CSV: index,re,im (absorbed points are skipped)
std::string hull_csv(const HullCloud& cloud);

// SVG 1.1: one polyline over the surviving points in launch-angle order,
// with the unit circle drawn for reference.
std::string hull_svg(const HullCloud& cloud);

// FNV-1a 64-bit digest, rendered as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

// One JSON-lines manifest record appended to runs.log next to the output:
// command line, master seed, config digest, artifact version, wall time,
// and the output file's digest.
void append_manifest(const std::string& runs_log_path,
                     const std::string& command_line,
                     std::uint64_t master_seed,
                     const std::string& config_digest,
                     double wall_time_seconds,
                     const std::string& output_path,
                     const std::string& output_digest);

void write_file(const std::string& path, const std::string& contents);
std::string read_file(const std::string& path);

} // namespace sle

#endif
