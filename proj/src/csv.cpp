#include "sle/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace sle {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string spectrum_csv(const SpectrumCurve& curve) {
    std::string out = "kappa,t,value,branch\n";
    for (const SpectrumSample& s : curve.samples) {
        out += format_double(curve.kappa);
        out += ',';
        out += format_double(s.t);
        out += ',';
        out += format_double(s.value);
        out += ',';
        out += to_string(s.branch);
        out += '\n';
    }
    return out;
}

std::string estimate_csv(double kappa, const SlopeFit& fit) {
    std::string out = "kappa,t,variant,r_minus_1,mean,stderr,n_paths\n";
    const auto row = [&](double t, const std::string& variant, double scale,
                         double mean, double se, std::size_t n) {
        out += format_double(kappa);
        out += ',';
        out += format_double(t);
        out += ',';
        out += variant;
        out += ',';
        out += format_double(scale);
        out += ',';
        out += format_double(mean);
        out += ',';
        out += format_double(se);
        out += ',';
        out += std::to_string(n);
        out += '\n';
    };
    std::string variant_name;
    for (std::size_t i = 0; i < fit.estimates.size(); ++i) {
        const MomentEstimate& e = fit.estimates[i];
        variant_name = to_string(e.variant.kind);
        row(e.t, variant_name, fit.scales[i], e.mean, e.stderr_, e.n_paths);
    }
    std::size_t total = 0;
    for (const MomentEstimate& e : fit.estimates) total += e.n_paths;
    row(fit.estimates.front().t, variant_name + "_slope", 0.0, fit.slope,
        fit.slope_stderr, total);
    return out;
}

std::string verify_csv(const std::vector<VerifyRow>& rows) {
    std::string out = "check,kappa,t,location,value,pass\n";
    for (const VerifyRow& r : rows) {
        out += r.check;
        out += ',';
        out += format_double(r.kappa);
        out += ',';
        out += format_double(r.t);
        out += ',';
        out += r.location;
        out += ',';
        out += format_double(r.value);
        out += ',';
        out += r.pass ? "1" : "0";
        out += '\n';
    }
    return out;
}

std::string hull_csv(const HullCloud& cloud) {
    std::vector<bool> dead(cloud.points.size(), false);
    for (std::size_t k : cloud.absorbed) dead[k] = true;
    std::string out = "index,re,im\n";
    for (std::size_t k = 0; k < cloud.points.size(); ++k) {
        if (dead[k]) continue;
        out += std::to_string(k);
        out += ',';
        out += format_double(cloud.points[k].real());
        out += ',';
        out += format_double(cloud.points[k].imag());
        out += '\n';
    }
    return out;
}

std::string hull_svg(const HullCloud& cloud) {
    std::vector<bool> dead(cloud.points.size(), false);
    for (std::size_t k : cloud.absorbed) dead[k] = true;

    double extent = 1.5;
    for (std::size_t k = 0; k < cloud.points.size(); ++k) {
        if (dead[k]) continue;
        extent = std::max({extent, std::abs(cloud.points[k].real()),
                           std::abs(cloud.points[k].imag())});
    }
    const double view = 1.1 * extent;

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
        << "width=\"800\" height=\"800\" viewBox=\"" << -view << ' ' << -view
        << ' ' << 2 * view << ' ' << 2 * view << "\">\n"
        << "<circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" "
        << "stroke=\"#888\" stroke-width=\"" << view / 400 << "\"/>\n"
        << "<polyline fill=\"none\" stroke=\"#004488\" stroke-width=\""
        << view / 400 << "\" points=\"";
    bool first = true;
    for (std::size_t k = 0; k < cloud.points.size(); ++k) {
        if (dead[k]) continue;
        if (!first) svg << ' ';
        first = false;
        // SVG y grows downward; flip for the usual orientation.
        svg << format_double(cloud.points[k].real()) << ','
            << format_double(-cloud.points[k].imag());
    }
    svg << "\"/>\n</svg>\n";
    return svg.str();
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(h));
    return buf;
}

void append_manifest(const std::string& runs_log_path,
                     const std::string& command_line,
                     std::uint64_t master_seed,
                     const std::string& config_digest,
                     double wall_time_seconds,
                     const std::string& output_path,
                     const std::string& output_digest) {
    nlohmann::json rec;
    rec["command_line"] = command_line;
    rec["master_seed"] = master_seed;
    rec["config_digest"] = config_digest;
    rec["artifact_version"] = kArtifactVersion;
    rec["wall_time_s"] = wall_time_seconds;
    rec["output"] = output_path;
    rec["output_digest"] = output_digest;
    std::ofstream log(runs_log_path, std::ios::app | std::ios::binary);
    if (!log) {
        throw std::runtime_error("append_manifest: cannot open " + runs_log_path);
    }
    log << rec.dump() << '\n';
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw std::runtime_error("write_file: cannot open " + path);
    }
    f.write(contents.data(), static_cast<std::streamsize>(contents.size()));
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("read_file: cannot open " + path);
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

} // namespace sle
