#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

#include "splitsolve/errors.hpp"
#include "splitsolve/problem.hpp"

namespace splitsolve {

/// Shortest-faithful decimal form: 17 significant digits round-trip any
/// double, which keeps traces byte-reproducible inputs for external tools.
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline std::string trace_csv_header(std::size_t dim_x, std::size_t dim_y) {
    std::string h = "n,coupling_residual,fix_residual_U,fix_residual_T,lyapunov";
    for (std::size_t i = 0; i < dim_x; ++i) h += ",x" + std::to_string(i);
    for (std::size_t i = 0; i < dim_y; ++i) h += ",y" + std::to_string(i);
    h += "\n";
    return h;
}

/// Render a solve trace with a fixed column layout. The lyapunov field is
/// left empty when the problem has no known solution.
inline std::string trace_to_csv(const std::vector<TraceRecord>& trace, std::size_t dim_x,
                                std::size_t dim_y) {
    std::string out = trace_csv_header(dim_x, dim_y);
    for (const TraceRecord& rec : trace) {
        out += std::to_string(rec.n);
        out += ',' + format_double(rec.coupling_residual);
        out += ',' + format_double(rec.fix_residual_U);
        out += ',' + format_double(rec.fix_residual_T);
        out += ',';
        if (rec.lyapunov) out += format_double(*rec.lyapunov);
        for (std::size_t i = 0; i < dim_x; ++i) out += ',' + format_double(rec.x_snapshot[i]);
        for (std::size_t i = 0; i < dim_y; ++i) out += ',' + format_double(rec.y_snapshot[i]);
        out += '\n';
    }
    return out;
}

/// Write-then-rename so readers never observe a half-written file.
inline void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot open '" + tmp.string() + "' for writing");
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        if (!out) throw Error("write to '" + tmp.string() + "' failed");
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace splitsolve
