#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "splitsolve/errors.hpp"

namespace splitsolve {

/// Golden fixture for the bundled example recurrence, kept verbatim at the
/// precision the reference tables print. Schema: n,x,y. Table 1 starts from
/// (10, 15), table 2 from the solution (5, 1.25). The y values of rows
/// 248-250 carry a 2e-9 artifact of the original tabulation; the comparison
/// tolerance below absorbs it.
inline constexpr std::string_view kTable1Csv =
    "n,x,y\n"
    "0,10.00000000,15.00000000\n"
    "1,9.898293685,12.74500000\n"
    "2,9.797736851,10.85982000\n"
    "3,9.698337655,9.283809520\n"
    "248,5.001051418,1.250000002\n"
    "249,5.001012726,1.250000002\n"
    "250,5.000975458,1.250000002\n";

inline constexpr std::string_view kTable2Csv =
    "n,x,y\n"
    "0,5.000000000,1.250000000\n"
    "1,5.000000000,1.250000000\n"
    "2,5.000000000,1.250000000\n"
    "98,5.000000000,1.250000000\n"
    "99,5.000000000,1.250000000\n"
    "100,5.000000000,1.250000000\n";

inline constexpr double kTable1StartX = 10.0;
inline constexpr double kTable1StartY = 15.0;
inline constexpr double kTable2StartX = 5.0;
inline constexpr double kTable2StartY = 1.25;

/// Absolute tolerance for matching the printed digits.
inline constexpr double kTableAbsTol = 5e-9;

struct TableRow {
    std::size_t n;
    double x;
    double y;
};

/// Parse an n,x,y fixture CSV (header line required).
inline std::vector<TableRow> parse_table_csv(std::string_view csv) {
    std::vector<TableRow> rows;
    std::size_t pos = 0;
    bool header = true;
    while (pos < csv.size()) {
        std::size_t eol = csv.find('\n', pos);
        if (eol == std::string_view::npos) eol = csv.size();
        const std::string_view line = csv.substr(pos, eol - pos);
        pos = eol + 1;
        if (line.empty()) continue;
        if (header) {
            if (line != "n,x,y") throw ConfigError("table fixture: expected header n,x,y");
            header = false;
            continue;
        }
        const std::size_t c1 = line.find(',');
        const std::size_t c2 = line.find(',', c1 + 1);
        if (c1 == std::string_view::npos || c2 == std::string_view::npos) {
            throw ConfigError("table fixture: malformed row '" + std::string(line) + "'");
        }
        TableRow row{};
        const std::string n_str(line.substr(0, c1));
        const std::string x_str(line.substr(c1 + 1, c2 - c1 - 1));
        const std::string y_str(line.substr(c2 + 1));
        try {
            row.n = static_cast<std::size_t>(std::stoull(n_str));
            row.x = std::stod(x_str);
            row.y = std::stod(y_str);
        } catch (const std::exception&) {
            throw ConfigError("table fixture: unparsable row '" + std::string(line) + "'");
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace splitsolve
