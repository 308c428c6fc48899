#pragma once

// CSV round trip for the datasets the tools exchange. Doubles are written
// with std::to_chars shortest form, which parses back to the same bits.

#include <string>
#include <vector>

#include "qrec/pointset.hpp"

namespace qrec {

std::string format_double(double v);
double parse_double(const std::string& s);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

// Strict reader: every row must have the same arity as the header.
// Throws std::runtime_error with a 1-based row number on malformed input.
CsvTable read_csv(const std::string& path);
void write_csv(const std::string& path, const CsvTable& table);

// Dataset-specific helpers. Schemas:
//   points     t,x
//   ground     u
//   path       jump_time,value
//   lifetimes  s,x
void write_points_csv(const std::string& path, const std::vector<PlanarPoint>& pts);
std::vector<PlanarPoint> read_points_csv(const std::string& path);
void write_ground_csv(const std::string& path, const std::vector<double>& us);
std::vector<double> read_ground_csv(const std::string& path);

}  // namespace qrec
