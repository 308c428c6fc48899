#include "qrec/csvio.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace qrec {

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& s) {
    double v = 0.0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw std::runtime_error("bad numeric field: '" + s + "'");
    return v;
}

CsvTable read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    CsvTable table;
    std::string line;
    std::size_t lineno = 0;
    auto split = [](const std::string& l) {
        std::vector<std::string> fields;
        std::string field;
        std::istringstream ss(l);
        while (std::getline(ss, field, ',')) fields.push_back(field);
        if (!l.empty() && l.back() == ',') fields.emplace_back();
        return fields;
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto fields = split(line);
        if (lineno == 1) {
            table.header = std::move(fields);
        } else {
            if (fields.size() != table.header.size())
                throw std::runtime_error(path + ": row " + std::to_string(lineno) + " has " +
                                         std::to_string(fields.size()) + " fields, expected " +
                                         std::to_string(table.header.size()));
            table.rows.push_back(std::move(fields));
        }
    }
    if (table.header.empty()) throw std::runtime_error(path + ": missing header");
    return table;
}

void write_csv(const std::string& path, const CsvTable& table) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    auto emit = [&out](const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i) out << ',';
            out << fields[i];
        }
        out << '\n';
    };
    emit(table.header);
    for (const auto& row : table.rows) emit(row);
    if (!out) throw std::runtime_error("write failed: " + path);
}

void write_points_csv(const std::string& path, const std::vector<PlanarPoint>& pts) {
    CsvTable table;
    table.header = {"t", "x"};
    table.rows.reserve(pts.size());
    for (const auto& p : pts) table.rows.push_back({format_double(p.t), format_double(p.x)});
    write_csv(path, table);
}

std::vector<PlanarPoint> read_points_csv(const std::string& path) {
    CsvTable table = read_csv(path);
    if (table.header != std::vector<std::string>{"t", "x"})
        throw std::runtime_error(path + ": expected header t,x");
    std::vector<PlanarPoint> pts;
    pts.reserve(table.rows.size());
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        try {
            pts.push_back({parse_double(table.rows[i][0]), parse_double(table.rows[i][1])});
        } catch (const std::exception& e) {
            throw std::runtime_error(path + ": row " + std::to_string(i + 2) + ": " + e.what());
        }
    }
    return pts;
}

void write_ground_csv(const std::string& path, const std::vector<double>& us) {
    CsvTable table;
    table.header = {"u"};
    table.rows.reserve(us.size());
    for (double u : us) table.rows.push_back({format_double(u)});
    write_csv(path, table);
}

std::vector<double> read_ground_csv(const std::string& path) {
    CsvTable table = read_csv(path);
    if (table.header != std::vector<std::string>{"u"})
        throw std::runtime_error(path + ": expected header u");
    std::vector<double> us;
    us.reserve(table.rows.size());
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        try {
            us.push_back(parse_double(table.rows[i][0]));
        } catch (const std::exception& e) {
            throw std::runtime_error(path + ": row " + std::to_string(i + 2) + ": " + e.what());
        }
    }
    return us;
}

}  // namespace qrec
