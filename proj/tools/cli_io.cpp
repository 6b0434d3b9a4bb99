#include "cli_io.hpp"

#include "fmd/errors.hpp"
#include "fmd/logspace.hpp"

#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace fmd::cli {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ValidationError("cannot open output file: " + path);
    return out;
}

std::string cell(const std::optional<double>& v) {
    return v ? fmt17(*v) : std::string();
}

} // namespace

void write_table_csv(const Table& t, const std::string& path) {
    std::ofstream out = open_out(path);
    out << kCsvHeader << '\n';
    for (const TableRow& r : t.rows)
        out << r.a << ',' << fmt17(r.abscissa) << ',' << cell(r.p_aN) << ','
            << cell(r.q_aNp1) << ',' << cell(r.density) << '\n';
    if (!out)
        throw ValidationError("failed writing output file: " + path);
}

void write_table_json(const Table& t, const std::string& path) {
    nlohmann::ordered_json doc;
    doc["columns"] = {"a", "abscissa", "p_aN", "q_aNp1", "density"};
    doc["log_output"] = t.log_output;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const TableRow& r : t.rows) {
        nlohmann::ordered_json row;
        row["a"] = r.a;
        row["abscissa"] = r.abscissa;
        row["p_aN"] = r.p_aN ? nlohmann::ordered_json(*r.p_aN)
                             : nlohmann::ordered_json(nullptr);
        row["q_aNp1"] = r.q_aNp1 ? nlohmann::ordered_json(*r.q_aNp1)
                                 : nlohmann::ordered_json(nullptr);
        row["density"] = r.density ? nlohmann::ordered_json(*r.density)
                                   : nlohmann::ordered_json(nullptr);
        rows.push_back(std::move(row));
    }
    doc["rows"] = std::move(rows);
    std::ofstream out = open_out(path);
    out << doc.dump(2) << '\n';
    if (!out)
        throw ValidationError("failed writing output file: " + path);
}

void write_table(const Table& t, const std::string& path,
                 const std::string& format) {
    if (format == "csv")
        write_table_csv(t, path);
    else if (format == "json")
        write_table_json(t, path);
    else
        throw ValidationError("unknown format: " + format);
}

namespace {

std::optional<double> parse_cell(const std::string& s, const std::string& path,
                                 size_t line_no) {
    if (s.empty())
        return std::nullopt;
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size())
        throw ValidationError(path + ":" + std::to_string(line_no) +
                              ": malformed numeric field '" + s + "'");
    return v;
}

} // namespace

Table read_table_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ValidationError("cannot open input file: " + path);
    std::string line;
    size_t line_no = 1;
    if (!std::getline(in, line))
        throw ValidationError(path + ":1: empty file");
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    if (line != kCsvHeader)
        throw ValidationError(path + ":1: expected header '" +
                              std::string(kCsvHeader) + "', got '" + line + "'");
    Table t;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string c;
        while (std::getline(ss, c, ','))
            cells.push_back(c);
        if (!line.empty() && line.back() == ',')
            cells.emplace_back();
        if (cells.size() != 5)
            throw ValidationError(path + ":" + std::to_string(line_no) +
                                  ": expected 5 fields, got " +
                                  std::to_string(cells.size()));
        TableRow r;
        char* end = nullptr;
        r.a = std::strtoll(cells[0].c_str(), &end, 10);
        if (end != cells[0].c_str() + cells[0].size())
            throw ValidationError(path + ":" + std::to_string(line_no) +
                                  ": malformed index field '" + cells[0] + "'");
        const auto absc = parse_cell(cells[1], path, line_no);
        if (!absc)
            throw ValidationError(path + ":" + std::to_string(line_no) +
                                  ": abscissa field is required");
        r.abscissa = *absc;
        r.p_aN = parse_cell(cells[2], path, line_no);
        r.q_aNp1 = parse_cell(cells[3], path, line_no);
        r.density = parse_cell(cells[4], path, line_no);
        t.rows.push_back(r);
    }
    return t;
}

MassFunction read_mass_csv(const std::string& path, bool log_input) {
    const Table t = read_table_csv(path);
    if (t.rows.empty())
        throw ValidationError(path + ": no data rows");
    std::vector<double> q;
    q.reserve(t.rows.size());
    for (size_t i = 0; i < t.rows.size(); ++i) {
        if (!t.rows[i].q_aNp1)
            throw ValidationError(path + ":" + std::to_string(i + 2) +
                                  ": q_aNp1 field is required for a mass table");
        q.push_back(*t.rows[i].q_aNp1);
    }
    if (log_input) {
        for (double& v : q)
            if (std::isnan(v))
                throw ValidationError(path + ": NaN log mass component");
        return MassFunction::from_log_unnormalized(std::move(q));
    }
    return MassFunction::from_linear(q);
}

} // namespace fmd::cli
