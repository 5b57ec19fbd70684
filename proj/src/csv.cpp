#include "gdr/csv.hpp"

#include "gdr/errors.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace gdr::csv {
namespace {

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream stream(line);
    while (std::getline(stream, field, ',')) {
        fields.push_back(field);
    }
    if (!line.empty() && line.back() == ',') {
        fields.emplace_back();
    }
    return fields;
}

double parse_real(const std::string& text, std::size_t line_no) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw InvalidInput("csv line " + std::to_string(line_no) + ": bad number '" + text + "'");
    }
    return value;
}

int parse_int(const std::string& text, std::size_t line_no) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw InvalidInput("csv line " + std::to_string(line_no) + ": bad integer '" + text + "'");
    }
    return value;
}

GraphName parse_alg(const std::string& text, std::size_t line_no) {
    const auto name = parse_graph_name(text);
    if (!name || *name == GraphName::custom) {
        throw InvalidInput("csv line " + std::to_string(line_no) + ": unknown algorithm '" + text + "'");
    }
    return *name;
}

/// Calls `row(fields, line_no)` for every data line after checking the header.
template <class RowFn>
void read_rows(std::istream& in, const char* header, std::size_t columns, RowFn&& row) {
    std::string line;
    if (!std::getline(in, line)) {
        throw InvalidInput("csv: empty input");
    }
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    if (line != header) {
        throw InvalidInput("csv: expected header '" + std::string(header) + "', got '" + line + "'");
    }
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        const auto fields = split(line);
        if (fields.size() != columns) {
            throw InvalidInput("csv line " + std::to_string(line_no) + ": expected " +
                               std::to_string(columns) + " fields");
        }
        row(fields, line_no);
    }
}

}  // namespace

std::string format_real(double value) {
    char buffer[64];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value,
                                         std::chars_format::general, 17);
    return std::string(buffer, ec == std::errc() ? ptr : buffer);
}

void write_sweep(std::ostream& out, const std::vector<SweepRecord>& records) {
    out << kSweepHeader << '\n';
    for (const auto& r : records) {
        out << to_string(r.algorithm) << ',' << r.n << ',' << r.instance_id << ',' << format_real(r.theta)
            << ',' << format_real(r.mean_iterations) << ',' << format_real(r.tau) << ','
            << format_real(r.converged_fraction) << '\n';
    }
}

void write_compare(std::ostream& out, const std::vector<CompareRecord>& records) {
    out << kCompareHeader << '\n';
    for (const auto& r : records) {
        out << to_string(r.algorithm) << ',' << r.n << ',' << r.instance_id << ','
            << format_real(r.pierra_angle_rad) << ',' << format_real(r.theta_used) << ','
            << format_real(r.mean_iterations) << '\n';
    }
}

void write_aggregate(std::ostream& out, const std::vector<AggregateRecord>& records) {
    out << kAggregateHeader << '\n';
    for (const auto& r : records) {
        out << to_string(r.algorithm) << ',' << r.n << ',' << format_real(r.mean_iterations) << '\n';
    }
}

void write_best_theta(std::ostream& out, const std::vector<BestTheta>& records) {
    out << kBestThetaHeader << '\n';
    for (const auto& r : records) {
        out << to_string(r.algorithm) << ',' << r.n << ',' << format_real(r.theta) << ','
            << format_real(r.median_iterations) << '\n';
    }
}

void write_spiral(std::ostream& out, const SpiralDemo& demo) {
    out << kSpiralHeader << '\n';
    for (const auto& pt : demo.points) {
        out << pt.k << ',' << format_real(pt.v.x()) << ',' << format_real(pt.v.y()) << ','
            << format_real(pt.x1.x()) << ',' << format_real(pt.x1.y()) << ',' << format_real(pt.x2.x())
            << ',' << format_real(pt.x2.y()) << ',' << format_real(pt.dist_v) << ','
            << format_real(pt.dist_x) << '\n';
    }
}

std::vector<SweepRecord> read_sweep(std::istream& in) {
    std::vector<SweepRecord> records;
    read_rows(in, kSweepHeader, 7, [&](const std::vector<std::string>& f, std::size_t line) {
        records.push_back({parse_alg(f[0], line), parse_int(f[1], line), parse_int(f[2], line),
                           parse_real(f[3], line), parse_real(f[4], line), parse_real(f[5], line),
                           parse_real(f[6], line)});
    });
    return records;
}

std::vector<CompareRecord> read_compare(std::istream& in) {
    std::vector<CompareRecord> records;
    read_rows(in, kCompareHeader, 6, [&](const std::vector<std::string>& f, std::size_t line) {
        records.push_back({parse_alg(f[0], line), parse_int(f[1], line), parse_int(f[2], line),
                           parse_real(f[3], line), parse_real(f[4], line), parse_real(f[5], line)});
    });
    return records;
}

std::vector<BestTheta> read_best_theta(std::istream& in) {
    std::vector<BestTheta> records;
    read_rows(in, kBestThetaHeader, 4, [&](const std::vector<std::string>& f, std::size_t line) {
        records.push_back({parse_alg(f[0], line), parse_int(f[1], line), parse_real(f[2], line),
                           parse_real(f[3], line)});
    });
    return records;
}

}  // namespace gdr::csv
