#ifndef FRECHET_JL_CSV_IO_HPP
#define FRECHET_JL_CSV_IO_HPP

// Curve CSV: one vertex per row, comma separated, no header.
// A curve set is a directory of *.csv files in lexicographic filename order.

#include <algorithm>
#include <array>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "frechet_jl/curve.hpp"

namespace frechet_jl {

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

inline double parse_real(std::string_view field, const std::string& source, std::size_t line,
                         std::size_t column) {
    field = trim(field);
    if (!field.empty() && field.front() == '+') field.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
        throw ParseError(source, line, column, "not a number: '" + std::string(field) + "'");
    return value;
}

}  // namespace detail

/// Shortest text that reads back to the same double (at most 17 significant digits).
inline std::string format_real(double value) {
    std::array<char, 32> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), ptr);
}

inline Curve parse_curve_csv(std::istream& in, const std::string& source = "<stream>") {
    std::vector<double> coords;
    std::size_t dim = 0;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view row = detail::trim(line);
        if (row.empty()) continue;
        std::size_t fields = 0;
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = row.find(',', start);
            const auto field = row.substr(start, comma == std::string_view::npos ? row.npos : comma - start);
            coords.push_back(detail::parse_real(field, source, line_no, fields + 1));
            ++fields;
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        if (dim == 0) {
            dim = fields;
        } else if (fields != dim) {
            throw DimensionMismatch(dim, fields);
        }
    }
    if (coords.empty()) throw EmptyCurve();
    return Curve::from_flat(dim, std::move(coords));
}

inline Curve read_curve_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    return parse_curve_csv(in, path.string());
}

inline void write_curve_csv(std::ostream& out, const Curve& c) {
    for (std::size_t i = 0; i < c.size(); ++i) {
        const auto v = c.vertex(i);
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (k) out << ',';
            out << format_real(v[k]);
        }
        out << '\n';
    }
}

inline void write_curve_csv(const Curve& c, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path.string());
    write_curve_csv(out, c);
    if (!out) throw IoError("write failed: " + path.string());
}

/// Swaps the roles of vertices and coordinates (file columns become vertices).
inline Curve transpose(const Curve& c) {
    const std::size_t m = c.size();
    const std::size_t d = c.dimension();
    std::vector<double> coords(m * d);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < d; ++k) coords[k * m + i] = c.vertex(i)[k];
    return Curve::from_flat(m, std::move(coords));
}

inline CurveSet read_curveset_dir(const std::filesystem::path& dir, bool transposed = false) {
    std::error_code ec;
    if (!std::filesystem::is_directory(dir, ec)) throw IoError("not a directory: " + dir.string());
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
        if (entry.is_regular_file() && entry.path().extension() == ".csv") files.push_back(entry.path());
    }
    if (ec) throw IoError("cannot list " + dir.string() + ": " + ec.message());
    std::sort(files.begin(), files.end(),
              [](const auto& a, const auto& b) { return a.filename().string() < b.filename().string(); });

    std::vector<Curve> curves;
    std::vector<std::string> labels;
    for (const auto& f : files) {
        auto c = read_curve_csv(f);
        curves.push_back(transposed ? transpose(c) : std::move(c));
        labels.push_back(f.filename().string());
    }
    return CurveSet(std::move(curves), std::move(labels));
}

/// Writes each curve as DIR/<label> (".csv" appended when missing).
inline void write_curveset_dir(const CurveSet& set, const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
    for (std::size_t i = 0; i < set.size(); ++i) {
        std::string name = set.label(i);
        if (!name.ends_with(".csv")) name += ".csv";
        write_curve_csv(set[i], dir / name);
    }
}

}  // namespace frechet_jl

#endif
