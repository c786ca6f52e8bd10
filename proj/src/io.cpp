#include "srlk/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace srlk {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur += ch;
        }
    }
    fields.push_back(cur);
    return fields;
}

double parse_double(const std::string& s, const std::string& path) {
    try {
        size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(path + ": cannot parse number '" + s + "'");
    }
}

long parse_long(const std::string& s, const std::string& path) {
    try {
        size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(path + ": cannot parse integer '" + s + "'");
    }
}

std::vector<std::vector<std::string>> read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") continue;
        rows.push_back(split_csv_line(line));
    }
    return rows;
}

}  // namespace

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

Dataset read_dataset_csv(const std::string& path) {
    auto rows = read_csv(path);
    if (rows.empty()) throw std::invalid_argument(path + ": empty dataset file");
    std::vector<std::vector<double>> pts;
    pts.reserve(rows.size());
    for (const auto& row : rows) {
        std::vector<double> p;
        p.reserve(row.size());
        for (const auto& f : row) p.push_back(parse_double(f, path));
        pts.push_back(std::move(p));
    }
    int dim = static_cast<int>(pts[0].size());
    return Dataset(dim, std::move(pts));
}

void write_dataset_csv(const std::string& path, const Dataset& X) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    for (const auto& p : X.points) {
        for (size_t j = 0; j < p.size(); ++j) {
            if (j) out << ',';
            out << fmt_double(p[j]);
        }
        out << '\n';
    }
}

Clustering read_clustering_csv_auto(const std::string& path, int k) {
    auto rows = read_csv(path);
    long max_id = -1;
    for (const auto& row : rows) {
        if (row.size() != 2) throw std::invalid_argument(path + ": expected point_id,block_index rows");
        max_id = std::max(max_id, parse_long(row[0], path));
    }
    if (max_id < 0) throw std::invalid_argument(path + ": empty clustering file");
    return read_clustering_csv(path, static_cast<int>(max_id) + 1, k);
}

Clustering read_clustering_csv(const std::string& path, int n_total, int k) {
    auto rows = read_csv(path);
    std::vector<int> labels(static_cast<size_t>(n_total), Clustering::kExcluded);
    int max_label = -1;
    for (const auto& row : rows) {
        if (row.size() != 2) throw std::invalid_argument(path + ": expected point_id,block_index rows");
        long id = parse_long(row[0], path);
        long block = parse_long(row[1], path);
        if (id < 0 || id >= n_total) throw std::invalid_argument(path + ": point id out of range");
        if (block < 0) throw std::invalid_argument(path + ": negative block index");
        if (labels[static_cast<size_t>(id)] != Clustering::kExcluded)
            throw std::invalid_argument(path + ": duplicate point id");
        labels[static_cast<size_t>(id)] = static_cast<int>(block);
        max_label = std::max(max_label, static_cast<int>(block));
    }
    if (k <= 0) k = max_label + 1;
    if (k < 1) throw std::invalid_argument(path + ": no blocks found");
    return Clustering(k, std::move(labels));
}

void write_clustering_csv(const std::string& path, const Clustering& c) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    for (int i = 0; i < c.size(); ++i)
        if (c.in_domain(i)) out << i << ',' << c.label(i) << '\n';
}

LinearMapping read_mapping_csv(const std::string& path, double bound) {
    auto rows = read_csv(path);
    if (rows.empty()) throw std::invalid_argument(path + ": empty mapping file");
    size_t cols = rows[0].size();
    std::vector<double> entries;
    double max_abs = 0.0;
    for (const auto& row : rows) {
        if (row.size() != cols) throw std::invalid_argument(path + ": ragged matrix");
        for (const auto& f : row) {
            double v = parse_double(f, path);
            max_abs = std::max(max_abs, std::abs(v));
            entries.push_back(v);
        }
    }
    if (bound <= 0.0) bound = std::max(max_abs, 1.0);
    return LinearMapping(static_cast<int>(rows.size()), static_cast<int>(cols), std::move(entries), bound);
}

void write_mapping_csv(const std::string& path, const LinearMapping& f) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    for (int r = 0; r < f.rows; ++r) {
        for (int c = 0; c < f.cols; ++c) {
            if (c) out << ',';
            out << fmt_double(f.entry(r, c));
        }
        out << '\n';
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << content;
}

}  // namespace srlk
