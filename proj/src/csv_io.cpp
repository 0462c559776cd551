#include "hyperclust/csv_io.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "hyperclust/errors.hpp"

namespace hyperclust {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

std::string strip(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

bool parse_double(const std::string& s, double& out) {
    const std::string t = strip(s);
    if (t.empty()) return false;
    size_t consumed = 0;
    try {
        out = std::stod(t, &consumed);
    } catch (const std::exception&) {
        return false;
    }
    return consumed == t.size();
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

Dataset load_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open '" + path + "'");

    std::string line;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header;
    int line_no = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (strip(line).empty()) continue;
        auto fields = split_fields(line);
        if (line_no == 1) {
            double probe;
            if (!parse_double(fields.front(), probe)) {
                header = fields;
                saw_header = true;
                continue;
            }
        }
        rows.push_back(std::move(fields));
    }
    if (rows.empty()) throw DataError("'" + path + "': no data rows");

    const size_t arity = saw_header ? header.size() : rows.front().size();
    const bool labeled = saw_header && strip(header.back()) == "label";
    const size_t feature_count = labeled ? arity - 1 : arity;
    if (feature_count < 1) throw DataError("'" + path + "': no feature columns");

    Eigen::MatrixXd features(static_cast<int>(rows.size()), static_cast<int>(feature_count));
    std::vector<int> labels;
    std::map<std::string, int> label_index;

    for (size_t r = 0; r < rows.size(); ++r) {
        const int data_line = static_cast<int>(r) + (saw_header ? 2 : 1);
        if (rows[r].size() != arity)
            throw DataError("'" + path + "' line " + std::to_string(data_line) + ": expected " +
                            std::to_string(arity) + " fields, got " + std::to_string(rows[r].size()));
        for (size_t c = 0; c < feature_count; ++c) {
            double v;
            if (!parse_double(rows[r][c], v))
                throw DataError("'" + path + "' line " + std::to_string(data_line) +
                                ": non-numeric feature '" + rows[r][c] + "'");
            features(static_cast<int>(r), static_cast<int>(c)) = v;
        }
        if (labeled) {
            const std::string key = strip(rows[r].back());
            auto [it, inserted] = label_index.try_emplace(key, static_cast<int>(label_index.size()));
            labels.push_back(it->second);
        }
    }
    if (labeled) return Dataset(std::move(features), std::move(labels));
    return Dataset(std::move(features));
}

void save_csv(const Dataset& dataset, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write '" + path + "'");
    for (int c = 0; c < dataset.dim(); ++c) {
        if (c) out << ',';
        out << 'f' << c;
    }
    if (dataset.labels) out << ",label";
    out << '\n';
    for (int r = 0; r < dataset.size(); ++r) {
        for (int c = 0; c < dataset.dim(); ++c) {
            if (c) out << ',';
            out << format_double(dataset.features(r, c));
        }
        if (dataset.labels) out << ',' << (*dataset.labels)[r];
        out << '\n';
    }
    if (!out) throw DataError("write failed for '" + path + "'");
}

}  // namespace hyperclust
