#include "hyperclust/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "hyperclust/errors.hpp"

namespace hyperclust {

namespace {

// arbitrary label values -> dense 0-based indices, ordered by first appearance
std::vector<int> compact(const std::vector<int>& labels, int& count) {
    std::map<int, int> index;
    std::vector<int> out(labels.size());
    for (size_t i = 0; i < labels.size(); ++i) {
        auto [it, inserted] = index.try_emplace(labels[i], static_cast<int>(index.size()));
        out[i] = it->second;
    }
    count = static_cast<int>(index.size());
    return out;
}

void check_lengths(const std::vector<int>& a, const std::vector<int>& b, const char* who) {
    if (a.empty() || a.size() != b.size())
        throw InvalidInputError(std::string(who) + ": labelings must be non-empty and equal length");
}

}  // namespace

ContingencyTable ContingencyTable::from_labels(const std::vector<int>& truth,
                                               const std::vector<int>& predicted) {
    check_lengths(truth, predicted, "ContingencyTable");
    int c = 0, k = 0;
    const std::vector<int> t = compact(truth, c);
    const std::vector<int> p = compact(predicted, k);
    ContingencyTable table;
    table.counts = Eigen::MatrixXd::Zero(c, k);
    for (size_t i = 0; i < t.size(); ++i) table.counts(t[i], p[i]) += 1.0;
    table.row_sums = table.counts.rowwise().sum();
    table.col_sums = table.counts.colwise().sum();
    table.total = static_cast<double>(t.size());
    return table;
}

double nmi(const std::vector<int>& predicted, const std::vector<int>& truth) {
    check_lengths(predicted, truth, "nmi");
    const ContingencyTable table = ContingencyTable::from_labels(truth, predicted);
    const double m = table.total;

    const bool truth_single = table.counts.rows() == 1;
    const bool pred_single = table.counts.cols() == 1;
    if (truth_single || pred_single) return truth_single && pred_single ? 1.0 : 0.0;

    double mutual = 0.0;
    for (int i = 0; i < table.counts.rows(); ++i) {
        for (int j = 0; j < table.counts.cols(); ++j) {
            const double q = table.counts(i, j);
            if (q == 0.0) continue;
            mutual += (q / m) * std::log((q * m) / (table.row_sums(i) * table.col_sums(j)));
        }
    }
    double h_truth = 0.0, h_pred = 0.0;
    for (int i = 0; i < table.row_sums.size(); ++i)
        h_truth -= (table.row_sums(i) / m) * std::log(table.row_sums(i) / m);
    for (int j = 0; j < table.col_sums.size(); ++j)
        h_pred -= (table.col_sums(j) / m) * std::log(table.col_sums(j) / m);

    const double value = mutual / std::sqrt(h_truth * h_pred);
    return std::clamp(value, 0.0, 1.0);
}

double accuracy(const std::vector<int>& predicted, const std::vector<int>& truth) {
    check_lengths(predicted, truth, "accuracy");
    const ContingencyTable table = ContingencyTable::from_labels(truth, predicted);
    double covered = 0.0;
    for (int j = 0; j < table.counts.cols(); ++j) covered += table.counts.col(j).maxCoeff();
    return covered / table.total;
}

}  // namespace hyperclust
