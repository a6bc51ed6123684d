#include "dynsel/dataset.hpp"

#include "dynsel/errors.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace dynsel {

void Dataset::check() const {
    if (labels.size() != features.rows()) throw ValidationError("dataset: labels/features row mismatch");
    if (n_classes < 2) throw ValidationError("dataset: fewer than 2 classes");
    for (int l : labels) {
        if (l < 0 || l >= n_classes) throw ValidationError("dataset: label out of range");
    }
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

bool parse_double(const std::string& s, double& out) {
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last && !s.empty();
}

} // namespace

Dataset load_csv(const std::string& path, bool has_header) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open '" + path + "'");

    Dataset d;
    std::map<std::string, int> label_ids; // encoding by first appearance
    std::string line;
    std::size_t line_no = 0;
    std::size_t n_cols = 0;
    bool header_pending = has_header;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;

        auto fields = split_fields(line);
        if (header_pending) {
            header_pending = false;
            n_cols = fields.size();
            for (std::size_t c = 0; c + 1 < fields.size(); ++c) d.feature_names.push_back(trim(fields[c]));
            continue;
        }
        if (n_cols == 0) n_cols = fields.size();
        if (fields.size() != n_cols)
            throw DataError("'" + path + "': row " + std::to_string(line_no) + " has " +
                            std::to_string(fields.size()) + " columns, expected " + std::to_string(n_cols));
        if (n_cols < 2)
            throw DataError("'" + path + "': row " + std::to_string(line_no) + " has no feature columns");

        std::vector<double> row(n_cols - 1);
        for (std::size_t c = 0; c + 1 < n_cols; ++c) {
            if (!parse_double(trim(fields[c]), row[c]))
                throw DataError("'" + path + "': non-numeric feature at row " + std::to_string(line_no) +
                                " col " + std::to_string(c + 1));
        }
        d.features.append_row(row);

        const std::string key = trim(fields[n_cols - 1]);
        auto [it, inserted] = label_ids.try_emplace(key, static_cast<int>(label_ids.size()));
        if (inserted) it->second = d.n_classes++;
        d.labels.push_back(it->second);
    }

    if (d.n_classes < 2)
        throw DataError("'" + path + "': fewer than 2 classes (" + std::to_string(d.n_classes) + " found)");
    d.check();
    return d;
}

void SplitSpec::check() const {
    if (!(train_frac > 0.0 && dsel_frac > 0.0 && test_frac > 0.0))
        throw ValidationError("split: every fraction must be > 0");
    if (std::abs(train_frac + dsel_frac + test_frac - 1.0) > 1e-9)
        throw ValidationError("split: fractions must sum to 1");
}

SplitResult stratified_split(const Dataset& d, const SplitSpec& spec) {
    spec.check();
    d.check();

    const int M = d.n_classes;
    std::vector<std::vector<std::size_t>> by_class(static_cast<std::size_t>(M));
    for (std::size_t i = 0; i < d.size(); ++i)
        by_class[static_cast<std::size_t>(d.labels[i])].push_back(i);

    for (int c = 0; c < M; ++c) {
        if (by_class[static_cast<std::size_t>(c)].size() < 3)
            throw ValidationError("split: class " + std::to_string(c) + " has fewer than 3 samples");
    }

    const std::array<double, 3> fracs{spec.train_frac, spec.dsel_frac, spec.test_frac};
    std::array<std::vector<std::size_t>, 3> assigned;
    std::array<double, 3> target_running{0.0, 0.0, 0.0};
    std::array<std::size_t, 3> alloc_running{0, 0, 0};

    std::mt19937_64 rng(spec.seed);
    for (int c = 0; c < M; ++c) {
        auto& idx = by_class[static_cast<std::size_t>(c)];
        std::shuffle(idx.begin(), idx.end(), rng);
        const std::size_t n = idx.size();

        std::array<std::size_t, 3> counts{};
        std::array<double, 3> remainder{};
        std::size_t used = 0;
        for (int s = 0; s < 3; ++s) {
            const double quota = fracs[static_cast<std::size_t>(s)] * static_cast<double>(n);
            counts[static_cast<std::size_t>(s)] = static_cast<std::size_t>(std::floor(quota));
            remainder[static_cast<std::size_t>(s)] = quota - std::floor(quota);
            target_running[static_cast<std::size_t>(s)] += quota;
            used += counts[static_cast<std::size_t>(s)];
        }
        // Hand leftover seats to the largest remainders; break remainder ties
        // toward the split currently furthest under its global target.
        std::size_t leftover = n - used;
        std::vector<int> order{0, 1, 2};
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            const auto sa = static_cast<std::size_t>(a), sb = static_cast<std::size_t>(b);
            if (remainder[sa] != remainder[sb]) return remainder[sa] > remainder[sb];
            const double da = target_running[sa] - static_cast<double>(alloc_running[sa] + counts[sa]);
            const double db = target_running[sb] - static_cast<double>(alloc_running[sb] + counts[sb]);
            if (da != db) return da > db;
            return a < b;
        });
        for (std::size_t r = 0; r < leftover; ++r) ++counts[static_cast<std::size_t>(order[r % 3])];

        // Every split must see every class.
        for (int s = 0; s < 3; ++s) {
            while (counts[static_cast<std::size_t>(s)] == 0) {
                int donor = static_cast<int>(std::max_element(counts.begin(), counts.end()) - counts.begin());
                --counts[static_cast<std::size_t>(donor)];
                ++counts[static_cast<std::size_t>(s)];
            }
        }

        std::size_t pos = 0;
        for (int s = 0; s < 3; ++s) {
            const std::size_t take = counts[static_cast<std::size_t>(s)];
            for (std::size_t t = 0; t < take; ++t) assigned[static_cast<std::size_t>(s)].push_back(idx[pos++]);
            alloc_running[static_cast<std::size_t>(s)] += take;
        }
    }

    auto gather = [&](const std::vector<std::size_t>& rows) {
        Dataset out;
        out.n_classes = d.n_classes;
        out.feature_names = d.feature_names;
        std::vector<std::size_t> sorted(rows);
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t r : sorted) {
            out.features.append_row(d.features.row(r));
            out.labels.push_back(d.labels[r]);
        }
        return out;
    };

    return SplitResult{gather(assigned[0]), gather(assigned[1]), gather(assigned[2])};
}

std::vector<double> Standardizer::apply(std::span<const double> x) const {
    std::vector<double> out(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) out[j] = (x[j] - means[j]) / stddevs[j];
    return out;
}

Matrix Standardizer::apply(const Matrix& X) const {
    Matrix out(X.rows(), X.cols());
    for (std::size_t i = 0; i < X.rows(); ++i) {
        auto z = apply(X.row(i));
        out.set_row(i, z);
    }
    return out;
}

Standardizer fit_standardizer(const Matrix& X) {
    if (X.rows() < 2) throw ValidationError("standardizer: needs at least 2 samples");
    const std::size_t d = X.cols();
    Standardizer s;
    s.means.assign(d, 0.0);
    s.stddevs.assign(d, 0.0);
    const double n = static_cast<double>(X.rows());
    for (std::size_t i = 0; i < X.rows(); ++i)
        for (std::size_t j = 0; j < d; ++j) s.means[j] += X(i, j);
    for (std::size_t j = 0; j < d; ++j) s.means[j] /= n;
    for (std::size_t i = 0; i < X.rows(); ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const double c = X(i, j) - s.means[j];
            s.stddevs[j] += c * c;
        }
    for (std::size_t j = 0; j < d; ++j) s.stddevs[j] = std::max(std::sqrt(s.stddevs[j] / n), 1e-9);
    return s;
}

Standardizer fit_standardizer(const Dataset& d) { return fit_standardizer(d.features); }

} // namespace dynsel
