#include "morphfrac/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace mf {

void SparseSym::add(int i, int j, double v) {
    if (i > j) std::swap(i, j);
    auto& row = rows_[i];
    auto it = std::lower_bound(row.begin(), row.end(), j,
                               [](const auto& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == j)
        it->second += v;
    else
        row.insert(it, {j, v});
}

double SparseSym::coeff(int i, int j) const {
    if (i > j) std::swap(i, j);
    const auto& row = rows_[i];
    auto it = std::lower_bound(row.begin(), row.end(), j,
                               [](const auto& e, int col) { return e.first < col; });
    return (it != row.end() && it->first == j) ? it->second : 0.0;
}

void SparseSym::matvec(std::span<const double> x, std::span<double> y) const {
    std::fill(y.begin(), y.end(), 0.0);
    for (int i = 0; i < n_; ++i) {
        double yi = 0.0;
        const double xi = x[i];
        for (const auto& [j, v] : rows_[i]) {
            yi += v * x[j];
            if (j != i) y[j] += v * xi;
        }
        y[i] += yi;
    }
}

std::size_t SparseSym::nnz_upper() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
}

double SparseSym::frobenius_norm() const {
    double s = 0.0;
    for (int i = 0; i < n_; ++i) {
        for (const auto& [j, v] : rows_[i]) s += (j == i ? 1.0 : 2.0) * v * v;
    }
    return std::sqrt(s);
}

double SparseSym::max_abs() const {
    double m = 0.0;
    for (const auto& r : rows_)
        for (const auto& [j, v] : r) m = std::max(m, std::abs(v));
    return m;
}

double SparseSym::max_abs_diff(const SparseSym& other) const {
    double m = 0.0;
    for (int i = 0; i < n_; ++i) {
        for (const auto& [j, v] : rows_[i]) m = std::max(m, std::abs(v - other.coeff(i, j)));
        for (const auto& [j, v] : other.rows_[i]) m = std::max(m, std::abs(v - coeff(i, j)));
    }
    return m;
}

void SparseSym::write_triplets(std::ostream& out) const {
    for (int i = 0; i < n_; ++i)
        for (const auto& [j, v] : rows_[i]) out << i << " " << j << " " << v << "\n";
}

}  // namespace mf
