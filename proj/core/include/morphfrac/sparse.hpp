#pragma once
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

namespace mf {

/// Sparse symmetric operator storing the upper triangle as sorted per-row
/// entry lists. Supports incremental accumulation (bond subtraction) and
/// symmetric mat-vec without forming the lower triangle.
class SparseSym {
  public:
    SparseSym() = default;
    explicit SparseSym(int n) : n_(n), rows_(n) {}

    int dim() const { return n_; }
    void resize_clear(int n) {
        n_ = n;
        rows_.assign(n, {});
    }

    /// Accumulates v at (i,j) and, implicitly, at (j,i).
    void add(int i, int j, double v);

    /// Entry lookup (0 when absent).
    double coeff(int i, int j) const;

    /// y = K x (y overwritten).
    void matvec(std::span<const double> x, std::span<double> y) const;

    std::size_t nnz_upper() const;
    double frobenius_norm() const;
    double max_abs() const;

    /// Largest |this - other| over the union sparsity pattern.
    double max_abs_diff(const SparseSym& other) const;

    /// Debug export, one `row col value` line per stored entry.
    void write_triplets(std::ostream& out) const;

    const std::vector<std::pair<int, double>>& row(int i) const { return rows_[i]; }

  private:
    int n_ = 0;
    std::vector<std::vector<std::pair<int, double>>> rows_;
};

}  // namespace mf
