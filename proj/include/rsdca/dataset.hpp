#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rsdca {

using Vec = Eigen::VectorXd;
using RowMajorMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// View of one row of the design matrix. Cheap to copy; points into the
// owning Dataset, which must outlive it.
class RowView {
 public:
  RowView(std::span<const int32_t> idx, std::span<const double> val, int dim)
      : idx_(idx), val_(val), dense_(nullptr), dim_(dim) {}
  RowView(const double* dense, int dim) : dense_(dense), dim_(dim) {}

  int dim() const { return dim_; }
  bool is_dense() const { return dense_ != nullptr; }
  int nnz() const { return dense_ ? dim_ : static_cast<int>(idx_.size()); }

  std::span<const int32_t> indices() const { return idx_; }
  std::span<const double> values() const { return val_; }
  const double* dense_data() const { return dense_; }

  // Inner product with a dense vector of matching dimension.
  double dot(const Vec& w) const;

  // out += c * x
  void add_scaled(double c, Vec& out) const;

  double squared_norm() const;

  // Materializes the row as a dense vector.
  Vec to_dense() const;

 private:
  std::span<const int32_t> idx_;
  std::span<const double> val_;
  const double* dense_;
  int dim_;
};

// Immutable sample matrix plus responses. Rows are uniformly sparse (CSR)
// or uniformly dense; the two storages never mix within one Dataset.
class Dataset {
 public:
  Dataset() = default;

  // Sparse construction. Each row is (indices, values) with strictly
  // increasing 0-based indices; stored zeros are dropped.
  static Dataset sparse(std::vector<std::vector<int32_t>> indices,
                        std::vector<std::vector<double>> values,
                        Vec labels, int dim);

  static Dataset dense(RowMajorMatrix x, Vec labels);

  int n() const { return n_; }
  int p() const { return p_; }
  bool is_sparse() const { return !is_dense_; }

  RowView row(int i) const;
  double label(int i) const { return y_[i]; }
  const Vec& labels() const { return y_; }
  const RowMajorMatrix& dense_matrix() const { return dense_; }

  // ||X_j||_2^2 per column.
  Vec column_squared_norms() const;

  // Returns a copy with every column scaled by the given factors.
  Dataset scale_columns(const Vec& factors) const;

  // X^T r for a dense vector r of length n.
  Vec transpose_apply(const Vec& r) const;

 private:
  bool is_dense_ = false;
  std::vector<int64_t> ptr_;  // CSR row pointers, size n+1
  std::vector<int32_t> idx_;
  std::vector<double> val_;
  RowMajorMatrix dense_;  // one sample per row
  Vec y_;
  int n_ = 0;
  int p_ = 0;
};

// Parses LIBSVM text: `<label> <index>:<value> ...` per nonempty line,
// 1-based strictly ascending indices. Feature count defaults to the largest
// index seen unless dim_override is given. Malformed input throws
// std::runtime_error naming the offending line.
Dataset parse_libsvm(std::istream& in,
                     std::optional<int> dim_override = std::nullopt);
Dataset parse_libsvm(const std::string& text,
                     std::optional<int> dim_override = std::nullopt);

// Reads a LIBSVM file, transparently gunzipping when the gzip magic bytes
// are present.
Dataset load_libsvm(const std::string& path,
                    std::optional<int> dim_override = std::nullopt);

void write_libsvm(const Dataset& d, std::ostream& out);
std::string to_libsvm(const Dataset& d);

struct ColumnScaling {
  Dataset data;
  Vec factors;  // multiplier applied to each column
};

// Rescales columns so that ||X_j||_2 / sqrt(n) <= 1. Columns already within
// the bound (and all-zero columns) are left unchanged, factor 1.
ColumnScaling normalize_columns(const Dataset& d);

}  // namespace rsdca
