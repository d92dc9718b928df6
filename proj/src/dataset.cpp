#include "rsdca/dataset.hpp"

#include <zlib.h>

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace rsdca {

double RowView::dot(const Vec& w) const {
  if (w.size() != dim_)
    throw std::invalid_argument("RowView::dot: dimension mismatch (" +
                                std::to_string(w.size()) + " vs " +
                                std::to_string(dim_) + ")");
  if (dense_) return Eigen::Map<const Vec>(dense_, dim_).dot(w);
  double s = 0.0;
  for (size_t k = 0; k < idx_.size(); ++k) s += val_[k] * w[idx_[k]];
  return s;
}

void RowView::add_scaled(double c, Vec& out) const {
  if (out.size() != dim_)
    throw std::invalid_argument("RowView::add_scaled: dimension mismatch");
  if (dense_) {
    out += c * Eigen::Map<const Vec>(dense_, dim_);
    return;
  }
  for (size_t k = 0; k < idx_.size(); ++k) out[idx_[k]] += c * val_[k];
}

double RowView::squared_norm() const {
  if (dense_) return Eigen::Map<const Vec>(dense_, dim_).squaredNorm();
  double s = 0.0;
  for (double v : val_) s += v * v;
  return s;
}

Vec RowView::to_dense() const {
  if (dense_) return Eigen::Map<const Vec>(dense_, dim_);
  Vec out = Vec::Zero(dim_);
  for (size_t k = 0; k < idx_.size(); ++k) out[idx_[k]] = val_[k];
  return out;
}

Dataset Dataset::sparse(std::vector<std::vector<int32_t>> indices,
                        std::vector<std::vector<double>> values, Vec labels,
                        int dim) {
  if (indices.size() != values.size())
    throw std::invalid_argument("Dataset::sparse: row count mismatch");
  if (static_cast<Eigen::Index>(indices.size()) != labels.size())
    throw std::invalid_argument("Dataset::sparse: label count mismatch");
  Dataset d;
  d.n_ = static_cast<int>(indices.size());
  d.p_ = dim;
  d.y_ = std::move(labels);
  d.ptr_.reserve(d.n_ + 1);
  d.ptr_.push_back(0);
  for (int i = 0; i < d.n_; ++i) {
    const auto& ix = indices[i];
    const auto& vx = values[i];
    if (ix.size() != vx.size())
      throw std::invalid_argument("Dataset::sparse: ragged row " +
                                  std::to_string(i));
    int32_t prev = -1;
    for (size_t k = 0; k < ix.size(); ++k) {
      if (ix[k] <= prev)
        throw std::invalid_argument(
            "Dataset::sparse: indices not strictly increasing in row " +
            std::to_string(i));
      if (ix[k] >= dim)
        throw std::invalid_argument("Dataset::sparse: index " +
                                    std::to_string(ix[k]) +
                                    " out of range in row " + std::to_string(i));
      prev = ix[k];
      if (vx[k] == 0.0) continue;
      d.idx_.push_back(ix[k]);
      d.val_.push_back(vx[k]);
    }
    d.ptr_.push_back(static_cast<int64_t>(d.idx_.size()));
  }
  return d;
}

Dataset Dataset::dense(RowMajorMatrix x, Vec labels) {
  if (x.rows() != labels.size())
    throw std::invalid_argument("Dataset::dense: label count mismatch");
  Dataset d;
  d.is_dense_ = true;
  d.n_ = static_cast<int>(x.rows());
  d.p_ = static_cast<int>(x.cols());
  d.dense_ = std::move(x);
  d.y_ = std::move(labels);
  return d;
}

RowView Dataset::row(int i) const {
  if (i < 0 || i >= n_)
    throw std::out_of_range("Dataset::row: index " + std::to_string(i));
  if (is_dense_)
    return RowView(dense_.data() + static_cast<int64_t>(i) * p_, p_);
  auto b = ptr_[i], e = ptr_[i + 1];
  return RowView(std::span<const int32_t>(idx_.data() + b, e - b),
                 std::span<const double>(val_.data() + b, e - b), p_);
}

Vec Dataset::column_squared_norms() const {
  Vec out = Vec::Zero(p_);
  if (is_dense_) {
    out = dense_.array().square().colwise().sum();
    return out;
  }
  for (size_t k = 0; k < idx_.size(); ++k) out[idx_[k]] += val_[k] * val_[k];
  return out;
}

Dataset Dataset::scale_columns(const Vec& factors) const {
  if (factors.size() != p_)
    throw std::invalid_argument("scale_columns: factor length mismatch");
  Dataset d = *this;
  if (is_dense_) {
    d.dense_ = dense_ * factors.asDiagonal();
  } else {
    for (size_t k = 0; k < d.idx_.size(); ++k) d.val_[k] *= factors[d.idx_[k]];
  }
  return d;
}

Vec Dataset::transpose_apply(const Vec& r) const {
  if (r.size() != n_)
    throw std::invalid_argument("transpose_apply: length mismatch");
  if (is_dense_) return dense_.transpose() * r;
  Vec out = Vec::Zero(p_);
  for (int i = 0; i < n_; ++i) {
    for (int64_t k = ptr_[i]; k < ptr_[i + 1]; ++k)
      out[idx_[k]] += val_[k] * r[i];
  }
  return out;
}

namespace {

[[noreturn]] void parse_fail(int line_no, const std::string& why) {
  throw std::runtime_error("libsvm parse error at line " +
                           std::to_string(line_no) + ": " + why);
}

}  // namespace

Dataset parse_libsvm(std::istream& in, std::optional<int> dim_override) {
  std::vector<std::vector<int32_t>> rows_idx;
  std::vector<std::vector<double>> rows_val;
  std::vector<double> labels;
  int max_index = 0;  // 1-based
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const char* s = line.c_str();
    const char* end = s + line.size();
    while (s < end && std::isspace(static_cast<unsigned char>(*s))) ++s;
    if (s == end) continue;

    double label;
    auto r = std::from_chars(s, end, label);
    if (r.ec != std::errc{}) parse_fail(line_no, "bad label");
    s = r.ptr;

    std::vector<int32_t> ix;
    std::vector<double> vx;
    int32_t prev = 0;  // 1-based indices must ascend
    while (true) {
      while (s < end && std::isspace(static_cast<unsigned char>(*s))) ++s;
      if (s == end) break;
      int32_t index;
      auto ri = std::from_chars(s, end, index);
      if (ri.ec != std::errc{} || ri.ptr == end || *ri.ptr != ':')
        parse_fail(line_no, "expected <index>:<value>");
      if (index < 1) parse_fail(line_no, "indices are 1-based");
      if (index <= prev) parse_fail(line_no, "indices must be ascending");
      s = ri.ptr + 1;
      double value;
      auto rv = std::from_chars(s, end, value);
      if (rv.ec != std::errc{}) parse_fail(line_no, "bad value");
      s = rv.ptr;
      if (s < end && !std::isspace(static_cast<unsigned char>(*s)))
        parse_fail(line_no, "trailing garbage after value");
      prev = index;
      max_index = std::max(max_index, index);
      if (value != 0.0) {
        ix.push_back(index - 1);
        vx.push_back(value);
      }
    }
    rows_idx.push_back(std::move(ix));
    rows_val.push_back(std::move(vx));
    labels.push_back(label);
  }
  int dim = dim_override.value_or(max_index);
  if (dim < max_index)
    throw std::runtime_error("libsvm: dim override " + std::to_string(dim) +
                             " smaller than max index " +
                             std::to_string(max_index));
  Vec y = Eigen::Map<const Vec>(labels.data(), labels.size());
  return Dataset::sparse(std::move(rows_idx), std::move(rows_val),
                         std::move(y), dim);
}

Dataset parse_libsvm(const std::string& text, std::optional<int> dim_override) {
  std::istringstream in(text);
  return parse_libsvm(in, dim_override);
}

Dataset load_libsvm(const std::string& path, std::optional<int> dim_override) {
  std::ifstream probe(path, std::ios::binary);
  if (!probe) throw std::runtime_error("cannot open " + path);
  unsigned char magic[2] = {0, 0};
  probe.read(reinterpret_cast<char*>(magic), 2);
  probe.close();
  if (magic[0] == 0x1f && magic[1] == 0x8b) {
    gzFile gz = gzopen(path.c_str(), "rb");
    if (!gz) throw std::runtime_error("cannot gzopen " + path);
    std::string text;
    char buf[1 << 16];
    int got;
    while ((got = gzread(gz, buf, sizeof(buf))) > 0) text.append(buf, got);
    bool ok = (got == 0);
    gzclose(gz);
    if (!ok) throw std::runtime_error("gzip read failure on " + path);
    return parse_libsvm(text, dim_override);
  }
  std::ifstream in(path);
  return parse_libsvm(in, dim_override);
}

void write_libsvm(const Dataset& d, std::ostream& out) {
  char buf[64];
  for (int i = 0; i < d.n(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g", d.label(i));
    out << buf;
    RowView r = d.row(i);
    if (r.is_dense()) {
      for (int j = 0; j < d.p(); ++j) {
        double v = r.dense_data()[j];
        if (v == 0.0) continue;
        std::snprintf(buf, sizeof(buf), " %d:%.17g", j + 1, v);
        out << buf;
      }
    } else {
      auto ix = r.indices();
      auto vx = r.values();
      for (size_t k = 0; k < ix.size(); ++k) {
        std::snprintf(buf, sizeof(buf), " %d:%.17g", ix[k] + 1, vx[k]);
        out << buf;
      }
    }
    out << '\n';
  }
}

std::string to_libsvm(const Dataset& d) {
  std::ostringstream out;
  write_libsvm(d, out);
  return out.str();
}

ColumnScaling normalize_columns(const Dataset& d) {
  if (d.n() < 1) throw std::invalid_argument("normalize_columns: empty dataset");
  Vec sq = d.column_squared_norms();
  Vec factors(d.p());
  const double root_n = std::sqrt(static_cast<double>(d.n()));
  for (int j = 0; j < d.p(); ++j) {
    double norm = std::sqrt(sq[j]);
    factors[j] = (norm > root_n) ? root_n / norm : 1.0;
  }
  return {d.scale_columns(factors), std::move(factors)};
}

}  // namespace rsdca
