#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "tropt/errors.hpp"
#include "tropt/semifield.hpp"

namespace tropt {

template <class SF>
class Row;
template <class SF>
class Mat;

// Column vector over the semifield.
template <class SF>
class Vec {
 public:
  using scalar = Scalar<SF>;

  Vec() = default;
  explicit Vec(std::size_t n) : e_(n) {}
  Vec(std::initializer_list<scalar> entries) : e_(entries) {}
  explicit Vec(std::vector<scalar> entries) : e_(std::move(entries)) {}

  std::size_t size() const { return e_.size(); }
  scalar& operator[](std::size_t i) { return e_[i]; }
  const scalar& operator[](std::size_t i) const { return e_[i]; }

  friend bool operator==(const Vec& a, const Vec& b) { return a.e_ == b.e_; }

  friend Vec operator+(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) {
      throw DimensionMismatch("vector sizes " + std::to_string(a.size()) +
                              " and " + std::to_string(b.size()));
    }
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
  }

  friend Vec operator*(const scalar& c, const Vec& x) {
    Vec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = c * x[i];
    return r;
  }
  friend Vec operator*(const Vec& x, const scalar& c) { return c * x; }

  friend std::ostream& operator<<(std::ostream& os, const Vec& x) {
    os << "(";
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (i > 0) os << ", ";
      os << x[i];
    }
    return os << ")";
  }

 private:
  std::vector<scalar> e_;
};

// Row vector; the result type of conjugate transposition of a Vec.
template <class SF>
class Row {
 public:
  using scalar = Scalar<SF>;

  Row() = default;
  explicit Row(std::size_t n) : e_(n) {}
  Row(std::initializer_list<scalar> entries) : e_(entries) {}
  explicit Row(std::vector<scalar> entries) : e_(std::move(entries)) {}

  std::size_t size() const { return e_.size(); }
  scalar& operator[](std::size_t i) { return e_[i]; }
  const scalar& operator[](std::size_t i) const { return e_[i]; }

  friend bool operator==(const Row& a, const Row& b) { return a.e_ == b.e_; }

  friend Row operator+(const Row& a, const Row& b) {
    if (a.size() != b.size()) {
      throw DimensionMismatch("row sizes " + std::to_string(a.size()) +
                              " and " + std::to_string(b.size()));
    }
    Row r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
  }

  friend Row operator*(const scalar& c, const Row& x) {
    Row r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = c * x[i];
    return r;
  }
  friend Row operator*(const Row& x, const scalar& c) { return c * x; }

  friend std::ostream& operator<<(std::ostream& os, const Row& x) {
    os << "(";
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (i > 0) os << ", ";
      os << x[i];
    }
    return os << ")";
  }

 private:
  std::vector<scalar> e_;
};

// Dense matrix, row-major.
template <class SF>
class Mat {
 public:
  using scalar = Scalar<SF>;

  Mat() = default;
  Mat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}
  Mat(std::initializer_list<std::initializer_list<scalar>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    e_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) {
        throw DimensionMismatch("ragged matrix initializer");
      }
      e_.insert(e_.end(), row.begin(), row.end());
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  scalar& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const scalar& operator()(std::size_t i, std::size_t j) const {
    return e_[i * cols_ + j];
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

  friend Mat operator+(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
      throw DimensionMismatch("matrix shapes " + shape(a) + " and " + shape(b));
    }
    Mat r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
    return r;
  }

  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) {
      throw DimensionMismatch("matrix shapes " + shape(a) + " and " + shape(b));
    }
    Mat r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const scalar& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          r(i, j) += aik * b(k, j);
        }
      }
    }
    return r;
  }

  friend Vec<SF> operator*(const Mat& a, const Vec<SF>& x) {
    if (a.cols_ != x.size()) {
      throw DimensionMismatch("matrix shape " + shape(a) + " times vector " +
                              std::to_string(x.size()));
    }
    Vec<SF> r(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t j = 0; j < a.cols_; ++j) r[i] += a(i, j) * x[j];
    }
    return r;
  }

  friend Row<SF> operator*(const Row<SF>& y, const Mat& a) {
    if (y.size() != a.rows_) {
      throw DimensionMismatch("row " + std::to_string(y.size()) +
                              " times matrix shape " + shape(a));
    }
    Row<SF> r(a.cols_);
    for (std::size_t j = 0; j < a.cols_; ++j) {
      for (std::size_t i = 0; i < a.rows_; ++i) r[j] += y[i] * a(i, j);
    }
    return r;
  }

  friend Mat operator*(const scalar& c, const Mat& a) {
    Mat r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = c * a.e_[i];
    return r;
  }
  friend Mat operator*(const Mat& a, const scalar& c) { return c * a; }

  friend std::ostream& operator<<(std::ostream& os, const Mat& a) {
    for (std::size_t i = 0; i < a.rows_; ++i) {
      os << (i == 0 ? "[" : " ");
      for (std::size_t j = 0; j < a.cols_; ++j) {
        if (j > 0) os << "  ";
        os << a(i, j);
      }
      os << (i + 1 == a.rows_ ? "]" : "\n");
    }
    return os;
  }

 private:
  static std::string shape(const Mat& a) {
    return std::to_string(a.rows_) + "x" + std::to_string(a.cols_);
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<scalar> e_;
};

// Inner product of a row with a column.
template <class SF>
Scalar<SF> operator*(const Row<SF>& y, const Vec<SF>& x) {
  if (y.size() != x.size()) {
    throw DimensionMismatch("row size " + std::to_string(y.size()) +
                            " times vector size " + std::to_string(x.size()));
  }
  Scalar<SF> r;
  for (std::size_t i = 0; i < y.size(); ++i) r += y[i] * x[i];
  return r;
}

// Outer product x y of a column with a row, an n-by-n rank-one matrix.
template <class SF>
Mat<SF> operator*(const Vec<SF>& x, const Row<SF>& y) {
  Mat<SF> r(x.size(), y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) r(i, j) = x[i] * y[j];
  }
  return r;
}

// Conjugate transpose of a nonzero vector: entrywise inverse, with zero
// entries carried over unchanged.
template <class SF>
Row<SF> conj(const Vec<SF>& x) {
  Row<SF> r(x.size());
  bool nonzero = false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero()) {
      r[i] = inv(x[i]);
      nonzero = true;
    }
  }
  if (!nonzero) throw ZeroVector("conjugate transpose of the zero vector");
  return r;
}

template <class SF>
Vec<SF> conj(const Row<SF>& y) {
  Vec<SF> r(y.size());
  bool nonzero = false;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!y[i].is_zero()) {
      r[i] = inv(y[i]);
      nonzero = true;
    }
  }
  if (!nonzero) throw ZeroVector("conjugate transpose of the zero row");
  return r;
}

template <class SF>
Mat<SF> identity(std::size_t n) {
  Mat<SF> r(n, n);
  for (std::size_t i = 0; i < n; ++i) r(i, i) = Scalar<SF>::one();
  return r;
}

// The all-ones vector (every entry is the multiplicative identity).
template <class SF>
Vec<SF> ones_vec(std::size_t n) {
  Vec<SF> r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = Scalar<SF>::one();
  return r;
}

template <class SF>
Row<SF> ones_row(std::size_t n) {
  Row<SF> r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = Scalar<SF>::one();
  return r;
}

// A vector or row is regular when every entry is nonzero, and nonzero when at
// least one entry is.
template <class SF>
bool is_regular(const Vec<SF>& x) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) return false;
  }
  return x.size() > 0;
}

template <class SF>
bool is_regular(const Row<SF>& y) {
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i].is_zero()) return false;
  }
  return y.size() > 0;
}

template <class SF>
bool is_nonzero(const Vec<SF>& x) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero()) return true;
  }
  return false;
}

// A matrix is row-regular when every row has a nonzero entry (column-regular
// dually), and regular when both hold.
template <class SF>
bool is_row_regular(const Mat<SF>& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    bool found = false;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!a(i, j).is_zero()) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return a.rows() > 0;
}

template <class SF>
bool is_col_regular(const Mat<SF>& a) {
  for (std::size_t j = 0; j < a.cols(); ++j) {
    bool found = false;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (!a(i, j).is_zero()) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return a.cols() > 0;
}

template <class SF>
bool is_regular(const Mat<SF>& a) {
  return is_row_regular(a) && is_col_regular(a);
}

// Entrywise order: x ≤ y in the order induced by ⊕.
template <class SF>
bool leq(const Vec<SF>& x, const Vec<SF>& y) {
  if (x.size() != y.size()) {
    throw DimensionMismatch("vector sizes " + std::to_string(x.size()) +
                            " and " + std::to_string(y.size()));
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!leq(x[i], y[i])) return false;
  }
  return true;
}

template <class SF>
bool leq(const Row<SF>& x, const Row<SF>& y) {
  if (x.size() != y.size()) {
    throw DimensionMismatch("row sizes " + std::to_string(x.size()) + " and " +
                            std::to_string(y.size()));
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!leq(x[i], y[i])) return false;
  }
  return true;
}

template <class SF>
bool leq(const Mat<SF>& a, const Mat<SF>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("matrix shapes differ");
  }
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!leq(a(i, j), b(i, j))) return false;
    }
  }
  return true;
}

}  // namespace tropt
