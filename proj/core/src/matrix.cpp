#include "jetspec/matrix.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numeric>
#include <string>

namespace jetspec {

namespace {

Eigen::MatrixXcd to_eigen(const FloatMatrix& a) {
  Eigen::MatrixXcd m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  return m;
}

FloatMatrix from_eigen(const Eigen::MatrixXcd& m) {
  FloatMatrix a(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) a(i, j) = m(i, j);
  return a;
}

void require_square(std::size_t rows, std::size_t cols, const char* op) {
  if (rows != cols) {
    throw DimensionMismatch(std::string(op) + ": matrix is " + std::to_string(rows) + "x" +
                            std::to_string(cols) + ", expected square");
  }
}

// Row i scaled so every entry is a Gaussian integer.
void clear_denominators(std::vector<GaussRational>& row) {
  mpz_class l = 1;
  for (const auto& x : row) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.re().get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.im().get_den_mpz_t());
  }
  if (l == 1) return;
  const GaussRational scale{mpq_class(l), mpq_class(0)};
  for (auto& x : row) x *= scale;
}

std::size_t exact_rank(const ExactMatrix& a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<std::vector<GaussRational>> m(rows, std::vector<GaussRational>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = a(i, j);
    clear_denominators(m[i]);
  }

  // Bareiss: every division below is exact in Z[i].
  GaussRational prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const GaussRational pivot = m[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const GaussRational lead = m[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = (pivot * m[i][j] - lead * m[r][j]) / prev;
      }
      m[i][c] = GaussRational(0);
    }
    prev = pivot;
    ++r;
  }
  return r;
}

ExactMatrix exact_inverse(const ExactMatrix& a) {
  const std::size_t n = a.rows();
  ExactMatrix m = a;
  ExactMatrix inv = ExactMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) throw SingularMatrix("matrix is singular: no pivot in column " + std::to_string(c), c, 0.0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(p, j), m(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    }
    const GaussRational pivot_inv = GaussRational(1) / m(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      m(c, j) *= pivot_inv;
      inv(c, j) *= pivot_inv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m(i, c).is_zero()) continue;
      const GaussRational f = m(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) -= f * m(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

}  // namespace

template <Field T>
Matrix<T> mat_mul(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("mat_mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                            " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  Matrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if constexpr (is_exact_v<T>) {
        if (aik.is_zero()) continue;
      }
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

template <Field T>
Matrix<T> mat_inverse(const Matrix<T>& a, const Tolerances& tol) {
  require_square(a.rows(), a.cols(), "mat_inverse");
  if constexpr (is_exact_v<T>) {
    return exact_inverse(a);
  } else {
    const auto sv = singular_values(a);
    const double largest = sv.empty() ? 0.0 : sv.front();
    const double smallest = sv.empty() ? 0.0 : sv.back();
    if (largest == 0.0 || smallest <= tol.rank * largest) {
      throw SingularMatrix("matrix is numerically singular: sigma_min = " + std::to_string(smallest) +
                               ", sigma_max = " + std::to_string(largest),
                           sv.size() - 1, smallest);
    }
    return from_eigen(to_eigen(a).partialPivLu().inverse());
  }
}

template <Field T>
std::size_t kernel_dim(const Matrix<T>& a, const Tolerances& tol) {
  if (a.cols() == 0) return 0;
  if constexpr (is_exact_v<T>) {
    return a.cols() - exact_rank(a);
  } else {
    const auto sv = singular_values(a);
    const double largest = sv.empty() ? 0.0 : sv.front();
    std::size_t numeric_rank = 0;
    if (largest > 0.0) {
      for (double s : sv)
        if (s > tol.rank * largest) ++numeric_rank;
    }
    return a.cols() - numeric_rank;
  }
}

template <Field T>
Matrix<T> mat_pow(const Matrix<T>& a, unsigned exponent) {
  require_square(a.rows(), a.cols(), "mat_pow");
  Matrix<T> result = Matrix<T>::identity(a.rows());
  Matrix<T> base = a;
  while (exponent > 0) {
    if (exponent & 1u) result = mat_mul(result, base);
    exponent >>= 1u;
    if (exponent > 0) base = mat_mul(base, base);
  }
  return result;
}

template <Field T>
Matrix<T> transpose(const Matrix<T>& a) {
  Matrix<T> t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

template <Field T>
double frobenius_norm(const Matrix<T>& a) {
  double s = 0.0;
  for (const auto& x : a.data()) s += std::norm(to_complex(x));
  return std::sqrt(s);
}

template <Field T>
Matrix<T> direct_sum(std::span<const Matrix<T>> blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) {
    require_square(b.rows(), b.cols(), "direct_sum");
    n += b.rows();
  }
  Matrix<T> out(n, n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) out(off + i, off + j) = b(i, j);
    off += b.rows();
  }
  return out;
}

FloatMatrix solve(const FloatMatrix& a, const FloatMatrix& b) {
  require_square(a.rows(), a.cols(), "solve");
  if (a.rows() != b.rows()) throw DimensionMismatch("solve: right-hand side has wrong row count");
  return from_eigen(to_eigen(a).partialPivLu().solve(to_eigen(b)));
}

FloatMatrix to_float(const ExactMatrix& a) {
  FloatMatrix f(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) f(i, j) = a(i, j).to_complex();
  return f;
}

ExactMatrix to_exact(const FloatMatrix& a) {
  ExactMatrix e(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) e(i, j) = GaussRational::from_complex(a(i, j));
  return e;
}

std::vector<double> singular_values(const FloatMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return {};
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(a));
  const auto& s = svd.singularValues();
  std::vector<double> out(s.data(), s.data() + s.size());
  // min(rows, cols) values; pad so the count matches the column dimension.
  out.resize(a.cols(), 0.0);
  return out;
}

#define JETSPEC_INSTANTIATE(T)                                                        \
  template Matrix<T> mat_mul(const Matrix<T>&, const Matrix<T>&);                     \
  template Matrix<T> mat_inverse(const Matrix<T>&, const Tolerances&);                \
  template std::size_t kernel_dim(const Matrix<T>&, const Tolerances&);               \
  template Matrix<T> mat_pow(const Matrix<T>&, unsigned);                             \
  template Matrix<T> transpose(const Matrix<T>&);                                     \
  template double frobenius_norm(const Matrix<T>&);                                   \
  template Matrix<T> direct_sum(std::span<const Matrix<T>>);

JETSPEC_INSTANTIATE(GaussRational)
JETSPEC_INSTANTIATE(Complex)

#undef JETSPEC_INSTANTIATE

}  // namespace jetspec
