#ifndef MACKEY_EXACT_HPP
#define MACKEY_EXACT_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace mackey {

using Integer = mpz_class;
using Rational = mpq_class;

/// num/den in lowest terms (the two-argument mpq_class constructor does not reduce).
template <class N, class D>
Rational fraction(N num, D den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// "num/den" with the denominator dropped when it is 1.
std::string to_string(const Rational& x);
Rational parse_rational(std::string_view text);

bool is_prime(unsigned long n);

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix from_integers(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix operator*(const Matrix& rhs) const;
  std::vector<Rational> operator*(const std::vector<Rational>& v) const;
  Matrix transpose() const;
  Matrix submatrix(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;
  bool is_symmetric() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Square matrix stored row-wise as ordered column -> value maps. Zeros are
/// never stored.
class SparseMatrix {
 public:
  explicit SparseMatrix(std::size_t n = 0) : rows_(n) {}

  std::size_t size() const { return rows_.size(); }
  void set(std::size_t i, std::size_t j, const Rational& value);
  Rational get(std::size_t i, std::size_t j) const;
  const std::map<std::size_t, Rational>& row(std::size_t i) const { return rows_[i]; }
  std::size_t nonzeros() const;
  Matrix to_dense() const;

 private:
  std::vector<std::map<std::size_t, Rational>> rows_;
};

/// Fraction-free (Bareiss) elimination after clearing row denominators.
Rational det_exact(const Matrix& m);

/// Rational Gaussian elimination that only touches rows with a nonzero entry
/// in the pivot column; cost follows the fill pattern rather than n^3.
Rational det_exact(const SparseMatrix& m);

/// Gauss-Jordan inverse; nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

/// p-adic valuation; nullopt stands for +infinity (x == 0).
std::optional<long> valuation(const Rational& x, unsigned long p);
long valuation(const Integer& n, unsigned long p);

struct RingSpec {
  enum class Kind { Integers, Rationals, PrimeField, PLocal };
  Kind kind = Kind::Rationals;
  unsigned long p = 0;

  static RingSpec integers() { return {Kind::Integers, 0}; }
  static RingSpec rationals() { return {Kind::Rationals, 0}; }
  static RingSpec prime_field(unsigned long p);
  static RingSpec p_local(unsigned long p);

  /// Accepts Z, Q, Fp:<p>, Zp:<p>.
  static RingSpec parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

/// Whether x lies in the ring (for F_p: whether it reduces, i.e. has a
/// p'-denominator).
bool is_representable(const Rational& x, const RingSpec& ring);

/// Throws InputError when x is not representable in the ring.
bool is_unit(const Rational& x, const RingSpec& ring);

}  // namespace mackey

#endif  // MACKEY_EXACT_HPP
