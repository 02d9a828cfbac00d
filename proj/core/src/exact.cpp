#include "mackey/exact.hpp"

#include <algorithm>
#include <charconv>
#include <utility>

#include "mackey/errors.hpp"

namespace mackey {

std::string to_string(const Rational& x) { return x.get_str(); }

Rational parse_rational(std::string_view text) {
  Rational r;
  if (text.empty() || r.set_str(std::string(text), 10) != 0) {
    throw InputError("malformed rational: '" + std::string(text) + "'");
  }
  if (r.get_den() == 0) throw InputError("zero denominator: '" + std::string(text) + "'");
  r.canonicalize();
  return r;
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_integers(const std::vector<std::vector<long>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw InputError("ragged matrix literal");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw InputError("matrix product dimension mismatch");
  Matrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

std::vector<Rational> Matrix::operator*(const std::vector<Rational>& v) const {
  if (cols_ != v.size()) throw InputError("matrix-vector dimension mismatch");
  std::vector<Rational> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (v[j] != 0) out[i] += (*this)(i, j) * v[j];
    }
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::submatrix(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const {
  if (row0 + nrows > rows_ || col0 + ncols > cols_) throw InputError("submatrix out of range");
  Matrix s(nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) s(i, j) = (*this)(row0 + i, col0 + j);
  return s;
}

bool Matrix::is_symmetric() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// SparseMatrix

void SparseMatrix::set(std::size_t i, std::size_t j, const Rational& value) {
  if (i >= rows_.size() || j >= rows_.size()) throw InputError("sparse index out of range");
  if (value == 0) {
    rows_[i].erase(j);
  } else {
    rows_[i][j] = value;
  }
}

Rational SparseMatrix::get(std::size_t i, std::size_t j) const {
  auto it = rows_.at(i).find(j);
  return it == rows_[i].end() ? Rational(0) : it->second;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

Matrix SparseMatrix::to_dense() const {
  Matrix m(size(), size());
  for (std::size_t i = 0; i < size(); ++i)
    for (const auto& [j, v] : rows_[i]) m(i, j) = v;
  return m;
}

// ---------------------------------------------------------------------------
// Determinants

Rational det_exact(const Matrix& m) {
  if (!m.square()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;

  // Clear denominators row by row; det(m) = det(a) / prod(scale).
  std::vector<Integer> a(n * n);
  Integer scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    scale *= l;
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  auto at = [&](std::size_t i, std::size_t j) -> Integer& { return a[i * n + j]; };

  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && at(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        at(i, j) = at(k, k) * at(i, j) - at(i, k) * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), at(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  Rational det(sign * at(n - 1, n - 1), scale);
  det.canonicalize();
  return det;
}

Rational det_exact(const SparseMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::map<std::size_t, Rational>> rows(n);
  for (std::size_t i = 0; i < n; ++i) rows[i] = m.row(i);

  // Column -> rows with a nonzero entry there, kept in sync during fill-in.
  std::vector<std::vector<std::size_t>> col_rows(n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [j, v] : rows[i]) col_rows[j].push_back(i);

  std::vector<bool> used(n, false);
  // Row position tracking for the permutation sign.
  std::vector<std::size_t> pos(n), at_pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[i] = at_pos[i] = i;

  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = n;
    for (std::size_t r : col_rows[k]) {
      if (used[r]) continue;
      auto it = rows[r].find(k);
      if (it == rows[r].end()) continue;
      if (pivot == n || pos[r] < pos[pivot]) pivot = r;
    }
    if (pivot == n) return 0;

    // Move the pivot row to position k.
    if (pos[pivot] != k) {
      const std::size_t other = at_pos[k];
      std::swap(at_pos[k], at_pos[pos[pivot]]);
      std::swap(pos[pivot], pos[other]);
      det = -det;
    }
    used[pivot] = true;
    const Rational pv = rows[pivot].at(k);
    det *= pv;

    std::vector<std::size_t> targets;
    for (std::size_t r : col_rows[k]) {
      if (!used[r] && rows[r].count(k)) targets.push_back(r);
    }
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    for (std::size_t r : targets) {
      const Rational factor = rows[r].at(k) / pv;
      for (const auto& [j, v] : rows[pivot]) {
        auto [it, inserted] = rows[r].try_emplace(j, 0);
        if (inserted) col_rows[j].push_back(r);
        it->second -= factor * v;
        if (it->second == 0) rows[r].erase(it);
      }
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.square()) throw InputError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix a = m;
  Matrix inv = Matrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t r = k;
    while (r < n && a(r, k) == 0) ++r;
    if (r == n) return std::nullopt;
    if (r != k) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(k, j), a(r, j));
        std::swap(inv(k, j), inv(r, j));
      }
    }
    const Rational pv = a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) /= pv;
      inv(k, j) /= pv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      const Rational f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        if (a(k, j) != 0) a(i, j) -= f * a(k, j);
        if (inv(k, j) != 0) inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

// ---------------------------------------------------------------------------
// Valuations and rings

long valuation(const Integer& n, unsigned long p) {
  if (n == 0) throw InputError("valuation of zero integer is infinite");
  Integer q = abs(n);
  long v = 0;
  while (mpz_divisible_ui_p(q.get_mpz_t(), p)) {
    mpz_divexact_ui(q.get_mpz_t(), q.get_mpz_t(), p);
    ++v;
  }
  return v;
}

std::optional<long> valuation(const Rational& x, unsigned long p) {
  if (!is_prime(p)) throw InputError("valuation requires a prime, got " + std::to_string(p));
  if (x == 0) return std::nullopt;
  return valuation(Integer(x.get_num()), p) - valuation(Integer(x.get_den()), p);
}

RingSpec RingSpec::prime_field(unsigned long p) {
  if (!is_prime(p)) throw InputError("F_p needs a prime, got " + std::to_string(p));
  return {Kind::PrimeField, p};
}

RingSpec RingSpec::p_local(unsigned long p) {
  if (!is_prime(p)) throw InputError("Z_(p) needs a prime, got " + std::to_string(p));
  return {Kind::PLocal, p};
}

RingSpec RingSpec::parse(std::string_view text) {
  if (text == "Z") return integers();
  if (text == "Q") return rationals();
  auto with_prime = [&](std::string_view prefix) -> std::optional<unsigned long> {
    if (text.substr(0, prefix.size()) != prefix) return std::nullopt;
    std::string_view digits = text.substr(prefix.size());
    unsigned long p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw InputError("malformed prime in ring '" + std::string(text) + "'");
    }
    return p;
  };
  if (auto p = with_prime("Fp:")) return prime_field(*p);
  if (auto p = with_prime("Zp:")) return p_local(*p);
  throw InputError("unknown ring '" + std::string(text) + "' (expected Z, Q, Fp:<p>, Zp:<p>)");
}

std::string RingSpec::to_string() const {
  switch (kind) {
    case Kind::Integers: return "Z";
    case Kind::Rationals: return "Q";
    case Kind::PrimeField: return "Fp:" + std::to_string(p);
    case Kind::PLocal: return "Zp:" + std::to_string(p);
  }
  return "?";
}

bool is_representable(const Rational& x, const RingSpec& ring) {
  switch (ring.kind) {
    case RingSpec::Kind::Integers: return x.get_den() == 1;
    case RingSpec::Kind::Rationals: return true;
    case RingSpec::Kind::PrimeField:
    case RingSpec::Kind::PLocal: return valuation(Integer(x.get_den()), ring.p) == 0;
  }
  return false;
}

bool is_unit(const Rational& x, const RingSpec& ring) {
  if (!is_representable(x, ring)) {
    throw InputError(to_string(x) + " is not an element of " + ring.to_string());
  }
  switch (ring.kind) {
    case RingSpec::Kind::Integers: return abs(x) == 1;
    case RingSpec::Kind::Rationals: return x != 0;
    case RingSpec::Kind::PrimeField:
    case RingSpec::Kind::PLocal: {
      auto v = valuation(x, ring.p);
      return v.has_value() && *v == 0;
    }
  }
  return false;
}

}  // namespace mackey
