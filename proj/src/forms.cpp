#include "glform/forms.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

#include "json.hpp"

#include "glform/errors.hpp"

namespace glform {

namespace {

std::int64_t checked_int64(const BigInt& v) {
  if (!v.fits_slong_p()) throw TooLarge("matrix entry does not fit in 64 bits: " + v.get_str());
  return v.get_si();
}

}  // namespace

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  std::vector<std::vector<std::int64_t>> v;
  for (const auto& r : rows) v.emplace_back(r);
  *this = from_rows(v);
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw BadMatrix("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::vector<std::vector<std::int64_t>> IntMatrix::to_rows() const {
  std::vector<std::vector<std::int64_t>> out(rows_, std::vector<std::int64_t>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
  return out;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw BadMatrix("dimension mismatch in product");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      BigInt acc = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (a(i, k) == 0 || b(k, j) == 0) continue;
        acc += BigInt(static_cast<long>(a(i, k))) * static_cast<long>(b(k, j));
      }
      out(i, j) = checked_int64(acc);
    }
  }
  return out;
}

SymIntMatrix::SymIntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : SymIntMatrix(IntMatrix(rows)) {}

SymIntMatrix::SymIntMatrix(IntMatrix m) : m_(std::move(m)) {
  if (!m_.square()) throw BadMatrix("symmetric matrix must be square");
  for (std::size_t i = 0; i < m_.rows(); ++i)
    for (std::size_t j = i + 1; j < m_.cols(); ++j)
      if (m_(i, j) != m_(j, i)) throw BadMatrix("matrix is not symmetric");
}

SymIntMatrix SymIntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  return SymIntMatrix(IntMatrix::from_rows(rows));
}

void SymIntMatrix::set(std::size_t i, std::size_t j, std::int64_t v) {
  m_(i, j) = v;
  m_(j, i) = v;
}

void SymIntMatrix::add(std::size_t i, std::size_t j, std::int64_t v) {
  m_(i, j) += v;
  if (i != j) m_(j, i) += v;
}

SymIntMatrix SymIntMatrix::without(std::size_t k) const {
  const std::size_t n = size();
  if (k >= n) throw BadMatrix("row index out of range");
  SymIntMatrix out(n - 1);
  for (std::size_t i = 0, oi = 0; i < n; ++i) {
    if (i == k) continue;
    for (std::size_t j = 0, oj = 0; j < n; ++j) {
      if (j == k) continue;
      out.m_(oi, oj) = m_(i, j);
      ++oj;
    }
    ++oi;
  }
  return out;
}

SymIntMatrix SymIntMatrix::direct_sum(const SymIntMatrix& other) const {
  const std::size_t n = size();
  SymIntMatrix out(n + other.size());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.m_(i, j) = m_(i, j);
  for (std::size_t i = 0; i < other.size(); ++i)
    for (std::size_t j = 0; j < other.size(); ++j) out.m_(n + i, n + j) = other(i, j);
  return out;
}

SymIntMatrix SymIntMatrix::congruent(const IntMatrix& u) const {
  if (u.rows() != size()) throw BadMatrix("congruence matrix has wrong row count");
  return SymIntMatrix(multiply(multiply(u.transpose(), m_), u));
}

Inertia operator+(const Inertia& a, const Inertia& b) {
  return {a.positive + b.positive, a.negative + b.negative, a.zero + b.zero};
}

Inertia inertia(const SymIntMatrix& m) {
  std::size_t n = m.size();
  std::vector<mpq_class> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = static_cast<long>(m(i, j));

  // `live` lists the indices of the active block; eliminated pivots drop out.
  std::vector<std::size_t> live(n);
  std::iota(live.begin(), live.end(), 0);
  auto at = [&](std::size_t i, std::size_t j) -> mpq_class& { return a[i * n + j]; };

  Inertia out;
  while (!live.empty()) {
    auto diag = std::find_if(live.begin(), live.end(), [&](std::size_t i) { return sgn(at(i, i)) != 0; });
    if (diag != live.end()) {
      const std::size_t k = *diag;
      const mpq_class pivot = at(k, k);
      if (sgn(pivot) > 0) ++out.positive; else ++out.negative;
      live.erase(diag);
      for (std::size_t i : live) {
        if (sgn(at(i, k)) == 0) continue;
        const mpq_class f = at(i, k) / pivot;
        for (std::size_t j : live) at(i, j) -= f * at(k, j);
      }
      continue;
    }

    std::size_t p = n, q = n;
    for (std::size_t i : live) {
      for (std::size_t j : live) {
        if (sgn(at(i, j)) != 0) {
          p = i;
          q = j;
          break;
        }
      }
      if (p != n) break;
    }
    if (p == n) {
      out.zero += live.size();
      break;
    }

    // Hyperbolic pair: H = [[0, c], [c, 0]], H⁻¹ = [[0, 1/c], [1/c, 0]].
    const mpq_class c = at(p, q);
    ++out.positive;
    ++out.negative;
    std::erase_if(live, [&](std::size_t i) { return i == p || i == q; });
    std::vector<mpq_class> update;
    update.reserve(live.size() * live.size());
    for (std::size_t i : live)
      for (std::size_t j : live) update.push_back((at(i, p) * at(q, j) + at(i, q) * at(p, j)) / c);
    std::size_t u = 0;
    for (std::size_t i : live)
      for (std::size_t j : live) at(i, j) -= update[u++];
  }
  return out;
}

BigInt determinant(const IntMatrix& m) {
  if (!m.square()) throw BadMatrix("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(m(i, j));

  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::vector<BigInt> smith_invariants(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = static_cast<long>(m(i, j));

  const std::size_t r = std::min(rows, cols);
  for (std::size_t t = 0; t < r; ++t) {
    for (;;) {
      // Move the smallest nonzero entry of the active block to (t, t).
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) break;
      std::swap(a[t], a[pi]);
      for (auto& row : a) std::swap(row[t], row[pj]);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold any offending row into row t and repeat.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(a[i][j].get_mpz_t(), a[t][t].get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      for (std::size_t j = t; j < cols; ++j) a[t][j] += a[bad][j];
    }
  }

  std::vector<BigInt> out(r);
  for (std::size_t t = 0; t < r; ++t) out[t] = abs(a[t][t]);
  return out;
}

IntMatrix parse_matrix(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw BadMatrix(std::string("matrix literal: ") + e.what());
  }
  if (!j.is_array()) throw BadMatrix("matrix literal must be a list of rows");
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw BadMatrix("matrix row must be a list");
    auto& r = rows.emplace_back();
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw BadMatrix("matrix entries must be integers");
      r.push_back(v.get<std::int64_t>());
    }
  }
  return IntMatrix::from_rows(rows);
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ',';
      os << m(i, j);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace glform
