#include "padic/oracle.hpp"

#include <string>

namespace padic::oracle {

namespace {

void require_same_dim(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.dim() != b.dim()) {
    throw InvalidInput("rational matrix dimension mismatch");
  }
}

std::int64_t integer_valuation(mpz_class n, std::int64_t p) {
  const mpz_class pz = static_cast<long>(p);
  return static_cast<std::int64_t>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t()));
}

} // namespace

RationalMatrix::RationalMatrix(std::size_t n) : n_(n), entries_(n * n) {
  if (n == 0) {
    throw InvalidInput("matrix dimension must be >= 1");
  }
}

RationalMatrix::RationalMatrix(const std::vector<std::vector<mpq_class>>& rows)
    : RationalMatrix(rows.size()) {
  for (std::size_t i = 0; i < n_; ++i) {
    if (rows[i].size() != n_) {
      throw InvalidInput("rational matrix rows must be square");
    }
    for (std::size_t j = 0; j < n_; ++j) {
      mpq_class q = rows[i][j];
      q.canonicalize();
      (*this)(i, j) = q;
    }
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix id(n);
  for (std::size_t i = 0; i < n; ++i) {
    id(i, i) = 1;
  }
  return id;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  require_same_dim(a, b);
  RationalMatrix c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      c(i, j) = a(i, j) + b(i, j);
    }
  }
  return c;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  require_same_dim(a, b);
  RationalMatrix c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      c(i, j) = a(i, j) - b(i, j);
    }
  }
  return c;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  require_same_dim(a, b);
  const std::size_t n = a.dim();
  RationalMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      mpq_class acc = 0;
      for (std::size_t k = 0; k < n; ++k) {
        acc += a(i, k) * b(k, j);
      }
      c(i, j) = acc;
    }
  }
  return c;
}

RationalMatrix operator*(const mpq_class& s, const RationalMatrix& a) {
  RationalMatrix c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      c(i, j) = s * a(i, j);
    }
  }
  return c;
}

RationalMatrix power(const RationalMatrix& a, std::uint64_t m) {
  RationalMatrix result = RationalMatrix::identity(a.dim());
  for (std::uint64_t i = 0; i < m; ++i) {
    result = result * a;
  }
  return result;
}

Valuation rational_valuation(const mpq_class& q, std::int64_t p) {
  if (q == 0) {
    return Valuation::pos_inf();
  }
  return integer_valuation(q.get_num(), p) - integer_valuation(q.get_den(), p);
}

RationalMatrix inverse(const RationalMatrix& m, std::int64_t pivot_prime) {
  const std::size_t n = m.dim();
  RationalMatrix work = m;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    Valuation best = Valuation::pos_inf();
    for (std::size_t row = col; row < n; ++row) {
      const Valuation v = rational_valuation(work(row, col), pivot_prime);
      if (v < best) {
        best = v;
        pivot = row;
      }
    }
    if (pivot == n) {
      throw SingularityError("matrix is singular");
    }
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work(pivot, j), work(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const mpq_class scale = 1 / work(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      work(col, j) *= scale;
      inv(col, j) *= scale;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || work(row, col) == 0) {
        continue;
      }
      const mpq_class factor = work(row, col);
      for (std::size_t j = 0; j < n; ++j) {
        work(row, j) -= factor * work(col, j);
        inv(row, j) -= factor * inv(col, j);
      }
    }
  }
  return inv;
}

RationalMatrix exact_resolvent(const RationalMatrix& a, const mpq_class& mu, std::int64_t pivot_prime) {
  const RationalMatrix shifted = RationalMatrix::identity(a.dim()) - mu * a;
  try {
    return inverse(shifted, pivot_prime);
  } catch (const SingularityError&) {
    throw SingularityError("I - mu A is singular at mu = " + mu.get_str());
  }
}

RationalMatrix exact_resolvent_derivative(const RationalMatrix& a, const mpq_class& mu,
                                          std::uint64_t m, std::int64_t pivot_prime) {
  if (m == 0) {
    throw InvalidInput("exact_resolvent_derivative needs m >= 1");
  }
  const RationalMatrix r = exact_resolvent(a, mu, pivot_prime);
  mpz_class factorial;
  mpz_fac_ui(factorial.get_mpz_t(), m);
  return mpq_class(factorial) * (power(r * a, m) * r);
}

} // namespace padic::oracle
