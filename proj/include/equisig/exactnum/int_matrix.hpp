#ifndef EQUISIG_EXACTNUM_INT_MATRIX_HPP
#define EQUISIG_EXACTNUM_INT_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "equisig/error.hpp"
#include "equisig/exactnum/rational.hpp"

namespace equisig {

  using IntVector = std::vector<Integer>;

  //! Dense row-major matrix of arbitrary-precision integers.
  class IntegerMatrix {
   public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols)
        : _rows(rows), _cols(cols), _data(rows * cols, Integer(0)) {}

    IntegerMatrix(std::vector<IntVector> const& rows) {  // NOLINT
      _rows = rows.size();
      _cols = rows.empty() ? 0 : rows[0].size();
      _data.reserve(_rows * _cols);
      for (auto const& r : rows) {
        if (r.size() != _cols) {
          throw DomainError("IntegerMatrix: ragged rows");
        }
        _data.insert(_data.end(), r.begin(), r.end());
      }
    }

    static IntegerMatrix identity(std::size_t n) {
      IntegerMatrix m(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
      }
      return m;
    }

    std::size_t rows() const noexcept {
      return _rows;
    }
    std::size_t cols() const noexcept {
      return _cols;
    }

    Integer& operator()(std::size_t i, std::size_t j) {
      return _data[i * _cols + j];
    }
    Integer const& operator()(std::size_t i, std::size_t j) const {
      return _data[i * _cols + j];
    }

    IntVector column(std::size_t j) const {
      IntVector c(_rows);
      for (std::size_t i = 0; i < _rows; ++i) {
        c[i] = (*this)(i, j);
      }
      return c;
    }

    IntVector operator*(IntVector const& x) const {
      if (x.size() != _cols) {
        throw DomainError("IntegerMatrix: dimension mismatch in matrix-vector product");
      }
      IntVector y(_rows, Integer(0));
      for (std::size_t i = 0; i < _rows; ++i) {
        for (std::size_t j = 0; j < _cols; ++j) {
          if ((*this)(i, j) != 0) {
            y[i] += (*this)(i, j) * x[j];
          }
        }
      }
      return y;
    }

    friend IntegerMatrix operator*(IntegerMatrix const& a, IntegerMatrix const& b) {
      if (a._cols != b._rows) {
        throw DomainError("IntegerMatrix: dimension mismatch in product");
      }
      IntegerMatrix c(a._rows, b._cols);
      for (std::size_t i = 0; i < a._rows; ++i) {
        for (std::size_t k = 0; k < a._cols; ++k) {
          if (a(i, k) == 0) {
            continue;
          }
          for (std::size_t j = 0; j < b._cols; ++j) {
            c(i, j) += a(i, k) * b(k, j);
          }
        }
      }
      return c;
    }

    friend bool operator==(IntegerMatrix const& a, IntegerMatrix const& b) {
      return a._rows == b._rows && a._cols == b._cols && a._data == b._data;
    }

    void swap_rows(std::size_t i, std::size_t j) {
      for (std::size_t k = 0; k < _cols; ++k) {
        std::swap((*this)(i, k), (*this)(j, k));
      }
    }
    void swap_cols(std::size_t i, std::size_t j) {
      for (std::size_t k = 0; k < _rows; ++k) {
        std::swap((*this)(k, i), (*this)(k, j));
      }
    }
    // row_i += c * row_j
    void add_row(std::size_t i, std::size_t j, Integer const& c) {
      if (c == 0) {
        return;
      }
      for (std::size_t k = 0; k < _cols; ++k) {
        if ((*this)(j, k) != 0) {
          (*this)(i, k) += c * (*this)(j, k);
        }
      }
    }
    // col_i += c * col_j
    void add_col(std::size_t i, std::size_t j, Integer const& c) {
      if (c == 0) {
        return;
      }
      for (std::size_t k = 0; k < _rows; ++k) {
        if ((*this)(k, j) != 0) {
          (*this)(k, i) += c * (*this)(k, j);
        }
      }
    }
    void negate_row(std::size_t i) {
      for (std::size_t k = 0; k < _cols; ++k) {
        (*this)(i, k) = -(*this)(i, k);
      }
    }

   private:
    std::size_t _rows = 0, _cols = 0;
    IntVector   _data;
  };

  //! U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... ,
  //! d_i > 0 for i < rank.  U_inv is the inverse of U.
  struct SmithForm {
    IntegerMatrix U, U_inv, D, V;
    std::size_t   rank = 0;

    Integer const& diagonal(std::size_t i) const {
      return D(i, i);
    }
  };

  namespace detail {
    class SmithReducer {
     public:
      explicit SmithReducer(IntegerMatrix const& a)
          : s{IntegerMatrix::identity(a.rows()), IntegerMatrix::identity(a.rows()), a,
              IntegerMatrix::identity(a.cols()), 0} {}

      SmithForm run() {
        auto&             d = s.D;
        std::size_t const n = std::min(d.rows(), d.cols());
        std::size_t       t = 0;
        for (; t < n; ++t) {
          if (!move_smallest_to(t, t, d.rows(), d.cols())) {
            break;
          }
          while (true) {
            clear_cross(t);
            // Divisibility: pull a non-multiple into row t and retry.
            bool fixed = true;
            for (std::size_t i = t + 1; i < d.rows() && fixed; ++i) {
              for (std::size_t j = t + 1; j < d.cols(); ++j) {
                if (d(i, j) % d(t, t) != 0) {
                  row_add(t, i, 1);
                  fixed = false;
                  break;
                }
              }
            }
            if (fixed) {
              break;
            }
          }
          if (d(t, t) < 0) {
            row_negate(t);
          }
        }
        s.rank = t;
        return std::move(s);
      }

     private:
      // Smallest nonzero |entry| in rows/cols >= t (first in row-major order
      // among ties) moved to (t, t).  False when the block is zero.
      bool move_smallest_to(std::size_t t, std::size_t, std::size_t rows, std::size_t cols) {
        auto&       d = s.D;
        bool        found = false;
        std::size_t bi = 0, bj = 0;
        Integer     best;
        for (std::size_t i = t; i < rows; ++i) {
          for (std::size_t j = t; j < cols; ++j) {
            if (d(i, j) != 0 && (!found || abs(d(i, j)) < best)) {
              found = true;
              best  = abs(d(i, j));
              bi    = i;
              bj    = j;
            }
          }
        }
        if (!found) {
          return false;
        }
        row_swap(t, bi);
        col_swap(t, bj);
        return true;
      }

      // Clears row t and column t outside the pivot by Euclidean steps.
      void clear_cross(std::size_t t) {
        auto& d = s.D;
        while (true) {
          for (std::size_t i = t + 1; i < d.rows(); ++i) {
            if (d(i, t) != 0) {
              Integer q;
              mpz_tdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
              row_add(i, t, -q);
            }
          }
          for (std::size_t j = t + 1; j < d.cols(); ++j) {
            if (d(t, j) != 0) {
              Integer q;
              mpz_tdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
              col_add(j, t, -q);
            }
          }
          // Any remainder is smaller than the pivot; promote the smallest.
          bool        found = false;
          bool        in_row = false;
          std::size_t at = 0;
          Integer     best;
          for (std::size_t i = t + 1; i < d.rows(); ++i) {
            if (d(i, t) != 0 && (!found || abs(d(i, t)) < best)) {
              found = true, in_row = false, at = i, best = abs(d(i, t));
            }
          }
          for (std::size_t j = t + 1; j < d.cols(); ++j) {
            if (d(t, j) != 0 && (!found || abs(d(t, j)) < best)) {
              found = true, in_row = true, at = j, best = abs(d(t, j));
            }
          }
          if (!found) {
            return;
          }
          if (in_row) {
            col_swap(t, at);
          } else {
            row_swap(t, at);
          }
        }
      }

      void row_swap(std::size_t i, std::size_t j) {
        if (i == j) {
          return;
        }
        s.D.swap_rows(i, j);
        s.U.swap_rows(i, j);
        s.U_inv.swap_cols(i, j);
      }
      void col_swap(std::size_t i, std::size_t j) {
        if (i == j) {
          return;
        }
        s.D.swap_cols(i, j);
        s.V.swap_cols(i, j);
      }
      void row_add(std::size_t i, std::size_t j, Integer const& c) {
        s.D.add_row(i, j, c);
        s.U.add_row(i, j, c);
        s.U_inv.add_col(j, i, -c);
      }
      void col_add(std::size_t i, std::size_t j, Integer const& c) {
        s.D.add_col(i, j, c);
        s.V.add_col(i, j, c);
      }
      void row_negate(std::size_t i) {
        s.D.negate_row(i);
        s.U.negate_row(i);
        for (std::size_t k = 0; k < s.U_inv.rows(); ++k) {
          s.U_inv(k, i) = -s.U_inv(k, i);
        }
      }

      SmithForm s;
    };
  }  // namespace detail

  inline SmithForm smith_normal_form(IntegerMatrix const& a) {
    return detail::SmithReducer(a).run();
  }

  inline std::size_t rank(IntegerMatrix const& a) {
    return smith_normal_form(a).rank;
  }

  //! Some integer solution of A x = b, or nullopt.  The solution returned is
  //! V y where y_i = (U b)_i / d_i for i < rank and y_i = 0 otherwise.
  inline std::optional<IntVector> smith_solve(IntegerMatrix const& a, IntVector const& b) {
    if (b.size() != a.rows()) {
      throw DomainError("smith_solve: right-hand side has wrong length");
    }
    auto const s = smith_normal_form(a);
    auto const c = s.U * b;
    IntVector  y(a.cols(), Integer(0));
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i < s.rank) {
        if (c[i] % s.diagonal(i) != 0) {
          return std::nullopt;
        }
        y[i] = c[i] / s.diagonal(i);
      } else if (c[i] != 0) {
        return std::nullopt;
      }
    }
    return s.V * y;
  }

  //! Row Hermite normal form of a list of integer vectors (all of the same
  //! length): a basis of the same lattice, echelon with positive pivots and
  //! entries above each pivot reduced into [0, pivot).  Zero rows dropped.
  inline std::vector<IntVector> hermite_rows(std::vector<IntVector> rows) {
    if (rows.empty()) {
      return rows;
    }
    auto const  ncols = rows[0].size();
    std::size_t top   = 0;
    auto add = [](IntVector& a, IntVector const& b, Integer const& c) {
      for (std::size_t k = 0; k < a.size(); ++k) {
        a[k] += c * b[k];
      }
    };
    for (std::size_t col = 0; col < ncols && top < rows.size(); ++col) {
      // Euclid on column `col` among rows top..end.
      while (true) {
        std::size_t piv = rows.size();
        for (std::size_t i = top; i < rows.size(); ++i) {
          if (rows[i][col] != 0
              && (piv == rows.size() || abs(rows[i][col]) < abs(rows[piv][col]))) {
            piv = i;
          }
        }
        if (piv == rows.size()) {
          break;
        }
        std::swap(rows[top], rows[piv]);
        bool done = true;
        for (std::size_t i = top + 1; i < rows.size(); ++i) {
          if (rows[i][col] != 0) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[top][col].get_mpz_t());
            add(rows[i], rows[top], -q);
            if (rows[i][col] != 0) {
              done = false;
            }
          }
        }
        if (done) {
          break;
        }
      }
      if (rows[top][col] == 0) {
        continue;
      }
      if (rows[top][col] < 0) {
        for (auto& x : rows[top]) {
          x = -x;
        }
      }
      for (std::size_t i = 0; i < top; ++i) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[top][col].get_mpz_t());
        add(rows[i], rows[top], -q);
      }
      ++top;
    }
    rows.resize(top);
    return rows;
  }

  //! Integer basis of {x : A x = 0}, in row Hermite normal form.
  inline std::vector<IntVector> lattice_kernel(IntegerMatrix const& a) {
    auto const             s = smith_normal_form(a);
    std::vector<IntVector> basis;
    for (std::size_t j = s.rank; j < a.cols(); ++j) {
      basis.push_back(s.V.column(j));
    }
    return hermite_rows(std::move(basis));
  }

}  // namespace equisig

#endif  // EQUISIG_EXACTNUM_INT_MATRIX_HPP
