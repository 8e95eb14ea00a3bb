#ifndef EQUISIG_CHARSERIES_SERIES_HPP
#define EQUISIG_CHARSERIES_SERIES_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "equisig/error.hpp"
#include "equisig/exactnum/cyclotomic.hpp"

namespace equisig {

  //! Exponent vector; variable i contributes 2 * m[i] to the degree.
  using Monomial = std::vector<int>;

  //! Rational linear combination of the variables.
  using LinearForm = std::vector<Rational>;

  inline int cohomological_degree(Monomial const& m) {
    int d = 0;
    for (auto e : m) {
      d += 2 * e;
    }
    return d;
  }

  //! Power series in nvars degree-2 variables with cyclotomic coefficients,
  //! truncated above total cohomological degree D.
  class TruncatedSeries {
   public:
    using Terms = std::map<Monomial, CyclotomicNumber>;

    TruncatedSeries(std::size_t nvars, int truncation) : _nvars(nvars), _trunc(truncation) {
      if (truncation < 0) {
        throw DomainError("series truncation must be non-negative");
      }
    }

    static TruncatedSeries constant(std::size_t nvars, int truncation, CyclotomicNumber c) {
      TruncatedSeries s(nvars, truncation);
      s.add_term(Monomial(nvars, 0), c);
      return s;
    }

    static TruncatedSeries variable(std::size_t nvars, int truncation, std::size_t i) {
      if (i >= nvars) {
        throw DomainError("series variable index out of range");
      }
      TruncatedSeries s(nvars, truncation);
      Monomial        m(nvars, 0);
      m[i] = 1;
      s.add_term(m, CyclotomicNumber(1));
      return s;
    }

    static TruncatedSeries linear(int truncation, LinearForm const& l) {
      TruncatedSeries s(l.size(), truncation);
      for (std::size_t i = 0; i < l.size(); ++i) {
        Monomial m(l.size(), 0);
        m[i] = 1;
        s.add_term(m, CyclotomicNumber(l[i]));
      }
      return s;
    }

    std::size_t nvars() const noexcept {
      return _nvars;
    }

    int truncation() const noexcept {
      return _trunc;
    }

    Terms const& terms() const noexcept {
      return _terms;
    }

    bool is_zero() const noexcept {
      return _terms.empty();
    }

    CyclotomicNumber coefficient(Monomial const& m) const {
      auto it = _terms.find(m);
      return it == _terms.end() ? CyclotomicNumber(0) : it->second;
    }

    CyclotomicNumber constant_term() const {
      return coefficient(Monomial(_nvars, 0));
    }

    //! Adds c * m; terms above the truncation are discarded.
    void add_term(Monomial const& m, CyclotomicNumber const& c) {
      if (m.size() != _nvars) {
        throw DomainError("monomial has the wrong number of variables");
      }
      if (cohomological_degree(m) > _trunc || c.is_zero()) {
        return;
      }
      auto it = _terms.find(m);
      if (it == _terms.end()) {
        _terms.emplace(m, c);
        return;
      }
      it->second += c;
      if (it->second.is_zero()) {
        _terms.erase(it);
      }
    }

    //! Homogeneous part of the given cohomological degree.
    TruncatedSeries part(int degree) const {
      TruncatedSeries s(_nvars, _trunc);
      for (auto const& [m, c] : _terms) {
        if (cohomological_degree(m) == degree) {
          s._terms.emplace(m, c);
        }
      }
      return s;
    }

    TruncatedSeries& operator+=(TruncatedSeries const& o) {
      check(o);
      for (auto const& [m, c] : o._terms) {
        add_term(m, c);
      }
      return *this;
    }

    TruncatedSeries& operator-=(TruncatedSeries const& o) {
      check(o);
      for (auto const& [m, c] : o._terms) {
        add_term(m, -c);
      }
      return *this;
    }

    friend TruncatedSeries operator+(TruncatedSeries a, TruncatedSeries const& b) {
      return a += b;
    }
    friend TruncatedSeries operator-(TruncatedSeries a, TruncatedSeries const& b) {
      return a -= b;
    }
    friend TruncatedSeries operator-(TruncatedSeries a) {
      for (auto& [m, c] : a._terms) {
        c = -c;
      }
      return a;
    }

    friend TruncatedSeries operator*(TruncatedSeries const& a, TruncatedSeries const& b) {
      a.check(b);
      TruncatedSeries out(a._nvars, a._trunc);
      Monomial        m(a._nvars);
      for (auto const& [ma, ca] : a._terms) {
        auto const da = cohomological_degree(ma);
        for (auto const& [mb, cb] : b._terms) {
          if (da + cohomological_degree(mb) > a._trunc) {
            continue;
          }
          for (std::size_t i = 0; i < m.size(); ++i) {
            m[i] = ma[i] + mb[i];
          }
          out.add_term(m, ca * cb);
        }
      }
      return out;
    }

    friend TruncatedSeries operator*(CyclotomicNumber const& k, TruncatedSeries a) {
      if (k.is_zero()) {
        a._terms.clear();
        return a;
      }
      for (auto& [m, c] : a._terms) {
        c *= k;
      }
      return a;
    }

    TruncatedSeries& operator*=(TruncatedSeries const& o) {
      return *this = *this * o;
    }

    friend bool operator==(TruncatedSeries const& a, TruncatedSeries const& b) {
      return a._nvars == b._nvars && a._trunc == b._trunc && a._terms == b._terms;
    }
    friend bool operator!=(TruncatedSeries const& a, TruncatedSeries const& b) {
      return !(a == b);
    }

    std::string to_string() const {
      if (_terms.empty()) {
        return "0";
      }
      std::string out;
      for (auto const& [m, c] : _terms) {
        std::string mono;
        for (std::size_t i = 0; i < m.size(); ++i) {
          if (m[i] > 0) {
            mono += "*x" + std::to_string(i + 1);
            if (m[i] > 1) {
              mono += "^" + std::to_string(m[i]);
            }
          }
        }
        out += (out.empty() ? "" : " + ") + std::string("(") + c.to_string() + ")" + mono;
      }
      return out;
    }

   private:
    void check(TruncatedSeries const& o) const {
      if (_nvars != o._nvars || _trunc != o._trunc) {
        throw DomainError("series with different variables or truncation");
      }
    }

    std::size_t _nvars;
    int         _trunc;
    Terms       _terms;
  };

  inline TruncatedSeries series_add(TruncatedSeries const& a, TruncatedSeries const& b) {
    return a + b;
  }

  inline TruncatedSeries series_mul(TruncatedSeries const& a, TruncatedSeries const& b) {
    return a * b;
  }

  //! 1/a = c^-1 sum_k (-r)^k where a = c (1 + r) and r is nilpotent.
  inline TruncatedSeries series_invert(TruncatedSeries const& a) {
    auto const c = a.constant_term();
    if (c.is_zero()) {
      throw DivisionByZero("series_invert: constant term is not invertible");
    }
    auto const cinv = c.inverse();
    auto       r    = cinv * a;
    r -= TruncatedSeries::constant(a.nvars(), a.truncation(), CyclotomicNumber(1));
    auto out  = TruncatedSeries::constant(a.nvars(), a.truncation(), CyclotomicNumber(1));
    auto term = out;
    for (int k = 1; 2 * k <= a.truncation(); ++k) {
      term = -(term * r);
      out += term;
    }
    return cinv * out;
  }

  //! exp(s) for s with zero constant term.
  inline TruncatedSeries series_exp(TruncatedSeries const& s) {
    if (!s.constant_term().is_zero()) {
      throw DomainError("series_exp: constant term must vanish");
    }
    auto out  = TruncatedSeries::constant(s.nvars(), s.truncation(), CyclotomicNumber(1));
    auto term = out;
    for (int k = 1; 2 * k <= s.truncation(); ++k) {
      term = CyclotomicNumber(Rational(1, k)) * (term * s);
      out += term;
    }
    return out;
  }

  inline TruncatedSeries exp_linear(LinearForm const& l, int truncation) {
    return series_exp(TruncatedSeries::linear(truncation, l));
  }

  //! (1 + zeta e^l) / (1 - zeta e^l) for a root of unity zeta != 1.
  inline TruncatedSeries angle_factor(CyclotomicNumber const& zeta, LinearForm const& l, int truncation) {
    auto const order = root_of_unity_order(zeta);
    if (order == 0) {
      throw DomainError("angle_factor: " + zeta.to_string() + " is not a root of unity");
    }
    if (order == 1) {
      throw DomainError("angle_factor: the root of unity must differ from 1");
    }
    auto const e   = zeta * exp_linear(l, truncation);
    auto const one = TruncatedSeries::constant(l.size(), truncation, CyclotomicNumber(1));
    return (one + e) * series_invert(one - e);
  }

  //! Bernoulli numbers B_0..B_n (B_1 = -1/2).
  inline std::vector<Rational> bernoulli_numbers(int n) {
    std::vector<Rational> b(static_cast<std::size_t>(n + 1));
    b[0] = 1;
    for (int m = 1; m <= n; ++m) {
      Rational s = 0;
      Integer  binom = 1;  // C(m+1, k)
      for (int k = 0; k < m; ++k) {
        s += binom * b[static_cast<std::size_t>(k)];
        binom = binom * (m + 1 - k) / (k + 1);
      }
      b[static_cast<std::size_t>(m)] = -s / (m + 1);
    }
    return b;
  }

  //! l / tanh(l) = sum_k 2^(2k) B_(2k) l^(2k) / (2k)!.
  inline TruncatedSeries l_class_factor(LinearForm const& l, int truncation) {
    auto const lin   = TruncatedSeries::linear(truncation, l);
    auto       out   = TruncatedSeries::constant(l.size(), truncation, CyclotomicNumber(1));
    auto const sq    = lin * lin;
    auto       power = out;
    auto const b     = bernoulli_numbers(truncation / 2 + 1);
    Integer    fact  = 1;
    Integer    two   = 1;
    for (int k = 1; 4 * k <= truncation; ++k) {
      power = power * sq;
      fact *= (2 * k - 1) * (2 * k);
      two *= 4;
      Rational c = two * b[static_cast<std::size_t>(2 * k)] / fact;
      out += CyclotomicNumber(c) * power;
    }
    return out;
  }

  //! Product of l_class_factor over the tangent Chern roots.
  inline TruncatedSeries l_class(std::vector<LinearForm> const& roots, std::size_t nvars, int truncation) {
    auto out = TruncatedSeries::constant(nvars, truncation, CyclotomicNumber(1));
    for (auto const& r : roots) {
      if (r.size() != nvars) {
        throw DomainError("l_class: root has the wrong number of variables");
      }
      out *= l_class_factor(r, truncation);
    }
    return out;
  }

  struct CothIdentity {
    bool holds = false;
    int  sign  = 0;  // coth((x + i theta)/2) = sign * angle_factor(zeta, x)
  };

  //! coth((x + i theta)/2) against angle_factor(zeta, x), theta = 2 pi a/m,
  //! with e^(i theta/2) realized as zeta_(2m)^a.
  inline CothIdentity coth_identity_check(std::int64_t a, std::int64_t m, int truncation) {
    if (m < 2 || a <= 0 || a >= m) {
      throw DomainError("coth identity: need 0 < a/m < 1");
    }
    auto const half  = root_of_unity(a, 2 * m);
    auto const zeta  = root_of_unity(a, m);
    auto const up    = half * exp_linear({Rational(1, 2)}, truncation);
    auto const down  = half.inverse() * exp_linear({Rational(-1, 2)}, truncation);
    auto const coth  = (up + down) * series_invert(up - down);
    auto const angle = angle_factor(zeta, {Rational(1)}, truncation);
    // Both signs hold when the series vanishes (zeta = -1, D < 2).
    if (coth == -angle) {
      return {true, -1};
    }
    if (coth == angle) {
      return {true, 1};
    }
    return {false, 0};
  }

  //! Linear functional on top-degree monomials (evaluation on [F]).
  class IntersectionFunctional {
   public:
    IntersectionFunctional(std::size_t nvars, int dim) : _nvars(nvars), _dim(dim) {
      if (dim < 0 || dim % 2 != 0) {
        throw DomainError("intersection functional: dimension must be even and non-negative");
      }
    }

    static IntersectionFunctional point() {
      IntersectionFunctional f(0, 0);
      f.set({}, Rational(1));
      return f;
    }

    void set(Monomial const& m, Rational const& value) {
      if (m.size() != _nvars) {
        throw DomainError("intersection functional: monomial has the wrong number of variables");
      }
      if (cohomological_degree(m) != _dim) {
        throw DomainError("intersection functional: monomial degree " + std::to_string(cohomological_degree(m))
                          + " differs from the dimension " + std::to_string(_dim));
      }
      if (value == 0) {
        _values.erase(m);
      } else {
        _values[m] = value;
      }
    }

    Rational operator()(Monomial const& m) const {
      auto it = _values.find(m);
      return it == _values.end() ? Rational(0) : it->second;
    }

    std::size_t nvars() const noexcept {
      return _nvars;
    }

    int dim() const noexcept {
      return _dim;
    }

    std::map<Monomial, Rational> const& values() const noexcept {
      return _values;
    }

   private:
    std::size_t                  _nvars;
    int                          _dim;
    std::map<Monomial, Rational> _values;
  };

  inline CyclotomicNumber integrate(TruncatedSeries const& s, IntersectionFunctional const& f) {
    if (s.nvars() != f.nvars()) {
      throw DomainError("integrate: series and functional have different variables");
    }
    if (s.truncation() < f.dim()) {
      throw DomainError("integrate: truncation below the top degree");
    }
    CyclotomicNumber out(0);
    for (auto const& [m, c] : s.terms()) {
      if (cohomological_degree(m) == f.dim()) {
        out += CyclotomicNumber(f(m)) * c;
      }
    }
    return out;
  }

}  // namespace equisig

#endif  // EQUISIG_CHARSERIES_SERIES_HPP
