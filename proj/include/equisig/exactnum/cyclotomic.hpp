#ifndef EQUISIG_EXACTNUM_CYCLOTOMIC_HPP
#define EQUISIG_EXACTNUM_CYCLOTOMIC_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "equisig/error.hpp"
#include "equisig/exactnum/polynomial.hpp"
#include "equisig/exactnum/rational.hpp"

namespace equisig {

  //! An exact element of the cyclotomic field Q(zeta_n), stored as the
  //! coefficient vector in the power basis 1, zeta_n, ..., zeta_n^(phi(n)-1)
  //! modulo Phi_n.
  //!
  //! Every value is kept at its minimal conductor (never 2 mod 4), so two
  //! values are equal exactly when conductors and coefficient vectors agree.
  class CyclotomicNumber {
   public:
    CyclotomicNumber() : _conductor(1), _coeffs{Rational(0)} {}
    CyclotomicNumber(Rational const& q) : _conductor(1), _coeffs{q} {}  // NOLINT
    CyclotomicNumber(Integer const& z) : _conductor(1), _coeffs{Rational(z)} {}  // NOLINT
    CyclotomicNumber(long v) : _conductor(1), _coeffs{Rational(v)} {}  // NOLINT
    CyclotomicNumber(int v) : CyclotomicNumber(static_cast<long>(v)) {}  // NOLINT

    //! Sum of coeffs[i] * zeta_n^i for a coefficient vector of any length.
    static CyclotomicNumber from_power_basis(std::int64_t n, RatPoly coeffs) {
      check_conductor(n);
      poly::reduce_monic(coeffs, cyclotomic_polynomial(n));
      coeffs.resize(static_cast<std::size_t>(euler_phi(n)), Rational(0));
      CyclotomicNumber out;
      out._conductor = n;
      out._coeffs    = std::move(coeffs);
      out.lower();
      return out;
    }

    //! Sum of by_exponent[k] * zeta_n^k, k = 0..n-1.
    static CyclotomicNumber from_exponent_sum(std::int64_t            n,
                                              std::vector<Rational> const& by_exponent) {
      if (static_cast<std::int64_t>(by_exponent.size()) != n) {
        throw DomainError("from_exponent_sum: expected one coefficient per exponent");
      }
      return from_power_basis(n, by_exponent);
    }

    std::int64_t conductor() const noexcept {
      return _conductor;
    }

    RatPoly const& coefficients() const noexcept {
      return _coeffs;
    }

    //! Power-basis coefficients of this value viewed in Q(zeta_n); n must be
    //! a multiple of the conductor.
    RatPoly coefficients_at(std::int64_t n) const {
      check_conductor(n);
      if (n % _conductor != 0) {
        throw DomainError("coefficients_at: " + std::to_string(n)
                          + " is not a multiple of the conductor "
                          + std::to_string(_conductor));
      }
      auto const step = n / _conductor;
      RatPoly    a(static_cast<std::size_t>((_coeffs.size() - 1) * step + 1), Rational(0));
      for (std::size_t i = 0; i < _coeffs.size(); ++i) {
        a[i * step] = _coeffs[i];
      }
      poly::reduce_monic(a, cyclotomic_polynomial(n));
      a.resize(static_cast<std::size_t>(euler_phi(n)), Rational(0));
      return a;
    }

    bool is_zero() const noexcept {
      return _conductor == 1 && _coeffs[0] == 0;
    }

    bool is_rational() const noexcept {
      return _conductor == 1;
    }

    Rational const& to_rational() const {
      if (!is_rational()) {
        throw DomainError("cyclotomic number " + to_string() + " is not rational");
      }
      return _coeffs[0];
    }

    bool is_one() const noexcept {
      return _conductor == 1 && _coeffs[0] == 1;
    }

    CyclotomicNumber operator-() const {
      CyclotomicNumber out = *this;
      for (auto& c : out._coeffs) {
        c = -c;
      }
      return out;
    }

    friend CyclotomicNumber operator+(CyclotomicNumber const& a, CyclotomicNumber const& b) {
      if (a._conductor == b._conductor) {
        RatPoly c = a._coeffs;
        for (std::size_t i = 0; i < c.size(); ++i) {
          c[i] += b._coeffs[i];
        }
        return from_reduced(a._conductor, std::move(c));
      }
      auto n = std::lcm(a._conductor, b._conductor);
      auto c = a.coefficients_at(n);
      auto d = b.coefficients_at(n);
      for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] += d[i];
      }
      return from_reduced(n, std::move(c));
    }

    friend CyclotomicNumber operator-(CyclotomicNumber const& a, CyclotomicNumber const& b) {
      return a + (-b);
    }

    friend CyclotomicNumber operator*(CyclotomicNumber const& a, CyclotomicNumber const& b) {
      if (a.is_rational()) {
        return b.scaled(a._coeffs[0]);
      }
      if (b.is_rational()) {
        return a.scaled(b._coeffs[0]);
      }
      auto n = std::lcm(a._conductor, b._conductor);
      return from_power_basis(n, poly::mul(a.coefficients_at(n), b.coefficients_at(n)));
    }

    friend CyclotomicNumber operator/(CyclotomicNumber const& a, CyclotomicNumber const& b) {
      return a * b.inverse();
    }

    CyclotomicNumber& operator+=(CyclotomicNumber const& b) {
      return *this = *this + b;
    }
    CyclotomicNumber& operator-=(CyclotomicNumber const& b) {
      return *this = *this - b;
    }
    CyclotomicNumber& operator*=(CyclotomicNumber const& b) {
      return *this = *this * b;
    }
    CyclotomicNumber& operator/=(CyclotomicNumber const& b) {
      return *this = *this / b;
    }

    CyclotomicNumber scaled(Rational const& q) const {
      if (q == 0) {
        return {};
      }
      CyclotomicNumber out = *this;
      for (auto& c : out._coeffs) {
        c *= q;
      }
      return out;
    }

    //! Multiplicative inverse via the extended Euclidean algorithm against
    //! Phi_n.  Throws DivisionByZero on zero.
    CyclotomicNumber inverse() const {
      if (is_zero()) {
        throw DivisionByZero("inverse of zero cyclotomic number");
      }
      if (is_rational()) {
        return CyclotomicNumber(1 / _coeffs[0]);
      }
      auto const& phi = cyclotomic_polynomial(_conductor);
      RatPoly     m(phi.begin(), phi.end());
      return from_power_basis(_conductor, poly::inverse_mod(_coeffs, m));
    }

    CyclotomicNumber pow(std::int64_t e) const {
      if (e < 0) {
        return inverse().pow(-e);
      }
      CyclotomicNumber result(1), base = *this;
      while (e > 0) {
        if (e & 1) {
          result *= base;
        }
        e >>= 1;
        if (e > 0) {
          base *= base;
        }
      }
      return result;
    }

    //! Image under the Galois automorphism zeta_m -> zeta_m^k for any m
    //! divisible by the conductor; k must be coprime to the conductor.
    CyclotomicNumber galois(std::int64_t k) const {
      if (is_rational()) {
        return *this;
      }
      auto const n = _conductor;
      k            = mod_floor(k, n);
      if (std::gcd(k, n) != 1) {
        throw DomainError("galois: exponent not coprime to conductor");
      }
      std::vector<Rational> by_exp(static_cast<std::size_t>(n), Rational(0));
      for (std::size_t i = 0; i < _coeffs.size(); ++i) {
        by_exp[static_cast<std::size_t>(mod_floor(static_cast<std::int64_t>(i) * k, n))]
            += _coeffs[i];
      }
      return from_exponent_sum(n, by_exp);
    }

    //! Complex conjugation.
    CyclotomicNumber conj() const {
      return galois(-1);
    }

    friend bool operator==(CyclotomicNumber const& a, CyclotomicNumber const& b) {
      return a._conductor == b._conductor && a._coeffs == b._coeffs;
    }
    friend bool operator!=(CyclotomicNumber const& a, CyclotomicNumber const& b) {
      return !(a == b);
    }

    //! Floating-point rendering; for human-readable output only.
    std::complex<double> approx() const {
      std::complex<double> z(0.0, 0.0);
      for (std::size_t i = 0; i < _coeffs.size(); ++i) {
        if (_coeffs[i] != 0) {
          double angle = 2.0 * std::numbers::pi * static_cast<double>(i)
                         / static_cast<double>(_conductor);
          z += _coeffs[i].get_d() * std::polar(1.0, angle);
        }
      }
      return z;
    }

    //! e.g. "2/3 + 1/3*z3" where zN^k stands for exp(2 pi i k / N).
    std::string to_string() const {
      std::string out;
      for (std::size_t i = 0; i < _coeffs.size(); ++i) {
        Rational c = _coeffs[i];
        if (c == 0) {
          continue;
        }
        if (!out.empty()) {
          out += c < 0 ? " - " : " + ";
          c = abs(c);
        } else if (c < 0) {
          out += "-";
          c = abs(c);
        }
        if (i == 0) {
          out += c.get_str();
          continue;
        }
        if (c != 1) {
          out += c.get_str() + "*";
        }
        out += "z" + std::to_string(_conductor);
        if (i > 1) {
          out += "^" + std::to_string(i);
        }
      }
      return out.empty() ? "0" : out;
    }

    friend std::ostream& operator<<(std::ostream& os, CyclotomicNumber const& x) {
      return os << x.to_string();
    }

   private:
    static void check_conductor(std::int64_t n) {
      if (n < 1) {
        throw DomainError("conductor must be positive");
      }
    }

    static CyclotomicNumber from_reduced(std::int64_t n, RatPoly coeffs) {
      CyclotomicNumber out;
      out._conductor = n;
      out._coeffs    = std::move(coeffs);
      out.lower();
      return out;
    }

    // Moves the value to its minimal conductor by repeatedly descending
    // from Q(zeta_n) to Q(zeta_{n/p}).
    void lower() {
      bool progress = true;
      while (progress && _conductor > 1) {
        progress = false;
        for (auto p : prime_factors(_conductor)) {
          if (try_lower(p)) {
            progress = true;
            break;
          }
        }
      }
    }

    bool try_lower(std::int64_t p) {
      auto const n = _conductor;
      auto const d = n / p;
      if (d % p == 0) {
        // Phi_n(x) = Phi_d(x^p): the subfield is spanned by the powers
        // divisible by p.
        for (std::size_t i = 0; i < _coeffs.size(); ++i) {
          if (i % p != 0 && _coeffs[i] != 0) {
            return false;
          }
        }
        RatPoly c(_coeffs.size() / static_cast<std::size_t>(p));
        for (std::size_t j = 0; j < c.size(); ++j) {
          c[j] = _coeffs[j * p];
        }
        _conductor = d;
        _coeffs    = std::move(c);
        return true;
      }
      // p exactly divides n: zeta_n = zeta_d^a * zeta_p^b with a*p + b*d = 1.
      // A candidate in Q(zeta_d) is the relative trace divided by p - 1;
      // accept it when it embeds back to this value.
      auto const eg = extended_gcd(p, d);
      auto const a = eg.x, b = eg.y;
      std::vector<Rational> by_exp(static_cast<std::size_t>(d), Rational(0));
      Rational const        scale = Rational(1) / Rational(p - 1);
      for (std::size_t i = 0; i < _coeffs.size(); ++i) {
        if (_coeffs[i] == 0) {
          continue;
        }
        auto const ii  = static_cast<std::int64_t>(i);
        auto const e_d = mod_floor(a * ii, d);
        bool const fixed = mod_floor(b * ii, p) == 0;
        if (fixed) {
          by_exp[static_cast<std::size_t>(e_d)] += _coeffs[i];
        } else {
          by_exp[static_cast<std::size_t>(e_d)] -= _coeffs[i] * scale;
        }
      }
      RatPoly cand = std::move(by_exp);
      poly::reduce_monic(cand, cyclotomic_polynomial(d));
      cand.resize(static_cast<std::size_t>(euler_phi(d)), Rational(0));
      CyclotomicNumber lowered;
      lowered._conductor = d;
      lowered._coeffs    = std::move(cand);
      if (lowered.coefficients_at(n) != _coeffs) {
        return false;
      }
      *this = std::move(lowered);
      return true;
    }

    std::int64_t _conductor;
    RatPoly      _coeffs;
  };

  //! zeta_m^a at its minimal conductor.
  inline CyclotomicNumber root_of_unity(std::int64_t a, std::int64_t m) {
    if (m < 1) {
      throw DomainError("root_of_unity: m must be positive");
    }
    a             = mod_floor(a, m);
    auto const g  = std::gcd(a, m);
    auto const n  = m / g;
    auto const k  = a / g;
    std::vector<Rational> by_exp(static_cast<std::size_t>(n), Rational(0));
    by_exp[static_cast<std::size_t>(k % n)] = 1;
    return CyclotomicNumber::from_exponent_sum(n, by_exp);
  }

  //! Order of x as a root of unity, or 0 when x is not a root of unity.
  inline std::int64_t root_of_unity_order(CyclotomicNumber const& x) {
    auto const bound = 2 * x.conductor();
    CyclotomicNumber power = x;
    for (std::int64_t k = 1; k <= bound; ++k) {
      if (power.is_one()) {
        return k;
      }
      power *= x;
    }
    return 0;
  }

}  // namespace equisig

#endif  // EQUISIG_EXACTNUM_CYCLOTOMIC_HPP
