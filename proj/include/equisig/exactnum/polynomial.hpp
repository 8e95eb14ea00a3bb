#ifndef EQUISIG_EXACTNUM_POLYNOMIAL_HPP
#define EQUISIG_EXACTNUM_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "equisig/error.hpp"
#include "equisig/exactnum/rational.hpp"

namespace equisig {

  // Dense univariate polynomials, coefficient of x^i at index i.  The zero
  // polynomial is the empty vector.
  using IntPoly = std::vector<Integer>;
  using RatPoly = std::vector<Rational>;

  namespace poly {

    template <typename T>
    void trim(std::vector<T>& a) {
      while (!a.empty() && a.back() == 0) {
        a.pop_back();
      }
    }

    template <typename T>
    std::vector<T> mul(std::vector<T> const& a, std::vector<T> const& b) {
      if (a.empty() || b.empty()) {
        return {};
      }
      std::vector<T> out(a.size() + b.size() - 1, T(0));
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) {
          continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
          out[i + j] += a[i] * b[j];
        }
      }
      trim(out);
      return out;
    }

    template <typename T>
    std::vector<T> sub(std::vector<T> a, std::vector<T> const& b) {
      if (a.size() < b.size()) {
        a.resize(b.size(), T(0));
      }
      for (std::size_t i = 0; i < b.size(); ++i) {
        a[i] -= b[i];
      }
      trim(a);
      return a;
    }

    //! In-place reduction of `a` modulo a monic integer polynomial.
    inline void reduce_monic(RatPoly& a, IntPoly const& m) {
      auto const deg = m.size() - 1;
      for (auto i = a.size(); i-- > deg;) {
        if (a[i] == 0) {
          continue;
        }
        Rational c = a[i];
        for (std::size_t j = 0; j < deg; ++j) {
          if (m[j] != 0) {
            a[i - deg + j] -= c * m[j];
          }
        }
        a[i] = 0;
      }
      if (a.size() > deg) {
        a.resize(deg);
      }
    }

    //! Quotient and remainder over Q; `b` must be non-zero.
    inline std::pair<RatPoly, RatPoly> divmod(RatPoly a, RatPoly const& b) {
      if (b.empty()) {
        throw DivisionByZero("polynomial division by zero");
      }
      trim(a);
      if (a.size() < b.size()) {
        return {{}, a};
      }
      RatPoly q(a.size() - b.size() + 1, Rational(0));
      Rational const lead_inv = 1 / b.back();
      for (auto i = a.size(); i-- >= b.size();) {
        if (a[i] == 0) {
          continue;
        }
        Rational c         = a[i] * lead_inv;
        q[i - b.size() + 1] = c;
        for (std::size_t j = 0; j < b.size(); ++j) {
          a[i - b.size() + 1 + j] -= c * b[j];
        }
      }
      trim(q);
      trim(a);
      return {q, a};
    }

    //! s with s*a = 1 modulo m, where gcd(a, m) = 1 over Q.
    inline RatPoly inverse_mod(RatPoly a, RatPoly const& m) {
      trim(a);
      if (a.empty()) {
        throw DivisionByZero("inverse of zero");
      }
      // Invariant: r0 = s0*a (mod m), r1 = s1*a (mod m).
      RatPoly r0 = m, r1 = a;
      RatPoly s0, s1 = {Rational(1)};
      while (r1.size() > 1) {
        auto [q, r] = divmod(r0, r1);
        auto s      = sub(s0, mul(q, s1));
        r0          = std::move(r1);
        r1          = std::move(r);
        s0          = std::move(s1);
        s1          = std::move(s);
      }
      if (r1.empty()) {
        throw DivisionByZero("element is not invertible modulo the given polynomial");
      }
      Rational const c = 1 / r1[0];
      for (auto& x : s1) {
        x *= c;
      }
      auto [_, rem] = divmod(s1, m);
      return rem;
    }

    //! Exact division of integer polynomials (b monic).
    inline IntPoly exact_div_monic(IntPoly a, IntPoly const& b) {
      IntPoly q(a.size() - b.size() + 1, Integer(0));
      for (auto i = a.size(); i-- >= b.size();) {
        Integer c           = a[i];
        q[i - b.size() + 1] = c;
        if (c == 0) {
          continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
          a[i - b.size() + 1 + j] -= c * b[j];
        }
      }
      for (auto const& r : a) {
        if (r != 0) {
          throw InternalError("exact_div_monic: non-zero remainder");
        }
      }
      return q;
    }

    inline std::string to_string(IntPoly const& a, char var = 'x') {
      if (a.empty()) {
        return "0";
      }
      std::string out;
      for (auto i = a.size(); i-- > 0;) {
        if (a[i] == 0) {
          continue;
        }
        Integer c = a[i];
        if (!out.empty()) {
          out += c < 0 ? " - " : " + ";
          c = abs(c);
        } else if (c < 0) {
          out += "-";
          c = abs(c);
        }
        if (i == 0 || c != 1) {
          out += c.get_str();
        }
        if (i > 0) {
          out += var;
          if (i > 1) {
            out += "^" + std::to_string(i);
          }
        }
      }
      return out;
    }
  }  // namespace poly

  //! The n-th cyclotomic polynomial, computed by dividing x^n - 1 by Phi_d
  //! for the proper divisors d of n.  Results are cached; the returned
  //! reference stays valid for the program lifetime.
  inline IntPoly const& cyclotomic_polynomial(std::int64_t n) {
    if (n < 1) {
      throw DomainError("cyclotomic_polynomial: n must be positive");
    }
    static std::mutex                        mutex;
    static std::map<std::int64_t, IntPoly>   cache;
    {
      std::lock_guard<std::mutex> lock(mutex);
      auto it = cache.find(n);
      if (it != cache.end()) {
        return it->second;
      }
    }
    IntPoly a(static_cast<std::size_t>(n) + 1, Integer(0));
    a[0] = -1;
    a[n] = 1;
    for (auto d : divisors(n)) {
      if (d != n) {
        a = poly::exact_div_monic(std::move(a), cyclotomic_polynomial(d));
      }
    }
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(n, std::move(a)).first->second;
  }

}  // namespace equisig

#endif  // EQUISIG_EXACTNUM_POLYNOMIAL_HPP
