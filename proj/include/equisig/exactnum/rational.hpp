#ifndef EQUISIG_EXACTNUM_RATIONAL_HPP
#define EQUISIG_EXACTNUM_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "equisig/error.hpp"

namespace equisig {

  using Integer  = mpz_class;
  using Rational = mpq_class;

  inline Rational make_rational(Integer const& num, Integer const& den) {
    if (den == 0) {
      throw DivisionByZero("rational with zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  //! "a/b", or "a" when the denominator is 1.
  inline std::string to_string(Rational const& q) {
    return q.get_str();
  }

  inline std::string to_string(Integer const& z) {
    return z.get_str();
  }

  namespace detail {
    inline bool is_integer_literal(std::string_view s) {
      if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        s.remove_prefix(1);
      }
      if (s.empty()) {
        return false;
      }
      for (char c : s) {
        if (c < '0' || c > '9') {
          return false;
        }
      }
      return true;
    }

    inline std::string_view strip(std::string_view s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
      }
      while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
      }
      return s;
    }
  }  // namespace detail

  inline Integer parse_integer(std::string_view text) {
    auto s = detail::strip(text);
    if (!detail::is_integer_literal(s)) {
      throw DomainError("not an integer: '" + std::string(text) + "'");
    }
    if (s.front() == '+') {
      s.remove_prefix(1);
    }
    return Integer(std::string(s), 10);
  }

  //! Accepts "a" or "a/b".
  inline Rational parse_rational(std::string_view text) {
    auto s     = detail::strip(text);
    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
      return Rational(parse_integer(s));
    }
    return make_rational(parse_integer(s.substr(0, slash)),
                         parse_integer(s.substr(slash + 1)));
  }

  // Small-integer number theory on structural quantities (conductors, group
  // orders).  Group orders are capped well below the int64 range.

  inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
    auto r = a % m;
    return r < 0 ? r + m : r;
  }

  inline std::vector<std::int64_t> prime_factors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t p = 2; p * p <= n; ++p) {
      if (n % p == 0) {
        out.push_back(p);
        while (n % p == 0) {
          n /= p;
        }
      }
    }
    if (n > 1) {
      out.push_back(n);
    }
    return out;
  }

  inline std::vector<std::int64_t> divisors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 1; d <= n; ++d) {
      if (n % d == 0) {
        out.push_back(d);
      }
    }
    return out;
  }

  inline std::int64_t euler_phi(std::int64_t n) {
    std::int64_t result = n;
    for (auto p : prime_factors(n)) {
      result = result / p * (p - 1);
    }
    return result;
  }

  //! Returns (g, x, y) with a*x + b*y = g = gcd(a, b).
  struct ExtendedGcd {
    std::int64_t g, x, y;
  };

  inline ExtendedGcd extended_gcd(std::int64_t a, std::int64_t b) {
    if (b == 0) {
      return a >= 0 ? ExtendedGcd{a, 1, 0} : ExtendedGcd{-a, -1, 0};
    }
    auto r = extended_gcd(b, a % b);
    return {r.g, r.y, r.x - (a / b) * r.y};
  }

  inline std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
    auto r = extended_gcd(mod_floor(a, m), m);
    if (r.g != 1) {
      throw DomainError("not invertible modulo " + std::to_string(m));
    }
    return mod_floor(r.x, m);
  }

  //! Order of a modulo n; requires gcd(a, n) = 1.
  inline std::int64_t multiplicative_order(std::int64_t a, std::int64_t n) {
    if (n == 1) {
      return 1;
    }
    a = mod_floor(a, n);
    if (std::gcd(a, n) != 1) {
      throw DomainError("multiplicative_order: not a unit");
    }
    std::int64_t x = a, k = 1;
    while (x != 1) {
      x = static_cast<std::int64_t>((static_cast<__int128>(x) * a) % n);
      ++k;
    }
    return k;
  }

}  // namespace equisig

#endif  // EQUISIG_EXACTNUM_RATIONAL_HPP
