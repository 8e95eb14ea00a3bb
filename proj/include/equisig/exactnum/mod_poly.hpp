#ifndef EQUISIG_EXACTNUM_MOD_POLY_HPP
#define EQUISIG_EXACTNUM_MOD_POLY_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "equisig/error.hpp"
#include "equisig/exactnum/polynomial.hpp"
#include "equisig/exactnum/rational.hpp"

namespace equisig {

  inline bool is_prime(std::uint64_t n) {
    if (n < 2) {
      return false;
    }
    Integer z(std::to_string(n), 10);
    // Deterministic below 2^64 (BPSW).
    return mpz_probab_prime_p(z.get_mpz_t(), 30) > 0;
  }

  //! Polynomial over the prime field F_p, coefficient of x^i at index i.
  class ModPolynomial {
   public:
    using Coeff = std::uint64_t;

    explicit ModPolynomial(Coeff p) : _p(p) {
      if (!is_prime(p) || p >= (Coeff(1) << 62)) {
        throw DomainError("ModPolynomial: characteristic must be a prime below 2^62");
      }
    }

    ModPolynomial(Coeff p, std::vector<Coeff> coeffs) : ModPolynomial(p) {
      for (auto& c : coeffs) {
        c %= p;
      }
      _c = std::move(coeffs);
      trim();
    }

    //! Reduction of an integer polynomial modulo p.
    static ModPolynomial from_integers(Coeff p, IntPoly const& a) {
      ModPolynomial out(p);
      Integer const pz(std::to_string(p), 10);
      out._c.resize(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) {
        Integer r = a[i] % pz;
        if (r < 0) {
          r += pz;
        }
        out._c[i] = std::stoull(r.get_str());
      }
      out.trim();
      return out;
    }

    static ModPolynomial x(Coeff p) {
      return ModPolynomial(p, {0, 1});
    }

    Coeff characteristic() const noexcept {
      return _p;
    }

    std::vector<Coeff> const& coefficients() const noexcept {
      return _c;
    }

    //! -1 for the zero polynomial.
    long degree() const noexcept {
      return static_cast<long>(_c.size()) - 1;
    }

    bool is_zero() const noexcept {
      return _c.empty();
    }

    Coeff leading() const {
      return _c.empty() ? 0 : _c.back();
    }

    Coeff operator[](std::size_t i) const {
      return i < _c.size() ? _c[i] : 0;
    }

    Coeff mul_mod(Coeff a, Coeff b) const {
      return static_cast<Coeff>(static_cast<unsigned __int128>(a) * b % _p);
    }

    Coeff inv_mod(Coeff a) const {
      if (a % _p == 0) {
        throw DivisionByZero("inverse of zero in F_p");
      }
      return pow_mod(a, _p - 2);
    }

    Coeff pow_mod(Coeff a, Coeff e) const {
      Coeff r = 1 % _p;
      a %= _p;
      while (e > 0) {
        if (e & 1) {
          r = mul_mod(r, a);
        }
        a = mul_mod(a, a);
        e >>= 1;
      }
      return r;
    }

    ModPolynomial monic() const {
      if (is_zero()) {
        return *this;
      }
      auto inv = inv_mod(leading());
      ModPolynomial out = *this;
      for (auto& c : out._c) {
        c = mul_mod(c, inv);
      }
      return out;
    }

    friend ModPolynomial operator+(ModPolynomial a, ModPolynomial const& b) {
      a.check_same_field(b);
      if (a._c.size() < b._c.size()) {
        a._c.resize(b._c.size(), 0);
      }
      for (std::size_t i = 0; i < b._c.size(); ++i) {
        a._c[i] = (a._c[i] + b._c[i]) % a._p;
      }
      a.trim();
      return a;
    }

    friend ModPolynomial operator-(ModPolynomial a, ModPolynomial const& b) {
      a.check_same_field(b);
      if (a._c.size() < b._c.size()) {
        a._c.resize(b._c.size(), 0);
      }
      for (std::size_t i = 0; i < b._c.size(); ++i) {
        a._c[i] = (a._c[i] + a._p - b._c[i]) % a._p;
      }
      a.trim();
      return a;
    }

    friend ModPolynomial operator*(ModPolynomial const& a, ModPolynomial const& b) {
      a.check_same_field(b);
      ModPolynomial out(a._p);
      if (a.is_zero() || b.is_zero()) {
        return out;
      }
      out._c.assign(a._c.size() + b._c.size() - 1, 0);
      for (std::size_t i = 0; i < a._c.size(); ++i) {
        if (a._c[i] == 0) {
          continue;
        }
        for (std::size_t j = 0; j < b._c.size(); ++j) {
          out._c[i + j] = (out._c[i + j] + a.mul_mod(a._c[i], b._c[j])) % a._p;
        }
      }
      out.trim();
      return out;
    }

    //! Quotient and remainder; `b` non-zero.
    friend std::pair<ModPolynomial, ModPolynomial> divrem(ModPolynomial a,
                                                          ModPolynomial const& b) {
      a.check_same_field(b);
      if (b.is_zero()) {
        throw DivisionByZero("polynomial division by zero");
      }
      ModPolynomial q(a._p);
      if (a.degree() < b.degree()) {
        return {q, a};
      }
      auto const p   = a._p;
      auto const inv = a.inv_mod(b.leading());
      auto const db  = b._c.size();
      q._c.assign(a._c.size() - db + 1, 0);
      for (auto i = a._c.size(); i-- >= db;) {
        auto c = a.mul_mod(a._c[i], inv);
        if (c == 0) {
          continue;
        }
        q._c[i - db + 1] = c;
        for (std::size_t j = 0; j < db; ++j) {
          auto& t = a._c[i - db + 1 + j];
          t       = (t + p - a.mul_mod(c, b._c[j])) % p;
        }
      }
      q.trim();
      a.trim();
      return {q, a};
    }

    friend ModPolynomial operator%(ModPolynomial const& a, ModPolynomial const& b) {
      return divrem(a, b).second;
    }

    //! Monic gcd (zero when both are zero).
    friend ModPolynomial gcd(ModPolynomial a, ModPolynomial b) {
      while (!b.is_zero()) {
        auto r = a % b;
        a      = std::move(b);
        b      = std::move(r);
      }
      return a.monic();
    }

    //! base^e modulo m.
    friend ModPolynomial powmod(ModPolynomial base, Integer e, ModPolynomial const& m) {
      ModPolynomial result(m._p, {1});
      result = result % m;
      base   = base % m;
      while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) {
          result = (result * base) % m;
        }
        e >>= 1;
        if (e > 0) {
          base = (base * base) % m;
        }
      }
      return result;
    }

    friend bool operator==(ModPolynomial const& a, ModPolynomial const& b) {
      return a._p == b._p && a._c == b._c;
    }
    friend bool operator!=(ModPolynomial const& a, ModPolynomial const& b) {
      return !(a == b);
    }

    std::string to_string() const {
      IntPoly a;
      for (auto c : _c) {
        a.emplace_back(std::to_string(c), 10);
      }
      return poly::to_string(a);
    }

   private:
    void trim() {
      while (!_c.empty() && _c.back() == 0) {
        _c.pop_back();
      }
    }

    void check_same_field(ModPolynomial const& b) const {
      if (_p != b._p) {
        throw DomainError("ModPolynomial: characteristic mismatch");
      }
    }

    Coeff              _p;
    std::vector<Coeff> _c;
  };

  namespace detail {
    inline Integer big_pow(std::uint64_t p, long e) {
      Integer r;
      Integer base(std::to_string(p), 10);
      mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
      return r;
    }

    // x^(p^k) mod f.
    inline ModPolynomial frobenius_power(ModPolynomial const& f, long k) {
      auto const p = f.characteristic();
      auto       y = ModPolynomial::x(p) % f;
      for (long i = 0; i < k; ++i) {
        y = powmod(y, Integer(std::to_string(p), 10), f);
      }
      return y;
    }

    // Splits a squarefree product of irreducibles of equal degree d
    // (Cantor-Zassenhaus; trace map in characteristic 2).
    inline void equal_degree_split(ModPolynomial const&        f,
                                   long                        d,
                                   std::mt19937_64&            rng,
                                   std::vector<ModPolynomial>& out) {
      if (f.degree() == d) {
        out.push_back(f.monic());
        return;
      }
      auto const p = f.characteristic();
      std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
      Integer const half = (big_pow(p, d) - 1) / 2;
      while (true) {
        std::vector<std::uint64_t> c(static_cast<std::size_t>(f.degree()));
        for (auto& x : c) {
          x = dist(rng);
        }
        ModPolynomial a(p, c);
        if (a.degree() < 1) {
          continue;
        }
        ModPolynomial b(p);
        if (p == 2) {
          auto t = a % f;
          b      = t;
          for (long i = 1; i < d; ++i) {
            t = (t * t) % f;
            b = b + t;
          }
        } else {
          b = powmod(a, half, f) - ModPolynomial(p, {1});
        }
        auto g = gcd(f, b);
        if (g.degree() > 0 && g.degree() < f.degree()) {
          equal_degree_split(g, d, rng, out);
          equal_degree_split(divrem(f, g).first, d, rng, out);
          return;
        }
      }
    }

    // Ordering key: (e_1, ..., e_d) for f = x^d - e_1 x^(d-1) + e_2 x^(d-2) - ...
    // For linear factors x - r this orders by the root r.
    inline std::vector<std::uint64_t> canonical_key(ModPolynomial const& f) {
      auto const p = f.characteristic();
      auto const d = f.degree();
      std::vector<std::uint64_t> key;
      for (long k = 1; k <= d; ++k) {
        auto c = f[static_cast<std::size_t>(d - k)];
        key.push_back(k % 2 == 0 ? c : (p - c) % p);
      }
      return key;
    }
  }  // namespace detail

  //! True when f has positive degree and no non-trivial factor, checked by
  //! gcd(f, x^(p^k) - x) = 1 for 1 <= k <= deg/2.
  inline bool is_irreducible(ModPolynomial const& f) {
    if (f.degree() < 1) {
      return false;
    }
    auto const p = f.characteristic();
    auto       y = ModPolynomial::x(p) % f;
    for (long k = 1; 2 * k <= f.degree(); ++k) {
      y = powmod(y, Integer(std::to_string(p), 10), f);
      if (gcd(f, y - ModPolynomial::x(p)).degree() > 0) {
        return false;
      }
    }
    return true;
  }

  //! All monic irreducible factors of Phi_n over F_p, in canonical order.
  //! Requires p not dividing n.
  inline std::vector<ModPolynomial> cyclotomic_factors_mod_p(std::int64_t n, std::uint64_t p) {
    if (!is_prime(p)) {
      throw DomainError("factor_cyclotomic_mod_p: " + std::to_string(p) + " is not prime");
    }
    if (n < 1 || static_cast<std::uint64_t>(n) % p == 0) {
      throw DomainError("factor_cyclotomic_mod_p: p divides n");
    }
    auto f = ModPolynomial::from_integers(p, cyclotomic_polynomial(n));
    auto d = multiplicative_order(static_cast<std::int64_t>(p % static_cast<std::uint64_t>(n)), n);
    std::vector<ModPolynomial> out;
    std::mt19937_64            rng(0x5eed + static_cast<std::uint64_t>(n) * 31 + p);
    detail::equal_degree_split(f, d, rng, out);
    std::sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
      return detail::canonical_key(a) < detail::canonical_key(b);
    });
    return out;
  }

  //! The canonical irreducible factor of Phi_n mod p: the factor whose key
  //! (e_1, ..., e_d) of signed coefficients is lexicographically least.  Its
  //! degree is the multiplicative order of p modulo n.
  inline ModPolynomial factor_cyclotomic_mod_p(std::int64_t n, std::uint64_t p) {
    return cyclotomic_factors_mod_p(n, p).front();
  }

}  // namespace equisig

#endif  // EQUISIG_EXACTNUM_MOD_POLY_HPP
