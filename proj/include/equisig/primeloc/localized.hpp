#ifndef EQUISIG_PRIMELOC_LOCALIZED_HPP
#define EQUISIG_PRIMELOC_LOCALIZED_HPP

#include <numeric>
#include <string>
#include <vector>

#include "equisig/error.hpp"
#include "equisig/primeloc/prime.hpp"

namespace equisig {

  //! A fraction numerator / denominator in R(G)_p, denominator outside p.
  class LocalizedElement {
   public:
    LocalizedElement(VirtualRep numerator, VirtualRep denominator, PrimeIdealSpec prime)
        : _num(std::move(numerator)), _den(std::move(denominator)), _prime(std::move(prime)) {
      if (_num.group() != _prime.group() || _den.group() != _prime.group()) {
        throw GroupMismatch("localized element: numerator, denominator and prime must share a group");
      }
      if (_prime.contains(_den)) {
        throw DivisionByZero("localized element: denominator lies in " + _prime.to_string());
      }
    }

    LocalizedElement(VirtualRep numerator, PrimeIdealSpec prime)
        : LocalizedElement(numerator, VirtualRep::one(numerator.group()), std::move(prime)) {}

    VirtualRep const& numerator() const noexcept {
      return _num;
    }
    VirtualRep const& denominator() const noexcept {
      return _den;
    }
    PrimeIdealSpec const& prime() const noexcept {
      return _prime;
    }

    //! Zero iff the numerator vanishes at every minimal prime inside p.
    bool is_zero() const {
      for (auto x : _prime.minimal_primes()) {
        if (!evaluate(_num, x).is_zero()) {
          return false;
        }
      }
      return true;
    }

    bool is_unit() const {
      return !_prime.contains(_num);
    }

    LocalizedElement inverse() const {
      if (!is_unit()) {
        throw DivisionByZero("localized element is not a unit at " + _prime.to_string());
      }
      return LocalizedElement(_den, _num, _prime);
    }

    friend LocalizedElement operator+(LocalizedElement const& a, LocalizedElement const& b) {
      a.same_prime(b);
      return LocalizedElement(a._num * b._den + b._num * a._den, a._den * b._den, a._prime);
    }
    friend LocalizedElement operator-(LocalizedElement const& a, LocalizedElement const& b) {
      a.same_prime(b);
      return LocalizedElement(a._num * b._den - b._num * a._den, a._den * b._den, a._prime);
    }
    friend LocalizedElement operator*(LocalizedElement const& a, LocalizedElement const& b) {
      a.same_prime(b);
      return LocalizedElement(a._num * b._num, a._den * b._den, a._prime);
    }
    friend LocalizedElement operator/(LocalizedElement const& a, LocalizedElement const& b) {
      return a * b.inverse();
    }

    friend bool equals(LocalizedElement const& a, LocalizedElement const& b) {
      a.same_prime(b);
      return LocalizedElement(a._num * b._den - b._num * a._den, a._den * b._den, a._prime)
          .is_zero();
    }

   private:
    void same_prime(LocalizedElement const& o) const {
      if (!(_prime == o._prime)) {
        throw GroupMismatch("localized elements at different primes");
      }
    }

    VirtualRep     _num;
    VirtualRep     _den;
    PrimeIdealSpec _prime;
  };

  inline bool localized_is_zero(LocalizedElement const& e) {
    return e.is_zero();
  }

  inline bool localized_equals(LocalizedElement const& a, LocalizedElement const& b) {
    return equals(a, b);
  }

  //! Outcome of the comparison of R(G)_p with R(H)_q, H the support of p.
  struct LocalizationReport {
    Subgroup       support;
    PrimeIdealSpec prime_on_support;
    std::int64_t   index = 1;              // |G/H|
    VirtualRep     unit{};                 // Ind_H^G 1
    bool           unit_value_checked = false;  // takes the value |G/H| on H
    bool           unit_outside_prime = false;
    bool           annihilates_kernel = false;
    std::size_t    kernel_rank        = 0;
    bool           certified          = false;
    std::string    message{};
  };

  inline LocalizationReport lemma_GtoH_check(PrimeIdealSpec const& prime) {
    auto h = support(prime);
    auto q = restrict_prime(prime, h);
    LocalizationReport r{h, q};
    r.index = h.index_in_parent();
    r.unit  = induce(VirtualRep::one(h.abstract()), h);
    r.unit_value_checked = true;
    for (auto x : h.members()) {
      r.unit_value_checked = r.unit_value_checked && evaluate(r.unit, x) == CyclotomicNumber(r.index);
    }
    r.unit_outside_prime = !prime.contains(r.unit);
    auto kernel          = restriction_kernel(h);
    r.kernel_rank        = kernel.size();
    r.annihilates_kernel = true;
    for (auto const& k : kernel) {
      r.annihilates_kernel = r.annihilates_kernel && (r.unit * k).is_zero();
    }
    auto const p = prime.characteristic();
    bool const coprime = p == 0 || std::gcd(static_cast<std::uint64_t>(r.index), p) == 1;
    r.certified = coprime && r.unit_value_checked && r.unit_outside_prime && r.annihilates_kernel;
    if (r.certified) {
      r.message = "R(G)_p ~ R(H)_q certified";
    } else if (!coprime) {
      r.message = "iso not certified: p = " + std::to_string(p) + " divides |G/H| = "
                  + std::to_string(r.index);
    } else {
      r.message = "iso not certified: unit certificate failed";
    }
    return r;
  }

}  // namespace equisig

#endif  // EQUISIG_PRIMELOC_LOCALIZED_HPP
