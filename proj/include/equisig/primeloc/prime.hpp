#ifndef EQUISIG_PRIMELOC_PRIME_HPP
#define EQUISIG_PRIMELOC_PRIME_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "equisig/error.hpp"
#include "equisig/exactnum/int_matrix.hpp"
#include "equisig/exactnum/mod_poly.hpp"
#include "equisig/grouprep/group.hpp"
#include "equisig/grouprep/virtual_rep.hpp"

namespace equisig {

  //! The prime ideal of R(G) of virtual representations whose character at g
  //! vanishes (p = 0), or vanishes in the residue field F_p[y]/(f) where f is
  //! an irreducible factor of Phi_ord(g) mod p and y stands for the
  //! ord(g)-th root of unity (p > 0).
  class PrimeIdealSpec {
   public:
    PrimeIdealSpec(FiniteAbelianGroup group, std::size_t g, std::uint64_t p,
                   std::optional<ModPolynomial> residue = std::nullopt)
        : _group(std::move(group)), _g(g), _p(p) {
      if (_g >= _group.size()) {
        throw DomainError("prime: element out of range for " + _group.to_string());
      }
      _m = _group.element_order(_g);
      if (_p != 0) {
        if (!is_prime(_p)) {
          throw DomainError("prime: residual characteristic " + std::to_string(_p)
                            + " is neither 0 nor prime");
        }
        if (static_cast<std::uint64_t>(_m) % _p == 0) {
          throw HypothesisViolation("prime: p = " + std::to_string(_p)
                                    + " divides the order " + std::to_string(_m)
                                    + " of the evaluation element");
        }
        if (residue) {
          if (residue->characteristic() != _p) {
            throw DomainError("prime: residue polynomial has the wrong characteristic");
          }
          auto f   = residue->monic();
          auto phi = ModPolynomial::from_integers(_p, cyclotomic_polynomial(_m));
          if (!is_irreducible(f) || !(phi % f).is_zero()) {
            throw DomainError("prime: " + f.to_string() + " is not an irreducible factor of Phi_"
                              + std::to_string(_m) + " mod " + std::to_string(_p));
          }
          _residue = f;
        } else {
          _residue = factor_cyclotomic_mod_p(_m, _p);
        }
        // y^k mod f for k < m.
        _powers.reserve(static_cast<std::size_t>(_m));
        auto y = ModPolynomial(_p, {1});
        for (std::int64_t k = 0; k < _m; ++k) {
          _powers.push_back(y);
          y = (y * ModPolynomial::x(_p)) % *_residue;
        }
      } else if (residue) {
        throw DomainError("prime: residue polynomial given with p = 0");
      }
    }

    FiniteAbelianGroup const& group() const noexcept {
      return _group;
    }

    std::size_t element() const noexcept {
      return _g;
    }

    std::uint64_t characteristic() const noexcept {
      return _p;
    }

    std::optional<ModPolynomial> const& residue_prime() const noexcept {
      return _residue;
    }

    std::int64_t element_order() const noexcept {
      return _m;
    }

    //! Membership of an integer combination of powers of zeta_m, given by
    //! coefficient per exponent.
    bool contains_exponent_sum(std::vector<Integer> const& by_exponent) const {
      if (_p == 0) {
        RatPoly q(by_exponent.begin(), by_exponent.end());
        return CyclotomicNumber::from_exponent_sum(_m, std::move(q)).is_zero();
      }
      std::vector<std::uint64_t> acc(static_cast<std::size_t>(std::max<long>(_residue->degree(), 1)), 0);
      for (std::size_t k = 0; k < by_exponent.size(); ++k) {
        if (by_exponent[k] == 0) {
          continue;
        }
        std::uint64_t const c = mpz_fdiv_ui(by_exponent[k].get_mpz_t(), _p);
        for (std::size_t i = 0; i < _powers[k].coefficients().size(); ++i) {
          acc[i] = static_cast<std::uint64_t>(
              (static_cast<unsigned __int128>(c) * _powers[k][i] + acc[i]) % _p);
        }
      }
      for (auto a : acc) {
        if (a != 0) {
          return false;
        }
      }
      return true;
    }

    //! Coefficient of v(g) per power of zeta_m.
    std::vector<Integer> exponent_sum(VirtualRep const& v) const {
      if (v.group() != _group) {
        throw GroupMismatch("prime of " + _group.to_string() + " applied to a representation of "
                            + v.group().to_string());
      }
      std::vector<Integer> by_exponent(static_cast<std::size_t>(_m), Integer(0));
      auto const           step = _group.exponent() / _m;
      for (auto const& [chi, c] : v.terms()) {
        by_exponent[static_cast<std::size_t>(_group.pairing_exponent(chi, _g) / step)] += c;
      }
      return by_exponent;
    }

    bool contains(VirtualRep const& v) const {
      return contains_exponent_sum(exponent_sum(v));
    }

    std::string to_string() const {
      std::string out = "p(g=(" + _group.residues_string(_g) + "), p=" + std::to_string(_p);
      if (_residue) {
        out += ", f=" + _residue->to_string();
      }
      return out + ")";
    }

    friend bool operator==(PrimeIdealSpec const& a, PrimeIdealSpec const& b) {
      return a._group == b._group && a._g == b._g && a._p == b._p && a._residue == b._residue;
    }

    //! Galois-orbit representatives x with ker(eval_x) contained in this prime.
    std::vector<std::size_t> const& minimal_primes() const {
      std::call_once(_cache->once, [this] { _cache->minimal = compute_minimal_primes(); });
      return _cache->minimal;
    }

   private:
    std::vector<std::size_t> compute_minimal_primes() const;

    struct Cache {
      std::once_flag           once;
      std::vector<std::size_t> minimal;
    };

    FiniteAbelianGroup           _group;
    std::size_t                  _g;
    std::uint64_t                _p;
    std::int64_t                 _m = 1;
    std::optional<ModPolynomial> _residue;
    std::vector<ModPolynomial>   _powers;
    std::shared_ptr<Cache>       _cache = std::make_shared<Cache>();
  };

  inline bool contains(PrimeIdealSpec const& prime, VirtualRep const& v) {
    return prime.contains(v);
  }

  //! R(G)_p is local, so v is a unit there iff v lies outside p.
  inline bool is_unit_localized(PrimeIdealSpec const& prime, VirtualRep const& v) {
    return !prime.contains(v);
  }

  //! Integer basis of ker(R(G) -> Q(zeta_N), v -> v(x)), each basis vector a
  //! virtual representation.
  inline std::vector<VirtualRep> evaluation_kernel(FiniteAbelianGroup const& g, std::size_t x) {
    auto const    n   = g.exponent();
    auto const    phi = static_cast<std::size_t>(euler_phi(n));
    IntegerMatrix m(phi, g.size());
    for (std::size_t chi = 0; chi < g.size(); ++chi) {
      auto const& c = g.character_value(chi, x).coefficients_at(n);
      for (std::size_t i = 0; i < phi; ++i) {
        m(i, chi) = c[i].get_num();
      }
    }
    std::vector<VirtualRep> out;
    for (auto const& k : lattice_kernel(m)) {
      VirtualRep v(g);
      for (std::size_t chi = 0; chi < k.size(); ++chi) {
        v.add_term(chi, k[chi]);
      }
      out.push_back(std::move(v));
    }
    return out;
  }

  //! Integer basis of ker(Res: R(G) -> R(K)).
  inline std::vector<VirtualRep> restriction_kernel(Subgroup const& k) {
    auto const&   g = k.parent();
    IntegerMatrix m(k.abstract().size(), g.size());
    for (std::size_t chi = 0; chi < g.size(); ++chi) {
      m(k.restrict_character(chi), chi) = 1;
    }
    std::vector<VirtualRep> out;
    for (auto const& v : lattice_kernel(m)) {
      VirtualRep r(g);
      for (std::size_t chi = 0; chi < v.size(); ++chi) {
        r.add_term(chi, v[chi]);
      }
      out.push_back(std::move(r));
    }
    return out;
  }

  //! Representatives (least element index) of the Galois orbits of G, i.e.
  //! the least generator of each cyclic subgroup, in increasing order.
  inline std::vector<std::size_t> galois_orbit_representatives(FiniteAbelianGroup const& g) {
    std::vector<std::size_t> reps;
    for (auto const& h : cyclic_subgroups(g)) {
      for (auto x : h.members()) {
        if (g.element_order(x) == h.order()) {
          reps.push_back(x);
          break;
        }
      }
    }
    std::sort(reps.begin(), reps.end());
    return reps;
  }

  inline std::vector<std::size_t> PrimeIdealSpec::compute_minimal_primes() const {
    std::vector<std::size_t> out;
    for (auto x : galois_orbit_representatives(_group)) {
      bool inside = true;
      for (auto const& k : evaluation_kernel(_group, x)) {
        if (!contains(k)) {
          inside = false;
          break;
        }
      }
      if (inside) {
        out.push_back(x);
      }
    }
    return out;
  }

  inline std::vector<std::size_t> minimal_primes_contained(PrimeIdealSpec const& prime) {
    return prime.minimal_primes();
  }

  //! Whether p is the preimage of a prime of R(J) under restriction, i.e.
  //! p contains 1 - psi for every character psi trivial on J.
  inline bool pulls_back_from(PrimeIdealSpec const& prime, Subgroup const& j) {
    auto const& g = prime.group();
    if (j.parent() != g) {
      throw GroupMismatch("pulls_back_from: subgroup of a different group");
    }
    auto const gens = j.generators();
    auto const one  = VirtualRep::one(g);
    for (std::size_t psi = 0; psi < g.size(); ++psi) {
      bool trivial = true;
      for (auto x : gens) {
        trivial = trivial && g.pairing_exponent(psi, x) == 0;
      }
      if (trivial && !prime.contains(one - VirtualRep::character(g, psi))) {
        return false;
      }
    }
    return true;
  }

  //! The support <g>, verified: p pulls back from <g> and from no maximal
  //! proper subgroup of <g>.
  inline Subgroup support(PrimeIdealSpec const& prime) {
    auto const& g = prime.group();
    auto        h = subgroup_generated(g, prime.element());
    if (!pulls_back_from(prime, h)) {
      throw InternalError("support: prime does not pull back from <g>");
    }
    for (auto q : prime_factors(prime.element_order())) {
      auto j = subgroup_generated(g, g.multiple(prime.element(), q));
      if (pulls_back_from(prime, j)) {
        throw InternalError("support: prime pulls back from a proper subgroup of <g>");
      }
    }
    return h;
  }

  //! The prime of R(G') lying under p, for a subgroup G' containing g.
  inline PrimeIdealSpec restrict_prime(PrimeIdealSpec const& prime, Subgroup const& sub) {
    if (sub.parent() != prime.group()) {
      throw GroupMismatch("restrict_prime: subgroup of a different group");
    }
    if (!sub.contains(prime.element())) {
      throw HypothesisViolation("restrict_prime: subgroup " + sub.to_string()
                                + " does not contain the support of " + prime.to_string());
    }
    return PrimeIdealSpec(sub.abstract(), sub.to_abstract(prime.element()), prime.characteristic(),
                          prime.residue_prime());
  }

  //! R(K)_p = 0 iff the support of p is not contained in K.
  inline bool segal_vanishing(PrimeIdealSpec const& prime, Subgroup const& k) {
    return !k.contains(prime.element());
  }

  //! Independent decision of R(K)_p = 0 for R(K) as a cyclic R(G)-module:
  //! it vanishes iff some element of the annihilator ker(Res_K) avoids p.
  inline bool module_localization_vanishes(PrimeIdealSpec const& prime, Subgroup const& k) {
    for (auto const& v : restriction_kernel(k)) {
      if (!prime.contains(v)) {
        return true;
      }
    }
    return false;
  }

}  // namespace equisig

#endif  // EQUISIG_PRIMELOC_PRIME_HPP
