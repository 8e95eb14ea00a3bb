#ifndef EQUISIG_GROUPREP_VIRTUAL_REP_HPP
#define EQUISIG_GROUPREP_VIRTUAL_REP_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "equisig/error.hpp"
#include "equisig/exactnum/cyclotomic.hpp"
#include "equisig/grouprep/group.hpp"

namespace equisig {

  //! Element of R(G) = Z[G^], a finitely supported map from character indices
  //! to integers.  Zero coefficients are never stored.
  class VirtualRep {
   public:
    using Terms = std::map<std::size_t, Integer>;

    VirtualRep() = default;
    explicit VirtualRep(FiniteAbelianGroup group) : _group(std::move(group)) {}
    VirtualRep(FiniteAbelianGroup group, Terms terms) : _group(std::move(group)) {
      for (auto& [chi, c] : terms) {
        add_term(chi, c);
      }
    }

    static VirtualRep zero(FiniteAbelianGroup const& g) {
      return VirtualRep(g);
    }

    static VirtualRep one(FiniteAbelianGroup const& g) {
      return character(g, g.identity());
    }

    static VirtualRep character(FiniteAbelianGroup const& g, std::size_t chi, Integer c = 1) {
      VirtualRep v(g);
      v.add_term(chi, c);
      return v;
    }

    static VirtualRep regular(FiniteAbelianGroup const& g) {
      VirtualRep v(g);
      for (std::size_t chi = 0; chi < g.size(); ++chi) {
        v._terms[chi] = 1;
      }
      return v;
    }

    FiniteAbelianGroup const& group() const noexcept {
      return _group;
    }

    Terms const& terms() const noexcept {
      return _terms;
    }

    Integer coefficient(std::size_t chi) const {
      auto it = _terms.find(chi);
      return it == _terms.end() ? Integer(0) : it->second;
    }

    bool is_zero() const noexcept {
      return _terms.empty();
    }

    Integer dimension() const {
      Integer d = 0;
      for (auto const& [chi, c] : _terms) {
        d += c;
      }
      return d;
    }

    void add_term(std::size_t chi, Integer const& c) {
      if (chi >= _group.size()) {
        throw DomainError("character index out of range for " + _group.to_string());
      }
      if (c == 0) {
        return;
      }
      auto& slot = _terms[chi];
      slot += c;
      if (slot == 0) {
        _terms.erase(chi);
      }
    }

    VirtualRep& operator+=(VirtualRep const& o) {
      same_group(o, "add");
      for (auto const& [chi, c] : o._terms) {
        add_term(chi, c);
      }
      return *this;
    }

    VirtualRep& operator-=(VirtualRep const& o) {
      same_group(o, "subtract");
      for (auto const& [chi, c] : o._terms) {
        add_term(chi, -c);
      }
      return *this;
    }

    VirtualRep& operator*=(VirtualRep const& o) {
      return *this = *this * o;
    }

    friend VirtualRep operator+(VirtualRep a, VirtualRep const& b) {
      return a += b;
    }
    friend VirtualRep operator-(VirtualRep a, VirtualRep const& b) {
      return a -= b;
    }
    friend VirtualRep operator-(VirtualRep a) {
      for (auto& [chi, c] : a._terms) {
        c = -c;
      }
      return a;
    }

    friend VirtualRep operator*(VirtualRep const& a, VirtualRep const& b) {
      a.same_group(b, "multiply");
      VirtualRep out(a._group);
      for (auto const& [x, c] : a._terms) {
        for (auto const& [y, d] : b._terms) {
          out.add_term(a._group.add(x, y), c * d);
        }
      }
      return out;
    }

    friend VirtualRep operator*(Integer const& k, VirtualRep a) {
      if (k == 0) {
        a._terms.clear();
        return a;
      }
      for (auto& [chi, c] : a._terms) {
        c *= k;
      }
      return a;
    }

    friend bool operator==(VirtualRep const& a, VirtualRep const& b) {
      return a._group == b._group && a._terms == b._terms;
    }
    friend bool operator!=(VirtualRep const& a, VirtualRep const& b) {
      return !(a == b);
    }

    //! Character-wise complex conjugate (dual representation).
    VirtualRep dual() const {
      VirtualRep out(_group);
      for (auto const& [chi, c] : _terms) {
        out.add_term(_group.negate(chi), c);
      }
      return out;
    }

   private:
    void same_group(VirtualRep const& o, char const* what) const {
      if (_group != o._group) {
        throw GroupMismatch(std::string("cannot ") + what + " representations of "
                            + _group.to_string() + " and " + o._group.to_string());
      }
    }

    FiniteAbelianGroup _group;
    Terms              _terms;
  };

  inline VirtualRep rep_add(VirtualRep const& u, VirtualRep const& v) {
    return u + v;
  }

  inline VirtualRep rep_mul(VirtualRep const& u, VirtualRep const& v) {
    return u * v;
  }

  //! Character value v(g) in Q(zeta_m), m the order of g.
  inline CyclotomicNumber evaluate(VirtualRep const& v, std::size_t g) {
    auto const& G = v.group();
    if (g >= G.size()) {
      throw DomainError("group element index out of range for " + G.to_string());
    }
    RatPoly by_exponent(static_cast<std::size_t>(G.exponent()), Rational(0));
    for (auto const& [chi, c] : v.terms()) {
      by_exponent[static_cast<std::size_t>(G.pairing_exponent(chi, g))] += c;
    }
    return CyclotomicNumber::from_exponent_sum(G.exponent(), std::move(by_exponent));
  }

  //! Restriction to H, as a representation of H.abstract().
  inline VirtualRep restrict(VirtualRep const& v, Subgroup const& h) {
    if (h.parent() != v.group()) {
      throw GroupMismatch("restrict: subgroup of " + h.parent().to_string()
                          + ", representation of " + v.group().to_string());
    }
    VirtualRep out(h.abstract());
    for (auto const& [chi, c] : v.terms()) {
      out.add_term(h.restrict_character(chi), c);
    }
    return out;
  }

  //! Induction from H (w a representation of H.abstract()) to H.parent().
  inline VirtualRep induce(VirtualRep const& w, Subgroup const& h) {
    if (w.group() != h.abstract()) {
      throw GroupMismatch("induce: representation of " + w.group().to_string()
                          + " does not live on the subgroup " + h.abstract().to_string());
    }
    auto const&                           G = h.parent();
    std::vector<std::vector<std::size_t>> fibres(h.abstract().size());
    if (!w.is_zero()) {
      for (std::size_t psi = 0; psi < G.size(); ++psi) {
        fibres[h.restrict_character(psi)].push_back(psi);
      }
    }
    VirtualRep out(G);
    for (auto const& [chi, c] : w.terms()) {
      for (auto psi : fibres[chi]) {
        out.add_term(psi, c);
      }
    }
    return out;
  }

  //! Pull back a representation of q.group (= G/N) along q.projection.
  inline VirtualRep inflate(VirtualRep const& w, FiniteAbelianGroup const& g, Quotient const& q) {
    if (w.group() != q.group) {
      throw GroupMismatch("inflate: representation of " + w.group().to_string()
                          + " does not live on " + q.group.to_string());
    }
    if (q.projection.size() != g.size()) {
      throw GroupMismatch("inflate: quotient does not belong to " + g.to_string());
    }
    VirtualRep out(g);
    if (w.is_zero()) {
      return out;
    }
    std::vector<std::size_t> lift(q.group.size(), g.size());
    for (std::size_t x = 0; x < g.size(); ++x) {
      if (lift[q.projection[x]] == g.size()) {
        lift[q.projection[x]] = x;
      }
    }
    // For psi trivial on N, the quotient character is read off from its
    // values on lifts of the quotient's basis elements.
    std::vector<std::size_t> kernel;
    for (std::size_t x = 0; x < g.size(); ++x) {
      if (q.projection[x] == 0) {
        kernel.push_back(x);
      }
    }
    auto const                         ng = g.exponent();
    std::map<std::size_t, std::size_t> lift_of;
    for (std::size_t psi = 0; psi < g.size(); ++psi) {
      bool trivial_on_n = true;
      for (std::size_t i = 0; i < kernel.size() && trivial_on_n; ++i) {
        trivial_on_n = g.pairing_exponent(psi, kernel[i]) == 0;
      }
      if (!trivial_on_n) {
        continue;
      }
      Residues a(q.group.rank());
      for (std::size_t i = 0; i < a.size(); ++i) {
        Residues e(q.group.rank(), 0);
        e[i]       = 1;
        auto const d = q.group.invariant_factors()[i];
        a[i]         = g.pairing_exponent(psi, lift[q.group.index(e)]) * d / ng;
      }
      lift_of[q.group.index(a)] = psi;
    }
    for (auto const& [chi, c] : w.terms()) {
      auto it = lift_of.find(chi);
      if (it == lift_of.end()) {
        throw InternalError("inflate: no character of G lifts a quotient character");
      }
      out.add_term(it->second, c);
    }
    return out;
  }

  inline VirtualRep inflate(VirtualRep const& w, FiniteAbelianGroup const& g, Subgroup const& n) {
    return inflate(w, g, quotient(g, n));
  }

  //! prod (1 + chi_i).
  inline VirtualRep lambda_total(FiniteAbelianGroup const& g, std::vector<std::size_t> const& chars) {
    auto out = VirtualRep::one(g);
    for (auto chi : chars) {
      out *= VirtualRep::one(g) + VirtualRep::character(g, chi);
    }
    return out;
  }

  //! prod (1 - chi_i).
  inline VirtualRep lambda_minus1(FiniteAbelianGroup const& g, std::vector<std::size_t> const& chars) {
    auto out = VirtualRep::one(g);
    for (auto chi : chars) {
      out *= VirtualRep::one(g) - VirtualRep::character(g, chi);
    }
    return out;
  }

  //! <u, v> = (1/|G|) sum_g u(g) conj(v(g)), computed from coefficients.
  inline Integer inner_product(VirtualRep const& u, VirtualRep const& v) {
    if (u.group() != v.group()) {
      throw GroupMismatch("inner_product: different groups");
    }
    Integer s = 0;
    for (auto const& [chi, c] : u.terms()) {
      s += c * v.coefficient(chi);
    }
    return s;
  }

}  // namespace equisig

#endif  // EQUISIG_GROUPREP_VIRTUAL_REP_HPP
