#ifndef EQUISIG_ARTIN_CERTIFICATE_HPP
#define EQUISIG_ARTIN_CERTIFICATE_HPP

#include <vector>

#include "equisig/error.hpp"
#include "equisig/exactnum/int_matrix.hpp"
#include "equisig/grouprep/group.hpp"
#include "equisig/grouprep/virtual_rep.hpp"

namespace equisig {

  struct ArtinTerm {
    Subgroup    subgroup;
    std::size_t character;  // index in subgroup.abstract()
    Integer     coefficient;
  };

  //! |G| * 1 as an integral combination of characters induced from cyclic
  //! subgroups.
  class ArtinCertificate {
   public:
    ArtinCertificate(FiniteAbelianGroup group, std::vector<ArtinTerm> terms)
        : _group(std::move(group)), _terms(std::move(terms)) {
      if (expand() != Integer(_group.order()) * VirtualRep::one(_group)) {
        throw InternalError("Artin certificate does not sum to |G| * 1");
      }
    }

    FiniteAbelianGroup const& group() const noexcept {
      return _group;
    }

    std::vector<ArtinTerm> const& terms() const noexcept {
      return _terms;
    }

    VirtualRep expand() const {
      VirtualRep sum(_group);
      for (auto const& t : _terms) {
        if (t.subgroup.parent() != _group) {
          throw GroupMismatch("Artin certificate term lives on another group");
        }
        if (!t.subgroup.abstract().is_cyclic()) {
          throw DomainError("Artin certificate term on a non-cyclic subgroup");
        }
        sum += t.coefficient * induce(VirtualRep::character(t.subgroup.abstract(), t.character), t.subgroup);
      }
      return sum;
    }

   private:
    FiniteAbelianGroup     _group;
    std::vector<ArtinTerm> _terms;
  };

  inline ArtinCertificate artin_certificate(FiniteAbelianGroup const& g) {
    std::vector<std::pair<Subgroup const*, std::size_t>> columns;
    auto const                                          subs = cyclic_subgroups(g);
    for (auto const& s : subs) {
      for (std::size_t psi = 0; psi < s.abstract().size(); ++psi) {
        columns.emplace_back(&s, psi);
      }
    }
    IntegerMatrix m(g.size(), columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      auto const& [s, psi] = columns[j];
      auto ind             = induce(VirtualRep::character(s->abstract(), psi), *s);
      for (auto const& [chi, c] : ind.terms()) {
        m(chi, j) = c;
      }
    }
    IntVector rhs(g.size(), Integer(0));
    rhs[0]   = g.order();
    auto sol = smith_solve(m, rhs);
    if (!sol) {
      throw InternalError("no integral Artin certificate found for " + g.to_string());
    }
    std::vector<ArtinTerm> terms;
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if ((*sol)[j] != 0) {
        terms.push_back({*columns[j].first, columns[j].second, (*sol)[j]});
      }
    }
    return ArtinCertificate(g, std::move(terms));
  }

  //! sum a * Ind_S(psi * Res_S v) == |G| v.
  inline bool transfer_identity_check(ArtinCertificate const& cert, VirtualRep const& v) {
    auto const& g = cert.group();
    if (v.group() != g) {
      throw GroupMismatch("transfer identity: representation of another group");
    }
    VirtualRep lhs(g);
    for (auto const& t : cert.terms()) {
      auto psi = VirtualRep::character(t.subgroup.abstract(), t.character);
      lhs += t.coefficient * induce(psi * restrict(v, t.subgroup), t.subgroup);
    }
    return lhs == Integer(g.order()) * v;
  }

}  // namespace equisig

#endif  // EQUISIG_ARTIN_CERTIFICATE_HPP
