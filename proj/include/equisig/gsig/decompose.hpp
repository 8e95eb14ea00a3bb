#ifndef EQUISIG_GSIG_DECOMPOSE_HPP
#define EQUISIG_GSIG_DECOMPOSE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "equisig/gsig/signature.hpp"
#include "equisig/primeloc/localized.hpp"

namespace equisig {

  //! How the class [D_M]_p is reduced.
  enum class LocalizationBranch {
    collapse,     // trivial support, p = 0 or p prime to |G|: R(G)_p is Q or Z_(p)
    restriction,  // trivial support, p divides |G|: restriction to the trivial group
    orbits,       // nontrivial support H: sum over G-orbits of components of M^H
  };

  inline char const* to_string(LocalizationBranch b) {
    switch (b) {
      case LocalizationBranch::collapse:
        return "collapse";
      case LocalizationBranch::restriction:
        return "restriction";
      case LocalizationBranch::orbits:
        return "orbits";
    }
    return "?";
  }

  struct OrbitEntry {
    std::string              orbit;
    std::vector<std::string> labels;
    std::size_t              orbit_size = 0;
    Subgroup                 stabilizer;
    std::int64_t             inflation_from = 1;  // |G'|
    std::int64_t             inflation_to   = 1;  // |G'/H|
    std::optional<PrimeIdealSpec>   prime_on_stabilizer;
    bool                            prime_certified = false;
    std::vector<std::size_t>        normal_characters;  // on the stabilizer, with multiplicity
    std::optional<LocalizedElement> fiber_class;
    bool                            unit_certified = false;
    std::optional<TruncatedSeries>  series_form;  // present for positive-dimensional F
    std::string                     base_token;
    std::optional<CyclotomicNumber> pairing;
  };

  struct ContributionReport {
    PrimeIdealSpec                  prime;
    Subgroup                        support;
    LocalizationBranch              branch = LocalizationBranch::orbits;
    std::string                     message{};
    std::size_t                     component_count = 0;
    std::vector<OrbitEntry>         entries{};
    std::optional<std::size_t>      evaluation_element{};
    std::optional<CyclotomicNumber> total_pairing{};
  };

  //! Reduces [D_M] localized at p to per-orbit fiber classes on the fixed
  //! components of the support H of p.  With an evaluation element g
  //! (generating H), also pairs each orbit numerically.
  inline ContributionReport decompose_localized_class(GManifoldFixedData const& data, PrimeIdealSpec const& prime,
                                                      std::optional<std::size_t> evaluation = std::nullopt) {
    if (prime.group() != data.group) {
      throw GroupMismatch("prime and fixed-point data live on different groups");
    }
    validate(data);
    auto const&        g = data.group;
    auto               h = support(prime);
    ContributionReport r{prime, h};
    r.evaluation_element = evaluation;
    if (evaluation) {
      if (subgroup_generated(g, *evaluation) != h) {
        throw DomainError("evaluation element does not generate the support " + h.to_string());
      }
      r.total_pairing = CyclotomicNumber(0);
    }
    auto const p = prime.characteristic();
    if (h.is_trivial()) {
      auto const order = static_cast<std::uint64_t>(g.order());
      if (p == 0 || order % p != 0) {
        r.branch  = LocalizationBranch::collapse;
        r.message = p == 0 ? "R(G)_p = Q; the group can be forgotten"
                           : "R(G)_p = Z_(" + std::to_string(p) + "); the group can be forgotten";
      } else {
        r.branch  = LocalizationBranch::restriction;
        r.message = "restriction to the trivial group; its kernel is " + std::to_string(p)
                    + "-primary torsion";
      }
    } else {
      r.branch  = LocalizationBranch::orbits;
      r.message = "sum over G-orbits of components of M^H, H = " + h.to_string();
    }

    auto const* stratum = data.stratum(h);
    if (stratum == nullptr) {
      if (data.complete && !h.is_trivial()) {
        r.message += "; M^H is empty";
        return r;
      }
      throw DomainError("no fixed-point data for the support " + h.to_string());
    }
    r.component_count = stratum->components.size();

    std::vector<std::string>                        order;
    std::map<std::string, std::vector<std::size_t>> orbits;
    for (std::size_t i = 0; i < stratum->components.size(); ++i) {
      auto const& c   = stratum->components[i];
      auto const  key = c.orbit.empty() ? c.label : c.orbit;
      if (!orbits.count(key)) {
        order.push_back(key);
      }
      orbits[key].push_back(i);
    }

    for (auto const& key : order) {
      auto const& members = orbits[key];
      auto const& rep     = stratum->components[members.front()];
      OrbitEntry  e;
      e.orbit      = key;
      e.orbit_size = members.size();
      e.stabilizer = rep.stabilizer;
      for (auto i : members) {
        auto const& c = stratum->components[i];
        if (c.stabilizer != rep.stabilizer) {
          throw DomainError("orbit '" + key + "': components have different stabilizers");
        }
        e.labels.push_back(c.label);
      }
      if (static_cast<std::int64_t>(members.size()) != rep.stabilizer.index_in_parent()) {
        throw DomainError("orbit '" + key + "' has " + std::to_string(members.size())
                          + " components but the stabilizer has index "
                          + std::to_string(rep.stabilizer.index_in_parent()));
      }
      auto const& gp   = rep.stabilizer;
      e.inflation_from = gp.order();
      e.inflation_to   = gp.order() / h.order();

      auto q                = restrict_prime(prime, gp);
      e.prime_certified     = lemma_GtoH_check(q).certified;
      for (auto const& piece : rep.normal) {
        for (int k = 0; k < piece.rank; ++k) {
          e.normal_characters.push_back(gp.restrict_character(piece.character));
        }
      }
      e.fiber_class    = fiber_class_point(q, e.normal_characters);
      e.unit_certified = is_unit_localized(q, e.fiber_class->denominator());
      e.prime_on_stabilizer = q;
      if (!rep.is_point()) {
        auto series = TruncatedSeries::constant(rep.nvars(), rep.dim, CyclotomicNumber(1));
        for (auto const& piece : rep.normal) {
          auto const zeta = g.character_value(piece.character, prime.element());
          for (auto const& root : piece.roots) {
            LinearForm twice(root.size());
            for (std::size_t i = 0; i < root.size(); ++i) {
              twice[i] = 2 * root[i];
            }
            series *= angle_factor(zeta, twice, rep.dim);
          }
        }
        e.series_form = series;
      }
      e.base_token = "[D_F:" + rep.label + "]";
      if (e.inflation_to < e.inflation_from) {
        e.base_token += " inflated from G'/H (order " + std::to_string(e.inflation_to) + ")";
      }
      if (evaluation) {
        CyclotomicNumber sum(0);
        for (auto i : members) {
          sum += component_contribution(g, *evaluation, stratum->components[i]);
        }
        e.pairing = sum;
        *r.total_pairing += sum;
      }
      r.entries.push_back(std::move(e));
    }
    return r;
  }

}  // namespace equisig

#endif  // EQUISIG_GSIG_DECOMPOSE_HPP
