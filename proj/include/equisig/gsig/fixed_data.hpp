#ifndef EQUISIG_GSIG_FIXED_DATA_HPP
#define EQUISIG_GSIG_FIXED_DATA_HPP

#include <optional>
#include <string>
#include <vector>

#include "equisig/charseries/series.hpp"
#include "equisig/error.hpp"
#include "equisig/grouprep/group.hpp"

namespace equisig {

  //! Summand of the normal bundle on which the stabilizer acts through one
  //! character.  The character is given as a character of the whole group;
  //! only its restriction to the stabilizer is meaningful.
  struct NormalPiece {
    std::size_t             character = 0;
    int                     rank      = 1;
    std::vector<LinearForm> roots;
  };

  struct FixedComponent {
    std::string             label;
    std::string             orbit;  // components sharing an orbit label form one G-orbit
    Subgroup                stabilizer;
    int                     sign = 1;
    std::vector<std::string> variables;
    int                     dim = 0;
    IntersectionFunctional  intersection = IntersectionFunctional::point();
    std::vector<LinearForm> tangent_roots;  // Chern roots of the (stable) tangent bundle
    std::vector<NormalPiece> normal;

    std::size_t nvars() const noexcept {
      return variables.size();
    }

    bool is_point() const noexcept {
      return dim == 0;
    }

    int normal_rank() const noexcept {
      int r = 0;
      for (auto const& p : normal) {
        r += p.rank;
      }
      return r;
    }
  };

  //! The components of M^H for one cyclic subgroup H.
  struct FixedStratum {
    Subgroup                    subgroup;
    std::vector<FixedComponent> components;
  };

  //! Fixed-point data of a closed G-manifold: per cyclic subgroup H, the
  //! components of M^H with their normal data.  When `complete` is set, a
  //! cyclic subgroup without a stratum has empty fixed set.
  struct GManifoldFixedData {
    FiniteAbelianGroup        group;
    int                       dim      = 0;
    bool                      complete = false;
    std::vector<FixedStratum> strata;

    FixedStratum const* stratum(Subgroup const& h) const {
      for (auto const& s : strata) {
        if (s.subgroup == h) {
          return &s;
        }
      }
      return nullptr;
    }

    std::size_t component_count() const {
      std::size_t n = 0;
      for (auto const& s : strata) {
        n += s.components.size();
      }
      return n;
    }
  };

  //! Checks the structural invariants; throws DomainError or
  //! HypothesisViolation naming the offending component.
  inline void validate(FixedComponent const& c, Subgroup const& h, int dim_m) {
    auto const where = "component '" + c.label + "'";
    auto const& g    = h.parent();
    if (c.stabilizer.parent() != g) {
      throw GroupMismatch(where + ": stabilizer is a subgroup of another group");
    }
    if (!h.is_subgroup_of(c.stabilizer)) {
      throw HypothesisViolation(where + ": stabilizer " + c.stabilizer.to_string()
                                + " does not contain " + h.to_string());
    }
    if (c.sign != 1 && c.sign != -1) {
      throw DomainError(where + ": orientation sign must be +1 or -1");
    }
    if (c.dim < 0 || c.dim % 2 != 0) {
      throw DomainError(where + ": dimension must be even and non-negative");
    }
    if (c.intersection.nvars() != c.nvars() || c.intersection.dim() != c.dim) {
      throw DomainError(where + ": intersection numbers do not match the variables and dimension");
    }
    if (static_cast<int>(c.tangent_roots.size()) * 2 < c.dim) {
      throw DomainError(where + ": need at least dim/2 tangent Chern roots");
    }
    for (auto const& r : c.tangent_roots) {
      if (r.size() != c.nvars()) {
        throw DomainError(where + ": tangent root has the wrong number of coefficients");
      }
    }
    for (auto const& p : c.normal) {
      if (p.rank < 1) {
        throw DomainError(where + ": normal piece rank must be positive");
      }
      if (static_cast<int>(p.roots.size()) != p.rank) {
        throw DomainError(where + ": normal piece needs one Chern root per rank");
      }
      for (auto const& r : p.roots) {
        if (r.size() != c.nvars()) {
          throw DomainError(where + ": normal root has the wrong number of coefficients");
        }
      }
      if (p.character >= g.size()) {
        throw DomainError(where + ": normal character out of range");
      }
      for (auto x : h.generators()) {
        if (g.pairing_exponent(p.character, x) == 0) {
          throw HypothesisViolation(where + ": the trivial representation of " + h.to_string()
                                    + " occurs in the normal bundle");
        }
      }
    }
    if (c.dim + 2 * c.normal_rank() != dim_m) {
      throw DomainError(where + ": dim F + 2 * (normal rank) = "
                        + std::to_string(c.dim + 2 * c.normal_rank()) + " differs from dim M = "
                        + std::to_string(dim_m));
    }
  }

  inline void validate(GManifoldFixedData const& d) {
    if (d.dim < 0 || d.dim % 2 != 0) {
      throw DomainError("manifold dimension must be even and non-negative");
    }
    for (std::size_t i = 0; i < d.strata.size(); ++i) {
      auto const& s = d.strata[i];
      if (s.subgroup.parent() != d.group) {
        throw GroupMismatch("stratum subgroup of another group");
      }
      if (!s.subgroup.abstract().is_cyclic()) {
        throw DomainError("stratum subgroup " + s.subgroup.to_string() + " is not cyclic");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (d.strata[j].subgroup == s.subgroup) {
          throw DomainError("two strata for " + s.subgroup.to_string());
        }
      }
      for (auto const& c : s.components) {
        validate(c, s.subgroup, d.dim);
      }
    }
  }

}  // namespace equisig

#endif  // EQUISIG_GSIG_FIXED_DATA_HPP
