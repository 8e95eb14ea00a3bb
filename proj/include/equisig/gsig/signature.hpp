#ifndef EQUISIG_GSIG_SIGNATURE_HPP
#define EQUISIG_GSIG_SIGNATURE_HPP

#include <numeric>
#include <vector>

#include "equisig/charseries/series.hpp"
#include "equisig/error.hpp"
#include "equisig/gsig/fixed_data.hpp"
#include "equisig/primeloc/localized.hpp"

namespace equisig {

  //! Lambda(V) / lambda_{-1}(V) for V the sum of the given characters of the
  //! prime's group.
  inline LocalizedElement fiber_class_point(PrimeIdealSpec const& prime, std::vector<std::size_t> const& characters) {
    auto const& g = prime.group();
    for (auto chi : characters) {
      if (g.pairing_exponent(chi, prime.element()) == 0) {
        throw HypothesisViolation("fiber class: character " + g.residues_string(chi)
                                  + " is trivial at the support generator");
      }
    }
    return LocalizedElement(lambda_total(g, characters), lambda_minus1(g, characters), prime);
  }

  //! Same, from normal pieces over a point; each piece contributes its
  //! character with multiplicity equal to its rank.
  inline LocalizedElement fiber_class_point(PrimeIdealSpec const& prime, std::vector<NormalPiece> const& pieces) {
    std::vector<std::size_t> characters;
    for (auto const& p : pieces) {
      for (auto const& r : p.roots) {
        if (!r.empty()) {
          throw DomainError("fiber_class_point: normal pieces must not depend on cohomology variables");
        }
      }
      characters.insert(characters.end(), static_cast<std::size_t>(p.rank), p.character);
    }
    return fiber_class_point(prime, characters);
  }

  //! The integrand L(F) * prod angle_factor(chi(g), 2 x) as a truncated series
  //! in the component's variables, with the orientation and rank signs
  //! folded in.
  inline TruncatedSeries contribution_integrand(FiniteAbelianGroup const& group, std::size_t g,
                                                FixedComponent const& c) {
    auto const d = c.dim;
    auto       s = l_class(c.tangent_roots, c.nvars(), d);
    for (auto const& p : c.normal) {
      auto const zeta = group.character_value(p.character, g);
      if (zeta.is_one()) {
        throw HypothesisViolation("component '" + c.label + "': normal character "
                                  + group.residues_string(p.character) + " is trivial at g");
      }
      for (auto const& root : p.roots) {
        LinearForm twice(root.size());
        for (std::size_t i = 0; i < root.size(); ++i) {
          twice[i] = 2 * root[i];
        }
        s *= angle_factor(zeta, twice, d);
      }
    }
    auto const sign = c.sign * ((c.normal_rank() % 2 == 0) ? 1 : -1);
    return CyclotomicNumber(sign) * s;
  }

  //! Contribution of one fixed component of g to Sign(g, M):
  //! eps (-1)^(normal rank) int_F L(F) prod_roots (1 + zeta e^(2x)) / (1 - zeta e^(2x)),
  //! i.e. prod coth(x + i theta/2) against the L-class in the x / tanh x
  //! normalization.
  inline CyclotomicNumber component_contribution(FiniteAbelianGroup const& group, std::size_t g,
                                                 FixedComponent const& c) {
    return integrate(contribution_integrand(group, g, c), c.intersection);
  }

  //! Sign(g, M) as the sum of the contributions of the components of M^<g>.
  inline CyclotomicNumber g_signature(GManifoldFixedData const& data, std::size_t g) {
    auto const  h = subgroup_generated(data.group, g);
    auto const* s = data.stratum(h);
    if (s == nullptr) {
      if (data.complete && !h.is_trivial()) {
        return CyclotomicNumber(0);
      }
      throw DomainError("no fixed-point data for " + h.to_string());
    }
    CyclotomicNumber total(0);
    for (auto const& c : s->components) {
      total += component_contribution(data.group, g, c);
    }
    return total;
  }

  //! Signature of a symmetric rational matrix by symmetric elimination.
  inline int signature_from_cohomology(std::vector<std::vector<Rational>> b) {
    auto const n = b.size();
    for (auto const& row : b) {
      if (row.size() != n) {
        throw DomainError("signature: matrix is not square");
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (b[i][j] != b[j][i]) {
          throw DomainError("signature: matrix is not symmetric");
        }
      }
    }
    int sig = 0;
    // Work on the trailing block k..n-1.
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t piv = n;
      for (std::size_t i = k; i < n; ++i) {
        if (b[i][i] != 0) {
          piv = i;
          break;
        }
      }
      if (piv == n) {
        // No diagonal pivot: add row/column j to row/column k for some
        // b[k][j] != 0, giving diagonal entry 2 b[k][j].
        std::size_t r = n, c = n;
        for (std::size_t i = k; i < n && r == n; ++i) {
          for (std::size_t j = i + 1; j < n; ++j) {
            if (b[i][j] != 0) {
              r = i;
              c = j;
              break;
            }
          }
        }
        if (r == n) {
          break;  // the rest is zero
        }
        for (std::size_t t = 0; t < n; ++t) {
          b[r][t] += b[c][t];
        }
        for (std::size_t t = 0; t < n; ++t) {
          b[t][r] += b[t][c];
        }
        piv = r;
      }
      std::swap(b[k], b[piv]);
      for (auto& row : b) {
        std::swap(row[k], row[piv]);
      }
      Rational const d = b[k][k];
      sig += d > 0 ? 1 : -1;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (b[i][k] == 0) {
          continue;
        }
        Rational const f = b[i][k] / d;
        for (std::size_t j = k; j < n; ++j) {
          b[i][j] -= f * b[k][j];
        }
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        b[k][i] = 0;
        b[i][k] = 0;
      }
    }
    return sig;
  }

  //! s(q, n) = -(1/4n) sum_j f(zeta^j) f(zeta^(qj)), f(x) = (1 + x)/(1 - x),
  //! zeta = exp(2 pi i / n); f(zeta^j) = i cot(pi j / n).
  inline Rational dedekind_sum(std::int64_t q, std::int64_t n) {
    if (n < 1) {
      throw DomainError("dedekind_sum: n must be positive");
    }
    if (std::gcd(q, n) != 1) {
      throw DomainError("dedekind_sum: q and n must be coprime");
    }
    CyclotomicNumber acc(0);
    auto const       f = [n](std::int64_t j) {
      auto z = root_of_unity(j, n);
      return (CyclotomicNumber(1) + z) / (CyclotomicNumber(1) - z);
    };
    for (std::int64_t j = 1; j < n; ++j) {
      acc += f(j) * f(mod_floor(q * j, n));
    }
    if (!acc.is_rational()) {
      throw InternalError("dedekind_sum: cotangent sum is not rational");
    }
    return -acc.to_rational() / (4 * n);
  }

  //! s(q, n) + s(n, q) = -1/4 + (q/n + n/q + 1/(qn)) / 12 for coprime q, n >= 1.
  inline bool reciprocity_check(std::int64_t q, std::int64_t n) {
    if (q < 1 || n < 1) {
      throw DomainError("reciprocity_check: arguments must be positive");
    }
    Rational const rhs = (make_rational(q, n) + make_rational(n, q) + make_rational(1, q * n)) / 12
                         - Rational(1, 4);
    return dedekind_sum(q, n) + dedekind_sum(n, q) == rhs;
  }

}  // namespace equisig

#endif  // EQUISIG_GSIG_SIGNATURE_HPP
