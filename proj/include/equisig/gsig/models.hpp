#ifndef EQUISIG_GSIG_MODELS_HPP
#define EQUISIG_GSIG_MODELS_HPP

#include <map>
#include <string>
#include <vector>

#include "equisig/gsig/fixed_data.hpp"

namespace equisig {

  //! Fixed-point data together with the intersection form on middle
  //! cohomology, for checking g = 1 against the signature of the form.
  struct CalibrationModel {
    std::string                        name;
    GManifoldFixedData                 data;
    std::vector<std::vector<Rational>> cup_form;
  };

  namespace detail {
    inline std::size_t cyclic_character(FiniteAbelianGroup const& g, std::int64_t r) {
      return g.rank() == 0 ? 0 : g.index({r});
    }

    inline std::string coordinate_label(std::vector<std::size_t> const& coords) {
      std::string out = "P{";
      for (std::size_t i = 0; i < coords.size(); ++i) {
        out += (i ? "," : "") + std::to_string(coords[i]);
      }
      return out + "}";
    }

    //! CP^(s-1) as a component: hyperplane class t, int t^(s-1) = 1, stable
    //! tangent bundle s copies of O(1).
    inline void projective_cohomology(FixedComponent& c, std::size_t s) {
      c.dim = 2 * static_cast<int>(s - 1);
      if (s == 1) {
        c.variables.clear();
        c.intersection = IntersectionFunctional::point();
        c.tangent_roots.clear();
        return;
      }
      c.variables    = {"t"};
      c.intersection = IntersectionFunctional(1, c.dim);
      c.intersection.set({static_cast<int>(s - 1)}, Rational(1));
      c.tangent_roots.assign(s, LinearForm{Rational(1)});
    }
  }  // namespace detail

  //! Z/n acting on CP^N by [z_0 : ... : z_N] -> [zeta^w_0 z_0 : ... : zeta^w_N z_N].
  //! For each cyclic H the fixed set is the union of P(V_c) over the classes c
  //! of weights mod |H|; its normal bundle is sum_j Hom(O(-1), C_j) with
  //! character w_j - w_c, j outside the class.
  inline GManifoldFixedData linear_projective_action(std::int64_t n, std::vector<std::int64_t> const& weights) {
    if (weights.empty()) {
      throw DomainError("projective action needs at least one weight");
    }
    GManifoldFixedData d;
    d.group    = FiniteAbelianGroup::cyclic(n);
    d.dim      = 2 * static_cast<int>(weights.size() - 1);
    d.complete = true;
    auto const whole = Subgroup::whole(d.group);
    for (auto const& h : cyclic_subgroups(d.group)) {
      auto const                                           m = h.order();
      std::vector<std::int64_t>                            keys;
      std::map<std::int64_t, std::vector<std::size_t>>     classes;
      for (std::size_t i = 0; i < weights.size(); ++i) {
        auto k = mod_floor(weights[i], m);
        if (!classes.count(k)) {
          keys.push_back(k);
        }
        classes[k].push_back(i);
      }
      FixedStratum s{h, {}};
      for (auto k : keys) {
        auto const&    coords = classes[k];
        FixedComponent c;
        c.label      = detail::coordinate_label(coords);
        c.orbit      = c.label;
        c.stabilizer = whole;
        detail::projective_cohomology(c, coords.size());
        auto const                          base = weights[coords.front()];
        std::map<std::int64_t, int>         ranks;
        std::vector<std::int64_t>           order;
        for (std::size_t j = 0; j < weights.size(); ++j) {
          if (mod_floor(weights[j], m) == k) {
            continue;
          }
          auto r = mod_floor(weights[j] - base, n);
          if (!ranks.count(r)) {
            order.push_back(r);
          }
          ++ranks[r];
        }
        for (auto r : order) {
          NormalPiece p;
          p.character = detail::cyclic_character(d.group, r);
          p.rank      = ranks[r];
          p.roots.assign(static_cast<std::size_t>(p.rank), LinearForm(c.nvars(), Rational(1)));
          c.normal.push_back(std::move(p));
        }
        s.components.push_back(std::move(c));
      }
      d.strata.push_back(std::move(s));
    }
    return d;
  }

  //! Rotation of S^2 = CP^1 by 2 pi / n.  The poles carry characters chi and
  //! chi^-1 with the complex orientation; with `reversed_south` the south pole
  //! is described with the opposite orientation instead, so it carries chi
  //! and sign -1.
  inline GManifoldFixedData sphere_rotation(std::int64_t n, bool reversed_south = false) {
    auto d = linear_projective_action(n, {0, 1});
    if (!reversed_south) {
      return d;
    }
    for (auto& s : d.strata) {
      if (s.subgroup.is_trivial()) {
        continue;
      }
      auto& south = s.components.at(1);
      for (auto& p : south.normal) {
        p.character = d.group.negate(p.character);
      }
      south.sign = -south.sign;
    }
    return d;
  }

  //! Z/2 x Z/2 acting on S^2 by rotations through pi about three orthogonal
  //! axes; each nontrivial element fixes two antipodal points, swapped by the
  //! other two elements.
  inline GManifoldFixedData klein_four_sphere() {
    GManifoldFixedData d;
    d.group    = FiniteAbelianGroup({2, 2});
    d.dim      = 2;
    d.complete = true;
    auto const& g = d.group;
    struct Axis {
      Residues    element;
      Residues    character;
      std::string name;
    };
    for (auto const& axis : {Axis{{1, 0}, {1, 0}, "z"}, Axis{{0, 1}, {0, 1}, "x"}, Axis{{1, 1}, {1, 0}, "y"}}) {
      auto         h = subgroup_generated(g, g.index(axis.element));
      FixedStratum s{h, {}};
      for (char const* end : {"+", "-"}) {
        FixedComponent c;
        c.label      = axis.name + end;
        c.orbit      = "poles-" + axis.name;
        c.stabilizer = h;
        NormalPiece p;
        p.character = g.index(axis.character);
        p.roots     = {LinearForm{}};
        c.normal.push_back(p);
        s.components.push_back(std::move(c));
      }
      d.strata.push_back(std::move(s));
    }
    FixedComponent whole;
    whole.label      = "S2";
    whole.orbit      = "S2";
    whole.stabilizer = Subgroup::whole(g);
    detail::projective_cohomology(whole, 2);
    d.strata.push_back(FixedStratum{Subgroup::trivial(g), {whole}});
    return d;
  }

  //! Product of two G-manifolds given by fixed-point data whose components
  //! all have stabilizer G.
  inline GManifoldFixedData product(GManifoldFixedData const& a, GManifoldFixedData const& b) {
    if (a.group != b.group) {
      throw GroupMismatch("product of fixed-point data over different groups");
    }
    GManifoldFixedData d;
    d.group    = a.group;
    d.dim      = a.dim + b.dim;
    d.complete = a.complete && b.complete;
    auto pad = [](LinearForm const& l, std::size_t before, std::size_t after) {
      LinearForm out(before, Rational(0));
      out.insert(out.end(), l.begin(), l.end());
      out.resize(before + l.size() + after, Rational(0));
      return out;
    };
    for (auto const& h : cyclic_subgroups(d.group)) {
      auto const* sa = a.stratum(h);
      auto const* sb = b.stratum(h);
      if (sa == nullptr || sb == nullptr) {
        bool const empty = (sa == nullptr && a.complete && !h.is_trivial())
                           || (sb == nullptr && b.complete && !h.is_trivial());
        if (empty) {
          continue;
        }
        throw DomainError("product: missing fixed-point data for " + h.to_string());
      }
      FixedStratum s{h, {}};
      for (auto const& ca : sa->components) {
        for (auto const& cb : sb->components) {
          if (!ca.stabilizer.is_whole() || !cb.stabilizer.is_whole()) {
            throw DomainError("product: components must be fixed by the whole group");
          }
          auto const     na = ca.nvars(), nb = cb.nvars();
          FixedComponent c;
          c.label      = ca.label + "x" + cb.label;
          c.orbit      = c.label;
          c.stabilizer = ca.stabilizer;
          c.sign       = ca.sign * cb.sign;
          for (auto const& v : ca.variables) {
            c.variables.push_back("a." + v);
          }
          for (auto const& v : cb.variables) {
            c.variables.push_back("b." + v);
          }
          c.dim          = ca.dim + cb.dim;
          c.intersection = IntersectionFunctional(na + nb, c.dim);
          for (auto const& [ma, va] : ca.intersection.values()) {
            for (auto const& [mb, vb] : cb.intersection.values()) {
              Monomial m = ma;
              m.insert(m.end(), mb.begin(), mb.end());
              c.intersection.set(m, va * vb);
            }
          }
          for (auto const& r : ca.tangent_roots) {
            c.tangent_roots.push_back(pad(r, 0, nb));
          }
          for (auto const& r : cb.tangent_roots) {
            c.tangent_roots.push_back(pad(r, na, 0));
          }
          for (auto p : ca.normal) {
            for (auto& r : p.roots) {
              r = pad(r, 0, nb);
            }
            c.normal.push_back(std::move(p));
          }
          for (auto p : cb.normal) {
            for (auto& r : p.roots) {
              r = pad(r, na, 0);
            }
            c.normal.push_back(std::move(p));
          }
          s.components.push_back(std::move(c));
        }
      }
      d.strata.push_back(std::move(s));
    }
    return d;
  }

  //! Intersection form on H^N(CP^N): (1) for N even, empty for N odd.
  inline std::vector<std::vector<Rational>> projective_cup_form(std::size_t n) {
    if (n % 2 == 1) {
      return {};
    }
    return {{Rational(1)}};
  }

  //! Bundled calibration models for Z/n: S^2 in both encodings, CP^2 with
  //! weights (0,1,2) and (0,0,1), CP^1 x CP^1, CP^2 x CP^2.
  inline std::vector<CalibrationModel> calibration_models(std::int64_t n) {
    std::vector<CalibrationModel> out;
    out.push_back({"S2 rotation", sphere_rotation(n), projective_cup_form(1)});
    out.push_back({"S2 rotation, reversed south pole", sphere_rotation(n, true), projective_cup_form(1)});
    out.push_back({"CP2 weights (0,1,2)", linear_projective_action(n, {0, 1, 2}), projective_cup_form(2)});
    out.push_back({"CP2 weights (0,0,1)", linear_projective_action(n, {0, 0, 1}), projective_cup_form(2)});
    out.push_back({"CP1 x CP1", product(sphere_rotation(n), sphere_rotation(n)),
                   {{Rational(0), Rational(1)}, {Rational(1), Rational(0)}}});
    auto cp2 = linear_projective_action(n, {0, 1, 2});
    out.push_back({"CP2 x CP2", product(cp2, cp2),
                   {{Rational(0), Rational(0), Rational(1)},
                    {Rational(0), Rational(1), Rational(0)},
                    {Rational(1), Rational(0), Rational(0)}}});
    return out;
  }

}  // namespace equisig

#endif  // EQUISIG_GSIG_MODELS_HPP
