#ifndef EQUISIG_IO_JSON_HPP
#define EQUISIG_IO_JSON_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "equisig/artin.hpp"
#include "equisig/error.hpp"
#include "equisig/gsig.hpp"
#include "equisig/lens.hpp"
#include "equisig/primeloc.hpp"

namespace equisig::io {

  using nlohmann::json;

  namespace detail {
    inline json const& field(json const& j, std::string const& path, char const* key) {
      if (!j.is_object()) {
        throw SchemaError(path.empty() ? "/" : path, "expected an object");
      }
      auto it = j.find(key);
      if (it == j.end()) {
        throw SchemaError(path + "/" + key, "missing field");
      }
      return *it;
    }

    inline json const* optional_field(json const& j, char const* key) {
      auto it = j.find(key);
      return it == j.end() || it->is_null() ? nullptr : &*it;
    }

    inline std::int64_t as_int(json const& j, std::string const& path) {
      if (!j.is_number_integer()) {
        throw SchemaError(path, "expected an integer");
      }
      return j.get<std::int64_t>();
    }

    inline bool as_bool(json const& j, std::string const& path) {
      if (!j.is_boolean()) {
        throw SchemaError(path, "expected true or false");
      }
      return j.get<bool>();
    }

    inline std::string as_string(json const& j, std::string const& path) {
      if (!j.is_string()) {
        throw SchemaError(path, "expected a string");
      }
      return j.get<std::string>();
    }

    inline json const& as_array(json const& j, std::string const& path) {
      if (!j.is_array()) {
        throw SchemaError(path, "expected an array");
      }
      return j;
    }

    inline std::vector<std::int64_t> int_list(json const& j, std::string const& path) {
      std::vector<std::int64_t> out;
      auto const&               a = as_array(j, path);
      for (std::size_t i = 0; i < a.size(); ++i) {
        out.push_back(as_int(a[i], path + "/" + std::to_string(i)));
      }
      return out;
    }

    inline std::string at(std::string const& path, std::size_t i) {
      return path + "/" + std::to_string(i);
    }

    inline std::string at(std::string const& path, char const* key) {
      return path + "/" + key;
    }
  }  // namespace detail

  // Exact numbers -------------------------------------------------------------

  inline json to_json(Rational const& q) {
    return to_string(q);
  }

  inline Rational rational_from_json(json const& j, std::string const& path = "") {
    if (j.is_number_integer()) {
      return Rational(j.get<long>());
    }
    auto const text = detail::as_string(j, path);
    try {
      return parse_rational(text);
    } catch (Error const& e) {
      throw SchemaError(path, e.what());
    }
  }

  inline Integer integer_from_json(json const& j, std::string const& path = "") {
    if (j.is_number_integer()) {
      return Integer(j.get<long>());
    }
    auto const text = detail::as_string(j, path);
    try {
      return parse_integer(text);
    } catch (Error const& e) {
      throw SchemaError(path, e.what());
    }
  }

  //! Power-basis coefficients at the minimal conductor, plus a display form.
  inline json to_json(CyclotomicNumber const& x) {
    json c = json::array();
    for (auto const& q : x.coefficients_at(x.conductor())) {
      c.push_back(to_json(q));
    }
    return {{"conductor", x.conductor()}, {"coefficients", c}, {"text", x.to_string()}};
  }

  inline CyclotomicNumber cyclotomic_from_json(json const& j, std::string const& path = "") {
    auto const n = detail::as_int(detail::field(j, path, "conductor"), detail::at(path, "conductor"));
    if (n < 1) {
      throw SchemaError(detail::at(path, "conductor"), "conductor must be positive");
    }
    auto const& cs = detail::as_array(detail::field(j, path, "coefficients"), detail::at(path, "coefficients"));
    RatPoly     poly;
    for (std::size_t i = 0; i < cs.size(); ++i) {
      poly.push_back(rational_from_json(cs[i], detail::at(detail::at(path, "coefficients"), i)));
    }
    try {
      return CyclotomicNumber::from_power_basis(n, std::move(poly));
    } catch (DomainError const& e) {
      throw SchemaError(path, e.what());
    }
  }

  // Groups --------------------------------------------------------------------

  inline json group_to_json(FiniteAbelianGroup const& g) {
    return g.invariant_factors();
  }

  //! A group is written as the list of orders of cyclic factors; the factors
  //! need not be invariant factors.
  inline ProductPresentation group_from_json(json const& j, std::string const& path = "") {
    auto orders = detail::int_list(j, path);
    try {
      return ProductPresentation(std::move(orders));
    } catch (DomainError const& e) {
      throw SchemaError(path, e.what());
    }
  }

  inline json element_to_json(FiniteAbelianGroup const& g, std::size_t x) {
    return g.residues(x);
  }

  //! Residues in the presentation's factors; a bare integer is accepted for a
  //! single factor.
  inline Residues residues_from_json(json const& j, std::string const& path) {
    if (j.is_number_integer()) {
      return {j.get<std::int64_t>()};
    }
    return detail::int_list(j, path);
  }

  inline std::size_t element_from_json(ProductPresentation const& pres, json const& j, std::string const& path = "") {
    try {
      return pres.element(residues_from_json(j, path));
    } catch (DomainError const& e) {
      throw SchemaError(path, e.what());
    }
  }

  inline std::size_t character_from_json(ProductPresentation const& pres, json const& j, std::string const& path = "") {
    try {
      return pres.character(residues_from_json(j, path));
    } catch (DomainError const& e) {
      throw SchemaError(path, e.what());
    }
  }

  inline json subgroup_to_json(Subgroup const& h) {
    json gens = json::array();
    for (auto x : h.generators()) {
      gens.push_back(element_to_json(h.parent(), x));
    }
    return {{"generators", gens}, {"order", h.order()}};
  }

  inline Subgroup subgroup_from_json(ProductPresentation const& pres, json const& j, std::string const& path = "") {
    auto const&              gs = detail::as_array(detail::field(j, path, "generators"), detail::at(path, "generators"));
    std::vector<std::size_t> gens;
    for (std::size_t i = 0; i < gs.size(); ++i) {
      gens.push_back(element_from_json(pres, gs[i], detail::at(detail::at(path, "generators"), i)));
    }
    return Subgroup::generated(pres.group(), gens);
  }

  // Representations -----------------------------------------------------------

  inline json to_json(VirtualRep const& v) {
    json terms = json::array();
    for (auto const& [chi, c] : v.terms()) {
      terms.push_back({{"character", element_to_json(v.group(), chi)}, {"coefficient", to_string(c)}});
    }
    return {{"group", group_to_json(v.group())}, {"terms", terms}};
  }

  inline VirtualRep virtual_rep_from_json(json const& j, std::string const& path = "") {
    auto const  pres = group_from_json(detail::field(j, path, "group"), detail::at(path, "group"));
    VirtualRep  v    = VirtualRep::zero(pres.group());
    auto const  tp   = detail::at(path, "terms");
    auto const& ts   = detail::as_array(detail::field(j, path, "terms"), tp);
    for (std::size_t i = 0; i < ts.size(); ++i) {
      auto const p   = detail::at(tp, i);
      auto const chi = character_from_json(pres, detail::field(ts[i], p, "character"), detail::at(p, "character"));
      v.add_term(chi, integer_from_json(detail::field(ts[i], p, "coefficient"), detail::at(p, "coefficient")));
    }
    return v;
  }

  // Primes and localized elements ---------------------------------------------

  inline json to_json(PrimeIdealSpec const& p) {
    json out{{"group", group_to_json(p.group())},
             {"element", element_to_json(p.group(), p.element())},
             {"p", p.characteristic()},
             {"text", p.to_string()}};
    if (p.residue_prime()) {
      out["residue"] = p.residue_prime()->coefficients();
    }
    return out;
  }

  inline PrimeIdealSpec prime_from_json(json const& j, std::string const& path = "") {
    auto const pres = group_from_json(detail::field(j, path, "group"), detail::at(path, "group"));
    auto const g    = element_from_json(pres, detail::field(j, path, "element"), detail::at(path, "element"));
    auto const p    = detail::as_int(detail::field(j, path, "p"), detail::at(path, "p"));
    if (p < 0) {
      throw SchemaError(detail::at(path, "p"), "residual characteristic must be 0 or a prime");
    }
    std::optional<ModPolynomial> residue;
    if (auto const* r = detail::optional_field(j, "residue")) {
      std::vector<std::uint64_t> cs;
      for (auto c : detail::int_list(*r, detail::at(path, "residue"))) {
        cs.push_back(static_cast<std::uint64_t>(mod_floor(c, p == 0 ? 1 : p)));
      }
      residue = ModPolynomial(static_cast<std::uint64_t>(p), cs);
    }
    try {
      return PrimeIdealSpec(pres.group(), g, static_cast<std::uint64_t>(p), residue);
    } catch (DomainError const& e) {
      throw SchemaError(path, e.what());
    }
  }

  inline json to_json(LocalizedElement const& e) {
    return {{"numerator", to_json(e.numerator())}, {"denominator", to_json(e.denominator())}};
  }

  inline json to_json(LocalizationReport const& r) {
    return {{"support", subgroup_to_json(r.support)},
            {"prime_on_support", to_json(r.prime_on_support)},
            {"index", r.index},
            {"unit", to_json(r.unit)},
            {"unit_value_checked", r.unit_value_checked},
            {"unit_outside_prime", r.unit_outside_prime},
            {"annihilates_kernel", r.annihilates_kernel},
            {"kernel_rank", r.kernel_rank},
            {"certified", r.certified},
            {"message", r.message}};
  }

  // Artin certificates --------------------------------------------------------

  inline json to_json(ArtinCertificate const& c) {
    json terms = json::array();
    for (auto const& t : c.terms()) {
      terms.push_back({{"subgroup", subgroup_to_json(t.subgroup)},
                       {"subgroup_group", group_to_json(t.subgroup.abstract())},
                       {"character", element_to_json(t.subgroup.abstract(), t.character)},
                       {"coefficient", to_string(t.coefficient)}});
    }
    return {{"group", group_to_json(c.group())}, {"order", c.group().order()}, {"terms", terms}};
  }

  //! Re-verifies the certificate; a certificate that does not sum to |G| * 1
  //! is a schema error at the root.
  inline ArtinCertificate artin_from_json(json const& j, std::string const& path = "") {
    auto const             pres = group_from_json(detail::field(j, path, "group"), detail::at(path, "group"));
    auto const             tp   = detail::at(path, "terms");
    auto const&            ts   = detail::as_array(detail::field(j, path, "terms"), tp);
    std::vector<ArtinTerm> terms;
    for (std::size_t i = 0; i < ts.size(); ++i) {
      auto const p   = detail::at(tp, i);
      auto       h   = subgroup_from_json(pres, detail::field(ts[i], p, "subgroup"), detail::at(p, "subgroup"));
      auto const ch  = detail::int_list(detail::field(ts[i], p, "character"), detail::at(p, "character"));
      std::size_t chi = 0;
      try {
        chi = h.abstract().index(ch);
      } catch (DomainError const& e) {
        throw SchemaError(detail::at(p, "character"), e.what());
      }
      terms.push_back({h, chi, integer_from_json(detail::field(ts[i], p, "coefficient"), detail::at(p, "coefficient"))});
    }
    try {
      return ArtinCertificate(pres.group(), std::move(terms));
    } catch (InternalError const& e) {
      throw SchemaError(path.empty() ? "/" : path, e.what());
    }
  }

  // Series --------------------------------------------------------------------

  inline json to_json(TruncatedSeries const& s) {
    json terms = json::array();
    for (auto const& [m, c] : s.terms()) {
      terms.push_back({{"monomial", m}, {"coefficient", to_json(c)}});
    }
    return {{"nvars", s.nvars()}, {"truncation", s.truncation()}, {"terms", terms}, {"text", s.to_string()}};
  }

  inline TruncatedSeries series_from_json(json const& j, std::string const& path = "") {
    auto const nvars = detail::as_int(detail::field(j, path, "nvars"), detail::at(path, "nvars"));
    auto const trunc = detail::as_int(detail::field(j, path, "truncation"), detail::at(path, "truncation"));
    if (nvars < 0) {
      throw SchemaError(detail::at(path, "nvars"), "must be non-negative");
    }
    TruncatedSeries s(static_cast<std::size_t>(nvars), static_cast<int>(trunc));
    auto const      tp = detail::at(path, "terms");
    auto const&     ts = detail::as_array(detail::field(j, path, "terms"), tp);
    for (std::size_t i = 0; i < ts.size(); ++i) {
      auto const p  = detail::at(tp, i);
      auto const mi = detail::int_list(detail::field(ts[i], p, "monomial"), detail::at(p, "monomial"));
      if (mi.size() != static_cast<std::size_t>(nvars)) {
        throw SchemaError(detail::at(p, "monomial"), "wrong number of exponents");
      }
      Monomial m(mi.begin(), mi.end());
      s.add_term(m, cyclotomic_from_json(detail::field(ts[i], p, "coefficient"), detail::at(p, "coefficient")));
    }
    return s;
  }

  // Fixed-point data ----------------------------------------------------------

  namespace detail {
    inline json linear_form_to_json(LinearForm const& l) {
      json out = json::array();
      for (auto const& q : l) {
        out.push_back(io::to_json(q));
      }
      return out;
    }

    //! Exponent vector written as "2" or "1,1"; the empty string for a point.
    inline std::string monomial_key(Monomial const& m) {
      std::string out;
      for (std::size_t i = 0; i < m.size(); ++i) {
        out += (i ? "," : "") + std::to_string(m[i]);
      }
      return out;
    }

    inline std::vector<std::int64_t> parse_monomial_key(std::string const& key, std::string const& path) {
      std::vector<std::int64_t> out;
      if (key.empty()) {
        return out;
      }
      std::size_t start = 0;
      while (true) {
        auto const  end  = key.find(',', start);
        auto const  item = key.substr(start, end == std::string::npos ? std::string::npos : end - start);
        std::size_t used = 0;
        try {
          out.push_back(std::stoll(item, &used));
        } catch (std::exception const&) {
          used = 0;
        }
        if (used == 0 || used != item.size()) {
          throw SchemaError(path, "monomial key must be comma-separated exponents");
        }
        if (end == std::string::npos) {
          break;
        }
        start = end + 1;
      }
      return out;
    }

    inline LinearForm linear_form_from_json(json const& j, std::string const& path, std::size_t nvars) {
      auto const& a = as_array(j, path);
      if (a.size() != nvars) {
        throw SchemaError(path, "expected " + std::to_string(nvars) + " coefficients");
      }
      LinearForm l;
      for (std::size_t i = 0; i < a.size(); ++i) {
        l.push_back(rational_from_json(a[i], at(path, i)));
      }
      return l;
    }
  }  // namespace detail

  inline json to_json(FixedComponent const& c) {
    json intersection = json::object();
    for (auto const& [m, v] : c.intersection.values()) {
      intersection[detail::monomial_key(m)] = to_json(v);
    }
    json tangent = json::array();
    for (auto const& r : c.tangent_roots) {
      tangent.push_back(detail::linear_form_to_json(r));
    }
    json normal = json::array();
    for (auto const& p : c.normal) {
      json roots = json::array();
      for (auto const& r : p.roots) {
        roots.push_back(detail::linear_form_to_json(r));
      }
      normal.push_back({{"character", element_to_json(c.stabilizer.parent(), p.character)},
                        {"rank", p.rank},
                        {"roots", roots}});
    }
    json stab = json::array();
    for (auto x : c.stabilizer.generators()) {
      stab.push_back(element_to_json(c.stabilizer.parent(), x));
    }
    return {{"label", c.label},         {"orbit", c.orbit},   {"stabilizer", stab},
            {"sign", c.sign},           {"variables", c.variables}, {"dim", c.dim},
            {"intersection", intersection}, {"tangent_roots", tangent}, {"normal", normal}};
  }

  inline FixedComponent component_from_json(ProductPresentation const& pres, json const& j,
                                             std::string const& path) {
    using detail::as_array;
    using detail::at;
    using detail::field;
    using detail::optional_field;
    FixedComponent c;
    c.label = detail::as_string(field(j, path, "label"), at(path, "label"));
    c.orbit = c.label;
    if (auto const* o = optional_field(j, "orbit")) {
      c.orbit = detail::as_string(*o, at(path, "orbit"));
    }
    c.stabilizer = Subgroup::whole(pres.group());
    if (auto const* s = optional_field(j, "stabilizer")) {
      auto const&              a = as_array(*s, at(path, "stabilizer"));
      std::vector<std::size_t> gens;
      for (std::size_t i = 0; i < a.size(); ++i) {
        gens.push_back(element_from_json(pres, a[i], at(at(path, "stabilizer"), i)));
      }
      c.stabilizer = Subgroup::generated(pres.group(), gens);
    }
    if (auto const* s = optional_field(j, "sign")) {
      c.sign = static_cast<int>(detail::as_int(*s, at(path, "sign")));
      if (c.sign != 1 && c.sign != -1) {
        throw SchemaError(at(path, "sign"), "orientation sign must be 1 or -1");
      }
    }
    if (auto const* v = optional_field(j, "variables")) {
      auto const& a = as_array(*v, at(path, "variables"));
      for (std::size_t i = 0; i < a.size(); ++i) {
        c.variables.push_back(detail::as_string(a[i], at(at(path, "variables"), i)));
      }
    }
    c.dim = 0;
    if (auto const* d = optional_field(j, "dim")) {
      c.dim = static_cast<int>(detail::as_int(*d, at(path, "dim")));
      if (c.dim < 0 || c.dim % 2 != 0) {
        throw SchemaError(at(path, "dim"), "dimension must be even and non-negative");
      }
    }
    if (auto const* in = optional_field(j, "intersection")) {
      c.intersection = IntersectionFunctional(c.nvars(), c.dim);
      auto const ip  = at(path, "intersection");
      auto       set = [&](std::vector<std::int64_t> const& mi, Rational const& v, std::string const& p) {
        try {
          c.intersection.set(Monomial(mi.begin(), mi.end()), v);
        } catch (DomainError const& e) {
          throw SchemaError(p, e.what());
        }
      };
      if (in->is_object()) {
        for (auto const& [key, value] : in->items()) {
          auto const p = ip + "/" + key;
          set(detail::parse_monomial_key(key, p), rational_from_json(value, p), p);
        }
      } else {
        auto const& a = as_array(*in, ip);
        for (std::size_t i = 0; i < a.size(); ++i) {
          auto const p = at(ip, i);
          set(detail::int_list(field(a[i], p, "monomial"), at(p, "monomial")),
              rational_from_json(field(a[i], p, "value"), at(p, "value")), p);
        }
      }
    } else if (c.dim != 0 || c.nvars() != 0) {
      throw SchemaError(at(path, "intersection"), "missing field (required unless the component is a point)");
    }
    if (auto const* t = optional_field(j, "tangent_roots")) {
      auto const  tp = at(path, "tangent_roots");
      auto const& a  = as_array(*t, tp);
      for (std::size_t i = 0; i < a.size(); ++i) {
        c.tangent_roots.push_back(detail::linear_form_from_json(a[i], at(tp, i), c.nvars()));
      }
    }
    auto const  np = at(path, "normal");
    auto const& ns = as_array(field(j, path, "normal"), np);
    for (std::size_t i = 0; i < ns.size(); ++i) {
      auto const  p = at(np, i);
      NormalPiece piece;
      piece.character = character_from_json(pres, field(ns[i], p, "character"), at(p, "character"));
      piece.rank      = 1;
      if (auto const* r = optional_field(ns[i], "rank")) {
        piece.rank = static_cast<int>(detail::as_int(*r, at(p, "rank")));
      }
      if (auto const* r = optional_field(ns[i], "roots")) {
        auto const  rp = at(p, "roots");
        auto const& a  = as_array(*r, rp);
        for (std::size_t k = 0; k < a.size(); ++k) {
          piece.roots.push_back(detail::linear_form_from_json(a[k], at(rp, k), c.nvars()));
        }
      } else if (c.nvars() == 0) {
        piece.roots.assign(static_cast<std::size_t>(std::max(piece.rank, 0)), LinearForm{});
      } else {
        throw SchemaError(at(p, "roots"), "missing field (required when the component has variables)");
      }
      c.normal.push_back(std::move(piece));
    }
    return c;
  }

  inline json to_json(GManifoldFixedData const& d) {
    json strata = json::array();
    for (auto const& s : d.strata) {
      auto const gens = s.subgroup.generators();
      json       comps = json::array();
      for (auto const& c : s.components) {
        comps.push_back(to_json(c));
      }
      strata.push_back({{"generator", element_to_json(d.group, gens.empty() ? d.group.identity() : gens.front())},
                        {"components", comps}});
    }
    return {{"group", group_to_json(d.group)}, {"dim", d.dim}, {"complete", d.complete}, {"strata", strata}};
  }

  //! Parses and validates; structural violations are reported as SchemaError
  //! with the path of the stratum, hypothesis violations are rethrown as
  //! HypothesisViolation with the same path prefix.
  inline GManifoldFixedData fixed_data_from_json(json const& j, std::string const& path = "") {
    using detail::at;
    using detail::field;
    auto const         pres = group_from_json(field(j, path, "group"), at(path, "group"));
    GManifoldFixedData d;
    d.group = pres.group();
    d.dim   = static_cast<int>(detail::as_int(field(j, path, "dim"), at(path, "dim")));
    if (auto const* c = detail::optional_field(j, "complete")) {
      d.complete = detail::as_bool(*c, at(path, "complete"));
    }
    auto const  sp = at(path, "strata");
    auto const& ss = detail::as_array(field(j, path, "strata"), sp);
    for (std::size_t i = 0; i < ss.size(); ++i) {
      auto const   p = at(sp, i);
      auto const   g = element_from_json(pres, field(ss[i], p, "generator"), at(p, "generator"));
      FixedStratum s{subgroup_generated(d.group, g), {}};
      auto const   cp = at(p, "components");
      auto const&  cs = detail::as_array(field(ss[i], p, "components"), cp);
      for (std::size_t k = 0; k < cs.size(); ++k) {
        s.components.push_back(component_from_json(pres, cs[k], at(cp, k)));
        try {
          validate(s.components.back(), s.subgroup, d.dim);
        } catch (HypothesisViolation const& e) {
          throw HypothesisViolation(at(cp, k) + ": " + e.what());
        } catch (Error const& e) {
          throw SchemaError(at(cp, k), e.what());
        }
      }
      d.strata.push_back(std::move(s));
    }
    try {
      validate(d);
    } catch (HypothesisViolation const&) {
      throw;
    } catch (Error const& e) {
      throw SchemaError(path.empty() ? "/" : path, e.what());
    }
    return d;
  }

  // Reports -------------------------------------------------------------------

  inline json to_json(OrbitEntry const& e) {
    json out{{"orbit", e.orbit},
             {"labels", e.labels},
             {"orbit_size", e.orbit_size},
             {"stabilizer", subgroup_to_json(e.stabilizer)},
             {"inflation", {{"from_order", e.inflation_from}, {"to_order", e.inflation_to}}},
             {"prime_certified", e.prime_certified},
             {"unit_certified", e.unit_certified},
             {"base_token", e.base_token}};
    json chars = json::array();
    for (auto chi : e.normal_characters) {
      chars.push_back(element_to_json(e.stabilizer.abstract(), chi));
    }
    out["normal_characters"] = chars;
    if (e.prime_on_stabilizer) {
      out["prime_on_stabilizer"] = to_json(*e.prime_on_stabilizer);
    }
    if (e.fiber_class) {
      out["fiber_class"] = to_json(*e.fiber_class);
    }
    if (e.series_form) {
      out["series_form"] = to_json(*e.series_form);
    }
    if (e.pairing) {
      out["pairing"] = to_json(*e.pairing);
    }
    return out;
  }

  inline json to_json(ContributionReport const& r) {
    json entries = json::array();
    for (auto const& e : r.entries) {
      entries.push_back(to_json(e));
    }
    json out{{"prime", to_json(r.prime)},
             {"support", subgroup_to_json(r.support)},
             {"branch", to_string(r.branch)},
             {"message", r.message},
             {"component_count", r.component_count},
             {"orbit_count", r.entries.size()},
             {"entries", entries}};
    if (r.evaluation_element) {
      out["evaluation_element"] = element_to_json(r.prime.group(), *r.evaluation_element);
    }
    if (r.total_pairing) {
      out["total_pairing"] = to_json(*r.total_pairing);
    }
    return out;
  }

  // Lens spaces ---------------------------------------------------------------

  inline json to_json(LensSpace const& l) {
    return {{"n", l.order()}, {"weights", l.weights()}};
  }

  inline LensSpace lens_from_json(json const& j, std::string const& path = "") {
    auto const n = detail::as_int(detail::field(j, path, "n"), detail::at(path, "n"));
    auto       w = detail::int_list(detail::field(j, path, "weights"), detail::at(path, "weights"));
    try {
      return LensSpace(n, std::move(w));
    } catch (DomainError const& e) {
      throw SchemaError(path.empty() ? "/" : path, e.what());
    }
  }

  inline json to_json(RhoVector const& r) {
    json entries = json::array();
    for (std::int64_t k = 1; k < r.n; ++k) {
      entries.push_back(to_json(r.at(k)));
    }
    return {{"n", r.n}, {"entries", entries}};
  }

  inline RhoVector rho_from_json(json const& j, std::string const& path = "") {
    auto const n = detail::as_int(detail::field(j, path, "n"), detail::at(path, "n"));
    if (n < 2) {
      throw SchemaError(detail::at(path, "n"), "order must be at least 2");
    }
    auto const  ep = detail::at(path, "entries");
    auto const& es = detail::as_array(detail::field(j, path, "entries"), ep);
    if (es.size() != static_cast<std::size_t>(n - 1)) {
      throw SchemaError(ep, "expected n - 1 entries");
    }
    RhoVector r{n, {CyclotomicNumber(0)}};
    for (std::size_t i = 0; i < es.size(); ++i) {
      r.entries.push_back(cyclotomic_from_json(es[i], detail::at(ep, i)));
    }
    return r;
  }

  inline json to_json(ExoticPair const& p) {
    return {{"first", to_json(p.first)},
            {"second", to_json(p.second)},
            {"first_name", p.first.short_name()},
            {"second_name", p.second.short_name()},
            {"k", p.k},
            {"difference", to_json(p.difference)}};
  }

  inline ExoticPair exotic_pair_from_json(json const& j, std::string const& path = "") {
    return {lens_from_json(detail::field(j, path, "first"), detail::at(path, "first")),
            lens_from_json(detail::field(j, path, "second"), detail::at(path, "second")),
            detail::as_int(detail::field(j, path, "k"), detail::at(path, "k")),
            cyclotomic_from_json(detail::field(j, path, "difference"), detail::at(path, "difference"))};
  }

}  // namespace equisig::io

#endif  // EQUISIG_IO_JSON_HPP
