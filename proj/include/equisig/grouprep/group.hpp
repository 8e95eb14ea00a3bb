#ifndef EQUISIG_GROUPREP_GROUP_HPP
#define EQUISIG_GROUPREP_GROUP_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "equisig/error.hpp"
#include "equisig/exactnum/cyclotomic.hpp"
#include "equisig/exactnum/int_matrix.hpp"

namespace equisig {

  using Residues = std::vector<std::int64_t>;

  //! Upper bound on group orders handled by the enumeration-based algorithms.
  inline constexpr std::int64_t max_group_order = 10000;

  class FiniteAbelianGroup;

  namespace detail {
    // Z^r modulo the column span of `relations`, brought to invariant-factor
    // form.  coordinates(z) gives the residues of the class of z; generator(i)
    // is a lift in Z^r of the i-th invariant-factor generator.
    struct Presentation {
      std::vector<std::int64_t> factors;
      IntegerMatrix             to_coords;  // rows of U for the kept coordinates
      IntegerMatrix             lifts;      // columns of U^-1 for the kept coordinates

      Residues coordinates(IntVector const& z) const {
        Residues out(factors.size());
        auto     c = to_coords * z;
        for (std::size_t i = 0; i < factors.size(); ++i) {
          Integer r = c[i] % factors[i];
          if (r < 0) {
            r += factors[i];
          }
          out[i] = r.get_si();
        }
        return out;
      }

      IntVector generator(std::size_t i) const {
        return lifts.column(i);
      }
    };

    inline Presentation present(IntegerMatrix const& relations) {
      auto const   s = smith_normal_form(relations);
      auto const   r = relations.rows();
      Presentation out;
      std::vector<std::size_t> kept;
      for (std::size_t i = 0; i < r; ++i) {
        if (i >= s.rank) {
          throw DomainError("presentation defines an infinite group");
        }
        if (s.diagonal(i) != 1) {
          if (!s.diagonal(i).fits_slong_p() || s.diagonal(i) > max_group_order) {
            throw DomainError("group too large");
          }
          kept.push_back(i);
          out.factors.push_back(s.diagonal(i).get_si());
        }
      }
      out.to_coords = IntegerMatrix(kept.size(), r);
      out.lifts     = IntegerMatrix(r, kept.size());
      for (std::size_t k = 0; k < kept.size(); ++k) {
        for (std::size_t j = 0; j < r; ++j) {
          out.to_coords(k, j) = s.U(kept[k], j);
          out.lifts(j, k)     = s.U_inv(j, kept[k]);
        }
      }
      return out;
    }
  }  // namespace detail

  //! A finite abelian group Z/d_1 x ... x Z/d_k in invariant-factor form
  //! (d_i >= 2, d_i | d_{i+1}); k = 0 is the trivial group.
  //!
  //! Elements and dual characters are both addressed by a mixed-radix index
  //! whose most significant digit is the first residue, so index order is the
  //! lexicographic order of residue vectors.  The character with residues a
  //! takes the value zeta_N^(sum a_i g_i N/d_i) on g, N the exponent.
  class FiniteAbelianGroup {
   public:
    FiniteAbelianGroup() = default;

    //! From invariant factors, which must already be in canonical form.
    explicit FiniteAbelianGroup(std::vector<std::int64_t> invariant_factors)
        : _factors(std::move(invariant_factors)) {
      std::int64_t order = 1;
      for (std::size_t i = 0; i < _factors.size(); ++i) {
        if (_factors[i] < 2) {
          throw DomainError("invariant factors must be at least 2");
        }
        if (i + 1 < _factors.size() && _factors[i + 1] % _factors[i] != 0) {
          throw DomainError("invariant factors must divide each other");
        }
        order *= _factors[i];
        if (order > max_group_order) {
          throw DomainError("group order exceeds " + std::to_string(max_group_order));
        }
      }
    }

    //! Z/n_1 x ... x Z/n_r normalized to invariant factors.
    static FiniteAbelianGroup from_cyclic_orders(std::vector<std::int64_t> const& orders) {
      IntegerMatrix rel(orders.size(), orders.size());
      for (std::size_t i = 0; i < orders.size(); ++i) {
        if (orders[i] < 1) {
          throw DomainError("cyclic orders must be positive");
        }
        rel(i, i) = orders[i];
      }
      return FiniteAbelianGroup(detail::present(rel).factors);
    }

    static FiniteAbelianGroup cyclic(std::int64_t n) {
      return from_cyclic_orders({n});
    }

    std::vector<std::int64_t> const& invariant_factors() const noexcept {
      return _factors;
    }

    std::size_t rank() const noexcept {
      return _factors.size();
    }

    std::int64_t order() const noexcept {
      std::int64_t n = 1;
      for (auto d : _factors) {
        n *= d;
      }
      return n;
    }

    std::size_t size() const noexcept {
      return static_cast<std::size_t>(order());
    }

    std::int64_t exponent() const noexcept {
      return _factors.empty() ? 1 : _factors.back();
    }

    bool is_cyclic() const noexcept {
      return _factors.size() <= 1;
    }

    Residues residues(std::size_t index) const {
      Residues r(_factors.size());
      for (auto i = _factors.size(); i-- > 0;) {
        auto d = static_cast<std::size_t>(_factors[i]);
        r[i]   = static_cast<std::int64_t>(index % d);
        index /= d;
      }
      return r;
    }

    //! Index of a residue vector; residues are reduced modulo d_i.
    std::size_t index(Residues const& r) const {
      if (r.size() != _factors.size()) {
        throw DomainError("residue vector has wrong length: expected "
                          + std::to_string(_factors.size()));
      }
      std::size_t idx = 0;
      for (std::size_t i = 0; i < _factors.size(); ++i) {
        idx = idx * static_cast<std::size_t>(_factors[i])
              + static_cast<std::size_t>(mod_floor(r[i], _factors[i]));
      }
      return idx;
    }

    std::size_t identity() const noexcept {
      return 0;
    }

    std::size_t add(std::size_t a, std::size_t b) const {
      auto ra = residues(a), rb = residues(b);
      for (std::size_t i = 0; i < ra.size(); ++i) {
        ra[i] += rb[i];
      }
      return index(ra);
    }

    std::size_t negate(std::size_t a) const {
      auto r = residues(a);
      for (auto& x : r) {
        x = -x;
      }
      return index(r);
    }

    std::size_t multiple(std::size_t a, std::int64_t k) const {
      auto r = residues(a);
      for (auto& x : r) {
        x *= k;
      }
      return index(r);
    }

    std::int64_t element_order(std::size_t a) const {
      auto         r   = residues(a);
      std::int64_t ord = 1;
      for (std::size_t i = 0; i < r.size(); ++i) {
        ord = std::lcm(ord, _factors[i] / std::gcd(r[i], _factors[i]));
      }
      return ord;
    }

    //! chi(g) = zeta_N^e; returns e in [0, N).
    std::int64_t pairing_exponent(std::size_t chi, std::size_t g) const {
      auto const   a = residues(chi), x = residues(g);
      auto const   n = exponent();
      std::int64_t e = 0;
      for (std::size_t i = 0; i < a.size(); ++i) {
        e = (e + (a[i] * x[i] % _factors[i]) * (n / _factors[i])) % n;
      }
      return e;
    }

    CyclotomicNumber character_value(std::size_t chi, std::size_t g) const {
      return root_of_unity(pairing_exponent(chi, g), exponent());
    }

    std::string to_string() const {
      if (_factors.empty()) {
        return "1";
      }
      std::string out;
      for (auto d : _factors) {
        out += (out.empty() ? "Z/" : " x Z/") + std::to_string(d);
      }
      return out;
    }

    std::string residues_string(std::size_t idx) const {
      std::string out;
      for (auto x : residues(idx)) {
        out += (out.empty() ? "" : ",") + std::to_string(x);
      }
      return out;
    }

    friend bool operator==(FiniteAbelianGroup const& a, FiniteAbelianGroup const& b) {
      return a._factors == b._factors;
    }
    friend bool operator!=(FiniteAbelianGroup const& a, FiniteAbelianGroup const& b) {
      return !(a == b);
    }

   private:
    std::vector<std::int64_t> _factors;
  };

  //! Isomorphism from a product presentation Z/n_1 x ... x Z/n_r to its
  //! invariant-factor normal form, on elements and on characters.
  class ProductPresentation {
   public:
    explicit ProductPresentation(std::vector<std::int64_t> orders) : _orders(std::move(orders)) {
      IntegerMatrix rel(_orders.size(), _orders.size());
      for (std::size_t i = 0; i < _orders.size(); ++i) {
        if (_orders[i] < 1) {
          throw DomainError("cyclic orders must be positive");
        }
        rel(i, i) = _orders[i];
      }
      _pres  = detail::present(rel);
      _group = FiniteAbelianGroup(_pres.factors);
    }

    FiniteAbelianGroup const& group() const noexcept {
      return _group;
    }

    bool is_canonical() const noexcept {
      return _orders == _group.invariant_factors();
    }

    std::size_t element(Residues const& r) const {
      check(r);
      IntVector z(r.begin(), r.end());
      return _group.index(_pres.coordinates(z));
    }

    //! Character b of the product (x -> exp(2 pi i sum b_j x_j / n_j)) as a
    //! character of the normal form.
    std::size_t character(Residues const& b) const {
      check(b);
      Residues a(_group.rank());
      for (std::size_t i = 0; i < a.size(); ++i) {
        auto    lift = _pres.generator(i);
        // Phase sum b_j x_j / n_j as a fraction, scaled by d_i.
        Rational phase(0);
        for (std::size_t j = 0; j < _orders.size(); ++j) {
          phase += Rational(b[j] * lift[j], _orders[j]);
        }
        phase *= _group.invariant_factors()[i];
        phase.canonicalize();
        if (phase.get_den() != 1) {
          throw InternalError("character conversion produced a non-integral residue");
        }
        a[i] = Integer(phase.get_num() % _group.invariant_factors()[i]).get_si();
      }
      return _group.index(a);
    }

   private:
    void check(Residues const& r) const {
      if (r.size() != _orders.size()) {
        throw DomainError("residue vector has wrong length: expected "
                          + std::to_string(_orders.size()));
      }
    }

    std::vector<std::int64_t> _orders;
    detail::Presentation      _pres;
    FiniteAbelianGroup        _group;
  };

  //! A subgroup H of a finite abelian group G, stored as the sorted list of
  //! its members, together with an abstract invariant-factor model of H and
  //! the isomorphism between the two.
  class Subgroup {
   public:
    //! The trivial subgroup of the trivial group.
    Subgroup() : Subgroup(FiniteAbelianGroup(), {0}) {}

    Subgroup(FiniteAbelianGroup parent, std::vector<std::size_t> members)
        : _parent(std::move(parent)), _members(std::move(members)) {
      std::sort(_members.begin(), _members.end());
      _members.erase(std::unique(_members.begin(), _members.end()), _members.end());
      std::vector<char> in(_parent.size(), 0);
      for (auto m : _members) {
        if (m >= _parent.size()) {
          throw DomainError("subgroup member out of range");
        }
        in[m] = 1;
      }
      if (_members.empty() || _members.front() != 0) {
        throw DomainError("subgroup must contain the identity");
      }
      for (auto a : _members) {
        if (!in[_parent.negate(a)]) {
          throw DomainError("subgroup not closed under inverses");
        }
        for (auto b : _members) {
          if (!in[_parent.add(a, b)]) {
            throw DomainError("subgroup not closed under the group operation");
          }
        }
      }
      build_structure();
    }

    static Subgroup generated(FiniteAbelianGroup const& parent, std::vector<std::size_t> const& gens) {
      return Subgroup(parent, closure(parent, gens));
    }

    static Subgroup whole(FiniteAbelianGroup const& parent) {
      std::vector<std::size_t> all(parent.size());
      std::iota(all.begin(), all.end(), std::size_t(0));
      return Subgroup(parent, std::move(all));
    }

    static Subgroup trivial(FiniteAbelianGroup const& parent) {
      return Subgroup(parent, {parent.identity()});
    }

    FiniteAbelianGroup const& parent() const noexcept {
      return _parent;
    }

    std::vector<std::size_t> const& members() const noexcept {
      return _members;
    }

    std::int64_t order() const noexcept {
      return static_cast<std::int64_t>(_members.size());
    }

    std::int64_t index_in_parent() const noexcept {
      return _parent.order() / order();
    }

    bool contains(std::size_t g) const {
      return std::binary_search(_members.begin(), _members.end(), g);
    }

    bool is_subgroup_of(Subgroup const& other) const {
      if (_parent != other._parent) {
        return false;
      }
      return std::includes(other._members.begin(), other._members.end(), _members.begin(),
                           _members.end());
    }

    bool is_trivial() const noexcept {
      return _members.size() == 1;
    }

    bool is_whole() const noexcept {
      return _members.size() == _parent.size();
    }

    //! Invariant-factor model of H.
    FiniteAbelianGroup const& abstract() const noexcept {
      return _abstract;
    }

    //! Abstract element index -> parent element index.
    std::size_t to_parent(std::size_t abstract_index) const {
      return _embed.at(abstract_index);
    }

    //! Parent element index -> abstract element index.
    std::size_t to_abstract(std::size_t parent_index) const {
      auto it = std::lower_bound(_members.begin(), _members.end(), parent_index);
      if (it == _members.end() || *it != parent_index) {
        throw DomainError("element " + _parent.residues_string(parent_index)
                          + " is not in the subgroup");
      }
      return _to_abstract[static_cast<std::size_t>(it - _members.begin())];
    }

    //! Parent elements corresponding to the abstract basis vectors.
    std::vector<std::size_t> generators() const {
      std::vector<std::size_t> out;
      for (std::size_t i = 0; i < _abstract.rank(); ++i) {
        Residues e(_abstract.rank(), 0);
        e[i] = 1;
        out.push_back(to_parent(_abstract.index(e)));
      }
      return out;
    }

    //! Restriction of a parent character to H, as a character of abstract().
    std::size_t restrict_character(std::size_t chi) const {
      Residues   c(_abstract.rank());
      auto const n    = _parent.exponent();
      auto const gens = generators();
      for (std::size_t j = 0; j < c.size(); ++j) {
        auto const d = _abstract.invariant_factors()[j];
        auto const e = _parent.pairing_exponent(chi, gens[j]);
        // chi(gen_j) = zeta_N^e = zeta_d^(e d / N).
        c[j] = (e * d) / n;
      }
      return _abstract.index(c);
    }

    std::string to_string() const {
      std::string out = "<";
      bool        first = true;
      for (auto g : generators()) {
        out += (first ? "(" : ", (") + _parent.residues_string(g) + ")";
        first = false;
      }
      return out + ">";
    }

    friend bool operator==(Subgroup const& a, Subgroup const& b) {
      return a._parent == b._parent && a._members == b._members;
    }
    friend bool operator!=(Subgroup const& a, Subgroup const& b) {
      return !(a == b);
    }

   private:
    // Generators g_1..g_r of H give Z^r -> G; the relation lattice is the
    // projection of ker [g_1 .. g_r | diag(d)] to the first r coordinates.
    void build_structure() {
      std::vector<std::size_t> gens;
      {
        std::set<std::size_t> span{0};
        for (auto m : _members) {
          if (span.count(m)) {
            continue;
          }
          gens.push_back(m);
          auto sub = closure(_parent, gens);
          span     = std::set<std::size_t>(sub.begin(), sub.end());
        }
      }
      auto const k = _parent.rank();
      auto const r = gens.size();
      if (r == 0) {
        _abstract = FiniteAbelianGroup();
        _embed    = {0};
        _to_abstract = {0};
        return;
      }
      IntegerMatrix big(k, r + k);
      for (std::size_t j = 0; j < r; ++j) {
        auto res = _parent.residues(gens[j]);
        for (std::size_t i = 0; i < k; ++i) {
          big(i, j) = res[i];
        }
      }
      for (std::size_t i = 0; i < k; ++i) {
        big(i, r + i) = _parent.invariant_factors()[i];
      }
      auto          ker = lattice_kernel(big);
      IntegerMatrix rel(r, ker.size());
      for (std::size_t c = 0; c < ker.size(); ++c) {
        for (std::size_t j = 0; j < r; ++j) {
          rel(j, c) = ker[c][j];
        }
      }
      auto pres = detail::present(rel);
      _abstract = FiniteAbelianGroup(pres.factors);
      // Images of the abstract basis in G.
      std::vector<Residues> basis_images;
      for (std::size_t i = 0; i < pres.factors.size(); ++i) {
        auto     lift = pres.generator(i);
        Residues img(k, 0);
        for (std::size_t j = 0; j < r; ++j) {
          auto res = _parent.residues(gens[j]);
          for (std::size_t t = 0; t < k; ++t) {
            img[t] += Integer(lift[j] % _parent.invariant_factors()[t]).get_si() * res[t];
          }
        }
        basis_images.push_back(img);
      }
      _embed.resize(_abstract.size());
      for (std::size_t a = 0; a < _abstract.size(); ++a) {
        auto     ra = _abstract.residues(a);
        Residues img(k, 0);
        for (std::size_t i = 0; i < ra.size(); ++i) {
          for (std::size_t t = 0; t < k; ++t) {
            img[t] = mod_floor(img[t] + ra[i] * basis_images[i][t], _parent.invariant_factors()[t]);
          }
        }
        _embed[a] = _parent.index(img);
      }
      if (_abstract.size() != _members.size()) {
        throw InternalError("subgroup structure has the wrong order");
      }
      _to_abstract.assign(_members.size(), 0);
      for (std::size_t a = 0; a < _embed.size(); ++a) {
        auto it = std::lower_bound(_members.begin(), _members.end(), _embed[a]);
        if (it == _members.end() || *it != _embed[a]) {
          throw InternalError("subgroup embedding leaves the subgroup");
        }
        _to_abstract[static_cast<std::size_t>(it - _members.begin())] = a;
      }
    }

    static std::vector<std::size_t> closure(FiniteAbelianGroup const&       parent,
                                            std::vector<std::size_t> const& gens) {
      std::set<std::size_t>    seen{parent.identity()};
      std::vector<std::size_t> frontier{parent.identity()};
      while (!frontier.empty()) {
        std::vector<std::size_t> next;
        for (auto x : frontier) {
          for (auto g : gens) {
            auto y = parent.add(x, g);
            if (seen.insert(y).second) {
              next.push_back(y);
            }
          }
        }
        frontier = std::move(next);
      }
      return {seen.begin(), seen.end()};
    }

    FiniteAbelianGroup       _parent;
    std::vector<std::size_t> _members;
    FiniteAbelianGroup       _abstract;
    std::vector<std::size_t> _embed;        // abstract index -> parent index
    std::vector<std::size_t> _to_abstract;  // position in _members -> abstract index
  };

  inline std::int64_t element_order(FiniteAbelianGroup const& g, std::size_t x) {
    return g.element_order(x);
  }

  inline Subgroup subgroup_generated(FiniteAbelianGroup const& g, std::size_t x) {
    return Subgroup::generated(g, {x});
  }

  //! Duplicate-free list of cyclic subgroups, ordered by decreasing order and
  //! then by member list.
  inline std::vector<Subgroup> cyclic_subgroups(FiniteAbelianGroup const& g) {
    std::map<std::vector<std::size_t>, std::size_t> seen;
    std::vector<Subgroup>                           out;
    for (std::size_t x = 0; x < g.size(); ++x) {
      auto h = subgroup_generated(g, x);
      if (seen.emplace(h.members(), out.size()).second) {
        out.push_back(std::move(h));
      }
    }
    std::sort(out.begin(), out.end(), [](Subgroup const& a, Subgroup const& b) {
      if (a.order() != b.order()) {
        return a.order() > b.order();
      }
      return a.members() < b.members();
    });
    return out;
  }

  //! All subgroups, same ordering as cyclic_subgroups.  Exhaustive; meant for
  //! small groups.
  inline std::vector<Subgroup> all_subgroups(FiniteAbelianGroup const& g) {
    std::set<std::vector<std::size_t>> found;
    for (auto const& h : cyclic_subgroups(g)) {
      found.insert(h.members());
    }
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<std::vector<std::size_t>> current(found.begin(), found.end());
      for (std::size_t i = 0; i < current.size(); ++i) {
        for (std::size_t j = i + 1; j < current.size(); ++j) {
          std::vector<std::size_t> gens = current[i];
          gens.insert(gens.end(), current[j].begin(), current[j].end());
          auto joined = Subgroup::generated(g, gens);
          if (found.insert(joined.members()).second) {
            grew = true;
          }
        }
      }
    }
    std::vector<Subgroup> out;
    for (auto const& m : found) {
      out.emplace_back(g, m);
    }
    std::sort(out.begin(), out.end(), [](Subgroup const& a, Subgroup const& b) {
      if (a.order() != b.order()) {
        return a.order() > b.order();
      }
      return a.members() < b.members();
    });
    return out;
  }

  //! G/N materialized with its projection map (element index -> quotient
  //! element index).
  struct Quotient {
    FiniteAbelianGroup       group;
    std::vector<std::size_t> projection;
  };

  inline Quotient quotient(FiniteAbelianGroup const& g, Subgroup const& n) {
    if (n.parent() != g) {
      throw GroupMismatch("quotient: subgroup of a different group");
    }
    auto const    k    = g.rank();
    auto const    gens = n.generators();
    IntegerMatrix rel(k, k + gens.size());
    for (std::size_t i = 0; i < k; ++i) {
      rel(i, i) = g.invariant_factors()[i];
    }
    for (std::size_t j = 0; j < gens.size(); ++j) {
      auto r = g.residues(gens[j]);
      for (std::size_t i = 0; i < k; ++i) {
        rel(i, k + j) = r[i];
      }
    }
    Quotient out;
    if (k == 0) {
      out.projection = {0};
      return out;
    }
    auto pres = detail::present(rel);
    out.group = FiniteAbelianGroup(pres.factors);
    out.projection.resize(g.size());
    for (std::size_t x = 0; x < g.size(); ++x) {
      auto r = g.residues(x);
      out.projection[x] = out.group.index(pres.coordinates(IntVector(r.begin(), r.end())));
    }
    return out;
  }

}  // namespace equisig

#endif  // EQUISIG_GROUPREP_GROUP_HPP
