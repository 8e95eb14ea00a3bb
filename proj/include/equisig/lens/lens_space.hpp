#ifndef EQUISIG_LENS_LENS_SPACE_HPP
#define EQUISIG_LENS_LENS_SPACE_HPP

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "equisig/error.hpp"
#include "equisig/exactnum/cyclotomic.hpp"
#include "equisig/exactnum/rational.hpp"

namespace equisig {

  //! L(n; q_1, ..., q_m): the quotient of S^(2m-1) in C^m by
  //! z_j -> zeta^(q_j) z_j, zeta = exp(2 pi i / n).  The 3-dimensional
  //! L(n; q) of the classical notation is LensSpace(n, {1, q}).
  class LensSpace {
  public:
    LensSpace(std::int64_t n, std::vector<std::int64_t> weights) : _n(n), _weights(std::move(weights)) {
      if (_n < 2) {
        throw DomainError("lens space order must be at least 2");
      }
      if (_weights.empty()) {
        throw DomainError("lens space needs at least one weight");
      }
      for (auto& q : _weights) {
        q = mod_floor(q, _n);
        if (std::gcd(q, _n) != 1) {
          throw DomainError("lens space weight " + std::to_string(q) + " is not a unit mod "
                            + std::to_string(_n));
        }
      }
    }

    //! L(n; 1, q_1, ..., q_k).
    static LensSpace classical(std::int64_t n, std::vector<std::int64_t> const& q) {
      std::vector<std::int64_t> w{1};
      w.insert(w.end(), q.begin(), q.end());
      return LensSpace(n, std::move(w));
    }

    std::int64_t order() const noexcept {
      return _n;
    }
    std::vector<std::int64_t> const& weights() const noexcept {
      return _weights;
    }
    std::size_t m() const noexcept {
      return _weights.size();
    }
    int dimension() const noexcept {
      return 2 * static_cast<int>(_weights.size()) - 1;
    }

    std::string to_string() const {
      std::string out = "L(" + std::to_string(_n) + ";";
      for (std::size_t i = 0; i < _weights.size(); ++i) {
        out += (i ? "," : "") + std::to_string(_weights[i]);
      }
      return out + ")";
    }

    //! Classical shorthand: the leading weight 1 is dropped when present.
    std::string short_name() const {
      if (_weights.size() < 2 || _weights.front() != 1) {
        return to_string();
      }
      std::string out = "L(" + std::to_string(_n) + ";";
      for (std::size_t i = 1; i < _weights.size(); ++i) {
        out += (i > 1 ? "," : "") + std::to_string(_weights[i]);
      }
      return out + ")";
    }

    friend bool operator==(LensSpace const& a, LensSpace const& b) {
      return a._n == b._n && a._weights == b._weights;
    }

  private:
    std::int64_t              _n;
    std::vector<std::int64_t> _weights;
  };

  //! Entries at k = 1, ..., n-1; entries[0] is unused and zero.
  struct RhoVector {
    std::int64_t                  n = 0;
    std::vector<CyclotomicNumber> entries;

    CyclotomicNumber const& at(std::int64_t k) const {
      if (k < 1 || k >= n) {
        throw DomainError("rho vector index " + std::to_string(k) + " out of range");
      }
      return entries[static_cast<std::size_t>(k)];
    }

    friend bool operator==(RhoVector const& a, RhoVector const& b) {
      return a.n == b.n && a.entries == b.entries;
    }
  };

  //! f(zeta_n^a) = (1 + zeta^a) / (1 - zeta^a) for a = 1..n-1.
  inline std::vector<CyclotomicNumber> cotangent_table(std::int64_t n) {
    std::vector<CyclotomicNumber> t(static_cast<std::size_t>(n), CyclotomicNumber(0));
    for (std::int64_t a = 1; a < n; ++a) {
      auto z                        = root_of_unity(a, n);
      t[static_cast<std::size_t>(a)] = (CyclotomicNumber(1) + z) / (CyclotomicNumber(1) - z);
    }
    return t;
  }

  inline CyclotomicNumber rho_entry(LensSpace const& l, std::int64_t k, std::vector<CyclotomicNumber> const& table) {
    CyclotomicNumber v(1);
    for (auto q : l.weights()) {
      v *= table[static_cast<std::size_t>(mod_floor(k * q, l.order()))];
    }
    return v;
  }

  inline RhoVector rho_vector(LensSpace const& l, std::vector<CyclotomicNumber> const& table) {
    RhoVector r{l.order(), std::vector<CyclotomicNumber>(static_cast<std::size_t>(l.order()), CyclotomicNumber(0))};
    for (std::int64_t k = 1; k < l.order(); ++k) {
      r.entries[static_cast<std::size_t>(k)] = rho_entry(l, k, table);
    }
    return r;
  }

  inline RhoVector rho_vector(LensSpace const& l) {
    return rho_vector(l, cotangent_table(l.order()));
  }

  inline std::vector<std::int64_t> units_mod(std::int64_t n) {
    std::vector<std::int64_t> u;
    for (std::int64_t c = 1; c < n; ++c) {
      if (std::gcd(c, n) == 1) {
        u.push_back(c);
      }
    }
    return u;
  }

  //! prod q_j = +- c^m prod q'_j (mod n) for some unit c.
  inline bool homotopy_equivalent(LensSpace const& a, LensSpace const& b) {
    if (a.order() != b.order() || a.m() != b.m()) {
      return false;
    }
    auto const n    = a.order();
    auto const prod = [n](LensSpace const& l) {
      std::int64_t p = 1;
      for (auto q : l.weights()) {
        p = mod_floor(p * q, n);
      }
      return p;
    };
    auto const pa = prod(a), pb = prod(b);
    for (auto c : units_mod(n)) {
      std::int64_t cm = 1;
      for (std::size_t i = 0; i < a.m(); ++i) {
        cm = mod_floor(cm * c, n);
      }
      auto const rhs = mod_floor(cm * pb, n);
      if (pa == rhs || pa == mod_floor(-rhs, n)) {
        return true;
      }
    }
    return false;
  }

  namespace detail {
    //! Weights scaled by u with each q identified with -q, as a sorted list.
    inline std::vector<std::int64_t> folded(LensSpace const& l, std::int64_t u) {
      std::vector<std::int64_t> out;
      for (auto q : l.weights()) {
        auto x = mod_floor(u * q, l.order());
        out.push_back(std::min(x, l.order() - x));
      }
      std::sort(out.begin(), out.end());
      return out;
    }
  }  // namespace detail

  //! The unit u with {+- u q_j} = {q'_j} as multisets, if any (least such u).
  inline std::optional<std::int64_t> isometry_unit(LensSpace const& a, LensSpace const& b) {
    if (a.order() != b.order() || a.m() != b.m()) {
      return std::nullopt;
    }
    auto const target = detail::folded(b, 1);
    for (auto u : units_mod(a.order())) {
      if (detail::folded(a, u) == target) {
        return u;
      }
    }
    return std::nullopt;
  }

  inline bool isometric(LensSpace const& a, LensSpace const& b) {
    return isometry_unit(a, b).has_value();
  }

  //! Orientation sign of the isometry a -> b through the unit u: the parity of
  //! the number of weights that change sign.
  inline int isometry_sign(LensSpace const& a, LensSpace const& b, std::int64_t u) {
    auto const                n = a.order();
    std::multiset<std::int64_t> remaining(b.weights().begin(), b.weights().end());
    int                       sign = 1;
    for (auto q : a.weights()) {
      auto const x  = mod_floor(u * q, n);
      auto       it = remaining.find(x);
      if (it == remaining.end()) {
        it   = remaining.find(mod_floor(-x, n));
        sign = -sign;
      }
      if (it == remaining.end()) {
        throw DomainError("isometry_sign: " + std::to_string(u) + " does not carry " + a.to_string() + " to "
                          + b.to_string());
      }
      remaining.erase(it);
    }
    return sign;
  }

  //! rho(b)(k) = sign * rho(a)(u k) for all k, where u and sign come from an
  //! isometry a -> b.
  inline bool rho_matches_under_isometry(RhoVector const& ra, RhoVector const& rb, std::int64_t u, int sign) {
    if (ra.n != rb.n) {
      return false;
    }
    for (std::int64_t k = 1; k < ra.n; ++k) {
      auto const& lhs = rb.at(k);
      auto const& rhs = ra.at(mod_floor(u * k, ra.n));
      if (sign > 0 ? lhs != rhs : lhs != -rhs) {
        return false;
      }
    }
    return true;
  }

  inline bool galois_equivariant(RhoVector const& r) {
    for (std::int64_t k = 1; k < r.n; ++k) {
      for (auto j : units_mod(r.n)) {
        if (r.at(mod_floor(k * j, r.n)) != r.at(k).galois(j)) {
          return false;
        }
      }
    }
    return true;
  }

  struct ExoticPair {
    LensSpace        first;
    LensSpace        second;
    std::int64_t     k;           // least index where the rho vectors differ
    CyclotomicNumber difference;  // rho(second)(k) - rho(first)(k)
  };

  inline int thread_budget() {
    if (auto const* env = std::getenv("EQUISIG_THREADS")) {
      auto const t = std::atoi(env);
      if (t >= 1) {
        return t;
      }
    }
    auto const hw = static_cast<int>(std::thread::hardware_concurrency());
    return hw > 0 ? hw : 1;
  }

  //! Representatives L(n; 1, q_1 <= ... <= q_m), one per isometry class, in
  //! lexicographic order.
  inline std::vector<LensSpace> isometry_class_representatives(std::int64_t n, std::size_t m) {
    auto const                     units = units_mod(n);
    std::vector<LensSpace>         reps;
    std::set<std::vector<std::int64_t>> seen;
    std::vector<std::size_t>       idx(m, 0);
    while (true) {
      std::vector<std::int64_t> q;
      for (auto i : idx) {
        q.push_back(units[i]);
      }
      auto l = LensSpace::classical(n, q);
      // Canonical key: least folded weight list over all units.
      std::vector<std::int64_t> key;
      for (auto u : units) {
        auto f = detail::folded(l, u);
        if (key.empty() || f < key) {
          key = f;
        }
      }
      if (seen.insert(key).second) {
        reps.push_back(l);
      }
      // Next non-decreasing index tuple.
      std::size_t i = m;
      while (i > 0 && idx[i - 1] + 1 == units.size()) {
        --i;
      }
      if (i == 0) {
        break;
      }
      ++idx[i - 1];
      for (auto j = i; j < m; ++j) {
        idx[j] = idx[i - 1];
      }
    }
    return reps;
  }

  inline std::vector<ExoticPair> exotic_pairs_of_order(std::int64_t n, std::size_t m) {
    auto const               reps  = isometry_class_representatives(n, m);
    auto const               table = cotangent_table(n);
    std::vector<RhoVector>   rho;
    for (auto const& l : reps) {
      rho.push_back(rho_vector(l, table));
    }
    std::vector<ExoticPair> out;
    for (std::size_t i = 0; i < reps.size(); ++i) {
      for (std::size_t j = i + 1; j < reps.size(); ++j) {
        if (!homotopy_equivalent(reps[i], reps[j])) {
          continue;
        }
        for (std::int64_t k = 1; k < n; ++k) {
          if (rho[i].at(k) != rho[j].at(k)) {
            out.push_back({reps[i], reps[j], k, rho[j].at(k) - rho[i].at(k)});
            break;
          }
        }
      }
    }
    return out;
  }

  //! Homotopy equivalent, non-isometric pairs L(n; 1, q) with distinct rho
  //! vectors, for 2 <= n <= n_max and m = |q|.  Orders are split across
  //! EQUISIG_THREADS workers; the output is ordered by n, then by pair.
  inline std::vector<ExoticPair> find_exotic_pairs(std::int64_t n_max, std::size_t m) {
    if (n_max > 200 || m < 1 || m > 4) {
      throw DomainError("find_exotic_pairs: need n_max <= 200 and 1 <= m <= 4");
    }
    if (n_max < 2) {
      return {};
    }
    auto const                           count = static_cast<std::size_t>(n_max - 1);
    std::vector<std::vector<ExoticPair>> per_n(count);
    auto const workers = std::min<std::size_t>(static_cast<std::size_t>(thread_budget()), count);
    std::vector<std::exception_ptr> errors(workers);
    auto       work    = [&](std::size_t w) {
      try {
        for (std::size_t i = w; i < count; i += workers) {
          per_n[i] = exotic_pairs_of_order(static_cast<std::int64_t>(i) + 2, m);
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    };
    if (workers <= 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back(work, w);
      }
      for (auto& t : pool) {
        t.join();
      }
    }
    for (auto const& e : errors) {
      if (e) {
        std::rethrow_exception(e);
      }
    }
    std::vector<ExoticPair> out;
    for (auto& v : per_n) {
      out.insert(out.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
    }
    return out;
  }

}  // namespace equisig

#endif  // EQUISIG_LENS_LENS_SPACE_HPP
