#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "domcells/cells.hpp"
#include "domcells/domination.hpp"
#include "domcells/error.hpp"

namespace domcells {

using Integer = boost::multiprecision::cpp_int;
// Always held in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long long num, long long den = 1) {
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  return Rational(Integer(num), Integer(den));
}

// "p/q" form, always with an explicit denominator.
inline std::string to_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

inline Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    return Rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw Error(ErrorKind::ParseError, "malformed rational '" + text + "'");
  }
}

// A domination number together with whether the solver proved it.
struct Gamma {
  std::size_t value = 0;
  bool proven = false;

  static Gamma exact(std::size_t v) { return {v, true}; }
  static Gamma from(const GammaResult& r) { return {r.gamma, r.proven_optimal}; }
};

enum class Relation { AtLeast, AtMost, Equal };

inline std::string_view relation_symbol(Relation r) {
  switch (r) {
    case Relation::AtLeast: return ">=";
    case Relation::AtMost: return "<=";
    case Relation::Equal: return "==";
  }
  return "?";
}

struct CheckEntry {
  std::string name;
  Relation relation = Relation::AtLeast;
  Rational lhs;
  Rational rhs;
  bool passed = false;
  std::string locator;  // fiber or cell witnessing a violation, empty when global
};

inline bool holds(Relation r, const Rational& lhs, const Rational& rhs) {
  switch (r) {
    case Relation::AtLeast: return lhs >= rhs;
    case Relation::AtMost: return lhs <= rhs;
    case Relation::Equal: return lhs == rhs;
  }
  return false;
}

struct CheckReport {
  std::string check;
  std::vector<CheckEntry> entries;
  // Failures are reported as findings rather than defects.
  bool finding_only = false;

  void add(std::string name, Relation rel, Rational lhs, Rational rhs, std::string locator = {}) {
    const bool ok = holds(rel, lhs, rhs);
    entries.push_back({std::move(name), rel, std::move(lhs), std::move(rhs), ok, std::move(locator)});
  }

  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& e : entries) n += e.passed ? 0 : 1;
    return n;
  }
  bool passed() const { return failures() == 0; }
  const CheckEntry* first_failure() const {
    for (const auto& e : entries)
      if (!e.passed) return &e;
    return nullptr;
  }
};

namespace detail {

inline void require_proven(const Gamma& g, const char* what) {
  if (!g.proven)
    throw Error(ErrorKind::Unproven, std::string(what) + " is not a proven domination number");
}

inline Rational q(std::size_t v) { return Rational(Integer(v)); }

inline std::string fiber_name(const char* a, std::size_t va, const char* b, std::size_t vb) {
  return std::string("[") + a + "=" + std::to_string(va) + "," + b + "=" + std::to_string(vb) + "]";
}

}  // namespace detail


// b'+g'+y'+o'+r'+m' >= gamma(X) gamma(Y) |V(Z)|, and per Y-fiber Y_{i,z}
// the same six-color count is at least gamma(Y).
inline CheckReport check_lemma1(const ColorLedger& L, const Gamma& gamma_y) {
  detail::require_proven(gamma_y, "gamma(Y)");
  CheckReport r{"lemma1", {}, false};
  const auto six = [](const ColorCounts& c) {
    return c.cells_of({CellColor::Blue, CellColor::Green, CellColor::Yellow, CellColor::Orange, CellColor::Red, CellColor::Maroon});
  };
  r.add("lemma1", Relation::AtLeast, detail::q(six(L.total)), detail::q(L.k * gamma_y.value * L.nz));
  for (std::size_t z = 0; z < L.nz; ++z)
    for (std::size_t i = 0; i < L.k; ++i) {
      const auto loc = detail::fiber_name("i", i, "z", z);
      r.add("lemma1" + loc, Relation::AtLeast, detail::q(six(L.iz(i, z))), detail::q(gamma_y.value), loc);
    }
  return r;
}

// b'+g'+y'+o'+r'+p' >= gamma(X) gamma(Z) |V(Y)|, per Z-fiber >= gamma(Z).
inline CheckReport check_lemma2(const ColorLedger& L, const Gamma& gamma_z) {
  detail::require_proven(gamma_z, "gamma(Z)");
  CheckReport r{"lemma2", {}, false};
  const auto six = [](const ColorCounts& c) {
    return c.cells_of({CellColor::Blue, CellColor::Green, CellColor::Yellow, CellColor::Orange, CellColor::Red, CellColor::Pink});
  };
  r.add("lemma2", Relation::AtLeast, detail::q(six(L.total)), detail::q(L.k * gamma_z.value * L.ny));
  for (std::size_t y = 0; y < L.ny; ++y)
    for (std::size_t i = 0; i < L.k; ++i) {
      const auto loc = detail::fiber_name("i", i, "y", y);
      r.add("lemma2" + loc, Relation::AtLeast, detail::q(six(L.iy(i, y))), detail::q(gamma_z.value), loc);
    }
  return r;
}

// b'+r' <= b+g+y+o, the per-X-fiber domination count, its sum over all
// X-fibers, and the total cell count.
inline CheckReport check_lemma3(const ColorLedger& L, const Gamma& gamma_x) {
  detail::require_proven(gamma_x, "gamma(X)");
  CheckReport r{"lemma3", {}, false};
  const std::size_t cells_total = gamma_x.value * L.ny * L.nz;
  const auto eq1 = [](const ColorCounts& c) {
    return c.total_dverts() + c.cells_of({CellColor::Green, CellColor::Yellow, CellColor::Orange, CellColor::Pink, CellColor::Maroon, CellColor::White});
  };
  r.add("lemma3", Relation::AtMost, detail::q(L.total.cells_of({CellColor::Blue, CellColor::Red})),
        detail::q(L.total.total_dverts()));
  for (std::size_t z = 0; z < L.nz; ++z)
    for (std::size_t y = 0; y < L.ny; ++y) {
      const auto loc = detail::fiber_name("y", y, "z", z);
      r.add("x-fiber-domination" + loc, Relation::AtLeast, detail::q(eq1(L.yz(y, z))),
            detail::q(gamma_x.value), loc);
    }
  r.add("x-fiber-sum", Relation::AtLeast, detail::q(eq1(L.total)), detail::q(cells_total));
  r.add("cell-total", Relation::Equal, detail::q(L.total.total_cells()), detail::q(cells_total));
  return r;
}

// Z = P2: the complement (other layer) of a maroon or white cell is blue or
// green, and b'+g' = m'+w'.
inline CheckReport check_p2_complement(const CellColoring& c) {
  if (!c.product().canonical_path() || c.nz() != 2)
    throw Error(ErrorKind::NotApplicable, "complement check needs Z = P2");
  CheckReport r{"p2", {}, false};
  std::size_t bad = 0;
  std::string first;
  for (std::size_t id = 0; id < c.cell_count(); ++id) {
    const CellColor col = c.colors()[id];
    if (col != CellColor::Maroon && col != CellColor::White) continue;
    CellIndex at = c.cell_index(id);
    at.z = 1 - at.z;
    const CellColor other = c.color(at);
    if (other != CellColor::Blue && other != CellColor::Green) {
      if (bad++ == 0) first = to_string(c.cell_index(id));
    }
  }
  r.add("complement-colors", Relation::Equal, detail::q(bad), detail::q(0), first);
  const auto L = count_colors(c);
  r.add("b'+g'=m'+w'", Relation::Equal, detail::q(L.total.cells_of({CellColor::Blue, CellColor::Green})),
        detail::q(L.total.cells_of({CellColor::Maroon, CellColor::White})));
  return r;
}

// O1..O6 along every Z-fiber Z_{i,y} of X □ Y □ P_n, n >= 2. Conditions on
// a flanking cell apply only when that cell exists.
inline CheckReport check_observations(const CellColoring& c) {
  if (!c.product().canonical_path() || c.nz() < 2)
    throw Error(ErrorKind::NotApplicable, "observations need Z = P_n with n >= 2");
  CheckReport r{"obs", {}, false};
  const std::size_t n = c.nz();
  const auto is = [](CellColor col, std::initializer_list<CellColor> set) {
    for (auto s : set)
      if (s == col) return true;
    return false;
  };
  const std::initializer_list<CellColor> with_d = {CellColor::Blue, CellColor::Green, CellColor::Yellow, CellColor::Orange};

  for (Vertex y = 0; y < c.ny(); ++y)
    for (std::size_t i = 0; i < c.k(); ++i) {
      std::vector<CellColor> f(n);
      for (Vertex z = 0; z < n; ++z) f[z] = c.color(i, y, static_cast<Vertex>(z));
      const auto loc = detail::fiber_name("i", i, "y", y);
      std::array<std::size_t, 6> bad{};
      std::array<std::string, 6> where;
      auto flag = [&](int o, std::size_t l) {
        if (bad[o]++ == 0) where[o] = loc + "@z=" + std::to_string(l);
      };
      for (std::size_t l = 0; l + 2 < n; ++l)
        if (f[l] == CellColor::Maroon && f[l + 1] == CellColor::Maroon && f[l + 2] == CellColor::Maroon) flag(0, l);
      if (f[0] == CellColor::Maroon && f[1] == CellColor::Maroon) flag(1, 0);
      if (f[n - 2] == CellColor::Maroon && f[n - 1] == CellColor::Maroon) flag(1, n - 2);
      for (std::size_t l = 0; l + 1 < n; ++l) {
        if (f[l] != CellColor::Maroon || f[l + 1] != CellColor::Maroon) continue;
        const bool left_ok = l == 0 || is(f[l - 1], with_d);
        const bool right_ok = l + 2 >= n || is(f[l + 2], with_d);
        if (!left_ok || !right_ok) flag(2, l);
      }
      for (std::size_t l = 0; l < n; ++l) {
        const bool has_left = l > 0;
        const bool has_right = l + 1 < n;
        auto any_nbr = [&](std::initializer_list<CellColor> set) {
          return (has_left && is(f[l - 1], set)) || (has_right && is(f[l + 1], set));
        };
        auto all_nbr = [&](std::initializer_list<CellColor> set) {
          return (!has_left || is(f[l - 1], set)) && (!has_right || is(f[l + 1], set));
        };
        if (f[l] == CellColor::Maroon && !any_nbr(with_d)) flag(3, l);
        if (is(f[l], {CellColor::Blue, CellColor::Green}) && !all_nbr({CellColor::Maroon, CellColor::White})) flag(4, l);
        if (is(f[l], {CellColor::Yellow, CellColor::Orange}) &&
            (!any_nbr({CellColor::Yellow, CellColor::Orange}) || any_nbr({CellColor::Red, CellColor::Pink})))
          flag(5, l);
      }
      for (int o = 0; o < 6; ++o)
        r.add("O" + std::to_string(o + 1) + loc, Relation::Equal, detail::q(bad[o]), detail::q(0),
              where[o].empty() ? loc : where[o]);
    }
  return r;
}

// 2(b'+g') + y' + o' >= m' on every Z-fiber Z_{i,y}. Applied for every n;
// violations when n is not a multiple of 3 are findings, not defects.
inline CheckReport check_fiber_maroon(const ColorLedger& L) {
  if (!L.canonical_path) throw Error(ErrorKind::NotApplicable, "fiber maroon check needs Z = P_n");
  CheckReport r{"fiber-maroon", {}, L.nz % 3 != 0};
  for (std::size_t y = 0; y < L.ny; ++y)
    for (std::size_t i = 0; i < L.k; ++i) {
      const auto& f = L.iy(i, y);
      const auto loc = detail::fiber_name("i", i, "y", y);
      r.add("fiber-maroon" + loc, Relation::AtLeast,
            detail::q(2 * f.cells_of({CellColor::Blue, CellColor::Green}) + f.cells_of({CellColor::Yellow, CellColor::Orange})),
            detail::q(f.cell(CellColor::Maroon)), loc);
    }
  return r;
}

// Coefficient bounding m' by gamma(X □ Y □ P_n): 2 for n = 3k, 2k/(k+1)
// for n = 3k+1, (2k+1)/(k+1) for n = 3k+2.
inline Rational maroon_bound_factor(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "path length must be positive");
  const std::size_t k = n / 3;
  switch (n % 3) {
    case 0: return Rational(2);
    case 1: return Rational(Integer(2 * k), Integer(k + 1));
    default: return Rational(Integer(2 * k + 1), Integer(k + 1));
  }
}

// c_n with gamma(X □ Y □ P_n) >= c_n gamma(P_n) gamma(X) gamma(Y).
inline Rational cn_coefficient(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "path length must be positive");
  const std::size_t k = n / 3;
  switch (n % 3) {
    case 0: return Rational(Integer(3), Integer(4));
    case 1: return Rational(Integer(3 * k + 1), Integer(4 * k + 2));
    default: return Rational(Integer(3 * k + 2), Integer(4 * k + 3));
  }
}

inline CheckReport check_main_lemma(const ColorLedger& L, const Gamma& gamma_product, std::size_t n) {
  detail::require_proven(gamma_product, "gamma(X □ Y □ P_n)");
  if (!L.canonical_path || L.nz != n)
    throw Error(ErrorKind::NotApplicable, "main lemma needs Z = P_n with n = " + std::to_string(n));
  CheckReport r{"main-lemma", {}, false};
  r.add("m'<=factor*gamma", Relation::AtMost, detail::q(L.total.cell(CellColor::Maroon)),
        maroon_bound_factor(n) * detail::q(gamma_product.value));
  return r;
}

inline CheckReport check_theorem_bound(const Gamma& gamma_product, const Gamma& gamma_x,
                                       const Gamma& gamma_y, std::size_t n) {
  detail::require_proven(gamma_product, "gamma(X □ Y □ P_n)");
  detail::require_proven(gamma_x, "gamma(X)");
  detail::require_proven(gamma_y, "gamma(Y)");
  CheckReport r{"theorem", {}, false};
  r.add("theorem[n=" + std::to_string(n) + "]", Relation::AtLeast, detail::q(gamma_product.value),
        cn_coefficient(n) * detail::q(gamma_path(n) * gamma_x.value * gamma_y.value));
  return r;
}

// b+g+y+o+g'+y'+o'+m' >= n gamma(X) gamma(Y).
inline CheckReport check_combined_inequality(const ColorLedger& L, const Gamma& gamma_x,
                                             const Gamma& gamma_y, std::size_t n) {
  detail::require_proven(gamma_x, "gamma(X)");
  detail::require_proven(gamma_y, "gamma(Y)");
  if (L.nz != n)
    throw Error(ErrorKind::NotApplicable, "ledger has |V(Z)| = " + std::to_string(L.nz) +
                                              ", expected " + std::to_string(n));
  CheckReport r{"combined", {}, false};
  r.add("combined", Relation::AtLeast,
        detail::q(L.total.total_dverts() + L.total.cells_of({CellColor::Green, CellColor::Yellow, CellColor::Orange, CellColor::Maroon})),
        detail::q(n * gamma_x.value * gamma_y.value));
  return r;
}

}  // namespace domcells
