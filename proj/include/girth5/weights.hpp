// Exact-rational weight calculus: the s function and epsilon, face weights,
// the gen/surf functions with their inequality checker, the cyl constraint
// system materialized as a minimal fixpoint table, and eta.
#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "girth5/rational.hpp"

namespace girth5 {

inline Rational epsilon_value() { return Rational(2, 4113); }

inline Rational s_value(long long l) {
  if (l < 5) throw std::domain_error("s(l) requires l >= 5");
  switch (l) {
    case 5: return Rational(4, 4113);
    case 6: return Rational(72, 4113);
    case 7: return Rational(540, 4113);
    case 8: return Rational(2184, 4113);
    default: return Rational(l - 8);
  }
}

// ---------------------------------------------------------------- gen / surf

struct SurfParams {
  long long g = 0, t = 0, t0 = 0, t1 = 0;
};

inline void check_surf_params(const SurfParams& p) {
  if (p.g < 0 || p.t < 0 || p.t0 < 0 || p.t1 < 0 || p.t < p.t0 + p.t1)
    throw std::domain_error("surf params require g,t,t0,t1 >= 0 and t >= t0+t1");
}

inline Rational gen_value(const SurfParams& p) {
  check_surf_params(p);
  return Rational(120 * p.g + 48 * p.t - 4 * p.t1 - 5 * p.t0 - 120);
}

inline Rational surf_value(const SurfParams& p) {
  check_surf_params(p);
  if (p.g == 0 && p.t == 2 && p.t0 + p.t1 == 2)
    return Rational(8 - 4 * p.t1 - 5 * p.t0);
  if (p.g == 0 && p.t <= 2 && p.t0 + p.t1 < 2)
    return Rational(6 * p.t - 4 * p.t1 - 5 * p.t0 - 6);
  return gen_value(p);
}

struct IneqCase {
  std::string clause;
  std::vector<long long> params;
  Rational lhs, rhs;
  bool ok = false;
};

struct IneqReport {
  std::vector<IneqCase> failures;
  long long cases_checked = 0;
  bool ok() const { return failures.empty(); }
};

// Verifies the four monotonicity/additivity inequalities of surf on the grid
// g <= gmax, t <= tmax (all valid t0,t1 splits).  With drop_hypothesis_a the
// side condition of clause (a) is ignored; that variant is expected to fail
// and serves as a negative control.
inline IneqReport check_surfineq(long long gmax, long long tmax,
                                 bool drop_hypothesis_a = false) {
  IneqReport rep;
  auto record = [&](const std::string& clause, std::vector<long long> params,
                    const Rational& lhs, const Rational& rhs, bool ok) {
    rep.cases_checked++;
    if (!ok) rep.failures.push_back({clause, std::move(params), lhs, rhs, false});
  };

  std::vector<SurfParams> all;
  for (long long g = 0; g <= gmax; g++)
    for (long long t = 0; t <= tmax; t++)
      for (long long t0 = 0; t0 <= t; t0++)
        for (long long t1 = 0; t0 + t1 <= t; t1++)
          all.push_back({g, t, t0, t1});

  for (const auto& p : all) {
    // (a) if t>=2 and t0'<=t0, t1'<=t1, t0'+t1'>=t0+t1-2 then
    //     surf(g,t-1,t0',t1') < surf(g,t,t0,t1), under the hypothesis that
    //     g=0 and t<=2 imply t0+t1<t.
    if (p.t >= 2) {
      bool hyp = !(p.g == 0 && p.t <= 2) || (p.t0 + p.t1 < p.t);
      if (hyp || drop_hypothesis_a) {
        for (long long u0 = 0; u0 <= p.t0; u0++)
          for (long long u1 = 0; u1 <= p.t1; u1++) {
            if (u0 + u1 < p.t0 + p.t1 - 2) continue;
            if (u0 + u1 > p.t - 1) continue;
            Rational lhs = surf_value({p.g, p.t - 1, u0, u1});
            Rational rhs = surf_value(p);
            record("a", {p.g, p.t, p.t0, p.t1, u0, u1}, lhs, rhs, lhs < rhs);
          }
      }
    }
    // (b) g'<g and (g'>0 or t>=2) imply surf(g',..) <= surf(g,..)-120(g-g')+32
    for (long long gp = 0; gp < p.g; gp++) {
      if (!(gp > 0 || p.t >= 2)) continue;
      Rational lhs = surf_value({gp, p.t, p.t0, p.t1});
      Rational rhs = surf_value(p) - Rational(120 * (p.g - gp)) + Rational(32);
      record("b", {p.g, p.t, p.t0, p.t1, gp}, lhs, rhs, lhs <= rhs);
    }
    // (c) additive splits
    for (long long gp = 0; gp <= p.g; gp++)
      for (long long tp = 0; tp <= p.t; tp++)
        for (long long u0 = 0; u0 <= p.t0; u0++)
          for (long long u1 = 0; u1 <= p.t1; u1++) {
            long long gpp = p.g - gp, tpp = p.t - tp;
            long long v0 = p.t0 - u0, v1 = p.t1 - u1;
            if (u0 + u1 > tp || v0 + v1 > tpp) continue;
            if (!(gpp > 0 || tpp >= 1)) continue;
            if (!(gp > 0 || tp >= 2)) continue;
            long long delta = (gpp == 0 && tpp == 1) ? 16 : 56;
            Rational lhs = surf_value({gp, tp, u0, u1}) +
                           surf_value({gpp, tpp, v0, v1});
            Rational rhs = surf_value(p) - Rational(delta);
            record("c", {p.g, p.t, p.t0, p.t1, gp, tp, u0, u1}, lhs, rhs,
                   lhs <= rhs);
          }
    // (d) g>=2 implies surf(g-2,..) <= surf(g,..)-124
    if (p.g >= 2) {
      Rational lhs = surf_value({p.g - 2, p.t, p.t0, p.t1});
      Rational rhs = surf_value(p) - Rational(124);
      record("d", {p.g, p.t, p.t0, p.t1}, lhs, rhs, lhs <= rhs);
    }
  }
  return rep;
}

// Grid sanity: surf never exceeds gen+32, and equals gen whenever g>0 or t>3.
inline IneqReport check_surf_vs_gen(long long gmax, long long tmax) {
  IneqReport rep;
  for (long long g = 0; g <= gmax; g++)
    for (long long t = 0; t <= tmax; t++)
      for (long long t0 = 0; t0 <= t; t0++)
        for (long long t1 = 0; t0 + t1 <= t; t1++) {
          SurfParams p{g, t, t0, t1};
          Rational sv = surf_value(p), gv = gen_value(p);
          bool ok = sv <= gv + Rational(32) && (!(g > 0 || t > 3) || sv == gv);
          rep.cases_checked++;
          if (!ok) rep.failures.push_back({"surf-vs-gen", {g, t, t0, t1}, sv, gv, false});
        }
  return rep;
}

// -------------------------------------------------------------------- cyl

// Minimal pointwise solution of the eleven cyl constraints on the grid
// 0..xmax.  cyl(0,0)=0 is an equality and the point (0,0) is exempted from
// the lower-bound constraints (constraint 6 alone would force
// cyl(0,0) >= s(11) = 3 there, contradicting the pinned value).
struct CylTable {
  long long xmax = 12;
  std::vector<std::vector<Rational>> grid;  // grid[x][y]

  const Rational& at(long long x, long long y) const {
    if (x < 0 || y < 0 || x > xmax || y > xmax)
      throw std::domain_error("cyl table index out of range");
    return grid[x][y];
  }
};

namespace detail {

// Lower bounds imposed on cyl(x,y) by the constraint list, given current
// table values.  Monotone in the table, so Kleene iteration from zero
// reaches the least solution.
inline Rational cyl_bound(const CylTable& T, long long x, long long y) {
  Rational b(0);
  auto up = [&](const Rational& r) { if (r > b) b = r; };
  // constraint 3: x>0 -> cyl(x,y) >= cyl(0,y)+x+13 (and symmetrically)
  if (x > 0) up(T.at(0, y) + Rational(x + 13));
  if (y > 0) up(T.at(x, 0) + Rational(y + 13));
  // constraint 4: x,y>1 -> cyl(x,y) >= cyl(1,x)+cyl(1,y)+19
  if (x > 1 && y > 1) up(T.at(1, x) + T.at(1, y) + Rational(19));
  // constraint 5: y'<y -> cyl(x,y) >= cyl(x,y')+s(y-y'+8) (and symmetrically)
  for (long long yp = 0; yp < y; yp++) up(T.at(x, yp) + s_value(y - yp + 8));
  for (long long xp = 0; xp < x; xp++) up(T.at(xp, y) + s_value(x - xp + 8));
  // constraint 6
  up(s_value(x + y + 11));
  // constraint 7: x>=4 -> cyl(x,y) >= 886 (applies under symmetry too)
  if (x >= 4 || y >= 4) up(Rational(886));
  // constraint 8 (2 cyl(6,7) <= cyl(7,7)) read as a lower bound on cyl(7,7)
  if (x == 7 && y == 7) up(T.at(6, 7) * Rational(2));
  // constraint 9: x<=4 and 5<=y<=6
  auto c9 = [&](long long a, long long bb) {
    if (a <= 4 && bb >= 5 && bb <= 6)
      up((Rational(2, 3) + Rational(52) * epsilon_value()) * Rational(a + bb) +
         Rational(20) * (Rational(40) + Rational(5) * T.at(4, 4) / s_value(5) +
                         Rational(692)) / Rational(3));
  };
  c9(x, y);
  c9(y, x);
  // constraint 10: x<=7 -> cyl(x,7) >= 3/2(x+7)+20(60+5cyl(6,6)/s(5)+692)/3
  auto c10 = [&](long long a, long long bb) {
    if (bb == 7 && a <= 7)
      up(Rational(3, 2) * Rational(a + 7) +
         Rational(20) * (Rational(60) + Rational(5) * T.at(6, 6) / s_value(5) +
                         Rational(692)) / Rational(3));
  };
  c10(x, y);
  c10(y, x);
  // constraint 11: x,y>=5 -> cyl(x,y) >= cyl(4,x)+cyl(4,y)+cyl(4,4)
  if (x >= 5 && y >= 5) up(T.at(4, x) + T.at(4, y) + T.at(4, 4));
  return b;
}

}  // namespace detail

inline CylTable build_cyl_table(long long xmax = 12) {
  if (xmax < 7) throw std::domain_error("cyl table requires xmax >= 7");
  CylTable T;
  T.xmax = xmax;
  T.grid.assign(xmax + 1, std::vector<Rational>(xmax + 1, Rational(0)));
  const int cap = 10000;
  for (int pass = 0; pass < cap; pass++) {
    bool changed = false;
    for (long long x = 0; x <= xmax; x++)
      for (long long y = x; y <= xmax; y++) {
        if (x == 0 && y == 0) continue;  // pinned equality cyl(0,0)=0
        Rational b = detail::cyl_bound(T, x, y);
        if (b > T.grid[x][y]) {
          T.grid[x][y] = b;
          T.grid[y][x] = b;
          changed = true;
        }
      }
    if (!changed) return T;  // certified: one full non-improving pass
  }
  throw std::runtime_error("cyl fixpoint did not converge");
}

// Re-verifies every constraint against a finished table; independent of the
// fixpoint construction above (used on the golden file too).
inline IneqReport verify_cyl_table(const CylTable& T) {
  IneqReport rep;
  auto record = [&](const std::string& clause, std::vector<long long> params,
                    const Rational& lhs, const Rational& rhs, bool ok) {
    rep.cases_checked++;
    if (!ok) rep.failures.push_back({clause, std::move(params), lhs, rhs, false});
  };
  record("cyl00", {0, 0}, T.at(0, 0), Rational(0), T.at(0, 0) == Rational(0));
  for (long long x = 0; x <= T.xmax; x++)
    for (long long y = 0; y <= T.xmax; y++) {
      record("symmetric", {x, y}, T.at(x, y), T.at(y, x), T.at(x, y) == T.at(y, x));
      if (x == 0 && y == 0) continue;
      if (x > 0)
        record("c3", {x, y}, T.at(x, y), T.at(0, y) + Rational(x + 13),
               T.at(x, y) >= T.at(0, y) + Rational(x + 13));
      if (x > 1 && y > 1)
        record("c4", {x, y}, T.at(x, y), T.at(1, x) + T.at(1, y) + Rational(19),
               T.at(x, y) >= T.at(1, x) + T.at(1, y) + Rational(19));
      for (long long yp = 0; yp < y; yp++)
        record("c5", {x, y, yp}, T.at(x, y), T.at(x, yp) + s_value(y - yp + 8),
               T.at(x, y) >= T.at(x, yp) + s_value(y - yp + 8));
      record("c6", {x, y}, T.at(x, y), s_value(x + y + 11),
             T.at(x, y) >= s_value(x + y + 11));
      if (x >= 4)
        record("c7", {x, y}, T.at(x, y), Rational(886), T.at(x, y) >= Rational(886));
      if (x <= 4 && y >= 5 && y <= 6) {
        Rational rhs =
            (Rational(2, 3) + Rational(52) * epsilon_value()) * Rational(x + y) +
            Rational(20) * (Rational(40) + Rational(5) * T.at(4, 4) / s_value(5) +
                            Rational(692)) / Rational(3);
        record("c9", {x, y}, T.at(x, y), rhs, T.at(x, y) >= rhs);
      }
      if (x <= 7 && y == 7) {
        Rational rhs = Rational(3, 2) * Rational(x + 7) +
                       Rational(20) * (Rational(60) +
                                       Rational(5) * T.at(6, 6) / s_value(5) +
                                       Rational(692)) / Rational(3);
        record("c10", {x, y}, T.at(x, y), rhs, T.at(x, y) >= rhs);
      }
      if (x >= 5 && y >= 5)
        record("c11", {x, y}, T.at(x, y), T.at(4, x) + T.at(4, y) + T.at(4, 4),
               T.at(x, y) >= T.at(4, x) + T.at(4, y) + T.at(4, 4));
      // monotone in each argument (consequence of c5; asserted on the grid)
      if (y > 0)
        record("monotone", {x, y}, T.at(x, y), T.at(x, y - 1),
               T.at(x, y) >= T.at(x, y - 1));
    }
  record("c8", {6, 7}, T.at(6, 7) * Rational(2), T.at(7, 7),
         T.at(6, 7) * Rational(2) <= T.at(7, 7));
  return rep;
}

inline Rational eta_value(const CylTable& T) {
  return Rational(1867) + Rational(67) * T.at(7, 7) / s_value(5);
}

// ----------------------------------------------------- s-function properties

// Super/sub-additivity s(x)+s(y) <= s(x+y) <= s(x)+y, monotonicity, and the
// gap s(y)-s(x) > 5 s(5) for y > x >= 5, on the grid up to lmax.  The
// optional override lets a test inject a wrong value as a negative control.
inline IneqReport check_s_properties(
    long long lmax = 200,
    const std::function<Rational(long long)>& s = s_value) {
  IneqReport rep;
  auto record = [&](const std::string& clause, std::vector<long long> params,
                    const Rational& lhs, const Rational& rhs, bool ok) {
    rep.cases_checked++;
    if (!ok) rep.failures.push_back({clause, std::move(params), lhs, rhs, false});
  };
  for (long long x = 5; x <= lmax; x++) {
    if (x > 5)
      record("nondecreasing", {x}, s(x - 1), s(x), s(x - 1) <= s(x));
    for (long long y = 5; x + y <= lmax; y++) {
      record("superadditive", {x, y}, s(x) + s(y), s(x + y), s(x) + s(y) <= s(x + y));
      record("subadditive", {x, y}, s(x + y), s(x) + Rational(y),
             s(x + y) <= s(x) + Rational(y));
    }
    for (long long y = x + 1; y <= lmax; y++)
      record("gap", {x, y}, s(y) - s(x), Rational(5) * s_value(5),
             s(y) - s(x) > Rational(5) * s_value(5));
  }
  return rep;
}

// ------------------------------------------------------------- contributions

enum class ExceptionalClass { none, E0, E1, E2, E3, E4, E5 };

inline bool very_exceptional(ExceptionalClass c) {
  return c == ExceptionalClass::E1 || c == ExceptionalClass::E2 ||
         c == ExceptionalClass::E3;
}

inline std::string exceptional_name(ExceptionalClass c) {
  switch (c) {
    case ExceptionalClass::E0: return "E0";
    case ExceptionalClass::E1: return "E1";
    case ExceptionalClass::E2: return "E2";
    case ExceptionalClass::E3: return "E3";
    case ExceptionalClass::E4: return "E4";
    case ExceptionalClass::E5: return "E5";
    default: return "none";
  }
}

// Contribution of an omnipresent face.  multiple_nonring: at least two
// components differ from their rings; otherwise cls classifies the unique
// non-ring component (ExceptionalClass::none when it is not exceptional).
inline ExtRational omnipresent_contribution(bool multiple_nonring,
                                            ExceptionalClass cls,
                                            const Rational& el) {
  if (multiple_nonring) return ExtRational::of(Rational(1));
  if (cls == ExceptionalClass::E0 || very_exceptional(cls))
    return ExtRational::neg_inf();
  if (cls == ExceptionalClass::E4 || cls == ExceptionalClass::E5)
    return ExtRational::of(Rational(5) - el - Rational(5) * s_value(5));
  return ExtRational::of(Rational(5) - el + Rational(5) * s_value(5));
}

}  // namespace girth5
