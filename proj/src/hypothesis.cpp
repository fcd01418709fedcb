#include "rigidpack/hypothesis.hpp"

#include <cstdint>
#include <functional>
#include <sstream>

namespace rigidpack {

namespace {

std::string rat(const Rational& r) {
  std::ostringstream out;
  out << r.numerator();
  if (r.denominator() != 1) out << '/' << r.denominator();
  return out.str();
}

// Induced counts, function values and singleton sums for every vertex subset.
struct Tables {
  int n;
  std::uint64_t full;
  std::vector<Count> e;
  std::vector<Count> f;
  std::vector<Count> sum;

  Tables(const MultiGraph& g, const SetFunc& func, const std::string& tag) : n(g.n()) {
    if (n > kHypothesisMaxN) {
      throw BudgetExceeded(tag + ": exhaustive sweep needs n <= " +
                           std::to_string(kHypothesisMaxN) + ", got " + std::to_string(n) +
                           " (use the sampling oracle instead)");
    }
    full = (std::uint64_t{1} << n) - 1;
    e = all_induced_counts(g);
    f.assign(full + 1, 0);
    sum.assign(full + 1, 0);
    for (std::uint64_t s = 1; s <= full; ++s) {
      f[s] = func.eval(VertexSet(s));
      const int low = std::countr_zero(s);
      sum[s] = sum[s & (s - 1)] + func.at(low);
    }
  }

  Count boundary(std::uint64_t a, std::uint64_t b) const {
    const std::uint64_t c = full & ~(a | b);
    return e[a | c] - e[a] - e[c];
  }
  bool above_bound(std::uint64_t u) const { return e[u] > sum[u] - f[u]; }
};

using PairCheck = std::function<bool(std::uint64_t a, std::uint64_t b, Count d, std::string&)>;

// Visits U in increasing mask order (U = V only when allow_full) and each split A u B = U
// with A increasing; stops at the first failing pair.
bool sweep(const Tables& t, bool allow_full, const std::function<bool(std::uint64_t)>& qualify,
           const PairCheck& check, HypothesisReport& report) {
  const std::uint64_t last = allow_full ? t.full : t.full - 1;
  for (std::uint64_t u = 0;; ++u) {
    if (qualify(u)) {
      std::uint64_t a = 0;
      do {
        std::string detail;
        if (!check(a, u ^ a, t.boundary(a, u ^ a), detail)) {
          report.holds = false;
          report.pair = std::make_pair(VertexSet(a), VertexSet(u ^ a));
          report.detail = "A = " + VertexSet(a).to_string() + ", B = " +
                          VertexSet(u ^ a).to_string() + ": " + detail;
          return false;
        }
        a = (a - u) & u;
      } while (a != 0);
    }
    if (u == last) break;
  }
  return true;
}

bool degree_clause(const MultiGraph& g, const std::function<Rational(VertexId)>& need,
                   HypothesisReport& report) {
  for (VertexId v = 0; v < g.n(); ++v) {
    const Rational rhs = need(v);
    if (Rational(g.degree(v)) < rhs) {
      report.holds = false;
      report.vertex = v;
      report.detail = "degree of vertex " + std::to_string(v) + " is " +
                      std::to_string(g.degree(v)) + " < " + rat(rhs);
      return false;
    }
  }
  return true;
}

std::string compare(Count lhs, const Rational& rhs) {
  return "d_{G-B}(A) = " + std::to_string(lhs) + " < " + rat(rhs);
}

}  // namespace

SizeFunction SizeFunction::constant(int n, Rational value) {
  return SizeFunction{std::vector<Rational>(static_cast<std::size_t>(n) + 1, value)};
}

HypothesisReport check_necessary_rigid(const MultiGraph& g, const SetFunc& ell) {
  HypothesisReport report;
  report.tag = "necessary_rigid";
  const Tables t(g, ell, report.tag);
  const Count whole = t.f[t.full];
  sweep(
      t, true, [](std::uint64_t) { return true; },
      [&](std::uint64_t a, std::uint64_t b, Count d, std::string& detail) {
        const Count rhs = t.f[a | b] - t.sum[b] + t.f[t.full & ~a] - whole;
        if (d >= rhs) return true;
        detail = compare(d, rhs);
        return false;
      },
      report);
  return report;
}

HypothesisReport check_cor32(const MultiGraph& g, Count k) {
  HypothesisReport report;
  report.tag = "cor32";
  if (g.n() < 3) {
    report.holds = false;
    report.detail = "order is below three";
    return report;
  }
  const Cut cut = min_edge_cut(g);
  if (cut.value < k) {
    report.holds = false;
    report.set = cut.side;
    report.detail = "edge connectivity " + std::to_string(cut.value) + " < " + std::to_string(k);
    return report;
  }
  const Cut ess = min_essential_cut(g);
  if (ess.value != kUnbounded && ess.value < 2 * k - 1) {
    report.holds = false;
    report.set = ess.side;
    report.detail = "essential edge connectivity " + std::to_string(ess.value) + " < " +
                    std::to_string(2 * k - 1);
    return report;
  }
  for (VertexId v = 0; v < g.n(); ++v) {
    const Cut minus = min_edge_cut(g, VertexSet::single(v));
    if (minus.value < k - 1) {
      report.holds = false;
      report.vertex = v;
      report.set = minus.side;
      report.detail = "G - " + std::to_string(v) + " has edge connectivity " +
                      std::to_string(minus.value) + " < " + std::to_string(k - 1);
      return report;
    }
  }
  return report;
}

HypothesisReport check_sufficient_rigid(const MultiGraph& g, const SetFunc& ell,
                                        Count excluded) {
  HypothesisReport report;
  report.tag = "sufficient_rigid";
  const Tables t(g, ell, report.tag);
  if (excluded > t.f[t.full]) {
    report.holds = false;
    report.detail = "excluded edge set has " + std::to_string(excluded) + " > ell(V) = " +
                    std::to_string(t.f[t.full]) + " edges";
    return report;
  }
  if (!degree_clause(g, [&](VertexId v) { return Rational(2 * ell.at(v)); }, report)) {
    return report;
  }
  sweep(
      t, false, [&](std::uint64_t u) { return t.above_bound(u); },
      [&](std::uint64_t a, std::uint64_t b, Count d, std::string& detail) {
        const Count rhs = 2 * t.f[a | b] - t.sum[b];
        if (d >= rhs) return true;
        detail = compare(d, rhs);
        return false;
      },
      report);
  return report;
}

HypothesisReport check_pack61(const MultiGraph& g, const SetFunc& l, const SetFunc& ell,
                              Count excluded) {
  HypothesisReport report;
  report.tag = "pack61";
  const Tables t(g, ell, report.tag);
  const Tables tl(g, l, report.tag);
  const Count cap = tl.f[tl.full] + t.f[t.full];
  if (excluded > cap) {
    report.holds = false;
    report.detail = "excluded edge set has " + std::to_string(excluded) +
                    " > l(V) + ell(V) = " + std::to_string(cap) + " edges";
    return report;
  }
  if (!degree_clause(g, [&](VertexId v) { return Rational(2 * ell.at(v) + 2 * l.at(v)); },
                     report)) {
    return report;
  }
  sweep(
      t, false, [&](std::uint64_t u) { return t.above_bound(u); },
      [&](std::uint64_t a, std::uint64_t b, Count d, std::string& detail) {
        const Count rhs = 2 * t.f[a | b] - t.sum[b] + (a != 0 ? 2 * tl.f[a | b] : 0);
        if (d >= rhs) return true;
        detail = compare(d, rhs);
        return false;
      },
      report);
  return report;
}

HypothesisReport check_pack63(const MultiGraph& g, const SetFunc& l, const SetFunc& ell,
                              const SizeFunction& phi, Count excluded) {
  HypothesisReport report;
  report.tag = "pack63";
  const Tables t(g, ell, report.tag);
  const Tables tl(g, l, report.tag);
  const int n = g.n();
  if (static_cast<int>(phi.by_size.size()) != n + 1) {
    throw InvalidArgument("phi needs one value per set size 0.." + std::to_string(n));
  }
  for (int s = 1; s <= n; ++s) {
    if (phi.by_size[s] < 0 || phi.by_size[s] > 1) {
      throw InvalidArgument("phi must lie in [0, 1]");
    }
    if (s > 1 && phi.by_size[s] > phi.by_size[s - 1]) {
      throw InvalidArgument("phi must be nonincreasing");
    }
  }
  const Count cap = tl.f[tl.full] + t.f[t.full];
  if (excluded > cap) {
    report.holds = false;
    report.detail = "|M| = " + std::to_string(excluded) + " > l(V) + ell(V) = " +
                    std::to_string(cap);
    return report;
  }
  for (std::uint64_t x = 1; x <= t.full; ++x) {
    if (t.above_bound(x) && (!report.lambda || std::popcount(x) < *report.lambda)) {
      report.lambda = std::popcount(x);
    }
  }
  if (!degree_clause(g, [&](VertexId v) { return Rational(2 * ell.at(v) + 2 * l.at(v)); },
                     report)) {
    return report;
  }
  const Count eps_big = 2 * cap - 2 * excluded;
  sweep(
      t, false, [&](std::uint64_t u) { return t.above_bound(u); },
      [&](std::uint64_t a, std::uint64_t b, Count d, std::string& detail) {
        const std::uint64_t u = a | b;
        const Count eps = std::popcount(u) == n - 1 ? eps_big : 0;
        Rational factor;
        if (b == 0) {
          factor = 2;
        } else if (a == 0) {
          // e(U) > bound(U) makes U a candidate for lambda, so lambda is set here.
          factor = phi(VertexSet(u)) / Rational(*report.lambda);
        } else {
          factor = 2 - phi(VertexSet(u));
        }
        const Rational rhs = Rational(2 * t.f[u] - t.sum[b]) + Rational(tl.f[u]) * factor;
        if (Rational(d + eps) >= rhs) return true;
        detail = "d_{G-B}(A) + eps = " + std::to_string(d + eps) + " < " + rat(rhs);
        return false;
      },
      report);
  return report;
}

HypothesisReport check_pack81(const MultiGraph& g, const SetFunc& l, const SetFunc& ell,
                              Rational k, const std::vector<Count>& rho) {
  HypothesisReport report;
  report.tag = "pack81";
  if (k <= 2) throw InvalidArgument("pack81 needs k > 2");
  if (static_cast<int>(rho.size()) != g.n()) {
    throw InvalidArgument("rho needs one value per vertex");
  }
  for (VertexId v = 0; v < g.n(); ++v) {
    if (rho[v] < 0 || rho[v] > g.degree(v)) {
      throw InvalidArgument("rho must satisfy 0 <= rho(v) <= d(v), fails at vertex " +
                            std::to_string(v));
    }
  }
  const Tables t(g, ell, report.tag);
  const Tables tl(g, l, report.tag);
  const Rational slack = k / (k - 2) * Rational(tl.f[tl.full] + t.f[t.full]);
  std::vector<Count> rho_sum(t.full + 1, 0);
  for (std::uint64_t s = 1; s <= t.full; ++s) {
    rho_sum[s] = rho_sum[s & (s - 1)] + rho[std::countr_zero(s)];
    if (Rational(t.e[s]) > Rational(rho_sum[s]) + slack) {
      report.holds = false;
      report.set = VertexSet(s);
      report.detail = "S = " + VertexSet(s).to_string() + ": e(S) = " +
                      std::to_string(t.e[s]) + " > " + rat(Rational(rho_sum[s]) + slack);
      return report;
    }
  }
  if (!degree_clause(g, [&](VertexId v) { return k * Rational(ell.at(v) + l.at(v)); },
                     report)) {
    return report;
  }
  sweep(
      t, false, [&](std::uint64_t u) { return t.above_bound(u); },
      [&](std::uint64_t a, std::uint64_t b, Count d, std::string& detail) {
        const std::uint64_t u = a | b;
        const Rational rhs = k * Rational(t.f[u]) - k * Rational(t.sum[b], 2) +
                             (a != 0 ? k * Rational(tl.f[u]) : Rational(0));
        if (Rational(d) >= rhs) return true;
        detail = compare(d, rhs);
        return false;
      },
      report);
  return report;
}

HypothesisReport check_weakly_connected(const MultiGraph& g, const SetFunc& ell,
                                        const SetFunc& l) {
  HypothesisReport report;
  report.tag = "weakly_connected";
  const Tables t(g, ell, report.tag);
  const Tables tl(g, l, report.tag);
  sweep(
      t, false, [](std::uint64_t u) { return u != 0; },
      [&](std::uint64_t a, std::uint64_t b, Count d, std::string& detail) {
        if (a == 0) return true;
        const Count rhs = tl.f[a | b] - t.sum[b];
        if (d >= rhs) return true;
        detail = compare(d, rhs);
        return false;
      },
      report);
  return report;
}

}  // namespace rigidpack
