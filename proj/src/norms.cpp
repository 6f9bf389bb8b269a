#include "schreier/norms.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>

#include "schreier/config.hpp"
#include "schreier/simplex.hpp"

namespace schreier {

namespace {

// Weight table for one branch-and-bound evaluation: positive weights at
// ascending indices, suffix masses, and per-suffix single-segment capture
// bounds used by the capacity prune.
struct SearchContext {
  std::vector<long long> values;
  std::vector<Rational> weights;
  std::vector<Rational> suffix;       // suffix mass
  std::vector<Rational> segment_ub;   // upper bound for one predecessor segment
  bool has_segment_ub = false;
  std::uint64_t nodes = 0;

  explicit SearchContext(const RationalVector& x) {
    for (const auto& [i, v] : x.entries()) {
      values.push_back(i);
      weights.push_back(v < 0 ? -v : v);
    }
    suffix.assign(values.size() + 1, Rational(0));
    for (std::size_t i = values.size(); i-- > 0;)
      suffix[i] = suffix[i + 1] + weights[i];
  }

  // pred_level 0: exact best single weight in the tail.
  // pred_level 1: bound min(value, tail length) * max tail weight.
  void fill_segment_bounds(int pred_level) {
    const std::size_t n = values.size();
    segment_ub.assign(n + 1, Rational(0));
    Rational wmax(0);
    for (std::size_t i = n; i-- > 0;) {
      wmax = std::max(wmax, weights[i]);
      if (pred_level == 0) {
        segment_ub[i] = wmax;
      } else {
        Rational cap = Rational(std::min<long long>(values[i],
                                                    static_cast<long long>(n - i))) *
                       wmax;
        segment_ub[i] = std::max(segment_ub[i + 1], std::min(cap, suffix[i]));
      }
    }
    has_segment_ub = true;
  }

  void count_node() {
    if (++nodes > caps().dfs_node_budget)
      throw ResourceError("norm search exceeded the node budget");
  }
};

struct FamilySearch {
  SearchContext& ctx;
  std::function<bool(const FiniteSet&)> member;
  const Ordinal* capacity_pred = nullptr;  // enables the segment-budget prune

  Rational best{0};
  std::vector<long long> best_set;
  std::vector<long long> current;

  void run(std::optional<std::size_t> forced_root) {
    for (std::size_t i = 0; i < ctx.values.size(); ++i) {
      if (forced_root && *forced_root != i) continue;
      if (ctx.suffix[i] <= best) {
        if (forced_root) return;
        break;
      }
      current.assign(1, ctx.values[i]);
      FiniteSet root{ctx.values[i]};
      if (!member(root)) continue;
      expand(i, ctx.weights[i]);
    }
  }

  void expand(std::size_t idx, Rational sum) {
    ctx.count_node();
    if (sum > best) {
      best = sum;
      best_set = current;
    }
    if (idx + 1 >= ctx.values.size()) return;
    if (capacity_pred && ctx.has_segment_ub) {
      FiniteSet cur{std::vector<long long>(current)};
      long long segments_left = current.front() - tau(cur, *capacity_pred) + 1;
      if (segments_left <= 0) return;
      if (sum + ctx.segment_ub[idx + 1] * segments_left <= best) return;
    }
    for (std::size_t j = idx + 1; j < ctx.values.size(); ++j) {
      if (sum + ctx.suffix[j] <= best) break;
      current.push_back(ctx.values[j]);
      FiniteSet candidate{std::vector<long long>(current)};
      if (member(candidate)) expand(j, sum + ctx.weights[j]);
      current.pop_back();
    }
  }
};

// Greedy strip decomposition of supp(x) at level xi; each segment is a
// family member, so the best one is a valid lower bound to seed the search.
std::vector<FiniteSet> strip_seeds(const RationalVector& x, const Ordinal& xi) {
  std::vector<FiniteSet> seeds;
  FiniteSet supp = x.support();
  std::size_t pos = 0;
  while (pos < supp.size()) {
    FiniteSet rest = supp.slice(pos, supp.size() - pos);
    std::size_t lo = 1, hi = rest.size();
    while (lo < hi) {
      std::size_t mid = (lo + hi + 1) / 2;
      if (is_member(rest.slice(0, mid), xi))
        lo = mid;
      else
        hi = mid - 1;
    }
    seeds.push_back(rest.slice(0, lo));
    pos += lo;
  }
  return seeds;
}

NormCertificate search_at_level(const RationalVector& x, const Ordinal& level,
                                const std::vector<FiniteSet>& seeds,
                                std::optional<std::size_t> forced_root) {
  NormCertificate cert;
  cert.value = 0;
  if (x.zero()) return cert;
  if (level.is_zero()) {
    for (const auto& [i, v] : x.entries()) {
      Rational a = v < 0 ? -v : v;
      if (a > cert.value) {
        cert.value = a;
        cert.witness = FiniteSet{i};
      }
    }
    return cert;
  }
  const Ordinal pred = level.predecessor();
  SearchContext ctx(x);
  if (pred.is_zero())
    ctx.fill_segment_bounds(0);
  else if (pred.is_finite() && pred.finite_value() == 1)
    ctx.fill_segment_bounds(1);
  FamilySearch search{ctx, [&level](const FiniteSet& E) { return is_member(E, level); }};
  if (ctx.has_segment_ub) search.capacity_pred = &pred;
  for (const FiniteSet& seed : seeds) {
    if (forced_root && (!seed.empty() && seed.min() != x.support().min())) continue;
    Rational mass = x.mass_on(seed);
    if (mass > search.best) {
      search.best = mass;
      search.best_set.assign(seed.begin(), seed.end());
    }
  }
  search.run(forced_root);
  cert.value = search.best;
  cert.witness = FiniteSet(std::move(search.best_set));
  return cert;
}

}  // namespace

NormCertificate schreier_norm(const RationalVector& x, const Ordinal& xi) {
  NormCertificate cert;
  cert.value = 0;
  if (x.zero()) return cert;
  if (static_cast<int>(x.support_size()) > caps().max_support)
    throw ResourceError("norm: support exceeds cap");
  if (xi.is_zero() || xi.is_successor())
    return search_at_level(x, xi, xi.is_zero() ? std::vector<FiniteSet>{}
                                               : strip_seeds(x, xi),
                           std::nullopt);

  // Limit level: a nonempty member's level is decided by its minimum, so run
  // one search per support element with that element forced as the root.
  std::vector<FiniteSet> seeds = strip_seeds(x, xi);
  NormCertificate best;
  best.value = 0;
  FiniteSet supp = x.support();
  RationalVector rest = x;
  for (std::size_t i = 0; i < supp.size(); ++i) {
    long long v = supp.at(i);
    if (rest.l1_mass() <= best.value) break;
    const Ordinal level = fundamental_sequence(xi, v) + Ordinal::finite(1);
    std::vector<FiniteSet> local_seeds;
    for (const FiniteSet& s : seeds)
      if (s.min() == v) local_seeds.push_back(s);
    NormCertificate cand = search_at_level(rest, level, local_seeds, 0);
    if (cand.value > best.value) best = cand;
    rest.set(v, Rational(0));
  }
  return best;
}

Rational An_seminorm(const RationalVector& x, const Ordinal& xi, long long n) {
  if (n < 1) throw DomainError("An_seminorm: n must be >= 1");
  if (x.zero()) return Rational(0);
  if (static_cast<int>(x.support_size()) > caps().max_support)
    throw ResourceError("norm: support exceeds cap");
  // Seed with the greedy strip decomposition grouped n segments at a time.
  std::vector<FiniteSet> seeds;
  {
    std::vector<FiniteSet> strips = strip_seeds(x, xi);
    FiniteSet group;
    long long used = 0;
    for (const FiniteSet& s : strips) {
      group = group.set_union(s);
      if (++used == n) {
        seeds.push_back(group);
        group = FiniteSet();
        used = 0;
      }
    }
    if (!group.empty()) seeds.push_back(group);
  }
  SearchContext ctx(x);
  FamilySearch search{
      ctx, [&xi, n](const FiniteSet& E) { return is_member_An(E, xi, n); }};
  for (const FiniteSet& seed : seeds) {
    Rational mass = x.mass_on(seed);
    if (mass > search.best) {
      search.best = mass;
      search.best_set.assign(seed.begin(), seed.end());
    }
  }
  search.run(std::nullopt);
  return search.best;
}

NormCertificate family_norm(const RationalVector& x,
                            const std::function<bool(const FiniteSet&)>& member) {
  NormCertificate cert;
  cert.value = 0;
  if (x.zero()) return cert;
  SearchContext ctx(x);
  FamilySearch search{ctx, member};
  search.run(std::nullopt);
  cert.value = search.best;
  cert.witness = FiniteSet(std::move(search.best_set));
  return cert;
}

NormCertificate dual_norm(const RationalVector& xstar, const Ordinal& xi) {
  NormCertificate cert;
  cert.value = 0;
  if (xstar.zero()) return cert;
  if (static_cast<int>(xstar.support_size()) > caps().lp_max_support)
    throw ResourceError("dual norm: support exceeds LP cap");
  const RationalVector w = xstar.abs();
  const FiniteSet supp = w.support();
  const int n = static_cast<int>(supp.size());

  std::vector<Rational> objective;
  for (const auto& [i, v] : w.entries()) objective.push_back(v);

  std::vector<FiniteSet> constraint_sets;
  std::vector<std::vector<Rational>> A;
  std::vector<Rational> b;
  auto add_constraint = [&](const FiniteSet& E) {
    std::vector<Rational> row(n, Rational(0));
    for (int j = 0; j < n; ++j)
      if (E.contains(supp.at(j))) row[j] = 1;
    A.push_back(std::move(row));
    b.emplace_back(1);
    constraint_sets.push_back(E);
  };
  for (int j = 0; j < n; ++j) add_constraint(FiniteSet{supp.at(j)});

  LpResult lp;
  for (;;) {
    lp = solve_lp_max(objective, A, b);
    RationalVector t;
    for (int j = 0; j < n; ++j)
      if (lp.x[j] != 0) t.set(supp.at(j), lp.x[j]);
    NormCertificate sep = schreier_norm(t, xi);
    if (sep.value <= 1) break;
    add_constraint(sep.witness);
  }

  cert.value = lp.value;
  for (int j = 0; j < n; ++j)
    if (lp.x[j] != 0) cert.primal_witness.set(supp.at(j), lp.x[j]);
  for (int row : lp.tight_rows) cert.tight_sets.push_back(constraint_sets[row]);
  Rational best_mass(-1);
  for (const FiniteSet& E : cert.tight_sets) {
    Rational mass = w.mass_on(E);
    if (mass > best_mass) {
      best_mass = mass;
      cert.witness = E;
    }
  }
  return cert;
}

Rational dual_norm_vertex_oracle(const RationalVector& xstar, const Ordinal& xi) {
  const RationalVector w = xstar.abs();
  const FiniteSet supp = w.support();
  const int n = static_cast<int>(supp.size());
  if (n == 0) return Rational(0);
  if (n > 8) throw ResourceError("vertex oracle: support too large");

  std::vector<FiniteSet> members;
  std::function<void(const FiniteSet&)> dfs = [&](const FiniteSet& E) {
    members.push_back(E);
    for (int j = 0; j < n; ++j) {
      long long v = supp.at(j);
      if (v <= E.max()) continue;
      FiniteSet ext = E.appended(v);
      if (is_member(ext, xi)) dfs(ext);
    }
  };
  for (int j = 0; j < n; ++j) {
    FiniteSet root{supp.at(j)};
    if (is_member(root, xi)) dfs(root);
  }
  std::vector<FiniteSet> maximal;
  for (const FiniteSet& E : members) {
    bool is_max = true;
    for (int j = 0; j < n && is_max; ++j) {
      long long v = supp.at(j);
      if (E.contains(v)) continue;
      std::vector<long long> ext(E.begin(), E.end());
      ext.push_back(v);
      if (is_member(FiniteSet::from_unsorted(std::move(ext)), xi)) is_max = false;
    }
    if (is_max) maximal.push_back(E);
  }

  struct Plane {
    std::vector<Rational> a;
    Rational rhs;
  };
  std::vector<Plane> planes;
  for (const FiniteSet& E : maximal) {
    Plane p;
    p.a.assign(n, Rational(0));
    for (int j = 0; j < n; ++j)
      if (E.contains(supp.at(j))) p.a[j] = 1;
    p.rhs = 1;
    planes.push_back(std::move(p));
  }
  for (int j = 0; j < n; ++j) {
    Plane p;
    p.a.assign(n, Rational(0));
    p.a[j] = 1;
    p.rhs = 0;
    planes.push_back(std::move(p));
  }

  Rational best(0);
  std::vector<int> pick(n);
  std::function<void(int, int)> choose = [&](int from, int need) {
    if (need == 0) {
      std::vector<std::vector<Rational>> M;
      std::vector<Rational> rhs;
      for (int k = 0; k < n; ++k) {
        M.push_back(planes[pick[k]].a);
        rhs.push_back(planes[pick[k]].rhs);
      }
      std::vector<Rational> t;
      if (!solve_linear_system(std::move(M), std::move(rhs), t)) return;
      for (const Rational& ti : t)
        if (ti < 0) return;
      for (const FiniteSet& E : maximal) {
        Rational sum(0);
        for (int j = 0; j < n; ++j)
          if (E.contains(supp.at(j))) sum += t[j];
        if (sum > 1) return;
      }
      Rational value(0);
      for (int j = 0; j < n; ++j) value += w.at(supp.at(j)) * t[j];
      best = std::max(best, value);
      return;
    }
    for (int p = from; p <= static_cast<int>(planes.size()) - need; ++p) {
      pick[n - need] = p;
      choose(p + 1, need - 1);
    }
  };
  choose(0, n);
  return best;
}

std::pair<RationalVector, RationalVector> split_by_size(const RationalVector& xstar,
                                                        const Rational& eps) {
  if (eps < 0) throw DomainError("split_by_size: eps must be >= 0");
  RationalVector large, small;
  for (const auto& [i, v] : xstar.entries()) {
    Rational a = v < 0 ? -v : v;
    if (a > eps)
      large.set(i, v);
    else
      small.set(i, v);
  }
  return {large, small};
}

DominationReport check_domination(const std::vector<RationalVector>& A,
                                  const std::vector<RationalVector>& B,
                                  const Rational& C, const Ordinal& xiA,
                                  const Ordinal& xiB, int exhaustive_len,
                                  long long samples, std::uint64_t seed) {
  if (A.size() != B.size())
    throw DomainError("check_domination: sequences must have equal length");
  DominationReport report;
  report.worst_ratio = 0;
  const int len = static_cast<int>(A.size());

  auto test = [&](const std::vector<Rational>& coeffs) {
    RationalVector xa, xb;
    bool nonzero = false;
    for (int i = 0; i < len; ++i) {
      if (coeffs[i] == 0) continue;
      nonzero = true;
      xa = xa + A[i].scaled(coeffs[i]);
      xb = xb + B[i].scaled(coeffs[i]);
    }
    if (!nonzero) return;
    ++report.trials;
    Rational na = schreier_norm(xa, xiA).value;
    Rational nb = schreier_norm(xb, xiB).value;
    if (na > C * nb) {
      report.holds = false;
      report.worst_coeffs = coeffs;
    }
    if (nb > 0) {
      Rational ratio = na / nb;
      if (ratio > report.worst_ratio) {
        report.worst_ratio = ratio;
        if (report.holds) report.worst_coeffs = coeffs;
      }
    }
  };

  static const std::vector<Rational> lattice = {
      Rational(0),    Rational(1),    rational(1, 2), rational(1, 3),
      rational(2, 3), rational(1, 4), rational(3, 4)};
  if (len <= exhaustive_len) {
    std::vector<Rational> coeffs(len, Rational(0));
    std::function<void(int)> rec = [&](int i) {
      if (i == len) {
        test(coeffs);
        return;
      }
      for (const Rational& q : lattice) {
        coeffs[i] = q;
        rec(i + 1);
      }
    };
    rec(0);
  }
  std::mt19937_64 rng(seed ? seed : caps().default_seed);
  std::uniform_int_distribution<int> num(0, 8), den(1, 8);
  for (long long s = 0; s < samples; ++s) {
    std::vector<Rational> coeffs(len);
    for (int i = 0; i < len; ++i) coeffs[i] = rational(num(rng), den(rng));
    test(coeffs);
  }
  return report;
}

SpreadingModelReport ell1_sm_check(const std::vector<RationalVector>& X,
                                   const Ordinal& rho, const Ordinal& xi,
                                   const Rational& C) {
  SpreadingModelReport report;
  report.worst_constant = -1;
  const int len = static_cast<int>(X.size());
  static const std::vector<Rational> lattice = {Rational(1), rational(1, 2),
                                                rational(1, 3), rational(3, 4)};
  for_each_member(rho, len, [&](const FiniteSet& E) {
    if (E.empty()) return true;
    for (int shift = 0; shift < static_cast<int>(lattice.size()); ++shift) {
      RationalVector sum;
      Rational mass(0);
      int k = 0;
      for (long long i : E) {
        Rational a =
            shift == 0 ? Rational(1) : lattice[(k + shift) % lattice.size()];
        sum = sum + X[i - 1].scaled(a);
        mass += a;
        ++k;
      }
      ++report.checks;
      Rational norm = schreier_norm(sum, xi).value;
      if (norm < C * mass) {
        report.holds = false;
        report.worst_set = E;
      }
      if (mass > 0) {
        Rational constant = norm / mass;
        if (report.worst_constant < 0 || constant < report.worst_constant)
          report.worst_constant = constant;
      }
    }
    return true;
  });
  return report;
}

SpreadingModelReport c0_sm_check(const std::vector<RationalVector>& Xstar,
                                 const Ordinal& rho, const Ordinal& xi,
                                 const Rational& C) {
  SpreadingModelReport report;
  report.worst_constant = 0;
  const int len = static_cast<int>(Xstar.size());
  for_each_member(rho, len, [&](const FiniteSet& E) {
    if (E.empty()) return true;
    RationalVector sum;
    for (long long i : E) sum = sum + Xstar[i - 1];
    ++report.checks;
    Rational norm = schreier_norm(sum, xi).value;
    if (norm > report.worst_constant) {
      report.worst_constant = norm;
      report.worst_set = E;
    }
    if (norm > C) report.holds = false;
    return true;
  });
  return report;
}

StripReport strip_large_part(const RationalVector& xstar, const Ordinal& beta,
                             const Ordinal& xi, const Rational& eps) {
  if (eps <= 0 || eps >= 1)
    throw DomainError("strip_large_part: eps must be in (0,1)");
  if (xstar.zero()) throw DomainError("strip_large_part: zero functional");

  long long l = 2;
  while (Rational(l - 1) <= 1 / eps) ++l;

  const FiniteSet supp = xstar.support();
  if (supp.min() < l)
    throw DomainError("strip_large_part: support must live in [l, inf), l=" +
                      std::to_string(l));
  if (xstar.max_abs() > rational(1, l))
    throw DomainError("strip_large_part: sup-norm bound |x*|_inf <= 1/l violated");
  NormCertificate dual = dual_norm(xstar, xi);
  if (dual.value != 1)
    throw DomainError("strip_large_part: functional must have dual norm exactly 1");

  RationalVector y;
  for (const auto& [i, t] : dual.primal_witness.entries())
    y.set(i, xstar.at(i) < 0 ? -t : t);

  RationalVector remaining = y.abs();
  FiniteSet removed;
  for (long long step = 0; step < l; ++step) {
    NormCertificate piece = schreier_norm(remaining, beta);
    if (piece.witness.empty()) break;
    removed = removed.set_union(piece.witness);
    for (long long i : piece.witness) remaining.set(i, Rational(0));
  }
  if (!is_member(removed, xi))
    throw DomainError("strip_large_part: stripped union left S_xi; increase l");

  RationalVector x0 = y;
  for (long long i : removed) x0.set(i, Rational(0));
  Rational norm = schreier_norm(x0, xi).value;
  if (norm == 0) throw DomainError("strip_large_part: nothing survived the strip");

  StripReport report;
  report.level = l;
  report.removed = removed;
  report.x = x0.scaled(1 / norm);
  report.pairing = xstar.dot(report.x);
  report.beta_norm = schreier_norm(report.x, beta).value;
  return report;
}

}  // namespace schreier
