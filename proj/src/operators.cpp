#include "schreier/operators.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "schreier/config.hpp"

namespace schreier {

void FiniteOperator::set(long long row, long long col, const Rational& v) {
  if (row < 1 || col < 1) throw DomainError("operator: indices are 1-based");
  if (v == 0)
    entries.erase({row, col});
  else
    entries[{row, col}] = v;
  dimension = std::max({dimension, row, col});
}

Rational FiniteOperator::at(long long row, long long col) const {
  auto it = entries.find({row, col});
  return it == entries.end() ? Rational(0) : it->second;
}

RationalVector FiniteOperator::apply(const RationalVector& x) const {
  RationalVector out;
  for (const auto& [rc, v] : entries) {
    Rational xi_val = x.at(rc.second);
    if (xi_val != 0) out.add_to(rc.first, v * xi_val);
  }
  return out;
}

bool FiniteOperator::nonnegative() const {
  for (const auto& [rc, v] : entries)
    if (v < 0) return false;
  return true;
}

FiniteOperator FiniteOperator::rank_one_sum(const std::vector<RationalVector>& X,
                                            const std::vector<RationalVector>& Xstar,
                                            const Ordinal& domain,
                                            const Ordinal& codomain) {
  if (X.size() != Xstar.size())
    throw DomainError("rank_one_sum: length mismatch");
  FiniteOperator T;
  T.domain_xi = domain;
  T.codomain_xi = codomain;
  for (std::size_t i = 0; i < X.size(); ++i)
    for (const auto& [r, xv] : X[i].entries())
      for (const auto& [c, fv] : Xstar[i].entries()) T.set(r, c, T.at(r, c) + xv * fv);
  return T;
}

FiniteOperator formal_identity(const Ordinal& xi, const Ordinal& zeta, long long N) {
  FiniteOperator T;
  T.domain_xi = xi;
  T.codomain_xi = zeta;
  T.dimension = N;
  for (long long i = 1; i <= N; ++i) T.set(i, i, Rational(1));
  return T;
}

namespace {

// Exact norm of a nonnegative section: max over codomain-family sets E of
// the LP value max { sum_{r in E} (Tx)_r : ||x||_dom <= 1 }, which equals
// the dual norm of the column sums over E. Branch and bound over E with the
// subadditive bound dual(c(E)) + dual(c(tail)).
Rational nonnegative_norm(const FiniteOperator& T) {
  // active rows and columns
  std::vector<long long> rows;
  for (const auto& [rc, v] : T.entries)
    if (rows.empty() || rows.back() != rc.first) rows.push_back(rc.first);
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  if (rows.empty()) return Rational(0);

  auto column_sums = [&](const FiniteSet& E) {
    RationalVector c;
    for (const auto& [rc, v] : T.entries)
      if (E.contains(rc.first)) c.add_to(rc.second, v);
    return c;
  };
  std::map<std::size_t, Rational> tail_memo;
  auto tail_dual = [&](std::size_t from) {
    auto it = tail_memo.find(from);
    if (it != tail_memo.end()) return it->second;
    std::vector<long long> tail(rows.begin() + from, rows.end());
    Rational v = tail.empty()
                     ? Rational(0)
                     : dual_norm(column_sums(FiniteSet(tail)), T.domain_xi).value;
    tail_memo.emplace(from, v);
    return v;
  };

  Rational best(0);
  std::vector<long long> current;
  std::uint64_t nodes = 0;
  std::function<void(std::size_t)> expand = [&](std::size_t idx) {
    if (++nodes > caps().dfs_node_budget / 1024)
      throw ResourceError("operator norm search exceeded the node budget");
    Rational here = dual_norm(column_sums(FiniteSet(std::vector<long long>(current))),
                              T.domain_xi)
                        .value;
    best = std::max(best, here);
    if (idx + 1 <= rows.size()) {
      if (here + tail_dual(idx + 1) <= best) return;
    }
    for (std::size_t j = idx + 1; j < rows.size(); ++j) {
      current.push_back(rows[j]);
      if (is_member(FiniteSet(std::vector<long long>(current)), T.codomain_xi))
        expand(j);
      current.pop_back();
    }
  };
  for (std::size_t i = 0; i < rows.size(); ++i) {
    current.assign(1, rows[i]);
    if (!is_member(FiniteSet{rows[i]}, T.codomain_xi)) continue;
    if (best >= tail_dual(i)) break;
    expand(i);
  }
  return best;
}

}  // namespace

OpNormBracket op_norm(const FiniteOperator& T) {
  OpNormBracket bracket;
  bracket.lower = 0;
  bracket.upper = 0;
  if (T.entries.empty()) return bracket;

  // structured lower bounds: basis vectors
  std::vector<long long> cols;
  for (const auto& [rc, v] : T.entries) cols.push_back(rc.second);
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  for (long long c : cols) {
    RationalVector image = T.apply(RationalVector::basis(c));
    bracket.lower =
        std::max(bracket.lower, schreier_norm(image, T.codomain_xi).value);
  }

  if (T.nonnegative()) {
    bracket.upper = nonnegative_norm(T);
    bracket.lower = std::max(bracket.lower, bracket.upper);
    return bracket;
  }
  FiniteOperator absT = T;
  for (auto& [rc, v] : absT.entries)
    if (v < 0) v = -v;
  bracket.upper = nonnegative_norm(absT);
  return bracket;
}

Rational runs_s1_norm(const std::vector<UniformRun>& runs) {
  // Coefficients are non-increasing along the runs, so a capturing set with
  // minimum m takes the first min(m, available) support elements at or past
  // m. capture(m) is piecewise linear in m; its breakpoints are the run
  // boundaries and the saturation points where the budget m exhausts exactly
  // at the end of some later run. Candidates are clamped into the support.
  const int k = static_cast<int>(runs.size());
  std::vector<long long> prefix(k + 1, 0);  // counts up to and including run l
  for (int l = 0; l < k; ++l) prefix[l + 1] = prefix[l] + runs[l].length;

  std::vector<long long> raw;
  for (int j = 0; j < k; ++j) {
    raw.push_back(runs[j].start);
    raw.push_back(runs[j].start + runs[j].length - 1);
    for (int l = j; l < k; ++l) {
      // m in run j with budget exhausting at the end of run l:
      // m = prefix[l+1] - prefix[j] - (m - runs[j].start)
      long long cross = (prefix[l + 1] - prefix[j] + runs[j].start) / 2;
      raw.push_back(cross);
      raw.push_back(cross + 1);
    }
  }
  std::vector<long long> candidates;
  for (long long c : raw) {
    for (int j = 0; j < k; ++j) {
      long long lo = runs[j].start, hi = runs[j].start + runs[j].length - 1;
      if (c < lo) {
        candidates.push_back(lo);  // clamp up into this run
        break;
      }
      if (c <= hi) {
        candidates.push_back(c);
        break;
      }
      candidates.push_back(hi);  // clamp down; also try later runs via lo above
    }
  }
  Rational best(0);
  for (long long m : candidates) {
    Rational capture(0);
    long long budget = m;
    for (const UniformRun& r : runs) {
      long long hi = r.start + r.length - 1;
      if (hi < m) continue;
      long long lo = std::max(r.start, m);
      long long take = std::min<long long>(budget, hi - lo + 1);
      if (take <= 0) break;
      capture += Rational(take) * r.coeff;
      budget -= take;
      if (budget == 0) break;
    }
    best = std::max(best, capture);
  }
  return best;
}

SsWitnessResult ss_witness(const Ordinal& xi, const Ordinal& zeta, const Ordinal& rho,
                           const Rational& eps) {
  (void)xi;
  (void)zeta;
  SsWitnessResult out;
  out.level = rho;
  try {
    SmallBetaVector small =
        small_beta_vector(rho, rho + Ordinal::finite(1), eps, IndexStream::naturals());
    out.u = small.x;
    out.support = small.support;
    out.mass = small.x.l1_mass();
    out.level_norm = small.beta_norm;
    return out;
  } catch (const ResourceError&) {
    if (!(rho.is_finite() && rho.finite_value() == 1)) throw;
  }

  // Compact run form of the first level-2 average on {v, v+1, ...}: pieces
  // [w, 2w) with w doubling from v, coefficient 1/(v*w) each. The least v
  // whose exact S_1 norm clears eps wins.
  out.explicit_form = false;
  for (long long v = 2;; ++v) {
    std::vector<UniformRun> runs;
    long long w = v;
    for (long long j = 0; j < v; ++j) {
      runs.push_back({w, w, Rational(1) / (Rational(v) * Rational(w))});
      w *= 2;
    }
    Rational norm = runs_s1_norm(runs);
    if (norm < eps) {
      out.runs = runs;
      out.mass = 0;
      for (const UniformRun& r : runs) out.mass += Rational(r.length) * r.coeff;
      out.level_norm = norm;
      return out;
    }
  }
}

NonSsWitnessResult non_ss_witness(const Ordinal& xi, const Ordinal& rho,
                                  long long horizon) {
  NonSsWitnessResult out;
  const std::vector<Ordinal> suffixes = r_set(xi);
  const bool in_r = std::any_of(suffixes.begin(), suffixes.end(),
                                [&rho](const Ordinal& s) { return s == rho; });
  if (in_r && !rho.is_zero()) {
    Ordinal iota;
    for (const Ordinal& cand : i_set(xi))
      if (left_subtract(xi, cand) == rho) iota = cand;
    SchreierPair pair = build_pair(xi, iota, IndexStream::naturals(), horizon);
    // largest S_rho index set at the horizon
    FiniteSet best;
    for_each_member(rho, static_cast<int>(horizon), [&](const FiniteSet& F) {
      if (F.size() > best.size()) best = F;
      return true;
    });
    out.index_set = best;
    out.basis_route = false;
    FiniteSet unioned;
    RationalVector sum;
    for (long long i : out.index_set) {
      unioned = unioned.set_union(pair.X[i - 1].support());
      sum = sum + pair.X[i - 1].scaled(rational(1, (long long)out.index_set.size()));
    }
    out.support_set = unioned;
    out.equality = is_member(unioned, xi) && schreier_norm(sum, xi).value == 1;
    return out;
  }

  // Basis route: an S_rho set past the tail bound carries exact lower l1
  // behavior on raw basis vectors.
  out.basis_route = true;
  auto bound = tail_bound_empirical(rho, xi, std::min(16, caps().max_enumeration));
  long long start = bound ? *bound : 1;
  // greedy maximal S_rho set starting at `start`
  IndexStream tail = IndexStream::naturals().tail_from_value(std::max(start, 1LL));
  long long len = stream_block_length(tail, 1, rho, caps().max_block_elements);
  len = std::min<long long>(len, std::max<long long>(horizon, 1));
  out.index_set = tail.first(len);
  out.support_set = out.index_set;
  RationalVector sum;
  for (long long i : out.index_set)
    sum = sum + RationalVector::basis(i).scaled(
                    rational(1, (long long)out.index_set.size()));
  out.equality = is_member(out.index_set, rho) && is_member(out.index_set, xi) &&
                 schreier_norm(sum, xi).value == 1;
  return out;
}

SsChainResult build_ss_chain(const Ordinal& xi, long long horizon,
                             const Rational& witness_eps) {
  SsChainResult out;
  out.levels = r_set(xi);
  const std::size_t k = out.levels.size() - 1;  // steps in the chain
  if (k < 1) throw DomainError("build_ss_chain: R(xi) must have at least 2 levels");

  // pairs at every level: pair s has x^s equivalent to the rho_s basis
  std::vector<SchreierPair> pairs;
  for (const Ordinal& rho_s : out.levels) {
    Ordinal iota;
    for (const Ordinal& cand : i_set(xi))
      if (left_subtract(xi, cand) == rho_s) iota = cand;
    pairs.push_back(build_pair(xi, iota, IndexStream::naturals(), horizon));
  }

  // factor T_s carries x_i^s to x_i^(s-1); composite applied right to left
  // fixes x_i^k at x_i^0.
  bool fixes = true;
  for (long long i = 0; i < horizon && fixes; ++i) {
    RationalVector v = pairs[k].X[i];
    for (std::size_t s = k; s >= 1; --s) {
      // T_s v = sum_j x_j^(s-1) * x_j^{s*}(v)
      RationalVector image;
      for (std::size_t j = 0; j < pairs[s].Xstar.size(); ++j) {
        Rational a = pairs[s].Xstar[j].dot(v);
        if (a != 0) image = image + pairs[s - 1].X[j].scaled(a);
      }
      v = image;
    }
    if (!(v == pairs[0].X[i])) fixes = false;
  }
  out.composite_fixes = fixes;

  // separation of the fixed images
  out.min_separation = -1;
  for (long long i = 0; i < horizon; ++i)
    for (long long j = i + 1; j < horizon; ++j) {
      Rational d =
          schreier_norm(pairs[0].X[i] - pairs[0].X[j], xi).value;
      if (out.min_separation < 0 || d < out.min_separation) out.min_separation = d;
    }

  // singularity witness per factor: coefficients on an S_(rho_(s-1)+1) index
  // set with small image norm
  for (std::size_t s = 1; s <= k; ++s) {
    SsChainFactor factor;
    factor.from_level = out.levels[s];
    factor.to_level = out.levels[s - 1];
    factor.domain_pair = pairs[s];
    const Ordinal witness_level = out.levels[s - 1] + Ordinal::finite(1);
    // best uniform coefficients on an S_(witness_level) index set
    FiniteSet best;
    for_each_member(witness_level, static_cast<int>(horizon),
                    [&](const FiniteSet& F) {
                      if (F.size() > best.size()) best = F;
                      return true;
                    });
    factor.witness_indices = best;
    RationalVector image;
    for (long long i : best)
      image = image +
              pairs[s - 1].X[i - 1].scaled(rational(1, (long long)best.size()));
    factor.witness_image_norm = schreier_norm(image, xi).value;
    factor.witness_small = factor.witness_image_norm < witness_eps;
    out.factors.push_back(std::move(factor));
  }
  return out;
}

FiniteSet IndexMap::preimage(const FiniteSet& F) const {
  std::vector<long long> pre;
  for (const auto& [d, m] : table)
    if (F.contains(m)) pre.push_back(d);
  return FiniteSet(std::move(pre));
}

InjectivityReport xi_injectivity_report(const IndexMap& psi, const Ordinal& xi,
                                        long long horizon) {
  InjectivityReport report;
  report.max_ratio = 0;
  for_each_member(xi, static_cast<int>(horizon), [&](const FiniteSet& F) {
    if (F.empty()) return true;
    ++report.sets_checked;
    FiniteSet pre = psi.preimage(F);
    if (pre.empty()) return true;
    Rational ratio =
        Rational(tau(pre, xi)) / Rational(std::max<long long>(1, tau(F, xi)));
    if (ratio > report.max_ratio) {
      report.max_ratio = ratio;
      report.witness = F;
    }
    return true;
  });
  return report;
}

DyadicFamily dyadic_family(const Ordinal& xi, int n) {
  if (n < 1) throw DomainError("dyadic_family: n must be >= 1");
  if (!xi.is_finite())
    throw ResourceError(
        "dyadic_family: blocks past the first at limit levels are towers; "
        "only finite levels are materializable");
  const int level = static_cast<int>(xi.finite_value());

  DyadicFamily fam;
  BigInt total_size = 0;
  BigInt total_tau = 0;
  BigInt prev_max = 0;
  for (int i = 0; i < n; ++i) {
    // tau requirement: strictly above (i) * accumulated tau
    BigInt need_tau = i == 0 ? BigInt(1) : BigInt(i) * total_tau + 1;
    BigInt start = std::max(prev_max, total_size) + 1;
    // union of need_tau successive maximal blocks from start
    std::vector<IntervalSet::Interval> ivs;
    BigInt pos = start;
    for (BigInt b = 0; b < need_tau; ++b) {
      BigInt end = interval_block_end(level, pos);
      ivs.push_back({pos, end});
      pos = end + 1;
    }
    IntervalSet F(std::move(ivs));
    fam.sets.push_back(F);
    fam.tau_values.push_back(interval_tau(F, level));
    prev_max = F.max();
    total_size += F.cardinality();
    total_tau += fam.tau_values.back();
  }

  // re-verify the three conditions from the raw sets
  fam.conditions_hold = true;
  std::ostringstream os;
  BigInt size_acc = 0, tau_acc = 0;
  for (int i = 0; i < n; ++i) {
    if (i > 0) {
      if (!(fam.sets[i].min() > fam.sets[i - 1].max())) {
        fam.conditions_hold = false;
        os << "gap condition failed at " << i + 1 << "; ";
      }
      if (!(fam.sets[i].min() > size_acc)) {
        fam.conditions_hold = false;
        os << "cardinality condition failed at " << i + 1 << "; ";
      }
      if (!(fam.tau_values[i] > BigInt(i) * tau_acc)) {
        fam.conditions_hold = false;
        os << "tau growth failed at " << i + 1 << "; ";
      }
    }
    size_acc += fam.sets[i].cardinality();
    tau_acc += fam.tau_values[i];
  }
  fam.detail = os.str();
  return fam;
}

IntervalSet branch_union(const std::vector<IntervalSet>& family,
                         const std::vector<int>& indices) {
  IntervalSet out;
  for (int i : indices) {
    if (i < 1 || i > static_cast<int>(family.size()))
      throw DomainError("branch_union: index outside family");
    out = out.set_union(family[i - 1]);
  }
  return out;
}

}  // namespace schreier
