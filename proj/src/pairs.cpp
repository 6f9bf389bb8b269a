#include "schreier/pairs.hpp"

#include <algorithm>
#include <sstream>

#include "schreier/config.hpp"

namespace schreier {

namespace {

// Materialize the block at 1-based index `idx` of the maximal S_iota
// partition of N, together with its start position.
FiniteSet partition_block(const IndexStream& N, const Ordinal& iota, long long idx,
                          long long* start_pos = nullptr) {
  long long pos = 1;
  for (long long i = 1; i < idx; ++i)
    pos += stream_block_length(N, pos, iota, caps().max_block_elements);
  long long len = stream_block_length(N, pos, iota, caps().max_block_elements);
  if (start_pos) *start_pos = pos;
  std::vector<long long> elems;
  elems.reserve(len);
  for (long long k = 0; k < len; ++k) elems.push_back(N.at(pos + k));
  return FiniteSet(std::move(elems));
}

RationalVector block_average(const IndexStream& N, const Ordinal& iota,
                             long long start_pos) {
  return repeated_average(iota, N.drop(start_pos - 1), 1);
}

}  // namespace

SchreierPair build_pair(const Ordinal& xi, const Ordinal& iota, const IndexStream& L,
                        long long count) {
  if (iota > xi) throw DomainError("build_pair: iota must be <= xi");
  if (count < 1) throw DomainError("build_pair: count must be >= 1");

  SchreierPair pair;
  pair.xi = xi;
  pair.iota = iota;
  pair.rho = left_subtract(xi, iota);
  pair.horizon = count;

  // Tail on which S_iota sets sit inside S_xi, certified by enumeration.
  const int tail_horizon = std::min(16, caps().max_enumeration);
  auto tail = tail_bound_empirical(iota, xi, tail_horizon);
  if (!tail)
    throw DomainError(
        "build_pair: no tail start below the horizon certifies S_iota inside "
        "S_xi");
  IndexStream N = L.tail_from_value(std::max(*tail, L.at(1)));
  pair.tail_start = N.at(1);

  // Block selection: unions over S_rho index sets must stay in S_xi.
  std::vector<long long> indices;
  if (pair.rho.is_zero()) {
    for (long long i = 1; i <= count; ++i) indices.push_back(i);
    pair.union_certified = true;  // singleton index sets only
  } else {
    IndexStream sel = select_union_stream(iota, pair.rho, IndexStream::naturals(), 1);
    for (long long i = 1; i <= count; ++i) indices.push_back(sel.at(i));
    SelectionCertificate cert = certify_union_selection(
        iota, pair.rho, sel,
        [&](long long idx) { return partition_block(N, iota, idx); }, count);
    if (!cert.ok)
      throw DomainError("build_pair: union certificate failed at F = {" +
                        [&] {
                          std::ostringstream os;
                          for (long long v : cert.failing_set) os << v << " ";
                          return os.str();
                        }() +
                        "}");
    pair.union_certified = true;
  }

  // Thinning pass (eta = 1/2): demand the later averages be small in the
  // seminorm indexed by the earlier maxima. Abandoned wholesale if the
  // thresholds outgrow the materializable blocks.
  const Rational eta = rational(1, 2);
  const long long pool_cap = indices.back() + 48;
  std::vector<long long> thinned_indices;
  std::vector<RationalVector> thinned_vectors;
  bool thinning_ok = true;
  {
    auto seminorm = [&](const RationalVector& x, long long k) {
      if (iota.is_zero()) return x.max_abs();
      if (iota.is_successor()) return An_seminorm(x, iota.predecessor(), k);
      return schreier_norm(x, fundamental_sequence(iota, k) + Ordinal::finite(1))
          .value;
    };
    long long pool_pos = 0;  // position into the selected index list and beyond
    auto pool_index = [&](long long p) {
      return p < static_cast<long long>(indices.size())
                 ? indices[p]
                 : indices.back() + (p - static_cast<long long>(indices.size()) + 1);
    };
    for (long long i = 1; thinning_ok && i <= count; ++i) {
      bool accepted = false;
      while (!accepted) {
        if (pool_index(pool_pos) > pool_cap) {
          thinning_ok = false;
          break;
        }
        RationalVector candidate;
        try {
          long long start = 0;
          partition_block(N, iota, pool_index(pool_pos), &start);
          candidate = block_average(N, iota, start);
        } catch (const ResourceError&) {
          thinning_ok = false;
          break;
        }
        bool ok = true;
        for (std::size_t l = 0; l < thinned_vectors.size() && ok; ++l) {
          Rational threshold =
              eta / Rational(BigInt(1) << std::min<long long>(
                                 static_cast<long long>(l) + 1 + i, 62));
          if (seminorm(candidate, thinned_vectors[l].support().max()) >= threshold)
            ok = false;
        }
        ++pool_pos;
        if (ok) {
          thinned_indices.push_back(pool_index(pool_pos - 1));
          thinned_vectors.push_back(candidate);
          accepted = true;
        }
      }
    }
  }
  if (thinning_ok) {
    pair.block_indices = thinned_indices;
    pair.X = thinned_vectors;
    pair.thinned = true;
    if (!pair.rho.is_zero()) {
      // Re-certify the unions for the thinned index selection.
      SelectionCertificate cert = certify_union_selection(
          iota, pair.rho,
          IndexStream(std::vector<long long>(thinned_indices.begin(),
                                             thinned_indices.end()),
                      thinned_indices.back() + 1, 1),
          [&](long long idx) { return partition_block(N, iota, idx); }, count);
      if (!cert.ok) {
        pair.thinned = false;
        pair.X.clear();
        pair.block_indices.clear();
      }
    }
  }
  if (pair.X.empty()) {
    pair.thinned = false;
    pair.block_indices = indices;
    for (long long idx : indices) {
      long long start = 0;
      partition_block(N, iota, idx, &start);
      pair.X.push_back(block_average(N, iota, start));
    }
  }

  std::vector<long long> mins;
  for (const RationalVector& x : pair.X) {
    pair.Xstar.push_back(RationalVector::indicator(x.support()));
    mins.push_back(x.support().min());
  }
  pair.J = FiniteSet(std::move(mins));
  return pair;
}

namespace {

// Bracket for || sum_{i<=n} x_i (x) x_i* ||. Upper: with nonnegative data,
// T x <= max_i |x_i*(x)| * sum |x_i| coordinatewise, and |x_i*(x)| is at most
// the dual norm of x_i*, so (max_i ||x_i*||*) ||sum |x_i||| dominates.
// Lower: evaluate at the normalized x_j.
void partial_sum_bounds(const std::vector<RationalVector>& X,
                        const std::vector<RationalVector>& Xstar, const Ordinal& xi,
                        std::vector<Rational>& upper, std::vector<Rational>& lower) {
  upper.clear();
  lower.clear();
  RationalVector sum;
  Rational dual_max(0);
  for (std::size_t n = 0; n < X.size(); ++n) {
    sum = sum + X[n].abs();
    dual_max = std::max(dual_max, dual_norm(Xstar[n], xi).value);
    upper.push_back(dual_max * schreier_norm(sum, xi).value);
    // T_n applied to x_j / ||x_j|| for j <= n; theta_j = x_j*(x_j).
    Rational best(0);
    for (std::size_t j = 0; j <= n; ++j) {
      Rational norm_xj = schreier_norm(X[j], xi).value;
      if (norm_xj == 0) continue;
      RationalVector image;
      for (std::size_t i = 0; i <= n; ++i) {
        Rational a = Xstar[i].dot(X[j]);
        if (a != 0) image = image + X[i].scaled(a);
      }
      best = std::max(best, schreier_norm(image, xi).value / norm_xj);
    }
    lower.push_back(best);
  }
}

}  // namespace

PairCertificate verify_pair(const SchreierPair& p, const Rational& theta_expected) {
  PairCertificate cert;
  const std::size_t n = p.X.size();

  // (i) biorthogonality
  {
    PairCheck check{"biorthogonality"};
    for (std::size_t i = 0; i < n && check.pass; ++i)
      for (std::size_t j = 0; j < n && check.pass; ++j) {
        if (i == j) continue;
        if (p.Xstar[i].dot(p.X[j]) != 0) {
          check.pass = false;
          check.detail = "x*_" + std::to_string(i + 1) + "(x_" +
                         std::to_string(j + 1) + ") != 0";
        }
      }
    cert.checks.push_back(check);
  }

  // (ii) modulus alignment: x_i*(x_i) = |x_i*|(|x_i|)
  {
    PairCheck check{"modulus-alignment"};
    for (std::size_t i = 0; i < n && check.pass; ++i) {
      if (p.Xstar[i].dot(p.X[i]) != p.Xstar[i].abs().dot(p.X[i].abs())) {
        check.pass = false;
        check.detail = "index " + std::to_string(i + 1);
      }
    }
    cert.checks.push_back(check);
  }

  // (iii) theta
  {
    PairCheck check{"theta"};
    Rational theta;
    for (std::size_t i = 0; i < n; ++i) {
      Rational t = p.Xstar[i].dot(p.X[i]);
      if (i == 0 || t < theta) theta = t;
    }
    cert.theta = theta;
    if (n > 0 && theta < theta_expected) {
      check.pass = false;
      check.detail = "theta below expected";
    }
    cert.checks.push_back(check);
  }

  // normalization of both sequences
  {
    PairCheck check{"normalized"};
    for (std::size_t i = 0; i < n && check.pass; ++i) {
      if (schreier_norm(p.X[i], p.xi).value != 1) {
        check.pass = false;
        check.detail = "||x_" + std::to_string(i + 1) + "|| != 1";
      } else if (dual_norm(p.Xstar[i], p.xi).value != 1) {
        check.pass = false;
        check.detail = "||x*_" + std::to_string(i + 1) + "||* != 1";
      }
    }
    cert.checks.push_back(check);
  }

  // (iv)/(v) spreading-model equalities over S_rho index sets at the horizon:
  // unions of the functional supports must capture full l1 mass.
  {
    PairCheck lower_check{"ell1-spreading"};
    PairCheck upper_check{"c0-spreading"};
    Rational worst_lower(-1), worst_upper(0);
    for_each_member(p.rho, static_cast<int>(n), [&](const FiniteSet& F) {
      if (F.empty()) return true;
      FiniteSet unioned;
      RationalVector fsum;
      RationalVector vsum;
      for (long long i : F) {
        unioned = unioned.set_union(p.X[i - 1].support());
        fsum = fsum + p.Xstar[i - 1];
        vsum = vsum + p.X[i - 1].scaled(rational(1, static_cast<long long>(F.size())));
      }
      // lower: ||sum a_i x_i|| = sum |a_i| with uniform coefficients
      Rational lower = schreier_norm(vsum, p.xi).value;
      if (worst_lower < 0 || lower < worst_lower) worst_lower = lower;
      if (lower != 1) {
        lower_check.pass = false;
        lower_check.detail = "union capture fell short";
      }
      Rational upper = dual_norm(fsum, p.xi).value;
      worst_upper = std::max(worst_upper, upper);
      if (upper != 1) {
        upper_check.pass = false;
        upper_check.detail = "functional sum dual norm != 1";
      }
      if (!is_member(unioned, p.xi)) {
        lower_check.pass = false;
        lower_check.detail = "support union left S_xi";
      }
      return true;
    });
    cert.ell1_constant = worst_lower < 0 ? Rational(1) : worst_lower;
    cert.c0_constant = worst_upper;
    cert.checks.push_back(lower_check);
    cert.checks.push_back(upper_check);
  }

  // Equivalence constants against the rho-level basis along J, by lattice
  // search. Report-only: the constants land in the detail string.
  {
    PairCheck check{"basis-equivalence"};
    std::vector<RationalVector> basis_J;
    for (long long j : p.J) basis_J.push_back(RationalVector::basis(j));
    DominationReport up =
        check_domination(p.X, basis_J, Rational(1), p.xi, p.rho, 3, 60);
    DominationReport down =
        check_domination(basis_J, p.X, Rational(1), p.rho, p.xi, 3, 60);
    std::ostringstream os;
    os << "X against basis: " << up.worst_ratio << ", basis against X: "
       << down.worst_ratio;
    check.detail = os.str();
    cert.checks.push_back(check);
  }

  // (vi) partial-sum operator norms
  {
    PairCheck check{"partial-sums"};
    partial_sum_bounds(p.X, p.Xstar, p.xi, cert.partial_sum_upper,
                       cert.partial_sum_lower);
    cert.checks.push_back(check);
  }

  return cert;
}

ProjectionReport pair_projection_norm(const SchreierPair& p, long long n) {
  if (n < 0 || n > static_cast<long long>(p.X.size()))
    throw DomainError("pair_projection_norm: n outside horizon");
  ProjectionReport report;
  report.upper = 0;
  report.lower = 0;
  if (n == 0) return report;

  // Scaled summands x_i (x) x_i* / theta_i.
  std::vector<RationalVector> X, Xstar;
  for (long long i = 0; i < n; ++i) {
    Rational theta = p.Xstar[i].dot(p.X[i]);
    if (theta == 0) throw DomainError("pair_projection_norm: theta_i = 0");
    X.push_back(p.X[i]);
    Xstar.push_back(p.Xstar[i].scaled(1 / theta));
  }
  std::vector<Rational> upper, lower;
  partial_sum_bounds(X, Xstar, p.xi, upper, lower);
  report.upper = upper.back();
  report.lower = lower.back();
  if (n == 1) {
    // rank one: exactly ||x_1|| ||x*_1|| / theta_1
    Rational exact = schreier_norm(X[0], p.xi).value *
                     dual_norm(Xstar[0], p.xi).value;
    report.upper = exact;
    report.lower = exact;
  }

  // Idempotence on the span: P(x_j) must reproduce x_j exactly.
  for (long long j = 0; j < n && report.idempotent; ++j) {
    RationalVector image;
    for (long long i = 0; i < n; ++i) {
      Rational a = Xstar[i].dot(p.X[j]);
      if (a != 0) image = image + X[i].scaled(a);
    }
    if (!(image == p.X[j])) report.idempotent = false;
  }
  return report;
}

BetaProfile beta_profile(const std::vector<RationalVector>& X, const Ordinal& xi,
                         const Rational& threshold) {
  BetaProfile profile;
  profile.threshold = threshold;
  profile.iota_estimate = Ordinal();

  std::vector<Ordinal> probes = {Ordinal(),          Ordinal::finite(1),
                                 Ordinal::finite(2), Ordinal::finite(3),
                                 Ordinal::omega(),   Ordinal::omega() + Ordinal::finite(1)};
  for (const Ordinal& gamma : i_set(xi)) {
    bool decays = true;
    for (const Ordinal& beta : probes) {
      if (!(beta < gamma)) continue;
      BetaProfile::Row row;
      row.gamma = gamma;
      row.beta = beta;
      for (const RationalVector& x : X)
        row.norms.push_back(schreier_norm(x, beta).value);
      row.decays = !row.norms.empty() && row.norms.back() <= threshold;
      decays = decays && row.decays;
      profile.rows.push_back(std::move(row));
    }
    if (decays) profile.iota_estimate = gamma;
  }
  return profile;
}

SchreierPair convex_block_descend(const SchreierPair& p, const Ordinal& delta,
                                  long long count) {
  // sigma in I(rho) with sigma + delta = rho.
  std::optional<Ordinal> sigma;
  for (const Ordinal& cand : i_set(p.rho))
    if (left_subtract(p.rho, cand) == delta) sigma = cand;
  if (!sigma) throw DomainError("convex_block_descend: delta not in R(rho)");
  if (delta == p.rho) return p;

  SchreierPair out;
  out.xi = p.xi;
  out.iota = p.iota + *sigma;
  out.rho = delta;
  out.tail_start = p.tail_start;
  out.union_certified = p.union_certified;

  IndexStream indices = IndexStream::naturals();
  std::vector<long long> mins;
  for (long long i = 1; i <= count; ++i) {
    RationalVector z = repeated_average(*sigma, indices, i);
    if (z.support().max() > static_cast<long long>(p.X.size())) break;
    RationalVector y, ystar;
    for (const auto& [j, c] : z.entries()) {
      y = y + p.X[j - 1].scaled(c);
      ystar = ystar + p.Xstar[j - 1];
    }
    out.X.push_back(y);
    out.Xstar.push_back(ystar);
    mins.push_back(y.support().min());
  }
  out.horizon = static_cast<long long>(out.X.size());
  out.J = FiniteSet(std::move(mins));
  return out;
}

}  // namespace schreier
