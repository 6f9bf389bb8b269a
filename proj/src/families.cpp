#include "schreier/families.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <unordered_map>

#include "schreier/config.hpp"

namespace schreier {

namespace {

// Length of the longest S_xi segment of A starting at index i (0-based).
// Greedy: at a successor level, strip min-many maximal sub-segments.
std::size_t strip_length(const std::vector<long long>& A, std::size_t i,
                         const Ordinal& xi) {
  if (i >= A.size()) return 0;
  if (xi.is_zero()) return 1;
  if (xi.is_limit())
    return strip_length(A, i, fundamental_sequence(xi, A[i]) + Ordinal::finite(1));
  const Ordinal pred = xi.predecessor();
  const long long budget = A[i];
  std::size_t pos = i;
  for (long long j = 0; j < budget && pos < A.size(); ++j)
    pos += strip_length(A, pos, pred);
  return pos - i;
}

}  // namespace

bool is_member(const FiniteSet& E, const Ordinal& xi) {
  if (E.empty()) return true;
  return strip_length(E.elements(), 0, xi) == E.size();
}

long long tau(const FiniteSet& A, const Ordinal& xi) {
  long long count = 0;
  std::size_t pos = 0;
  while (pos < A.size()) {
    pos += strip_length(A.elements(), pos, xi);
    ++count;
  }
  return count;
}

bool is_member_An(const FiniteSet& E, const Ordinal& xi, long long n) {
  if (E.empty()) return true;
  return tau(E, xi) <= n;
}

long long tau_oracle(const FiniteSet& A, const Ordinal& xi) {
  const std::size_t n = A.size();
  if (n == 0) return 0;
  // best[i] = minimal number of successive S_xi segments covering A[i..).
  const long long kInf = 1LL << 60;
  std::vector<long long> best(n + 1, kInf);
  best[n] = 0;
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      FiniteSet segment = A.slice(i, j - i);
      if (!is_member(segment, xi)) break;  // prefixes of members are members
      if (best[j] != kInf) best[i] = std::min(best[i], 1 + best[j]);
    }
  }
  return best[0];
}

bool is_maximal(const FiniteSet& E, const Ordinal& xi) {
  if (!is_member(E, xi)) throw DomainError("is_maximal: set is not in the family");
  if (E.empty()) return false;
  return !is_member(E.appended(E.max() + 1), xi);
}

long long stream_block_length(const IndexStream& M, long long start_pos,
                              const Ordinal& xi, long long budget) {
  if (budget <= 0)
    throw ResourceError("stream block exceeds the element budget");
  if (xi.is_zero()) return 1;
  if (xi.is_limit())
    return stream_block_length(
        M, start_pos, fundamental_sequence(xi, M.at(start_pos)) + Ordinal::finite(1),
        budget);
  const Ordinal pred = xi.predecessor();
  const long long blocks = M.at(start_pos);
  long long pos = start_pos;
  for (long long j = 0; j < blocks; ++j) {
    long long len = stream_block_length(M, pos, pred, budget - (pos - start_pos));
    pos += len;
    if (pos - start_pos > budget)
      throw ResourceError("stream block exceeds the element budget");
  }
  return pos - start_pos;
}

std::vector<FiniteSet> maximal_partition(const IndexStream& M, const Ordinal& xi,
                                         long long count) {
  std::vector<FiniteSet> blocks;
  long long pos = 1;
  for (long long i = 0; i < count; ++i) {
    long long len = stream_block_length(M, pos, xi, caps().max_block_elements);
    std::vector<long long> elems;
    elems.reserve(len);
    for (long long k = 0; k < len; ++k) elems.push_back(M.at(pos + k));
    blocks.emplace_back(std::move(elems));
    pos += len;
  }
  return blocks;
}

// ---------------------------------------------------------------------------
// Modified families: exhaustive subset tables over a fixed universe.

struct ModifiedMembership::Impl {
  int n;                                   // universe [1, n]
  std::size_t size;                        // 2^n masks
  std::map<std::string, std::vector<char>> tables;

  explicit Impl(int universe) : n(universe), size(std::size_t(1) << universe) {}

  static int min_element(std::size_t mask) {
    // 1-based value of the lowest set bit
    int b = 0;
    while (!(mask & (std::size_t(1) << b))) ++b;
    return b + 1;
  }

  const std::vector<char>& table(const Ordinal& xi) {
    const std::string key = xi.to_string();
    auto it = tables.find(key);
    if (it != tables.end()) return it->second;

    std::vector<char> member(size, 0);
    member[0] = 1;
    if (xi.is_zero()) {
      for (std::size_t m = 1; m < size; ++m)
        member[m] = (m & (m - 1)) == 0;  // singletons
    } else if (xi.is_successor()) {
      const std::vector<char>& prev = table(xi.predecessor());
      // parts[S] = minimal number of pairwise disjoint nonempty prev-members
      // partitioning S (hereditarity makes partition and cover agree).
      const int kInf = 1 << 20;
      std::vector<int> parts(size, kInf);
      parts[0] = 0;
      for (std::size_t S = 1; S < size; ++S) {
        const std::size_t low = S & (~S + 1);
        // submasks of S containing the lowest element
        for (std::size_t T = S; T; T = (T - 1) & S) {
          if (!(T & low)) continue;
          if (prev[T] && parts[S ^ T] + 1 < parts[S]) parts[S] = parts[S ^ T] + 1;
        }
        member[S] = parts[S] <= min_element(S);
      }
    } else {
      // limit: E in S^M_xi iff E in S^M_(xi_k + 1) for some k <= min E
      std::vector<const std::vector<char>*> level(n + 1, nullptr);
      for (int k = 1; k <= n; ++k)
        level[k] = &table(fundamental_sequence(xi, k) + Ordinal::finite(1));
      for (std::size_t m = 1; m < size; ++m) {
        int lo = min_element(m);
        for (int k = 1; k <= lo && !member[m]; ++k)
          if ((*level[k])[m]) member[m] = 1;
      }
    }
    return tables.emplace(key, std::move(member)).first->second;
  }
};

ModifiedMembership::ModifiedMembership(int universe) : universe_(universe) {
  if (universe < 1 || universe > caps().max_bruteforce_universe)
    throw ResourceError("modified-family universe exceeds brute-force cap");
  impl_ = std::make_shared<Impl>(universe);
}

bool ModifiedMembership::is_member(const FiniteSet& E, const Ordinal& xi) {
  if (E.empty()) return true;
  if (E.max() > universe_)
    throw ResourceError("modified-family query outside the table universe");
  std::size_t mask = 0;
  for (long long v : E) mask |= std::size_t(1) << (v - 1);
  return impl_->table(xi)[mask];
}

bool is_member_modified(const FiniteSet& E, const Ordinal& xi) {
  if (E.empty()) return true;
  if (E.max() > caps().max_bruteforce_universe)
    throw ResourceError("modified-family membership beyond brute-force cap");
  // One shared engine, regrown (and its tables rebuilt) when a larger
  // universe shows up.
  static std::optional<ModifiedMembership> engine;
  const int universe =
      std::max<int>(static_cast<int>(E.max()),
                    std::min(12, caps().max_bruteforce_universe));
  if (!engine || engine->universe() < universe) engine.emplace(universe);
  return engine->is_member(E, xi);
}

// ---------------------------------------------------------------------------
// Enumeration.

namespace {

bool enumerate_from(const Ordinal& xi, int N, FiniteSet& current,
                    const std::function<bool(const FiniteSet&)>& visit) {
  if (!visit(current)) return false;
  for (long long m = current.max() + 1; m <= N; ++m) {
    FiniteSet extended = current.appended(m);
    if (is_member(extended, xi)) {
      if (!enumerate_from(xi, N, extended, visit)) return false;
    }
  }
  return true;
}

}  // namespace

bool for_each_member(const Ordinal& xi, int N,
                     const std::function<bool(const FiniteSet&)>& visit) {
  if (N > caps().max_enumeration)
    throw ResourceError("enumeration horizon exceeds cap");
  FiniteSet empty;
  return enumerate_from(xi, N, empty, visit);
}

std::vector<FiniteSet> enumerate_members(const Ordinal& xi, int N) {
  std::vector<FiniteSet> out;
  for_each_member(xi, N, [&](const FiniteSet& E) {
    out.push_back(E);
    return true;
  });
  return out;
}

std::vector<FiniteSet> enumerate_maximal(const Ordinal& xi, int N) {
  std::vector<FiniteSet> out;
  for_each_member(xi, N, [&](const FiniteSet& E) {
    if (!E.empty() && !is_member(E.appended(E.max() + 1), xi)) out.push_back(E);
    return true;
  });
  return out;
}

std::optional<long long> tail_bound_empirical(const Ordinal& beta, const Ordinal& xi,
                                              int N) {
  if (beta > xi) throw DomainError("tail_bound_empirical: beta must be <= xi");
  // Least m with no counterexample of min >= m, i.e. 1 + the largest
  // counterexample minimum.
  long long worst = 0;
  for_each_member(beta, N, [&](const FiniteSet& E) {
    if (!E.empty() && !is_member(E, xi)) worst = std::max(worst, E.min());
    return true;
  });
  if (worst + 1 > N) return std::nullopt;
  return worst + 1;
}

// ---------------------------------------------------------------------------
// Selection procedures.

IndexStream select_union_stream(const Ordinal& gamma, const Ordinal& rho,
                                const IndexStream& K, long long n,
                                const std::vector<FiniteSet>& blocks) {
  if (rho.is_zero()) throw DomainError("select_union_stream: rho must be >= 1");
  if (n < 1) throw DomainError("select_union_stream: n must be >= 1");
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const FiniteSet& E = blocks[i];
    if (E.min() < static_cast<long long>(i) + 1)
      throw DomainError("select_union_stream: blocks must satisfy i <= E_i");
    if (i > 0 && !blocks[i - 1].empty() && !E.empty() &&
        blocks[i - 1].max() >= E.min())
      throw DomainError("select_union_stream: blocks must be successive");
    if (!is_member_An(E, gamma, n))
      throw DomainError("select_union_stream: block outside A_n[S_gamma]");
  }
  // Collapsed recursion (canonical fundamental sequences): the base rule
  // L(i) >= i*n realizes every level; see certify_union_selection.
  std::vector<long long> prefix;
  long long pos = 1;
  long long prev = 0;
  const long long kPrefixLen = 512;
  for (long long i = 1; i <= kPrefixLen; ++i) {
    while (K.at(pos) < i * n || K.at(pos) <= prev) ++pos;
    prefix.push_back(K.at(pos));
    prev = K.at(pos);
    ++pos;
  }
  // Valid arithmetic continuation inside K's own arithmetic tail: every n-th
  // K element, which keeps L(i) >= i*n.
  long long step = K.tail_step() * n;
  long long start = std::max(prefix.back() + 1, K.tail_start());
  long long offset = (start - K.tail_start()) % K.tail_step();
  if (offset != 0) start += K.tail_step() - offset;
  return IndexStream(std::move(prefix), start, step);
}

SelectionCertificate certify_union_selection(
    const Ordinal& gamma, const Ordinal& rho, const IndexStream& L,
    const std::function<FiniteSet(long long)>& block, long long index_horizon) {
  const Ordinal target = gamma + rho;
  SelectionCertificate cert;
  for_each_member(rho, static_cast<int>(index_horizon), [&](const FiniteSet& F) {
    if (F.empty()) return true;
    FiniteSet unioned;
    for (long long j : F) unioned = unioned.set_union(block(L.at(j)));
    if (!is_member(unioned, target)) {
      cert.ok = false;
      cert.failing_set = F;
      cert.detail = "union of selected blocks left S_(gamma+rho)";
      return false;
    }
    return true;
  });
  return cert;
}

IndexStream select_split_witness(const Ordinal& gamma, const Ordinal& delta) {
  (void)gamma;
  if (delta.is_zero()) return IndexStream::naturals();
  // Collapsed recursion under the canonical sequences; a shift by one
  // dominates every diagonal constraint that arises.
  return IndexStream::arithmetic(2, 1);
}

namespace {

bool split_search(const FiniteSet& E, std::size_t from, const Ordinal& gamma,
                  const Ordinal& delta, const IndexStream& M,
                  std::vector<long long>& mins, std::vector<FiniteSet>& pieces) {
  if (from == E.size()) {
    FiniteSet mapped;
    for (long long m : mins) mapped = mapped.set_union(FiniteSet{M.at(m)});
    return is_member(mapped, delta);
  }
  for (std::size_t len = 1; from + len <= E.size(); ++len) {
    FiniteSet piece = E.slice(from, len);
    if (!is_member(piece, gamma)) break;
    mins.push_back(piece.min());
    pieces.push_back(piece);
    if (split_search(E, from + len, gamma, delta, M, mins, pieces)) return true;
    mins.pop_back();
    pieces.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<FiniteSet>> certify_split_witness(const Ordinal& gamma,
                                                            const Ordinal& delta,
                                                            const IndexStream& M,
                                                            const FiniteSet& E) {
  std::vector<long long> mins;
  std::vector<FiniteSet> pieces;
  if (split_search(E, 0, gamma, delta, M, mins, pieces)) return pieces;
  return std::nullopt;
}

IndexStream select_glue_witness(const Ordinal& gamma, const Ordinal& delta) {
  (void)gamma;
  if (delta.is_zero()) return IndexStream::naturals();
  return IndexStream::arithmetic(2, 1);
}

}  // namespace schreier
