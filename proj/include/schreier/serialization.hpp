#pragma once

#include <json.hpp>

#include "schreier/norms.hpp"
#include "schreier/operators.hpp"
#include "schreier/pairs.hpp"

namespace schreier {

using Json = nlohmann::json;

// Rationals travel as "p/q" in lowest terms.
std::string rational_to_wire(const Rational& q);
Rational rational_from_wire(const std::string& text);

Json encode(const FiniteSet& E);
FiniteSet decode_finite_set(const Json& j);

// {"prefix": [...], "tail": {"start": s, "step": d}} or {"all_naturals": true}
Json encode(const IndexStream& M);
IndexStream decode_index_stream(const Json& j);

// {"entries": [[index, "p/q"], ...]}
Json encode(const RationalVector& x);
RationalVector decode_rational_vector(const Json& j);

Json encode(const NormCertificate& c);
Json encode(const SchreierPair& p);
Json encode(const PairCertificate& c);
Json encode(const FiniteOperator& T);
FiniteOperator decode_operator(const Json& j);
Json encode(const IntervalSet& s);
Json encode(const SsWitnessResult& w);
Json encode(const SsChainResult& chain);
Json encode(const DyadicFamily& fam);
Json encode(const InjectivityReport& r);
Json encode(const WeakSummingReport& r);
Json encode(const BetaProfile& profile);

}  // namespace schreier
