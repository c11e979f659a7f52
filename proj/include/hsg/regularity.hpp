#ifndef HSG_REGULARITY_HPP_
#define HSG_REGULARITY_HPP_

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hsg/hypergroupoid.hpp"
#include "hsg/ideals.hpp"
#include "hsg/semigroup.hpp"

namespace hsg {

// Outcome of the regularity check. `element_chains[x]` is {x} * H * {x};
// the structure is regular iff every x lies in its own chain. The chains
// replay through product_chain.
struct RegularityEvidence {
  bool regular;
  std::vector<Subset> element_chains;
  std::optional<int> failing_element;  // least offender when not regular
};

// Regularity is decided element-wise: x in {x} * H * {x} for every x. This is
// equivalent to the all-subsets form A in A * H * A by monotonicity of the
// product; the test suite verifies the equivalence against a brute-force
// oracle. Requires a hypersemigroup.
RegularityEvidence regularity_evidence(const Hypergroupoid& h);
bool is_regular(const Hypergroupoid& h);

enum class TheoremTag {
  prop7,
  thm8,
  thm9,
  thm12_forward,
  thm12_backward,
  lemma11,
  cor13,
  cor14,
};

const char* to_string(TheoremTag t);

// Replayable refutation: the structure plus the named subsets that violate
// the claim.
struct VerificationWitness {
  Hypergroupoid structure;
  std::map<std::string, Subset> subsets;
  std::string detail;
};

struct VerificationReport {
  TheoremTag theorem;
  bool holds;
  std::string detail;  // human-readable summary, e.g. per-direction verdicts
  std::optional<VerificationWitness> witness;
};

// C * D is a bi-ideal whenever C is a right ideal and D nonempty, or D is a
// left ideal and C nonempty. Sweeps every such pair. Requires a
// hypersemigroup.
VerificationReport verify_proposition7(const Hypergroupoid& h);

// On a regular hypersemigroup, every bi-ideal B equals R(B) * L(B); also
// checks the proof identities B = B * H * B and B * B in B. Requires a
// regular hypersemigroup.
VerificationReport verify_theorem8(const Hypergroupoid& h);

// Both directions of the bi-ideal representation: products of right ideals
// with left ideals are bi-ideals, and every bi-ideal is such a product.
// Requires a regular hypersemigroup.
VerificationReport verify_theorem9(const Hypergroupoid& h);

// Both directions of the regularity criterion, verified independently.
// LHS: regularity. RHS: right and left ideals idempotent, and A * B a
// quasi-ideal for every right ideal A and left ideal B. The forward report
// covers LHS implies RHS (plus the proof identity A * B = A n B on regular
// tables); the backward report covers RHS implies LHS. Requires a
// hypersemigroup.
std::pair<VerificationReport, VerificationReport> verify_theorem12(
    const Hypergroupoid& h);

// A n B is nonempty for every right ideal A and left ideal B, and every cell
// (a, b) with a in A, b in B lands inside A n B. Defined on any
// hypergroupoid.
VerificationReport verify_lemma11(const Hypergroupoid& h);

// The bi-ideal representation theorem restated for plain semigroups, checked
// entirely through the classical oracle. Requires a singleton-celled table
// whose semigroup is regular.
VerificationReport verify_corollary13(const Hypergroupoid& h);

// The regularity criterion for plain semigroups via the classical oracle,
// checked as an equivalence. Requires a singleton-celled associative table.
VerificationReport verify_corollary14(const Hypergroupoid& h);

}  // namespace hsg

#endif  // HSG_REGULARITY_HPP_
