#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "taylor/algebra.hpp"
#include "taylor/closure.hpp"
#include "taylor/edges.hpp"
#include "taylor/free_algebra.hpp"
#include "taylor/subset.hpp"
#include "taylor/term.hpp"

namespace taylor {

enum class AbsorptionKind { Binary, Ternary, NAry, Projective, StronglyProjective, AbsorbingElement };
std::string to_string(AbsorptionKind k);

/// Certificate for B absorbing A. Either a witness operation, or the closed
/// set (B x A) u (A x B) of A^2 for the structural ternary test.
struct AbsorptionWitness {
  Subset B;
  AbsorptionKind kind = AbsorptionKind::Binary;
  std::optional<TermOperation> term;
  std::vector<Tuple> certificate;
  std::string method;
};

/// t(a_1..a_k) lands in B whenever at most one a_i lies outside B.
bool witnesses_absorption(const TermOperation& t, const Subset& B);

struct BinaryAbsorption {
  bool absorbing = false;
  bool subuniverse = false;
  std::optional<AbsorptionWitness> witness;
  /// False when F(2) was incomplete and only asm-closedness decided.
  bool two_methods = true;
  bool asm_closed = false;
};

/// Decides B <|_2 A by witness search in F(2) and by asm-closedness in
/// `edges`, computed on demand. Throws CrossCheckFailed when they disagree.
BinaryAbsorption is_2_absorbing(const FiniteAlgebra& alg, const Subset& B, const EdgeGraph* edges = nullptr,
                                std::size_t cap = kDefaultClosureCap);

struct TernaryAbsorption {
  bool absorbing = false;
  AbsorptionWitness certificate;  // structural closure of (B x A) u (A x B)
  std::optional<AbsorptionWitness> witness;  // ternary term, when one was searched and found
  /// Whether the complete F(3) was searched; it then agrees with `absorbing`.
  bool cross_checked = false;
};

/// Decides B <|_3 A by closing (B x A) u (A x B) in A^2. When F(3) completes
/// within `cap`, a ternary witness search must agree (CrossCheckFailed otherwise).
TernaryAbsorption is_3_absorbing(const FiniteAlgebra& alg, const Subset& B, std::size_t cap = kDefaultClosureCap);

struct Projectivity {
  unsigned verified_cap = 0;  // largest k with F(2..k) complete
  bool projective_upto = true;
  bool strongly_projective_upto = true;
  bool absorbing_element = false;
  std::optional<TermOperation> projective_counterexample;
  std::optional<TermOperation> strong_counterexample;
};

/// Projectivity of B over every term operation of arity <= arity_cap. Stops
/// lowering verified_cap at the first incomplete free algebra.
Projectivity bounded_projectivity(const FiniteAlgebra& alg, const Subset& B, unsigned arity_cap = 3,
                                  std::size_t cap = kDefaultClosureCap);

struct SubsetClassification {
  Subset B;
  bool subuniverse = false;
  BinaryAbsorption binary;
  TernaryAbsorption ternary;
  std::optional<Projectivity> projectivity;  // subuniverses only
};

struct TransportCheck {
  std::string quotient;  // quotient algebra name
  std::string direction;  // "image" or "preimage"
  Subset from, to;
  AbsorptionKind kind = AbsorptionKind::Binary;
  bool holds = false;
};

struct AbsorptionReport {
  std::string algebra;
  std::vector<SubsetClassification> subsets;  // ascending by Subset order
  unsigned projectivity_cap = 0;
  std::vector<std::string> failures;  // audit violations, empty when all hold
  std::vector<TransportCheck> transports;

  bool ok() const { return failures.empty(); }
  const SubsetClassification* find(const Subset& B) const;
};

/// Classifies every nonempty subset. Audits: absorbing sets are subuniverses;
/// <|_2 iff projective iff strongly projective up to the verified cap; the
/// witness of each absorbing set transports along every quotient map.
AbsorptionReport absorption_report(const FiniteAlgebra& alg, std::size_t subset_cap = 6,
                                   unsigned projectivity_cap = 3, std::size_t cap = kDefaultClosureCap);

}  // namespace taylor
