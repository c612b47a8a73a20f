#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scst/cobordism.hpp"
#include "scst/multipoly.hpp"

namespace scst {

/// a_{A+2k,0,l-k} * SW^{w,A+2k}(h) * Q(h)^{l-k}. The Q power is kept symbolic.
struct RelationTerm {
  long k = 0;
  long sw_degree = 0;
  long q_power = 0;
  CoefficientValue coefficient;
  /// Left unexpanded (and sw_evaluated false) when the coefficient is KnownZero.
  MultiPoly sw;
  bool sw_evaluated = false;
};

struct VanishingRelation {
  std::string manifold;
  RelationParams params;
  CohClass w;
  RationalMatrix quadratic;  // Gram matrix of Q, for expansion
  std::vector<RelationTerm> terms;
};

/// Throws NotStandard, NotSimpleType, NotCharacteristic, Inadmissible.
VanishingRelation build_vanishing_relation(const FourManifold& m, const CohClass& w, long n, long mm);

enum class RelationVerdict { Consistent, Indeterminate, Violated };
std::string to_string(RelationVerdict verdict);

struct RelationCheck {
  RelationVerdict verdict = RelationVerdict::Consistent;
  std::string reason;
  std::vector<long> nonzero_terms;  // k of every term not provably zero
};

RelationCheck check_vanishing_relation(const VanishingRelation& rel);

struct PreparedManifold {
  FourManifold manifold;
  CohClass w;
  int blowups = 0;
};

/// Blows up until c1^2 != 0 and 0 is not a basic class; w follows as w - e*.
PreparedManifold prepare_for_replay(const FourManifold& m, const CohClass& w);

enum class ReplayRule { Leading, InductivelyZero, CoefficientZero };
std::string to_string(ReplayRule rule);

struct ReplayTerm {
  long k = 0;
  long sw_degree = 0;
  long q_power = 0;
  ReplayRule rule = ReplayRule::Leading;
  CoefficientValue coefficient;
  bool sw_zero = false;  // what the data says
};

struct ReplayStep {
  long v = 0;
  RelationParams params;
  std::vector<ReplayTerm> terms;
  long concluded_degree = 0;  // SW^{w, c - 2v} = 0 is the conclusion
  bool verified = false;
  RelationVerdict relation_verdict = RelationVerdict::Consistent;
  std::string note;
};

struct ReplayCertificate {
  std::string manifold;
  CharNumbers numbers;
  std::vector<ReplayStep> steps;
  bool verified = false;
  std::optional<long> failed_v;
};

/// Induction over v = 2..floor(c/2) with n = 3, m = v - 2. Stops at the first
/// step whose forced conclusion is contradicted by the data.
/// Throws ZeroBasicClass when 0 is a basic class, NotSimpleType, NotStandard.
ReplayCertificate induction_replay(const FourManifold& m, const CohClass& w);

}  // namespace scst
