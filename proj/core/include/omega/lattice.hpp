#ifndef OMEGA_LATTICE_HPP
#define OMEGA_LATTICE_HPP

#include <array>
#include <string>
#include <vector>

#include "omega/membership.hpp"
#include "omega/profile.hpp"

namespace omega {

// One ordered pair of the achievable-product relation on profiles: which
// product profiles a pair with classes (p, q) can realize.  Every
// achievable entry is backed by an assembled witness pair (catalog ids of
// the lane mix), every excluded one by a clause of the class calculus.
struct CompWitness {
  Profile r;
  std::string plan;  // lane plan; witness ids are mix:f:<plan>, mix:g:<plan>
};

struct CompExclusion {
  Profile r;
  std::string rule;
  std::string note;
};

struct CompRelEntry {
  Profile p, q;
  ProfileSet achievable;
  std::vector<CompWitness> witnesses;
  std::vector<CompExclusion> exclusions;
};

class CompRel {
 public:
  const CompRelEntry& entry(const Profile& p, const Profile& q) const;
  ProfileSet achievable(const Profile& p, const Profile& q) const;
  const std::array<CompRelEntry, 144>& entries() const { return entries_; }
  std::string to_json() const;  // deterministic byte-for-byte

 private:
  friend CompRel build_comp_rel(int);
  std::array<CompRelEntry, 144> entries_;
};

// Builds the full 144-pair relation.  Every triple allowed by the exact
// class calculus must receive a witness plan of length at most
// search_budget, otherwise UnresolvedTriples is thrown: the enumeration
// must not rest on sampling luck.
CompRel build_comp_rel(int search_budget = 8);

// A composition-closed profile set between the base intersection and the
// full set, with the names in scope carrying the same profile set.
struct ClosedSet {
  ProfileSet profiles;
  std::vector<SemigroupName> names;
  bool endpoint = false;
};

// All composition-closed P with base ⊆ P ⊆ all twelve profiles, named and
// ordered by (size, mask).  Endpoints are included and flagged.
std::vector<ClosedSet> enumerate_interval(const CompRel& rel);

// Covering pairs of the inclusion order; edges point from the smaller set
// to the one covering it.
struct HasseEdge {
  int from = 0;
  int to = 0;
};

std::vector<HasseEdge> hasse(const std::vector<ClosedSet>& sets);

// The sets covered by `name` in the Hasse order: its maximal proper
// subsemigroups within the study.  Throws UnknownName when the name's
// profile set is not one of the enumerated sets.
std::vector<SemigroupName> maximal_in(const SemigroupName& name,
                                      const std::vector<ClosedSet>& sets);

std::string lattice_to_json(const std::vector<ClosedSet>& sets,
                            const std::vector<HasseEdge>& edges);
std::string lattice_to_dot(const std::vector<ClosedSet>& sets,
                           const std::vector<HasseEdge>& edges);

// The maximality lists of the classification, one entry per semigroup
// with the covered-by expectation implied by the proofs.  The S2 entry
// carries the published statement's (erroneous) list as well.
struct MaximalityExpectation {
  SemigroupName name;
  std::vector<SemigroupName> expected;
  bool statement_erratum = false;
  std::vector<SemigroupName> statement_list;
};

const std::vector<MaximalityExpectation>& maximality_expectations();

}  // namespace omega

#endif  // OMEGA_LATTICE_HPP
