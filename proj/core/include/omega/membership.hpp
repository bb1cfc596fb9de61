#ifndef OMEGA_MEMBERSHIP_HPP
#define OMEGA_MEMBERSHIP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "omega/profile.hpp"
#include "omega/transform.hpp"

namespace omega {

// The seven name atoms.  S1..S5 are the maximal subsemigroups of the full
// transformation semigroup containing the symmetric group; U and V are the
// two extra semigroups of the classification.
enum class Atom : std::uint8_t { S1 = 0, S2, S3, S4, S5, U, V };

// A semigroup name: an intersection of atoms, the empty intersection being
// the full transformation semigroup.  Equality of names is syntactic on
// the canonical atom set; semantic equality (equal profile sets) is
// exposed separately.
class SemigroupName {
 public:
  SemigroupName() = default;  // the full transformation semigroup

  static SemigroupName full() { return SemigroupName(); }
  static SemigroupName of(std::initializer_list<Atom> atoms);

  // Accepts "Omega", "U", "V", "S3", "S{1,3}", "U&S{1,5}", "V&S1", ...
  static SemigroupName parse(const std::string& s);

  bool has(Atom a) const { return (bits_ >> static_cast<int>(a)) & 1; }
  bool is_full() const { return bits_ == 0; }
  SemigroupName with(Atom a) const;

  std::vector<Atom> atoms() const;

  // "Omega", "S1", "S{1,2,5}", "U&S{1,5}", ...
  std::string to_string() const;

  friend bool operator==(const SemigroupName&, const SemigroupName&) = default;
  friend auto operator<=>(const SemigroupName&, const SemigroupName&) = default;

 private:
  std::uint8_t bits_ = 0;
};

// Exact subset of the 12 profiles satisfying the atom's defining condition
// (the symmetric group contributes the profile (0,0,fin)).
ProfileSet atom_profiles(Atom a);

// Intersection semantics over the atoms; the full semigroup maps to all 12.
ProfileSet profile_set(const SemigroupName& name);

bool semantically_equal(const SemigroupName& a, const SemigroupName& b);

// Membership of a transformation, decided by its certified profile.
// Throws CapabilityMissing when no certified profile is present.
bool contains(const SemigroupName& name, const Transformation& f);

// The 40 semigroups under study: the full semigroup, the 30 proper
// intersections of S1..S5, the 8 extra named semigroups, and the base
// intersection S{1,2,3,4,5}.  Canonical spellings, fixed order, pairwise
// distinct profile sets.
const std::vector<SemigroupName>& names_in_scope();
const SemigroupName& base_name();

// Names in scope with exactly this profile set.
std::vector<SemigroupName> names_for(const ProfileSet& set);

// --- classification table as data ---

struct TableRow {
  SemigroupName name;
  std::string description;  // disjunctive parameter condition, as data
  ProfileSet parsed;
};

struct CrosscheckRow {
  TableRow row;
  ProfileSet computed;
  bool match = false;
};

struct CrosscheckReport {
  std::vector<CrosscheckRow> rows;
  int mismatches = 0;
  int interval_rows = 0;  // rows other than the base intersection
  std::string to_json() const;
};

// Parses a disjunctive description like
//   "( c=inf & d=inf ) or ( 0<d<inf ) or sym"
// into the subset of the 12 profiles satisfying it.
ProfileSet parse_description(const std::string& description);

// One row per line: "<name> | <description>".  '#' starts a comment.
std::vector<TableRow> load_table(const std::string& path);

// Re-derives every row's profile set from the atom semantics and compares
// with the parsed description.  Mismatches are report content, not errors.
CrosscheckReport table_crosscheck(const std::string& path);
CrosscheckReport table_crosscheck();  // default table location

// Directory holding the data files: OMEGA_DATA_DIR when set, otherwise the
// source tree's data directory.
std::string default_data_dir();

}  // namespace omega

#endif  // OMEGA_MEMBERSHIP_HPP
