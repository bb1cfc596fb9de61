#ifndef OMEGA_CATALOG_HPP
#define OMEGA_CATALOG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "omega/transform.hpp"

namespace omega {

// Cantor pairing, fixed bit-exactly: for unpairing n, w is the largest
// integer with w(w+1)/2 <= n, j = n - w(w+1)/2 and i = w - j.  pair(i,j)
// inverts this.
std::uint64_t cantor_pair(std::uint64_t i, std::uint64_t j);
std::uint64_t cantor_first(std::uint64_t n);
std::uint64_t cantor_second(std::uint64_t n);

// Named witnesses.  The first twelve ids are the stable external ones:
//   id, succ, double, pred, merge01, merge01_double, halve, halve_shift,
//   stride4, cproj, cproj_shift, cproj_double
// covering all twelve profiles; the rest are documented auxiliary variants
// used by the composition-relation witness search and the test suites.
// Every entry carries a formula-certified exact parameter triple and full
// structural oracles.
const std::vector<std::string>& catalog_ids();
bool has_witness(const std::string& id);
const Transformation& witness(const std::string& id);  // UnknownWitness

// Witnesses of the given profile, mandatory ones first.  Throws
// UnknownProfile on an invalid profile.
std::vector<Transformation> catalog(const Profile& p);

const std::vector<Transformation>& all_witnesses();

// The twelve mandatory witnesses in canonical profile order.
const std::vector<Transformation>& mandatory_witnesses();

}  // namespace omega

#endif  // OMEGA_CATALOG_HPP
