#ifndef OMEGA_LANES_HPP
#define OMEGA_LANES_HPP

#include <optional>
#include <string>
#include <vector>

#include "omega/transform.hpp"

namespace omega::lanes {

// One building block of a witness pair: catalog maps f, g and the catalog
// map their product equals pointwise.  Exact parameters of all three come
// from the catalog, so the parameters of any lane-interleaved combination
// are exact sums.
struct PrimitivePair {
  std::string name;
  std::string f_id;
  std::string g_id;
  std::string h_id;  // pointwise equal to f then g
};

const std::vector<PrimitivePair>& primitive_pairs();

// Interleaves the component maps over residue lanes modulo the component
// count: lane t evolves by component t on the quotient coordinate.  All
// nine parameters add across lanes, and every oracle lifts.
Transformation lane_combine(const std::vector<Transformation>& components,
                            const std::string& id);

// A plan is a multiset of primitive pairs, given as sorted indices into
// primitive_pairs().  solve_plan finds the shortest plan whose lane sums
// realize exactly (p, q, r) = (profile f, profile g, profile of f then g),
// deterministically; nullopt when no combination of primitives fits.
std::optional<std::vector<int>> solve_plan(const Profile& p, const Profile& q,
                                           const Profile& r);

struct WitnessPair {
  Transformation f;
  Transformation g;
  Transformation h;  // lane combination of the primitive products
  std::string plan;  // "+"-joined primitive names
};

WitnessPair assemble(const std::vector<int>& plan);

std::string plan_to_string(const std::vector<int>& plan);

}  // namespace omega::lanes

#endif  // OMEGA_LANES_HPP
