#ifndef OMEGA_CONSTRUCT_HPP
#define OMEGA_CONSTRUCT_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "omega/membership.hpp"
#include "omega/transform.hpp"

namespace omega {

// A factorization word proving membership in a generated subsemigroup.
// Factors multiply left to right; Given factors are the granted
// generators, Base factors are certified members of the base intersection
// S{1,2,3,4,5}, Perm factors are permutations.
struct Factor {
  enum class Kind { Given, Base, Perm };
  Kind kind = Kind::Base;
  std::string label;
  Transformation map;
  std::optional<Permutation> perm;  // set when kind == Perm
};

struct WindowCheck {
  std::uint64_t N = 0;
  bool ok = false;
};

struct Certificate {
  std::string lemma_tag;
  std::string target_id;
  Transformation target;
  std::vector<Factor> factors;
  std::vector<std::string> notes;     // per-step parameter justifications
  std::vector<WindowCheck> windows;   // windows checked at build time
  std::string to_json() const;
};

struct VerifyReport {
  bool ok = false;
  std::string failure;                       // empty when ok
  std::optional<std::uint64_t> mismatch_at;  // pointwise disagreement
  std::string to_json() const;
};

// Pointwise product-vs-target check on [0,N), base-membership and
// consistency of every Base factor, and round trips of every Perm factor.
VerifyReport verify_certificate(const Certificate& cert, std::uint64_t N);

// --- building blocks ---

// An injective increasing enumeration of a subset of N, with membership
// test and exact complement size.
struct ImageSpec {
  std::string description;
  std::function<std::uint64_t(std::uint64_t)> enumerate;
  std::function<bool(std::uint64_t)> member;
  ExtNat complement_size;
  std::optional<std::uint64_t> finite_size;  // set when the set is finite
};

ImageSpec image_all();
ImageSpec image_from(std::uint64_t a);  // {n : n >= a}
// The fixed transversal of u (requires the transversal oracles).
ImageSpec image_transversal_of(const Transformation& u);
// The image of u (requires in_image; complement size is d(u)).
ImageSpec image_of(const Transformation& u);
// base with its first count elements removed.
ImageSpec image_skip_prefix(const ImageSpec& base, std::uint64_t count);

enum class KernelPolicy { FiniteFibers, SingleSink };

// A map with the kernel of f and the prescribed image.
//
// FiniteFibers: x maps to image[i] where i is the ordinal of x's kernel
// class in increasing representative order, so ker(g) = ker(f) exactly and
// (c,d,k)(g) = (c(f), |complement|, k(f)).
//
// SingleSink: the designated infinite class of f (its fat class 0)
// collapses to image[0]; every other class maps injectively into the rest
// of the image, giving k(g) = 1 as in the infinite-contraction
// constructions.  Requires f's fat-class oracles.
Transformation with_kernel_and_image(const Transformation& f,
                                     const ImageSpec& image,
                                     KernelPolicy policy);

// A map whose fixed transversal is the set enumerated by sigma: sigma[i]
// maps to image[i], everything outside sigma joins image[0]'s fiber.
// sigma_complement is the exact size of N minus the sigma set.
Transformation with_transversal_and_image(
    const std::string& label,
    std::function<std::uint64_t(std::uint64_t)> sigma,
    std::function<bool(std::uint64_t)> sigma_member, ExtNat sigma_complement,
    const ImageSpec& image);

// The permutation q with g * q = f, defined by g(x) -> f(x) on the image
// and by matching the increasing enumerations of the two complements.
// Requires equal kernels (checked on a window) and equal defects.
Permutation complete_by_permutation(const Transformation& g,
                                    const Transformation& f);

// --- the generation lemmas ---

enum class LemmaPart { I, II, III, IV };

// Which of the three lemma families.
enum class LemmaFamily { Tech, Tech2, TechK };

LemmaPart parse_lemma_part(const std::string& s);    // "i".."iv"
LemmaFamily parse_lemma_family(const std::string& s);  // "tech"|"tech2"|"techk"
const char* to_string(LemmaPart p);
const char* to_string(LemmaFamily f);

// Finite-collapse generation: certificates for f over the base and u
// (and v), following the four cases of the first technical lemma.
Certificate lemma_tech(LemmaPart part, const Transformation& u,
                       const std::optional<Transformation>& v,
                       const Transformation& f);

// The dual family (collapse and defect interchanged).
Certificate lemma_tech2(LemmaPart part, const Transformation& u,
                        const std::optional<Transformation>& v,
                        const Transformation& f);

// The infinite-contraction family.
Certificate lemma_techk(LemmaPart part, const Transformation& u,
                        const std::optional<Transformation>& v,
                        const std::optional<Transformation>& t,
                        const Transformation& f);

Certificate lemma_dispatch(LemmaFamily family, LemmaPart part,
                           const Transformation& u,
                           const std::optional<Transformation>& v,
                           const std::optional<Transformation>& t,
                           const Transformation& f);

// Case analysis of the maximality propositions: picks the lemma part for
// f's profile inside the target semigroup and fills the generator slots
// from the supplied list.  Throws Error("no applicable case...") when the
// profile/generator pattern is not covered.
Certificate generate_in(const SemigroupName& target, const Transformation& f,
                        const std::vector<Transformation>& generators);

}  // namespace omega

#endif  // OMEGA_CONSTRUCT_HPP
