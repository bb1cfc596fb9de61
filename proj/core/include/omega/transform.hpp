#ifndef OMEGA_TRANSFORM_HPP
#define OMEGA_TRANSFORM_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "omega/extnat.hpp"
#include "omega/profile.hpp"

namespace omega {

// A profile attached to a transformation together with how it was obtained.
// Formula: read off a closed-form definition.  Construction: derived from
// the way the object was built (composition rules, kernel/image builders).
// Exact parameter values are carried when known; class-only certification
// leaves them empty.
struct CertifiedProfile {
  enum class Provenance { Formula, Construction };

  Profile profile;
  Provenance provenance = Provenance::Formula;
  std::optional<ExtNat> exact_c;
  std::optional<ExtNat> exact_d;
  std::optional<ExtNat> exact_k;
  std::string note;

  static CertifiedProfile formula(ExtNat c, ExtNat d, ExtNat k,
                                  std::string note = {});
  static CertifiedProfile construction(ExtNat c, ExtNat d, ExtNat k,
                                       std::string note = {});
};

// An immutable total computable self-map of N.  Evaluation is always
// available; the structural oracles are optional and power the
// constructive machinery.  Handles are cheap to copy and safe to share
// across threads (internal memo tables are guarded).
class Transformation {
 public:
  using Eval = std::function<std::uint64_t(std::uint64_t)>;

  struct Capabilities {
    // Least element of the kernel class of n (idempotent, constant on
    // fibers of eval).
    std::function<std::uint64_t(std::uint64_t)> ker_rep;
    // Decides m ∈ im(f).
    std::function<bool(std::uint64_t)> in_image;
    // i-th element of N \ im(f) in increasing order; throws ImageExhausted
    // past the end of a finite complement.
    std::function<std::uint64_t(std::uint64_t)> image_complement;
    // i-th element of a fixed transversal in increasing order: f restricted
    // to it is injective and covers im(f) exactly.
    std::function<std::uint64_t(std::uint64_t)> transversal;
    std::function<bool(std::uint64_t)> transversal_member;
    // Size of the kernel class containing n.
    std::function<ExtNat(std::uint64_t)> fiber_size;
    // j-th element (increasing) of the i-th infinite kernel class, classes
    // ordered by their least elements.
    std::function<std::uint64_t(std::uint64_t, std::uint64_t)>
        fat_class_member;
    // Index of the infinite kernel class whose image value is m, if any.
    std::function<std::optional<std::uint64_t>(std::uint64_t)>
        fat_image_index;
  };

  Transformation() = default;
  Transformation(std::string id, std::string description, Eval eval,
                 std::optional<CertifiedProfile> certified = std::nullopt,
                 Capabilities caps = {});

  std::uint64_t operator()(std::uint64_t n) const;

  const std::string& id() const;
  const std::string& description() const;
  const std::optional<CertifiedProfile>& certified() const;
  const Capabilities& caps() const;

  bool has_certified() const { return certified().has_value(); }
  // Certified profile or throws CapabilityMissing.
  const CertifiedProfile& certified_or_throw() const;
  // Exact parameter or throws CapabilityMissing.
  ExtNat exact_c() const;
  ExtNat exact_d() const;
  ExtNat exact_k() const;

  // Returns a copy with a different certified profile (used by tests and
  // by builders that refine certification).
  Transformation with_certified(std::optional<CertifiedProfile> cp) const;
  Transformation with_id(std::string id) const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

// A bijection with both directions materialized.
struct Permutation {
  Transformation forward;
  Transformation backward;
};

Permutation make_permutation(std::string id, std::string description,
                             Transformation::Eval fwd,
                             Transformation::Eval bwd);

// Composition written left to right, as products are in the underlying
// algebra: the result maps n to g(f(n)).  The certified profile is set
// only when the factors force it (a permutation factor, an injective right
// factor, a surjective left factor, or a class filter with one survivor);
// capabilities transfer only where exactly computable.
Transformation compose(const Transformation& f, const Transformation& g);

// Finite-window proxies for the three parameters:
//   c_obs = N - |f([0,N))|                        (never exceeds c(f))
//   d_obs = #{m < N with no preimage in [0,B)}    (can overshoot d(f);
//                                                  non-increasing in B)
//   k_obs = #{m < N whose fiber within [0,B) has size >= T}
struct WindowParams {
  std::uint64_t N = 100;
  std::uint64_t B = 1000;
  std::uint64_t T = 3;
};

struct WindowReport {
  std::uint64_t N = 0, B = 0, T = 0;
  std::uint64_t c_obs = 0, d_obs = 0, k_obs = 0;
  std::string to_json() const;
};

// Requires B >= N >= 1 and T >= 2.
WindowReport window_report(const Transformation& f, std::uint64_t N,
                           std::uint64_t B, std::uint64_t T);

using Schedule = std::vector<WindowParams>;

// (100,1000,3), (400,4000,3), (1600,16000,3).  T = 3 keeps the fiber-2
// maps like n -> floor(n/2) out of the k count.
const Schedule& default_schedule();

struct ConsistencyReport {
  bool passed = false;
  std::string first_violation;  // empty when passed
  std::vector<WindowReport> reports;
};

// Checks the certified classes of f against window observations over the
// schedule: zero classes must show nothing, finite classes must settle,
// infinite classes must keep growing.  Clauses are phrased only in sound
// directions: the collapse proxy never overshoots and is used as is; the
// defect count comes from the image oracle when present (d_obs at a fixed
// bound overestimates, so without an oracle the bound is doubled until the
// count settles); the contraction clause counts fibers that reach the
// threshold and are still growing at twice the bound, so large finite
// fibers drop out.  Requires a certified profile and a schedule strictly
// increasing in N.
ConsistencyReport consistency_check(const Transformation& f,
                                    const Schedule& schedule);
ConsistencyReport consistency_check(const Transformation& f);

// Same check, throwing InconsistentCertification on the first violated
// clause.
void require_consistent(const Transformation& f, const Schedule& schedule);

// Classes read off the schedule observations alone; a coordinate is left
// empty when the observations fit no clause.
struct EstimatedClasses {
  std::optional<CdClass> c;
  std::optional<CdClass> d;
  std::optional<KClass> k;
};

EstimatedClasses estimate_classes(const Transformation& f,
                                  const Schedule& schedule);

// All three coordinates determined and forming a valid profile.
std::optional<Profile> estimate_profile(const Transformation& f,
                                        const Schedule& schedule);

// True when the estimate could be a member of the set: every determined
// coordinate matches some profile in it.
bool estimate_consistent_with(const EstimatedClasses& est,
                              const ProfileSet& set);

namespace detail {

// Memoized increasing enumeration of {m : member(m)}.  The callable is
// shared state; copies enumerate the same set.
std::function<std::uint64_t(std::uint64_t)> enum_from_member(
    std::function<bool(std::uint64_t)> member, std::string what);

// Least preimage of a value under eval, found by scanning 0,1,2,...
// Diverges on values outside the image, so gate calls with an image test;
// a hard cap turns runaway scans into errors.
std::function<std::uint64_t(std::uint64_t)> section_scan(
    Transformation::Eval eval, std::string what);

// Transversal of an arbitrary map, derived by keeping each n whose value
// was not produced by any smaller argument.  Increasing by construction.
struct ScanTransversal {
  std::function<std::uint64_t(std::uint64_t)> enumerate;
  std::function<bool(std::uint64_t)> member;
};
ScanTransversal transversal_by_scan(Transformation::Eval eval,
                                    std::string what);

}  // namespace detail

}  // namespace omega

#endif  // OMEGA_TRANSFORM_HPP
