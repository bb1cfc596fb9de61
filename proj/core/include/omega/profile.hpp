#ifndef OMEGA_PROFILE_HPP
#define OMEGA_PROFILE_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "omega/extnat.hpp"

namespace omega {

// Class of a collapse or defect value: zero, finite positive, or infinite.
enum class CdClass : std::uint8_t { Zero = 0, FinPos = 1, Inf = 2 };

// Class of an infinite-contraction-index value.
enum class KClass : std::uint8_t { Fin = 0, Inf = 1 };

CdClass classify_cd(ExtNat v);
KClass classify_k(ExtNat v);

const char* to_string(CdClass c);  // "0" | "fin" | "inf"
const char* to_string(KClass k);   // "fin" | "inf"

// Saturating class addition: the class of a sum of values with the given
// classes (Inf absorbs, FinPos + FinPos stays FinPos).
CdClass cd_add(CdClass a, CdClass b);
KClass k_add(KClass a, KClass b);

// The abstraction of a self-map of N by the classes of its collapse,
// defect and infinite contraction index.  Only 12 of the 18 grid points
// are realizable: an infinite fiber forces infinite collapse, so
// k = inf requires c = inf.
struct Profile {
  CdClass c = CdClass::Zero;
  CdClass d = CdClass::Zero;
  KClass k = KClass::Fin;

  bool valid() const { return k == KClass::Fin || c == CdClass::Inf; }

  friend bool operator==(const Profile&, const Profile&) = default;
  // Canonical order: lexicographic on (c, d, k).
  friend std::strong_ordering operator<=>(const Profile&,
                                          const Profile&) = default;

  // Position in valid_profiles(); throws UnknownProfile when invalid.
  int index() const;

  // "c=0,d=fin,k=inf" — bit-exact round trip with parse().
  std::string to_string() const;
  static Profile parse(const std::string& s);

  // {"c":"0","d":"fin","k":"inf"} — bit-exact round trip.
  std::string to_json() const;
  static Profile from_json(const std::string& json_text);
};

// Classes of an exact parameter triple.  Rejects triples with k >= 1 and
// finite c: a point with an infinite fiber removes infinitely many points
// from any transversal.
Profile classify(ExtNat c, ExtNat d, ExtNat k);

// The 12 valid profiles in canonical (lexicographic) order, starting at
// the permutation profile (Zero, Zero, Fin).
const std::array<Profile, 12>& valid_profiles();

// A subset of the 12 valid profiles, stored as a bit mask indexed by the
// canonical order.
class ProfileSet {
 public:
  constexpr ProfileSet() : bits_(0) {}
  static ProfileSet all();
  static ProfileSet of(std::initializer_list<Profile> ps);

  bool contains(const Profile& p) const;
  void insert(const Profile& p);
  void erase(const Profile& p);

  int size() const;
  bool empty() const { return bits_ == 0; }
  std::uint16_t bits() const { return bits_; }
  static ProfileSet from_bits(std::uint16_t bits);

  bool subset_of(const ProfileSet& other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  friend ProfileSet operator&(ProfileSet a, ProfileSet b) {
    return from_bits(a.bits_ & b.bits_);
  }
  friend ProfileSet operator|(ProfileSet a, ProfileSet b) {
    return from_bits(a.bits_ | b.bits_);
  }
  friend bool operator==(ProfileSet, ProfileSet) = default;

  std::vector<Profile> to_vector() const;  // canonical order
  std::string to_string() const;           // "{c=0,d=0,k=fin; ...}"

 private:
  std::uint16_t bits_;
};

// Class-level composition filter for a product f·g (f applied
// first) with profile(f) = p and profile(g) = q: the set of valid profiles
// not excluded by the five composition inequalities
//   d(g) <= d(fg) <= d(f)+d(g),   c(f) <= c(fg) <= c(f)+c(g),
//   c(g)<inf and d(f)=inf force d(fg)=inf  (and dually for c),
//   k(fg) <= k(f)+k(g).
// An over-approximation of
// achievability; the exact relation lives in comp_achievable().
ProfileSet lemma31_filter(const Profile& p, const Profile& q);

// One clause of the class-level composition calculus, with a short proof.
// Used both to certify exclusions in the composition relation and to
// explain them in serialized data.
struct CompRule {
  std::string id;
  std::string note;
};

// Exact class-level achievability for products: lemma31_filter sharpened
// by the equalities forced by an injective right factor or surjective left
// factor, and by two facts about infinite fibers.  Every r in the result
// is realized by some pair with profiles (p, q); every r outside it is
// impossible, with the reason reported by comp_excluded_by().
ProfileSet comp_achievable(const Profile& p, const Profile& q);

// The rule excluding r from comp_achievable(p, q); throws Error when r is
// in fact achievable.
CompRule comp_excluded_by(const Profile& p, const Profile& q,
                          const Profile& r);

}  // namespace omega

#endif  // OMEGA_PROFILE_HPP
