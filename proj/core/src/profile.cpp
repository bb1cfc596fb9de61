#include "omega/profile.hpp"

#include <sstream>

#include "omega/errors.hpp"

namespace omega {

CdClass classify_cd(ExtNat v) {
  if (v.is_infinite()) return CdClass::Inf;
  return v.finite_value() == 0 ? CdClass::Zero : CdClass::FinPos;
}

KClass classify_k(ExtNat v) {
  return v.is_infinite() ? KClass::Inf : KClass::Fin;
}

const char* to_string(CdClass c) {
  switch (c) {
    case CdClass::Zero:
      return "0";
    case CdClass::FinPos:
      return "fin";
    case CdClass::Inf:
      return "inf";
  }
  return "?";
}

const char* to_string(KClass k) {
  return k == KClass::Fin ? "fin" : "inf";
}

CdClass cd_add(CdClass a, CdClass b) {
  if (a == CdClass::Inf || b == CdClass::Inf) return CdClass::Inf;
  if (a == CdClass::Zero && b == CdClass::Zero) return CdClass::Zero;
  return CdClass::FinPos;
}

KClass k_add(KClass a, KClass b) {
  return (a == KClass::Inf || b == KClass::Inf) ? KClass::Inf : KClass::Fin;
}

namespace {

CdClass parse_cd(const std::string& tok) {
  if (tok == "0") return CdClass::Zero;
  if (tok == "fin") return CdClass::FinPos;
  if (tok == "inf") return CdClass::Inf;
  throw ParseError("bad parameter class: " + tok);
}

KClass parse_kc(const std::string& tok) {
  if (tok == "fin") return KClass::Fin;
  if (tok == "inf") return KClass::Inf;
  throw ParseError("bad k class: " + tok);
}

std::array<Profile, 12> make_valid_profiles() {
  std::array<Profile, 12> out{};
  int n = 0;
  for (int c = 0; c < 3; ++c)
    for (int d = 0; d < 3; ++d)
      for (int k = 0; k < 2; ++k) {
        Profile p{static_cast<CdClass>(c), static_cast<CdClass>(d),
                  static_cast<KClass>(k)};
        if (p.valid()) out[n++] = p;
      }
  // 3*3*2 = 18 grid points minus the 6 with k = inf, c != inf.
  if (n != 12) throw Error("profile enumeration broke");
  return out;
}

}  // namespace

const std::array<Profile, 12>& valid_profiles() {
  static const std::array<Profile, 12> table = make_valid_profiles();
  return table;
}

int Profile::index() const {
  const auto& all = valid_profiles();
  for (int i = 0; i < 12; ++i)
    if (all[i] == *this) return i;
  throw UnknownProfile("invalid profile " + to_string());
}

std::string Profile::to_string() const {
  std::string s = "c=";
  s += omega::to_string(c);
  s += ",d=";
  s += omega::to_string(d);
  s += ",k=";
  s += omega::to_string(k);
  return s;
}

Profile Profile::parse(const std::string& s) {
  // Expected shape: c=<tok>,d=<tok>,k=<tok>
  std::istringstream in(s);
  std::string part;
  std::array<std::string, 3> toks;
  int i = 0;
  while (std::getline(in, part, ',')) {
    if (i >= 3) throw ParseError("bad profile: " + s);
    toks[i++] = part;
  }
  if (i != 3 || toks[0].rfind("c=", 0) != 0 || toks[1].rfind("d=", 0) != 0 ||
      toks[2].rfind("k=", 0) != 0)
    throw ParseError("bad profile: " + s);
  Profile p{parse_cd(toks[0].substr(2)), parse_cd(toks[1].substr(2)),
            parse_kc(toks[2].substr(2))};
  if (!p.valid()) throw UnknownProfile("invalid profile " + s);
  return p;
}

std::string Profile::to_json() const {
  std::string s = "{\"c\":\"";
  s += omega::to_string(c);
  s += "\",\"d\":\"";
  s += omega::to_string(d);
  s += "\",\"k\":\"";
  s += omega::to_string(k);
  s += "\"}";
  return s;
}

Profile Profile::from_json(const std::string& text) {
  // Tiny fixed-shape reader; full JSON handling lives with the callers.
  auto grab = [&](const std::string& key) {
    auto pos = text.find("\"" + key + "\"");
    if (pos == std::string::npos) throw ParseError("bad profile json: " + text);
    pos = text.find(':', pos);
    pos = text.find('"', pos);
    auto end = text.find('"', pos + 1);
    if (pos == std::string::npos || end == std::string::npos)
      throw ParseError("bad profile json: " + text);
    return text.substr(pos + 1, end - pos - 1);
  };
  Profile p{parse_cd(grab("c")), parse_cd(grab("d")), parse_kc(grab("k"))};
  if (!p.valid()) throw UnknownProfile("invalid profile in json");
  return p;
}

Profile classify(ExtNat c, ExtNat d, ExtNat k) {
  if (k >= ExtNat(1) && c.is_finite())
    throw InvalidTriple(
        "no self-map of N has an infinite fiber and finite collapse "
        "(c=" +
        c.to_string() + ", d=" + d.to_string() + ", k=" + k.to_string() + ")");
  Profile p{classify_cd(c), classify_cd(d), classify_k(k)};
  if (!p.valid())
    throw InvalidTriple("triple classifies to an invalid profile");
  return p;
}

ProfileSet ProfileSet::all() { return from_bits(0x0FFF); }

ProfileSet ProfileSet::of(std::initializer_list<Profile> ps) {
  ProfileSet s;
  for (const auto& p : ps) s.insert(p);
  return s;
}

bool ProfileSet::contains(const Profile& p) const {
  return (bits_ >> p.index()) & 1;
}

void ProfileSet::insert(const Profile& p) {
  bits_ = static_cast<std::uint16_t>(bits_ | (1u << p.index()));
}

void ProfileSet::erase(const Profile& p) {
  bits_ = static_cast<std::uint16_t>(bits_ & ~(1u << p.index()));
}

int ProfileSet::size() const {
  int n = 0;
  for (int i = 0; i < 12; ++i) n += (bits_ >> i) & 1;
  return n;
}

ProfileSet ProfileSet::from_bits(std::uint16_t bits) {
  ProfileSet s;
  s.bits_ = static_cast<std::uint16_t>(bits & 0x0FFF);
  return s;
}

std::vector<Profile> ProfileSet::to_vector() const {
  std::vector<Profile> out;
  for (int i = 0; i < 12; ++i)
    if ((bits_ >> i) & 1) out.push_back(valid_profiles()[i]);
  return out;
}

std::string ProfileSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (const auto& p : to_vector()) {
    if (!first) s += "; ";
    s += p.to_string();
    first = false;
  }
  s += "}";
  return s;
}

namespace {

// Shared clause evaluation for the filter and the exact relation.  Returns
// the id of the first violated clause, or nullptr if r survives.  Clauses
// i-v are the class-level reading of the composition inequalities; the
// n* clauses are the
// exact sharpenings used by the composition relation.
const char* first_violation(const Profile& p, const Profile& q,
                            const Profile& r, bool exact) {
  // Composition order throughout: f then g, profile(f)=p, profile(g)=q.
  if (r.c < p.c) return "31ii_lower";
  if (r.c > cd_add(p.c, q.c)) return "31ii_upper";
  if (r.d < q.d) return "31i_lower";
  if (r.d > cd_add(p.d, q.d)) return "31i_upper";
  if (q.c != CdClass::Inf && p.d == CdClass::Inf && r.d != CdClass::Inf)
    return "31iii";
  if (p.d != CdClass::Inf && q.c == CdClass::Inf && r.c != CdClass::Inf)
    return "31iv";
  if (r.k > k_add(p.k, q.k)) return "31v";
  if (!exact) return nullptr;
  if (p.k == KClass::Inf && q.c != CdClass::Inf && r.k != KClass::Inf)
    return "n_k_spread";
  if (q.k == KClass::Inf && p.d != CdClass::Inf && r.k != KClass::Inf)
    return "n_k_hit";
  if (q.c == CdClass::Zero) {
    if (r.c != p.c) return "n_inj_c";
    if (r.k != p.k) return "n_inj_k";
    if (r.d != cd_add(p.d, q.d)) return "n_inj_d";
  }
  if (p.d == CdClass::Zero) {
    if (r.d != q.d) return "n_surj_d";
    if (r.c != cd_add(p.c, q.c)) return "n_surj_c";
  }
  return nullptr;
}

ProfileSet survivors(const Profile& p, const Profile& q, bool exact) {
  ProfileSet out;
  for (const auto& r : valid_profiles())
    if (first_violation(p, q, r, exact) == nullptr) out.insert(r);
  return out;
}

CompRule describe(const std::string& id) {
  if (id == "31ii_lower")
    return {id, "c(f) <= c(fg): the product collapses whatever f collapses"};
  if (id == "31ii_upper")
    return {id, "c(fg) <= c(f)+c(g): collapse beyond f's happens inside g"};
  if (id == "31i_lower")
    return {id, "d(g) <= d(fg): the product misses whatever g misses"};
  if (id == "31i_upper")
    return {id, "d(fg) <= d(f)+d(g): a missed value comes from a missed point of f or of g"};
  if (id == "31iii")
    return {id, "c(g)<inf and d(f)=inf force d(fg)=inf: infinitely many singleton classes of g sit inside the complement of im(f)"};
  if (id == "31iv")
    return {id, "d(f)<inf and c(g)=inf force c(fg)=inf: a cofinite image keeps infinitely much of g's collapse"};
  if (id == "31v")
    return {id, "k(fg) <= k(f)+k(g): an infinite fiber of the product needs an infinite fiber of f or of g"};
  if (id == "n_k_spread")
    return {id,
            "with c(g)<inf all but finitely many kernel classes of g are "
            "singletons, so g maps the infinitely many infinite-fiber image "
            "points of f onto an infinite set and k(fg)=inf"};
  if (id == "n_k_hit")
    return {id,
            "with d(f)<inf the image of f is cofinite, so every infinite "
            "fiber of g keeps an infinite preimage under fg and k(fg)=inf"};
  if (id == "n_inj_c")
    return {id, "g injective: ker(fg)=ker(f), so c(fg)=c(f)"};
  if (id == "n_inj_k")
    return {id, "g injective: fibers of fg are exactly fibers of f"};
  if (id == "n_inj_d")
    return {id,
            "g injective: the complement of im(fg) is the complement of "
            "im(g) plus the g-image of the complement of im(f), so "
            "d(fg)=d(f)+d(g)"};
  if (id == "n_surj_d")
    return {id, "f surjective: im(fg)=im(g), so d(fg)=d(g)"};
  if (id == "n_surj_c")
    return {id,
            "f surjective: g restricted to im(f) is g itself, so "
            "c(fg)=c(f)+c(g)"};
  throw Error("unknown composition rule " + id);
}

}  // namespace

ProfileSet lemma31_filter(const Profile& p, const Profile& q) {
  return survivors(p, q, /*exact=*/false);
}

ProfileSet comp_achievable(const Profile& p, const Profile& q) {
  return survivors(p, q, /*exact=*/true);
}

CompRule comp_excluded_by(const Profile& p, const Profile& q,
                          const Profile& r) {
  const char* id = first_violation(p, q, r, /*exact=*/true);
  if (id == nullptr)
    throw Error("profile " + r.to_string() + " is achievable from " +
                p.to_string() + " , " + q.to_string());
  return describe(id);
}

}  // namespace omega
