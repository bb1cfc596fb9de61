#include "omega/construct.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <unordered_map>

#include "omega/catalog.hpp"
#include "omega/errors.hpp"

namespace omega {

namespace {

using u64 = std::uint64_t;
const ExtNat kInf = ExtNat::infinity();

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

// --- kernel-class machinery over a map with a ker_rep oracle ---

// Ordinals of kernel-class representatives in increasing order, with an
// option to skip one designated representative (used by the sink
// constructions, which re-index the remaining classes from 1).
struct RepIndexer {
  Transformation f;
  std::optional<u64> skip;
  struct State {
    std::mutex mu;
    std::vector<u64> reps;
    std::map<u64, u64> ordinal;
    u64 scanned = 0;
  };
  std::shared_ptr<State> st = std::make_shared<State>();

  u64 ordinal_of(u64 rep) const {
    std::lock_guard<std::mutex> lock(st->mu);
    constexpr u64 kCap = u64{1} << 26;
    for (;;) {
      auto it = st->ordinal.find(rep);
      if (it != st->ordinal.end()) return it->second;
      if (st->scanned > kCap)
        throw Error("kernel representative scan exceeded cap on " + f.id());
      u64 n = st->scanned++;
      if (f.caps().ker_rep(n) == n && !(skip && *skip == n)) {
        st->ordinal.emplace(n, st->reps.size());
        st->reps.push_back(n);
      }
    }
  }

  u64 rep_at(u64 i) const {
    std::lock_guard<std::mutex> lock(st->mu);
    constexpr u64 kCap = u64{1} << 26;
    while (st->reps.size() <= i) {
      if (st->scanned > kCap)
        throw Error("kernel representative scan exceeded cap on " + f.id());
      u64 n = st->scanned++;
      if (f.caps().ker_rep(n) == n && !(skip && *skip == n)) {
        st->ordinal.emplace(n, st->reps.size());
        st->reps.push_back(n);
      }
    }
    return st->reps[i];
  }
};

// Position of x inside its kernel class (0-based, increasing order).
struct ClassPosition {
  Transformation f;
  struct State {
    std::mutex mu;
    std::unordered_map<u64, std::vector<u64>> members;
    u64 scanned = 0;
  };
  std::shared_ptr<State> st = std::make_shared<State>();

  u64 position_of(u64 x) const {
    std::lock_guard<std::mutex> lock(st->mu);
    while (st->scanned <= x) {
      u64 n = st->scanned++;
      st->members[f.caps().ker_rep(n)].push_back(n);
    }
    const auto& v = st->members[f.caps().ker_rep(x)];
    auto it = std::lower_bound(v.begin(), v.end(), x);
    return static_cast<u64>(it - v.begin());
  }
};

// Ordinal of m inside an increasing enumeration.
struct EnumOrdinal {
  std::function<u64(u64)> enumerate;
  std::string what;
  struct State {
    std::mutex mu;
    std::map<u64, u64> ordinal;
    u64 next = 0;
    u64 last = 0;
  };
  std::shared_ptr<State> st = std::make_shared<State>();

  u64 ordinal_of(u64 m) const {
    std::lock_guard<std::mutex> lock(st->mu);
    constexpr u64 kCap = u64{1} << 26;
    for (;;) {
      auto it = st->ordinal.find(m);
      if (it != st->ordinal.end()) return it->second;
      if (st->next > 0 && st->last > m)
        throw Error(what + ": value " + std::to_string(m) +
                    " is not in the enumerated set");
      if (st->next > kCap) throw Error(what + ": enumeration scan cap hit");
      u64 v = enumerate(st->next);
      st->ordinal.emplace(v, st->next);
      st->last = v;
      ++st->next;
    }
  }
};

Transformation certified_composite(std::string id, std::string desc,
                                   Transformation::Eval eval,
                                   CertifiedProfile cert,
                                   Transformation::Capabilities caps) {
  return Transformation(std::move(id), std::move(desc), std::move(eval),
                        std::move(cert), std::move(caps));
}

std::function<u64(u64)> complement_from_member(std::function<bool(u64)> member,
                                               ExtNat complement_size,
                                               const std::string& what) {
  if (complement_size == ExtNat(0))
    return [what](u64) -> u64 {
      throw ImageExhausted(what + " has empty complement");
    };
  auto raw = detail::enum_from_member(
      [member = std::move(member)](u64 m) { return !member(m); },
      what + " complement");
  if (complement_size.is_infinite()) return raw;
  u64 size = complement_size.finite_value();
  return [raw, size, what](u64 i) -> u64 {
    if (i >= size)
      throw ImageExhausted(what + ": complement has " + std::to_string(size) +
                           " elements");
    return raw(i);
  };
}

// Non-singleton kernel classes of a map with finite exact collapse,
// found by scanning until the full collapse is accounted for.
std::vector<std::vector<u64>> collision_classes(const Transformation::Eval& eval,
                                                u64 total_collapse,
                                                const std::string& what) {
  std::vector<std::vector<u64>> out;
  if (total_collapse == 0) return out;
  std::map<u64, std::vector<u64>> fibers;
  u64 found = 0;
  constexpr u64 kCap = u64{1} << 22;
  for (u64 n = 0;; ++n) {
    if (n > kCap)
      throw Error("collision scan cap hit on " + what);
    auto& v = fibers[eval(n)];
    v.push_back(n);
    if (v.size() >= 2) {
      ++found;
      if (found == total_collapse) break;
    }
  }
  for (auto& [value, v] : fibers)
    if (v.size() >= 2) out.push_back(std::move(v));
  return out;
}

}  // namespace

// --- image specs ---

ImageSpec image_all() {
  ImageSpec s;
  s.description = "N";
  s.enumerate = [](u64 i) { return i; };
  s.member = [](u64) { return true; };
  s.complement_size = ExtNat(0);
  return s;
}

ImageSpec image_from(u64 a) {
  ImageSpec s;
  s.description = "{n >= " + std::to_string(a) + "}";
  s.enumerate = [a](u64 i) { return i + a; };
  s.member = [a](u64 m) { return m >= a; };
  s.complement_size = ExtNat(a);
  return s;
}

ImageSpec image_transversal_of(const Transformation& u) {
  if (!u.caps().transversal || !u.caps().transversal_member)
    throw CapabilityMissing("transversal oracles missing on " + u.id());
  ImageSpec s;
  s.description = "transversal of " + u.id();
  s.enumerate = u.caps().transversal;
  s.member = u.caps().transversal_member;
  s.complement_size = u.exact_c();
  return s;
}

ImageSpec image_of(const Transformation& u) {
  if (!u.caps().in_image)
    throw CapabilityMissing("in_image oracle missing on " + u.id());
  ImageSpec s;
  s.description = "image of " + u.id();
  s.member = u.caps().in_image;
  s.enumerate =
      detail::enum_from_member(u.caps().in_image, "image of " + u.id());
  s.complement_size = u.exact_d();
  return s;
}

ImageSpec image_skip_prefix(const ImageSpec& base, u64 count) {
  ImageSpec s;
  s.description = base.description + " minus its first " +
                  std::to_string(count) + " elements";
  auto base_enum = base.enumerate;
  s.enumerate = [base_enum, count](u64 i) { return base_enum(i + count); };
  auto base_member = base.member;
  // A member of the base set survives iff it exceeds the last skipped
  // element.
  if (count == 0) {
    s.member = base_member;
  } else {
    s.member = [base_enum, base_member, count](u64 m) {
      return base_member(m) && m > base_enum(count - 1);
    };
  }
  s.complement_size = base.complement_size + ExtNat(count);
  if (base.finite_size) s.finite_size = *base.finite_size - count;
  return s;
}

// --- kernel/image builders ---

Transformation with_kernel_and_image(const Transformation& f,
                                     const ImageSpec& image,
                                     KernelPolicy policy) {
  if (!f.caps().ker_rep)
    throw CapabilityMissing("ker_rep oracle missing on " + f.id());
  const auto& fc = f.certified_or_throw();

  if (policy == KernelPolicy::FiniteFibers) {
    RepIndexer reps{f, std::nullopt};
    auto ker_rep = f.caps().ker_rep;
    auto enumerate = image.enumerate;
    std::optional<u64> fin = image.finite_size;
    auto eval = [reps, ker_rep, enumerate, fin](u64 x) {
      u64 i = reps.ordinal_of(ker_rep(x));
      if (fin && i >= *fin)
        throw ImageExhausted("image too small for the kernel classes");
      return enumerate(i);
    };

    Transformation::Capabilities caps;
    caps.ker_rep = f.caps().ker_rep;
    caps.fiber_size = f.caps().fiber_size;
    caps.fat_class_member = f.caps().fat_class_member;
    caps.in_image = image.member;
    std::string label = "ker(" + f.id() + ")->" + image.description;
    caps.image_complement =
        complement_from_member(image.member, image.complement_size, label);
    {
      auto kr = f.caps().ker_rep;
      auto member = [kr](u64 n) { return kr(n) == n; };
      caps.transversal = detail::enum_from_member(member, label + " reps");
      caps.transversal_member = member;
    }
    if (f.caps().fat_class_member && f.caps().fiber_size) {
      // The image value of a fat class, when asked for, is found by
      // walking the representatives.
      RepIndexer reps2 = reps;
      auto fiber = f.caps().fiber_size;
      EnumOrdinal img_ord{image.enumerate, label + " image ordinal"};
      auto member = image.member;
      caps.fat_image_index = [reps2, fiber, img_ord, member,
                              label](u64 m) -> std::optional<u64> {
        if (!member(m)) return std::nullopt;
        u64 i = img_ord.ordinal_of(m);
        u64 rep = reps2.rep_at(i);
        if (!fiber(rep).is_infinite()) return std::nullopt;
        u64 fat = 0;
        for (u64 t = 0; t < i; ++t)
          if (fiber(reps2.rep_at(t)).is_infinite()) ++fat;
        return fat;
      };
    }

    auto cert = CertifiedProfile::construction(
        fc.exact_c ? *fc.exact_c : ExtNat(0), image.complement_size,
        fc.exact_k ? *fc.exact_k : ExtNat(0),
        "kernel of " + f.id() + ", image " + image.description);
    if (!fc.exact_c || !fc.exact_k)
      throw CapabilityMissing("exact parameters missing on " + f.id());
    return Transformation(label, "kernel copy of " + f.id() + " onto " +
                                     image.description,
                          eval, cert, caps);
  }

  // SingleSink: the designated infinite class collapses onto image[0];
  // every other class spreads injectively over the rest of the image.
  // Intended for maps whose remaining classes are infinite (the pairing
  // projections), where the image is exhausted exactly.
  if (!f.caps().fat_class_member || !f.caps().fiber_size)
    throw CapabilityMissing("fat-class oracles missing on " + f.id());
  u64 rep0 = f.caps().ker_rep(f.caps().fat_class_member(0, 0));
  RepIndexer others{f, rep0};
  ClassPosition pos{f};
  auto ker_rep = f.caps().ker_rep;
  auto enumerate = image.enumerate;
  auto eval = [others, pos, ker_rep, enumerate, rep0](u64 x) {
    u64 rep = ker_rep(x);
    if (rep == rep0) return enumerate(0);
    return enumerate(1 + cantor_pair(others.ordinal_of(rep), pos.position_of(x)));
  };
  std::string label = "sink(" + f.id() + ")->" + image.description;

  Transformation::Capabilities caps;
  caps.ker_rep = [ker_rep, rep0](u64 x) {
    u64 rep = ker_rep(x);
    return rep == rep0 ? rep0 : x;
  };
  caps.fiber_size = [ker_rep, rep0, fs = f.caps().fiber_size](u64 x) {
    return ker_rep(x) == rep0 ? fs(x) : ExtNat(1);
  };
  {
    EnumOrdinal img_ord{image.enumerate, label + " image ordinal"};
    auto member = image.member;
    auto fiber = f.caps().fiber_size;
    RepIndexer others2 = others;
    caps.in_image = [img_ord, member, fiber, others2](u64 m) {
      if (!member(m)) return false;
      u64 e = img_ord.ordinal_of(m);
      if (e == 0) return true;
      u64 i = cantor_first(e - 1), j = cantor_second(e - 1);
      return fiber(others2.rep_at(i)) > ExtNat(j);
    };
  }
  caps.image_complement =
      complement_from_member(caps.in_image, kInf, label);
  {
    auto member = [ker_rep, rep0](u64 x) {
      return ker_rep(x) != rep0 || x == rep0;
    };
    caps.transversal = detail::enum_from_member(member, label + " transversal");
    caps.transversal_member = member;
  }
  caps.fat_class_member = [fcm = f.caps().fat_class_member](u64 i, u64 j) {
    if (i != 0) throw Error("single-sink map has one infinite class");
    return fcm(0, j);
  };
  caps.fat_image_index = [enumerate](u64 m) -> std::optional<u64> {
    return m == enumerate(0) ? std::optional<u64>(0) : std::nullopt;
  };

  auto cert = CertifiedProfile::construction(
      kInf, image.complement_size, 1,
      "designated class of " + f.id() + " sinks to the first image point");
  return Transformation(label, "single-sink copy of " + f.id() + " onto " +
                                   image.description,
                        eval, cert, caps);
}

Transformation with_transversal_and_image(
    const std::string& label, std::function<u64(u64)> sigma,
    std::function<bool(u64)> sigma_member, ExtNat sigma_complement,
    const ImageSpec& image) {
  EnumOrdinal sig_ord{sigma, label + " transversal ordinal"};
  auto enumerate = image.enumerate;
  auto eval = [sig_ord, sigma_member, enumerate](u64 x) {
    if (!sigma_member(x)) return enumerate(0);
    return enumerate(sig_ord.ordinal_of(x));
  };

  Transformation::Capabilities caps;
  {
    // Least element of the sink class: the first transversal point or the
    // first point outside the transversal, whichever is smaller.
    auto sink_rep = std::make_shared<std::optional<u64>>();
    auto mu = std::make_shared<std::mutex>();
    auto sigma0 = sigma;
    ExtNat comp = sigma_complement;
    auto member = sigma_member;
    auto rep_of_sink = [sink_rep, mu, sigma0, member, comp]() {
      std::lock_guard<std::mutex> lock(*mu);
      if (!*sink_rep) {
        u64 s0 = sigma0(0);
        u64 least = s0;
        if (comp > ExtNat(0)) {
          for (u64 m = 0; m < s0; ++m)
            if (!member(m)) {
              least = m;
              break;
            }
        }
        *sink_rep = least;
      }
      return **sink_rep;
    };
    caps.ker_rep = [member, sigma0, rep_of_sink](u64 x) {
      if (member(x) && x != sigma0(0)) return x;
      return rep_of_sink();
    };
    caps.fiber_size = [member, sigma0, comp](u64 x) {
      if (member(x) && x != sigma0(0)) return ExtNat(1);
      return comp + ExtNat(1);
    };
    if (sigma_complement.is_infinite()) {
      caps.fat_class_member = [member, sigma0, fat = detail::enum_from_member(
                                   [member, sigma0](u64 x) {
                                     return !member(x) || x == sigma0(0);
                                   },
                                   label + " sink class")](u64 i, u64 j) {
        if (i != 0) throw Error("transversal-sink map has one infinite class");
        return fat(j);
      };
      caps.fat_image_index = [enumerate](u64 m) -> std::optional<u64> {
        return m == enumerate(0) ? std::optional<u64>(0) : std::nullopt;
      };
    }
  }
  caps.in_image = image.member;
  caps.image_complement =
      complement_from_member(image.member, image.complement_size, label);
  caps.transversal = sigma;
  caps.transversal_member = sigma_member;

  ExtNat k = sigma_complement.is_infinite() ? ExtNat(1) : ExtNat(0);
  auto cert = CertifiedProfile::construction(
      sigma_complement, image.complement_size, k,
      "transversal mapped onto " + image.description);
  return Transformation(label, "transversal-to-image map (" + label + ")",
                        eval, cert, caps);
}

// --- permutation completion ---

namespace {

void check_kernels_match(const Transformation& g, const Transformation& f,
                         u64 window) {
  std::map<u64, u64> gfirst, ffirst;
  std::map<u64, u64> gl_to_fl, fl_to_gl;
  for (u64 n = 0; n < window; ++n) {
    u64 gl = gfirst.emplace(g(n), n).first->second;
    u64 fl = ffirst.emplace(f(n), n).first->second;
    auto a = gl_to_fl.emplace(gl, fl);
    if (!a.second && a.first->second != fl)
      throw KernelMismatch("kernels of " + g.id() + " and " + f.id() +
                           " differ near n=" + std::to_string(n));
    auto b = fl_to_gl.emplace(fl, gl);
    if (!b.second && b.first->second != gl)
      throw KernelMismatch("kernels of " + g.id() + " and " + f.id() +
                           " differ near n=" + std::to_string(n));
  }
}

}  // namespace

Permutation complete_by_permutation(const Transformation& g,
                                    const Transformation& f) {
  for (const Transformation* t : {&g, &f}) {
    if (!t->caps().in_image || !t->caps().image_complement)
      throw CapabilityMissing("image oracles missing on " + t->id());
  }
  const auto& gc = g.certified_or_throw();
  const auto& fc = f.certified_or_throw();
  if (gc.profile.d != fc.profile.d)
    throw DefectMismatch("defect classes of " + g.id() + " and " + f.id() +
                         " differ");
  if (gc.exact_d && fc.exact_d && !(*gc.exact_d == *fc.exact_d))
    throw DefectMismatch("defects of " + g.id() + " and " + f.id() +
                         " differ: " + gc.exact_d->to_string() + " vs " +
                         fc.exact_d->to_string());
  check_kernels_match(g, f, 512);

  auto section_g = detail::section_scan([g](u64 n) { return g(n); },
                                        "section of " + g.id());
  auto section_f = detail::section_scan([f](u64 n) { return f(n); },
                                        "section of " + f.id());
  EnumOrdinal gcomp{g.caps().image_complement, g.id() + " complement ordinal"};
  EnumOrdinal fcomp{f.caps().image_complement, f.id() + " complement ordinal"};

  auto fwd = [g, f, section_g, gcomp](u64 y) {
    if (g.caps().in_image(y)) return f(section_g(y));
    return f.caps().image_complement(gcomp.ordinal_of(y));
  };
  auto bwd = [g, f, section_f, fcomp](u64 y) {
    if (f.caps().in_image(y)) return g(section_f(y));
    return g.caps().image_complement(fcomp.ordinal_of(y));
  };
  return make_permutation("match(" + g.id() + "->" + f.id() + ")",
                          "matches " + g.id() + " to " + f.id() +
                              " on images and complements",
                          fwd, bwd);
}

// --- certificates ---

namespace {

u64 eval_word(const std::vector<Factor>& fs, u64 n) {
  u64 v = n;
  for (const auto& fac : fs) v = fac.map(v);
  return v;
}

Factor base_factor(const Transformation& t, const std::string& label) {
  Factor f;
  f.kind = Factor::Kind::Base;
  f.label = label.empty() ? t.id() : label;
  f.map = t;
  return f;
}

Factor given_factor(const Transformation& t) {
  Factor f;
  f.kind = Factor::Kind::Given;
  f.label = t.id();
  f.map = t;
  return f;
}

Factor perm_factor(const Permutation& p) {
  Factor f;
  f.kind = Factor::Kind::Perm;
  f.label = p.forward.id();
  f.map = p.forward;
  f.perm = p;
  return f;
}

void smoke_check(Certificate& cert, u64 N = 256) {
  for (u64 n = 0; n < N; ++n) {
    if (eval_word(cert.factors, n) != cert.target(n))
      throw Error("internal: certificate for " + cert.target_id + " (" +
                  cert.lemma_tag + ") disagrees with target at n=" +
                  std::to_string(n));
  }
  cert.windows.push_back({N, true});
}

// Replace the unique Given factor with the given label by an expansion
// multiplying to the same map.
void splice_given(Certificate& cert, const std::string& label,
                  std::vector<Factor> expansion) {
  for (std::size_t i = 0; i < cert.factors.size(); ++i) {
    if (cert.factors[i].kind == Factor::Kind::Given &&
        cert.factors[i].label == label) {
      cert.factors.erase(cert.factors.begin() + i);
      cert.factors.insert(cert.factors.begin() + i,
                          std::make_move_iterator(expansion.begin()),
                          std::make_move_iterator(expansion.end()));
      return;
    }
  }
  throw Error("internal: no Given factor labeled " + label);
}

struct Hyp {
  std::string part;
  void require(bool ok, const std::string& clause) const {
    if (!ok) throw HypothesisViolated(part, clause);
  }
};

std::string ext_note(const char* sym, ExtNat v) {
  return std::string(sym) + "=" + v.to_string();
}

// f in <base, u> when ker(f) = ker(gu) and d(f) = d(gu): the word
// [Base g, Given u, Perm q] with g carrying f's kernel onto a transversal
// of u.  Shared by several lemma parts.
Certificate kernel_transfer_cert(const std::string& tag,
                                 const Transformation& u,
                                 const Transformation& f) {
  Certificate cert;
  cert.lemma_tag = tag;
  cert.target = f;
  cert.target_id = f.id();

  Transformation g =
      with_kernel_and_image(f, image_transversal_of(u), KernelPolicy::FiniteFibers);
  // gu: same kernel as f, image equal to the image of u.
  Transformation::Capabilities caps;
  caps.ker_rep = f.caps().ker_rep;
  caps.fiber_size = f.caps().fiber_size;
  caps.in_image = u.caps().in_image;
  caps.image_complement = u.caps().image_complement;
  auto cp = CertifiedProfile::construction(
      f.exact_c(), u.exact_d(), f.exact_k(),
      "kernel of " + f.id() + " composed onto the image of " + u.id());
  Transformation gu = certified_composite(
      "(" + g.id() + ")*" + u.id(), "g then " + u.id(),
      [g, u](u64 n) { return u(g(n)); }, cp, caps);
  Permutation q = complete_by_permutation(gu, f);

  cert.factors = {base_factor(g, ""), given_factor(u), perm_factor(q)};
  cert.notes.push_back("g: " + ext_note("c", *g.certified()->exact_c) + ", " +
                       ext_note("d", *g.certified()->exact_d) + ", " +
                       ext_note("k", *g.certified()->exact_k));
  cert.notes.push_back("d(gu)=d(u)=d(f)=" + f.exact_d().to_string() +
                       " and ker(gu)=ker(f), so a permutation finishes");
  smoke_check(cert);
  return cert;
}

}  // namespace

// --- lemma family: tech ---

namespace {

Certificate core_tech_i(const std::string& tag, const Transformation& u,
                        const Transformation& f) {
  Hyp hyp{tag};
  hyp.require(u.exact_c() > ExtNat(0) && u.exact_c().is_finite(),
              "0 < c(u) < inf");
  hyp.require(f.exact_c() > ExtNat(0) && f.exact_c().is_finite(),
              "0 < c(f) < inf");
  hyp.require(u.exact_d() == f.exact_d(), "d(u) = d(f)");
  return kernel_transfer_cert(tag, u, f);
}

Certificate core_tech_iii(const std::string& tag, const Transformation& u,
                          const Transformation& f) {
  Hyp hyp{tag};
  hyp.require(u.exact_c() == ExtNat(0), "u injective");
  hyp.require(f.exact_c().is_finite(), "c(f) < inf");
  hyp.require(u.exact_d().is_infinite() && f.exact_d().is_infinite(),
              "d(u) = d(f) = inf");

  Certificate cert;
  cert.lemma_tag = tag;
  cert.target = f;
  cert.target_id = f.id();

  if (f.exact_c() == ExtNat(0)) {
    // Both injective with infinite defect: a permutation alone finishes.
    Permutation q = complete_by_permutation(u, f);
    cert.factors = {given_factor(u), perm_factor(q)};
    cert.notes.push_back("f injective: ker(f)=ker(u) and d(f)=d(u)=inf");
    smoke_check(cert);
    return cert;
  }

  Transformation g =
      with_kernel_and_image(f, image_from(1), KernelPolicy::FiniteFibers);
  auto section_u =
      detail::section_scan([u](u64 n) { return u(n); }, "section of " + u.id());
  Transformation::Capabilities caps;
  caps.ker_rep = f.caps().ker_rep;
  caps.fiber_size = f.caps().fiber_size;
  caps.in_image = [u, section_u](u64 m) {
    return u.caps().in_image(m) && section_u(m) >= 1;
  };
  caps.image_complement =
      complement_from_member(caps.in_image, kInf, "(g)*" + u.id());
  auto cp = CertifiedProfile::construction(
      f.exact_c(), kInf, f.exact_k(),
      "kernel of " + f.id() + " into " + u.id() + " off one point");
  Transformation gu = certified_composite(
      "(" + g.id() + ")*" + u.id(), "g then " + u.id(),
      [g, u](u64 n) { return u(g(n)); }, cp, caps);
  Permutation q = complete_by_permutation(gu, f);

  cert.factors = {base_factor(g, ""), given_factor(u), perm_factor(q)};
  cert.notes.push_back("g has ker(f), 0<d(g)=1<inf: base member");
  cert.notes.push_back("u injective keeps ker(gu)=ker(f); d(gu)=inf=d(f)");
  smoke_check(cert);
  return cert;
}

}  // namespace

Certificate lemma_tech(LemmaPart part, const Transformation& u,
                       const std::optional<Transformation>& v,
                       const Transformation& f) {
  switch (part) {
    case LemmaPart::I:
      return core_tech_i("tech:i", u, f);

    case LemmaPart::II: {
      Hyp hyp{"tech:ii"};
      hyp.require(v.has_value(), "v required");
      hyp.require(u.exact_c().is_finite(), "c(u) < inf");
      hyp.require(u.exact_d().is_infinite(), "d(u) = inf");
      hyp.require(v->exact_c() > ExtNat(0), "c(v) > 0");
      hyp.require(f.exact_d() == ExtNat(0), "d(f) = 0");
      hyp.require(v->exact_d() == ExtNat(0), "d(v) = 0");
      hyp.require(f.exact_c() > ExtNat(0) && f.exact_c().is_finite(),
                  "0 < c(f) < inf");

      if (v->exact_c().is_finite()) {
        Certificate cert = core_tech_i("tech:ii", *v, f);
        cert.notes.insert(cert.notes.begin(),
                          "c(v) finite: part (i) applies with v");
        return cert;
      }

      // c(v) infinite: route f through t*u*g*v with t a base member.
      Transformation t = witness("merge01");
      auto tu_eval = [t, u](u64 n) { return u(t(n)); };
      // Exact collapse of t then u: t's pair plus u's collisions that
      // survive inside the image of t.
      u64 ctu = t.exact_c().finite_value();
      for (const auto& cls :
           collision_classes([u](u64 n) { return u(n); },
                             u.exact_c().finite_value(), u.id())) {
        u64 inside = 0;
        for (u64 x : cls)
          if (t.caps().in_image(x)) ++inside;
        if (inside >= 2) ctu += inside - 1;
      }

      // g: the image of t*u is its transversal; its own image is a
      // transversal of v; everything else sinks.
      auto tu_in_image = [t, u, section_u = detail::section_scan(
                              [u](u64 n) { return u(n); },
                              "section of " + u.id()),
                          ucls = std::make_shared<
                              std::vector<std::vector<u64>>>(collision_classes(
                              [u](u64 n) { return u(n); },
                              u.exact_c().finite_value(), u.id()))](u64 m) {
        if (!u.caps().in_image(m)) return false;
        u64 x0 = section_u(m);
        for (const auto& cls : *ucls)
          if (std::find(cls.begin(), cls.end(), x0) != cls.end()) {
            for (u64 x : cls)
              if (t.caps().in_image(x)) return true;
            return false;
          }
        return t.caps().in_image(x0);
      };
      Transformation g = with_transversal_and_image(
          "g[im(" + t.id() + "*" + u.id() + ")->tr(" + v->id() + ")]",
          detail::enum_from_member(tu_in_image, "image of t*u"), tu_in_image,
          kInf, image_transversal_of(*v));

      // tugv is injective-modulo-ker(tu) with full image of v.
      auto tugv_eval = [tu_eval, g, v](u64 n) { return (*v)(g(tu_eval(n))); };
      Transformation::Capabilities caps;
      caps.in_image = v->caps().in_image;
      caps.image_complement = v->caps().image_complement;
      {
        auto kr = detail::section_scan(
            [tu_eval](u64 n) { return tu_eval(n); },
            "kernel of t*u");  // least preimage of the t*u value
        caps.ker_rep = [tu_eval, kr](u64 x) { return kr(tu_eval(x)); };
        auto classes = std::make_shared<std::vector<std::vector<u64>>>(
            collision_classes([tugv_eval](u64 n) { return tugv_eval(n); },
                              ctu, "t*u*g*v"));
        caps.fiber_size = [classes](u64 x) {
          for (const auto& cls : *classes)
            if (std::find(cls.begin(), cls.end(), x) != cls.end())
              return ExtNat(cls.size());
          return ExtNat(1);
        };
        auto tr = detail::transversal_by_scan(
            [tugv_eval](u64 n) { return tugv_eval(n); }, "t*u*g*v");
        caps.transversal = tr.enumerate;
        caps.transversal_member = tr.member;
      }
      auto cp = CertifiedProfile::construction(
          ExtNat(ctu), ExtNat(0), ExtNat(0),
          "collapse c(tu)=" + std::to_string(ctu) + ", surjective onto N");
      Transformation tugv = certified_composite(
          t.id() + "*" + u.id() + "*g*" + v->id(), "t, u, g, v composed",
          tugv_eval, cp, caps);

      Certificate cert = core_tech_i("tech:ii", tugv, f);
      splice_given(cert, tugv.id(),
                   {base_factor(t, ""), given_factor(u), base_factor(g, ""),
                    given_factor(*v)});
      cert.notes.push_back("g: c=d(tu)=inf, d=c(v)=inf, k=1: base member");
      cert.notes.push_back("0<c(tugv)=" + std::to_string(ctu) +
                           "<inf and d(tugv)=0=d(f): part (i) applies");
      smoke_check(cert);
      return cert;
    }

    case LemmaPart::III:
      return core_tech_iii("tech:iii", u, f);

    case LemmaPart::IV: {
      Hyp hyp{"tech:iv"};
      hyp.require(v.has_value(), "v required");
      hyp.require(u.exact_c() == ExtNat(0), "u injective");
      hyp.require(u.exact_d() > ExtNat(0), "d(u) > 0");
      hyp.require(v->exact_d().is_infinite() && f.exact_d().is_infinite(),
                  "d(v) = d(f) = inf");
      hyp.require(v->exact_c().is_finite() && f.exact_c().is_finite(),
                  "c(v), c(f) < inf");

      if (v->exact_c() == ExtNat(0)) {
        Certificate cert = core_tech_iii("tech:iv", *v, f);
        cert.notes.insert(cert.notes.begin(),
                          "v injective: part (iii) applies with v");
        return cert;
      }
      if (u.exact_d().is_infinite()) {
        Certificate cert = core_tech_iii("tech:iv", u, f);
        cert.notes.insert(cert.notes.begin(),
                          "d(u) infinite: part (iii) applies with u");
        return cert;
      }

      // w enumerates a transversal of v, so w*v is injective with
      // infinite defect; express w over u and finish by part (iii).
      Transformation::Capabilities wcaps;
      wcaps.ker_rep = [](u64 n) { return n; };
      wcaps.fiber_size = [](u64) { return ExtNat(1); };
      wcaps.in_image = v->caps().transversal_member;
      wcaps.image_complement = complement_from_member(
          v->caps().transversal_member, v->exact_c(), "w");
      wcaps.transversal = [](u64 i) { return i; };
      wcaps.transversal_member = [](u64) { return true; };
      Transformation w = certified_composite(
          "w[tr(" + v->id() + ")]", "enumerates a transversal of " + v->id(),
          v->caps().transversal,
          CertifiedProfile::construction(ExtNat(0), v->exact_c(), ExtNat(0),
                                         "injective onto a transversal of " +
                                             v->id()),
          wcaps);

      Transformation::Capabilities wvcaps;
      wvcaps.ker_rep = [](u64 n) { return n; };
      wvcaps.fiber_size = [](u64) { return ExtNat(1); };
      wvcaps.in_image = v->caps().in_image;
      wvcaps.image_complement = v->caps().image_complement;
      wvcaps.transversal = [](u64 i) { return i; };
      wvcaps.transversal_member = [](u64) { return true; };
      Transformation wv = certified_composite(
          w.id() + "*" + v->id(), "w then v",
          [w, v](u64 n) { return (*v)(w(n)); },
          CertifiedProfile::construction(ExtNat(0), v->exact_d(), ExtNat(0),
                                         "injective with d = d(v) = inf"),
          wvcaps);

      Certificate cert = core_tech_iii("tech:iv", wv, f);

      // t: image of u is its transversal, image misses exactly c(v)
      // points, so u*t is injective with d(u*t) = c(v) = d(w).
      u64 cv = v->exact_c().finite_value();
      Transformation t = with_transversal_and_image(
          "t[im(" + u.id() + ")->" + std::to_string(cv) + "+N]",
          image_of(u).enumerate, u.caps().in_image, u.exact_d(),
          image_from(cv));
      Transformation::Capabilities utcaps;
      utcaps.ker_rep = [](u64 n) { return n; };
      utcaps.fiber_size = [](u64) { return ExtNat(1); };
      utcaps.in_image = [cv](u64 m) { return m >= cv; };
      utcaps.image_complement = [cv](u64 i) -> u64 {
        if (i >= cv) throw ImageExhausted("u*t complement");
        return i;
      };
      utcaps.transversal = [](u64 i) { return i; };
      utcaps.transversal_member = [](u64) { return true; };
      Transformation ut = certified_composite(
          u.id() + "*" + t.id(), "u then t", [u, t](u64 n) { return t(u(n)); },
          CertifiedProfile::construction(ExtNat(0), ExtNat(cv), ExtNat(0),
                                         "injective, d = c(v)"),
          utcaps);
      Permutation q2 = complete_by_permutation(ut, w);

      splice_given(cert, wv.id(),
                   {given_factor(u), base_factor(t, ""), perm_factor(q2),
                    given_factor(*v)});
      cert.notes.push_back("t: c=d(u), d=c(v), both finite positive: base");
      cert.notes.push_back("u*t and w injective with equal defect c(v)");
      smoke_check(cert);
      return cert;
    }
  }
  throw Error("bad lemma part");
}

// --- lemma family: tech2 ---

namespace {

Certificate core_tech2_i(const std::string& tag, const Transformation& u,
                         const Transformation& f) {
  Hyp hyp{tag};
  hyp.require(u.exact_d() > ExtNat(0) && u.exact_d().is_finite(),
              "0 < d(u) < inf");
  hyp.require(f.exact_d() > ExtNat(0) && f.exact_d().is_finite(),
              "0 < d(f) < inf");
  hyp.require(u.exact_c() == f.exact_c(), "c(u) = c(f)");
  hyp.require(f.exact_k().is_finite(), "k(f) < inf");

  Certificate cert;
  cert.lemma_tag = tag;
  cert.target = f;
  cert.target_id = f.id();

  u64 df = f.exact_d().finite_value();
  Transformation g = with_transversal_and_image(
      "g[im(" + u.id() + ")->" + std::to_string(df) + "+N]",
      image_of(u).enumerate, u.caps().in_image, u.exact_d(), image_from(df));
  Transformation h = with_kernel_and_image(f, image_transversal_of(u),
                                           KernelPolicy::FiniteFibers);

  Transformation::Capabilities caps;
  caps.ker_rep = f.caps().ker_rep;
  caps.fiber_size = f.caps().fiber_size;
  caps.in_image = [df](u64 m) { return m >= df; };
  caps.image_complement = [df](u64 i) -> u64 {
    if (i >= df) throw ImageExhausted("h*u*g complement");
    return i;
  };
  Transformation hug = certified_composite(
      "(" + h.id() + ")*" + u.id() + "*(" + g.id() + ")", "h, u, g composed",
      [h, u, g](u64 n) { return g(u(h(n))); },
      CertifiedProfile::construction(f.exact_c(), f.exact_d(), f.exact_k(),
                                     "ker(f) through u onto d(f)+N"),
      caps);
  Permutation q = complete_by_permutation(hug, f);

  cert.factors = {base_factor(h, ""), given_factor(u), base_factor(g, ""),
                  perm_factor(q)};
  cert.notes.push_back("g: c=d(u), d=d(f), finite positive: base");
  cert.notes.push_back("h: c=c(f), d=c(u), k=k(f): base (or a bijection)");
  smoke_check(cert);
  return cert;
}

Certificate core_tech2_iii(const std::string& tag, const Transformation& u,
                           const Transformation& f) {
  Hyp hyp{tag};
  hyp.require(u.exact_d() == ExtNat(0), "u surjective");
  hyp.require(f.exact_d().is_finite(), "d(f) < inf");
  hyp.require(f.exact_k().is_finite(), "k(f) < inf");
  hyp.require(u.exact_c().is_infinite() && f.exact_c().is_infinite(),
              "c(u) = c(f) = inf");

  Certificate cert;
  cert.lemma_tag = tag;
  cert.target = f;
  cert.target_id = f.id();

  u64 df = f.exact_d().finite_value();
  Transformation g = with_kernel_and_image(
      f, image_skip_prefix(image_transversal_of(u), df),
      KernelPolicy::FiniteFibers);

  // The product misses exactly the u-images of the skipped transversal
  // points.
  std::vector<u64> missed;
  for (u64 i = 0; i < df; ++i) missed.push_back(u(u.caps().transversal(i)));
  std::sort(missed.begin(), missed.end());
  auto missed_ptr = std::make_shared<const std::vector<u64>>(std::move(missed));

  Transformation::Capabilities caps;
  caps.ker_rep = f.caps().ker_rep;
  caps.fiber_size = f.caps().fiber_size;
  caps.in_image = [missed_ptr](u64 m) {
    return !std::binary_search(missed_ptr->begin(), missed_ptr->end(), m);
  };
  caps.image_complement = [missed_ptr](u64 i) -> u64 {
    if (i >= missed_ptr->size()) throw ImageExhausted("g*u complement");
    return (*missed_ptr)[i];
  };
  Transformation gu = certified_composite(
      "(" + g.id() + ")*" + u.id(), "g then u",
      [g, u](u64 n) { return u(g(n)); },
      CertifiedProfile::construction(f.exact_c(), f.exact_d(), f.exact_k(),
                                     "ker(f); image misses the skipped "
                                     "transversal images"),
      caps);
  Permutation q = complete_by_permutation(gu, f);

  cert.factors = {base_factor(g, ""), given_factor(u), perm_factor(q)};
  cert.notes.push_back("g: c=c(f)=inf, d=inf, k=k(f)<inf: base");
  cert.notes.push_back("d(gu)=d(u)+" + std::to_string(df) + "=d(f)");
  smoke_check(cert);
  return cert;
}

}  // namespace

Certificate lemma_tech2(LemmaPart part, const Transformation& u,
                        const std::optional<Transformation>& v,
                        const Transformation& f) {
  switch (part) {
    case LemmaPart::I:
      return core_tech2_i("tech2:i", u, f);

    case LemmaPart::II: {
      Hyp hyp{"tech2:ii"};
      hyp.require(v.has_value(), "v required");
      hyp.require(u.exact_c().is_infinite(), "c(u) = inf");
      hyp.require(u.exact_d().is_finite(), "d(u) < inf");
      hyp.require(f.exact_c() == ExtNat(0), "c(f) = 0");
      hyp.require(v->exact_c() == ExtNat(0), "c(v) = 0");
      hyp.require(v->exact_d() > ExtNat(0), "d(v) > 0");
      hyp.require(f.exact_d() > ExtNat(0) && f.exact_d().is_finite(),
                  "0 < d(f) < inf");

      if (v->exact_d().is_finite()) {
        Certificate cert = core_tech2_i("tech2:ii", *v, f);
        cert.notes.insert(cert.notes.begin(),
                          "d(v) finite: part (i) applies with v");
        return cert;
      }

      // d(v) infinite: v*g*u is injective with small positive defect.
      Transformation g = with_transversal_and_image(
          "g[im(" + v->id() + ")->tr(" + u.id() + ")-1]",
          image_of(*v).enumerate, v->caps().in_image, v->exact_d(),
          image_skip_prefix(image_transversal_of(u), 1));

      u64 skipped_image = u(u.caps().transversal(0));
      Transformation::Capabilities caps;
      caps.ker_rep = [](u64 n) { return n; };
      caps.fiber_size = [](u64) { return ExtNat(1); };
      caps.in_image = [u, skipped_image](u64 m) {
        return u.caps().in_image(m) && m != skipped_image;
      };
      caps.image_complement =
          complement_from_member(caps.in_image, u.exact_d() + ExtNat(1),
                                 "v*g*u");
      caps.transversal = [](u64 i) { return i; };
      caps.transversal_member = [](u64) { return true; };
      Transformation vgu = certified_composite(
          v->id() + "*g*" + u.id(), "v, g, u composed",
          [v, g, u](u64 n) { return u(g((*v)(n))); },
          CertifiedProfile::construction(
              ExtNat(0), u.exact_d() + ExtNat(1), ExtNat(0),
              "injective; misses im(u)-complement plus one point"),
          caps);

      Certificate cert = core_tech2_i("tech2:ii", vgu, f);
      splice_given(cert, vgu.id(),
                   {given_factor(*v), base_factor(g, ""), given_factor(u)});
      cert.notes.push_back("g: c=d(v)=inf, d=c(u)+1=inf, k=1: base");
      cert.notes.push_back("c(vgu)=0=c(f), 0<d(vgu)<inf: part (i) applies");
      smoke_check(cert);
      return cert;
    }

    case LemmaPart::III:
      return core_tech2_iii("tech2:iii", u, f);

    case LemmaPart::IV: {
      Hyp hyp{"tech2:iv"};
      hyp.require(v.has_value(), "v required");
      hyp.require(u.exact_d() == ExtNat(0), "u surjective");
      hyp.require(u.exact_c() > ExtNat(0), "c(u) > 0");
      hyp.require(v->exact_c().is_infinite() && f.exact_c().is_infinite(),
                  "c(v) = c(f) = inf");
      hyp.require(f.exact_k().is_finite(), "k(f) < inf");
      hyp.require(v->exact_d().is_finite() && f.exact_d().is_finite(),
                  "d(v), d(f) < inf");

      if (v->exact_d() == ExtNat(0)) {
        Certificate cert = core_tech2_iii("tech2:iv", *v, f);
        cert.notes.insert(cert.notes.begin(),
                          "v surjective: part (iii) applies with v");
        return cert;
      }
      if (u.exact_c().is_infinite()) {
        Certificate cert = core_tech2_iii("tech2:iv", u, f);
        cert.notes.insert(cert.notes.begin(),
                          "c(u) infinite: part (iii) applies with u");
        return cert;
      }

      // 0 < c(u), d(v) < inf: v*g*u is surjective with infinite collapse.
      Transformation g = with_transversal_and_image(
          "g[im(" + v->id() + ")->tr(" + u.id() + ")]",
          image_of(*v).enumerate, v->caps().in_image, v->exact_d(),
          image_transversal_of(u));

      Transformation::Capabilities caps;
      caps.ker_rep = v->caps().ker_rep;
      caps.fiber_size = v->caps().fiber_size;
      caps.in_image = [](u64) { return true; };
      caps.image_complement = [](u64) -> u64 {
        throw ImageExhausted("v*g*u is surjective");
      };
      caps.transversal = v->caps().transversal;
      caps.transversal_member = v->caps().transversal_member;
      caps.fat_class_member = v->caps().fat_class_member;
      Transformation vgu = certified_composite(
          v->id() + "*g*" + u.id(), "v, g, u composed",
          [v, g, u](u64 n) { return u(g((*v)(n))); },
          CertifiedProfile::construction(v->exact_c(), ExtNat(0),
                                         v->exact_k(),
                                         "kernel of v, surjective"),
          caps);

      Certificate cert = core_tech2_iii("tech2:iv", vgu, f);
      splice_given(cert, vgu.id(),
                   {given_factor(*v), base_factor(g, ""), given_factor(u)});
      cert.notes.push_back("g: c=d(v), d=c(u), finite positive: base");
      cert.notes.push_back(
          "c(vgu)=inf, d(vgu)=0: part (iii) applies with vgu");
      smoke_check(cert);
      return cert;
    }
  }
  throw Error("bad lemma part");
}

// --- lemma family: tech k ---

namespace {

// g with the designated infinite class of f sent to one point of u's fat
// class 0 and the i-th remaining class injected into u's fat class 2i.
Transformation fat_sink(const Transformation& f, const Transformation& u) {
  if (!f.caps().ker_rep || !f.caps().fat_class_member || !f.caps().fiber_size)
    throw CapabilityMissing("fat-class oracles missing on " + f.id());
  if (!u.caps().fat_class_member || !u.caps().fat_image_index)
    throw CapabilityMissing("fat-class oracles missing on " + u.id());

  u64 rep0 = f.caps().ker_rep(f.caps().fat_class_member(0, 0));
  RepIndexer others{f, rep0};
  ClassPosition pos{f};
  auto fker = f.caps().ker_rep;
  auto ufat = u.caps().fat_class_member;
  u64 alpha = ufat(0, 0);

  auto eval = [others, pos, fker, ufat, alpha, rep0](u64 x) {
    u64 rep = fker(x);
    if (rep == rep0) return alpha;
    return ufat(2 * (others.ordinal_of(rep) + 1), pos.position_of(x));
  };
  std::string label = "fatsink(" + f.id() + "->" + u.id() + ")";

  // Membership in the image: m must lie in an even-indexed fat class of u
  // at a position the corresponding class of f actually reaches.
  auto ukr = u.caps().ker_rep;
  auto ufib = u.caps().fiber_size;
  auto ffib = f.caps().fiber_size;
  RepIndexer others2 = others;
  auto fat_index_of_element = [ukr, ufat, ufib](u64 m) -> std::optional<u64> {
    if (!ufib(m).is_infinite()) return std::nullopt;
    u64 target = ukr(m);
    constexpr u64 kCap = 1 << 20;
    for (u64 j = 0; j < kCap; ++j) {
      if (ukr(ufat(j, 0)) == target) return j;
    }
    throw Error("fat class index scan cap hit");
  };
  auto in_image = [fat_index_of_element, ufat, ffib, others2, alpha,
                   rep0](u64 m) {
    if (m == alpha) return true;
    auto j = fat_index_of_element(m);
    if (!j || *j == 0 || *j % 2 != 0) return false;
    u64 i = *j / 2;  // 1-based ordinal among the remaining classes
    // position of m inside u's fat class j
    u64 t = 0;
    for (;; ++t) {
      u64 e = ufat(*j, t);
      if (e == m) break;
      if (e > m) return false;
    }
    return ffib(others2.rep_at(i - 1)) > ExtNat(t);
  };

  Transformation::Capabilities caps;
  caps.ker_rep = [fker, rep0](u64 x) {
    u64 rep = fker(x);
    return rep == rep0 ? rep0 : x;
  };
  caps.fiber_size = [fker, ffib, rep0](u64 x) {
    return fker(x) == rep0 ? ffib(x) : ExtNat(1);
  };
  caps.in_image = in_image;
  caps.image_complement = complement_from_member(in_image, kInf, label);
  {
    auto member = [fker, rep0](u64 x) { return fker(x) != rep0 || x == rep0; };
    caps.transversal = detail::enum_from_member(member, label + " transversal");
    caps.transversal_member = member;
  }
  caps.fat_class_member = [ffat = f.caps().fat_class_member](u64 i, u64 j) {
    if (i != 0) throw Error("fat sink has one infinite class");
    return ffat(0, j);
  };
  caps.fat_image_index = [alpha](u64 m) -> std::optional<u64> {
    return m == alpha ? std::optional<u64>(0) : std::nullopt;
  };

  auto cert = CertifiedProfile::construction(
      kInf, kInf, ExtNat(1),
      "designated class of " + f.id() + " collapses into fat class 0 of " +
          u.id() + "; others inject into even fat classes");
  return Transformation(label,
                        "kernel-of-" + f.id() + " sink into fat classes of " +
                            u.id(),
                        eval, cert, caps);
}

Certificate core_techk_i(const std::string& tag, const Transformation& u,
                         const Transformation& f) {
  Hyp hyp{tag};
  hyp.require(u.exact_k().is_infinite(), "k(u) = inf");
  hyp.require(f.exact_k().is_infinite(), "k(f) = inf");
  hyp.require(f.exact_d().is_infinite(), "d(f) = inf");

  Certificate cert;
  cert.lemma_tag = tag;
  cert.target = f;
  cert.target_id = f.id();

  Transformation g = fat_sink(f, u);
  auto ufii = u.caps().fat_image_index;
  Transformation::Capabilities caps;
  caps.ker_rep = f.caps().ker_rep;
  caps.fiber_size = f.caps().fiber_size;
  caps.fat_class_member = f.caps().fat_class_member;
  caps.in_image = [ufii](u64 m) {
    auto j = ufii(m);
    return j.has_value() && *j % 2 == 0;
  };
  caps.image_complement =
      complement_from_member(caps.in_image, kInf, "(g)*" + u.id());
  Transformation gu = certified_composite(
      "(" + g.id() + ")*" + u.id(), "g then u",
      [g, u](u64 n) { return u(g(n)); },
      CertifiedProfile::construction(f.exact_c(), kInf, f.exact_k(),
                                     "ker(f); image is the even fat values "
                                     "of " + u.id()),
      caps);
  Permutation q = complete_by_permutation(gu, f);

  cert.factors = {base_factor(g, ""), given_factor(u), perm_factor(q)};
  cert.notes.push_back("g: c=d=inf, k=1: base member");
  cert.notes.push_back(
      "u is constant on each fat class, so ker(gu)=ker(f); d(gu)=inf");
  smoke_check(cert);
  return cert;
}

Certificate core_techk_iii(const std::string& tag, const Transformation& u,
                           const Transformation& v, const Transformation& f) {
  Hyp hyp{tag};
  hyp.require(u.exact_k().is_infinite(), "k(u) = inf");
  hyp.require(f.exact_k().is_infinite(), "k(f) = inf");
  hyp.require(v.exact_c().is_infinite(), "c(v) = inf");
  hyp.require(v.exact_d() == ExtNat(0), "d(v) = 0");

  if (f.exact_d().is_infinite()) {
    Certificate cert = core_techk_i(tag, u, f);
    cert.notes.insert(cert.notes.begin(),
                      "d(f) infinite: part (i) applies directly");
    return cert;
  }

  Certificate cert;
  cert.lemma_tag = tag;
  cert.target = f;
  cert.target_id = f.id();

  u64 df = f.exact_d().finite_value();
  Transformation g = with_kernel_and_image(
      f, image_skip_prefix(image_transversal_of(v), df),
      KernelPolicy::FiniteFibers);
  Certificate gcert = core_techk_i(tag, u, g);

  std::vector<u64> missed;
  for (u64 i = 0; i < df; ++i) missed.push_back(v(v.caps().transversal(i)));
  std::sort(missed.begin(), missed.end());
  auto missed_ptr = std::make_shared<const std::vector<u64>>(std::move(missed));

  Transformation::Capabilities caps;
  caps.ker_rep = f.caps().ker_rep;
  caps.fiber_size = f.caps().fiber_size;
  caps.fat_class_member = f.caps().fat_class_member;
  caps.in_image = [missed_ptr](u64 m) {
    return !std::binary_search(missed_ptr->begin(), missed_ptr->end(), m);
  };
  caps.image_complement = [missed_ptr](u64 i) -> u64 {
    if (i >= missed_ptr->size()) throw ImageExhausted("g*v complement");
    return (*missed_ptr)[i];
  };
  Transformation gv = certified_composite(
      "(" + g.id() + ")*" + v.id(), "g then v",
      [g, v](u64 n) { return v(g(n)); },
      CertifiedProfile::construction(f.exact_c(), f.exact_d(), f.exact_k(),
                                     "ker(f); misses the skipped transversal "
                                     "images"),
      caps);
  Permutation q = complete_by_permutation(gv, f);

  cert.factors = gcert.factors;
  cert.factors.push_back(given_factor(v));
  cert.factors.push_back(perm_factor(q));
  cert.notes = gcert.notes;
  cert.notes.push_back("d(gv)=d(v)+" + std::to_string(df) + "=d(f)");
  smoke_check(cert);
  return cert;
}

}  // namespace

Certificate lemma_techk(LemmaPart part, const Transformation& u,
                        const std::optional<Transformation>& v,
                        const std::optional<Transformation>& t,
                        const Transformation& f) {
  switch (part) {
    case LemmaPart::I:
      return core_techk_i("techk:i", u, f);

    case LemmaPart::II: {
      Hyp hyp{"techk:ii"};
      hyp.require(v.has_value(), "v required");
      hyp.require(u.exact_k().is_infinite() && f.exact_k().is_infinite(),
                  "k(u) = k(f) = inf");
      hyp.require(f.exact_d() > ExtNat(0), "d(f) > 0");
      hyp.require(u.exact_d() > ExtNat(0), "d(u) > 0");
      hyp.require(v->exact_c().is_infinite(), "c(v) = inf");
      hyp.require(v->exact_d() > ExtNat(0) && v->exact_d().is_finite(),
                  "0 < d(v) < inf");

      if (f.exact_d().is_infinite()) {
        Certificate cert = core_techk_i("techk:ii", u, f);
        cert.notes.insert(cert.notes.begin(),
                          "d(f) infinite: part (i) applies directly");
        return cert;
      }

      Transformation g = with_kernel_and_image(f, image_transversal_of(*v),
                                               KernelPolicy::FiniteFibers);
      Certificate gcert = core_techk_i("techk:ii", u, g);

      u64 df = f.exact_d().finite_value();
      Transformation h = with_transversal_and_image(
          "h[im(" + v->id() + ")->" + std::to_string(df) + "+N]",
          image_of(*v).enumerate, v->caps().in_image, v->exact_d(),
          image_from(df));

      Transformation::Capabilities caps;
      caps.ker_rep = f.caps().ker_rep;
      caps.fiber_size = f.caps().fiber_size;
      caps.fat_class_member = f.caps().fat_class_member;
      caps.in_image = [df](u64 m) { return m >= df; };
      caps.image_complement = [df](u64 i) -> u64 {
        if (i >= df) throw ImageExhausted("g*v*h complement");
        return i;
      };
      Transformation gvh = certified_composite(
          "(" + g.id() + ")*" + v->id() + "*(" + h.id() + ")",
          "g, v, h composed", [g, v, h](u64 n) { return h((*v)(g(n))); },
          CertifiedProfile::construction(f.exact_c(), f.exact_d(),
                                         f.exact_k(),
                                         "ker(f) onto d(f)+N"),
          caps);
      Permutation q = complete_by_permutation(gvh, f);

      Certificate cert;
      cert.lemma_tag = "techk:ii";
      cert.target = f;
      cert.target_id = f.id();
      cert.factors = gcert.factors;
      cert.factors.push_back(given_factor(*v));
      cert.factors.push_back(base_factor(h, ""));
      cert.factors.push_back(perm_factor(q));
      cert.notes = gcert.notes;
      cert.notes.push_back("h: c=d(v), d=d(f), finite positive: base");
      smoke_check(cert);
      return cert;
    }

    case LemmaPart::III: {
      Hyp hyp{"techk:iii"};
      hyp.require(v.has_value(), "v required");
      hyp.require(u.exact_k().is_infinite() && f.exact_k().is_infinite(),
                  "k(u) = k(f) = inf");
      hyp.require(v->exact_c().is_infinite(), "c(v) = inf");
      hyp.require(v->exact_d() == ExtNat(0), "d(v) = 0");
      return core_techk_iii("techk:iii", u, *v, f);
    }

    case LemmaPart::IV: {
      Hyp hyp{"techk:iv"};
      hyp.require(v.has_value() && t.has_value(), "v and t required");
      hyp.require(u.exact_k().is_infinite() && f.exact_k().is_infinite(),
                  "k(u) = k(f) = inf");
      hyp.require(v->exact_c().is_infinite(), "c(v) = inf");
      hyp.require(v->exact_d().is_finite(), "d(v) < inf");
      hyp.require(t->exact_c() > ExtNat(0), "c(t) > 0");
      hyp.require(t->exact_d() == ExtNat(0), "d(t) = 0");

      if (v->exact_d() == ExtNat(0)) {
        Certificate cert = core_techk_iii("techk:iv", u, *v, f);
        cert.notes.insert(cert.notes.begin(),
                          "d(v) = 0: part (iii) applies with v");
        return cert;
      }
      if (t->exact_c().is_infinite()) {
        Certificate cert = core_techk_iii("techk:iv", u, *t, f);
        cert.notes.insert(cert.notes.begin(),
                          "c(t) infinite: part (iii) applies with t");
        return cert;
      }

      // 0 < c(t), d(v) < inf: v*g*t is surjective with infinite collapse.
      Transformation g = with_transversal_and_image(
          "g[im(" + v->id() + ")->tr(" + t->id() + ")]",
          image_of(*v).enumerate, v->caps().in_image, v->exact_d(),
          image_transversal_of(*t));
      Transformation::Capabilities caps;
      caps.ker_rep = v->caps().ker_rep;
      caps.fiber_size = v->caps().fiber_size;
      caps.fat_class_member = v->caps().fat_class_member;
      caps.in_image = [](u64) { return true; };
      caps.image_complement = [](u64) -> u64 {
        throw ImageExhausted("v*g*t is surjective");
      };
      caps.transversal = v->caps().transversal;
      caps.transversal_member = v->caps().transversal_member;
      Transformation vgt = certified_composite(
          v->id() + "*g*" + t->id(), "v, g, t composed",
          [v, g, t](u64 n) { return (*t)(g((*v)(n))); },
          CertifiedProfile::construction(v->exact_c(), ExtNat(0),
                                         v->exact_k(),
                                         "kernel of v, surjective"),
          caps);

      Certificate cert = core_techk_iii("techk:iv", u, vgt, f);
      splice_given(cert, vgt.id(),
                   {given_factor(*v), base_factor(g, ""), given_factor(*t)});
      cert.notes.push_back("g: c=d(v), d=c(t), finite positive: base");
      cert.notes.push_back("c(vgt)=inf, d(vgt)=0: part (iii) applies");
      smoke_check(cert);
      return cert;
    }
  }
  throw Error("bad lemma part");
}

Certificate lemma_dispatch(LemmaFamily family, LemmaPart part,
                           const Transformation& u,
                           const std::optional<Transformation>& v,
                           const std::optional<Transformation>& t,
                           const Transformation& f) {
  switch (family) {
    case LemmaFamily::Tech:
      return lemma_tech(part, u, v, f);
    case LemmaFamily::Tech2:
      return lemma_tech2(part, u, v, f);
    case LemmaFamily::TechK:
      return lemma_techk(part, u, v, t, f);
  }
  throw Error("bad lemma family");
}

LemmaPart parse_lemma_part(const std::string& s) {
  if (s == "i") return LemmaPart::I;
  if (s == "ii") return LemmaPart::II;
  if (s == "iii") return LemmaPart::III;
  if (s == "iv") return LemmaPart::IV;
  throw ParseError("bad lemma part: " + s);
}

LemmaFamily parse_lemma_family(const std::string& s) {
  if (s == "tech") return LemmaFamily::Tech;
  if (s == "tech2") return LemmaFamily::Tech2;
  if (s == "techk") return LemmaFamily::TechK;
  throw ParseError("bad lemma family: " + s);
}

const char* to_string(LemmaPart p) {
  switch (p) {
    case LemmaPart::I:
      return "i";
    case LemmaPart::II:
      return "ii";
    case LemmaPart::III:
      return "iii";
    case LemmaPart::IV:
      return "iv";
  }
  return "?";
}

const char* to_string(LemmaFamily f) {
  switch (f) {
    case LemmaFamily::Tech:
      return "tech";
    case LemmaFamily::Tech2:
      return "tech2";
    case LemmaFamily::TechK:
      return "techk";
  }
  return "?";
}

// --- verification ---

VerifyReport verify_certificate(const Certificate& cert, u64 N) {
  if (N < 1) throw Error("verify_certificate requires N >= 1");
  VerifyReport rep;

  const ProfileSet base = profile_set(base_name());
  for (const auto& fac : cert.factors) {
    if (fac.kind == Factor::Kind::Base) {
      const auto* cp = fac.map.certified() ? &*fac.map.certified() : nullptr;
      if (cp == nullptr) {
        rep.failure = "base factor " + fac.label + " has no certified profile";
        return rep;
      }
      if (!base.contains(cp->profile)) {
        rep.failure = "base factor " + fac.label + " has profile " +
                      cp->profile.to_string() + " outside the base set";
        return rep;
      }
      auto cons = consistency_check(fac.map);
      if (!cons.passed) {
        rep.failure = "base factor " + fac.label +
                      " fails consistency: " + cons.first_violation;
        return rep;
      }
    } else if (fac.kind == Factor::Kind::Perm) {
      const auto& p = *fac.perm;
      for (u64 n = 0; n < N; ++n) {
        if (p.backward(p.forward(n)) != n || p.forward(p.backward(n)) != n) {
          rep.failure = "permutation factor " + fac.label +
                        " fails to round-trip at n=" + std::to_string(n);
          return rep;
        }
      }
    }
  }

  for (u64 n = 0; n < N; ++n) {
    if (eval_word(cert.factors, n) != cert.target(n)) {
      rep.mismatch_at = n;
      rep.failure = "factor product disagrees with target at n=" +
                    std::to_string(n);
      return rep;
    }
  }
  rep.ok = true;
  return rep;
}

std::string VerifyReport::to_json() const {
  std::string s = "{\"ok\":";
  s += ok ? "true" : "false";
  if (!ok) {
    s += ",\"failure\":\"" + json_escape(failure) + "\"";
    if (mismatch_at)
      s += ",\"mismatch_at\":" + std::to_string(*mismatch_at);
  }
  s += "}";
  return s;
}

std::string Certificate::to_json() const {
  std::string s = "{\"lemma_tag\":\"" + json_escape(lemma_tag) + "\"";
  s += ",\"target_id_or_recipe\":\"" + json_escape(target_id) + "\"";
  s += ",\"factors\":[";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) s += ",";
    const auto& f = factors[i];
    const char* kind = f.kind == Factor::Kind::Given
                           ? "given"
                           : f.kind == Factor::Kind::Base ? "base" : "perm";
    s += "{\"kind\":\"";
    s += kind;
    s += "\",\"id_or_recipe\":\"" + json_escape(f.label) + "\"";
    if (f.map.certified())
      s += ",\"profile\":" + f.map.certified()->profile.to_json();
    s += "}";
  }
  s += "],\"notes\":[";
  for (std::size_t i = 0; i < notes.size(); ++i) {
    if (i) s += ",";
    s += "\"" + json_escape(notes[i]) + "\"";
  }
  s += "],\"windows\":[";
  for (std::size_t i = 0; i < windows.size(); ++i) {
    if (i) s += ",";
    s += "{\"N\":" + std::to_string(windows[i].N) + ",\"result\":" +
         (windows[i].ok ? std::string("true") : std::string("false")) + "}";
  }
  s += "]}";
  return s;
}

// --- proposition dispatcher ---

namespace {

struct SlotSpec {
  char arg;          // 'u', 'v' or 't'
  std::string cond;  // description-DSL profile condition
};

struct CaseSpec {
  std::string f_cond;
  LemmaFamily family;
  LemmaPart part;
  std::vector<SlotSpec> slots;
};

struct PropSpec {
  const char* name;
  std::vector<CaseSpec> cases;
};

const std::vector<PropSpec>& proposition_table() {
  using F = LemmaFamily;
  using P = LemmaPart;
  static const std::vector<PropSpec> table = {
      {"S1",
       {{"c=0 & 0<d<inf", F::Tech2, P::II,
         {{'u', "c=inf & 0<d<inf"}, {'v', "c=0 & d>0"}}},
        {"c=inf & 0<d<inf & k<inf", F::Tech2, P::I, {{'u', "c=inf & 0<d<inf"}}},
        {"c<inf & d=inf", F::Tech, P::IV,
         {{'u', "c=0 & d>0"}, {'v', "c<inf & d=inf"}}},
        {"k=inf & d>0", F::TechK, P::II,
         {{'u', "k=inf & d>0"}, {'v', "c=inf & 0<d<inf"}}}}},
      {"S2",
       {{"0<c<inf & d=0", F::Tech, P::II,
         {{'u', "0<c<inf & d=inf"}, {'v', "c>0 & d=0"}}},
        {"0<c<inf & d=inf", F::Tech, P::I, {{'u', "0<c<inf & d=inf"}}},
        {"d<inf & k<inf & c=inf", F::Tech2, P::IV,
         {{'u', "c>0 & d=0"}, {'v', "c=inf & d<inf"}}},
        {"k=inf", F::TechK, P::IV,
         {{'u', "k=inf"}, {'v', "c=inf & d<inf"}, {'t', "c>0 & d=0"}}}}},
      {"S3",
       {{"c<inf & d=inf & k<inf", F::Tech, P::IV,
         {{'u', "c=0 & 0<d<inf"}, {'v', "c<inf & d=inf"}}},
        {"0<c<inf & d=0", F::Tech, P::I, {{'u', "0<c<inf & d=0"}}},
        {"c=0 & 0<d<inf", F::Tech2, P::I, {{'u', "c=0 & 0<d<inf"}}},
        {"k=inf & d=inf", F::TechK, P::I, {{'u', "k=inf & d=inf"}}}}},
      {"S4",
       {{"d<inf & k<inf & c=inf", F::Tech2, P::IV,
         {{'u', "0<c<inf & d=0"}, {'v', "c=inf & d<inf"}}},
        {"c=0 & 0<d<inf", F::Tech2, P::I, {{'u', "c=0 & 0<d<inf"}}},
        {"0<c<inf & d=0", F::Tech, P::I, {{'u', "0<c<inf & d=0"}}},
        {"k=inf", F::TechK, P::IV,
         {{'u', "k=inf"}, {'v', "c=inf & d<inf"}, {'t', "0<c<inf & d=0"}}}}},
      {"S5",
       {{"d<inf & k<inf & c=inf", F::Tech2, P::IV,
         {{'u', "c>0 & k<inf & d=0"}, {'v', "c=inf & k<inf & d<inf"}}},
        {"c<inf & d=inf", F::Tech, P::IV,
         {{'u', "c=0 & d>0"}, {'v', "c<inf & d=inf"}}},
        {"0<c<inf & d=0", F::Tech, P::II,
         {{'u', "c<inf & d=inf"}, {'v', "c>0 & k<inf & d=0"}}},
        {"c=0 & 0<d<inf", F::Tech2, P::II,
         {{'u', "c=inf & k<inf & d<inf"}, {'v', "c=0 & d>0"}}}}},
      {"U",
       {{"0<c<inf & d=0", F::Tech, P::I, {{'u', "0<c<inf & d=0"}}},
        {"c<inf & k<inf & d=inf", F::Tech, P::III, {{'u', "c=0 & d=inf"}}},
        {"k=inf", F::TechK, P::I, {{'u', "k=inf & d=inf"}}}}},
      {"V",
       {{"0<d<inf & c=0", F::Tech2, P::I, {{'u', "c=0 & 0<d<inf"}}},
        {"d<inf & k<inf & c=inf", F::Tech2, P::III, {{'u', "c=inf & d=0"}}},
        {"k=inf", F::TechK, P::III,
         {{'u', "k=inf"}, {'v', "c=inf & d=0"}}}}},
      {"S{1,2}",
       {{"0<c<inf & d=inf", F::Tech, P::I, {{'u', "0<c<inf & d=inf"}}},
        {"c=inf & k<inf & 0<d<inf", F::Tech2, P::I,
         {{'u', "c=inf & 0<d<inf"}}},
        {"k=inf & d>0", F::TechK, P::II,
         {{'u', "k=inf & d>0"}, {'v', "c=inf & 0<d<inf"}}}}},
      {"S{1,3}",
       {{"c=0 & 0<d<inf", F::Tech2, P::I, {{'u', "c=0 & 0<d<inf"}}},
        {"d=inf & k<inf & c<inf", F::Tech, P::IV,
         {{'u', "c=0 & 0<d<inf"}, {'v', "c<inf & d=inf"}}},
        {"k=inf", F::TechK, P::I, {{'u', "k=inf & d=inf"}}}}},
      {"S{1,4}",
       {{"0<d<inf & c=0", F::Tech2, P::I, {{'u', "c=0 & 0<d<inf"}}},
        {"0<d<inf & k<inf & c=inf", F::Tech2, P::I,
         {{'u', "c=inf & 0<d<inf"}}},
        {"k=inf & d>0", F::TechK, P::II,
         {{'u', "k=inf & d>0"}, {'v', "c=inf & 0<d<inf"}}}}},
      {"S{1,5}",
       {{"0<d<inf & c=0", F::Tech2, P::II,
         {{'u', "c=inf & k<inf & 0<d<inf"}, {'v', "c=0 & d>0"}}},
        {"0<d<inf & k<inf & c=inf", F::Tech2, P::I,
         {{'u', "c=inf & k<inf & 0<d<inf"}}},
        {"d=inf & c<inf", F::Tech, P::IV,
         {{'u', "c=0 & d>0"}, {'v', "d=inf & c<inf"}}}}},
      {"S{2,3}",
       {{"0<c<inf & d=0", F::Tech, P::I, {{'u', "0<c<inf & d=0"}}},
        {"0<c<inf & d=inf", F::Tech, P::I, {{'u', "0<c<inf & d=inf"}}},
        {"k=inf", F::TechK, P::I, {{'u', "k=inf & d=inf"}}}}},
      {"S{2,4}",
       {{"d=0 & 0<c<inf", F::Tech, P::I, {{'u', "d=0 & 0<c<inf"}}},
        {"c=inf & k<inf & d<inf", F::Tech2, P::IV,
         {{'u', "d=0 & 0<c<inf"}, {'v', "d<inf & c=inf"}}},
        {"k=inf", F::TechK, P::IV,
         {{'u', "k=inf"}, {'v', "d<inf & c=inf"}, {'t', "d=0 & 0<c<inf"}}}}},
      {"S{2,5}",
       {{"0<c<inf & d=0", F::Tech, P::II,
         {{'u', "0<c<inf & k<inf & d=inf"}, {'v', "d=0 & c>0"}}},
        {"0<c<inf & k<inf & d=inf", F::Tech, P::I,
         {{'u', "0<c<inf & k<inf & d=inf"}}},
        {"c=inf & d<inf", F::Tech2, P::IV,
         {{'u', "d=0 & c>0"}, {'v', "c=inf & d<inf"}}}}},
      {"S{3,4}",
       {{"0<c<inf & d=0", F::Tech, P::I, {{'u', "0<c<inf & d=0"}}},
        {"c=0 & 0<d<inf", F::Tech2, P::I, {{'u', "c=0 & 0<d<inf"}}},
        {"k=inf & d=inf", F::TechK, P::I, {{'u', "k=inf & d=inf"}}}}},
      {"S{3,5}",
       {{"0<c<inf & d=0", F::Tech, P::I, {{'u', "0<c<inf & d=0"}}},
        {"c<inf & d=inf", F::Tech, P::IV,
         {{'u', "c=0 & 0<d<inf"}, {'v', "c<inf & d=inf"}}},
        {"c=0 & 0<d<inf", F::Tech2, P::I, {{'u', "c=0 & 0<d<inf"}}}}},
      {"S{4,5}",
       {{"0<d<inf & c=0", F::Tech2, P::I, {{'u', "0<d<inf & c=0"}}},
        {"d<inf & c=inf & k<inf", F::Tech2, P::IV,
         {{'u', "d=0 & 0<c<inf"}, {'v', "d<inf & c=inf & k<inf"}}},
        {"d=0 & 0<c<inf", F::Tech, P::I, {{'u', "d=0 & 0<c<inf"}}}}},
      {"V&S2",
       {{"d<inf & k<inf & c=inf", F::Tech2, P::III, {{'u', "d=0 & c=inf"}}},
        {"k=inf", F::TechK, P::III,
         {{'u', "k=inf"}, {'v', "d=0 & c=inf"}}}}},
      {"U&S1",
       {{"c<inf & k<inf & d=inf", F::Tech, P::III, {{'u', "c=0 & d=inf"}}},
        {"k=inf", F::TechK, P::I, {{'u', "k=inf & d=inf"}}}}},
      {"V&S5",
       {{"c=inf & k<inf & d<inf", F::Tech2, P::III,
         {{'u', "c=inf & k<inf & d=0"}}},
        {"c=0 & 0<d<inf", F::Tech2, P::I, {{'u', "c=0 & 0<d<inf"}}}}},
      {"U&S5",
       {{"c<inf & k<inf & d=inf", F::Tech, P::III, {{'u', "c=0 & d=inf"}}},
        {"0<c<inf & d=0", F::Tech, P::I, {{'u', "0<c<inf & d=0"}}}}},
      {"S{1,2,3}",
       {{"0<c<inf & d=inf", F::Tech, P::I, {{'u', "0<c<inf & d=inf"}}},
        {"k=inf & d=inf", F::TechK, P::I, {{'u', "k=inf & d=inf"}}}}},
      {"S{1,2,4}",
       {{"c=inf & k<inf & 0<d<inf", F::Tech2, P::I,
         {{'u', "c=inf & k<inf & 0<d<inf"}}},
        {"k=inf & d>0", F::TechK, P::II,
         {{'u', "k=inf & d>0"}, {'v', "c=inf & 0<d<inf"}}}}},
      {"S{1,2,5}",
       {{"0<c<inf & d=inf", F::Tech, P::I, {{'u', "0<c<inf & d=inf"}}},
        {"c=inf & k<inf & 0<d<inf", F::Tech2, P::I,
         {{'u', "c=inf & k<inf & 0<d<inf"}}}}},
      {"S{1,3,4}",
       {{"c=0 & 0<d<inf", F::Tech2, P::I, {{'u', "c=0 & 0<d<inf"}}},
        {"k=inf & d=inf", F::TechK, P::I, {{'u', "k=inf & d=inf"}}}}},
      {"S{1,3,5}",
       {{"c=0 & 0<d<inf", F::Tech2, P::I, {{'u', "c=0 & 0<d<inf"}}},
        {"c<inf & d=inf", F::Tech, P::IV,
         {{'u', "c=0 & 0<d<inf"}, {'v', "c<inf & d=inf"}}}}},
      {"S{1,4,5}",
       {{"c=0 & 0<d<inf", F::Tech2, P::I, {{'u', "c=0 & 0<d<inf"}}},
        {"c=inf & 0<d<inf & k<inf", F::Tech2, P::I,
         {{'u', "c=inf & 0<d<inf & k<inf"}}}}},
      {"S{2,3,4}",
       {{"d=0 & 0<c<inf", F::Tech, P::I, {{'u', "d=0 & 0<c<inf"}}},
        {"k=inf & d=inf", F::TechK, P::I, {{'u', "k=inf & d=inf"}}}}},
      {"S{2,3,5}",
       {{"0<c<inf & d=0", F::Tech, P::I, {{'u', "0<c<inf & d=0"}}},
        {"0<c<inf & d=inf", F::Tech, P::I, {{'u', "0<c<inf & d=inf"}}}}},
      {"S{2,4,5}",
       {{"d=0 & 0<c<inf", F::Tech, P::I, {{'u', "d=0 & 0<c<inf"}}},
        {"d<inf & c=inf & k<inf", F::Tech2, P::IV,
         {{'u', "d=0 & 0<c<inf"}, {'v', "d<inf & c=inf & k<inf"}}}}},
      {"S{3,4,5}",
       {{"0<c<inf & d=0", F::Tech, P::I, {{'u', "0<c<inf & d=0"}}},
        {"c=0 & 0<d<inf", F::Tech2, P::I, {{'u', "c=0 & 0<d<inf"}}}}},
      {"V&S{2,5}",
       {{"d<inf & k<inf & c=inf", F::Tech2, P::III,
         {{'u', "c=inf & d=0 & k<inf"}}}}},
      {"U&S{1,5}",
       {{"c<inf & k<inf & d=inf", F::Tech, P::III, {{'u', "c=0 & d=inf"}}}}},
      {"S{1,2,3,4}",
       {{"k=inf & d=inf", F::TechK, P::I, {{'u', "k=inf & d=inf"}}}}},
      {"S{1,2,3,5}",
       {{"0<c<inf & d=inf", F::Tech, P::I, {{'u', "0<c<inf & d=inf"}}}}},
      {"S{1,2,4,5}",
       {{"c=inf & k<inf & 0<d<inf", F::Tech2, P::I,
         {{'u', "c=inf & k<inf & 0<d<inf"}}}}},
      {"S{1,3,4,5}",
       {{"c=0 & 0<d<inf", F::Tech2, P::I, {{'u', "c=0 & 0<d<inf"}}}}},
      {"S{2,3,4,5}",
       {{"0<c<inf & d=0", F::Tech, P::I, {{'u', "0<c<inf & d=0"}}}}},
  };
  return table;
}

}  // namespace

Certificate generate_in(const SemigroupName& target, const Transformation& f,
                        const std::vector<Transformation>& generators) {
  const auto& cp = f.certified_or_throw();
  if (!profile_set(target).contains(cp.profile))
    throw Error("precondition: " + f.id() + " with profile " +
                cp.profile.to_string() + " is not in " + target.to_string());

  const Profile perm{CdClass::Zero, CdClass::Zero, KClass::Fin};
  if (profile_set(base_name()).contains(cp.profile)) {
    Certificate cert;
    cert.lemma_tag = "base";
    cert.target = f;
    cert.target_id = f.id();
    if (cp.profile == perm) {
      Permutation q = complete_by_permutation(witness("id"), f);
      cert.factors = {perm_factor(q)};
      cert.notes.push_back("f is a bijection");
    } else {
      cert.factors = {base_factor(f, "")};
      cert.notes.push_back("f lies in the base intersection");
    }
    smoke_check(cert);
    return cert;
  }

  const PropSpec* prop = nullptr;
  for (const auto& p : proposition_table())
    if (target.to_string() == p.name) prop = &p;
  if (prop == nullptr)
    throw Error("no applicable case: no case table for " + target.to_string());

  for (const auto& cs : prop->cases) {
    if (!parse_description(cs.f_cond).contains(cp.profile)) continue;
    std::optional<Transformation> u, v, t;
    std::string unfilled;
    for (const auto& slot : cs.slots) {
      ProfileSet want = parse_description(slot.cond);
      const Transformation* found = nullptr;
      for (const auto& gen : generators) {
        if (gen.has_certified() &&
            want.contains(gen.certified()->profile)) {
          found = &gen;
          break;
        }
      }
      if (found == nullptr) {
        unfilled = std::string(1, slot.arg) + " with " + slot.cond;
        break;
      }
      if (slot.arg == 'u')
        u = *found;
      else if (slot.arg == 'v')
        v = *found;
      else
        t = *found;
    }
    if (!unfilled.empty())
      throw Error("no applicable case: no generator matches slot " +
                  unfilled + " of " + target.to_string() + " for profile " +
                  cp.profile.to_string());
    Certificate cert = lemma_dispatch(cs.family, cs.part, *u, v, t, f);
    cert.lemma_tag += " (via " + target.to_string() + ")";
    return cert;
  }
  throw Error("no applicable case: profile " + cp.profile.to_string() +
              " not covered for " + target.to_string());
}

}  // namespace omega
