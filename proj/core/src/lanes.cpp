#include "omega/lanes.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "omega/catalog.hpp"
#include "omega/errors.hpp"

namespace omega::lanes {

namespace {

using u64 = std::uint64_t;

const ExtNat kInf = ExtNat::infinity();

}  // namespace

const std::vector<PrimitivePair>& primitive_pairs() {
  // h is pointwise equal to "f then g"; the equalities are checked on wide
  // windows by the test suite.
  static const std::vector<PrimitivePair> table = {
      {"id3", "id", "id", "id"},
      {"f_c", "pred", "id", "pred"},
      {"f_cI", "halve", "id", "halve"},
      {"f_d", "succ", "id", "succ"},
      {"f_dI", "double", "id", "double"},
      {"f_k", "sink0", "id", "sink0"},
      {"f_kI", "cproj_even", "id", "cproj_even"},
      {"g_c", "id", "pred", "pred"},
      {"g_cI", "id", "halve", "halve"},
      {"g_d", "id", "succ", "succ"},
      {"g_dI", "id", "double", "double"},
      {"g_k", "id", "sink0", "sink0"},
      {"g_kI", "id", "cproj_even", "cproj_even"},
      {"a_dc", "succ", "pred", "id"},
      {"a_dcII", "double", "halve", "id"},
      {"a_d1cI", "succ", "halve", "halve_up"},
      {"i_c1", "e1", "halve", "pred"},
      {"i_cI", "double", "quarter", "halve"},
      {"i_x1", "succ2", "pred", "succ"},
      {"i_x1cI", "succ2", "halve", "halve_shift"},
      {"i_x1cI0", "evens4", "halve", "succ0"},
      {"i_xI", "quad", "halve", "double"},
      {"pass_c1", "double", "pred", "oddmap0"},
      {"k_col", "cproj_even", "sink0", "sink0"},
      {"k_dodge", "oddmap", "cproj_even", "oddmap"},
      {"k_thru", "cproj_even", "fold", "cproj_even_fold"},
      {"k_hitDI", "double", "cproj_even", "cproj_double"},
      {"k_hitDI0", "evenrows", "cproj_even", "cproj_even"},
      {"k2_perm", "weaveid", "cproj_even", "id"},
      {"k2_sink", "weave0", "cproj_even", "sink0"},
      {"k_colW", "weavefat", "cproj_even", "sink0"},
  };
  return table;
}

namespace {

// Class vector of the nine summed parameters, packed into one id:
// six three-way (cf, df, cg, dg, ch, dh) and three two-way (kf, kg, kh).
struct ClassVec {
  CdClass cf = CdClass::Zero, df = CdClass::Zero;
  CdClass cg = CdClass::Zero, dg = CdClass::Zero;
  CdClass ch = CdClass::Zero, dh = CdClass::Zero;
  KClass kf = KClass::Fin, kg = KClass::Fin, kh = KClass::Fin;

  int encode() const {
    int cd = static_cast<int>(cf);
    cd = cd * 3 + static_cast<int>(df);
    cd = cd * 3 + static_cast<int>(cg);
    cd = cd * 3 + static_cast<int>(dg);
    cd = cd * 3 + static_cast<int>(ch);
    cd = cd * 3 + static_cast<int>(dh);
    int k = static_cast<int>(kf);
    k = k * 2 + static_cast<int>(kg);
    k = k * 2 + static_cast<int>(kh);
    return cd * 8 + k;
  }

  ClassVec add(const ClassVec& o) const {
    ClassVec r;
    r.cf = cd_add(cf, o.cf);
    r.df = cd_add(df, o.df);
    r.cg = cd_add(cg, o.cg);
    r.dg = cd_add(dg, o.dg);
    r.ch = cd_add(ch, o.ch);
    r.dh = cd_add(dh, o.dh);
    r.kf = k_add(kf, o.kf);
    r.kg = k_add(kg, o.kg);
    r.kh = k_add(kh, o.kh);
    return r;
  }
};

constexpr int kStates = 729 * 8;

ClassVec primitive_delta(const PrimitivePair& pp) {
  const auto& f = witness(pp.f_id);
  const auto& g = witness(pp.g_id);
  const auto& h = witness(pp.h_id);
  ClassVec v;
  v.cf = classify_cd(f.exact_c());
  v.df = classify_cd(f.exact_d());
  v.kf = classify_k(f.exact_k());
  v.cg = classify_cd(g.exact_c());
  v.dg = classify_cd(g.exact_d());
  v.kg = classify_k(g.exact_k());
  v.ch = classify_cd(h.exact_c());
  v.dh = classify_cd(h.exact_d());
  v.kh = classify_k(h.exact_k());
  return v;
}

struct BfsTable {
  // parent[s] = (primitive index, previous state); -1 = unreached.
  std::vector<int> parent_prim;
  std::vector<int> parent_state;
};

const BfsTable& bfs_table() {
  static const BfsTable table = [] {
    const auto& prims = primitive_pairs();
    std::vector<ClassVec> deltas;
    for (const auto& pp : prims) deltas.push_back(primitive_delta(pp));

    BfsTable t;
    t.parent_prim.assign(kStates, -1);
    t.parent_state.assign(kStates, -1);

    // Decode a state back into a ClassVec to apply deltas.
    auto decode = [](int s) {
      ClassVec v;
      int k = s % 8;
      int cd = s / 8;
      v.kh = static_cast<KClass>(k % 2);
      k /= 2;
      v.kg = static_cast<KClass>(k % 2);
      v.kf = static_cast<KClass>(k / 2);
      v.dh = static_cast<CdClass>(cd % 3);
      cd /= 3;
      v.ch = static_cast<CdClass>(cd % 3);
      cd /= 3;
      v.dg = static_cast<CdClass>(cd % 3);
      cd /= 3;
      v.cg = static_cast<CdClass>(cd % 3);
      cd /= 3;
      v.df = static_cast<CdClass>(cd % 3);
      v.cf = static_cast<CdClass>(cd / 3);
      return v;
    };

    std::deque<int> queue;
    const int start = ClassVec{}.encode();
    t.parent_prim[start] = -2;  // marked reached, no parent
    queue.push_back(start);
    while (!queue.empty()) {
      int s = queue.front();
      queue.pop_front();
      ClassVec v = decode(s);
      for (int pi = 0; pi < static_cast<int>(prims.size()); ++pi) {
        int ns = v.add(deltas[pi]).encode();
        if (t.parent_prim[ns] != -1) continue;
        t.parent_prim[ns] = pi;
        t.parent_state[ns] = s;
        queue.push_back(ns);
      }
    }
    return t;
  }();
  return table;
}

int id3_index() {
  const auto& prims = primitive_pairs();
  for (int i = 0; i < static_cast<int>(prims.size()); ++i)
    if (prims[i].name == "id3") return i;
  throw Error("id3 primitive missing");
}

}  // namespace

std::optional<std::vector<int>> solve_plan(const Profile& p, const Profile& q,
                                           const Profile& r) {
  ClassVec target;
  target.cf = p.c;
  target.df = p.d;
  target.kf = p.k;
  target.cg = q.c;
  target.dg = q.d;
  target.kg = q.k;
  target.ch = r.c;
  target.dh = r.d;
  target.kh = r.k;
  int s = target.encode();
  if (s == ClassVec{}.encode()) return std::vector<int>{id3_index()};

  const auto& t = bfs_table();
  if (t.parent_prim[s] == -1) return std::nullopt;
  std::vector<int> plan;
  while (t.parent_prim[s] != -2) {
    plan.push_back(t.parent_prim[s]);
    s = t.parent_state[s];
  }
  std::sort(plan.begin(), plan.end());
  return plan;
}

std::string plan_to_string(const std::vector<int>& plan) {
  const auto& prims = primitive_pairs();
  std::string s;
  for (std::size_t i = 0; i < plan.size(); ++i) {
    if (i) s += "+";
    s += prims[plan[i]].name;
  }
  return s;
}

Transformation lane_combine(const std::vector<Transformation>& components,
                            const std::string& id) {
  if (components.empty()) throw Error("lane_combine needs components");
  const u64 M = components.size();

  ExtNat total_c(0), total_d(0), total_k(0);
  for (const auto& t : components) {
    total_c = total_c + t.exact_c();
    total_d = total_d + t.exact_d();
    total_k = total_k + t.exact_k();
  }

  auto comps = std::make_shared<const std::vector<Transformation>>(components);

  auto eval = [comps, M](u64 n) {
    u64 t = n % M, q = n / M;
    return (*comps)[t](q) * M + t;
  };

  Transformation::Capabilities caps;
  caps.ker_rep = [comps, M](u64 n) {
    u64 t = n % M, q = n / M;
    return (*comps)[t].caps().ker_rep(q) * M + t;
  };
  caps.fiber_size = [comps, M](u64 n) {
    u64 t = n % M, q = n / M;
    return (*comps)[t].caps().fiber_size(q);
  };
  caps.in_image = [comps, M](u64 m) {
    u64 t = m % M, q = m / M;
    return (*comps)[t].caps().in_image(q);
  };
  if (total_d == ExtNat(0)) {
    caps.image_complement = [id](u64) -> u64 {
      throw ImageExhausted(id + " is surjective");
    };
  } else {
    auto raw = detail::enum_from_member(
        [comps, M](u64 m) { return !(*comps)[m % M].caps().in_image(m / M); },
        id + " complement");
    if (total_d.is_infinite()) {
      caps.image_complement = raw;
    } else {
      u64 size = total_d.finite_value();
      caps.image_complement = [raw, size, id](u64 i) -> u64 {
        if (i >= size)
          throw ImageExhausted(id + ": complement has " +
                               std::to_string(size) + " elements");
        return raw(i);
      };
    }
  }
  {
    auto member = [comps, M](u64 n) {
      return (*comps)[n % M].caps().transversal_member(n / M);
    };
    caps.transversal = detail::enum_from_member(member, id + " transversal");
    caps.transversal_member = member;
  }

  // Fat classes are interleaved round-robin across lanes: step s hands one
  // class to every lane still having more than s of them, lanes in order.
  std::vector<ExtNat> kcounts;
  for (const auto& t : components) kcounts.push_back(t.exact_k());
  if (total_k > ExtNat(0)) {
    auto lanes_gt = [kcounts](u64 s) {
      u64 n = 0;
      for (const auto& kc : kcounts)
        if (kc > ExtNat(s)) ++n;
      return n;
    };
    caps.fat_class_member = [comps, M, kcounts, lanes_gt, id](u64 i, u64 j) {
      u64 s = 0;
      for (;;) {
        u64 width = lanes_gt(s);
        if (width == 0)
          throw Error(id + ": fat class index past end");
        if (i < width) break;
        i -= width;
        ++s;
      }
      // i-th lane (ascending) having more than s fat classes.
      for (u64 t = 0; t < M; ++t) {
        if (!(kcounts[t] > ExtNat(s))) continue;
        if (i == 0) return (*comps)[t].caps().fat_class_member(s, j) * M + t;
        --i;
      }
      throw Error(id + ": fat class walk broke");
    };
    caps.fat_image_index = [comps, M, kcounts,
                            lanes_gt](u64 m) -> std::optional<u64> {
      u64 t = m % M, q = m / M;
      if (!(*comps)[t].caps().fat_image_index) return std::nullopt;
      auto local = (*comps)[t].caps().fat_image_index(q);
      if (!local) return std::nullopt;
      u64 idx = 0;
      for (u64 s = 0; s < *local; ++s) idx += lanes_gt(s);
      for (u64 t2 = 0; t2 < t; ++t2)
        if (kcounts[t2] > ExtNat(*local)) ++idx;
      return idx;
    };
  }

  std::string desc = "lanes mod " + std::to_string(M) + ": ";
  for (u64 t = 0; t < M; ++t) {
    if (t) desc += ", ";
    desc += components[t].id();
  }

  auto cert = CertifiedProfile::construction(
      total_c, total_d, total_k, "parameters add across residue lanes");
  return Transformation(id, desc, eval, cert, caps);
}

WitnessPair assemble(const std::vector<int>& plan) {
  const auto& prims = primitive_pairs();
  if (plan.empty()) throw Error("empty witness plan");
  std::vector<Transformation> fs, gs, hs;
  for (int pi : plan) {
    if (pi < 0 || pi >= static_cast<int>(prims.size()))
      throw Error("bad primitive index");
    fs.push_back(witness(prims[pi].f_id));
    gs.push_back(witness(prims[pi].g_id));
    hs.push_back(witness(prims[pi].h_id));
  }
  WitnessPair wp;
  wp.plan = plan_to_string(plan);
  wp.f = lane_combine(fs, "mix:f:" + wp.plan);
  wp.g = lane_combine(gs, "mix:g:" + wp.plan);
  wp.h = lane_combine(hs, "mix:h:" + wp.plan);
  return wp;
}

}  // namespace omega::lanes
