#include "omega/lattice.hpp"

#include <algorithm>

#include "omega/errors.hpp"
#include "omega/lanes.hpp"

namespace omega {

namespace {

int pair_index(const Profile& p, const Profile& q) {
  return p.index() * 12 + q.index();
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

const CompRelEntry& CompRel::entry(const Profile& p, const Profile& q) const {
  return entries_[pair_index(p, q)];
}

ProfileSet CompRel::achievable(const Profile& p, const Profile& q) const {
  return entry(p, q).achievable;
}

CompRel build_comp_rel(int search_budget) {
  CompRel rel;
  std::vector<std::string> unresolved;
  for (const auto& p : valid_profiles()) {
    for (const auto& q : valid_profiles()) {
      CompRelEntry e;
      e.p = p;
      e.q = q;
      ProfileSet allowed = comp_achievable(p, q);
      for (const auto& r : valid_profiles()) {
        if (allowed.contains(r)) {
          auto plan = lanes::solve_plan(p, q, r);
          if (!plan || static_cast<int>(plan->size()) > search_budget) {
            unresolved.push_back(p.to_string() + " ; " + q.to_string() +
                                 " -> " + r.to_string());
            continue;
          }
          e.achievable.insert(r);
          e.witnesses.push_back({r, lanes::plan_to_string(*plan)});
        } else {
          CompRule rule = comp_excluded_by(p, q, r);
          e.exclusions.push_back({r, rule.id, rule.note});
        }
      }
      rel.entries_[pair_index(p, q)] = std::move(e);
    }
  }
  if (!unresolved.empty()) {
    std::string msg = "unresolved composition triples:";
    for (const auto& s : unresolved) msg += "\n  " + s;
    throw UnresolvedTriples(msg);
  }
  return rel;
}

std::string CompRel::to_json() const {
  std::string s = "{\n  \"profiles\": [";
  for (int i = 0; i < 12; ++i) {
    if (i) s += ", ";
    s += "\"" + valid_profiles()[i].to_string() + "\"";
  }
  s += "],\n  \"pairs\": [\n";
  bool first_pair = true;
  for (const auto& e : entries_) {
    if (!first_pair) s += ",\n";
    first_pair = false;
    s += "    {\"p\": \"" + e.p.to_string() + "\", \"q\": \"" +
         e.q.to_string() + "\",\n     \"achievable\": [";
    for (std::size_t i = 0; i < e.witnesses.size(); ++i) {
      if (i) s += ", ";
      const auto& w = e.witnesses[i];
      s += "{\"r\": \"" + w.r.to_string() + "\", \"f\": \"mix:f:" + w.plan +
           "\", \"g\": \"mix:g:" + w.plan + "\"}";
    }
    s += "],\n     \"excluded\": [";
    for (std::size_t i = 0; i < e.exclusions.size(); ++i) {
      if (i) s += ", ";
      const auto& x = e.exclusions[i];
      s += "{\"r\": \"" + x.r.to_string() + "\", \"rule\": \"" + x.rule +
           "\", \"note\": \"" + json_escape(x.note) + "\"}";
    }
    s += "]}";
  }
  s += "\n  ]\n}\n";
  return s;
}

std::vector<ClosedSet> enumerate_interval(const CompRel& rel) {
  const std::uint16_t base = profile_set(base_name()).bits();
  const std::uint16_t all = ProfileSet::all().bits();

  // Free positions: profiles outside the base set.
  std::vector<int> free_bits;
  for (int i = 0; i < 12; ++i)
    if (!(base >> i & 1)) free_bits.push_back(i);

  // Precompute achievable masks per ordered profile pair.
  std::uint16_t ach[12][12];
  for (const auto& p : valid_profiles())
    for (const auto& q : valid_profiles())
      ach[p.index()][q.index()] = rel.achievable(p, q).bits();

  std::vector<std::uint16_t> closed_masks;
  for (std::uint32_t sel = 0; sel < (1u << free_bits.size()); ++sel) {
    std::uint16_t mask = base;
    for (std::size_t j = 0; j < free_bits.size(); ++j)
      if (sel >> j & 1) mask |= static_cast<std::uint16_t>(1u << free_bits[j]);
    bool closed = true;
    for (int i = 0; i < 12 && closed; ++i) {
      if (!(mask >> i & 1)) continue;
      for (int j = 0; j < 12; ++j) {
        if (!(mask >> j & 1)) continue;
        if (ach[i][j] & ~mask) {
          closed = false;
          break;
        }
      }
    }
    if (closed) closed_masks.push_back(mask);
  }

  std::sort(closed_masks.begin(), closed_masks.end(),
            [](std::uint16_t a, std::uint16_t b) {
              int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
              return pa != pb ? pa < pb : a < b;
            });

  std::vector<ClosedSet> out;
  for (std::uint16_t mask : closed_masks) {
    ClosedSet cs;
    cs.profiles = ProfileSet::from_bits(mask);
    cs.names = names_for(cs.profiles);
    cs.endpoint = (mask == base || mask == all);
    out.push_back(std::move(cs));
  }
  return out;
}

std::vector<HasseEdge> hasse(const std::vector<ClosedSet>& sets) {
  std::vector<HasseEdge> edges;
  const int n = static_cast<int>(sets.size());
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      const auto& A = sets[a].profiles;
      const auto& B = sets[b].profiles;
      if (!(A.subset_of(B) && A.bits() != B.bits())) continue;
      bool covering = true;
      for (int c = 0; c < n && covering; ++c) {
        if (c == a || c == b) continue;
        const auto& C = sets[c].profiles;
        if (A.subset_of(C) && A.bits() != C.bits() && C.subset_of(B) &&
            C.bits() != B.bits())
          covering = false;
      }
      if (covering) edges.push_back({a, b});
    }
  }
  return edges;
}

namespace {

std::string set_label(const ClosedSet& cs) {
  if (!cs.names.empty()) return cs.names.front().to_string();
  return "unnamed" + cs.profiles.to_string();
}

}  // namespace

std::vector<SemigroupName> maximal_in(const SemigroupName& name,
                                      const std::vector<ClosedSet>& sets) {
  ProfileSet target = profile_set(name);
  int idx = -1;
  for (int i = 0; i < static_cast<int>(sets.size()); ++i)
    if (sets[i].profiles == target) idx = i;
  if (idx < 0)
    throw UnknownName(name.to_string() +
                      " is not one of the enumerated closed sets");
  std::vector<SemigroupName> out;
  for (const auto& e : hasse(sets))
    if (e.to == idx && !sets[e.from].names.empty())
      out.push_back(sets[e.from].names.front());
  std::sort(out.begin(), out.end());
  return out;
}

std::string lattice_to_json(const std::vector<ClosedSet>& sets,
                            const std::vector<HasseEdge>& edges) {
  int interval = 0;
  int unnamed = 0;
  for (const auto& cs : sets) {
    if (!cs.endpoint) ++interval;
    if (cs.names.empty()) ++unnamed;
  }
  std::string s = "{\n  \"interval_count\": " + std::to_string(interval) +
                  ",\n  \"unnamed_count\": " + std::to_string(unnamed) +
                  ",\n  \"nodes\": [\n";
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (i) s += ",\n";
    const auto& cs = sets[i];
    s += "    {\"name\": \"" + json_escape(set_label(cs)) + "\", \"size\": " +
         std::to_string(cs.profiles.size()) + ", \"endpoint\": " +
         (cs.endpoint ? "true" : "false") + ", \"profiles\": [";
    auto ps = cs.profiles.to_vector();
    for (std::size_t j = 0; j < ps.size(); ++j) {
      if (j) s += ", ";
      s += "\"" + ps[j].to_string() + "\"";
    }
    s += "]}";
  }
  s += "\n  ],\n  \"edges\": [\n";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) s += ",\n";
    s += "    {\"from\": \"" + json_escape(set_label(sets[edges[i].from])) +
         "\", \"to\": \"" + json_escape(set_label(sets[edges[i].to])) + "\"}";
  }
  s += "\n  ]\n}\n";
  return s;
}

std::string lattice_to_dot(const std::vector<ClosedSet>& sets,
                           const std::vector<HasseEdge>& edges) {
  std::string s = "digraph interval {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const auto& cs = sets[i];
    std::string label = set_label(cs);
    s += "  n" + std::to_string(i) + " [label=\"" + json_escape(label) +
         "\\n" + json_escape(cs.profiles.to_string()) + "\"";
    if (cs.endpoint) s += ", style=dashed";
    s += "];\n";
  }
  for (const auto& e : edges)
    s += "  n" + std::to_string(e.from) + " -> n" + std::to_string(e.to) +
         ";\n";
  s += "}\n";
  return s;
}

const std::vector<MaximalityExpectation>& maximality_expectations() {
  static const std::vector<MaximalityExpectation> table = [] {
    auto N = [](const char* s) { return SemigroupName::parse(s); };
    auto L = [&N](std::initializer_list<const char*> names) {
      std::vector<SemigroupName> v;
      for (const char* s : names) v.push_back(N(s));
      std::sort(v.begin(), v.end());
      return v;
    };
    std::vector<MaximalityExpectation> t;
    auto add = [&](const char* name, std::initializer_list<const char*> exp) {
      t.push_back({N(name), L(exp), false, {}});
    };
    add("Omega", {"S1", "S2", "S3", "S4", "S5"});
    add("S1", {"S{1,2}", "S{1,3}", "S{1,4}", "S{1,5}"});
    // The statement in the source lists S1's maximal subsemigroups here as
    // well; the proof selects representatives outside S{2,3}, S{2,4} and
    // S{2,5}, which is what the computation confirms.
    t.push_back({N("S2"),
                 L({"S{1,2}", "S{2,3}", "S{2,4}", "S{2,5}"}),
                 true,
                 L({"S{1,2}", "S{1,3}", "S{1,4}", "S{1,5}"})});
    add("S3", {"S{1,3}", "U", "S{3,4}", "S{3,5}"});
    add("S4", {"V", "S{2,4}", "S{3,4}", "S{4,5}"});
    add("S5", {"S{1,5}", "S{2,5}", "S{3,5}", "S{4,5}"});
    add("V", {"S{1,4}", "V&S2", "V&S5"});
    add("U", {"U&S1", "S{2,3}", "U&S5"});
    add("S{1,2}", {"S{1,2,3}", "S{1,2,4}", "S{1,2,5}"});
    add("S{1,3}", {"U&S1", "S{1,3,4}", "S{1,3,5}"});
    add("S{1,4}", {"S{1,2,4}", "S{1,3,4}", "S{1,4,5}"});
    add("S{1,5}", {"S{1,2,5}", "S{1,3,5}", "S{1,4,5}"});
    add("S{2,3}", {"S{1,2,3}", "S{2,3,4}", "S{2,3,5}"});
    add("S{2,4}", {"V&S2", "S{2,3,4}", "S{2,4,5}"});
    add("S{2,5}", {"S{1,2,5}", "S{2,3,5}", "S{2,4,5}"});
    add("S{3,4}", {"S{1,3,4}", "S{2,3,4}", "S{3,4,5}"});
    add("S{3,5}", {"S{1,3,5}", "U&S5", "S{3,4,5}"});
    add("S{4,5}", {"V&S5", "S{2,4,5}", "S{3,4,5}"});
    add("V&S2", {"S{1,2,4}", "V&S{2,5}"});
    add("U&S1", {"S{1,2,3}", "U&S{1,5}"});
    add("V&S5", {"S{1,4,5}", "V&S{2,5}"});
    add("U&S5", {"S{2,3,5}", "U&S{1,5}"});
    add("S{1,2,3}", {"S{1,2,3,4}", "S{1,2,3,5}"});
    add("S{1,2,4}", {"S{1,2,3,4}", "S{1,2,4,5}"});
    add("S{1,2,5}", {"S{1,2,3,5}", "S{1,2,4,5}"});
    add("S{1,3,4}", {"S{1,2,3,4}", "S{1,3,4,5}"});
    add("S{1,3,5}", {"S{1,3,4,5}", "U&S{1,5}"});
    add("S{1,4,5}", {"S{1,2,4,5}", "S{1,3,4,5}"});
    add("S{2,3,4}", {"S{1,2,3,4}", "S{2,3,4,5}"});
    add("S{2,3,5}", {"S{1,2,3,5}", "S{2,3,4,5}"});
    add("S{2,4,5}", {"S{2,3,4,5}", "V&S{2,5}"});
    add("S{3,4,5}", {"S{1,3,4,5}", "S{2,3,4,5}"});
    add("V&S{2,5}", {"S{1,2,4,5}"});
    add("U&S{1,5}", {"S{1,2,3,5}"});
    add("S{1,2,3,4}", {"S{1,2,3,4,5}"});
    add("S{1,2,3,5}", {"S{1,2,3,4,5}"});
    add("S{1,2,4,5}", {"S{1,2,3,4,5}"});
    add("S{1,3,4,5}", {"S{1,2,3,4,5}"});
    add("S{2,3,4,5}", {"S{1,2,3,4,5}"});
    return t;
  }();
  return table;
}

}  // namespace omega
