#include "omega/membership.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "omega/errors.hpp"

#ifndef OMEGA_SOURCE_DATA_DIR
#define OMEGA_SOURCE_DATA_DIR "data"
#endif

namespace omega {

SemigroupName SemigroupName::of(std::initializer_list<Atom> atoms) {
  SemigroupName n;
  for (Atom a : atoms) n.bits_ |= static_cast<std::uint8_t>(1u << static_cast<int>(a));
  return n;
}

SemigroupName SemigroupName::with(Atom a) const {
  SemigroupName n(*this);
  n.bits_ |= static_cast<std::uint8_t>(1u << static_cast<int>(a));
  return n;
}

std::vector<Atom> SemigroupName::atoms() const {
  std::vector<Atom> out;
  for (int i = 0; i < 7; ++i)
    if ((bits_ >> i) & 1) out.push_back(static_cast<Atom>(i));
  return out;
}

std::string SemigroupName::to_string() const {
  if (is_full()) return "Omega";
  std::string s;
  if (has(Atom::U)) s += "U";
  if (has(Atom::V)) {
    if (!s.empty()) s += "&";
    s += "V";
  }
  std::vector<int> is;
  for (int i = 0; i < 5; ++i)
    if ((bits_ >> i) & 1) is.push_back(i + 1);
  if (!is.empty()) {
    if (!s.empty()) s += "&";
    if (is.size() == 1) {
      s += "S" + std::to_string(is[0]);
    } else {
      s += "S{";
      for (std::size_t i = 0; i < is.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(is[i]);
      }
      s += "}";
    }
  }
  return s;
}

SemigroupName SemigroupName::parse(const std::string& s) {
  if (s == "Omega" || s == "omega") return full();
  SemigroupName n;
  std::istringstream in(s);
  std::string part;
  while (std::getline(in, part, '&')) {
    if (part == "U") {
      n = n.with(Atom::U);
    } else if (part == "V") {
      n = n.with(Atom::V);
    } else if (part.size() == 2 && part[0] == 'S' && part[1] >= '1' &&
               part[1] <= '5') {
      n = n.with(static_cast<Atom>(part[1] - '1'));
    } else if (part.size() >= 4 && part.rfind("S{", 0) == 0 &&
               part.back() == '}') {
      std::istringstream nums(part.substr(2, part.size() - 3));
      std::string tok;
      while (std::getline(nums, tok, ',')) {
        if (tok.size() != 1 || tok[0] < '1' || tok[0] > '5')
          throw UnknownName("bad semigroup name: " + s);
        n = n.with(static_cast<Atom>(tok[0] - '1'));
      }
    } else {
      throw UnknownName("bad semigroup name: " + s);
    }
  }
  if (n.is_full() && !s.empty() && s != "Omega" && s != "omega")
    throw UnknownName("bad semigroup name: " + s);
  return n;
}

namespace {

const Profile kPerm{CdClass::Zero, CdClass::Zero, KClass::Fin};

bool atom_holds(Atom a, const Profile& p) {
  switch (a) {
    case Atom::S1:
      return p.c == CdClass::Zero || p.d != CdClass::Zero;
    case Atom::S2:
      return p.c != CdClass::Zero || p.d == CdClass::Zero;
    case Atom::S3:
      return p.c != CdClass::Inf || p.d == CdClass::Inf;
    case Atom::S4:
      return p.c == CdClass::Inf || p.d != CdClass::Inf;
    case Atom::S5:
      return p.k == KClass::Fin;
    case Atom::U:
      return p.d == CdClass::Inf || p.c == CdClass::FinPos || p == kPerm;
    case Atom::V:
      return p.c == CdClass::Inf || p.d == CdClass::FinPos || p == kPerm;
  }
  throw Error("bad atom");
}

}  // namespace

ProfileSet atom_profiles(Atom a) {
  ProfileSet s;
  for (const auto& p : valid_profiles())
    if (atom_holds(a, p)) s.insert(p);
  return s;
}

ProfileSet profile_set(const SemigroupName& name) {
  ProfileSet s = ProfileSet::all();
  for (Atom a : name.atoms()) s = s & atom_profiles(a);
  return s;
}

bool semantically_equal(const SemigroupName& a, const SemigroupName& b) {
  return profile_set(a) == profile_set(b);
}

bool contains(const SemigroupName& name, const Transformation& f) {
  const auto& cp = f.certified_or_throw();
  return profile_set(name).contains(cp.profile);
}

const SemigroupName& base_name() {
  static const SemigroupName n =
      SemigroupName::of({Atom::S1, Atom::S2, Atom::S3, Atom::S4, Atom::S5});
  return n;
}

const std::vector<SemigroupName>& names_in_scope() {
  static const std::vector<SemigroupName> table = [] {
    std::vector<SemigroupName> v;
    v.push_back(SemigroupName::full());
    // Proper nonempty intersections of S1..S5, by size then lexicographic.
    for (int size = 1; size <= 4; ++size)
      for (int mask = 1; mask < 32; ++mask) {
        int pop = __builtin_popcount(mask);
        if (pop != size) continue;
        SemigroupName n;
        for (int i = 0; i < 5; ++i)
          if ((mask >> i) & 1) n = n.with(static_cast<Atom>(i));
        v.push_back(n);
        if (size == 1) {
          if (mask == 1 << 4) {  // after S5, slot in U and V
            v.push_back(SemigroupName::of({Atom::U}));
            v.push_back(SemigroupName::of({Atom::V}));
          }
        }
      }
    // The remaining extras of the classification.
    v.push_back(SemigroupName::of({Atom::U, Atom::S1}));
    v.push_back(SemigroupName::of({Atom::V, Atom::S2}));
    v.push_back(SemigroupName::of({Atom::U, Atom::S5}));
    v.push_back(SemigroupName::of({Atom::V, Atom::S5}));
    v.push_back(SemigroupName::of({Atom::U, Atom::S1, Atom::S5}));
    v.push_back(SemigroupName::of({Atom::V, Atom::S2, Atom::S5}));
    v.push_back(base_name());
    return v;
  }();
  return table;
}

std::vector<SemigroupName> names_for(const ProfileSet& set) {
  std::vector<SemigroupName> out;
  for (const auto& n : names_in_scope())
    if (profile_set(n) == set) out.push_back(n);
  return out;
}

// --- description parser ---

namespace {

struct Tokenizer {
  std::vector<std::string> toks;
  std::size_t pos = 0;

  explicit Tokenizer(const std::string& s) {
    std::istringstream in(s);
    std::string t;
    while (in >> t) toks.push_back(t);
  }
  bool done() const { return pos >= toks.size(); }
  const std::string& peek() const {
    static const std::string empty;
    return done() ? empty : toks[pos];
  }
  std::string next() {
    if (done()) throw ParseError("unexpected end of description");
    return toks[pos++];
  }
};

using Pred = std::function<bool(const Profile&)>;

Pred parse_expr(Tokenizer& tz);

Pred parse_atom_cond(Tokenizer& tz) {
  std::string t = tz.next();
  if (t == "(") {
    Pred inner = parse_expr(tz);
    if (tz.next() != ")") throw ParseError("expected ')'");
    return inner;
  }
  if (t == "sym") return [](const Profile& p) { return p == kPerm; };

  auto cd_of = [](const Profile& p, char v) {
    return v == 'c' ? p.c : p.d;
  };
  if (t.size() >= 3 && (t[0] == 'c' || t[0] == 'd')) {
    char v = t[0];
    std::string rest = t.substr(1);
    if (rest == "=0")
      return [cd_of, v](const Profile& p) { return cd_of(p, v) == CdClass::Zero; };
    if (rest == ">0")
      return [cd_of, v](const Profile& p) { return cd_of(p, v) != CdClass::Zero; };
    if (rest == "<inf")
      return [cd_of, v](const Profile& p) { return cd_of(p, v) != CdClass::Inf; };
    if (rest == "=inf")
      return [cd_of, v](const Profile& p) { return cd_of(p, v) == CdClass::Inf; };
  }
  if (t == "0<c<inf")
    return [](const Profile& p) { return p.c == CdClass::FinPos; };
  if (t == "0<d<inf")
    return [](const Profile& p) { return p.d == CdClass::FinPos; };
  if (t == "k<inf") return [](const Profile& p) { return p.k == KClass::Fin; };
  if (t == "k=inf") return [](const Profile& p) { return p.k == KClass::Inf; };
  throw ParseError("bad condition token: " + t);
}

Pred parse_term(Tokenizer& tz) {
  Pred lhs = parse_atom_cond(tz);
  while (!tz.done() && tz.peek() == "&") {
    tz.next();
    Pred rhs = parse_atom_cond(tz);
    lhs = [lhs, rhs](const Profile& p) { return lhs(p) && rhs(p); };
  }
  return lhs;
}

Pred parse_expr(Tokenizer& tz) {
  Pred lhs = parse_term(tz);
  while (!tz.done() && tz.peek() == "or") {
    tz.next();
    Pred rhs = parse_term(tz);
    lhs = [lhs, rhs](const Profile& p) { return lhs(p) || rhs(p); };
  }
  return lhs;
}

}  // namespace

ProfileSet parse_description(const std::string& description) {
  Tokenizer tz(description);
  Pred pred = parse_expr(tz);
  if (!tz.done())
    throw ParseError("trailing tokens in description: " + description);
  ProfileSet s;
  for (const auto& p : valid_profiles())
    if (pred(p)) s.insert(p);
  return s;
}

std::vector<TableRow> load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open table file: " + path);
  std::vector<TableRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    auto bar = line.find('|');
    if (bar == std::string::npos)
      throw ParseError("table line without '|': " + line);
    auto trim = [](std::string s) {
      auto b = s.find_first_not_of(" \t");
      auto e = s.find_last_not_of(" \t");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    TableRow row;
    row.name = SemigroupName::parse(trim(line.substr(0, bar)));
    row.description = trim(line.substr(bar + 1));
    row.parsed = parse_description(row.description);
    rows.push_back(std::move(row));
  }
  return rows;
}

CrosscheckReport table_crosscheck(const std::string& path) {
  CrosscheckReport rep;
  for (auto& row : load_table(path)) {
    CrosscheckRow cr;
    cr.computed = profile_set(row.name);
    cr.match = cr.computed == row.parsed;
    cr.row = std::move(row);
    if (!cr.match) ++rep.mismatches;
    if (!(cr.row.name == base_name())) ++rep.interval_rows;
    rep.rows.push_back(std::move(cr));
  }
  return rep;
}

CrosscheckReport table_crosscheck() {
  return table_crosscheck(default_data_dir() + "/semigroup_table.txt");
}

std::string CrosscheckReport::to_json() const {
  std::string s = "{\"rows\":" + std::to_string(rows.size()) +
                  ",\"interval_rows\":" + std::to_string(interval_rows) +
                  ",\"mismatches\":" + std::to_string(mismatches) +
                  ",\"mismatched_names\":[";
  bool first = true;
  for (const auto& r : rows) {
    if (r.match) continue;
    if (!first) s += ",";
    s += "\"" + r.row.name.to_string() + "\"";
    first = false;
  }
  s += "]}";
  return s;
}

std::string default_data_dir() {
  if (const char* env = std::getenv("OMEGA_DATA_DIR"); env && *env)
    return env;
  return OMEGA_SOURCE_DATA_DIR;
}

}  // namespace omega
