// Command-line front end: catalog inspection, membership queries,
// certificate generation and verification, table crosscheck, and lattice
// enumeration with DOT/JSON export.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "omega/catalog.hpp"
#include "omega/construct.hpp"
#include "omega/errors.hpp"
#include "omega/lattice.hpp"
#include "omega/membership.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kPrecondition = 1;
constexpr int kVerification = 2;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw omega::Error("cannot open output file: " + out_path);
  out << text;
}

std::string window_blob(std::uint64_t N, std::uint64_t B, std::uint64_t T) {
  return "{\"N\":" + std::to_string(N) + ",\"B\":" + std::to_string(B) +
         ",\"T\":" + std::to_string(T) + "}";
}

std::string witness_blob(const omega::Transformation& t) {
  const auto& cp = *t.certified();
  std::string s = "{\"id\":\"" + t.id() + "\",\"description\":\"" +
                  t.description() + "\",\"profile\":\"" +
                  cp.profile.to_string() + "\"";
  if (cp.exact_c && cp.exact_d && cp.exact_k)
    s += ",\"exact\":{\"c\":\"" + cp.exact_c->to_string() + "\",\"d\":\"" +
         cp.exact_d->to_string() + "\",\"k\":\"" + cp.exact_k->to_string() +
         "\"}";
  s += "}";
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"subsemigroup interval toolkit for self-maps of N"};
  app.require_subcommand(1);

  const std::uint64_t win_B = 10000, win_T = 3;
  std::string out_path;

  // profiles
  auto* cmd_profiles = app.add_subcommand("profiles", "list the 12 profiles");

  // witness <id> [--report N,B,T]
  std::string wit_id;
  std::vector<std::uint64_t> report_nbt;
  auto* cmd_witness = app.add_subcommand("witness", "inspect a catalog witness");
  cmd_witness->add_option("id", wit_id)->required();
  cmd_witness->add_option("--report", report_nbt,
                          "window report parameters N,B,T")
      ->delimiter(',')
      ->expected(3);

  // member <name> <witness-id>
  std::string mem_name, mem_id;
  auto* cmd_member = app.add_subcommand("member", "membership query");
  cmd_member->add_option("name", mem_name)->required();
  cmd_member->add_option("witness-id", mem_id)->required();

  // certify --lemma fam:part --u id [--v id] [--t id] --f id [--window N]
  std::string lemma_spec, u_id, v_id, t_id, f_id;
  std::uint64_t cert_window = 1000;
  auto* cmd_certify =
      app.add_subcommand("certify", "produce and verify a generation certificate");
  cmd_certify->add_option("--lemma", lemma_spec, "tech|tech2|techk:part")
      ->required();
  cmd_certify->add_option("--u", u_id)->required();
  cmd_certify->add_option("--v", v_id);
  cmd_certify->add_option("--t", t_id);
  cmd_certify->add_option("--f", f_id)->required();
  cmd_certify->add_option("--window", cert_window);

  // crosscheck-table
  auto* cmd_crosscheck =
      app.add_subcommand("crosscheck-table", "verify the classification table");

  // lattice [--format dot|json] [--out path]
  std::string lat_format = "json";
  auto* cmd_lattice =
      app.add_subcommand("lattice", "enumerate the interval and its Hasse diagram");
  cmd_lattice->add_option("--format", lat_format)
      ->check(CLI::IsMember({"json", "dot"}));
  cmd_lattice->add_option("--out", out_path);

  // maximal <name> [--format json|dot]
  std::string max_name, max_format = "json";
  auto* cmd_maximal =
      app.add_subcommand("maximal", "maximal subsemigroups below a name");
  cmd_maximal->add_option("name", max_name)->required();
  cmd_maximal->add_option("--format", max_format)
      ->check(CLI::IsMember({"json", "dot"}));
  cmd_maximal->add_option("--out", out_path);

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_profiles->parsed()) {
      std::string s = "[";
      for (int i = 0; i < 12; ++i) {
        if (i) s += ",";
        s += "\"" + omega::valid_profiles()[i].to_string() + "\"";
      }
      s += "]";
      emit(s, "");
      return kOk;
    }

    if (cmd_witness->parsed()) {
      const auto& t = omega::witness(wit_id);
      std::string s = witness_blob(t);
      if (!report_nbt.empty()) {
        auto rep =
            omega::window_report(t, report_nbt[0], report_nbt[1], report_nbt[2]);
        s = "{\"witness\":" + s + ",\"report\":" + rep.to_json() + "}";
      }
      emit(s, "");
      return kOk;
    }

    if (cmd_member->parsed()) {
      auto name = omega::SemigroupName::parse(mem_name);
      const auto& t = omega::witness(mem_id);
      bool m = omega::contains(name, t);
      emit("{\"name\":\"" + name.to_string() + "\",\"witness\":\"" + t.id() +
               "\",\"member\":" + (m ? "true" : "false") + "}",
           "");
      return kOk;
    }

    if (cmd_certify->parsed()) {
      auto colon = lemma_spec.find(':');
      if (colon == std::string::npos)
        throw omega::ParseError("lemma spec must be family:part");
      auto family = omega::parse_lemma_family(lemma_spec.substr(0, colon));
      auto part = omega::parse_lemma_part(lemma_spec.substr(colon + 1));
      std::optional<omega::Transformation> v, t;
      if (!v_id.empty()) v = omega::witness(v_id);
      if (!t_id.empty()) t = omega::witness(t_id);
      auto cert = omega::lemma_dispatch(family, part, omega::witness(u_id), v,
                                        t, omega::witness(f_id));
      auto rep = omega::verify_certificate(cert, cert_window);
      std::string s = "{\"certificate\":" + cert.to_json() +
                      ",\"verify\":" + rep.to_json() +
                      ",\"window\":" + window_blob(cert_window, win_B, win_T) +
                      "}";
      emit(s, "");
      return rep.ok ? kOk : kVerification;
    }

    if (cmd_crosscheck->parsed()) {
      auto rep = omega::table_crosscheck();
      emit(rep.to_json(), "");
      return rep.mismatches == 0 ? kOk : kVerification;
    }

    if (cmd_lattice->parsed()) {
      auto rel = omega::build_comp_rel();
      auto sets = omega::enumerate_interval(rel);
      auto edges = omega::hasse(sets);
      std::string s = lat_format == "dot"
                          ? omega::lattice_to_dot(sets, edges)
                          : omega::lattice_to_json(sets, edges);
      emit(s, out_path);
      // Unnamed closed sets indicate a broken relation.
      for (const auto& cs : sets)
        if (cs.names.empty()) return kVerification;
      return kOk;
    }

    if (cmd_maximal->parsed()) {
      auto name = omega::SemigroupName::parse(max_name);
      auto rel = omega::build_comp_rel();
      auto sets = omega::enumerate_interval(rel);
      auto below = omega::maximal_in(name, sets);
      if (max_format == "dot") {
        std::string s = "digraph maximal {\n  rankdir=BT;\n";
        for (std::size_t i = 0; i < below.size(); ++i)
          s += "  m" + std::to_string(i) + " [label=\"" +
               below[i].to_string() + "\"];\n  m" + std::to_string(i) +
               " -> top;\n";
        s += "  top [label=\"" + name.to_string() + "\"];\n}\n";
        emit(s, out_path);
        return kOk;
      }
      std::string s = "{\"name\":\"" + name.to_string() + "\",\"maximal\":[";
      for (std::size_t i = 0; i < below.size(); ++i) {
        if (i) s += ",";
        s += "\"" + below[i].to_string() + "\"";
      }
      s += "]";
      for (const auto& exp : omega::maximality_expectations()) {
        if (exp.name == name && exp.statement_erratum) {
          s += ",\"statement_erratum\":true,\"statement_list\":[";
          for (std::size_t i = 0; i < exp.statement_list.size(); ++i) {
            if (i) s += ",";
            s += "\"" + exp.statement_list[i].to_string() + "\"";
          }
          s += "]";
        }
      }
      s += "}";
      emit(s, out_path);
      return kOk;
    }
  } catch (const omega::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecondition;
  }
  return kPrecondition;
}
