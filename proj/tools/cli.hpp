#pragma once

// Command-line front end. `run` is separate from main() so tests can drive
// it with in-memory streams.
//
// Exit codes: 0 success, 1 assertion or verification failure, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "neighborly/neighborly.hpp"

namespace neighborly::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Raised for flag values that parse but fall outside their domain.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "a,b,c,..." -> labels. Rejects empty items, signs, non-digits, odd
/// lengths and fewer than 4 entries.
inline std::vector<Label> parse_labels(const std::string& text) {
  std::vector<Label> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw UsageError("--labels: '" + item + "' is not a nonnegative integer");
    if (item.size() > 9) throw UsageError("--labels: '" + item + "' is too large");
    out.push_back(static_cast<Label>(std::stoul(item)));
  }
  if (!text.empty() && text.back() == ',') throw UsageError("--labels: trailing comma");
  if (out.size() % 2 != 0) throw UsageError("--labels: need an even number 2n of labels, got " + std::to_string(out.size()));
  if (out.size() < 4) throw UsageError("--labels: need n >= 2 diameters (at least 4 labels)");
  return out;
}

/// "d,v,f" -> VFPair.
inline constructions::VFPair parse_vfpair(const std::string& text, const char* flag) {
  std::vector<long long> xs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw UsageError(std::string(flag) + ": expected d,vertices,facets");
    xs.push_back(std::stoll(item));
  }
  if (xs.size() != 3) throw UsageError(std::string(flag) + ": expected d,vertices,facets");
  try {
    return constructions::make_vfpair(xs[0], xs[1], xs[2]);
  } catch (const DomainError& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

inline std::string labels_text(const GaleDiagram& d) {
  std::string s = "[";
  for (std::size_t i = 0; i < d.positions(); ++i) {
    if (i) s += ",";
    s += std::to_string(d.labels()[i]);
  }
  return s + "]";
}

inline ordered_json vfpair_json(const constructions::VFPair& p) {
  ordered_json j;
  j["d"] = p.d;
  j["vertices"] = p.vertices;
  j["facets"] = p.facets;
  return j;
}

inline ordered_json witness_json(unsigned k, std::int64_t delta3, const GaleDiagram& d) {
  ordered_json j;
  j["k"] = k;
  j["delta3"] = delta3;
  j["diagram"] = diagram_to_json(d);
  j["cofacets"] = count_cofacets(d);
  j["vertices"] = d.vertex_count();
  return j;
}

inline ordered_json summary_json(const SearchResult& r) {
  ordered_json j;
  j["summary"] = true;
  j["k"] = r.k;
  j["delta3"] = r.delta3;
  j["prune"] = std::string(to_string(r.prune));
  j["closed_form"] = delta3_closed_form(r.k);
  j["witnesses"] = r.witnesses.size();
  j["nodes"] = r.stats.nodes;
  j["evaluated"] = r.stats.evaluated;
  j["seconds"] = r.stats.seconds;
  return j;
}

inline const char* check_mark(bool ok) { return ok ? "pass" : "FAIL"; }

inline std::string check_text(const PropertyCheck& c) {
  std::string s = check_mark(c.pass);
  if (!c.pass && c.at) s += " at " + std::to_string(*c.at);
  return s;
}

inline ordered_json check_json(const PropertyCheck& c) {
  ordered_json j;
  j["pass"] = c.pass;
  if (c.at) j["at"] = *c.at;
  return j;
}

inline unsigned default_jobs() {
  if (const char* env = std::getenv("NEIGHBORLY_GALE_JOBS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1 && v <= 1024) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

/// Examples 1-3 against their closed forms for k = 2..k_max. Returns false on
/// any mismatch.
inline bool example_table(unsigned k_max, std::ostream& out, bool json) {
  bool all = true;
  if (!json) out << "example  k  cofacets  vertices  expected  match\n";
  for (int which = 1; which <= 3; ++which) {
    for (unsigned k = 2; k <= k_max; ++k) {
      const auto d = constructions::build_example(which, k);
      const auto f = static_cast<std::int64_t>(count_cofacets(d));
      const auto v = static_cast<std::int64_t>(d.vertex_count());
      const auto ef = constructions::example_facets_closed_form(which, k);
      const auto ev = constructions::example_vertices_closed_form(which, k);
      const bool ok = f == ef && v == ev && is_k_neighborly(d, k);
      all = all && ok;
      if (json) {
        ordered_json j;
        j["example"] = which;
        j["k"] = k;
        j["cofacets"] = f;
        j["vertices"] = v;
        j["expected_cofacets"] = ef;
        j["expected_vertices"] = ev;
        j["match"] = ok;
        out << j.dump() << "\n";
      } else {
        out << std::setw(7) << which << std::setw(3) << k << std::setw(10) << f << std::setw(10) << v
            << std::setw(10) << ef << "  " << (ok ? "yes" : "NO") << "\n";
      }
    }
  }
  return all;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reduced Gale diagrams of k-neighborly d-polytopes with d+3 vertices"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  std::string format = "text";
  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  // delta3
  unsigned k = 0;
  std::string prune = "marcus";
  unsigned jobs = default_jobs();
  bool emit_all = false, show_stats = false;
  std::string out_path;
  auto* delta3 = app.add_subcommand("delta3", "Minimum of cofacets - vertices over k-neighborly diagrams");
  delta3->add_option("--k", k, "Neighborliness k >= 2")->required()->check(CLI::Range(2u, 12u));
  delta3->add_option("--prune", prune, "Search space")->check(CLI::IsMember({"marcus", "minimal", "extremal"}));
  delta3->add_option("--jobs", jobs, "Worker threads (default $NEIGHBORLY_GALE_JOBS or 1)")
      ->check(CLI::Range(1u, 1024u));
  delta3->add_flag("--emit-all", emit_all, "Report every optimal witness");
  delta3->add_flag("--stats", show_stats, "Print search statistics in text mode");
  delta3->add_option("--out", out_path, "Write JSON-lines results to FILE");
  add_format(delta3);

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "Stream one diagram per symmetry class as JSON lines");
  enumerate->add_option("--k", k, "Neighborliness k >= 2")->required()->check(CLI::Range(2u, 12u));
  enumerate->add_option("--prune", prune, "Search space")->check(CLI::IsMember({"marcus", "minimal", "extremal"}));
  enumerate->add_option("--out", out_path, "Write to FILE instead of stdout");

  // cofacets / check
  std::string labels_arg;
  unsigned center = 0;
  bool use_oracle = false, list = false;
  auto* cofacets = app.add_subcommand("cofacets", "Count the cofacets of a diagram");
  cofacets->add_option("--labels", labels_arg, "Comma-separated labels m_0,...,m_{2n-1}")->required();
  cofacets->add_option("--center", center, "Center label m(O)");
  cofacets->add_flag("--oracle", use_oracle, "Also count geometrically and require agreement");
  cofacets->add_flag("--list", list, "List the cofacet shapes");
  add_format(cofacets);

  auto* check = app.add_subcommand("check", "Validate a diagram against k-neighborliness");
  check->add_option("--labels", labels_arg, "Comma-separated labels m_0,...,m_{2n-1}")->required();
  check->add_option("--center", center, "Center label m(O)");
  check->add_option("--k", k, "Neighborliness k >= 1")->required()->check(CLI::Range(1u, 1000u));
  add_format(check);

  // bound
  std::string bound_name;
  std::optional<long long> bd, bn, bk, bj;
  auto* bound = app.add_subcommand("bound", "Evaluate a closed-form facet bound");
  bound->add_option("name", bound_name, "lbt | ubt | gtheorem | smallvert | corollary2")
      ->required()
      ->check(CLI::IsMember(bounds::bound_names()));
  bound->add_option("--d", bd, "Dimension d");
  bound->add_option("--n", bn, "Vertex count n");
  bound->add_option("--k", bk, "Neighborliness k");
  bound->add_option("--j", bj, "Face dimension j (gtheorem; default d-1)");
  add_format(bound);

  // construct
  std::string kind;
  long long cm = 0, cn = 0;
  std::string p_arg, q_arg;
  auto* construct = app.add_subcommand("construct", "Build an example diagram or combine (d, vertices, facets)");
  construct->add_option("kind", kind, "example1 | example2 | example3 | join | pyramid | family")
      ->required()
      ->check(CLI::IsMember({"example1", "example2", "example3", "join", "pyramid", "family"}));
  construct->add_option("--k", k, "Neighborliness k >= 2 (examples)");
  construct->add_option("--m", cm, "Family index m >= 0");
  construct->add_option("--n", cn, "Family base vertex count n >= 5");
  construct->add_option("--p", p_arg, "Operand d,vertices,facets");
  construct->add_option("--q", q_arg, "Second join operand d,vertices,facets");
  add_format(construct);

  // verify
  unsigned kmax = 0;
  auto* verify = app.add_subcommand("verify", "Check the searched optimum and the example table against closed forms");
  verify->add_option("--kmax", kmax, "Largest k, 2..7")->required()->check(CLI::Range(2u, 7u));
  verify->add_option("--prune", prune, "Search space")->check(CLI::IsMember({"marcus", "minimal", "extremal"}));
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
  add_format(verify);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }

  const bool json = format == "json";
  try {
    if (*delta3) {
      SearchConfig cfg;
      cfg.k = k;
      cfg.prune = parse_prune_level(prune);
      cfg.emit_all = emit_all;
      cfg.jobs = jobs;
      const SearchResult r = find_delta3(cfg);
      std::ofstream file;
      if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw UsageError("cannot open --out file '" + out_path + "'");
      }
      if (json || file.is_open()) {
        std::ostream& sink = file.is_open() ? static_cast<std::ostream&>(file) : out;
        for (const auto& w : r.witnesses) sink << witness_json(r.k, r.delta3, w).dump() << "\n";
        sink << summary_json(r).dump() << "\n";
      }
      if (!json) {
        out << "k = " << r.k << "  prune = " << to_string(r.prune) << "  delta3 = " << r.delta3
            << "  closed form = " << delta3_closed_form(r.k) << "\n";
        out << "witnesses: " << r.witnesses.size() << "\n";
        for (const auto& w : r.witnesses)
          out << "  n=" << w.diameters() << " labels=" << labels_text(w) << " cofacets=" << count_cofacets(w)
              << " vertices=" << w.vertex_count() << "\n";
        if (show_stats)
          out << "nodes=" << r.stats.nodes << " evaluated=" << r.stats.evaluated << " seconds=" << r.stats.seconds
              << "\n";
      }
      return kExitOk;
    }

    if (*enumerate) {
      SearchConfig cfg;
      cfg.k = k;
      cfg.prune = parse_prune_level(prune);
      std::ofstream file;
      if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw UsageError("cannot open --out file '" + out_path + "'");
      }
      std::ostream& sink = file.is_open() ? static_cast<std::ostream&>(file) : out;
      const auto stats = enumerate_diagrams(cfg, [&](const GaleDiagram& d) { sink << diagram_to_json(d).dump() << "\n"; });
      if (file.is_open()) out << "wrote " << stats.evaluated << " diagrams to " << out_path << "\n";
      return kExitOk;
    }

    if (*cofacets) {
      const GaleDiagram d(parse_labels(labels_arg), center);
      const Count count = count_cofacets(d);
      std::optional<Count> oracle_count;
      if (use_oracle) {
        try {
          oracle_count = oracle::oracle_count_cofacets(d);
        } catch (const OracleTooLarge& e) {
          throw UsageError(e.what());
        }
      }
      if (json) {
        ordered_json j;
        j["diagram"] = diagram_to_json(d);
        j["cofacets"] = count;
        j["vertices"] = d.vertex_count();
        if (oracle_count) j["oracle"] = *oracle_count;
        if (list) {
          ordered_json arr = ordered_json::array();
          for (const auto& c : list_cofacets(d)) {
            ordered_json item;
            if (std::holds_alternative<CenterCofacet>(c.shape)) {
              item["type"] = "center";
            } else if (const auto* p = std::get_if<PairCofacet>(&c.shape)) {
              item["type"] = "pair";
              item["positions"] = {p->i, p->i + d.diameters()};
            } else {
              const auto& t = std::get<TriangleCofacet>(c.shape);
              item["type"] = "triangle";
              item["positions"] = {t.a, t.b, t.c};
            }
            item["multiplicity"] = c.multiplicity;
            arr.push_back(item);
          }
          j["cofacet_list"] = arr;
        }
        out << j.dump() << "\n";
      } else {
        out << count << "\n";
        if (oracle_count) out << "oracle: " << *oracle_count << "\n";
        if (list) {
          for (const auto& c : list_cofacets(d)) {
            if (std::holds_alternative<CenterCofacet>(c.shape)) {
              out << "  center";
            } else if (const auto* p = std::get_if<PairCofacet>(&c.shape)) {
              out << "  pair " << p->i << " " << p->i + d.diameters();
            } else {
              const auto& t = std::get<TriangleCofacet>(c.shape);
              out << "  triangle " << t.a << " " << t.b << " " << t.c;
            }
            out << " x" << c.multiplicity << "\n";
          }
        }
      }
      if (oracle_count && *oracle_count != count) {
        err << "assertion failed: gap-rule count " << count << " != oracle count " << *oracle_count << "\n"
            << "witness: " << diagram_to_json_text(d) << "\n";
        return kExitFailure;
      }
      return kExitOk;
    }

    if (*check) {
      const GaleDiagram d(parse_labels(labels_arg), center);
      const auto r = validate(d, k);
      const bool minimal = is_minimal(d, k);
      if (json) {
        ordered_json j;
        j["diagram"] = diagram_to_json(d);
        j["k"] = k;
        j["dimension"] = r.dimension;
        j["P1"] = check_json(r.p1);
        j["P2"] = check_json(r.p2);
        j["P3"] = check_json(r.p3);
        j["P4"] = check_json(r.p4);
        j["N"] = check_json(r.n_k);
        j["S"] = check_json(r.s);
        j["minimal"] = minimal;
        j["cofacets"] = count_cofacets(d);
        j["vertices"] = d.vertex_count();
        out << j.dump() << "\n";
      } else {
        out << "diagram     n=" << d.diameters() << " center=" << d.center() << " labels=" << labels_text(d) << "\n"
            << "P1 (d)      " << check_mark(r.p1.pass) << " d=" << r.dimension << "\n"
            << "P2          " << check_text(r.p2) << "\n"
            << "P3          " << check_text(r.p3) << "\n"
            << "P4          " << check_text(r.p4) << "\n"
            << "N(k=" << k << ")      " << check_text(r.n_k) << "\n"
            << "S           " << check_text(r.s) << "\n"
            << "minimal     " << (minimal ? "yes" : "no") << "\n"
            << "cofacets    " << count_cofacets(d) << "\n"
            << "vertices    " << d.vertex_count() << "\n";
      }
      return kExitOk;
    }

    if (*bound) {
      bounds::BoundReport r;
      try {
        r = bounds::evaluate_bound(bound_name, {bd, bn, bk, bj});
      } catch (const DomainError& e) {
        throw UsageError(e.what());
      }
      if (json) {
        ordered_json j;
        j["bound"] = r.name;
        if (r.params.d) j["d"] = *r.params.d;
        if (r.params.n) j["n"] = *r.params.n;
        if (r.params.k) j["k"] = *r.params.k;
        if (r.params.j) j["j"] = *r.params.j;
        j["value"] = r.value;
        j["citation"] = r.citation;
        out << j.dump() << "\n";
      } else {
        std::string params;
        const auto add = [&](const char* name, const std::optional<long long>& v) {
          if (!v) return;
          if (!params.empty()) params += ", ";
          params += std::string(name) + "=" + std::to_string(*v);
        };
        add("d", r.params.d);
        add("n", r.params.n);
        add("k", r.params.k);
        add("j", r.params.j);
        out << r.name << "(" << params << ") = " << r.value << "\n" << "  " << r.citation << "\n";
      }
      return kExitOk;
    }

    if (*construct) {
      if (kind.rfind("example", 0) == 0) {
        if (k < 2) throw UsageError("construct " + kind + ": --k >= 2 required");
        const int which = kind.back() - '0';
        const auto d = constructions::build_example(which, k);
        if (json) {
          out << diagram_to_json(d).dump() << "\n";
        } else {
          out << kind << " k=" << k << ": n=" << d.diameters() << " labels=" << labels_text(d)
              << " cofacets=" << count_cofacets(d) << " vertices=" << d.vertex_count() << "\n";
        }
        return kExitOk;
      }
      constructions::VFPair p;
      if (kind == "family") {
        try {
          p = constructions::recursive_family(cm, cn);
        } catch (const DomainError& e) {
          throw UsageError(e.what());
        }
      } else if (kind == "pyramid") {
        if (p_arg.empty()) throw UsageError("construct pyramid: --p d,vertices,facets required");
        p = constructions::pyramid(parse_vfpair(p_arg, "--p"));
      } else {
        if (p_arg.empty() || q_arg.empty()) throw UsageError("construct join: --p and --q required");
        p = constructions::join(parse_vfpair(p_arg, "--p"), parse_vfpair(q_arg, "--q"));
      }
      if (json)
        out << vfpair_json(p).dump() << "\n";
      else
        out << "d=" << p.d << " vertices=" << p.vertices << " facets=" << p.facets << " gap=" << p.gap() << "\n";
      return kExitOk;
    }

    if (*verify) {
      const auto rows = verify_theorem1(kmax, parse_prune_level(prune), jobs);
      if (json) {
        for (const auto& row : rows) {
          ordered_json j;
          j["k"] = row.k;
          j["search"] = row.searched;
          j["closed_form"] = row.closed_form;
          j["match"] = row.match;
          j["facets_at_least_vertices"] = row.facets_at_least_vertices;
          j["witness"] = diagram_to_json(row.result.witnesses.front());
          out << j.dump() << "\n";
        }
      } else {
        out << "k  search  closed  match\n";
        for (const auto& row : rows)
          out << row.k << std::setw(8) << row.searched << std::setw(8) << row.closed_form << "  "
              << (row.match ? "yes" : "NO") << "\n";
      }
      const bool examples_ok = example_table(kmax, out, json);
      if (!examples_ok) {
        err << "example table mismatch\n";
        return kExitFailure;
      }
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const MalformedDiagram& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const VerificationFailure& e) {
    err << "verification failed: " << e.what() << "\n";
    if (!e.witness().empty()) err << "witness: " << e.witness() << "\n";
    return kExitFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace neighborly::cli
