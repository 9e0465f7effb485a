#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include "mutalab/catalog.hpp"
#include "mutalab/decide.hpp"
#include "mutalab/io.hpp"
#include "repro.hpp"

#ifndef MUTALAB_GOLDEN_DIR
#define MUTALAB_GOLDEN_DIR "tests/golden"
#endif

namespace mutalab::cli {

namespace {

constexpr const char* kCatalogPrefix = "catalog:";

ValuedQuiver load_quiver(const std::string& source) {
  if (source.rfind(kCatalogPrefix, 0) == 0) return build_spec(source.substr(std::string(kCatalogPrefix).size())).quiver;
  return io::quiver_from_json(io::parse(io::read_file(source)));
}

std::size_t default_max_nodes() {
  const char* env = std::getenv("MUTALAB_MAX_NODES");
  if (!env || !*env) return ClassLimits{}.max_nodes;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) throw Error(ErrorCode::InvalidLimits, std::string("MUTALAB_MAX_NODES='") + env + "'");
  return static_cast<std::size_t>(v);
}

struct LimitFlags {
  std::optional<std::size_t> max_nodes;
  Int max_weight = ClassLimits{}.max_weight;

  void attach(CLI::App* cmd) {
    cmd->add_option("--max-nodes", max_nodes, "Node budget (default 100000 or $MUTALAB_MAX_NODES)");
    cmd->add_option("--max-weight", max_weight, "Edge weight treated as infinite-type witness above this")
        ->capture_default_str();
  }
  ClassLimits get() const {
    ClassLimits l{max_nodes ? *max_nodes : default_max_nodes(), max_weight};
    validate(l);
    return l;
  }
};

std::vector<LoopCertificate> load_certificates(const std::string& path) {
  const io::json doc = io::parse(io::read_file(path));
  std::vector<LoopCertificate> out;
  if (doc.is_array()) {
    for (const io::json& c : doc) out.push_back(io::certificate_from_json(c));
  } else if (doc.is_object() && doc.contains("certificates")) {
    for (const io::json& c : doc["certificates"]) out.push_back(io::certificate_from_json(c));
  } else {
    out.push_back(io::certificate_from_json(doc));
  }
  return out;
}

int repro_command(const std::string& name, bool bless, const std::string& golden_dir, std::ostream& out,
                  std::ostream& err) {
  const std::string text = repro::render(name);
  const std::string path = golden_dir + "/" + name + ".txt";
  out << text;
  if (bless) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorCode::FileNotFound, "cannot write '" + path + "'");
    f << text;
    err << "blessed " << path << "\n";
    return kOk;
  }
  const std::string golden = io::read_file(path);
  if (golden == text) {
    err << "matches " << path << "\n";
    return kOk;
  }
  // Report the first differing line.
  std::istringstream a(golden), b(text);
  std::string la, lb;
  for (int line = 1;; ++line) {
    const bool ha = static_cast<bool>(std::getline(a, la));
    const bool hb = static_cast<bool>(std::getline(b, lb));
    if (!ha && !hb) break;
    if (!ha || !hb || la != lb) {
      err << "differs from " << path << " at line " << line << "\n  golden:    " << (ha ? la : "<eof>")
          << "\n  generated: " << (hb ? lb : "<eof>") << "\n";
      break;
    }
  }
  return kDomainError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact valued quiver mutation, mutation classes and global mutation loops"};
  app.name("mutalab");
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  std::string input;
  const char* input_help = "Quiver JSON file, or catalog:NAME(params)";

  int k = 0;
  auto* mutate_cmd = app.add_subcommand("mutate", "Mutate at one vertex and print the quiver");
  mutate_cmd->add_option("-k", k, "1-based vertex")->required();
  mutate_cmd->add_option("input", input, input_help)->required();

  std::string word_text;
  auto* apply_cmd = app.add_subcommand("apply", "Apply a word (first letter first) and print the quiver");
  apply_cmd->add_option("-w,--word", word_text, "Comma-separated 1-based letters")->required();
  apply_cmd->add_option("input", input, input_help)->required();

  LimitFlags limits;
  bool dot = false;
  unsigned threads = 1;
  auto* enum_cmd = app.add_subcommand("enumerate", "Enumerate the mutation class");
  enum_cmd->add_option("input", input, input_help)->required();
  enum_cmd->add_flag("--dot", dot, "Print the exchange graph as DOT");
  enum_cmd->add_option("--threads", threads, "Worker threads")->capture_default_str();
  limits.attach(enum_cmd);

  auto* report_cmd = app.add_subcommand("report", "Class statistics for a finite class");
  report_cmd->add_option("input", input, input_help)->required();
  limits.attach(report_cmd);

  auto* loops_cmd = app.add_subcommand("loops", "Symmetric and global mutation loops");
  loops_cmd->require_subcommand(1);
  std::size_t max_len = 4;
  std::size_t max_words = SearchOptions{}.max_words;
  auto* search_cmd = loops_cmd->add_subcommand("search", "Certify every global loop up to a length");
  search_cmd->add_option("input", input, input_help)->required();
  search_cmd->add_option("--max-len", max_len, "Longest word")->capture_default_str();
  search_cmd->add_option("--max-words", max_words, "Word budget")->capture_default_str();
  search_cmd->add_option("--threads", threads, "Worker threads")->capture_default_str();
  limits.attach(search_cmd);
  std::string cert_path;
  auto* check_cmd = loops_cmd->add_subcommand("check", "Re-verify certificates from scratch");
  check_cmd->add_option("input", input, input_help)->required();
  check_cmd->add_option("certificate", cert_path, "Certificate JSON (object or array)")->required();
  limits.attach(check_cmd);
  auto* word_cmd = loops_cmd->add_subcommand("word", "Is a word a symmetric loop of this one quiver?");
  word_cmd->add_option("-w,--word", word_text, "Comma-separated 1-based letters")->required();
  word_cmd->add_option("input", input, input_help)->required();

  std::optional<std::size_t> cross_len;
  auto* decide_cmd = app.add_subcommand("decide", "Decide whether the class has global loops");
  decide_cmd->add_option("input", input, input_help)->required();
  decide_cmd->add_option("--cross-validate", cross_len, "Also search words up to this length and compare");
  limits.attach(decide_cmd);

  auto* catalog_cmd = app.add_subcommand("catalog", "Named quivers");
  catalog_cmd->require_subcommand(1);
  auto* list_cmd = catalog_cmd->add_subcommand("list", "List catalog names");
  std::string spec;
  auto* show_cmd = catalog_cmd->add_subcommand("show", "Print a catalog quiver");
  show_cmd->add_option("name", spec, "NAME or NAME(p1,...)")->required();
  show_cmd->add_flag("--dot", dot, "Print DOT instead of JSON");
  auto* match_cmd = catalog_cmd->add_subcommand("match", "Catalog entries a quiver is a relabelling of");
  match_cmd->add_option("input", input, input_help)->required();

  std::string repro_name;
  bool bless = false;
  std::string golden_dir = MUTALAB_GOLDEN_DIR;
  auto* repro_cmd = app.add_subcommand("repro", "Regenerate a table and diff it against its golden file");
  repro_cmd->add_option("name", repro_name, "table-1.2 | table-1.4 | example-2.8 | example-3.2")
      ->required()
      ->check(CLI::IsMember(repro::names()));
  repro_cmd->add_flag("--bless", bless, "Overwrite the golden file");
  repro_cmd->add_option("--golden-dir", golden_dir, "Directory holding <name>.txt")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*mutate_cmd) {
      out << io::to_json(mutate(load_quiver(input), k - 1)).dump() << "\n";
    } else if (*apply_cmd) {
      out << io::to_json(apply(load_quiver(input), parse_word(word_text))).dump() << "\n";
    } else if (*enum_cmd) {
      const ExchangeGraph g = enumerate_class(load_quiver(input), limits.get(), threads);
      out << (dot ? io::to_dot(g) : io::to_json(g).dump() + "\n");
    } else if (*report_cmd) {
      out << io::to_json(class_report(enumerate_class(load_quiver(input), limits.get()))).dump() << "\n";
    } else if (*search_cmd) {
      const ExchangeGraph g = enumerate_class(load_quiver(input), limits.get(), threads);
      const auto certs = search_global_loops(g, max_len, {max_words, threads});
      io::json doc = io::json::array();
      for (const auto& c : certs) doc.push_back(io::to_json(c));
      out << doc.dump() << "\n";
    } else if (*check_cmd) {
      const ExchangeGraph g = enumerate_class(load_quiver(input), limits.get());
      const auto certs = load_certificates(cert_path);
      for (std::size_t i = 0; i < certs.size(); ++i) {
        const CertificateCheck c = verify_certificate(g, certs[i]);
        if (!c.ok) {
          err << "certificate " << i << " rejected";
          if (c.failing_node) err << " at node " << *c.failing_node;
          err << ": " << c.message << "\n";
          return kDomainError;
        }
      }
      out << "ok: " << certs.size() << " certificate(s) verified\n";
    } else if (*word_cmd) {
      const LoopCheck c = symmetric_loop_witness(load_quiver(input), parse_word(word_text));
      io::json doc;
      doc["reduced"] = io::word_to_json(c.reduced);
      doc["status"] = c.status == LoopStatus::Trivial         ? "trivial"
                      : c.status == LoopStatus::SymmetricLoop ? "symmetric-loop"
                                                              : "not-a-loop";
      if (c.witness) doc["witness"] = io::to_json(*c.witness);
      out << doc.dump() << "\n";
    } else if (*decide_cmd) {
      const ValuedQuiver q = load_quiver(input);
      if (cross_len) {
        out << io::to_json(cross_validate(q, *cross_len, limits.get())).dump() << "\n";
      } else {
        out << io::to_json(decide_global_loops(q, limits.get())).dump() << "\n";
      }
    } else if (*list_cmd) {
      for (const CatalogName& n : catalog_names()) {
        out << n.name << (n.params.empty() ? "" : "(" + n.params + ")") << "\n    " << n.summary << "\n";
      }
    } else if (*show_cmd) {
      const CatalogEntry e = build_spec(spec);
      if (dot) {
        out << io::to_dot(e.quiver, e.labels);
      } else {
        io::json doc = io::to_json(e.quiver);
        out << doc.dump() << "\n";
      }
    } else if (*match_cmd) {
      io::json doc = io::json::array();
      for (const auto& [name, w] : match_catalog(load_quiver(input))) {
        io::json m = io::to_json(w);
        m["name"] = name;
        doc.push_back(std::move(m));
      }
      out << doc.dump() << "\n";
    } else if (*repro_cmd) {
      return repro_command(repro_name, bless, golden_dir, out, err);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
  return kOk;
}

}  // namespace mutalab::cli
