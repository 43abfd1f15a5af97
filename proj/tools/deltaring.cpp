// deltaring: classify finite rings and run the verification suite.
//
// Exit codes: 0 success, 1 FAIL verdicts (or an invalid ring for validate),
// 2 usage, parse and construction errors, 3 capacity errors.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "deltaring/analysis.hpp"
#include "deltaring/classify.hpp"
#include "deltaring/harness.hpp"
#include "deltaring/kernels.hpp"
#include "deltaring/report.hpp"
#include "deltaring/ring_spec.hpp"

namespace dr = deltaring;
namespace rep = deltaring::report;

namespace {

int error_exit(std::string_view kind, std::string_view msg, int code) {
  std::string line(msg);
  for (auto& c : line) {
    if (c == '\n') {
      c = ' ';
    }
  }
  std::cerr << "deltaring: error: " << kind << ": " << line << "\n";
  return code;
}

std::string read_file(std::filesystem::path const& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot read " + p.string());
  }
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct Options {
  std::string format = "json";
  int jobs = 0;
  bool strict_commuting = false;
  bool timing = false;
  std::string spec;
  std::string describe;
  dr::index_type element = 0;
  std::string manifest;
  std::vector<std::string> checks;
};

void emit(Options const& o, rep::Json const& j, std::string const& md) {
  std::cout << (o.format == "md" ? md : rep::dump(j));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Delta-quasipolar ring classification and verification"};
  app.require_subcommand(0, 1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "md"}));
  app.add_option("--jobs", o.jobs, "Worker thread cap (default: all cores)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--strict-commuting",
               o.strict_commuting,
               "Uniquely Delta-clean counts only commuting pairs");
  app.add_flag("--timing", o.timing, "Include per-check milliseconds");
  app.add_option("--describe", o.describe, "Print the index/label table of SPEC");

  auto* classify = app.add_subcommand("classify", "Classify a ring");
  classify->add_option("spec", o.spec, "Ring spec")->required();
  auto* delta = app.add_subcommand("delta", "Print Delta(R) and J(R)");
  delta->add_option("spec", o.spec, "Ring spec")->required();
  auto* spectral
      = app.add_subcommand("spectral", "Delta-spectral idempotents of one element");
  spectral->add_option("spec", o.spec, "Ring spec")->required();
  spectral->add_option("--element", o.element, "Element index")->required();
  auto* verify = app.add_subcommand("verify", "Run checks over a corpus");
  verify->add_option("--manifest", o.manifest, "Corpus manifest (default: built-in)");
  verify->add_option("--check", o.checks, "Run only these checks (repeatable)");
  auto* corpus = app.add_subcommand("corpus", "Print the default manifest");
  auto* validate = app.add_subcommand("validate", "Check the ring axioms");
  validate->add_option("spec", o.spec, "Ring spec")->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    return error_exit("usage", e.what(), 2);
  }
  if (app.get_subcommands().empty() && o.describe.empty()) {
    return error_exit("usage", "expected a command; see --help", 2);
  }
  if (o.jobs > 0) {
    dr::kernels::set_max_threads(o.jobs);
  }

  try {
    std::vector<std::filesystem::path> search_dirs;
    if (*verify && !o.manifest.empty()) {
      search_dirs.push_back(std::filesystem::path(o.manifest).parent_path());
    }
    dr::RingBuilder builder(search_dirs);
    dr::CleanOptions clean{o.strict_commuting};

    if (!o.describe.empty()) {
      auto ring = builder.build(o.describe);
      emit(o, rep::describe(*ring), rep::describe_md(*ring));
      if (app.get_subcommands().empty()) {
        return 0;
      }
    }
    if (*corpus) {
      std::cout << dr::default_manifest();
      return 0;
    }
    if (*verify) {
      std::vector<std::string> specs;
      if (o.manifest.empty()) {
        specs = dr::parse_manifest(dr::default_manifest());
      } else {
        specs = dr::parse_manifest(read_file(o.manifest));
      }
      for (auto const& c : o.checks) {
        if (!dr::is_known_check(c)) {
          return error_exit("usage", "unknown check id '" + c + "'", 2);
        }
      }
      dr::Harness harness(builder, clean);
      auto const result = harness.run_suite(specs, {o.checks, clean});
      emit(o, rep::suite(result, o.timing), rep::suite_md(result, o.timing));
      return result.fail > 0 ? 1 : 0;
    }

    auto const ring = builder.build(o.spec);
    if (*classify) {
      dr::ClassificationOptions opts;
      opts.clean = clean;
      auto const r = dr::classification_report(*ring, opts);
      emit(o, rep::classification(*ring, r), rep::classification_md(*ring, r));
    } else if (*delta) {
      emit(o, rep::delta(*ring), rep::delta_md(*ring));
    } else if (*spectral) {
      if (o.element >= ring->size()) {
        throw dr::RangeError("element " + std::to_string(o.element)
                             + " out of range for " + ring->name() + " (size "
                             + std::to_string(ring->size()) + ")");
      }
      dr::Element const a(o.element);
      auto const set = dr::delta_spectral_idempotents(*ring, a);
      emit(o, rep::spectral(*ring, a, set), rep::spectral_md(*ring, a, set));
    } else if (*validate) {
      auto const v = dr::validate_ring(*ring);
      emit(o, rep::validation(*ring, v), rep::validation_md(*ring, v));
      return v.ok() ? 0 : 1;
    }
    return 0;
  } catch (dr::CapacityError const& e) {
    return error_exit(e.kind(), e.what(), 3);
  } catch (dr::Error const& e) {
    return error_exit(e.kind(), e.what(), 2);
  } catch (std::exception const& e) {
    return error_exit("input", e.what(), 2);
  }
}
