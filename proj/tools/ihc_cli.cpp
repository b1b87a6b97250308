// ihc: intersection cohomology of weighted simplicial complexes.
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ihc/ihc.h"

namespace {

struct Flags {
  std::string space;
  std::string fixture;
  std::string perversity;
  std::string ring = "q";
  std::string recode;
  bool json = false;
  bool dump_request = false;
};

struct SpaceDeleter {
  void operator()(ihc_space* s) const { ihc_space_free(s); }
};
using SpacePtr = std::unique_ptr<ihc_space, SpaceDeleter>;

int exit_code(ihc_status s) {
  switch (s) {
    case IHC_OK: return 0;
    case IHC_ERR_PROPERTY: return 2;
    default: return 1;
  }
}

int fail(ihc_status s) {
  const char* kind = s == IHC_ERR_PRECONDITION ? "precondition violated" : s == IHC_ERR_INPUT ? "input error" : "error";
  std::cerr << "ihc: " << kind << ": " << ihc_last_error() << '\n';
  return exit_code(s);
}

// Prints and frees a returned report.
void print(char* text) {
  if (!text) return;
  std::cout << text;
  ihc_string_free(text);
}

void add_space_flags(CLI::App* cmd, Flags& f, bool with_perversity) {
  cmd->add_option("--space", f.space, "space file (dim/vertex/simplex lines)");
  cmd->add_option("--fixture", f.fixture, "built-in fixture name instead of --space");
  if (with_perversity) {
    cmd->add_option("--perversity", f.perversity, "gm v0 v1 ..., stratum id:value ..., zero, top, const v");
    cmd->add_option("--ring", f.ring, "z, q or zp:<p>")->capture_default_str();
  }
  cmd->add_option("--recode", f.recode, "weight recoding such as 0->0,1->2,2->2");
  cmd->add_flag("--json", f.json, "versioned JSON report");
  cmd->add_flag("--dump-request", f.dump_request, "print the parsed request as JSON and exit")->group("");
}

std::string request_json(const std::string& command, const Flags& f) {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["space"] = f.fixture.empty() ? f.space : "fixture:" + f.fixture;
  j["perversity"] = f.perversity;
  j["ring"] = f.ring;
  j["recoding"] = f.recode.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(f.recode);
  j["format"] = f.json ? "json" : "table";
  return j.dump();
}

// Loads --space or --fixture; applies --recode when `recode` is set.
ihc_status load(const Flags& f, bool recode, SpacePtr& out) {
  ihc_space* raw = nullptr;
  ihc_status s = IHC_OK;
  if (!f.fixture.empty() && !f.space.empty()) {
    std::cerr << "ihc: input error: give either --space or --fixture\n";
    return IHC_ERR_INPUT;
  }
  if (!f.fixture.empty()) {
    s = ihc_space_fixture(f.fixture.c_str(), &raw);
  } else if (!f.space.empty()) {
    s = ihc_space_load_file(f.space.c_str(), &raw);
  } else {
    std::cerr << "ihc: input error: --space or --fixture is required\n";
    return IHC_ERR_INPUT;
  }
  if (s != IHC_OK) return s;
  out.reset(raw);
  if (recode && !f.recode.empty()) {
    ihc_space* coarse = nullptr;
    s = ihc_space_recode(out.get(), f.recode.c_str(), &coarse);
    if (s != IHC_OK) return s;
    out.reset(coarse);
  }
  return IHC_OK;
}

// Runs `call` into a fresh buffer, then prints it or reports the failure.
template <class F>
int report(F&& call) {
  char* text = nullptr;
  const ihc_status s = call(&text);
  if (s != IHC_OK && s != IHC_ERR_PROPERTY) return fail(s);
  print(text);
  return exit_code(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Blown-up intersection cohomology of weighted simplicial complexes"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ihc_version()));

  Flags flags;
  std::string mode;
  std::string suite = "all";
  std::size_t samples = 0;
  unsigned long long seed = 1;
  bool sign_flip = false;
  int differential = -1;
  std::string write_dir;

  auto* coh = app.add_subcommand("cohomology", "intersection cohomology groups of a perversity");
  add_space_flags(coh, flags, true);
  auto* tame = app.add_subcommand("tame", "tame intersection homology of a perversity");
  add_space_flags(tame, flags, true);
  auto* cmp = app.add_subcommand("compare", "comparison map and its induced map per degree");
  cmp->add_option("mode", mode, "ordinary, relative, regular, dual-tame or refinement")->required();
  add_space_flags(cmp, flags, true);
  auto* ver = app.add_subcommand("verify", "run property suites");
  ver->add_option("suite", suite, "signs, cup, cap, amalgam, closure, shift or all")->capture_default_str();
  ver->add_option("--samples", samples, "random samples per input (suite default when 0)");
  ver->add_option("--seed", seed, "random seed")->capture_default_str();
  ver->add_flag("--json", flags.json, "versioned JSON report");
  ver->add_flag("--inject-sign-flip", sign_flip, "mutation test")->group("");
  auto* strata = app.add_subcommand("strata", "list strata");
  add_space_flags(strata, flags, false);
  auto* exp = app.add_subcommand("export", "canonical JSON of a complex, or a differential as triplets");
  add_space_flags(exp, flags, false);
  exp->add_option("--differential", differential, "degree of the blow-up differential to export");
  auto* fix = app.add_subcommand("fixtures", "list the built-in fixtures");
  fix->add_option("--write", write_dir, "write each fixture as <dir>/<name>.cx");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  CLI::App* cmd = app.get_subcommands().front();
  if (flags.dump_request) {
    char* text = nullptr;
    ihc_status s = ihc_request_roundtrip(request_json(cmd->get_name(), flags).c_str(), &text);
    if (s != IHC_OK) return fail(s);
    std::cout << text << '\n';
    ihc_string_free(text);
    return 0;
  }

  const int json = flags.json ? 1 : 0;

  if (cmd == ver) {
    if (sign_flip) ihc_debug_sign_flip(1);
    return report([&](char** t) { return ihc_verify(suite.c_str(), samples, seed, json, t); });
  }

  if (cmd == fix) {
    char* text = nullptr;
    ihc_status s = ihc_fixture_names(&text);
    if (s != IHC_OK) return fail(s);
    std::string names = text;
    ihc_string_free(text);
    if (write_dir.empty()) {
      std::cout << names;
      return 0;
    }
    std::istringstream in(names);
    std::string name;
    while (std::getline(in, name)) {
      ihc_space* raw = nullptr;
      if ((s = ihc_space_fixture(name.c_str(), &raw)) != IHC_OK) return fail(s);
      SpacePtr space(raw);
      if ((s = ihc_space_text(space.get(), &text)) != IHC_OK) return fail(s);
      std::ofstream out(write_dir + "/" + name + ".cx");
      if (!out) {
        ihc_string_free(text);
        std::cerr << "ihc: input error: cannot write into " << write_dir << '\n';
        return 1;
      }
      out << "# " << name << '\n' << text;
      ihc_string_free(text);
    }
    return 0;
  }

  SpacePtr space;
  const bool refine = cmd == cmp && mode == "refinement";
  if (ihc_status s = load(flags, !refine, space); s != IHC_OK) return fail(s);
  const char* perv = flags.perversity.c_str();
  const char* ring = flags.ring.c_str();

  if (cmd == coh) return report([&](char** t) { return ihc_cohomology(space.get(), perv, ring, json, t); });
  if (cmd == tame) return report([&](char** t) { return ihc_tame_homology(space.get(), perv, ring, json, t); });
  if (cmd == cmp) {
    const char* rec = refine ? flags.recode.c_str() : "";
    return report([&](char** t) { return ihc_compare(space.get(), mode.c_str(), perv, ring, rec, json, t); });
  }
  if (cmd == strata) return report([&](char** t) { return ihc_strata(space.get(), json, t); });
  if (cmd == exp) {
    if (differential >= 0) return report([&](char** t) { return ihc_export_differential(space.get(), differential, t); });
    return report([&](char** t) { return ihc_export_complex(space.get(), t); });
  }
  return 1;
}
