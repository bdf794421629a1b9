#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "octamod/engine.hpp"
#include "octamod/util.hpp"

using octamod::Certificate;
using octamod::Config;
using octamod::Engine;

namespace {

nlohmann::ordered_json cert_to_json(const Certificate& c,
                                    const std::string& toolchain) {
  nlohmann::ordered_json j;
  j["id"] = c.id;
  j["desc"] = c.desc;
  j["status"] = c.verified ? "verified" : "failed";
  nlohmann::ordered_json vals;
  for (const auto& [k, v] : c.values) vals[k] = v;
  j["values"] = vals;
  j["ms"] = c.ms;
  j["toolchain"] = toolchain;
  return j;
}

std::uint64_t seed_from_env() {
  if (const char* env = std::getenv("OCTAMOD_SEED"))
    return std::strtoull(env, nullptr, 0);
  return octamod::kDefaultSeed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"octamod: exact verification engine for the graded ring of "
               "eight points on a line"};
  app.require_subcommand(1);

  int threads = 0;
  std::string out_dir;
  app.add_option("--threads", threads, "worker threads (default: hardware)");
  app.add_option("--out", out_dir, "directory for certificate/export files");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "all";
  verify->add_option("suite", suite,
                     "one of: all, ring, cubic, snf, syzygy, decomp, betti, sn");
  std::vector<int> sn_values;
  verify->add_option("--n", sn_values, "point counts for the sn suite");
  int betti_char = -1;
  verify->add_option("--char", betti_char, "characteristic for the betti suite")
      ->check(CLI::IsMember({0, 3}));

  auto* exp = app.add_subcommand("export", "write an object to a file");
  std::string object, format = "sms", out_file;
  exp->add_option("object", object,
                  "M, M0, quartics, eval-1..eval-4, sprime, actions, "
                  "chartable, betti")
      ->required();
  exp->add_option("--format", format, "mm, sms or json");
  exp->add_option("--file", out_file, "output file (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  Config cfg;
  cfg.threads = threads;
  cfg.seed = seed_from_env();
  cfg.out_dir = out_dir;
  if (!sn_values.empty()) cfg.sn_values = sn_values;
  cfg.betti_char = betti_char;

  try {
    Engine engine(cfg);
    if (*verify) {
      std::ofstream cert_file;
      if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        cert_file.open(out_dir + "/certificates.jsonl");
      }
      auto certs = engine.run_suite(suite);
      bool all_ok = true;
      for (const auto& c : certs) {
        auto j = cert_to_json(c, engine.toolchain());
        std::cout << j.dump() << "\n";
        if (cert_file.is_open()) cert_file << j.dump() << "\n";
        all_ok &= c.verified;
      }
      std::cout.flush();
      return all_ok ? 0 : 1;
    }
    if (*exp) {
      if (!out_file.empty()) {
        std::ofstream os(out_file);
        octamod::require(os.good(), "cannot open " + out_file);
        engine.export_object(object, format, os);
      } else {
        engine.export_object(object, format, std::cout);
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
