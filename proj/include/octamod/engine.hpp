#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "octamod/betti.hpp"
#include "octamod/graded.hpp"
#include "octamod/reptheory.hpp"
#include "octamod/skewcubic.hpp"

namespace octamod {

inline constexpr std::uint64_t kDefaultSeed = 0x0c7a11ce5eedULL;

struct Config {
  int threads = 0;  // 0 = hardware
  std::uint64_t seed = kDefaultSeed;
  std::vector<int> sn_values{4, 6, 8, 10};
  int betti_char = -1;  // -1 = both characteristics
  std::string out_dir;
};

struct Certificate {
  std::string id;
  std::string desc;
  bool verified = false;
  std::vector<std::pair<std::string, std::string>> values;
  std::int64_t ms = 0;

  void put(const std::string& k, const std::string& v) {
    values.emplace_back(k, v);
  }
  void put(const std::string& k, std::int64_t v) {
    values.emplace_back(k, std::to_string(v));
  }
  void put_bool(const std::string& k, bool v) {
    values.emplace_back(k, v ? "true" : "false");
  }
};

// Lazily built shared artifacts plus the verification suites. All results
// are deterministic functions of the configuration seed; thread count only
// affects timing.
class Engine {
 public:
  explicit Engine(Config cfg);

  const Config& config() const { return cfg_; }
  std::uint64_t seed() const { return cfg_.seed; }
  std::string toolchain() const;

  const PlanarBasis& basis();             // n = 8
  const PlanarBasis& basis_n(int n);
  const SymBasis& sym(int d);             // 14 variables, d = 1..4
  EvalMatrix& eval(int d);                // n = 8
  const Lattice& ideal(int d);            // certified kernel lattice
  const SymVector& s_prime();             // primitive normalized generator
  const SparseMat& matrix_M();            // 197 x 560
  const SparseMat& matrix_M0();           // 196 x 560
  const SparseMat& quartics();            // 2758 x 2380
  const std::vector<std::vector<Int>>& form_B();
  const CharacterVector& char_V();

  static const std::vector<std::string>& suite_names();
  std::vector<Certificate> run_suite(const std::string& suite);

  // export objects: M, M0, quartics, eval-1..eval-4 (formats mm|sms),
  // sprime, actions, chartable, betti (format json)
  void export_object(const std::string& object, const std::string& format,
                     std::ostream& os);

 private:
  Config cfg_;
  std::unique_ptr<PlanarBasis> pb8_;
  std::map<int, std::unique_ptr<PlanarBasis>> pbn_;
  std::map<int, SymBasis> sym_;
  std::map<int, EvalMatrix> eval_;
  std::map<int, Lattice> ideal_;
  std::optional<SymVector> s_prime_;
  std::optional<SparseMat> m_, m0_, quartics_;
  std::optional<std::vector<std::vector<Int>>> form_b_;
  std::optional<CharacterVector> char_v_;

  std::vector<Certificate> suite_ring();
  std::vector<Certificate> suite_cubic();
  std::vector<Certificate> suite_snf();
  std::vector<Certificate> suite_syzygy();
  std::vector<Certificate> suite_decomp();
  std::vector<Certificate> suite_betti();
  std::vector<Certificate> suite_sn();
  Certificate dihedral_formula_search();
};

// character of sigma acting on the row lattice of an HNF basis whose columns
// are permuted by the induced key action
Int lattice_action_trace(const Lattice& basis,
                         const std::vector<SRow>& permuted_rows);

std::string render_divisors(const std::vector<Int>& d);

}  // namespace octamod
