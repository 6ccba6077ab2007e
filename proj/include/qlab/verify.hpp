#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "qlab/enumerate.hpp"
#include "qlab/quandle.hpp"
#include "qlab/util.hpp"

namespace qlab::verify {

enum class Verdict { Pass, Fail, Skipped };

std::string to_string(Verdict v);

/// One named, runnable check with a machine-readable outcome. A failing
/// check always carries witnesses sufficient to reproduce the failure; a
/// passing one never does.
struct CheckReport {
  std::string check_id;
  std::string statement;  // what is being verified, in plain words
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  Verdict verdict = Verdict::Pass;
  std::vector<std::string> witnesses;
  double elapsed_seconds = 0.0;

  nlohmann::ordered_json to_json() const;
  static CheckReport from_json(const nlohmann::ordered_json& j);
};

struct Options {
  unsigned max_n = 13;
  std::size_t element_cap = kDefaultElementCap;
  std::size_t closure_cap = 600000;
  unsigned threads = 0;
};

/// Memoizes the expensive enumerations so a full run enumerates each size
/// once.
class Context {
 public:
  explicit Context(Options options = {}) : options_(options) {}

  const Options& options() const { return options_; }
  const EnumerationResult& cyclic(unsigned n);
  const EnumerationResult& connected(unsigned n);

  /// The lemma-sweep corpus: all connected quandles of size <= 6, all
  /// cyclic quandles of size <= max_n, conjugation quandles of the
  /// nontrivial classes of S3, S4 and A5, dihedral quandles R_3..R_6, and
  /// trivial quandles of sizes 1..3.
  const std::vector<Quandle>& corpus();

 private:
  Options options_;
  std::map<unsigned, EnumerationResult> cyclic_;
  std::map<unsigned, EnumerationResult> connected_;
  std::vector<Quandle> corpus_;
  bool corpus_built_ = false;
};

// Existence of cyclic quandles matches prime-power size, n = 3..max_n.
CheckReport verify_ktw(Context& ctx, unsigned max_n);

// Every enumerated cyclic quandle is simple and matches an Alexander
// quandle over GF(n) with a primitive multiplier; class counts agree with
// the unit-group formula.
CheckReport verify_corollary(Context& ctx, unsigned max_n);

// The supporting-lemma sweeps over the corpus, the full cyclic-vs-order
// equivalence for Alexander quandles, and the inner-order law.
std::vector<CheckReport> verify_lemmas(Context& ctx, unsigned max_n);

// Stabilizer centers of the projective linear actions are trivial.
CheckReport verify_case1(Context& ctx, const std::vector<std::pair<unsigned, unsigned>>& pairs);
std::vector<std::pair<unsigned, unsigned>> default_case1_pairs();

// Unitary-group centralizer arithmetic: no class size equals the degree.
CheckReport verify_case3(Context& ctx, const std::vector<unsigned>& qs);
std::vector<unsigned> default_case3_qs();

// Ree stabilizer closure over GF(27): order 511758 and trivial center.
CheckReport verify_case5(Context& ctx);

// Class-size absences in A7, PSL(2,11), PSL(2,8); HS and Co3 are reported
// as skipped (beyond desk scale).
std::vector<CheckReport> verify_small_simple_classes(Context& ctx);

// No nontrivial conjugacy class of a buildable nonabelian simple group has
// prime power size.
CheckReport verify_prime_power_class_property(Context& ctx);

// Minimal-normal-subgroup dichotomy on doubly transitive samples.
CheckReport verify_burnside(Context& ctx);

// Cross-cutting property suites: orbit-stabilizer, BSGS vs brute-force
// closure, cyclic-type definition vs shortcut, Frobenius action implies
// trivial center.
std::vector<CheckReport> verify_properties(Context& ctx);

struct Summary {
  std::vector<CheckReport> reports;  // ordered by check id
  bool all_passed = false;           // over non-skipped checks
};

enum class Profile { Quick, Full };

/// Runs every check. The quick profile caps max_n at 9 and skips the Ree
/// closure; full runs everything.
Summary verify_all(Profile profile, Options options = {});

}  // namespace qlab::verify
