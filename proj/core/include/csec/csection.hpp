#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "csec/iso.hpp"
#include "csec/lattice.hpp"
#include "csec/perm_group.hpp"

namespace csec {

inline constexpr const char* kToolkitVersion = "0.1.0";

/// A chief factor K/L of G with L <= M and K not contained in M.
struct ChiefPair {
  Subgroup k;
  Subgroup l;
  Permutation witness;  // an element of K outside M
};

/// (M n K)/L for a chief pair of M.
struct CSection {
  PermGroup group;
  ChiefPair source_pair;
  bool supersolvable = false;
  GroupId identified;
};

/// All pairs, sorted by |L|, then |K|, then K's element list. Throws
/// NotMaximal if M is not maximal, MissingChiefPair if no pair exists.
std::vector<ChiefPair> chief_pairs_for_maximal(const GroupContext& g, const Subgroup& m);
std::vector<ChiefPair> chief_pairs_for_maximal(const PermGroup& g, const Subgroup& m);

/// The section for the first chief pair. With `verify_all_pairs` every other
/// pair is checked to give an isomorphic section (throws Error otherwise).
CSection sec(const GroupContext& g, const Subgroup& m, bool verify_all_pairs = false);
CSection sec(const PermGroup& g, const Subgroup& m, bool verify_all_pairs = false);

/// Section for one specific pair.
PermGroup section_group(const GroupContext& g, const Subgroup& m, const ChiefPair& pair);

enum class Status { Pass, Fail, Inconclusive };

const char* to_string(Status s);
Status parse_status(const std::string& s);

struct Evidence {
  std::map<std::string, std::uint64_t> orders;
  std::map<std::string, std::uint64_t> class_counts;
  std::map<std::string, std::vector<std::string>> factor_ids;
  std::map<std::string, std::string> witnesses;

  friend bool operator==(const Evidence&, const Evidence&) = default;
};

struct VerdictReport {
  std::string subject;
  std::string check;
  Status status = Status::Inconclusive;
  Evidence evidence;
  /// False when some enumeration behind the verdict is not certified
  /// exhaustive. A report with complete == false never has status Pass.
  bool complete = true;
  std::vector<VerdictReport> subchecks;
  std::string version = kToolkitVersion;

  friend bool operator==(const VerdictReport&, const VerdictReport&) = default;
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  std::size_t conjugation_trials = 200;
  /// Needed for verify_example with p other than 7.
  bool allow_large = false;
  LatticeOptions lattice;
};

/// For every maximal class, the sections over all chief pairs are pairwise isomorphic.
VerdictReport verify_sections_unique(const GroupContext& g, const std::string& subject = "");

/// Sec(M) is supersolvable for every maximal M. A failing M is reported as a witness.
VerdictReport check_hypothesis(const GroupContext& g, const std::string& subject = "");

/// Every composition factor is Z_q (q prime) or L2(p) with p prime, p = +-1 mod 8.
VerdictReport check_conclusion(const GroupContext& g, const std::string& subject = "");

/// hypothesis => conclusion; a failing hypothesis passes vacuously.
VerdictReport verify_theorem_instance(const GroupContext& g, const std::string& subject = "");

/// A_n has no subgroup of index k for 1 < k < n (n in 4..7); for n = 4 the
/// index-3 Klein four is reported as the known exception.
VerdictReport verify_alternating_no_small_index(std::size_t n, const VerifyOptions& options = {});

/// The index-n subgroups of A_n form one conjugacy class (two for n = 6), n in 4..7.
VerdictReport verify_alternating_index_n_conjugate(std::size_t n, const VerifyOptions& options = {});

/// Sylow normalizer of SL(n,q) and its projective image for
/// (n,q) in {(2,4), (2,8), (2,9), (3,4)}: conjugation identity, closed-form
/// orders, minimal normality of the corner, non-supersolvability.
VerdictReport verify_sylow_normalizer(std::size_t n, std::uint32_t q, const VerifyOptions& options = {});

/// The PGL2(p) example, p prime with p = +-1 mod 8. Five sub-checks. Throws
/// InvalidArgument for other p, CapExceeded for p != 7 without allow_large.
VerdictReport verify_pgl2_example(std::uint32_t p, const VerifyOptions& options = {});

/// Whether all subgroups of G isomorphic to H are conjugate. For each minimal
/// normal N of G properly containing H != 1 in which H has a unique class,
/// and when G satisfies the hypothesis, H must be supersolvable; a violation
/// fails the check.
VerdictReport unique_class_check(const GroupContext& g, const Subgroup& h, const std::string& subject = "");

}  // namespace csec
