#pragma once

// Cohen-Macaulayness of binomial edge ideals of bipartite graphs, decided
// through the combinatorial characterization: for connected bipartite G the
// following are equivalent -- the dual graph is connected; the graph is a
// chain of staircase blocks glued by the leaf operations; the ideal is
// unmixed and every non-empty cut set peels down to the empty set.  The
// classifier computes all three sides independently and asserts they agree.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "beid/cutsets.hpp"
#include "beid/graph.hpp"

namespace beid {

// One staircase block embedded in the host graph.  to_host[v-1] is the host
// label of the block's vertex v; labels greater than the host's n are
// virtual: they stand for the leaves deleted by chain gluings and appear in
// exactly one factor each.
struct BlockFactor {
  int m = 0;
  std::vector<int> to_host;
};

// A maximal run of blocks joined by the leaf-deleting gluing.  Factor i's
// right junction vertex (2m_i - 1) and factor i+1's left junction vertex (2)
// share the host label junction_hosts[i]; the deleted leaves next to that
// junction carry the virtual labels whisker_hosts[i].
struct BlockChain {
  std::vector<BlockFactor> factors;
  std::vector<int> junction_hosts;
  std::vector<std::pair<int, int>> whisker_hosts;
};

// Chains joined left to right by leaf identification; star_hosts[i] is the
// host label shared by chain i's right end leaf and chain i+1's left end
// leaf.  A single-vertex host graph yields an empty certificate.
struct BlockCertificate {
  std::vector<BlockChain> chains;
  std::vector<int> star_hosts;

  // Block shape without the embedding, e.g. "F3 * F3 o F4 * F1".
  std::string shape() const;
};

struct DecomposeResult {
  bool ok = false;
  BlockCertificate certificate;
  std::string reason;  // refutation reason when !ok
  VertexSet witness;   // vertices involved in the refutation (may be empty)
};

// Staircase recognition.  Returns the block size m and the embedding
// to_host (F_m vertex -> g label) when g is a staircase block; the fast
// path matches side degree multisets {1,...,m} and checks the forced
// labelling, with a canonical-form isomorphism test as a safety net.
std::optional<std::pair<int, std::vector<int>>> is_Fm(const Graph& g);

// Recursive block decomposition.  Requires g connected and bipartite
// (throws std::invalid_argument otherwise); expects an unmixed input with
// the peeling property and reports a refutation, never a wrong certificate,
// when the structure contradicts that.  Interior chain factors always have
// m >= 3; splits happen at the smallest cut vertex not adjacent to a leaf.
DecomposeResult decompose(const Graph& g);

// Rebuilds the host graph from a certificate: maps every factor edge
// through to_host and drops edges touching virtual labels.  Validates the
// junction bookkeeping and throws std::invalid_argument on inconsistency.
Graph elaborate_certificate(const BlockCertificate& cert, int n);

enum class Verdict { CM, NotCM, NotApplicable };

struct ClassificationReport {
  bool bipartite = false;
  bool connected = false;
  UnmixedReport unmixed;
  bool dual_connected = false;
  PeelingReport peeling;
  DecomposeResult decomposition;
  Verdict verdict = Verdict::NotApplicable;
  std::vector<std::string> notes;
};

// Full report.  For connected bipartite inputs the three characterizations
// are asserted to agree at runtime (std::logic_error on mismatch -- that
// would be an implementation bug, not a property of the input).  Verdicts
// for non-bipartite inputs are NotApplicable: a connected dual graph does
// not decide Cohen-Macaulayness there.  Disconnected bipartite inputs are
// classified per component and the verdict is the conjunction.
ClassificationReport classify(const Graph& g);

nlohmann::json report_to_json(const Graph& g, const ClassificationReport& r);
std::string report_to_text(const Graph& g, const ClassificationReport& r);

const char* verdict_name(Verdict v);

}  // namespace beid
