#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lvc/eta.hpp"
#include "lvc/graph.hpp"
#include "lvc/search.hpp"

namespace lvc {

// Tagged signature interned to a dense colour id. The leading tag keeps ids
// produced by different constructors disjoint.
using Signature = std::vector<std::int32_t>;

inline constexpr std::int32_t kTagInit = 0;
inline constexpr std::int32_t kTagGlobal = 1;
inline constexpr std::int32_t kTagRooted = 2;
inline constexpr std::int32_t kTagWl1 = 3;
inline constexpr std::int32_t kTagPairInit = 4;
inline constexpr std::int32_t kTagPair = 5;

// Injective map from signatures to dense ids starting at 0. Sharing one
// table across graphs makes their colour ids directly comparable.
class ColourTable {
 public:
  int intern(const Signature& sig);
  int size() const { return static_cast<int>(ids_.size()); }

 private:
  struct Hash {
    std::size_t operator()(const Signature& s) const noexcept;
  };
  std::unordered_map<Signature, int, Hash> ids_;
};

enum class Scheme { bfc, dfc };

using Colouring = std::vector<int>;

// Final rooted view for one root: the hop-aware subgraph, its search tree,
// and the stable rooted colour of every local vertex.
struct RootedColouring {
  HopAwareSubgraph sub;
  SearchTree tree;
  Colouring colour;
};

// Cells sorted by smallest member, members ascending.
struct Partition {
  std::vector<std::vector<int>> cells;
  bool operator==(const Partition&) const = default;
};

Partition partition_of(const Colouring& colouring);

// True iff every cell of fine is contained in a cell of coarse. The two
// partitions must cover the same vertex set.
bool partition_refines(const Partition& fine, const Partition& coarse);

// Sorted (colour id, multiplicity) pairs.
using Histogram = std::vector<std::pair<int, int>>;

Histogram histogram_of(const Colouring& colouring);

struct RefineResult {
  Colouring colouring;
  int rounds = 0;
  std::vector<int> class_counts;  // distinct colours after round 0, 1, ...
  Histogram histogram;
  std::vector<RootedColouring> rooted;  // only populated by refine_lvc
};

enum class MethodKind { wl1, bfc, dfc, fwl2 };

struct MethodSpec {
  MethodKind kind = MethodKind::wl1;
  int delta = 0;  // meaningful for bfc and dfc only

  std::string name() const;
};

struct CompareReport {
  bool distinguished = false;
  int rounds = 0;
  Histogram histogram1;
  Histogram histogram2;
};

// Local vertex colouring: rooted colours over every delta-ball refined in
// lockstep with the global colours, roots pinned to their global colour each
// round. Stops at the first round that leaves the joint partition unchanged.
RefineResult refine_lvc(const Graph& g, int delta, Scheme scheme,
                        ColourTable& table, const Colouring& init = {},
                        const TieBreaker& tie = TieBreaker::ascending());

// Classic colour refinement over neighbour colour multisets.
RefineResult refine_wl1(const Graph& g, ColourTable& table,
                        const Colouring& init = {});

// Folklore pair refinement. The colouring domain is ordered vertex pairs in
// row-major order, so entry u*n+v holds the colour of (u, v).
RefineResult refine_fwl2(const Graph& g, ColourTable& table);

// Runs one method on both graphs against a shared table and compares the
// final colour histograms. wl1, bfc, and dfc refine the disjoint union;
// fwl2 refines the two pair spaces in lockstep so no cross-graph pairs
// enter the signatures.
CompareReport distinguishable(const Graph& g1, const Graph& g2,
                              const MethodSpec& method,
                              const TieBreaker& tie = TieBreaker::ascending());

// Worker pool width for parallel staging: min(LVC_THREADS if set, hardware
// threads, jobs), at least 1. Read per call so callers can adjust between
// invocations. Colour assignment is unaffected by the width because every
// intern call happens on one thread in a fixed order.
int worker_count(int jobs);

void parallel_for(int jobs, const std::function<void(int)>& fn);

}  // namespace lvc
