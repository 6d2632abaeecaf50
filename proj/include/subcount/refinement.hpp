//
// Project subcount - Copyright 2026 The subcount Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string_view>
#include <vector>

#include "subcount/extraction.hpp"
#include "subcount/graph.hpp"
#include "subcount/hash128.hpp"

namespace subcount {

/// Turns a color signature (a tag word, the element's own color and a
/// sorted multiset of other colors) into a new color.
class Colorer {
 public:
  virtual ~Colorer() = default;
  virtual Hash128 color(std::span<const Hash128> signature) = 0;
};

/// Stateless 128-bit hashing. Colors are comparable across graphs and runs.
class HashColorer final : public Colorer {
 public:
  Hash128 color(std::span<const Hash128> signature) override;
};

/// Interns every distinct signature and hands out sequential ids, so two
/// colors are equal iff their signatures are. Ids are only comparable between
/// graphs refined with the same instance.
class ExactColorer final : public Colorer {
 public:
  Hash128 color(std::span<const Hash128> signature) override;
  std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::map<std::vector<Hash128>, std::uint64_t> ids_;
};

enum class RefinementMethod { wl1, subgraph_wl, i2_wl };
std::string_view to_string(RefinementMethod method);
RefinementMethod parse_method(std::string_view name);

struct ColorPartition {
  std::vector<Hash128> colors;     // per node
  std::vector<std::uint32_t> ids;  // dense ids, ordered by color value
  std::size_t num_colors = 0;
  std::size_t rounds = 0;          // refinement rounds until stable (max over subgraphs)

  /// Sorted (color, multiplicity) pairs.
  std::vector<std::pair<Hash128, std::size_t>> histogram() const;
  /// Hash of the sorted color multiset.
  Hash128 digest() const;
};

struct RefinementOptions {
  ExtractionPolicy policy = ExtractionPolicy::ego(2);  // subgraph_wl
  Labeling labeling = Labeling::identity;              // subgraph_wl
  unsigned hops = 1;                                   // i2_wl
  unsigned threads = 1;
  Colorer* colorer = nullptr;  // null: HashColorer
};

/// 1-WL from uniform colors (or node attributes, when the graph has them)
/// until the number of colors stops changing.
ColorPartition wl1(const Graph& g, const RefinementOptions& options = {});

/// 1-WL inside each labeled rooted subgraph; a node's color is the stable
/// color multiset of its subgraph.
ColorPartition subgraph_wl(const Graph& g, const RefinementOptions& options = {});

/// 1-WL inside each pair subgraph with both the root and the branching node
/// marked; pair colors are collected per root into the node color.
ColorPartition i2_wl(const Graph& g, const RefinementOptions& options = {});

ColorPartition refine(const Graph& g, RefinementMethod method, const RefinementOptions& options = {});

struct GraphFingerprint {
  RefinementMethod method;
  Hash128 digest;
};
GraphFingerprint fingerprint(const Graph& g, RefinementMethod method, const RefinementOptions& options = {});

enum class Verdict { distinguished, not_distinguished };
std::string_view to_string(Verdict v);

/// Compares digests, or, with exact_compare, full color histograms produced
/// by one shared ExactColorer.
Verdict distinguish(const Graph& a, const Graph& b, RefinementMethod method, const RefinementOptions& options = {},
                    bool exact_compare = false);

}  // namespace subcount
