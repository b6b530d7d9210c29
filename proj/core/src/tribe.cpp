// Copyright 2026 The raylab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "raylab/tribe.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "raylab/errors.hpp"

namespace raylab {

namespace {

// Vertex count of the hat subdigraph: hat_len arcs span hat_len + 1
// vertices, except that zero arcs mean an empty hat.
int hat_vertex_count(int hat_len) { return hat_len == 0 ? 0 : hat_len + 1; }

std::unordered_set<VertexId> vertex_set(const Embedding& e) {
  return {e.vertices.begin(), e.vertices.end()};
}

bool meets_set(const Embedding& e, const std::unordered_set<VertexId>& s) {
  for (VertexId v : e.vertices)
    if (s.count(v)) return true;
  return false;
}

// C(n, k) saturated at `limit` so the pigeonhole bound never overflows.
long long binomial_capped(int n, int k, long long limit) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r >= limit) return limit;
  }
  return r;
}

}  // namespace

std::vector<VertexId> hat_vertices(const Embedding& member, int hat_len) {
  const int count = hat_vertex_count(hat_len);
  if (static_cast<int>(member.vertices.size()) < count)
    throw Error("member shorter than its hat");
  return {member.vertices.begin(), member.vertices.begin() + count};
}

void validate_tribe(const GraphView& view, const Tribe& t) {
  if (t.hat_len < 0) throw Error("negative hat length");
  for (size_t li = 0; li < t.layers.size(); ++li) {
    std::unordered_set<VertexId> seen;
    for (const Embedding& m : t.layers[li]) {
      if (m.length() < t.hat_len) throw Error("tribe member shorter than hat length");
      validate_embedding(view, m);
      for (int i = 0; i < m.length(); ++i)
        if (m.orientation_at(i) != t.pattern.orientation_at(i))
          throw Error("tribe member deviates from the pattern");
      for (VertexId v : m.vertices)
        if (!seen.insert(v).second)
          throw Error("layer " + std::to_string(li) + " members overlap at vertex " +
                      std::to_string(v));
    }
  }
}

bool is_thick_upto(const Tribe& t, int n) {
  for (int k = 1; k <= n; ++k) {
    bool found = false;
    for (const auto& layer : t.layers)
      if (static_cast<int>(layer.size()) >= k) found = true;
    if (!found) return false;
  }
  return true;
}

bool is_forked(const Tribe& t) {
  std::vector<const Embedding*> members;
  for (const auto& layer : t.layers)
    for (const Embedding& m : layer) members.push_back(&m);
  std::vector<std::unordered_set<VertexId>> vsets;
  vsets.reserve(members.size());
  for (const Embedding* m : members) vsets.push_back(vertex_set(*m));
  for (size_t i = 0; i < members.size(); ++i) {
    const std::vector<VertexId> hat = hat_vertices(*members[i], t.hat_len);
    for (size_t j = 0; j < members.size(); ++j) {
      if (i == j) continue;
      for (VertexId v : hat)
        if (vsets[j].count(v)) return false;
    }
  }
  return true;
}

Tribe forked_subtribe(const Tribe& t, int max_layer, const ForkOptions& opts) {
  if (max_layer < 0) throw Error("max_layer must be non-negative");
  const int h = hat_vertex_count(t.hat_len);

  std::vector<std::vector<Embedding>> current = t.layers;  // the shrinking pool
  std::vector<std::vector<Embedding>> out;
  out.emplace_back();  // level 0 is the empty layer

  for (int n = 1; n <= max_layer; ++n) {
    // Candidate layer: first by index with enough members to dodge any hat.
    int pick = -1;
    int best = 0;
    for (size_t i = 0; i < current.size(); ++i) {
      const int size = static_cast<int>(current[i].size());
      best = std::max(best, size);
      if (size >= h + n && pick < 0) pick = static_cast<int>(i);
    }
    if (pick < 0) throw InsufficientThickness(n, h + n, best);
    const std::vector<Embedding> L = std::move(current[static_cast<size_t>(pick)]);
    if (static_cast<int>(L.size()) > 20 && !opts.allow_large_layer)
      throw Error("candidate layer has " + std::to_string(L.size()) +
                  " members; the subset-count bound is impractical beyond 20 "
                  "(set allow_large_layer to override)");

    std::vector<std::unordered_set<VertexId>> l_vsets;
    l_vsets.reserve(L.size());
    std::unordered_set<VertexId> l_hat_union;
    for (const Embedding& m : L) {
      l_vsets.push_back(vertex_set(m));
      for (VertexId v : hat_vertices(m, t.hat_len)) l_hat_union.insert(v);
    }

    // Drop from every other layer the members whose vertices meet a hat of L.
    std::vector<std::vector<Embedding>> pool;
    for (size_t i = 0; i < current.size(); ++i) {
      if (static_cast<int>(i) == pick) continue;
      std::vector<Embedding> kept;
      for (Embedding& m : current[i])
        if (!meets_set(m, l_hat_union)) kept.push_back(std::move(m));
      if (!kept.empty()) pool.push_back(std::move(kept));
    }

    // Selector: each pool member votes for the lexicographically least
    // n-subset of L entirely avoiding that member's hat.
    std::map<std::vector<int>, std::map<size_t, std::vector<size_t>>> groups;
    long long largest_pool_layer = 0;
    for (size_t li = 0; li < pool.size(); ++li) {
      largest_pool_layer = std::max<long long>(largest_pool_layer,
                                               static_cast<long long>(pool[li].size()));
      for (size_t mi = 0; mi < pool[li].size(); ++mi) {
        const std::vector<VertexId> hat = hat_vertices(pool[li][mi], t.hat_len);
        const std::unordered_set<VertexId> hat_set(hat.begin(), hat.end());
        std::vector<int> choice;
        for (size_t i = 0; i < L.size() && static_cast<int>(choice.size()) < n; ++i) {
          bool clash = false;
          for (VertexId v : l_vsets[i])
            if (hat_set.count(v)) clash = true;
          if (!clash) choice.push_back(static_cast<int>(i));
        }
        if (static_cast<int>(choice.size()) < n)
          throw Error("selector found fewer than n compatible members; input layer "
                      "members are not pairwise disjoint");
        groups[choice][li].push_back(mi);
      }
    }

    std::vector<int> star;
    long long star_count = -1;
    for (const auto& [subset, per_layer] : groups) {
      for (const auto& [li, idxs] : per_layer) {
        (void)li;
        if (static_cast<long long>(idxs.size()) > star_count) {
          star_count = static_cast<long long>(idxs.size());
          star = subset;
        }
      }
    }

    if (star.empty()) {
      // Empty pool: nothing constrains the choice; take the least subset.
      for (int i = 0; i < n; ++i) star.push_back(i);
    } else {
      // Pigeonhole floor: the best vote count is at least the largest pool
      // layer spread over all n-subsets of L.
      const long long bins =
          binomial_capped(static_cast<int>(L.size()), n, largest_pool_layer + 1);
      const long long bound = (largest_pool_layer + bins - 1) / bins;
      if (star_count < bound) throw Error("vote count fell below the pigeonhole bound");
    }

    std::vector<Embedding> level;
    for (int i : star) level.push_back(L[static_cast<size_t>(i)]);
    out.push_back(std::move(level));

    // Survivors: per pool layer, the members that voted for the winner.
    std::vector<std::vector<Embedding>> next;
    for (size_t li = 0; li < pool.size(); ++li) {
      const auto git = groups.find(star);
      if (git == groups.end()) break;
      const auto lit = git->second.find(li);
      if (lit == git->second.end()) continue;
      std::vector<Embedding> kept;
      for (size_t mi : lit->second) kept.push_back(std::move(pool[li][mi]));
      next.push_back(std::move(kept));
    }
    current = std::move(next);
  }

  Tribe result{std::move(out), t.pattern, t.hat_len};
  if (!is_forked(result)) throw Error("refined layers failed the fork check");
  return result;
}

}  // namespace raylab
