#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "emvlight/common.hpp"

namespace emvlight::net {

enum class LinkKind : int { Internal = 0, Source = 1, Sink = 2 };
enum class Turn : int { Left = 0, Through = 1, Right = 2 };

struct NodeRec {
  int id = -1;
  int row = 0;
  int col = 0;
};

// A link is a one-directional road segment. Source/sink stubs carry demand
// in and out at the network boundary; their outside end has node id -1.
struct LinkRec {
  int id = -1;
  int from = -1;
  int to = -1;
  double length = 0.0;
  int lanes = 0;
  Dir heading = Dir::N;
  LinkKind kind = LinkKind::Internal;
  int first_lane = -1;
};

// Permitted passage from an incoming lane to an outgoing link. Vehicles may
// enter any lane of the target link, so movements are lane-to-link.
struct LaneLinkMove {
  int from_lane = -1;
  int to_link = -1;
  Turn turn = Turn::Through;
};

struct LaneMove {
  int from_lane = -1;
  int to_lane = -1;
  Turn turn = Turn::Through;
};

// One signal phase: the permitted non-right movements. Right turns are
// permitted in every phase and are not listed. A noop slot pads the action
// space; commanding it holds the current phase.
struct Phase {
  std::vector<LaneLinkMove> core;
  bool noop = false;
};

constexpr int kPhaseSlots = 8;
using PhaseTable = std::array<Phase, kPhaseSlots>;

// nullopt for U-turns, which are never permissible
std::optional<Turn> turn_between(Dir in_heading, Dir out_heading);

class TrafficMap {
 public:
  static TrafficMap build_grid(int rows, int cols, int lanes_per_link,
                               double link_length, bool bidirectional);
  static TrafficMap build_manhattan(int streets, int avenues);

  int node_count() const { return static_cast<int>(nodes_.size()); }
  int link_count() const { return static_cast<int>(links_.size()); }
  int lane_count() const { return lane_count_; }

  const NodeRec& node(int id) const;
  const LinkRec& link(int id) const;
  const std::vector<NodeRec>& nodes() const { return nodes_; }
  const std::vector<LinkRec>& links() const { return links_; }

  const std::vector<int>& out_links(int node) const;
  const std::vector<int>& in_links(int node) const;

  int lane_link(int lane) const;
  int lane_index(int lane) const;
  double lane_length(int lane) const { return link(lane_link(lane)).length; }
  // nominal slot capacity floor(length / 7.5m); also used for stub densities
  int lane_cap(int lane) const { return lane_cap_[lane]; }

  // incoming/outgoing link on a given side of a node, -1 if absent.
  // Side is where the link attaches: an incoming link approaching from the
  // north has side N; an outgoing link leaving northward has side N.
  int in_link_on_side(int node, Dir side) const;
  int out_link_on_side(int node, Dir side) const;

  const PhaseTable& phase_table(int node) const;
  int real_phase_count(int node) const;
  std::vector<LaneLinkMove> permissible_movements(int node) const;
  std::vector<LaneMove> lane_to_lane_movements(int node) const;
  bool movement_permitted(int node, int slot, int from_lane, int to_link) const;

  // internal-link adjacency (ignores stubs)
  int neighbor(int node, Dir side) const;
  int internal_link_between(int from, int to) const;
  int hop_distance(int a, int b) const;
  int max_hop_distance(int node) const;
  bool strongly_connected() const;

  std::string dump() const;
  static TrafficMap parse(const std::string& text);
  bool same_structure(const TrafficMap& other) const;

  const std::string& meta() const { return meta_; }

 private:
  TrafficMap() = default;
  void finalize(const std::string& where);
  void build_phases();
  void check_movement_integrity(const std::string& where) const;

  std::string meta_;
  std::vector<NodeRec> nodes_;
  std::vector<LinkRec> links_;
  int lane_count_ = 0;
  std::vector<int> lane_link_;
  std::vector<int> lane_cap_;
  std::vector<std::vector<int>> out_links_;
  std::vector<std::vector<int>> in_links_;
  std::vector<std::array<int, kDirCount>> side_in_;
  std::vector<std::array<int, kDirCount>> side_out_;
  std::vector<PhaseTable> phases_;
  std::vector<int> real_phase_count_;
  std::vector<std::vector<int>> hop_dist_;
};

}  // namespace emvlight::net
