#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "cascade/baselines.hpp"
#include "cascade/estimator.hpp"
#include "cascade/event_sim.hpp"
#include "cascade/scm.hpp"

// Text formats. All node labels are 1-based, `#` starts a comment.
//
//   graph     N <n>              then one `<parent> <child>` line per edge
//   model     graph lines plus   `P <node> <failure>` or `P * <failure>`
//   scenario  model lines plus   `M <parent> <child> <contact|noncontact> <delay>`
//   dataset   N <n>              then `<target|-> <b_1>...<b_n>` per episode
//   traces    N <n>              then per trace `T <target|->`, `A <node> <time>`, `C <time> <src> <dst>`
namespace cascade {

Digraph read_graph(std::istream& in);
/// Like read_graph but requires a single-rooted tree (exactly n - 1 edges).
CausalTree read_tree(std::istream& in);
CascadeModel read_model(std::istream& in);
MechanizedModel read_scenario(std::istream& in);
InterventionalDataset read_dataset(std::istream& in);
TraceDataset read_traces(std::istream& in);

void write_graph(std::ostream& out, const Digraph& g);
void write_tree(std::ostream& out, const CausalTree& t);
void write_model(std::ostream& out, const CascadeModel& m);
void write_dataset(std::ostream& out, const InterventionalDataset& data);
void write_episode(std::ostream& out, const Episode& ep);
/// One trace: `T`, then `A` lines in node order, then `C` lines in event order.
void write_trace(std::ostream& out, const EventTrace& trace);
void write_traces(std::ostream& out, const TraceDataset& data);

/// Shortest decimal that round-trips.
std::string format_double(double v);

/// Opens a file or throws FormatError naming it.
std::string read_file(const std::filesystem::path& path);

}  // namespace cascade
