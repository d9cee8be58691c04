#ifndef GRAPHLIM_IO_HPP
#define GRAPHLIM_IO_HPP

#include "graphlim/geometry.hpp"
#include "graphlim/graph.hpp"
#include "graphlim/graphon.hpp"

#include <iosfwd>
#include <string>

namespace graphlim {

// Graph text: first line "n m", then m lines "u v" (0-based, LF endings).
Graph read_graph(std::istream& is);
void write_graph(std::ostream& os, const Graph& g);

// Step graphon text: line 1 "k", line 2 the k measures as rationals,
// then k lines of k values.  Rationals read as "p/q" or "p"; written "p/q".
StepGraphon read_graphon(std::istream& is);
void write_graphon(std::ostream& os, const StepGraphon& w);

// Partition text: first line "n p", then p lines of vertex ids (a line may
// be empty for an empty part).
VertexPartition read_partition(std::istream& is);
void write_partition(std::ostream& os, const VertexPartition& p);

// Representation text: line 1 "n", optional line "disk cx cy r", then per
// vertex a record "v c" followed by c lines "closed|open m x1 y1 ... xm ym".
Representation read_representation(std::istream& is);
void write_representation(std::ostream& os, const Representation& rep);

Graph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const Graph& g);
StepGraphon read_graphon_file(const std::string& path);
void write_graphon_file(const std::string& path, const StepGraphon& w);
VertexPartition read_partition_file(const std::string& path);
void write_partition_file(const std::string& path, const VertexPartition& p);
Representation read_representation_file(const std::string& path);
void write_representation_file(const std::string& path, const Representation& rep);

} // namespace graphlim

#endif
