#pragma once

#include <string>

#include "khcube/bigraded.hpp"
#include "khcube/chromhom.hpp"
#include "khcube/laurent.hpp"
#include "khcube/linkdiag.hpp"
#include "khcube/spatialgraph.hpp"

namespace khcube {

enum class InputKind { link, spatial_graph, abstract_graph };

// Structured-text (JSON) object files. Parse errors and schema violations
// throw validation_error naming the offending field.
LinkDiagram parse_link(const std::string& text);
SpatialGraphDiagram parse_spatial(const std::string& text);
AbstractGraph parse_graph(const std::string& text);

LinkDiagram load_link(const std::string& path);
SpatialGraphDiagram load_spatial(const std::string& path);
AbstractGraph load_graph(const std::string& path);

InputKind detect_kind(const std::string& text);
std::string read_file(const std::string& path);

std::string to_json(const LinkDiagram& d);
std::string to_json(const SpatialGraphDiagram& g);
std::string to_json(const AbstractGraph& g);

// `i,j,dim` lines sorted by (i, then j), both ascending.
std::string table_csv(const BigradedTable& t);
// Human-readable grid, columns by i, rows by descending j.
std::string table_grid(const BigradedTable& t);

} // namespace khcube
