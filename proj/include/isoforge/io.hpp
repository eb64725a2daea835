#pragma once

#include <iosfwd>
#include <string>

#include "isoforge/group.hpp"
#include "isoforge/metric.hpp"

namespace isoforge {

struct NamedGroup {
  std::string name;
  FiniteGroup group;
};

// Group file: `group <name> <order>` / `identity <index>` / <order> table
// rows. `#` starts a comment line.
NamedGroup load_group(const std::string &path);
NamedGroup read_group(std::istream &in, const std::string &what);
void write_group(std::ostream &out, const std::string &name,
                 const FiniteGroup &group);

// Action file: `action <group-file-path> <degree>` / <order> rows of images.
// The group path is resolved relative to the action file's directory.
GroupAction load_action(const std::string &path);
void write_action(std::ostream &out, const std::string &group_path,
                  const GroupAction &action);

// Metric file: `metric <degree>` then upper-triangle entries row by row.
RationalMetric load_metric(const std::string &path);
RationalMetric read_metric(std::istream &in, const std::string &what);
void write_metric(std::ostream &out, const RationalMetric &metric);
void save_metric(const std::string &path, const RationalMetric &metric);

}  // namespace isoforge
