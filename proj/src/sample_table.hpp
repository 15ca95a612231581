#pragma once

#include <string>
#include <vector>

#include "linalg.hpp"

namespace rcg {

// Spatial multivariate samples: id, coordinates, p named variables, optional
// category labels. Isotopic sampling is assumed: every variable is present
// at every location.
struct SampleTable {
  std::vector<std::string> ids;
  std::vector<Point3> coords;
  std::vector<std::string> variables;
  Matrix values;  // n x p
  std::vector<std::string> categories;  // empty when the file has no labels

  int n() const { return static_cast<int>(coords.size()); }
  int p() const { return static_cast<int>(variables.size()); }
};

// Reads the delimited-text schema: id, x, y, z, var1..varp[, category].
// Validates unique ids, finite coordinates, and fully populated variables;
// errors carry 1-based line numbers.
SampleTable read_sample_table(const std::string& path);

// Restricts to the named variables (in the given order); empty list keeps all.
SampleTable select_variables(const SampleTable& table,
                             const std::vector<std::string>& names);

void write_sample_table(const SampleTable& table, const std::string& path);

}  // namespace rcg
