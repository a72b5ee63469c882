#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace confract {

enum class OutputFormat { csv, json };

/// 17 significant digits, '.' decimal point, independent of the locale.
std::string format_double(double v);

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

void write_csv(std::ostream& os, const Table& table);
/// Array of objects keyed by column name, in column order.
nlohmann::ordered_json table_to_json(const Table& table);
void write_table(std::ostream& os, const Table& table, OutputFormat format);

}  // namespace confract
