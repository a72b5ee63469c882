#include "confract/report.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

namespace confract {

std::string format_double(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, r.ptr);
}

void write_csv(std::ostream& os, const Table& table)
{
    for (std::size_t i = 0; i < table.columns.size(); ++i)
        os << (i ? "," : "") << table.columns[i];
    os << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << format_double(row[i]);
        os << '\n';
    }
}

nlohmann::ordered_json table_to_json(const Table& table)
{
    auto out = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json obj;
        for (std::size_t i = 0; i < row.size() && i < table.columns.size(); ++i)
            obj[table.columns[i]] = row[i];
        out.push_back(std::move(obj));
    }
    return out;
}

void write_table(std::ostream& os, const Table& table, OutputFormat format)
{
    if (format == OutputFormat::csv)
        write_csv(os, table);
    else
        os << table_to_json(table).dump(2) << '\n';
}

}  // namespace confract
