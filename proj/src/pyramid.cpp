#include "alcove/pyramid.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace alcove {

namespace {

void require_type_a(const RootSystem& rs)
{
    if (rs.type() != Type::A)
        throw std::invalid_argument("pyramid layout is defined for type A only");
}

// Root e_i - e_j (1-based, i < j) has coordinates 1 at positions i..j-1.
int pyramid_root_index(const RootSystem& rs, int i, int j)
{
    IntVec coords(static_cast<size_t>(rs.rank()), 0);
    for (int p = i; p < j; ++p) coords[static_cast<size_t>(p - 1)] = 1;
    int idx = rs.root_index(coords);
    if (idx < 0) throw std::logic_error("type A root lookup failed");
    return idx;
}

}  // namespace

ShiVector parse_pyramid(const RootSystem& rs, const std::string& text)
{
    require_type_a(rs);
    const int n = rs.rank();

    std::string normalized = text;
    std::replace(normalized.begin(), normalized.end(), ';', '\n');  // ';' works as a row separator
    std::vector<IntVec> rows;
    std::istringstream lines(normalized);
    std::string row_text;
    while (std::getline(lines, row_text)) {
        IntVec row;
        std::istringstream in(row_text);
        std::string tok;
        while (in >> tok) {
            try {
                size_t pos = 0;
                row.push_back(std::stoll(tok, &pos));
                if (pos != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw std::invalid_argument("pyramid: bad integer '" + tok + "'");
            }
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (static_cast<int>(rows.size()) != n)
        throw std::invalid_argument("pyramid: expected " + std::to_string(n) + " rows, got " +
                                    std::to_string(rows.size()));

    bool top_down = rows.front().size() < rows.back().size();
    if (top_down) std::reverse(rows.begin(), rows.end());
    // rows[h-1] is now the row of height h: entries v_{i,i+h}, i = 1..n+1-h.
    ShiVector v;
    v.k.assign(static_cast<size_t>(rs.root_count()), 0);
    for (int h = 1; h <= n; ++h) {
        const IntVec& row = rows[static_cast<size_t>(h - 1)];
        if (static_cast<int>(row.size()) != n + 1 - h)
            throw std::invalid_argument("pyramid: row of height " + std::to_string(h) + " needs " +
                                        std::to_string(n + 1 - h) + " entries");
        for (int i = 1; i <= n + 1 - h; ++i)
            v.k[static_cast<size_t>(pyramid_root_index(rs, i, i + h))] = row[static_cast<size_t>(i - 1)];
    }
    return v;
}

std::string format_pyramid(const RootSystem& rs, const ShiVector& v)
{
    require_type_a(rs);
    const int n = rs.rank();
    if (static_cast<int>(v.k.size()) != rs.root_count())
        throw std::invalid_argument("Shi vector has wrong length");

    std::vector<std::vector<std::string>> cells(static_cast<size_t>(n));
    size_t width = 1;
    for (int h = 1; h <= n; ++h)
        for (int i = 1; i <= n + 1 - h; ++i) {
            std::string s = std::to_string(v.k[static_cast<size_t>(pyramid_root_index(rs, i, i + h))]);
            width = std::max(width, s.size());
            cells[static_cast<size_t>(h - 1)].push_back(std::move(s));
        }

    std::string out;
    for (int h = n; h >= 1; --h) {  // top of the pyramid first
        std::string line((static_cast<size_t>(h - 1) * (width + 1)) / 2, ' ');
        const auto& row = cells[static_cast<size_t>(h - 1)];
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) line += ' ';
            line += std::string(width - row[i].size(), ' ') + row[i];
        }
        out += line;
        out += '\n';
    }
    return out;
}

}  // namespace alcove
