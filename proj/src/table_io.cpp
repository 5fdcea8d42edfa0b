#include "wtab/table_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace wtab {

namespace {

using nlohmann::json;

HalfInt parse_entry(const json& j) {
    if (j.is_number_integer()) return HalfInt(j.get<int>());
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        size_t slash = s.find('/');
        try {
            if (slash == std::string::npos) return HalfInt(std::stoi(s));
            if (s.substr(slash + 1) != "2") fail(ErrorKind::ParseError, "denominator must be 2: " + s);
            return HalfInt::from_twice(std::stoi(s.substr(0, slash)));
        } catch (const std::invalid_argument&) {
            fail(ErrorKind::ParseError, "bad entry: " + s);
        } catch (const std::out_of_range&) {
            fail(ErrorKind::ParseError, "entry out of range: " + s);
        }
    }
    fail(ErrorKind::ParseError, "entries must be integers or \"k/2\" strings");
}

LieType parse_type(const std::string& s) {
    if (s == "C" || s == "c") return LieType::C;
    if (s == "D" || s == "d") return LieType::D;
    fail(ErrorKind::ParseError, "type must be C or D, got " + s);
}

HalfInt grid_entry(const std::string& tok) {
    size_t slash = tok.find('/');
    try {
        if (slash == std::string::npos) return HalfInt(std::stoi(tok));
        if (tok.substr(slash + 1) != "2") fail(ErrorKind::ParseError, "denominator must be 2: " + tok);
        return HalfInt::from_twice(std::stoi(tok.substr(0, slash)));
    } catch (const std::invalid_argument&) {
        fail(ErrorKind::ParseError, "bad grid entry: " + tok);
    } catch (const std::out_of_range&) {
        fail(ErrorKind::ParseError, "grid entry out of range: " + tok);
    }
}

ParsedTable parse_json_table(const std::string& text, std::optional<LieType> hint) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(ErrorKind::ParseError, std::string("json: ") + e.what());
    }
    if (!doc.is_object()) fail(ErrorKind::ParseError, "expected a json object");

    LieType lt;
    if (doc.contains("type"))
        lt = parse_type(doc["type"].get<std::string>());
    else if (hint)
        lt = *hint;
    else
        fail(ErrorKind::ParseError, "missing \"type\"");

    if (!doc.contains("partition") || !doc["partition"].is_array())
        fail(ErrorKind::ParseError, "missing \"partition\" array");
    std::vector<int> parts;
    for (const auto& v : doc["partition"]) {
        if (!v.is_number_integer()) fail(ErrorKind::ParseError, "partition entries must be integers");
        parts.push_back(v.get<int>());
    }
    ValidatedPartition vp = validate_partition(parts, lt);

    if (!doc.contains("rows") || !doc["rows"].is_array())
        fail(ErrorKind::ParseError, "missing \"rows\" array");
    std::vector<std::vector<HalfInt>> rows;
    for (const auto& row : doc["rows"]) {
        if (!row.is_array()) fail(ErrorKind::ParseError, "each row must be an array");
        std::vector<HalfInt> out;
        for (const auto& v : row) out.push_back(parse_entry(v));
        rows.push_back(std::move(out));
    }

    Frame F = symmetric_pyramid(vp.p);
    if (doc.contains("offsets")) {
        const auto& offs = doc["offsets"];
        if (!offs.is_array() || offs.size() != rows.size())
            fail(ErrorKind::ParseError, "\"offsets\" must list one value per row");
        F.rows.clear();
        for (size_t i = 0; i < rows.size(); ++i)
            F.rows.push_back(FrameRow{offs[i].get<int>(), static_cast<int>(rows[i].size())});
    }
    if (F.row_count() != static_cast<int>(rows.size()))
        fail(ErrorKind::SizeMismatch, "row count does not match the partition");

    ParsedTable out{make_stable(F, std::move(rows)), vp.p, lt};
    if (lt == LieType::C && is_half_integral(out.table))
        fail(ErrorKind::NonIntegralWeight, "half-integral entries outside type D");
    return out;
}

ParsedTable parse_grid_table(const std::string& text, std::optional<LieType> hint) {
    if (!hint) fail(ErrorKind::ParseError, "grid input needs an explicit type");

    std::vector<std::vector<HalfInt>> rows;
    std::vector<int> left_edges;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        std::vector<HalfInt> row;
        int dots = 0;
        bool entries_started = false;
        bool marker_only = true;
        while (ls >> tok) {
            if (tok == "*") continue;  // centre marker line
            marker_only = false;
            if (tok == ".") {
                if (!entries_started) dots++;
                continue;
            }
            entries_started = true;
            row.push_back(grid_entry(tok));
        }
        if (marker_only || row.empty()) continue;
        rows.push_back(std::move(row));
        left_edges.push_back(2 * dots);
    }
    if (rows.empty()) fail(ErrorKind::ParseError, "no rows found");

    int lo = *std::min_element(left_edges.begin(), left_edges.end());
    int hi = 0;
    for (size_t i = 0; i < rows.size(); ++i)
        hi = std::max(hi, left_edges[i] + 2 * static_cast<int>(rows[i].size()));
    int centre = (lo + hi) / 2;

    Frame F;
    std::vector<int> parts;
    for (size_t i = 0; i < rows.size(); ++i) {
        F.rows.push_back(FrameRow{left_edges[i] - centre, static_cast<int>(rows[i].size())});
        parts.push_back(static_cast<int>(rows[i].size()));
    }
    ValidatedPartition vp = validate_partition(parts, *hint);
    ParsedTable out{make_stable(F, std::move(rows)), vp.p, *hint};
    if (*hint == LieType::C && is_half_integral(out.table))
        fail(ErrorKind::NonIntegralWeight, "half-integral entries outside type D");
    return out;
}

json entry_json(HalfInt v) {
    if (v.is_integral()) return json(v.t / 2);
    return json(v.str());
}

}  // namespace

ParsedTable parse_table(const std::string& text, std::optional<LieType> hint) {
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) fail(ErrorKind::ParseError, "empty input");
    if (text[first] == '{') return parse_json_table(text, hint);
    return parse_grid_table(text, hint);
}

Table parse_plain_table(const std::string& text) {
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) fail(ErrorKind::ParseError, "empty input");

    std::vector<std::vector<HalfInt>> rows;
    std::vector<int> offsets;
    bool have_offsets = false;
    if (text[first] == '{') {
        json doc;
        try {
            doc = json::parse(text);
        } catch (const json::parse_error& e) {
            fail(ErrorKind::ParseError, std::string("json: ") + e.what());
        }
        if (!doc.contains("rows") || !doc["rows"].is_array())
            fail(ErrorKind::ParseError, "missing \"rows\" array");
        for (const auto& row : doc["rows"]) {
            if (!row.is_array()) fail(ErrorKind::ParseError, "each row must be an array");
            std::vector<HalfInt> out;
            for (const auto& v : row) out.push_back(parse_entry(v));
            rows.push_back(std::move(out));
        }
        if (doc.contains("offsets")) {
            have_offsets = true;
            for (const auto& v : doc["offsets"]) offsets.push_back(v.get<int>());
            if (offsets.size() != rows.size())
                fail(ErrorKind::ParseError, "\"offsets\" must list one value per row");
        }
    } else {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            std::istringstream ls(line);
            std::string tok;
            std::vector<HalfInt> row;
            int dots = 0;
            bool started = false;
            bool any = false;
            while (ls >> tok) {
                if (tok == "*") continue;
                any = true;
                if (tok == ".") {
                    if (!started) dots++;
                    continue;
                }
                started = true;
                row.push_back(grid_entry(tok));
            }
            if (!any || row.empty()) continue;
            rows.push_back(std::move(row));
            offsets.push_back(2 * dots);
            have_offsets = true;
        }
        if (rows.empty()) fail(ErrorKind::ParseError, "no rows found");
    }

    Frame F;
    for (size_t i = 0; i < rows.size(); ++i)
        F.rows.push_back(FrameRow{have_offsets ? offsets[i] : 0, static_cast<int>(rows[i].size())});
    return make_table(F, std::move(rows));
}

std::string format_table(const STable& A, TableStyle style, LieType lt, const Partition& p) {
    if (style == TableStyle::grid) return format_grid(A);
    json doc;
    doc["type"] = lie_type_name(lt);
    doc["partition"] = p.parts;
    json rows = json::array();
    for (const auto& row : A.rows) {
        json r = json::array();
        for (HalfInt v : row) r.push_back(entry_json(v));
        rows.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows);
    json offs = json::array();
    for (const auto& fr : A.frame.rows) offs.push_back(fr.offset);
    doc["offsets"] = std::move(offs);
    return doc.dump();
}

std::string format_grid(const Table& A) {
    int lo = 0;
    size_t width = 1;
    for (const auto& fr : A.frame.rows) lo = std::min(lo, fr.offset);
    for (const auto& row : A.rows)
        for (HalfInt v : row) width = std::max(width, v.str().size());

    auto cell = [&](const std::string& s) {
        std::string out(width - std::min(width, s.size()), ' ');
        return out + s;
    };

    std::string out;
    int m = A.row_count();
    for (int i = 0; i < m; ++i) {
        if (m % 2 == 0 && i == m / 2) {
            // Centre marker between the middle rows, under the origin.
            size_t col = static_cast<size_t>(-lo) / 2 * (width + 1);
            out += std::string(col, ' ') + "*\n";
        }
        const auto& fr = A.frame.rows[i];
        std::string line;
        for (int d = 0; d < (fr.offset - lo) / 2; ++d) line += cell(".") + " ";
        for (int j = 0; j < fr.len; ++j) {
            line += cell(A.rows[i][j].str());
            if (j + 1 < fr.len) line += " ";
        }
        out += line;
        out += '\n';
    }
    return out;
}

}  // namespace wtab
