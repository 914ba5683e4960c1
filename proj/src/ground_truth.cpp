#include "o3lg/ground_truth.hpp"

#include "o3lg/errors.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace o3lg {

namespace {

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

std::vector<std::vector<std::string>> read_tsv(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        rows.push_back(split(line, '\t'));
    }
    return rows;
}

std::string resolve(const std::string& path, const char* name)
{
    return path.empty() ? data_dir() + "/" + name : path;
}

std::vector<GroupId> group_list(const std::string& cell)
{
    std::vector<GroupId> out;
    if (cell == "-") return out;
    for (const auto& s : split(cell, ';'))
        if (!s.empty()) out.push_back(canonicalize_label(s));
    return out;
}

std::optional<int> cell_value(const std::string& s)
{
    if (s == "-") return std::nullopt;
    try {
        return std::stoi(s);
    } catch (const std::exception&) {
        throw ParseError("bad table cell '" + s + "'");
    }
}

} // namespace

std::string data_dir()
{
    if (const char* env = std::getenv("O3LG_DATA_DIR"); env && *env) return env;
#ifdef O3LG_DATA_DIR
    return O3LG_DATA_DIR;
#else
    return "data";
#endif
}

std::vector<std::string> frequency_irreps()
{
    std::vector<std::string> out{"0-"};
    for (int l = 1; l <= 6; ++l) {
        out.push_back(std::to_string(l) + "+");
        out.push_back(std::to_string(l) + "-");
    }
    return out;
}

std::vector<FrequencyRow> load_frequency_table(const std::string& path)
{
    std::vector<FrequencyRow> out;
    for (const auto& r : read_tsv(resolve(path, "frequencies.tsv"))) {
        if (r.size() != 17) throw ParseError("frequencies.tsv: expected 17 fields, got " + std::to_string(r.size()));
        FrequencyRow row;
        row.group = canonicalize_label(r[0]);
        row.subgroups = group_list(r[1]);
        row.supergroups = group_list(r[2]);
        row.fbar = std::stoi(r[3]);
        for (int i = 0; i < 13; ++i) row.c[i] = std::stoi(r[4 + i]);
        out.push_back(std::move(row));
    }
    return out;
}

std::vector<LittleGroupRow> load_so3_table(const std::string& path)
{
    std::vector<LittleGroupRow> out;
    for (const auto& r : read_tsv(resolve(path, "so3_little_groups.tsv"))) {
        if (r.size() != 6) throw ParseError("so3_little_groups.tsv: expected 6 fields");
        LittleGroupRow row;
        row.group = canonicalize_label(r[0]);
        for (std::size_t i = 1; i < r.size(); ++i) row.cells.push_back(cell_value(r[i]));
        out.push_back(std::move(row));
    }
    return out;
}

std::vector<LittleGroupRow> load_o3_table(const std::string& path)
{
    std::vector<LittleGroupRow> out;
    for (const auto& r : read_tsv(resolve(path, "o3_little_groups.tsv"))) {
        if (r.size() != 12) throw ParseError("o3_little_groups.tsv: expected 12 fields");
        LittleGroupRow row;
        if (r[0] == "+") row.parity = 1;
        else if (r[0] == "-") row.parity = -1;
        else throw ParseError("o3_little_groups.tsv: bad parity '" + r[0] + "'");
        row.group = canonicalize_label(r[1]);
        for (std::size_t i = 2; i < r.size(); ++i) row.cells.push_back(cell_value(r[i]));
        out.push_back(std::move(row));
    }
    return out;
}

std::vector<Discrepancy> load_discrepancies(const std::string& path)
{
    const std::string p = resolve(path, "discrepancies.json");
    std::ifstream in(p);
    if (!in) throw ParseError("cannot open " + p);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(p + ": " + e.what());
    }
    std::vector<Discrepancy> out;
    for (const auto& e : j.at("entries")) {
        Discrepancy d;
        d.id = e.at("id").get<std::string>();
        d.kind = e.at("kind").get<std::string>();
        d.subject = e.value("subject", "");
        d.irrep = e.value("irrep", "");
        d.printed = e.value("printed", "");
        d.derived = e.value("derived", "");
        d.note = e.value("note", "");
        out.push_back(std::move(d));
    }
    return out;
}

const Discrepancy* find_discrepancy(const std::vector<Discrepancy>& list, const std::string& kind,
                                    const std::string& subject, const std::string& irrep)
{
    for (const auto& d : list)
        if (d.kind == kind && d.subject == subject && (irrep.empty() || d.irrep == irrep)) return &d;
    return nullptr;
}

} // namespace o3lg
