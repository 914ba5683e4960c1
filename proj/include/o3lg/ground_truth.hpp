#pragma once

#include "o3lg/group_catalog.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace o3lg {

// Directory holding the transcribed tables.  O3LG_DATA_DIR in the
// environment overrides the compiled-in default.
std::string data_dir();

// Column order of the frequency table: 0-, 1+, 1-, ..., 6+, 6-.
// 0+ is omitted from the file (always 1).
std::vector<std::string> frequency_irreps();

struct FrequencyRow {
    GroupId group;
    std::vector<GroupId> subgroups;
    std::vector<GroupId> supergroups;
    int fbar = 0;
    std::array<int, 13> c{};
};

std::vector<FrequencyRow> load_frequency_table(const std::string& path = {});

struct LittleGroupRow {
    int parity = 0;  // 0 for the SO(3) table
    GroupId group;
    std::vector<std::optional<int>> cells;  // index l; nullopt = not a little group
};

std::vector<LittleGroupRow> load_so3_table(const std::string& path = {});
std::vector<LittleGroupRow> load_o3_table(const std::string& path = {});

// One entry of the known-discrepancy list.
struct Discrepancy {
    std::string id;
    std::string kind;     // frequency | stratum | adjacency | axial | formula | rep_vector | prose | example
    std::string subject;  // group or family label
    std::string irrep;    // may be empty
    std::string printed;
    std::string derived;
    std::string note;
};

std::vector<Discrepancy> load_discrepancies(const std::string& path = {});
const Discrepancy* find_discrepancy(const std::vector<Discrepancy>& list, const std::string& kind,
                                    const std::string& subject, const std::string& irrep = {});

} // namespace o3lg
